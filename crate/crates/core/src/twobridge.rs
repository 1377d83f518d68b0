//! Two-bridge knots: Conway specifications, Schubert fractions, the degree
//! formulas, and knot diagrams of polynomial space curves over a cubic.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::curvetrace::{analyze_curve, sqrt_params, EventKind, PolyMap};
use crate::error::{Error, Result};
use crate::poly::{int, Poly, Rat};
use crate::roots::AlgebraicReal;
use crate::symmetric::SymReducer;

/// `Torus(m)` is C(m) with m odd; `Twist(m, n)` is C(m, n) with mn > 0 even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoBridgeSpec {
    Torus(i64),
    Twist(i64, i64),
}

impl TwoBridgeSpec {
    pub fn torus(m: i64) -> Result<Self> {
        if m % 2 == 0 || m.abs() < 3 {
            return Err(Error::Invalid(format!("C({m}) needs m odd with |m| >= 3")));
        }
        Ok(TwoBridgeSpec::Torus(m))
    }

    pub fn twist(m: i64, n: i64) -> Result<Self> {
        if m * n <= 0 || (m * n) % 2 != 0 {
            return Err(Error::Invalid(format!("C({m},{n}) needs mn > 0 and even")));
        }
        Ok(TwoBridgeSpec::Twist(m, n))
    }

    pub fn crossing_number(&self) -> u64 {
        match *self {
            TwoBridgeSpec::Torus(m) => m.unsigned_abs(),
            TwoBridgeSpec::Twist(m, n) => m.unsigned_abs() + n.unsigned_abs(),
        }
    }

    /// Mirror-free representative with `m` even whenever `m + n` is odd.
    pub fn canonical(&self) -> TwoBridgeSpec {
        match *self {
            TwoBridgeSpec::Torus(m) => TwoBridgeSpec::Torus(m.abs()),
            TwoBridgeSpec::Twist(m, n) => {
                let (m, n) = (m.abs(), n.abs());
                if (m + n) % 2 == 1 && m % 2 == 1 {
                    TwoBridgeSpec::Twist(n, m)
                } else {
                    TwoBridgeSpec::Twist(m, n)
                }
            }
        }
    }
}

impl fmt::Display for TwoBridgeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoBridgeSpec::Torus(m) => write!(f, "C({m})"),
            TwoBridgeSpec::Twist(m, n) => write!(f, "C({m},{n})"),
        }
    }
}

pub fn crossing_number(spec: &TwoBridgeSpec) -> u64 {
    spec.crossing_number()
}

/// Schubert fraction `alpha/beta` with `0 < beta < alpha` coprime; the
/// unknot is `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    pub alpha: u64,
    pub beta: u64,
}

impl Fraction {
    pub const UNKNOT: Fraction = Fraction { alpha: 1, beta: 0 };

    /// Normalizes `p/q` to `alpha = |p|`, `beta = q mod alpha` with the sign
    /// of `p` folded into `q`.
    pub fn from_ratio(p: i128, q: i128) -> Result<Self> {
        if p == 0 {
            return Err(Error::Invalid("zero numerator does not describe a knot".into()));
        }
        let alpha = p.unsigned_abs();
        if alpha == 1 {
            return Ok(Fraction::UNKNOT);
        }
        let q = if p < 0 { -q } else { q };
        let beta = q.rem_euclid(alpha as i128) as u128;
        if beta.gcd(&alpha) != 1 {
            return Err(Error::Invalid(format!("{p}/{q} is not in lowest terms")));
        }
        Ok(Fraction {
            alpha: alpha as u64,
            beta: beta as u64,
        })
    }

    pub fn is_unknot(&self) -> bool {
        self.alpha == 1
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.alpha, self.beta)
    }
}

/// `Torus(m) -> m/1`, `Twist(m, n) -> (mn + 1)/n`.
pub fn spec_fraction(spec: &TwoBridgeSpec) -> Fraction {
    let (p, q) = match *spec {
        TwoBridgeSpec::Torus(m) => (m as i128, 1),
        TwoBridgeSpec::Twist(m, n) => ((m * n + 1) as i128, n as i128),
    };
    Fraction::from_ratio(p, q).expect("valid specs give coprime fractions")
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(m as i128));
    e.x.rem_euclid(m as i128) as u64
}

/// Same two-bridge knot: equal `alpha` and `beta' = beta^{+-1} mod alpha`,
/// and with `up_to_mirror` also `beta' = -beta^{+-1}`.
pub fn fractions_equivalent(f: &Fraction, g: &Fraction, up_to_mirror: bool) -> bool {
    if f.alpha != g.alpha {
        return false;
    }
    if f.is_unknot() {
        return true;
    }
    let a = f.alpha;
    let inv = mod_inverse(f.beta, a);
    let mut ok = [f.beta, inv].contains(&g.beta);
    if up_to_mirror {
        ok |= [(a - f.beta) % a, (a - inv) % a].contains(&g.beta);
    }
    ok
}

/// Multidegree `(a, b, c)` of a polynomial space curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeTriple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl fmt::Display for DegreeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// `(3, floor((3N-1)/2), floor(3N/2) + 1)` for the two-bridge knots C(m) and
/// C(m, n) with crossing number `N >= 3`.
pub fn lexdeg_theorem_main(n: u64) -> Result<DegreeTriple> {
    if n < 3 {
        return Err(Error::Invalid(format!("crossing number {n} is below 3")));
    }
    let t = DegreeTriple {
        a: 3,
        b: (3 * n - 1) / 2,
        c: 3 * n / 2 + 1,
    };
    debug_assert_eq!(t.b + t.c, 3 * n);
    Ok(t)
}

/// Lower bound `(3, N + 1, 2N - 1)` valid for every knot of crossing number N.
pub fn lexdeg_lower_general(n: u64) -> Result<DegreeTriple> {
    if n < 1 {
        return Err(Error::Invalid("crossing number must be positive".into()));
    }
    Ok(DegreeTriple {
        a: 3,
        b: n + 1,
        c: 2 * n - 1,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Over {
    S,
    T,
}

/// One crossing of the xy-projection, parameters `s < t`.
#[derive(Clone, Debug, Serialize)]
pub struct DiagramCrossing {
    pub x: f64,
    pub y: f64,
    /// Strand pair counted from below on the vertical line.
    pub j: u8,
    pub s: f64,
    pub t: f64,
    pub over: Over,
    /// Twist sign: +1 when the strand of larger slope passes over.
    pub epsilon: i8,
    #[serde(skip)]
    pub root: AlgebraicReal,
}

#[derive(Clone, Debug, Serialize)]
pub struct KnotDiagram {
    pub x: Poly,
    pub y: Poly,
    pub z: Poly,
    /// Crossings by increasing abscissa.
    pub crossings: Vec<DiagramCrossing>,
    /// Signed crossing labels (1-based) along the parameter; positive = over.
    pub gauss: Vec<i64>,
    /// Strand-pair index of the left vertical tangency.
    pub left_cap: Option<u8>,
    /// Strand-pair index of the right vertical tangency.
    pub right_cap: Option<u8>,
    /// Polynomial in `u = s + t` vanishing at the double points.
    pub node_poly: Poly,
    /// Sorted crossing parameters as `(crossing, is_t)`.
    #[serde(skip)]
    pub parameter_order: Vec<(usize, bool)>,
}

impl KnotDiagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }
}

fn pairwise_coprime(v: &[u64]) -> bool {
    v.iter()
        .enumerate()
        .all(|(i, &a)| v[i + 1..].iter().all(|&b| a.gcd(&b) == 1))
}

/// Diagram of the space curve `(x, y, z)` with `x` cubic.
pub fn space_curve_diagram(x: &Poly, y: &Poly, z: &Poly) -> Result<KnotDiagram> {
    let ev = analyze_curve(&PolyMap::new(x.clone(), y.clone()))?;
    if ev.map.p != *x || ev.map.q != *y {
        return Err(Error::Invalid(
            "projection must already be normalized (x increasing, 3 does not divide deg y)".into(),
        ));
    }
    let mut sym = SymReducer::new(x)?;
    let w = sym.divided(z);
    let dx = x.derivative();
    let dy = y.derivative();
    let slope_gap = sym.anti(&dy, &dx);
    let dx_prod = sym.mixed_sum(&dx, &dx);
    let twist = &(&slope_gap * &dx_prod) * &w;
    let disc = sym.discriminant();

    let mut crossings = Vec::new();
    for e in ev.events.iter().filter(|e| e.kind == EventKind::Crossing) {
        let mut root = e.root.clone();
        let over = match root.sign_of(&w) {
            Ordering::Greater => Over::T,
            Ordering::Less => Over::S,
            Ordering::Equal => {
                return Err(Error::DegenerateCurve("space curve meets itself".into()))
            }
        };
        let epsilon = match root.sign_of(&twist) {
            Ordering::Greater => 1,
            Ordering::Less => -1,
            Ordering::Equal => {
                return Err(Error::DegenerateCurve("tangential crossing".into()))
            }
        };
        crossings.push(DiagramCrossing {
            x: e.x.approx,
            y: e.y,
            j: e.j,
            s: e.parameters[0].re,
            t: e.parameters[1].re,
            over,
            epsilon,
            root,
        });
    }

    let parameter_order = order_parameters(&mut crossings, &disc)?;
    let gauss = parameter_order
        .iter()
        .map(|&(c, is_t)| {
            let label = c as i64 + 1;
            let over = (crossings[c].over == Over::T) == is_t;
            if over {
                label
            } else {
                -label
            }
        })
        .collect();
    let cap = |kind| ev.events.iter().find(|e| e.kind == kind).map(|e| e.j);
    Ok(KnotDiagram {
        x: x.clone(),
        y: y.clone(),
        z: z.clone(),
        crossings,
        gauss,
        left_cap: cap(EventKind::TangencyMin),
        right_cap: cap(EventKind::TangencyMax),
        node_poly: ev.node_poly,
        parameter_order,
    })
}

/// Sorts all `2N` crossing parameters exactly.
fn order_parameters(crossings: &mut [DiagramCrossing], disc: &Poly) -> Result<Vec<(usize, bool)>> {
    let mut bits = 32;
    loop {
        let eps = Rat::new(1.into(), num_bigint::BigInt::from(1) << bits);
        let mut items: Vec<((Rat, Rat), (usize, bool))> = Vec::new();
        for (i, c) in crossings.iter_mut().enumerate() {
            c.root.refine_to(&eps);
            let (s, t) = sqrt_params(&c.root, disc, bits)
                .ok_or_else(|| Error::DegenerateCurve("crossing parameters not separated".into()))?;
            items.push((s, (i, false)));
            items.push((t, (i, true)));
        }
        items.sort_by(|a, b| a.0 .0.cmp(&b.0 .0));
        if items.windows(2).all(|w| w[0].0 .1 < w[1].0 .0) {
            return Ok(items.into_iter().map(|(_, k)| k).collect());
        }
        if bits >= 256 {
            return Err(Error::DegenerateCurve("two crossings share a parameter".into()));
        }
        bits *= 2;
    }
}

/// Harmonic knot `(T_a(t), T_b(t), T_c(t))`; only `a = 3` is supported.
pub fn harmonic_diagram(a: u64, b: u64, c: u64) -> Result<KnotDiagram> {
    if !pairwise_coprime(&[a, b, c]) {
        return Err(Error::Invalid(format!("degrees {a}, {b}, {c} are not pairwise coprime")));
    }
    if a != 3 {
        return Err(Error::Invalid("only cubic x-degree is supported".into()));
    }
    if b <= a {
        return Err(Error::Invalid(format!("need {a} < {b}")));
    }
    let t = |n: u64| Poly::chebyshev(n as usize);
    space_curve_diagram(&t(a), &t(b), &t(c))
}

/// Reads the diagram as a rational tangle between the two vertical
/// tangencies and returns the Schubert fraction of its closure.
pub fn identify_trigonal_diagram(d: &KnotDiagram) -> Result<Fraction> {
    let (Some(left), Some(right)) = (d.left_cap, d.right_cap) else {
        return Err(Error::NotTwoBridgeTrigonal(
            "projection has no pair of vertical tangencies".into(),
        ));
    };
    // tangle slope as p/q, starting from the cap closing the left end
    let (mut p, mut q): (i128, i128) = if left == 1 { (0, 1) } else { (1, 0) };
    for c in &d.crossings {
        let e = c.epsilon as i128;
        if c.j == 2 {
            p += e * q;
        } else {
            q -= e * p;
        }
    }
    if right == 2 {
        std::mem::swap(&mut p, &mut q);
    }
    if p == 0 {
        return Err(Error::NotTwoBridgeTrigonal("closure is a two-component link".into()));
    }
    Fraction::from_ratio(p, q)
        .map_err(|e| Error::NotTwoBridgeTrigonal(e.to_string()))
}

/// Knot determinant from the Fox coloring matrix of the Gauss code, an
/// oracle independent of the tangle reading.
pub fn determinant(d: &KnotDiagram) -> u64 {
    let n = d.crossing_count();
    if n == 0 {
        return 1;
    }
    // arc k runs from the k-th underpass to the next one, cyclically
    let unders: Vec<usize> = d
        .gauss
        .iter()
        .filter(|&&g| g < 0)
        .map(|g| (-g - 1) as usize)
        .collect();
    let mut under_pos = vec![0usize; n];
    for (k, &c) in unders.iter().enumerate() {
        under_pos[c] = k;
    }
    let mut over_arc = vec![0usize; n];
    let mut arc = n - 1;
    for &g in &d.gauss {
        if g < 0 {
            arc = under_pos[(-g - 1) as usize];
        } else {
            over_arc[(g - 1) as usize] = arc;
        }
    }
    let mut m = vec![vec![int(0); n]; n];
    for c in 0..n {
        let k = under_pos[c];
        m[c][over_arc[c]] += int(2);
        m[c][(k + n - 1) % n] -= int(1);
        m[c][k] -= int(1);
    }
    let minor: Vec<Vec<Rat>> = m[..n - 1].iter().map(|r| r[..n - 1].to_vec()).collect();
    let det = rational_det(minor);
    det.numer().magnitude().to_u64().unwrap_or(u64::MAX)
}

pub(crate) fn rational_det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = int(1);
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r][col] != int(0)) else {
            return int(0);
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            let f = &m[r][col] / &pv;
            if f == int(0) {
                continue;
            }
            for k in col..n {
                let sub = &f * &m[col][k];
                m[r][k] -= sub;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(TwoBridgeSpec::torus(4).is_err());
        assert!(TwoBridgeSpec::torus(1).is_err());
        assert!(TwoBridgeSpec::twist(3, 3).is_err());
        assert!(TwoBridgeSpec::twist(2, -2).is_err());
        assert!(TwoBridgeSpec::twist(-2, -2).is_ok());
    }

    #[test]
    fn crossing_numbers() {
        assert_eq!(TwoBridgeSpec::Torus(5).crossing_number(), 5);
        assert_eq!(TwoBridgeSpec::Twist(4, 3).crossing_number(), 7);
        assert_eq!(TwoBridgeSpec::Twist(-4, -3).crossing_number(), 7);
    }

    #[test]
    fn canonical_form_makes_m_even() {
        assert_eq!(TwoBridgeSpec::Twist(3, 4).canonical(), TwoBridgeSpec::Twist(4, 3));
        assert_eq!(TwoBridgeSpec::Twist(-2, -2).canonical(), TwoBridgeSpec::Twist(2, 2));
    }

    #[test]
    fn fractions() {
        assert_eq!(spec_fraction(&TwoBridgeSpec::Torus(3)), Fraction { alpha: 3, beta: 1 });
        assert_eq!(spec_fraction(&TwoBridgeSpec::Twist(4, 3)), Fraction { alpha: 13, beta: 3 });
        assert_eq!(spec_fraction(&TwoBridgeSpec::Twist(2, 2)), Fraction { alpha: 5, beta: 2 });
        let f = |a, b| Fraction { alpha: a, beta: b };
        assert!(fractions_equivalent(&f(13, 3), &f(13, 9), false));
        assert!(!fractions_equivalent(&f(5, 2), &f(7, 2), true));
        assert!(!fractions_equivalent(&f(3, 1), &f(3, 2), false));
        assert!(fractions_equivalent(&f(3, 1), &f(3, 2), true));
    }

    #[test]
    fn degree_formulas() {
        let t = |a, b, c| DegreeTriple { a, b, c };
        assert_eq!(lexdeg_theorem_main(3).unwrap(), t(3, 4, 5));
        assert_eq!(lexdeg_theorem_main(4).unwrap(), t(3, 5, 7));
        assert_eq!(lexdeg_theorem_main(5).unwrap(), t(3, 7, 8));
        assert_eq!(lexdeg_lower_general(6).unwrap(), t(3, 7, 11));
        assert!(lexdeg_theorem_main(2).is_err());
    }

    #[test]
    fn harmonic_trefoil() {
        let d = harmonic_diagram(3, 4, 5).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.gauss.len(), 6);
        let f = identify_trigonal_diagram(&d).unwrap();
        assert!(fractions_equivalent(&f, &Fraction { alpha: 3, beta: 1 }, true));
        assert_eq!(determinant(&d), 3);
    }

    #[test]
    fn harmonic_unknot() {
        let d = harmonic_diagram(3, 4, 7).unwrap();
        assert!(identify_trigonal_diagram(&d).unwrap().is_unknot());
        assert_eq!(determinant(&d), 1);
    }

    #[test]
    fn harmonic_rejects_bad_degrees() {
        assert!(harmonic_diagram(3, 6, 7).is_err());
        assert!(harmonic_diagram(5, 7, 9).is_err());
    }
}
