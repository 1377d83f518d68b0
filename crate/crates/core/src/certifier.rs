//! Counting and obstruction checks: representable integers below the
//! Frobenius gap, the z-degree reduction for harmonic-type diagrams, the
//! linking-number search over one-min/one-max L-schemes, and crossing bounds.

use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::braid3::LinkData;
use crate::error::{Error, Result};
use crate::lscheme::{LScheme, SchemeSymbol, SymbolKind, Terminal};
use crate::poly::{Poly, Rat};
use crate::scheme2braid::{to_braid, Bidegree};
use crate::symmetric::SymReducer;
use crate::twobridge::{rational_det, KnotDiagram, Over, TwoBridgeSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusReport {
    pub a: u64,
    pub b: u64,
    /// Sorted distinct `n = alpha a + beta b <= ab - a - b - 1`.
    pub representable: Vec<u64>,
    pub count: u64,
    pub closed_form: u64,
    /// Whether `ab - a - b` itself has a representation (it never should).
    pub gap_representable: bool,
}

impl FrobeniusReport {
    pub fn holds(&self) -> bool {
        self.count == self.closed_form && !self.gap_representable
    }
}

pub fn frobenius_count(a: u64, b: u64) -> Result<FrobeniusReport> {
    if a < 2 || b < 2 {
        return Err(Error::Invalid(format!("need a, b >= 2, got {a}, {b}")));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    let gap = a * b - a - b;
    let mut reps = Vec::new();
    for al in 0..=b - 2 {
        for be in 0..=a - 2 {
            let n = al * a + be * b;
            if n < gap {
                reps.push(n);
            }
        }
    }
    reps.sort_unstable();
    reps.dedup();
    let gap_representable = (0..=gap / a).any(|al| (gap - al * a) % b == 0);
    Ok(FrobeniusReport {
        a,
        b,
        count: reps.len() as u64,
        representable: reps,
        closed_form: (a - 1) * (b - 1) / 2,
        gap_representable,
    })
}

/// Checks that `s(al, be) + s(b-2-al, a-2-be) = 2 (ab - a - b)` for every
/// pair in the enumeration box, so representable values pair off around the
/// gap.
pub fn frobenius_pairing_holds(a: u64, b: u64) -> bool {
    let s = |al: u64, be: u64| al * a + be * b;
    let target = 2 * (a * b - a - b);
    (0..=b - 2).all(|al| (0..=a - 2).all(|be| s(al, be) + s(b - 2 - al, a - 2 - be) == target))
}

#[derive(Clone, Debug, Serialize)]
pub struct ZReduction {
    pub a: usize,
    pub b: usize,
    #[serde(rename = "N")]
    pub n: usize,
    /// Exponent pairs `(i, j)` of the monomials `x^i y^j` spanning h.
    pub monomials: Vec<(usize, usize)>,
    pub h_coeffs: Vec<String>,
    /// `h(x(t), y(t))`.
    pub h: Poly,
    pub z_tilde: Poly,
    /// `h` takes equal values at both parameters of every crossing and
    /// equals the mean of z there.
    pub interpolates: bool,
    /// Sign of `z - h` at the sorted crossing parameters.
    pub sign_pattern: Vec<i8>,
    pub alternates: bool,
    pub degree_certificate: Option<usize>,
}

/// Monomials `x^i y^j` with `i a + j b <= 2N - 2`, ordered by weight.
pub fn monomial_basis(a: usize, b: usize) -> Vec<(usize, usize)> {
    let n = (a - 1) * (b - 1) / 2;
    let bound = (2 * n).saturating_sub(2);
    let mut out = Vec::new();
    for j in 0..=bound / b {
        for i in 0..=(bound - j * b) / a {
            out.push((i, j));
        }
    }
    out.sort_by_key(|&(i, j)| (i * a + j * b, i));
    out
}

fn solve(mut m: Vec<Vec<Rat>>, mut rhs: Vec<Rat>) -> Result<Vec<Rat>> {
    let n = rhs.len();
    if rational_det(m.clone()).is_zero() {
        return Err(Error::SingularSystem);
    }
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::SingularSystem)?;
        m.swap(piv, col);
        rhs.swap(piv, col);
        let pv = m[col][col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for k in col..n {
                let sub = &f * &m[col][k];
                m[r][k] -= sub;
            }
            let sub = &f * &rhs[col];
            rhs[r] -= sub;
        }
    }
    Ok((0..n).map(|i| &rhs[i] / &m[i][i]).collect())
}

/// Replaces `z` by `z - h(x, y)` where `h` matches the mean of `z` at every
/// crossing, and checks that the remainder alternates in sign along the
/// sorted crossing parameters.
pub fn z_reduce(x: &Poly, y: &Poly, z: &Poly, diagram: &KnotDiagram) -> Result<ZReduction> {
    let a = x.degree().unwrap_or(0);
    let b = y.degree().unwrap_or(0);
    if (a as u64).gcd(&(b as u64)) != 1 {
        return Err(Error::NotCoprime(a as u64, b as u64));
    }
    if diagram.x != *x || diagram.y != *y {
        return Err(Error::Invalid("diagram belongs to a different projection".into()));
    }
    let n = (a - 1) * (b - 1) / 2;
    if diagram.crossing_count() != n {
        return Err(Error::WrongCrossingCount {
            expected: n,
            found: diagram.crossing_count(),
        });
    }
    let node = &diagram.node_poly;
    if node.degree() != Some(n) {
        return Err(Error::Invalid("some double points are not crossings".into()));
    }
    let mut sym = SymReducer::new(x)?;
    let xs = sym.half_sum(x).rem(node);
    let ys = sym.half_sum(y).rem(node);
    let zs = sym.half_sum(z).rem(node);
    let monomials = monomial_basis(a, b);
    if monomials.len() != n {
        return Err(Error::Invalid(format!(
            "monomial space has dimension {} instead of {n}",
            monomials.len()
        )));
    }
    let columns: Vec<Poly> = monomials
        .iter()
        .map(|&(i, j)| (&xs.pow(i) * &ys.pow(j)).rem(node))
        .collect();
    let mat: Vec<Vec<Rat>> = (0..n)
        .map(|row| columns.iter().map(|c| c.coeff(row)).collect())
        .collect();
    let rhs: Vec<Rat> = (0..n).map(|row| zs.coeff(row)).collect();
    let coeffs = solve(mat, rhs)?;

    let h = monomials
        .iter()
        .zip(&coeffs)
        .fold(Poly::zero(), |acc, (&(i, j), c)| &acc + &(&x.pow(i) * &y.pow(j)).scale(c));
    let z_tilde = z - &h;
    let interpolates =
        sym.divided(&h).rem(node).is_zero() && (&sym.half_sum(&h) - &sym.half_sum(z)).rem(node).is_zero();

    // z~(t) - z~(s) = z(t) - z(s) at a crossing, and z~(t) + z~(s) = 0, so the
    // sign of z~ at t is the sign of (z(t) - z(s)) / (t - s).
    let w = sym.divided(z);
    let mut at_t = Vec::with_capacity(n);
    for c in &diagram.crossings {
        let mut root = c.root.clone();
        let s = match root.sign_of(&w) {
            Ordering::Greater => 1i8,
            Ordering::Less => -1,
            Ordering::Equal => return Err(Error::DegenerateCurve("space curve meets itself".into())),
        };
        debug_assert_eq!(s == 1, c.over == Over::T);
        at_t.push(s);
    }
    let sign_pattern: Vec<i8> = diagram
        .parameter_order
        .iter()
        .map(|&(c, is_t)| if is_t { at_t[c] } else { -at_t[c] })
        .collect();
    let alternates = interpolates && sign_pattern.windows(2).all(|w| w[0] != w[1]);
    Ok(ZReduction {
        a,
        b,
        n,
        monomials,
        h_coeffs: coeffs.iter().map(|c| c.to_string()).collect(),
        h,
        z_tilde,
        interpolates,
        sign_pattern,
        alternates,
        degree_certificate: alternates.then(|| 2 * n - 1),
    })
}

/// Candidate one-min/one-max schemes for `spec` at y-degree `b`: the
/// crossing core `<2 x1^m >2` or `<2 x1^m x2^n >1` with solitary nodes on
/// either side, in a fixed deterministic order.
pub fn enumerate_candidate_schemes(spec: &TwoBridgeSpec, b: u32) -> Vec<LScheme> {
    let spec = spec.canonical();
    let n = spec.crossing_number() as usize;
    let mut core = vec![SchemeSymbol::min(2)];
    match spec {
        TwoBridgeSpec::Torus(m) => {
            core.extend(std::iter::repeat(SchemeSymbol::cross(1)).take(m as usize));
            core.push(SchemeSymbol::max(2));
        }
        TwoBridgeSpec::Twist(m, k) => {
            core.extend(std::iter::repeat(SchemeSymbol::cross(1)).take(m as usize));
            core.extend(std::iter::repeat(SchemeSymbol::cross(2)).take(k as usize));
            core.push(SchemeSymbol::max(1));
        }
    }
    let terminals = Terminal::legal_pair(b);
    let free = (b as usize).saturating_sub(1);
    let mut out = Vec::new();
    if free < n {
        return out;
    }
    for alpha in (0..=free - n).filter(|al| (free - n - al) % 2 == 0) {
        for mask in 0u64..(1 << alpha) {
            let dots: Vec<SchemeSymbol> = (0..alpha)
                .map(|i| SchemeSymbol::dot(if mask >> (alpha - 1 - i) & 1 == 0 { 1 } else { 2 }))
                .collect();
            for split in 0..=alpha {
                let mut body = dots[..split].to_vec();
                body.extend_from_slice(&core);
                body.extend_from_slice(&dots[split..]);
                for &t in &terminals {
                    out.push(LScheme::new(body.clone(), t).expect("candidate shape is valid"));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub scheme: LScheme,
    pub alpha: usize,
    pub beta: usize,
    pub link: LinkData,
}

/// Whether the closure of the scheme's braid has three components,
/// nonnegative pairwise linking, and linking sum equal to beta.
pub fn check_candidate(scheme: &LScheme, b: u32) -> Result<Option<Witness>> {
    let d = Bidegree::new(b)?;
    let n = scheme.crossing_count();
    let alpha = scheme.solitary_count();
    let free = b as usize - 1;
    if n + alpha > free || (free - n - alpha) % 2 != 0 {
        return Ok(None);
    }
    let beta = (free - n - alpha) / 2;
    let link = to_braid(scheme, &d)?.closure_link();
    let ok = link.component_count() == 3
        && link.pairwise().iter().all(|&v| v >= 0)
        && link.lk_sum() == beta as i64;
    Ok(ok.then(|| Witness {
        scheme: scheme.clone(),
        alpha,
        beta,
        link,
    }))
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Feasible { witness: Witness },
    Infeasible,
}

#[derive(Clone, Debug, Serialize)]
pub struct Obstruction {
    pub spec: TwoBridgeSpec,
    pub b: u32,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub tried: usize,
}

impl Obstruction {
    pub fn is_feasible(&self) -> bool {
        matches!(self.verdict, Verdict::Feasible { .. })
    }
}

/// Searches the candidate schemes for one passing the linking constraints.
pub fn certify_lower_bound(spec: &TwoBridgeSpec, b: u32) -> Result<Obstruction> {
    let n = spec.crossing_number() as u32;
    if b < n + 1 {
        return Err(Error::Invalid(format!("y-degree {b} is below N + 1 = {}", n + 1)));
    }
    // Subtracting a multiple of x^(b/3) lowers a y-degree divisible by 3, so
    // such a degree is feasible exactly when some reduced lower degree is.
    let degrees: Vec<u32> = if b % 3 == 0 {
        (n + 1..b).filter(|d| d % 3 != 0).collect()
    } else {
        vec![b]
    };
    let mut tried = 0;
    for d in degrees {
        for s in enumerate_candidate_schemes(spec, d) {
            tried += 1;
            if let Some(witness) = check_candidate(&s, d)? {
                return Ok(Obstruction {
                    spec: *spec,
                    b,
                    verdict: Verdict::Feasible { witness },
                    tried,
                });
            }
        }
    }
    Ok(Obstruction {
        spec: *spec,
        b,
        verdict: Verdict::Infeasible,
        tried,
    })
}

pub fn all_witnesses(spec: &TwoBridgeSpec, b: u32) -> Result<Vec<Witness>> {
    let mut out = Vec::new();
    for s in enumerate_candidate_schemes(spec, b) {
        if let Some(w) = check_candidate(&s, b)? {
            out.push(w);
        }
    }
    Ok(out)
}

/// `floor((3N - 1) / 2)`.
pub fn critical_degree(spec: &TwoBridgeSpec) -> u32 {
    (3 * spec.crossing_number() as u32 - 1) / 2
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub spec: TwoBridgeSpec,
    pub b: u32,
    pub expected_alpha: usize,
    pub witnesses: Vec<Witness>,
    pub violations: Vec<String>,
    pub holds: bool,
}

/// At the critical degree, every witness should have beta = 0, alpha equal
/// to `(N-3)/2` (N odd) or `N/2 - 2` (N even), and no two adjacent solitary
/// nodes with the same index.
pub fn witness_structure_report(spec: &TwoBridgeSpec) -> Result<WitnessReport> {
    let n = spec.crossing_number() as usize;
    let b = critical_degree(spec);
    let expected_alpha = if n % 2 == 1 { (n - 3) / 2 } else { n / 2 - 2 };
    let witnesses = all_witnesses(spec, b)?;
    let mut violations = Vec::new();
    if witnesses.is_empty() {
        violations.push("no feasible witness at the critical degree".to_string());
    }
    for w in &witnesses {
        if w.beta != 0 {
            violations.push(format!("{}: beta = {}", w.scheme, w.beta));
        }
        if w.alpha != expected_alpha {
            violations.push(format!("{}: alpha = {}", w.scheme, w.alpha));
        }
        let body = w.scheme.body();
        if body.windows(2).any(|p| p[0] == p[1] && p[0].kind == SymbolKind::Solitary) {
            violations.push(format!("{}: repeated solitary node", w.scheme));
        }
    }
    Ok(WitnessReport {
        spec: *spec,
        b,
        expected_alpha,
        holds: violations.is_empty(),
        witnesses,
        violations,
    })
}

/// Largest crossing number of a knot of degree `d`:
/// `(d-2)(d-3)/2`, or `(d-1)(d-4)/2` for alternating diagrams with `d > 5`.
pub fn max_crossing_bound(d: u32, alternating: bool) -> Result<u32> {
    if d < 4 {
        return Err(Error::Invalid(format!("degree {d} is below 4")));
    }
    if alternating {
        if d <= 5 {
            return Err(Error::AlternatingBoundRequiresD6(d));
        }
        return Ok((d - 1) * (d - 4) / 2);
    }
    Ok((d - 2) * (d - 3) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twobridge::harmonic_diagram;

    #[test]
    fn frobenius_small_cases() {
        let r = frobenius_count(3, 4).unwrap();
        assert_eq!(r.representable, vec![0, 3, 4]);
        assert_eq!(r.count, 3);
        assert!(!r.gap_representable);
        let r = frobenius_count(2, 3).unwrap();
        assert_eq!(r.representable, vec![0]);
        assert!(matches!(frobenius_count(4, 6), Err(Error::NotCoprime(4, 6))));
        assert!(frobenius_pairing_holds(5, 7));
    }

    #[test]
    fn monomials_for_trefoil_degrees() {
        assert_eq!(monomial_basis(3, 4), vec![(0, 0), (1, 0), (0, 1)]);
        assert_eq!(monomial_basis(3, 5).len(), 4);
    }

    #[test]
    fn harmonic_trefoil_reduction() {
        let d = harmonic_diagram(3, 4, 5).unwrap();
        let r = z_reduce(&d.x, &d.y, &d.z, &d).unwrap();
        assert!(r.interpolates);
        assert!(r.alternates);
        assert_eq!(r.degree_certificate, Some(5));
    }

    #[test]
    fn reduction_is_idempotent() {
        let d = harmonic_diagram(3, 4, 5).unwrap();
        let r = z_reduce(&d.x, &d.y, &d.z, &d).unwrap();
        let again = z_reduce(&d.x, &d.y, &r.z_tilde, &d).unwrap();
        assert!(again.h.is_zero());
        assert_eq!(again.z_tilde, r.z_tilde);
    }

    #[test]
    fn wrong_crossing_count() {
        let d = harmonic_diagram(3, 4, 5).unwrap();
        let y5 = Poly::chebyshev(5);
        assert!(z_reduce(&d.x, &y5, &d.z, &d).is_err());
    }

    #[test]
    fn candidate_counts() {
        let t3 = TwoBridgeSpec::Torus(3);
        let c4: Vec<String> = enumerate_candidate_schemes(&t3, 4).iter().map(|s| s.render()).collect();
        assert_eq!(c4, vec!["<2 x1 x1 x1 >2 v", "<2 x1 x1 x1 >2 ^"]);
        let c5 = enumerate_candidate_schemes(&t3, 5);
        assert!(c5.iter().all(|s| s.solitary_count() == 1));
        assert!(c5.iter().any(|s| s.render() == "o1 <2 x1 x1 x1 >2 dn"));
        assert!(enumerate_candidate_schemes(&TwoBridgeSpec::Torus(5), 6)
            .iter()
            .all(|s| s.solitary_count() == 0));
    }

    #[test]
    fn trefoil_is_feasible_at_four() {
        let o = certify_lower_bound(&TwoBridgeSpec::Torus(3), 4).unwrap();
        assert!(o.is_feasible());
    }

    #[test]
    fn crossing_bounds() {
        assert_eq!(max_crossing_bound(4, false).unwrap(), 1);
        assert_eq!(max_crossing_bound(5, false).unwrap(), 3);
        assert_eq!(max_crossing_bound(6, true).unwrap(), 5);
        assert_eq!(max_crossing_bound(5, true), Err(Error::AlternatingBoundRequiresD6(5)));
    }
}
