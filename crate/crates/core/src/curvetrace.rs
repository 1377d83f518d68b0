//! Events of a real plane curve `t -> (P(t), Q(t))` with `P` cubic, seen from
//! the vertical pencil: double points (crossings and solitary nodes) and
//! vertical tangencies, sorted by abscissa and labelled by strand pair.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lscheme::{LScheme, SchemeSymbol, Terminal};
use crate::poly::{int, rat_to_f64, Poly, Rat};
use crate::roots::{isolate_real_roots, sqrt_enclosure, AlgebraicReal};
use crate::symmetric::SymReducer;

/// Plane polynomial map, `P` the x-coordinate and `Q` the y-coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMap {
    pub p: Poly,
    pub q: Poly,
}

impl PolyMap {
    pub fn new(p: Poly, q: Poly) -> Self {
        PolyMap { p, q }
    }

    /// `(T_a(t + sa), T_b(t + sb))`.
    pub fn chebyshev(a: usize, sa: Rat, b: usize, sb: Rat) -> Self {
        PolyMap {
            p: Poly::chebyshev(a).compose(&Poly::shift(sa)),
            q: Poly::chebyshev(b).compose(&Poly::shift(sb)),
        }
    }

    pub fn y_degree(&self) -> usize {
        self.q.degree().unwrap_or(0)
    }
}

/// Makes `P` increasing at infinity and removes a multiple of `P^k` from `Q`
/// when `3 | deg Q`.
pub fn normalize_bidegree(m: &PolyMap) -> Result<PolyMap> {
    if m.p.degree() != Some(3) {
        return Err(Error::Invalid(format!("x-polynomial must be cubic, got {}", m.p)));
    }
    let p = if m.p.lead().is_negative() { -&m.p } else { m.p.clone() };
    let mut q = m.q.clone();
    let b = q.degree().unwrap_or(0);
    if b == 0 {
        return Err(Error::NotReducible(0));
    }
    if b % 3 == 0 {
        let pk = p.pow(b / 3);
        let c = q.lead() / pk.lead();
        q = &q - &pk.scale(&c);
        let nb = q.degree().unwrap_or(0);
        if nb == 0 || nb % 3 == 0 {
            return Err(Error::NotReducible(nb));
        }
    }
    Ok(PolyMap { p, q })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EventKind {
    Crossing,
    Solitary,
    TangencyMin,
    TangencyMax,
}

/// Rational enclosure `[lo, hi]` of a real algebraic number.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Enclosure {
    pub lo: String,
    pub hi: String,
    pub approx: f64,
}

impl Enclosure {
    fn new(lo: &Rat, hi: &Rat) -> Self {
        Enclosure {
            lo: lo.to_string(),
            hi: hi.to_string(),
            approx: (rat_to_f64(lo) + rat_to_f64(hi)) / 2.0,
        }
    }
}

/// Approximate complex parameter value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Param {
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveEvent {
    pub kind: EventKind,
    pub j: u8,
    pub x: Enclosure,
    pub y: f64,
    pub parameters: Vec<Param>,
    /// `s + t` for double points, the critical parameter for tangencies.
    #[serde(skip)]
    pub root: AlgebraicReal,
}

impl CurveEvent {
    pub fn symbol(&self) -> SchemeSymbol {
        match self.kind {
            EventKind::Crossing => SchemeSymbol::cross(self.j),
            EventKind::Solitary => SchemeSymbol::dot(self.j),
            EventKind::TangencyMin => SchemeSymbol::min(self.j),
            EventKind::TangencyMax => SchemeSymbol::max(self.j),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveEvents {
    pub map: PolyMap,
    pub b: usize,
    pub events: Vec<CurveEvent>,
    #[serde(rename = "N")]
    pub n: usize,
    pub alpha: usize,
    pub beta: usize,
    /// Polynomial in `u = s + t` whose roots are the double points.
    pub node_poly: Poly,
}

impl CurveEvents {
    pub fn terminal(&self) -> Terminal {
        let positive = self.map.q.lead().is_positive();
        match (self.b % 3, positive) {
            (2, true) => Terminal::Down,
            (2, false) => Terminal::Up,
            (_, true) => Terminal::Vee,
            (_, false) => Terminal::Wedge,
        }
    }

    pub fn scheme(&self) -> Result<LScheme> {
        LScheme::new(self.events.iter().map(|e| e.symbol()).collect(), self.terminal())
    }

    pub fn crossings(&self) -> impl Iterator<Item = &CurveEvent> {
        self.events.iter().filter(|e| e.kind == EventKind::Crossing)
    }
}

fn degenerate(msg: &str) -> Error {
    Error::DegenerateCurve(msg.to_string())
}

/// Precision below which two event abscissae are declared coincident.
const COINCIDENCE_BITS: usize = 128;

struct Pending {
    kind: EventKind,
    j: u8,
    root: AlgebraicReal,
    /// x as a polynomial in the root.
    xpoly: Poly,
    ypoly: Poly,
}

fn two_pow_neg(bits: usize) -> Rat {
    Rat::new(1.into(), num_bigint::BigInt::from(1) << bits)
}

/// Sorts events by abscissa using exact enclosures; equal abscissae are
/// reported as degenerate.
fn sort_by_abscissa(mut items: Vec<Pending>) -> Result<Vec<(Pending, (Rat, Rat))>> {
    let mut bits = 24;
    loop {
        let eps = two_pow_neg(bits);
        for it in items.iter_mut() {
            it.root.refine_to(&eps);
        }
        let encl: Vec<(Rat, Rat)> = items.iter().map(|it| it.root.enclose(&it.xpoly)).collect();
        let mut order: Vec<usize> = (0..items.len()).collect();
        order.sort_by(|&a, &b| encl[a].0.cmp(&encl[b].0));
        let separated = order.windows(2).all(|w| encl[w[0]].1 < encl[w[1]].0);
        if separated {
            let mut slots: Vec<Option<Pending>> = items.into_iter().map(Some).collect();
            return Ok(order
                .into_iter()
                .map(|i| (slots[i].take().unwrap(), encl[i].clone()))
                .collect());
        }
        if bits >= COINCIDENCE_BITS {
            return Err(degenerate("two events share an abscissa"));
        }
        bits *= 2;
    }
}

fn sign_at(root: &mut AlgebraicReal, f: &Poly) -> Ordering {
    root.sign_of(f)
}

/// Parameters `(u -+ sqrt(d)) / 2` of a double point, approximately.
fn node_params(root: &AlgebraicReal, disc: &Poly) -> Vec<Param> {
    let u = root.to_f64();
    let d = disc.eval_f64(u);
    if d >= 0.0 {
        let r = d.sqrt();
        vec![Param { re: (u - r) / 2.0, im: 0.0 }, Param { re: (u + r) / 2.0, im: 0.0 }]
    } else {
        let r = (-d).sqrt();
        vec![Param { re: u / 2.0, im: -r / 2.0 }, Param { re: u / 2.0, im: r / 2.0 }]
    }
}

/// Computes and classifies all events of the map after normalization.
pub fn analyze_curve(m: &PolyMap) -> Result<CurveEvents> {
    let m = normalize_bidegree(m)?;
    let b = m.y_degree();
    let mut sym = SymReducer::new(&m.p)?;
    let node_poly = sym.divided(&m.q);
    if node_poly.is_zero() {
        return Err(degenerate("the map is not generically injective"));
    }
    if node_poly.degree() != Some(b - 1) {
        return Err(degenerate("node polynomial has unexpected degree"));
    }
    if !node_poly.is_squarefree() {
        return Err(degenerate("coincident double points (non-nodal singularity)"));
    }
    let disc = sym.discriminant();
    if node_poly.gcd(&disc).degree().unwrap_or(0) > 0 {
        return Err(degenerate("double point at a vertical tangency or a cusp"));
    }

    let xnode = sym.half_sum(&m.p);
    let ynode = sym.half_sum(&m.q);
    let third_above_node = &m.q.compose(&sym.third_parameter()) - &ynode;
    let mut pending = Vec::new();
    let real_roots = isolate_real_roots(&node_poly);
    let beta2 = (b - 1) - real_roots.len();
    if beta2 % 2 != 0 {
        return Err(degenerate("odd number of non-real double points"));
    }
    for mut root in real_roots {
        let kind = match sign_at(&mut root, &disc) {
            Ordering::Greater => EventKind::Crossing,
            Ordering::Less => EventKind::Solitary,
            Ordering::Equal => return Err(degenerate("double point with equal parameters")),
        };
        let j = match sign_at(&mut root, &third_above_node) {
            Ordering::Greater => 1,
            Ordering::Less => 2,
            Ordering::Equal => return Err(degenerate("triple point")),
        };
        pending.push(Pending {
            kind,
            j,
            root,
            xpoly: xnode.clone(),
            ypoly: ynode.clone(),
        });
    }

    let dp = m.p.derivative();
    if dp.is_squarefree() {
        let third_above_tangent = &m.q.compose(&sym.tangent_third_parameter()) - &m.q;
        let crit = isolate_real_roots(&dp);
        for (i, mut root) in crit.into_iter().enumerate() {
            // with P increasing at infinity the smaller critical point is the
            // local maximum of x
            let kind = if i == 0 { EventKind::TangencyMax } else { EventKind::TangencyMin };
            let j = match sign_at(&mut root, &third_above_tangent) {
                Ordering::Greater => 1,
                Ordering::Less => 2,
                Ordering::Equal => return Err(degenerate("vertical tangent through a node")),
            };
            pending.push(Pending {
                kind,
                j,
                root,
                xpoly: m.p.clone(),
                ypoly: m.q.clone(),
            });
        }
    }

    let sorted = sort_by_abscissa(pending)?;
    let mut events = Vec::with_capacity(sorted.len());
    // approximations below are printed and plotted, so make them full doubles
    let fine_width = Rat::new(1.into(), BigInt::from(1u8) << 64usize);
    for (mut p, (lo, hi)) in sorted {
        p.root.refine_to(&fine_width);
        let parameters = match p.kind {
            EventKind::Crossing | EventKind::Solitary => node_params(&p.root, &disc),
            _ => vec![Param { re: p.root.to_f64(), im: 0.0 }],
        };
        events.push(CurveEvent {
            kind: p.kind,
            j: p.j,
            x: Enclosure::new(&lo, &hi),
            y: p.ypoly.eval_f64(p.root.to_f64()),
            parameters,
            root: p.root,
        });
    }
    let n = events.iter().filter(|e| e.kind == EventKind::Crossing).count();
    let alpha = events.iter().filter(|e| e.kind == EventKind::Solitary).count();
    let beta = beta2 / 2;
    if n + alpha + 2 * beta != b - 1 {
        return Err(degenerate("double point count does not match the y-degree"));
    }
    Ok(CurveEvents {
        map: m,
        b,
        events,
        n,
        alpha,
        beta,
        node_poly,
    })
}

pub fn extract_lscheme(m: &PolyMap) -> Result<LScheme> {
    analyze_curve(m)?.scheme()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeIdentityReport {
    #[serde(rename = "N")]
    pub n: usize,
    pub alpha: usize,
    pub beta: usize,
    pub b: usize,
    pub holds: bool,
}

pub fn node_identity_check(m: &PolyMap) -> Result<NodeIdentityReport> {
    let ev = analyze_curve(m)?;
    Ok(NodeIdentityReport {
        n: ev.n,
        alpha: ev.alpha,
        beta: ev.beta,
        b: ev.b,
        holds: ev.n + ev.alpha + 2 * ev.beta + 1 == ev.b,
    })
}

/// Lattice points strictly inside the triangle `(0,0), (0,3), (b,0)`.
pub fn interior_lattice_points(b: usize) -> usize {
    (1..b)
        .map(|i| (1..3).filter(|&j| 3 * i + b * j < 3 * b).count())
        .sum()
}

/// Closed form of [`interior_lattice_points`]: `b - 1`, less the two
/// hypotenuse points when `3 | b`.
pub fn interior_lattice_formula(b: usize) -> usize {
    if b % 3 == 0 {
        b.saturating_sub(2)
    } else {
        b.saturating_sub(1)
    }
}

fn random_rat<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rat {
    Rat::new(rng.gen_range(-num..=num).into(), rng.gen_range(1..=den).into())
}

/// Random map with `P` a cubic with three distinct real roots and `Q` of
/// degree `b` with small rational coefficients.
pub fn random_map<R: Rng>(rng: &mut R, b: usize) -> PolyMap {
    let mut roots: Vec<Rat> = Vec::new();
    while roots.len() < 3 {
        let r = random_rat(rng, 12, 4);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    let p = roots
        .iter()
        .fold(Poly::one(), |acc, r| &acc * &Poly::new(vec![-r.clone(), int(1)]));
    let mut q: Vec<Rat> = (0..b).map(|_| random_rat(rng, 9, 3)).collect();
    let mut lead = Rat::zero();
    while lead.is_zero() {
        lead = random_rat(rng, 5, 2);
    }
    q.push(lead);
    PolyMap::new(p, Poly::new(q))
}

/// Rational enclosures of the real parameters `s < t` of a crossing, given
/// its root `u = s + t` and the discriminant `(s - t)^2` as a polynomial in `u`.
pub fn sqrt_params(root: &AlgebraicReal, disc: &Poly, bits: usize) -> Option<((Rat, Rat), (Rat, Rat))> {
    let (ulo, uhi) = root.interval();
    let (dlo, dhi) = root.enclose(disc);
    if !dlo.is_positive() {
        return None;
    }
    let (rlo, rhi) = sqrt_enclosure(&dlo, &dhi, bits);
    let two = int(2);
    let s = ((ulo - &rhi) / &two, (uhi - &rlo) / &two);
    let t = ((ulo + &rlo) / &two, (uhi + &rhi) / &two);
    Some((s, t))
}
