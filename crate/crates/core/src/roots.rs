//! Real root isolation (Sturm sequences) and real algebraic numbers given by
//! a squarefree defining polynomial and an isolating interval.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::{rat_to_f64, sign_of_int_poly, Poly, Rat};

/// Sturm chain `p, p', -rem(p, p'), ...`.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign_changes_at(seq: &[Vec<BigInt>], x: &Rat) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in seq {
        let s = sign_of_int_poly(p, x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots in `(a, b]`.
pub fn count_roots(seq: &[Poly], a: &Rat, b: &Rat) -> usize {
    count_in(&integer_chain(seq), a, b)
}

fn integer_chain(seq: &[Poly]) -> Vec<Vec<BigInt>> {
    seq.iter().map(|p| p.integer_form().0).collect()
}

fn count_in(seq: &[Vec<BigInt>], a: &Rat, b: &Rat) -> usize {
    sign_changes_at(seq, a).saturating_sub(sign_changes_at(seq, b))
}

/// A power of two strictly larger than the modulus of every root.
pub fn root_bound(p: &Poly) -> Rat {
    let lead = p.lead().abs();
    let mut m = Rat::zero();
    for c in &p.coeffs()[..p.coeffs().len() - 1] {
        let q = c.abs() / &lead;
        if q > m {
            m = q;
        }
    }
    let bound = m + Rat::one();
    let mut b = Rat::one();
    while b <= bound {
        b *= Rat::from_integer(BigInt::from(2));
    }
    b
}

/// A real root of `poly`, exact or isolated in `(lo, hi)` with a strict
/// sign change of `poly` across the endpoints.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    poly: Poly,
    /// Integer form of `poly` used for sign evaluation.
    ints: Vec<BigInt>,
    lo: Rat,
    hi: Rat,
    exact: bool,
}

impl AlgebraicReal {
    pub fn rational(r: Rat) -> Self {
        let poly = Poly::new(vec![-r.clone(), Rat::one()]);
        AlgebraicReal {
            ints: poly.integer_form().0,
            poly,
            lo: r.clone(),
            hi: r,
            exact: true,
        }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn interval(&self) -> (&Rat, &Rat) {
        (&self.lo, &self.hi)
    }

    pub fn is_rational(&self) -> bool {
        self.exact
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// Halves the isolating interval.
    pub fn refine(&mut self) {
        if self.exact {
            return;
        }
        let mid = (&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2));
        let sm = sign_of_int_poly(&self.ints, &mid);
        if sm == 0 {
            self.lo = mid.clone();
            self.hi = mid;
            self.exact = true;
            return;
        }
        let slo = sign_of_int_poly(&self.ints, &self.lo);
        if sm == slo {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to(&mut self, width: &Rat) {
        while !self.exact && self.width() > *width {
            self.refine();
        }
    }

    pub fn to_f64(&self) -> f64 {
        (rat_to_f64(&self.lo) + rat_to_f64(&self.hi)) / 2.0
    }

    /// Exact sign of `f` at this number.
    pub fn sign_of(&mut self, f: &Poly) -> Ordering {
        if self.exact {
            return f.sign_at(&self.lo).cmp(&0);
        }
        // Cheap refinement first; zero can only be certified by a common factor.
        let mut checked_gcd = false;
        let mut rounds = 0;
        loop {
            let (lo, hi) = f.eval_interval(&self.lo, &self.hi);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            rounds += 1;
            if !checked_gcd && rounds > 64 {
                checked_gcd = true;
                let g = self.poly.gcd(f);
                if g.degree().unwrap_or(0) >= 1 && g.sign_at(&self.lo) * g.sign_at(&self.hi) < 0 {
                    return Ordering::Equal;
                }
            }
            self.refine();
            if self.exact {
                return f.sign_at(&self.lo).cmp(&0);
            }
        }
    }

    /// Enclosure of `f` at this number.
    pub fn enclose(&self, f: &Poly) -> (Rat, Rat) {
        f.eval_interval(&self.lo, &self.hi)
    }
}

/// Isolates all distinct real roots of a nonzero polynomial, sorted ascending.
pub fn isolate_real_roots(p: &Poly) -> Vec<AlgebraicReal> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sf = p.squarefree();
    let seq = integer_chain(&sturm_sequence(&sf));
    let b = root_bound(&sf);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    // Each stack entry is a half-open interval (a, c] with sf(a) != 0.
    while let Some((a, c)) = stack.pop() {
        let n = count_in(&seq, &a, &c);
        if n == 0 {
            continue;
        }
        if n == 1 {
            if sf.eval(&c).is_zero() {
                out.push(AlgebraicReal::rational(c));
            } else {
                out.push(AlgebraicReal {
                    ints: sf.integer_form().0,
                    poly: sf.clone(),
                    lo: a,
                    hi: c,
                    exact: false,
                });
            }
            continue;
        }
        let mid = (&a + &c) / Rat::from_integer(BigInt::from(2));
        // (mid, c] must start at a non-root; shift the split if needed.
        if sf.eval(&mid).is_zero() {
            out.push(AlgebraicReal::rational(mid.clone()));
            let mut eps = (&c - &mid) / Rat::from_integer(BigInt::from(4));
            let mut right = &mid + &eps;
            while count_in(&seq, &mid, &right) > 0 || sf.eval(&right).is_zero() {
                eps /= Rat::from_integer(BigInt::from(2));
                right = &mid + &eps;
            }
            let mut left = &mid - &eps;
            while count_in(&seq, &left, &mid) > 1 || sf.eval(&left).is_zero() {
                eps /= Rat::from_integer(BigInt::from(2));
                left = &mid - &eps;
            }
            stack.push((a, left));
            stack.push((right, c));
        } else {
            stack.push((mid.clone(), c));
            stack.push((a, mid));
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Interval `[lo, hi]` with `lo <= sqrt(a)` and `sqrt(b) <= hi`, for
/// `0 <= a <= b`, with slack at most `2^-bits` beyond the true values.
pub fn sqrt_enclosure(a: &Rat, b: &Rat, bits: usize) -> (Rat, Rat) {
    fn floor_sqrt(r: &Rat, bits: usize) -> Rat {
        if !r.is_positive() {
            return Rat::zero();
        }
        // sqrt(n/d) = sqrt(n d) / d
        let nd = r.numer() * r.denom();
        let scaled: BigInt = nd << (2 * bits);
        let s = scaled.sqrt();
        Rat::new(s, r.denom() << bits)
    }
    let lo = floor_sqrt(a, bits);
    let unit = Rat::new(BigInt::one(), BigInt::one() << bits);
    let hi = floor_sqrt(b, bits) + unit / Rat::from_integer(b.denom().clone());
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    #[test]
    fn isolates_chebyshev_roots() {
        // T_5 has roots cos((2k+1)pi/10)
        let roots = isolate_real_roots(&Poly::chebyshev(5));
        assert_eq!(roots.len(), 5);
        let mut expect: Vec<f64> = (0..5)
            .map(|k| ((2 * k + 1) as f64 * std::f64::consts::PI / 10.0).cos())
            .collect();
        expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (mut r, e) in roots.into_iter().zip(expect) {
            r.refine_to(&rat(1, 1 << 30));
            assert!((r.to_f64() - e).abs() < 1e-8);
        }
    }

    #[test]
    fn rational_roots_are_exact() {
        // (t)(t-1/2)(t+3), with t = 0 hit by the first bisection
        let p = &(&Poly::x() * &Poly::from_ints(&[-1, 2])) * &Poly::from_ints(&[3, 1]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 3);
        assert!(roots[1].is_rational());
        assert_eq!(roots[1].interval().0, &int(0));
    }

    #[test]
    fn counts_with_multiplicity_removed() {
        let p = &Poly::from_ints(&[-2, 0, 1]).pow(2) * &Poly::from_ints(&[1, 0, 1]);
        assert_eq!(isolate_real_roots(&p).len(), 2);
    }

    #[test]
    fn sign_at_algebraic_number() {
        let mut r = isolate_real_roots(&Poly::from_ints(&[-2, 0, 1]))
            .pop()
            .unwrap(); // sqrt 2
        assert_eq!(r.sign_of(&Poly::from_ints(&[-2, 0, 1])), Ordering::Equal);
        assert_eq!(r.sign_of(&Poly::from_ints(&[-141, 100])), Ordering::Greater);
        assert_eq!(r.sign_of(&Poly::from_ints(&[-142, 100])), Ordering::Less);
        // t^4 - 4 vanishes at sqrt 2 even though it is not the defining poly
        assert_eq!(r.sign_of(&Poly::from_ints(&[-4, 0, 0, 0, 1])), Ordering::Equal);
    }

    #[test]
    fn sqrt_enclosure_brackets() {
        let (lo, hi) = sqrt_enclosure(&int(2), &int(2), 40);
        assert!(&lo * &lo <= int(2));
        assert!(&hi * &hi >= int(2));
        assert!(&hi - &lo < rat(1, 1 << 30));
    }
}
