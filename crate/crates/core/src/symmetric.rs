//! Symmetric functions of the two parameters of a double point of a map
//! `t -> (P(t), Q(t))` with `P` cubic.
//!
//! With `u = s + t` and `v = s t`, the condition `P(s) = P(t)` for `s != t`
//! is linear in `v`, so every symmetric polynomial in `(s, t)` restricted to
//! the double-point locus becomes a univariate polynomial in `u`.

use crate::error::{Error, Result};
use crate::poly::{int, Poly, Rat};

pub struct SymReducer {
    /// `v` as a polynomial in `u`.
    v: Poly,
    /// `h[n] = (s^n - t^n) / (s - t)`.
    h: Vec<Poly>,
    /// `p[n] = s^n + t^n`.
    p: Vec<Poly>,
    /// `v^k`.
    vpow: Vec<Poly>,
    a2_over_a3: Rat,
}

impl SymReducer {
    pub fn new(cubic: &Poly) -> Result<Self> {
        if cubic.degree() != Some(3) {
            return Err(Error::Invalid(format!("x-polynomial must be cubic, got {cubic}")));
        }
        let a3 = cubic.coeff(3);
        let a2 = cubic.coeff(2);
        let a1 = cubic.coeff(1);
        // a3 (u^2 - v) + a2 u + a1 = 0
        let v = Poly::new(vec![&a1 / &a3, &a2 / &a3, int(1)]);
        Ok(SymReducer {
            h: vec![Poly::zero(), Poly::one()],
            p: vec![Poly::constant(int(2)), Poly::x()],
            vpow: vec![Poly::one()],
            v,
            a2_over_a3: a2 / a3,
        })
    }

    pub fn v(&self) -> &Poly {
        &self.v
    }

    fn extend(&mut self, n: usize) {
        let u = Poly::x();
        while self.h.len() <= n {
            let k = self.h.len();
            let next = &(&u * &self.h[k - 1]) - &(&self.v * &self.h[k - 2]);
            self.h.push(next);
            let next = &(&u * &self.p[k - 1]) - &(&self.v * &self.p[k - 2]);
            self.p.push(next);
        }
        while self.vpow.len() <= n {
            let next = &self.vpow[self.vpow.len() - 1] * &self.v;
            self.vpow.push(next);
        }
    }

    pub fn h(&mut self, n: usize) -> Poly {
        self.extend(n);
        self.h[n].clone()
    }

    pub fn p(&mut self, n: usize) -> Poly {
        self.extend(n);
        self.p[n].clone()
    }

    /// `(f(s) - f(t)) / (s - t)`.
    pub fn divided(&mut self, f: &Poly) -> Poly {
        let n = f.coeffs().len();
        self.extend(n);
        f.coeffs()
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (i, c)| &acc + &self.h[i].scale(c))
    }

    /// `(f(s) + f(t)) / 2`.
    pub fn half_sum(&mut self, f: &Poly) -> Poly {
        let n = f.coeffs().len();
        self.extend(n);
        let half = Rat::new(1.into(), 2.into());
        f.coeffs()
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (i, c)| &acc + &self.p[i].scale(&(c * &half)))
    }

    /// `(f(t) g(s) - f(s) g(t)) / (t - s)`.
    pub fn anti(&mut self, f: &Poly, g: &Poly) -> Poly {
        let n = f.coeffs().len().max(g.coeffs().len());
        self.extend(n);
        let mut acc = Poly::zero();
        for (a, fa) in f.coeffs().iter().enumerate() {
            for (b, gb) in g.coeffs().iter().enumerate() {
                // t^a s^b - s^a t^b over t - s
                let term = match a.cmp(&b) {
                    std::cmp::Ordering::Equal => continue,
                    std::cmp::Ordering::Greater => &self.vpow[b] * &self.h[a - b],
                    std::cmp::Ordering::Less => -&(&self.vpow[a] * &self.h[b - a]),
                };
                acc = &acc + &term.scale(&(fa * gb));
            }
        }
        acc
    }

    /// `f(s) g(t) + f(t) g(s)`.
    pub fn mixed_sum(&mut self, f: &Poly, g: &Poly) -> Poly {
        let n = f.coeffs().len().max(g.coeffs().len());
        self.extend(n);
        let mut acc = Poly::zero();
        for (a, fa) in f.coeffs().iter().enumerate() {
            for (b, gb) in g.coeffs().iter().enumerate() {
                let term = &self.vpow[a.min(b)] * &self.p[a.abs_diff(b)];
                acc = &acc + &term.scale(&(fa * gb));
            }
        }
        acc
    }

    /// `(s - t)^2 = u^2 - 4 v`.
    pub fn discriminant(&self) -> Poly {
        &Poly::monomial(int(1), 2) - &self.v.scale(&int(4))
    }

    /// Parameter of the third point on the vertical line through a double point.
    pub fn third_parameter(&self) -> Poly {
        Poly::new(vec![-self.a2_over_a3.clone(), int(-1)])
    }

    /// Parameter of the third point on the vertical line through `P(c)`
    /// where `c` is a critical point.
    pub fn tangent_third_parameter(&self) -> Poly {
        Poly::new(vec![-self.a2_over_a3.clone(), int(-2)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn node_polynomial_vanishes_on_double_points() {
        // P = t^3 - 3t has P(-1) = P(2) = 2.
        let p = Poly::from_ints(&[0, -3, 0, 1]);
        let (s, t, u) = (int(-1), int(2), int(1));
        assert_eq!(p.eval(&s), p.eval(&t));
        let mut r = SymReducer::new(&p).unwrap();
        assert_eq!(r.v().eval(&u), &s * &t);
        let q = Poly::from_ints(&[1, -2, 5, 0, 3]);
        let dd = r.divided(&q);
        assert_eq!(dd.eval(&u), (q.eval(&s) - q.eval(&t)) / (&s - &t));
        let hs = r.half_sum(&q);
        assert_eq!(hs.eval(&u), (q.eval(&s) + q.eval(&t)) / int(2));
        let f = Poly::from_ints(&[2, 0, -1, 4]);
        let g = Poly::from_ints(&[-1, 3, 1]);
        assert_eq!(
            r.anti(&f, &g).eval(&u),
            (f.eval(&t) * g.eval(&s) - f.eval(&s) * g.eval(&t)) / (&t - &s)
        );
        assert_eq!(
            r.mixed_sum(&f, &g).eval(&u),
            f.eval(&s) * g.eval(&t) + f.eval(&t) * g.eval(&s)
        );
        assert_eq!(r.discriminant().eval(&u), (&s - &t) * (&s - &t));
        assert_eq!(r.third_parameter().eval(&u), int(-1));
    }

    #[test]
    fn tangent_third_point() {
        // critical point c = 1 of t^3 - 3t; P(t) = P(1) = -2 at t = -2
        let p = Poly::from_ints(&[0, -3, 0, 1]);
        let r = SymReducer::new(&p).unwrap();
        assert_eq!(r.tangent_third_parameter().eval(&int(1)), int(-2));
        assert_eq!(p.eval(&int(-2)), p.eval(&int(1)));
        assert_eq!(r.v().eval(&rat(1, 2)), rat(-11, 4));
        assert_eq!(r.discriminant().eval(&int(2)), int(0));
    }

    #[test]
    fn rejects_non_cubic() {
        assert!(SymReducer::new(&Poly::from_ints(&[0, 1])).is_err());
    }
}
