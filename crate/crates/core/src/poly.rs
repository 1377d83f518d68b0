//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Exact rational number.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p/q` or an integer.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => BigInt::from_str(s).map(Rat::from_integer).map_err(|_| bad()),
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Sign of `sum c_i x^i` for integer coefficients and rational `x`.
pub fn sign_of_int_poly(c: &[BigInt], x: &Rat) -> i32 {
    if c.is_empty() {
        return 0;
    }
    let (n, d) = (x.numer(), x.denom());
    let mut acc = c[c.len() - 1].clone();
    let mut dp = BigInt::one();
    for ci in c.iter().rev().skip(1) {
        dp *= d;
        acc = acc * n + ci * &dp;
    }
    match acc.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

/// Coefficients stored low-to-high with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial `t`.
    pub fn x() -> Self {
        Poly::from_ints(&[0, 1])
    }

    pub fn monomial(c: Rat, n: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = c;
        Poly::new(coeffs)
    }

    /// `t + s`.
    pub fn shift(s: Rat) -> Self {
        Poly::new(vec![s, Rat::one()])
    }

    /// Chebyshev polynomial `T_n` from `T_{n+1} = 2t T_n - T_{n-1}`.
    pub fn chebyshev(n: usize) -> Self {
        let mut prev = Poly::one();
        if n == 0 {
            return prev;
        }
        let mut cur = Poly::x();
        let two_t = Poly::from_ints(&[0, 2]);
        for _ in 1..n {
            let next = &(&two_t * &cur) - &prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rat::one() / self.lead()))
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }

    /// Positive multiple of the polynomial with coprime integer coefficients,
    /// together with the positive scale factor used.
    pub fn integer_form(&self) -> (Vec<BigInt>, Rat) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
        if g.is_zero() {
            return (ints, Rat::one());
        }
        let scale = Rat::new(den, g.clone());
        (ints.into_iter().map(|v| v / &g).collect(), scale)
    }

    /// Sign of the value at `x` without forming rational intermediates.
    pub fn sign_at(&self, x: &Rat) -> i32 {
        let (c, _) = self.integer_form();
        sign_of_int_poly(&c, x)
    }

    /// Enclosure of the range of the polynomial over `[lo, hi]` (Horner in
    /// interval arithmetic, carried out on integers over a common denominator).
    pub fn eval_interval(&self, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
        if self.coeffs.is_empty() {
            return (Rat::zero(), Rat::zero());
        }
        let (c, scale) = self.integer_form();
        let d = lo.denom().lcm(hi.denom());
        let n1 = lo.numer() * (&d / lo.denom());
        let n2 = hi.numer() * (&d / hi.denom());
        // after processing m coefficients, [a, b] / d^(m-1) encloses the value
        let mut a = c[c.len() - 1].clone();
        let mut b = a.clone();
        let mut dp = BigInt::one();
        for ci in c.iter().rev().skip(1) {
            dp *= &d;
            let cands = [&a * &n1, &a * &n2, &b * &n1, &b * &n2];
            let mn = cands.iter().min().unwrap().clone();
            let mx = cands.iter().max().unwrap().clone();
            let add = ci * &dp;
            a = mn + &add;
            b = mx + add;
        }
        let denom = Rat::from_integer(dp) * scale;
        (Rat::from_integer(a) / &denom, Rat::from_integer(b) / denom)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// `self(inner(t))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, n: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead_inv = Rat::one() / d.lead();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.primitive_scaled();
        }
        a.monic()
    }

    /// Same roots, coefficients rescaled to keep gcd chains small.
    fn primitive_scaled(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for c in &self.coeffs {
            let v = c.numer() * (&den / c.denom());
            num = num.gcd(&v);
        }
        self.scale(&Rat::new(den, num))
    }

    /// `self / gcd(self, self')`.
    pub fn squarefree(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }

    /// Sign of the leading coefficient, `0` for zero.
    pub fn lead_sign(&self) -> i32 {
        let l = self.lead();
        if l.is_positive() {
            1
        } else if l.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Comma-separated low-to-high coefficient list.
    pub fn to_coeff_list(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Accepts `c0,c1,...` (low-to-high exact rationals), `T<n>` or
    /// `T<n>@<shift>` for a shifted Chebyshev polynomial.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('T').or_else(|| s.strip_prefix("cheb:")) {
            let (n, shift) = match rest.split_once('@') {
                Some((n, sh)) => (n, Some(parse_rat(sh)?)),
                None => (rest, None),
            };
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad Chebyshev index in {s:?}")))?;
            let t = Poly::chebyshev(n);
            return Ok(match shift {
                Some(sh) => t.compose(&Poly::shift(sh)),
                None => t,
            });
        }
        let coeffs = s
            .split(',')
            .map(parse_rat)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self.to_coeff_list())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_c = !a.is_one() || i == 0;
            if show_c {
                if a.is_integer() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "({a})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_recurrence_matches_closed_forms() {
        assert_eq!(Poly::chebyshev(3), Poly::from_ints(&[0, -3, 0, 4]));
        assert_eq!(Poly::chebyshev(4), Poly::from_ints(&[1, 0, -8, 0, 8]));
        // T_m(T_n) = T_{mn}
        assert_eq!(
            Poly::chebyshev(2).compose(&Poly::chebyshev(3)),
            Poly::chebyshev(6)
        );
    }

    #[test]
    fn chebyshev_matches_cosine() {
        for n in 0..9 {
            let t = Poly::chebyshev(n);
            for k in 0..7 {
                let th = 0.37 * k as f64;
                assert!((t.eval_f64(th.cos()) - (n as f64 * th).cos()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = Poly::from_ints(&[3, -1, 4, 1, -5, 9]);
        let b = Poly::from_ints(&[2, 0, 7]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = Poly::from_ints(&[-1, 1]); // t - 1
        let g = Poly::from_ints(&[2, 1]); // t + 2
        let p = &(&f * &f) * &g;
        assert_eq!(p.gcd(&p.derivative()), f);
        assert_eq!(p.squarefree().monic(), (&f * &g).monic());
        assert!(!p.is_squarefree());
    }

    #[test]
    fn parse_coefficients_and_shortcuts() {
        let p: Poly = "0,-3,0,1".parse().unwrap();
        assert_eq!(p, Poly::from_ints(&[0, -3, 0, 1]));
        let q: Poly = "1/2, -2/3".parse().unwrap();
        assert_eq!(q.coeff(1), rat(-2, 3));
        let t: Poly = "T4@4/5".parse().unwrap();
        assert_eq!(t, Poly::chebyshev(4).compose(&Poly::shift(rat(4, 5))));
        assert!("1,x".parse::<Poly>().is_err());
        assert!("1/0".parse::<Poly>().is_err());
    }

    #[test]
    fn interval_eval_encloses() {
        let p = Poly::chebyshev(5);
        let (lo, hi) = p.eval_interval(&rat(1, 3), &rat(1, 2));
        for k in 0..=10 {
            let x = rat(1, 3) + rat(k, 60);
            let v = p.eval(&x);
            assert!(lo <= v && v <= hi);
        }
    }

    #[test]
    fn f64_conversion_of_huge_rationals() {
        let big = Rat::new(BigInt::from(10).pow(400u32) * 3, BigInt::from(10).pow(400u32));
        assert!((rat_to_f64(&big) - 3.0).abs() < 1e-12);
        assert!((rat_to_f64(&rat(-7, 4)) + 1.75).abs() < 1e-15);
    }
}

impl From<Poly> for Vec<String> {
    fn from(p: Poly) -> Self {
        p.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl TryFrom<Vec<String>> for Poly {
    type Error = Error;

    fn try_from(v: Vec<String>) -> Result<Self, Error> {
        v.iter().map(|c| parse_rat(c)).collect::<Result<Vec<_>, _>>().map(Poly::new)
    }
}
