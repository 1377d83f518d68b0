//! The three-strand braid group: words, the integral 2x2 representation,
//! closure permutations and pairwise linking numbers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A braid word; `+j` is sigma_j and `-j` its inverse, `j` in {1, 2}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct BraidWord {
    letters: Vec<i8>,
}

impl BraidWord {
    pub fn new(letters: Vec<i8>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| !matches!(l.abs(), 1 | 2)) {
            return Err(Error::Invalid(format!("braid letter {bad} is not +-1 or +-2")));
        }
        Ok(BraidWord { letters })
    }

    pub fn identity() -> Self {
        BraidWord::default()
    }

    pub fn letters(&self) -> &[i8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    pub fn pow(&self, k: usize) -> BraidWord {
        BraidWord {
            letters: self.letters.repeat(k),
        }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Half twist sigma_1 sigma_2 sigma_1.
    pub fn half_twist() -> BraidWord {
        BraidWord {
            letters: vec![1, 2, 1],
        }
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i8> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { letters: out }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    pub fn matrix_rep(&self) -> Mat2 {
        self.letters
            .iter()
            .fold(Mat2::identity(), |acc, &l| acc.mul(&Mat2::generator(l)))
    }

    /// Identity in the braid group: the image in SL2(Z) is the identity and
    /// the exponent sum vanishes. The kernel of the representation consists
    /// of powers of the full twist squared, whose exponent sums are nonzero
    /// multiples of 12, so the test is exact.
    pub fn is_trivial(&self) -> bool {
        self.exponent_sum() == 0 && self.matrix_rep().is_identity()
    }

    pub fn closure_link(&self) -> LinkData {
        LinkData::of(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Accepts whitespace-separated signed indices with optional `g^k` powers.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (g, k) = match tok.split_once('^') {
                Some((g, k)) => {
                    let k: usize = k
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad braid power {tok:?}")))?;
                    (g, k)
                }
                None => (tok, 1),
            };
            let g: i8 = g
                .parse()
                .map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))?;
            if !matches!(g.abs(), 1 | 2) {
                return Err(Error::Parse(format!("bad braid letter {tok:?}")));
            }
            letters.extend(std::iter::repeat(g).take(k));
        }
        Ok(BraidWord { letters })
    }
}

impl From<BraidWord> for String {
    fn from(w: BraidWord) -> Self {
        w.to_string()
    }
}

impl TryFrom<String> for BraidWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Integer 2x2 matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[BigInt; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Self {
        Mat2::from_i64([[1, 0], [0, 1]])
    }

    pub fn from_i64(m: [[i64; 2]; 2]) -> Self {
        Mat2(m.map(|row| row.map(BigInt::from)))
    }

    /// sigma_1 -> [[1,1],[0,1]], sigma_2 -> [[1,0],[-1,1]].
    pub fn generator(letter: i8) -> Self {
        match letter {
            1 => Mat2::from_i64([[1, 1], [0, 1]]),
            -1 => Mat2::from_i64([[1, -1], [0, 1]]),
            2 => Mat2::from_i64([[1, 0], [-1, 1]]),
            -2 => Mat2::from_i64([[1, 0], [1, 1]]),
            _ => unreachable!("braid letters are validated on construction"),
        }
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn det(&self) -> BigInt {
        let m = &self.0;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn is_identity(&self) -> bool {
        let m = &self.0;
        m[0][0].is_one() && m[1][1].is_one() && m[0][1].is_zero() && m[1][0].is_zero()
    }

    pub fn to_strings(&self) -> [[String; 2]; 2] {
        self.0.clone().map(|row| row.map(|x| x.to_string()))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// Closure data of a braid. Strands are named by their starting position
/// 1 (bottom) to 3 (top).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkData {
    /// `permutation[i]` is the end position of the strand starting at `i + 1`.
    pub permutation: [usize; 3],
    /// Closure components as sorted sets of starting positions.
    pub components: Vec<Vec<usize>>,
    /// Symmetric linking matrix indexed by component; the diagonal is zero.
    pub lk: Vec<Vec<i64>>,
    /// Sign sum of crossings of each component with itself.
    pub self_writhe: Vec<i64>,
}

impl LinkData {
    fn of(w: &BraidWord) -> Self {
        // occupant[p] = starting position (0-based) of the strand now at p
        let mut occupant = [0usize, 1, 2];
        let mut crossings = Vec::with_capacity(w.len());
        for &l in w.letters() {
            let p = (l.unsigned_abs() - 1) as usize;
            crossings.push((occupant[p], occupant[p + 1], l.signum() as i64));
            occupant.swap(p, p + 1);
        }
        let mut permutation = [0usize; 3];
        for (pos, &start) in occupant.iter().enumerate() {
            permutation[start] = pos + 1;
        }

        let mut comp_of = [usize::MAX; 3];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for start in 0..3 {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut cycle = Vec::new();
            let mut s = start;
            while comp_of[s] == usize::MAX {
                comp_of[s] = id;
                cycle.push(s + 1);
                s = permutation[s] - 1;
            }
            cycle.sort_unstable();
            components.push(cycle);
        }

        let c = components.len();
        let mut twice = vec![vec![0i64; c]; c];
        let mut self_writhe = vec![0i64; c];
        for (a, b, sign) in crossings {
            let (ca, cb) = (comp_of[a], comp_of[b]);
            if ca == cb {
                self_writhe[ca] += sign;
            } else {
                twice[ca][cb] += sign;
                twice[cb][ca] += sign;
            }
        }
        let lk = twice
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| {
                        debug_assert!(v % 2 == 0, "closed components cross an even number of times");
                        v / 2
                    })
                    .collect()
            })
            .collect();
        LinkData {
            permutation,
            components,
            lk,
            self_writhe,
        }
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Linking numbers of each unordered component pair, in index order.
    pub fn pairwise(&self) -> Vec<i64> {
        let c = self.components.len();
        let mut out = Vec::new();
        for i in 0..c {
            for j in i + 1..c {
                out.push(self.lk[i][j]);
            }
        }
        out
    }

    pub fn lk_sum(&self) -> i64 {
        self.pairwise().iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn free_reduction_cascades() {
        assert!(w("1 -1").free_reduce().is_empty());
        assert_eq!(w("1 2 -2 -1 2").free_reduce(), w("2"));
    }

    #[test]
    fn powers_expand_at_parse_time() {
        assert_eq!(w("1^3 -2"), w("1 1 1 -2"));
        assert_eq!(w("-1^2").letters(), &[-1, -1]);
        assert!("3".parse::<BraidWord>().is_err());
        assert!("1^x".parse::<BraidWord>().is_err());
    }

    #[test]
    fn half_twist_matrix() {
        assert_eq!(w("1 2 1").matrix_rep(), Mat2::from_i64([[0, 1], [-1, 0]]));
        assert_eq!(w("1 2 1").matrix_rep(), w("2 1 2").matrix_rep());
    }

    #[test]
    fn central_element_is_not_trivial() {
        let d = w("1 2").pow(6);
        assert!(d.matrix_rep().is_identity());
        assert_eq!(d.exponent_sum(), 12);
        assert!(!d.is_trivial());
    }

    #[test]
    fn hopf_plus_unknot() {
        let l = w("1 1").closure_link();
        assert_eq!(l.permutation, [1, 2, 3]);
        assert_eq!(l.component_count(), 3);
        assert_eq!(l.pairwise(), vec![1, 0, 0]);
    }

    #[test]
    fn three_cycle_closure_is_a_knot() {
        let l = w("1 2").closure_link();
        assert_eq!(l.component_count(), 1);
        assert_eq!(l.permutation, [3, 1, 2]);
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(w("1 1").closure_link()).unwrap();
        assert!(v.get("permutation").is_some());
        assert!(v.get("components").is_some());
        assert!(v.get("lk").is_some());
    }
}
