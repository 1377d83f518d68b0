//! From an L-scheme and a bidegree (3, b) to the braid whose closure is the
//! link of the curve at infinity.

use serde::{Deserialize, Serialize};

use crate::braid3::BraidWord;
use crate::error::{Error, Result};
use crate::lscheme::{LScheme, SchemeSymbol, SymbolKind, Terminal};

/// `b = 3k - 1 - epsilon` with `epsilon` in {0, 1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bidegree {
    pub b: u32,
    pub k: u32,
    pub epsilon: u8,
}

impl Bidegree {
    pub fn new(b: u32) -> Result<Self> {
        match b % 3 {
            2 => Ok(Bidegree { b, k: (b + 1) / 3, epsilon: 0 }),
            1 => Ok(Bidegree { b, k: (b + 2) / 3, epsilon: 1 }),
            _ => Err(Error::Invalid(format!(
                "y-degree {b} is divisible by 3; normalize the map first"
            ))),
        }
    }

    pub fn check_terminal(&self, t: Terminal) -> Result<()> {
        if t.legal_for(self.b) {
            Ok(())
        } else {
            Err(Error::IllegalTerminalForBidegree {
                terminal: t.token().to_string(),
                b: self.b,
            })
        }
    }
}

/// The maximum put in front of the body and the minima appended after it.
pub fn boundary_symbols(terminal: Terminal, d: &Bidegree) -> Result<(SchemeSymbol, Vec<SchemeSymbol>)> {
    use SchemeSymbol as S;
    d.check_terminal(terminal)?;
    let even = d.k % 2 == 0;
    Ok(match (terminal, even) {
        (Terminal::Down, true) => (S::max(2), vec![S::min(1)]),
        (Terminal::Down, false) => (S::max(1), vec![S::min(1)]),
        (Terminal::Up, true) => (S::max(1), vec![S::min(2)]),
        (Terminal::Up, false) => (S::max(2), vec![S::min(2)]),
        (Terminal::Vee, true) => (S::max(2), vec![S::min(1), S::max(1), S::min(1)]),
        (Terminal::Vee, false) => (S::max(1), vec![S::min(1), S::max(1), S::min(1)]),
        (Terminal::Wedge, true) => (S::max(1), vec![S::min(2), S::max(2), S::min(2)]),
        (Terminal::Wedge, false) => (S::max(2), vec![S::min(2), S::max(2), S::min(2)]),
    })
}

/// Rewrites the scheme with tangencies only: `oj -> <j >j`, `xj -> >j <j`,
/// framed by the boundary symbols. The result alternates max, min.
pub fn expand_scheme(s: &LScheme, d: &Bidegree) -> Result<Vec<SchemeSymbol>> {
    use SchemeSymbol as S;
    let (prefix, suffix) = boundary_symbols(s.terminal(), d)?;
    let mut out = vec![prefix];
    for sym in s.body() {
        let j = sym.index();
        match sym.kind {
            SymbolKind::Solitary => out.extend([S::min(j), S::max(j)]),
            SymbolKind::Crossing => out.extend([S::max(j), S::min(j)]),
            _ => out.push(*sym),
        }
    }
    out.extend(suffix);
    Ok(out)
}

/// Braid letters for one consecutive (max, min) pair.
fn pair_letters(max_j: u8, min_j: u8) -> Vec<i8> {
    match (max_j, min_j) {
        (1, 1) => vec![-1],
        (2, 2) => vec![-2],
        (1, 2) => vec![-1, -2, 1],
        _ => vec![-2, -1, 2],
    }
}

/// The real part of the braid, before the half twists are appended.
pub fn real_braid(s: &LScheme, d: &Bidegree) -> Result<BraidWord> {
    let seq = expand_scheme(s, d)?;
    let mut letters = Vec::new();
    for pair in seq.chunks(2) {
        match pair {
            [a, b] if a.kind == SymbolKind::Max && b.kind == SymbolKind::Min => {
                letters.extend(pair_letters(a.index(), b.index()));
            }
            _ => {
                return Err(Error::Invalid(
                    "expanded scheme does not alternate max, min".into(),
                ))
            }
        }
    }
    BraidWord::new(letters)
}

/// Real part followed by `(sigma_1 sigma_2 sigma_1)^k`.
pub fn to_braid(s: &LScheme, d: &Bidegree) -> Result<BraidWord> {
    Ok(real_braid(s, d)?.concat(&BraidWord::half_twist().pow(d.k as usize)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sch(s: &str) -> LScheme {
        s.parse().unwrap()
    }

    fn render(v: &[SchemeSymbol]) -> String {
        v.iter().map(|s| s.token()).collect::<Vec<_>>().join(" ")
    }

    #[test]
    fn bidegree_arithmetic() {
        assert_eq!(Bidegree::new(4).unwrap(), Bidegree { b: 4, k: 2, epsilon: 1 });
        assert_eq!(Bidegree::new(5).unwrap(), Bidegree { b: 5, k: 2, epsilon: 0 });
        assert_eq!(Bidegree::new(2).unwrap().k, 1);
        assert!(Bidegree::new(6).is_err());
    }

    #[test]
    fn boundary_table_rows() {
        let d4 = Bidegree::new(4).unwrap();
        let d8 = Bidegree::new(8).unwrap();
        let (p, s) = boundary_symbols(Terminal::Vee, &d4).unwrap();
        assert_eq!((p.token(), render(&s)), (">2".into(), "<1 >1 <1".into()));
        let (p, s) = boundary_symbols(Terminal::Down, &d8).unwrap();
        assert_eq!((p.token(), render(&s)), (">1".into(), "<1".into()));
        let (p, s) = boundary_symbols(Terminal::Wedge, &d4).unwrap();
        assert_eq!((p.token(), render(&s)), (">1".into(), "<2 >2 <2".into()));
        assert!(matches!(
            boundary_symbols(Terminal::Down, &d4),
            Err(Error::IllegalTerminalForBidegree { .. })
        ));
    }

    #[test]
    fn worked_expansion() {
        let d = Bidegree::new(4).unwrap();
        let e = expand_scheme(&sch("o1 <1 x2 x1 >1 v"), &d).unwrap();
        assert_eq!(render(&e), ">2 <1 >1 <1 >2 <2 >1 <1 >1 <1 >1 <1");
    }

    #[test]
    fn worked_braid() {
        let d = Bidegree::new(4).unwrap();
        let w = to_braid(&sch("o1 <1 x2 x1 >1 v"), &d).unwrap();
        let expect: BraidWord = "-2 -1 2 -1 -2 -1 -1 -1 1 2 1 1 2 1".parse().unwrap();
        assert_eq!(w, expect);
        assert!(w.is_trivial());
    }

    #[test]
    fn empty_body_down() {
        let d = Bidegree::new(2).unwrap();
        let w = to_braid(&sch("dn"), &d).unwrap();
        assert_eq!(w.letters(), &[-1, 1, 2, 1]);
        assert_eq!(w.free_reduce().letters(), &[2, 1]);
    }

    #[test]
    fn trefoil_scheme_gives_unlinked_closure() {
        let d = Bidegree::new(4).unwrap();
        let w = to_braid(&sch("<2 x1 x1 x1 >2 v"), &d).unwrap();
        let link = w.closure_link();
        assert_eq!(link.component_count(), 3);
        assert!(link.pairwise().iter().all(|&v| v == 0));
    }
}
