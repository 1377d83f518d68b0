//! Machine-readable run records and the end-to-end worked example.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::braid3::BraidWord;
use crate::curvetrace::{analyze_curve, PolyMap};
use crate::error::Result;
use crate::poly::{rat, Poly};
use crate::scheme2braid::{to_braid, Bidegree};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

impl Check {
    pub fn new(name: &str, pass: bool, details: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            pass,
            details: details.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn new(command: impl Into<String>, inputs: Value, outputs: Value) -> Self {
        RunReport {
            command: command.into(),
            inputs,
            outputs,
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, name: &str, pass: bool, details: impl Into<String>) -> &mut Self {
        self.checks.push(Check::new(name, pass, details));
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub const EXAMPLE_SCHEME: &str = "o1 <1 x2 x1 >1 v";
pub const EXAMPLE_BRAID: &str = "-2 -1 2 -1 -2 -1 -1 -1 1 2 1 1 2 1";

/// `(T_3(t), T_4(t + 3/10) - t)`: a cubic-quartic map with one solitary
/// node followed by two crossings between a min and a max.
pub fn example_map() -> PolyMap {
    let m = PolyMap::chebyshev(3, rat(0, 1), 4, rat(3, 10));
    PolyMap::new(m.p, &m.q - &Poly::x())
}

/// Traces the example curve, reads its scheme and braid, and checks the
/// braid is trivial.
pub fn run_example_2_5() -> Result<RunReport> {
    let map = example_map();
    let ev = analyze_curve(&map)?;
    let scheme = ev.scheme()?;
    let d = Bidegree::new(ev.b as u32)?;
    let braid = to_braid(&scheme, &d)?;
    let expected: BraidWord = EXAMPLE_BRAID.parse()?;

    // The unperturbed shift t + 4/5 has the same degree but a different
    // real picture; recorded for comparison only.
    let plain = analyze_curve(&PolyMap::chebyshev(3, rat(0, 1), 4, rat(4, 5)))?;

    let mut r = RunReport::new(
        "example25",
        json!({
            "P": map.p.to_coeff_list(),
            "Q": map.q.to_coeff_list(),
        }),
        json!({
            "scheme": scheme.render(),
            "braid": braid.to_string(),
            "N": ev.n,
            "alpha": ev.alpha,
            "beta": ev.beta,
            "b": ev.b,
            "matrix": braid.matrix_rep().to_strings(),
            "exponent_sum": braid.exponent_sum(),
            "shift_4_5": {
                "scheme": plain.scheme()?.render(),
                "N": plain.n,
                "alpha": plain.alpha,
                "beta": plain.beta,
            },
        }),
    );
    r.check(
        "scheme",
        scheme.render() == EXAMPLE_SCHEME,
        format!("got {scheme}, want {EXAMPLE_SCHEME}"),
    );
    r.check(
        "braid_word",
        braid == expected,
        format!("got {braid}, want {expected}"),
    );
    r.check(
        "trivial",
        braid.is_trivial(),
        format!("matrix {}, exponent sum {}", braid.matrix_rep(), braid.exponent_sum()),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_passes() {
        let r = run_example_2_5().unwrap();
        assert_eq!(r.checks.len(), 3);
        assert!(r.passed(), "{:#?}", r.checks);
        let back: RunReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
