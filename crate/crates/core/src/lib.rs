pub mod braid3;
pub mod certifier;
pub mod curvetrace;
pub mod error;
pub mod lscheme;
pub mod poly;
pub mod report;
pub mod roots;
pub mod scheme2braid;
pub mod svg;
pub mod symmetric;
pub mod twobridge;

pub use braid3::{BraidWord, LinkData, Mat2};
pub use error::{Error, Result};
pub use lscheme::{
    parse_scheme, reduce_to_alternating, Direction, LScheme, ReductionPath, RewriteRule,
    RuleFamily, SchemeSymbol, SymbolKind, Terminal,
};
pub use poly::{Poly, Rat};
pub use scheme2braid::{boundary_symbols, expand_scheme, to_braid, Bidegree};
pub use curvetrace::{
    analyze_curve, extract_lscheme, node_identity_check, normalize_bidegree, CurveEvents,
    EventKind, PolyMap,
};
pub use twobridge::{
    fractions_equivalent, harmonic_diagram, identify_trigonal_diagram, lexdeg_lower_general,
    lexdeg_theorem_main, spec_fraction, DegreeTriple, Fraction, KnotDiagram, TwoBridgeSpec,
};
pub use certifier::{
    certify_lower_bound, enumerate_candidate_schemes, frobenius_count, max_crossing_bound,
    witness_structure_report, z_reduce, FrobeniusReport, Obstruction, Verdict, Witness,
    ZReduction,
};
pub use report::{run_example_2_5, Check, RunReport};
pub use svg::{emit_svg, Figure};
