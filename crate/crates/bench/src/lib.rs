//! Shared fixtures for the criterion benches.

use trigonal::{LScheme, Poly, PolyMap};

/// The worked-example map and a few harder shifted Chebyshev maps.
pub fn maps() -> Vec<(&'static str, PolyMap)> {
    let shifted = |b: usize, s: &str| PolyMap::new(Poly::chebyshev(3), format!("T{b}@{s}").parse().unwrap());
    vec![
        ("example", trigonal::report::example_map()),
        ("T3,T5@1/7", shifted(5, "1/7")),
        ("T3,T8@2/9", shifted(8, "2/9")),
    ]
}

/// A scheme some distance away from the alternating form.
pub fn tangled_scheme() -> LScheme {
    "o1 <1 x2 x1 x2 x1 x1 >2 o2 dn".parse().unwrap()
}
