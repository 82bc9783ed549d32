//! Shared instances for the criterion benches in `benches/`.

use mvis::{FamilySpec, Graph, Variant};

/// (family spec, variant) pairs solved by the `solvers` bench. Each finishes
/// in well under a second.
pub const SOLVE_CASES: &[(&str, Variant)] = &[
    ("grid:6x6", Variant::Mutual),
    ("grid:6x6", Variant::Outer),
    ("grid:6x6", Variant::Dual),
    ("grid:6x6", Variant::Total),
    ("torus:5x4", Variant::Dual),
    ("torus:6x5", Variant::Outer),
    ("ht:2", Variant::Dual),
    ("gprime:path:3:t=3", Variant::Total),
];

pub fn graph(spec: &str) -> Graph {
    spec.parse::<FamilySpec>()
        .and_then(|s| s.generate())
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
}
