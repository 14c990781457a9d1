//! Shared fixtures for the benchmarks.

use blowdown_core::cases::{lookup, Case, WeightPick};
use blowdown_core::polyring::{parse, Polynomial, VarTable};

pub fn case(name: &str, k: Option<u32>) -> Case {
    lookup(name, k, WeightPick::default()).expect("registry case")
}

/// Katsura-3 in `x0..x3`, a standard Buchberger workload.
pub fn katsura3() -> Vec<Polynomial> {
    let r = VarTable::new(&["x0", "x1", "x2", "x3"]).expect("distinct names");
    [
        "x0 + 2*x1 + 2*x2 + 2*x3 - 1",
        "x0^2 + 2*x1^2 + 2*x2^2 + 2*x3^2 - x0",
        "2*x0*x1 + 2*x1*x2 + 2*x2*x3 - x1",
        "x1^2 + 2*x0*x2 + 2*x1*x3 - x2",
    ]
    .iter()
    .map(|s| parse(s, &r).expect("fixture parses"))
    .collect()
}
