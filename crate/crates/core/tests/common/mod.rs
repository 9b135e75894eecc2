//! Shared fixtures for the integration tests.
#![allow(dead_code)]

pub mod partitions;

use std::sync::Arc;

use branchkit::catalog::{Catalog, PairData};
use branchkit::{Rat, Weight};

/// Implemented data of a pair.
pub fn data(g: &str, h: &str) -> Arc<PairData> {
    Catalog::builtin()
        .lookup(g, h)
        .unwrap_or_else(|e| panic!("{g}/{h}: {e}"))
        .data
        .unwrap_or_else(|| panic!("{g}/{h}: no data"))
}

/// The first of `ρ, 2ρ, 3ρ` of the family member that is a valid parameter.
pub fn rho_parameter(d: &PairData, member: usize) -> Option<Weight> {
    let rho = d.family[member].system.rho();
    (1..=3)
        .map(|k| rho.scale(&Rat::int(k)))
        .find(|l| d.validate_parameter(l).is_ok())
}

/// Equal-rank pairs of total rank at most five, one per catalog family
/// where possible, across the three tables.
pub const EQUAL_RANK_SMALL: &[(&str, &str)] = &[
    ("sp(1,2)", "sp(1,1)+sp(1)"),
    ("sp(1,3)", "sp(1,1)+sp(2)"),
    ("sp(2,2)", "sp(2,1)+sp(1)"),
    ("so(4,3)", "so(4,2)"),
    ("so(4,4)", "so(4,2)+so(2)"),
    ("so(4,5)", "so(4,3)+so(2)"),
    ("so(6,3)", "so(6,1)+so(2)"),
    ("so(6,4)", "so(6,2)+so(2)"),
    ("su(3,2)", "su(3,1)+su(1)+u(1)"),
    ("su(3,2)", "su(1,2)+su(2)+u(1)"),
    ("su(4,2)", "su(4,1)+su(1)+u(1)"),
    ("f4(4)", "sp(1,2)+su(2)"),
    ("f4(4)", "so(5,4)"),
    ("su(2,2)", "su(1,1)+su(1,1)+u(1)"),
    ("su(3,2)", "su(2,1)+su(1,1)+u(1)"),
    ("su(3,3)", "su(1,2)+su(2,1)+u(1)"),
    ("so(2,4)", "so(2,2)+so(2)"),
    ("so(2,4)", "u(1,2)"),
    ("so(2,5)", "so(2,3)+so(2)"),
    ("so*(8)", "u(1,3)"),
    ("sp(3,R)", "u(1,2)"),
];

/// Pairs of unequal rank with an implemented restriction map.
pub const UNEQUAL_RANK: &[(&str, &str)] = &[
    ("so(4,2)", "so(4,1)"),
    ("so(6,2)", "so(6,1)"),
    ("e6(2)", "f4(4)"),
];

/// The `su(m,n)` pairs whose families are `Ψ_a` or `Ψ̃_b`.
pub const SU_NONHOLOMORPHIC: &[(&str, &str)] = &[
    ("su(3,2)", "su(3,1)+su(1)+u(1)"),
    ("su(3,2)", "su(1,2)+su(2)+u(1)"),
    ("su(4,2)", "su(4,1)+su(1)+u(1)"),
    ("su(2,3)", "su(1,3)+su(1)+u(1)"),
    ("su(4,3)", "su(4,2)+su(1)+u(1)"),
];
