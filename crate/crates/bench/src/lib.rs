//! Shared fixtures for the criterion benches.

use symbolpair::catalog;
use symbolpair::CodeSpec;

/// A named code for one bench case.
pub struct Fixture {
    pub name: &'static str,
    pub spec: CodeSpec,
}

/// Length-21 codes from the `3p` family at p = 7, from high to low rate.
pub fn c3p_fixtures() -> Vec<Fixture> {
    [("c3p-2-1-0", [2, 1, 0]), ("c3p-4-2-1", [4, 2, 1]), ("c3p-4-3-2", [4, 3, 2]), ("c3p-5-4-4", [5, 4, 4])]
        .into_iter()
        .map(|(name, r)| Fixture { name, spec: catalog::c3p(7, r).expect("valid 3p parameters").spec })
        .collect()
}

/// Small enough that full enumeration finishes quickly.
pub fn small_fixtures() -> Vec<Fixture> {
    [("c3p-p7-5-4-4", 7, [5, 4, 4]), ("c3p-p13-12-12-11", 13, [12, 12, 11])]
        .into_iter()
        .map(|(name, p, r)| Fixture { name, spec: catalog::c3p(p, r).expect("valid 3p parameters").spec })
        .collect()
}
