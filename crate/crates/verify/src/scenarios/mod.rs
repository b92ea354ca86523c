//! One module per group of claims. Every scenario returns its reports
//! unsorted; [`crate::suite`] sorts them.

pub mod belt;
pub mod cmatrix;
pub mod criterion;
pub mod dictionary;
pub mod engine;
pub mod figures;
pub mod gls;
pub mod identities;
pub mod lemmas;
pub mod minors;
pub mod relabel;
pub mod representation;

use crate::{Assignment, CheckReport, Counterexample, Target, VerifyError};
use laurent::LaurentPoly;

/// Parse a registry expression that is part of the program text.
pub(crate) fn expr(text: &str) -> Target {
    Target::expr(text).unwrap_or_else(|e| panic!("expression {text:?}: {e}"))
}

pub(crate) fn bridged(p: &LaurentPoly, a: &Assignment) -> Target {
    Target::bridged(p, a)
}

/// A check that could not be set up (a mutation or lookup failed) is a failure.
pub(crate) fn setup_failure(id: &str, claim: &str, e: &VerifyError) -> CheckReport {
    CheckReport::fail(id, claim, 0, format!("setup failed: {e}"), Counterexample::new(&[]))
}
