//! Sparse multivariate Laurent polynomials with arbitrary-precision rational
//! coefficients.
//!
//! Polynomials live in a closed variable universe ([`VarSet`]) fixed at
//! construction. Terms are kept in a map keyed by [`Monomial`], which orders
//! exponent vectors by graded lexicographic order; that order drives both the
//! canonical text form and exact division.

mod error;
mod mono;
mod poly;
mod rational;
mod ring;
mod text;

pub use error::LaurentError;
pub use mono::Monomial;
pub use poly::{LaurentPoly, VarSet};
pub use rational::{parse_rational, rat, Rational};
pub use ring::Coeff;

use std::collections::BTreeMap;

/// Coefficient-wise sum.
pub fn lp_add(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    a.try_add(b)
}

/// Distributive product.
pub fn lp_mul(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    a.try_mul(b)
}

/// Exact quotient in the Laurent ring, or an error if none exists.
pub fn lp_exact_div(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    num.exact_div(den)
}

/// Substitute rational values for the variables by name.
pub fn lp_eval(p: &LaurentPoly, assignment: &BTreeMap<String, Rational>) -> Result<Rational, LaurentError> {
    p.eval_named(assignment)
}

/// Exponent vector of a single-term polynomial.
pub fn lp_monomial_exponents(p: &LaurentPoly) -> Option<Vec<i64>> {
    p.monomial_exponents()
}
