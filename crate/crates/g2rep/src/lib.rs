//! The group G₂ through its 7-dimensional representation.
//!
//! Basis vectors v1..v7 carry the weights ω₁, ω₁−α₁, ω₁−α₁−α₂, 0 and their
//! negatives, highest first, with ω₁ = 2α₁+α₂ (α₁ short). Regular functions
//! are polynomials in the 49 matrix entries `g11..g77`; the raising and
//! lowering operators act on them as derivations induced by right
//! multiplication, and the named weight vectors are built from Δ^{ω₁} = g11 and
//! Δ^{ω₂} = g11·g22 − g12·g21 by chains of lowering operators.

pub mod chevalley;
pub mod degree;
mod error;
pub mod group;
pub mod mat;
pub mod registry;
pub mod regfun;

pub use chevalley::{chevalley_matrices, Chevalley};
pub use degree::{degree_of_weight, infer_degree, infer_weight, PointFunction, TorusProbe, TorusWeight};
pub use error::G2Error;
pub use group::{
    generic_group_point, one_param, random_group_point, symbolic_point, torus_element, weyl_lift, weyl_lift_word,
    GroupPoint, Sign,
};
pub use mat::Mat;
pub use registry::{named_function, registry, NamedFunction, Registry};
pub use regfun::{generalized_minor, lowering_derivation, raising_derivation, RegFunction};
