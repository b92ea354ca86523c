//! Exchange matrices and seeds with Fomin–Zelevinsky mutation, the valued
//! quiver encoding used for the G₂ seeds, the bipartite belt, degree
//! propagation and the frozen-to-mutable arrow table ("C-matrix").
//!
//! Mutation indices are row labels of mutable vertices. Sequences passed to
//! [`Seed::apply_sequence`] are applied leftmost first; [`Seed::apply_composition`]
//! takes composition order instead, so `[a, b]` means μ_a μ_b: `b` first.

pub mod belt;
pub mod catalog;
pub mod cmatrix;
pub mod degree;
mod error;
pub mod matrix;
pub mod quiver;
pub mod random;
pub mod seed;

pub use belt::Belt;
pub use cmatrix::CMatrix;
pub use degree::{propagate_degrees, DegreeVector};
pub use error::MutationError;
pub use matrix::{is_acyclic, matrix_rank, skew_symmetrizer, ExchangeMatrix};
pub use quiver::ValuedQuiver;
pub use seed::{Seed, SeedJson};
