//! Seeds as functions on G₂: the bridge from cluster variables to regular
//! functions, exact identity checks, and the scenario suites built on them.

pub mod bridge;
pub mod check;
pub mod config;
pub mod oracle;
pub mod seeds;
mod error;
pub mod report;
pub mod scenarios;
pub mod suite;

pub use bridge::{bridge_evaluate, Assignment, Carrier, Expr, PointValues, Target};
pub use check::{check_equal, check_zero, infer_degrees};
pub use config::{Config, Mode};
pub use error::VerifyError;
pub use report::{CheckReport, Counterexample, Status};
pub use suite::{run_suite, Options, Suite};
