//! Exact enumeration and symbolic machinery for the quasisymmetric
//! generating functions of pattern-avoiding permutation classes.
//!
//! The crate computes Q_n(Pi) — the sum of fundamental quasisymmetric
//! functions over the descent sets of the avoiders of a pattern set —
//! decides symmetry and Schur nonnegativity exactly, and packages the
//! bounded-range checkers behind a stable claim registry (see [`lab`]).

pub mod config;
pub mod error;
pub mod lab;
pub mod perm;
pub mod qsym;
pub mod tableau;

pub use config::Limits;
pub use error::{Error, Result};
