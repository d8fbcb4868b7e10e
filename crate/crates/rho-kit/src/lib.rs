//! rho-kit: exact-arithmetic toolkit for comparing Benoist–Kobayashi
//! ρ-functions of a semisimple subalgebra h inside a classical ambient
//! algebra g, deciding the temperedness trichotomy, and extracting witness
//! cones where the two ρ-functions agree.
//!
//! Everything is computed in exact rational arithmetic: root systems in
//! explicit ε-coordinates, weight multisets with Freudenthal multiplicities,
//! piecewise-linear ρ-difference functions, rational simplex LP, and
//! double-description ray enumeration.

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod cone;
pub mod embedding;
pub mod linalg;
pub mod lp;
pub mod rat;
pub mod rho;
pub mod spec_text;
pub mod weights;

use thiserror::Error;

/// Toolkit-wide error type.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RhoError {
    /// Invalid user input (bad type/rank, malformed module, point outside a).
    #[error("{0}")]
    InvalidInput(String),
    /// Parse error in the pair-spec grammar, with 1-based position.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    /// An internal arithmetic invariant broke (should never happen).
    #[error("internal error: {0}")]
    Internal(String),
}
