use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An input lies outside the domain of a formula.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid boundary condition code `{0}` (expected four letters from S, C, F)")]
    InvalidBcCode(String),

    /// The constrained stiffness matrix is singular or indefinite.
    #[error("unconstrained mechanism{}", match .bc_code { Some(c) => format!(" for boundary code {c}"), None => String::new() })]
    Mechanism { bc_code: Option<String> },

    #[error("load state cannot cause buckling")]
    NoBuckling,

    #[error("eigen residual {residual:e} exceeds bound {bound:e}")]
    Residual { residual: f64, bound: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
