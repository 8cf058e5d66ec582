//! Batch front-end: configs, single runs, sweeps, CSV/SVG output and the
//! benchmark validation suite.

pub mod config;
pub mod pipeline;
pub mod svg;
pub mod sweep;
pub mod validate;

use thiserror::Error;

pub use config::{MeshConfig, NormRef, RunConfig, SweepAxis, SweepConfig, SweepValue};
pub use pipeline::{run_buckle, BucklingResult, ResultRow};
pub use sweep::{run_sweep, SweepSpec};
pub use validate::{validate_benchmarks, BenchmarkEntry, BenchmarkReport, BENCHMARK_REFERENCES};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VALIDATION_FAILURE: i32 = 1;
    pub const CONFIG_ERROR: i32 = 2;
    pub const NUMERICAL_FAILURE: i32 = 3;
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("numerical failure at `{field}`: {source}")]
    Numerical {
        field: String,
        #[source]
        source: crate::Error,
    },

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },

    #[error("validation failed: {0}")]
    Validation(String),
}

impl BenchError {
    pub fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Self::Config {
            field: field.into(),
            message: message.into(),
        }
    }

    pub fn io(path: impl std::fmt::Display, err: impl std::fmt::Display) -> Self {
        Self::Io {
            path: path.to_string(),
            message: err.to_string(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config { .. } | Self::Io { .. } => exit::CONFIG_ERROR,
            Self::Numerical { .. } => exit::NUMERICAL_FAILURE,
            Self::Validation(_) => exit::VALIDATION_FAILURE,
        }
    }
}
