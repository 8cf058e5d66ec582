//! Elastic buckling of thin rectangular plates made of a polymer reinforced
//! with randomly oriented single-walled carbon nanotubes.
//!
//! The pipeline is: Mori–Tanaka homogenization ([`micromechanics`]) →
//! B3-spline finite strip discretization ([`spline`], [`assembly`]) →
//! generalized eigenvalue analysis ([`eigen`]). [`bench`] drives single
//! runs, sweeps and the benchmark suite from JSON configs.

pub mod assembly;
pub mod bench;
pub mod eigen;
pub mod error;
pub mod micromechanics;
pub mod quadrature;
pub mod spline;

pub use error::{Error, Result};
