//! Smallest positive critical load of `K φ = σ Kg φ`.
//!
//! `K` is factored as `L Lᵀ` and the pencil is recast as the standard
//! symmetric problem `L⁻¹ Kg L⁻ᵀ y = μ y`. The critical stress is the
//! reciprocal of the largest positive `μ`.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::Serialize;

use crate::assembly::AssembledSystem;
use crate::error::{Error, Result};

/// Relative gap under which the next eigenvalue counts as coincident.
pub const MULTIPLICITY_TOL: f64 = 1e-6;

/// Residual bound relative to `(‖K‖ + σ‖Kg‖)·‖φ‖`.
pub const RESIDUAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriticalLoad {
    /// Critical stress multiplier of the reference load (GPa for a unit load).
    pub sigma_cr: f64,
    /// Buckling mode in the reduced DOF space, unit max-norm.
    pub mode: Vec<f64>,
    /// Number of eigenvalues within `MULTIPLICITY_TOL` of the critical one.
    pub multiplicity: usize,
    /// Next larger critical multiplier, if any.
    pub next_sigma: Option<f64>,
    pub residual: f64,
}

pub fn smallest_critical_load(sys: &AssembledSystem) -> Result<CriticalLoad> {
    solve_pencil(&sys.k, &sys.kg).map_err(|e| match e {
        Error::Mechanism { .. } => Error::Mechanism {
            bc_code: Some(sys.bc.to_string()),
        },
        other => other,
    })
}

/// Solves the pencil `(K, Kg)` directly; `K` must be symmetric positive definite.
pub fn solve_pencil(k: &DMatrix<f64>, kg: &DMatrix<f64>) -> Result<CriticalLoad> {
    let n = k.nrows();
    if n == 0 || k.shape() != kg.shape() || kg.nrows() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: kg.nrows(),
        });
    }
    let chol = k.clone().cholesky().ok_or(Error::Mechanism { bc_code: None })?;
    let l = chol.l();
    let max_diag = (0..n).map(|i| k[(i, i)]).fold(0.0f64, f64::max);
    if (0..n).any(|i| l[(i, i)] * l[(i, i)] <= 1e-12 * max_diag) {
        return Err(Error::Mechanism { bc_code: None });
    }

    let x = l.solve_lower_triangular(kg).expect("nonsingular factor");
    let mut c = l.solve_lower_triangular(&x.transpose()).expect("nonsingular factor");
    let ct = c.transpose();
    c += ct;
    c *= 0.5;

    let eig = SymmetricEigen::new(c);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let mu_max = eig.eigenvalues[order[0]];
    let scale = eig.eigenvalues.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if mu_max.is_nan() || mu_max <= 0.0 || mu_max <= 1e-12 * scale {
        return Err(Error::NoBuckling);
    }
    let sigma_cr = 1.0 / mu_max;
    let multiplicity = order
        .iter()
        .take_while(|&&i| (mu_max - eig.eigenvalues[i]) <= MULTIPLICITY_TOL * mu_max)
        .count();
    let next_sigma = order
        .get(1)
        .map(|&i| eig.eigenvalues[i])
        .filter(|&mu| mu > 1e-12 * scale)
        .map(|mu| 1.0 / mu);

    let y: DVector<f64> = eig.eigenvectors.column(order[0]).into_owned();
    let mut phi = l.transpose().solve_upper_triangular(&y).expect("nonsingular factor");
    let (imax, _) = phi.iamax_full();
    let peak = phi[imax];
    phi /= peak;

    let r = k * &phi - kg * &phi * sigma_cr;
    let residual = r.norm();
    let bound = RESIDUAL_TOL * (k.norm() + sigma_cr * kg.norm()) * phi.norm();
    if residual > bound {
        return Err(Error::Residual { residual, bound });
    }

    Ok(CriticalLoad {
        sigma_cr,
        mode: phi.iter().copied().collect(),
        multiplicity,
        next_sigma,
        residual,
    })
}

/// Number of negative eigenvalues of `K - σ·Kg`.
pub fn negative_count(k: &DMatrix<f64>, kg: &DMatrix<f64>, sigma: f64) -> usize {
    let a = k - kg * sigma;
    SymmetricEigen::new(a).eigenvalues.iter().filter(|&&v| v < 0.0).count()
}

/// Normalized buckling factor `σ_cr·12(1-ν²)·b² / (π²·E·t²)`.
///
/// Equivalent to `N_cr·12(1-ν²)·b² / (π²·E·t³)` with the stress resultant
/// `N_cr = σ_cr·t`, which makes the classical simply supported square plate
/// come out at exactly 4.
pub fn normalized_factor(sigma_cr: f64, e_ref: f64, nu_ref: f64, plate_width_b: f64, thickness: f64) -> f64 {
    let n_cr = sigma_cr * thickness;
    n_cr * 12.0 * (1.0 - nu_ref * nu_ref) * plate_width_b * plate_width_b / (PI * PI * e_ref * thickness.powi(3))
}
