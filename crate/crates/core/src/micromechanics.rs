//! Mori–Tanaka homogenization for a matrix filled with randomly oriented,
//! straight carbon nanotubes.
//!
//! Random orientation makes the composite isotropic, so the whole model
//! reduces to closed forms for the effective bulk and shear moduli. The
//! nanotube enters only through its five Hill moduli. All moduli are in GPa.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Isotropic Young's modulus (GPa) and Poisson's ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsotropicElastic {
    pub e: f64,
    pub nu: f64,
}

impl IsotropicElastic {
    pub fn new(e: f64, nu: f64) -> Result<Self> {
        if !(e.is_finite() && e > 0.0) {
            return Err(Error::Domain(format!("Young's modulus must be positive, got {e}")));
        }
        if !(nu > -1.0 && nu < 0.5) {
            return Err(Error::Domain(format!(
                "Poisson's ratio must lie in (-1, 0.5), got {nu}"
            )));
        }
        Ok(Self { e, nu })
    }
}

/// Bulk modulus `k` and shear modulus `g`, both GPa.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BulkShear {
    pub k: f64,
    pub g: f64,
}

impl BulkShear {
    pub fn new(k: f64, g: f64) -> Result<Self> {
        if !(k.is_finite() && k > 0.0 && g.is_finite() && g > 0.0) {
            return Err(Error::Domain(format!(
                "bulk and shear moduli must be positive, got K={k}, G={g}"
            )));
        }
        Ok(Self { k, g })
    }
}

/// Hill's moduli of a transversely isotropic fibre (GPa).
///
/// `k` plane-strain bulk, `l` cross, `m` transverse shear, `n` axial under
/// constrained lateral strain, `p` axial shear.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HillModuli {
    pub k: f64,
    pub l: f64,
    pub m: f64,
    pub n: f64,
    pub p: f64,
}

impl HillModuli {
    pub fn new(k: f64, l: f64, m: f64, n: f64, p: f64) -> Result<Self> {
        let h = Self { k, l, m, n, p };
        h.validate()?;
        Ok(h)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.k, self.l, self.m, self.n, self.p];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("Hill moduli must be finite".into()));
        }
        if self.k <= 0.0 || self.m <= 0.0 || self.n <= 0.0 || self.p <= 0.0 {
            return Err(Error::Domain("Hill moduli k, m, n, p must be positive".into()));
        }
        if self.n * self.k - self.l * self.l <= 0.0 {
            return Err(Error::Domain("Hill moduli violate n*k - l^2 > 0".into()));
        }
        Ok(())
    }

    /// Hill moduli of an inclusion made of the matrix material itself.
    pub fn isotropic_equivalent(bs: BulkShear) -> Self {
        let BulkShear { k, g } = bs;
        Self {
            k: k + g / 3.0,
            l: k - 2.0 * g / 3.0,
            m: g,
            n: k + 4.0 * g / 3.0,
            p: g,
        }
    }
}

/// Matrix phase, nanotube phase and nanotube volume fraction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompositeSpec {
    pub matrix: IsotropicElastic,
    pub cnt: HillModuli,
    pub v_cn: f64,
}

impl CompositeSpec {
    pub fn new(matrix: IsotropicElastic, cnt: HillModuli, v_cn: f64) -> Result<Self> {
        let spec = Self { matrix, cnt, v_cn };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        IsotropicElastic::new(self.matrix.e, self.matrix.nu)?;
        self.cnt.validate()?;
        if !(self.v_cn >= 0.0 && self.v_cn < 1.0) {
            return Err(Error::Domain(format!(
                "CNT volume fraction must lie in [0, 1), got {}",
                self.v_cn
            )));
        }
        Ok(())
    }

    /// Matrix volume fraction.
    pub fn v_m(&self) -> f64 {
        1.0 - self.v_cn
    }
}

/// The four orientation-averaged concentration terms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MtIntermediates {
    pub alpha_cn: f64,
    pub beta_cn: f64,
    /// GPa
    pub delta_cn: f64,
    /// GPa
    pub eta_cn: f64,
}

/// Plane-stress reduced stiffness entries (GPa).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReducedStiffness {
    pub q11: f64,
    pub q12: f64,
    pub q22: f64,
    pub q66: f64,
}

impl ReducedStiffness {
    /// Row-major 3×3 constitutive matrix.
    pub fn matrix(&self) -> [[f64; 3]; 3] {
        [
            [self.q11, self.q12, 0.0],
            [self.q12, self.q22, 0.0],
            [0.0, 0.0, self.q66],
        ]
    }
}

pub fn to_bulk_shear(mat: IsotropicElastic) -> Result<BulkShear> {
    let IsotropicElastic { e, nu } = mat;
    if !(nu > -1.0 && nu < 0.5) {
        return Err(Error::Domain(format!(
            "Poisson's ratio {nu} is outside (-1, 0.5); bulk modulus undefined"
        )));
    }
    Ok(BulkShear {
        k: e / (3.0 * (1.0 - 2.0 * nu)),
        g: e / (2.0 * (1.0 + nu)),
    })
}

pub fn effective_e_nu(kg: BulkShear) -> IsotropicElastic {
    let BulkShear { k, g } = kg;
    IsotropicElastic {
        e: 9.0 * k * g / (3.0 * k + g),
        nu: (3.0 * k - 2.0 * g) / (6.0 * k + 2.0 * g),
    }
}

fn nonzero(value: f64, term: &str) -> Result<f64> {
    if value == 0.0 || !value.is_finite() {
        Err(Error::Domain(format!(
            "vanishing denominator `{term}` in Mori–Tanaka terms"
        )))
    } else {
        Ok(value)
    }
}

/// Concentration terms from the matrix moduli and nanotube Hill moduli.
pub fn mt_intermediates(matrix: BulkShear, cnt: &HillModuli) -> Result<MtIntermediates> {
    let (km, gm) = (matrix.k, matrix.g);
    let HillModuli { k, l, m, n, p } = *cnt;

    let gm_k = nonzero(gm + k, "G_m + k_CN")?;
    let gm_p = nonzero(gm + p, "G_m + p_CN")?;
    let beta_den = nonzero(
        gm * (3.0 * km + gm) + m * (3.0 * km + 7.0 * gm),
        "G_m(3K_m + G_m) + m_CN(3K_m + 7G_m)",
    )?;
    let eta_den = nonzero(
        3.0 * km * (m + gm) + gm * (7.0 * m + gm),
        "3K_m(m_CN + G_m) + G_m(7m_CN + G_m)",
    )?;

    let alpha_cn = (3.0 * (km + gm) + k - l) / (3.0 * gm_k);
    // The numerator of the third term carries G_m in both products, as printed.
    let beta_cn = ((4.0 * gm + 2.0 * k + l) / (3.0 * gm_k)
        + 4.0 * gm / gm_p
        + 2.0 * (gm * (3.0 * km + gm) + gm * (3.0 * km + 7.0 * gm)) / beta_den)
        / 5.0;
    let delta_cn = (n + 2.0 * l + (2.0 * k + l) * (3.0 * km + 2.0 * gm - l) / gm_k) / 3.0;
    let eta_cn = (2.0 / 3.0 * (n - l)
        + 8.0 * gm * p / gm_p
        + 8.0 * m * gm * (3.0 * km + 4.0 * gm) / eta_den
        + 2.0 * (k - l) * (2.0 * gm + l) / (3.0 * gm_k))
        / 5.0;

    Ok(MtIntermediates {
        alpha_cn,
        beta_cn,
        delta_cn,
        eta_cn,
    })
}

/// Effective bulk and shear moduli of the randomly reinforced composite.
pub fn mori_tanaka_random(spec: &CompositeSpec) -> Result<(BulkShear, MtIntermediates)> {
    spec.validate()?;
    let matrix = to_bulk_shear(spec.matrix)?;
    let t = mt_intermediates(matrix, &spec.cnt)?;
    let (v, vm) = (spec.v_cn, spec.v_m());
    let (km, gm) = (matrix.k, matrix.g);

    let k_den = nonzero(vm + v * t.alpha_cn, "V_m + V_CN alpha_CN")?;
    let g_den = nonzero(vm + v * t.beta_cn, "V_m + V_CN beta_CN")?;
    let k = km + v * (t.delta_cn - 3.0 * km * t.alpha_cn) / (3.0 * k_den);
    let g = gm + v * (t.eta_cn - 2.0 * gm * t.beta_cn) / (2.0 * g_den);

    Ok((BulkShear::new(k, g)?, t))
}

/// Plane-stress stiffness with the shear entry taken from the effective shear modulus.
pub fn reduced_stiffness(mat: IsotropicElastic, g: f64) -> Result<ReducedStiffness> {
    let IsotropicElastic { e, nu } = mat;
    if nu.is_nan() || nu.abs() >= 1.0 {
        return Err(Error::Domain(format!("|nu| must be below 1, got {nu}")));
    }
    let q11 = e / (1.0 - nu * nu);
    Ok(ReducedStiffness {
        q11,
        q12: nu * q11,
        q22: q11,
        q66: g,
    })
}

/// Effective constants, bulk/shear pair and reduced stiffness in one pass.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Homogenized {
    pub effective: IsotropicElastic,
    pub bulk_shear: BulkShear,
    pub intermediates: MtIntermediates,
    pub q: ReducedStiffness,
}

pub fn homogenize(spec: &CompositeSpec) -> Result<Homogenized> {
    let (bulk_shear, intermediates) = mori_tanaka_random(spec)?;
    let effective = effective_e_nu(bulk_shear);
    let q = reduced_stiffness(effective, bulk_shear.g)?;
    Ok(Homogenized {
        effective,
        bulk_shear,
        intermediates,
        q,
    })
}
