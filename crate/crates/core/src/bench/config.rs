//! JSON run configuration with strict schema.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::assembly::{BcCode, LoadState, THIN_PLATE_LIMIT};
use crate::micromechanics::{CompositeSpec, HillModuli, IsotropicElastic};

use super::BenchError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Geometry {
    pub length_a: f64,
    pub plate_width_b: f64,
    pub thickness: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixConfig {
    #[serde(rename = "E")]
    pub e: f64,
    pub nu: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CntConfig {
    pub k: f64,
    pub l: f64,
    pub m: f64,
    pub n: f64,
    pub p: f64,
    pub v_cn: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshConfig {
    pub n_strips: usize,
    pub m_sections: usize,
}

impl Default for MeshConfig {
    fn default() -> Self {
        Self {
            n_strips: 8,
            m_sections: 12,
        }
    }
}

impl MeshConfig {
    /// Parses `<strips>x<sections>`, e.g. `8x12`.
    pub fn parse(s: &str) -> Result<Self, BenchError> {
        let bad = || BenchError::config("--mesh", format!("expected <strips>x<sections>, got `{s}`"));
        let (a, b) = s.split_once(['x', 'X']).ok_or_else(bad)?;
        Ok(Self {
            n_strips: a.trim().parse().map_err(|_| bad())?,
            m_sections: b.trim().parse().map_err(|_| bad())?,
        })
    }
}

impl fmt::Display for MeshConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.n_strips, self.m_sections)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoadConfig {
    pub sx0: f64,
    pub sy0: f64,
    pub sxy0: f64,
}

impl Default for LoadConfig {
    fn default() -> Self {
        Self {
            sx0: 0.0,
            sy0: 1.0,
            sxy0: 0.0,
        }
    }
}

/// Which constants normalize the buckling factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormRef {
    /// Matrix `E_m`, `ν_m`.
    Matrix,
    /// Homogenized `E`, `ν`.
    Effective,
}

impl fmt::Display for NormRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Matrix => "matrix",
            Self::Effective => "effective",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default)]
    pub csv: Option<PathBuf>,
    #[serde(default)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepAxis {
    VCn,
    AspectRatio,
    BcCode,
    BOverH,
}

impl SweepAxis {
    pub fn parse(s: &str) -> Result<Self, BenchError> {
        match s {
            "v_cn" => Ok(Self::VCn),
            "aspect_ratio" => Ok(Self::AspectRatio),
            "bc_code" => Ok(Self::BcCode),
            "b_over_h" => Ok(Self::BOverH),
            _ => Err(BenchError::config(
                "sweep.axis",
                format!("unknown axis `{s}` (expected v_cn, aspect_ratio, bc_code or b_over_h)"),
            )),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::VCn => "v_cn",
            Self::AspectRatio => "aspect_ratio",
            Self::BcCode => "bc_code",
            Self::BOverH => "b_over_h",
        }
    }
}

/// One sweep coordinate: a number, or a boundary code for the `bc_code` axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SweepValue {
    Number(f64),
    Code(String),
}

impl fmt::Display for SweepValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Number(v) => write!(f, "{v}"),
            Self::Code(c) => f.write_str(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub axis: SweepAxis,
    pub values: Vec<SweepValue>,
    /// Extra `v_cn` curves; each value of the axis is run for every entry.
    #[serde(default)]
    pub v_cn_series: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "default_case_id")]
    pub case_id: String,
    pub geometry: Geometry,
    pub matrix: MatrixConfig,
    pub cnt: CntConfig,
    #[serde(default)]
    pub mesh: MeshConfig,
    pub bc_code: String,
    #[serde(default)]
    pub load: LoadConfig,
    pub normalization: NormRef,
    #[serde(default)]
    pub output: OutputConfig,
    #[serde(default)]
    pub sweep: Option<SweepConfig>,
    /// Free-form provenance note, carried through untouched.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn default_case_id() -> String {
    "case".to_string()
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, BenchError> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| BenchError::config("<json>", e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, BenchError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| BenchError::config(path.display().to_string(), e.to_string()))?;
        Self::from_json(&text).map_err(|e| match e {
            BenchError::Config { field, message } if field == "<json>" => BenchError::Config {
                field: path.display().to_string(),
                message,
            },
            other => other,
        })
    }

    /// Checks every downstream invariant and names the offending field.
    pub fn validate(&self) -> Result<(), BenchError> {
        let g = &self.geometry;
        positive("geometry.length_a", g.length_a)?;
        positive("geometry.plate_width_b", g.plate_width_b)?;
        positive("geometry.thickness", g.thickness)?;
        if g.thickness / g.plate_width_b > THIN_PLATE_LIMIT * (1.0 + 1e-12) {
            return Err(BenchError::config(
                "geometry.thickness",
                format!(
                    "thickness/width = {} exceeds the thin-plate limit 1/20",
                    g.thickness / g.plate_width_b
                ),
            ));
        }
        positive("matrix.E", self.matrix.e)?;
        if !(self.matrix.nu > -1.0 && self.matrix.nu < 0.5) {
            return Err(BenchError::config(
                "matrix.nu",
                format!("must lie in (-1, 0.5), got {}", self.matrix.nu),
            ));
        }
        let c = &self.cnt;
        for (name, v) in [("cnt.k", c.k), ("cnt.m", c.m), ("cnt.n", c.n), ("cnt.p", c.p)] {
            positive(name, v)?;
        }
        if !c.l.is_finite() {
            return Err(BenchError::config("cnt.l", "must be finite"));
        }
        if c.n * c.k - c.l * c.l <= 0.0 {
            return Err(BenchError::config("cnt.l", "Hill moduli violate n*k - l^2 > 0"));
        }
        if !(c.v_cn >= 0.0 && c.v_cn < 1.0) {
            return Err(BenchError::config(
                "cnt.v_cn",
                format!("must lie in [0, 1), got {}", c.v_cn),
            ));
        }
        if self.mesh.n_strips < 2 {
            return Err(BenchError::config("mesh.n_strips", "at least 2 strips are required"));
        }
        if self.mesh.m_sections < 3 {
            return Err(BenchError::config(
                "mesh.m_sections",
                "at least 3 spline sections are required",
            ));
        }
        self.bc()?;
        LoadState::new(self.load.sx0, self.load.sy0, self.load.sxy0)
            .map_err(|e| BenchError::config("load", e.to_string()))?;
        if let Some(sw) = &self.sweep {
            if sw.values.is_empty() {
                return Err(BenchError::config("sweep.values", "must not be empty"));
            }
            if let Some(series) = &sw.v_cn_series {
                if series.is_empty() {
                    return Err(BenchError::config("sweep.v_cn_series", "must not be empty"));
                }
            }
        }
        Ok(())
    }

    pub fn bc(&self) -> Result<BcCode, BenchError> {
        self.bc_code
            .parse()
            .map_err(|e: crate::Error| BenchError::config("bc_code", e.to_string()))
    }

    pub fn load_state(&self) -> LoadState {
        LoadState {
            sx0: self.load.sx0,
            sy0: self.load.sy0,
            sxy0: self.load.sxy0,
        }
    }

    pub fn composite(&self) -> Result<CompositeSpec, BenchError> {
        let matrix = IsotropicElastic::new(self.matrix.e, self.matrix.nu)
            .map_err(|e| BenchError::config("matrix", e.to_string()))?;
        let c = &self.cnt;
        let cnt = HillModuli::new(c.k, c.l, c.m, c.n, c.p).map_err(|e| BenchError::config("cnt", e.to_string()))?;
        CompositeSpec::new(matrix, cnt, c.v_cn).map_err(|e| BenchError::config("cnt.v_cn", e.to_string()))
    }

    /// Built-in benchmark configuration: unreinforced square plate, `b/h = 100`.
    pub fn benchmark(bc_code: &str) -> Self {
        Self {
            case_id: format!("benchmark-{}", bc_code.to_lowercase()),
            geometry: Geometry {
                length_a: 1.0,
                plate_width_b: 1.0,
                thickness: 0.01,
            },
            matrix: MatrixConfig { e: 2.1, nu: 0.34 },
            // The Hill moduli are inert at zero volume fraction.
            cnt: CntConfig {
                k: 271.0,
                l: 88.0,
                m: 17.0,
                n: 1089.0,
                p: 442.0,
                v_cn: 0.0,
            },
            mesh: MeshConfig::default(),
            bc_code: bc_code.to_string(),
            load: LoadConfig::default(),
            normalization: NormRef::Effective,
            output: OutputConfig::default(),
            sweep: None,
            note: None,
        }
    }
}

fn positive(field: &str, v: f64) -> Result<(), BenchError> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(BenchError::config(
            field,
            format!("must be positive and finite, got {v}"),
        ))
    }
}
