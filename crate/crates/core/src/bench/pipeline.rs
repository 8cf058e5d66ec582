use std::io::Write;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::assembly::{assemble_global, AssembledSystem, PlateModel};
use crate::eigen::{normalized_factor, smallest_critical_load, CriticalLoad};
use crate::micromechanics::{homogenize, Homogenized, IsotropicElastic};
use crate::Error;

use super::config::{MeshConfig, NormRef, RunConfig};
use super::BenchError;

/// Outcome of one analysis.
#[derive(Debug, Clone)]
pub struct BucklingResult {
    pub case_id: String,
    pub critical: CriticalLoad,
    pub lambda: f64,
    pub norm_ref: NormRef,
    pub homogenized: Homogenized,
    pub model: PlateModel,
    pub mesh: MeshConfig,
    pub n_dofs: usize,
    pub runtime_ms: f64,
    pub v_cn: f64,
}

impl BucklingResult {
    pub fn sigma_cr(&self) -> f64 {
        self.critical.sigma_cr
    }

    pub fn row(&self) -> ResultRow {
        ResultRow {
            case_id: self.case_id.clone(),
            length_a: self.model.length_a,
            plate_width_b: self.model.plate_width_b,
            thickness: self.model.thickness,
            n_strips: self.mesh.n_strips,
            m_sections: self.mesh.m_sections,
            bc_code: self.model.bc.to_string(),
            v_cn: self.v_cn,
            e_eff: self.homogenized.effective.e,
            nu_eff: self.homogenized.effective.nu,
            sigma_cr: self.critical.sigma_cr,
            lambda: self.lambda,
            norm_ref: self.norm_ref.to_string(),
            runtime_ms: self.runtime_ms,
        }
    }
}

/// One CSV record. Column order is the documented schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub case_id: String,
    pub length_a: f64,
    pub plate_width_b: f64,
    pub thickness: f64,
    pub n_strips: usize,
    pub m_sections: usize,
    pub bc_code: String,
    pub v_cn: f64,
    #[serde(rename = "E_eff")]
    pub e_eff: f64,
    pub nu_eff: f64,
    pub sigma_cr: f64,
    pub lambda: f64,
    pub norm_ref: String,
    pub runtime_ms: f64,
}

pub const CSV_HEADER: [&str; 14] = [
    "case_id",
    "length_a",
    "plate_width_b",
    "thickness",
    "n_strips",
    "m_sections",
    "bc_code",
    "v_cn",
    "E_eff",
    "nu_eff",
    "sigma_cr",
    "lambda",
    "norm_ref",
    "runtime_ms",
];

fn numerical(field: &str) -> impl Fn(Error) -> BenchError + '_ {
    move |e| match e {
        Error::Domain(msg) => BenchError::config(field, msg),
        source => BenchError::Numerical {
            field: field.to_string(),
            source,
        },
    }
}

/// Builds the discretized plate for a config.
pub fn build_model(config: &RunConfig) -> Result<(Homogenized, PlateModel), BenchError> {
    config.validate()?;
    let h = homogenize(&config.composite()?).map_err(numerical("cnt"))?;
    let g = &config.geometry;
    let model = PlateModel::new(
        g.plate_width_b,
        g.length_a,
        g.thickness,
        h.q,
        config.mesh.n_strips,
        config.mesh.m_sections,
        config.bc()?,
        config.load_state(),
    )
    .map_err(numerical("geometry"))?;
    Ok((h, model))
}

pub fn assemble(model: &PlateModel) -> Result<AssembledSystem, BenchError> {
    assemble_global(model).map_err(numerical("bc_code"))
}

/// Homogenize, assemble, solve and normalize.
pub fn run_buckle(config: &RunConfig) -> Result<BucklingResult, BenchError> {
    let start = Instant::now();
    let (homogenized, model) = build_model(config)?;
    let sys = assemble(&model)?;
    let critical = smallest_critical_load(&sys).map_err(|e| match e {
        Error::Mechanism { .. } => numerical("bc_code")(e),
        Error::NoBuckling => numerical("load")(e),
        other => numerical("mesh")(other),
    })?;
    let reference = match config.normalization {
        NormRef::Matrix => IsotropicElastic {
            e: config.matrix.e,
            nu: config.matrix.nu,
        },
        NormRef::Effective => homogenized.effective,
    };
    let lambda = normalized_factor(
        critical.sigma_cr,
        reference.e,
        reference.nu,
        model.plate_width_b,
        model.thickness,
    );
    Ok(BucklingResult {
        case_id: config.case_id.clone(),
        critical,
        lambda,
        norm_ref: config.normalization,
        homogenized,
        n_dofs: sys.n_dofs(),
        mesh: config.mesh,
        model,
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
        v_cn: config.cnt.v_cn,
    })
}

/// Writes rows under the fixed header.
pub fn write_rows<W: Write>(out: W, rows: &[ResultRow]) -> Result<(), BenchError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER).map_err(|e| BenchError::io("csv", e))?;
    for r in rows {
        w.serialize(r).map_err(|e| BenchError::io("csv", e))?;
    }
    w.flush().map_err(|e| BenchError::io("csv", e))
}

/// Reads rows back, skipping error markers.
pub fn read_rows<R: std::io::Read>(input: R) -> Result<Vec<ResultRow>, BenchError> {
    let mut r = csv::ReaderBuilder::new().flexible(true).from_reader(input);
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(|e| BenchError::io("csv", e))?;
        if rec.get(0).is_some_and(|c| c.starts_with(super::sweep::ERROR_MARKER)) {
            continue;
        }
        let row: ResultRow = rec
            .deserialize(Some(&csv::StringRecord::from(CSV_HEADER.to_vec())))
            .map_err(|e| BenchError::io("csv", e))?;
        rows.push(row);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip_keeps_schema() {
        let row = run_buckle(&RunConfig::benchmark("SSSS")).unwrap().row();
        let mut buf = Vec::new();
        write_rows(&mut buf, std::slice::from_ref(&row)).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text.lines().next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(read_rows(buf.as_slice()).unwrap(), vec![row]);
    }

    #[test]
    fn mechanism_reports_bc_field() {
        let mut cfg = RunConfig::benchmark("SSSS");
        cfg.bc_code = "FFFF".into();
        match run_buckle(&cfg) {
            Err(BenchError::Numerical {
                field,
                source: Error::Mechanism { bc_code },
            }) => {
                assert_eq!(field, "bc_code");
                assert_eq!(bc_code.as_deref(), Some("FFFF"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tension_cannot_buckle() {
        let mut cfg = RunConfig::benchmark("SSSS");
        cfg.load.sy0 = -1.0;
        match run_buckle(&cfg) {
            Err(e @ BenchError::Numerical { .. }) => {
                assert_eq!(e.exit_code(), super::super::exit::NUMERICAL_FAILURE);
                assert!(e.to_string().contains("load"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
