//! Parametric sweeps over one axis, optionally crossed with a `v_cn` series.

use std::io::Write;

use rayon::prelude::*;

use super::config::{RunConfig, SweepAxis, SweepConfig, SweepValue};
use super::pipeline::{run_buckle, write_rows, ResultRow};
use super::svg::{LineChart, Series};
use super::BenchError;

/// Prefix of the `case_id` cell that marks an aborted sweep.
pub const ERROR_MARKER: &str = "ERROR";

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axis: SweepAxis,
    pub values: Vec<SweepValue>,
    pub v_cn_series: Option<Vec<f64>>,
    pub base: RunConfig,
}

/// Rows completed before the first failure, and that failure if any.
#[derive(Debug)]
pub struct SweepOutput {
    pub axis: SweepAxis,
    pub rows: Vec<ResultRow>,
    pub failure: Option<(String, BenchError)>,
}

impl SweepSpec {
    pub fn from_config(base: RunConfig, sweep: SweepConfig) -> Self {
        Self {
            axis: sweep.axis,
            values: sweep.values,
            v_cn_series: sweep.v_cn_series,
            base,
        }
    }

    /// Parses a comma-separated `--values` list for this axis.
    pub fn parse_values(axis: SweepAxis, list: &str) -> Result<Vec<SweepValue>, BenchError> {
        let values: Vec<SweepValue> = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| match axis {
                SweepAxis::BcCode => Ok(SweepValue::Code(s.to_string())),
                _ => s
                    .parse::<f64>()
                    .map(SweepValue::Number)
                    .map_err(|_| BenchError::config("sweep.values", format!("`{s}` is not a number"))),
            })
            .collect::<Result<_, _>>()?;
        if values.is_empty() {
            return Err(BenchError::config("sweep.values", "must not be empty"));
        }
        Ok(values)
    }

    /// One validated config per sweep point, in output order.
    pub fn configs(&self) -> Result<Vec<RunConfig>, BenchError> {
        if self.values.is_empty() {
            return Err(BenchError::config("sweep.values", "must not be empty"));
        }
        let series: Vec<Option<f64>> = match &self.v_cn_series {
            Some(s) if self.axis != SweepAxis::VCn => s.iter().copied().map(Some).collect(),
            _ => vec![None],
        };
        let mut out = Vec::new();
        for v_cn in &series {
            for (i, value) in self.values.iter().enumerate() {
                let mut cfg = self.base.clone();
                cfg.sweep = None;
                if let Some(v) = v_cn {
                    cfg.cnt.v_cn = *v;
                }
                self.apply(&mut cfg, value, i)?;
                let mut id = format!("{}-{}={}", self.base.case_id, self.axis.name(), value);
                if let Some(v) = v_cn {
                    id.push_str(&format!("-v_cn={v}"));
                }
                cfg.case_id = id;
                cfg.validate()?;
                out.push(cfg);
            }
        }
        Ok(out)
    }

    fn apply(&self, cfg: &mut RunConfig, value: &SweepValue, i: usize) -> Result<(), BenchError> {
        let field = format!("sweep.values[{i}]");
        let vcn_axis = self.axis == SweepAxis::VCn;
        let number = || match value {
            SweepValue::Number(v) if v.is_finite() && (*v > 0.0 || vcn_axis && *v >= 0.0) => Ok(*v),
            _ => Err(BenchError::config(
                field.clone(),
                format!("invalid value `{value}` for {}", self.axis.name()),
            )),
        };
        match self.axis {
            SweepAxis::VCn => cfg.cnt.v_cn = number()?,
            SweepAxis::AspectRatio => {
                let ratio = number()?;
                cfg.geometry.length_a = ratio * cfg.geometry.plate_width_b;
                // Keep the knot spacing of the base mesh on longer plates.
                let base = self.base.mesh.m_sections;
                cfg.mesh.m_sections = base.max((base as f64 * ratio).ceil() as usize);
            }
            SweepAxis::BOverH => cfg.geometry.thickness = cfg.geometry.plate_width_b / number()?,
            SweepAxis::BcCode => match value {
                SweepValue::Code(c) => cfg.bc_code = c.clone(),
                SweepValue::Number(_) => return Err(BenchError::config(field, "bc_code sweep values must be strings")),
            },
        }
        Ok(())
    }
}

/// Runs every sweep point (in parallel) and keeps rows in spec order up to
/// the first failure.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepOutput, BenchError> {
    let configs = spec.configs()?;
    let results: Vec<_> = configs.par_iter().map(run_buckle).collect();
    let mut rows = Vec::with_capacity(results.len());
    let mut failure = None;
    for (cfg, res) in configs.iter().zip(results) {
        match res {
            Ok(r) => rows.push(r.row()),
            Err(e) => {
                failure = Some((cfg.case_id.clone(), e));
                break;
            }
        }
    }
    Ok(SweepOutput {
        axis: spec.axis,
        rows,
        failure,
    })
}

impl SweepOutput {
    /// Writes completed rows and, after an abort, a trailing error marker row.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<(), BenchError> {
        write_rows(&mut out, &self.rows)?;
        if let Some((case, err)) = &self.failure {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut out);
            let msg = format!("{ERROR_MARKER} {case}: {err}");
            let mut rec = vec![msg];
            rec.resize(super::pipeline::CSV_HEADER.len(), String::new());
            w.write_record(&rec).map_err(|e| BenchError::io("csv", e))?;
            w.flush().map_err(|e| BenchError::io("csv", e))?;
        }
        Ok(())
    }

    /// λ against the sweep axis, one curve per `v_cn`. `None` for the
    /// categorical `bc_code` axis.
    pub fn chart(&self) -> Option<LineChart> {
        let x_of = |r: &ResultRow| match self.axis {
            SweepAxis::VCn => Some(r.v_cn),
            SweepAxis::AspectRatio => Some(r.length_a / r.plate_width_b),
            SweepAxis::BOverH => Some(r.plate_width_b / r.thickness),
            SweepAxis::BcCode => None,
        };
        let mut series: Vec<Series> = Vec::new();
        if self.axis == SweepAxis::VCn {
            let mut by_code: Vec<Series> = Vec::new();
            for r in &self.rows {
                let label = r.bc_code.clone();
                let point = (x_of(r)?, r.lambda);
                match by_code.iter_mut().find(|s| s.label == label) {
                    Some(s) => s.points.push(point),
                    None => by_code.push(Series {
                        label,
                        points: vec![point],
                    }),
                }
            }
            series = by_code;
        } else {
            for r in &self.rows {
                let label = format!("V_CN = {}", r.v_cn);
                let point = (x_of(r)?, r.lambda);
                match series.iter_mut().find(|s| s.label == label) {
                    Some(s) => s.points.push(point),
                    None => series.push(Series {
                        label,
                        points: vec![point],
                    }),
                }
            }
        }
        let x_label = match self.axis {
            SweepAxis::VCn => "V_CN",
            SweepAxis::AspectRatio => "a/b",
            SweepAxis::BOverH => "b/h",
            SweepAxis::BcCode => unreachable!(),
        };
        Some(LineChart {
            title: format!("Normalized critical buckling load vs {x_label}"),
            x_label: x_label.to_string(),
            y_label: "λ".to_string(),
            series,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::config::MeshConfig;

    fn base() -> RunConfig {
        let mut c = RunConfig::benchmark("SSSS");
        c.mesh = MeshConfig {
            n_strips: 4,
            m_sections: 6,
        };
        c
    }

    #[test]
    fn value_parsing() {
        assert_eq!(
            SweepSpec::parse_values(SweepAxis::VCn, "0.01, 0.05").unwrap(),
            vec![SweepValue::Number(0.01), SweepValue::Number(0.05)]
        );
        assert!(SweepSpec::parse_values(SweepAxis::AspectRatio, "1,x").is_err());
        assert!(SweepSpec::parse_values(SweepAxis::VCn, "").is_err());
        assert_eq!(
            SweepSpec::parse_values(SweepAxis::BcCode, "SSSS,SCSC").unwrap()[1],
            SweepValue::Code("SCSC".into())
        );
    }

    #[test]
    fn aspect_ratio_configs_scale_length_and_mesh() {
        let spec = SweepSpec {
            axis: SweepAxis::AspectRatio,
            values: vec![SweepValue::Number(0.5), SweepValue::Number(2.5)],
            v_cn_series: Some(vec![0.0, 0.01]),
            base: base(),
        };
        let cfgs = spec.configs().unwrap();
        assert_eq!(cfgs.len(), 4);
        assert_eq!(cfgs[0].geometry.length_a, 0.5);
        assert_eq!(cfgs[0].mesh.m_sections, 6);
        assert_eq!(cfgs[1].mesh.m_sections, 15);
        assert_eq!(cfgs[3].cnt.v_cn, 0.01);
        assert!(cfgs[3].case_id.ends_with("aspect_ratio=2.5-v_cn=0.01"));
    }

    #[test]
    fn failing_row_aborts_with_marker() {
        let spec = SweepSpec {
            axis: SweepAxis::BcCode,
            values: vec![
                SweepValue::Code("SSSS".into()),
                SweepValue::Code("FFFF".into()),
                SweepValue::Code("CCCC".into()),
            ],
            v_cn_series: None,
            base: base(),
        };
        let out = run_sweep(&spec).unwrap();
        assert_eq!(out.rows.len(), 1);
        assert!(out.failure.is_some());
        let mut buf = Vec::new();
        out.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 3);
        assert!(text
            .lines()
            .last()
            .unwrap()
            .trim_start_matches('"')
            .starts_with(ERROR_MARKER));
    }

    #[test]
    fn invalid_sweep_value_is_config_error() {
        let spec = SweepSpec {
            axis: SweepAxis::BOverH,
            values: vec![SweepValue::Number(5.0)],
            v_cn_series: None,
            base: base(),
        };
        assert!(matches!(spec.configs(), Err(BenchError::Config { .. })));
    }
}
