//! Benchmark suite: unreinforced square plates under uniaxial compression.

use std::fmt;

use super::config::{MeshConfig, RunConfig};
use super::pipeline::run_buckle;

/// `(bc_code, reference λ, relative tolerance)`.
pub const BENCHMARK_REFERENCES: [(&str, f64, f64); 4] = [
    ("SSSS", 4.000, 0.005),
    ("SCSC", 7.721, 0.01),
    ("SCSS", 5.979, 0.01),
    ("CCCC", 10.072, 0.01),
];

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkEntry {
    pub bc_code: String,
    /// `None` when the run itself failed.
    pub lambda: Option<f64>,
    pub reference: f64,
    pub tolerance: f64,
    pub runtime_ms: f64,
    pub error: Option<String>,
}

impl BenchmarkEntry {
    pub fn rel_delta(&self) -> Option<f64> {
        self.lambda.map(|l| (l - self.reference) / self.reference)
    }

    pub fn passed(&self) -> bool {
        self.rel_delta().is_some_and(|d| d.abs() <= self.tolerance)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkReport {
    pub mesh: MeshConfig,
    pub entries: Vec<BenchmarkEntry>,
}

impl BenchmarkReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(BenchmarkEntry::passed)
    }
}

impl fmt::Display for BenchmarkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "benchmark: v_cn = 0, E = 2.1 GPa, nu = 0.34, a/b = 1, b/h = 100, mesh {}",
            self.mesh
        )?;
        writeln!(
            f,
            "{:<6} {:>10} {:>10} {:>10} {:>8} {:>10}  status",
            "bc", "lambda", "reference", "delta", "tol", "time_ms"
        )?;
        for e in &self.entries {
            match (e.lambda, e.rel_delta()) {
                (Some(l), Some(d)) => writeln!(
                    f,
                    "{:<6} {:>10.4} {:>10.3} {:>+9.3}% {:>7.3}% {:>10.1}  {}",
                    e.bc_code,
                    l,
                    e.reference,
                    100.0 * d,
                    100.0 * e.tolerance,
                    e.runtime_ms,
                    if e.passed() { "PASS" } else { "FAIL" }
                )?,
                _ => writeln!(
                    f,
                    "{:<6} {:>10} {:>10.3} {:>10} {:>7.3}% {:>10}  FAIL ({})",
                    e.bc_code,
                    "-",
                    e.reference,
                    "-",
                    100.0 * e.tolerance,
                    "-",
                    e.error.as_deref().unwrap_or("error")
                )?,
            }
        }
        Ok(())
    }
}

/// Runs the four benchmarks. `tolerance` overrides every per-case tolerance.
pub fn validate_benchmarks(mesh: Option<MeshConfig>, tolerance: Option<f64>) -> BenchmarkReport {
    let mesh = mesh.unwrap_or_default();
    let entries = BENCHMARK_REFERENCES
        .iter()
        .map(|&(code, reference, tol)| {
            let mut cfg = RunConfig::benchmark(code);
            cfg.mesh = mesh;
            let tolerance = tolerance.unwrap_or(tol);
            match run_buckle(&cfg) {
                Ok(r) => BenchmarkEntry {
                    bc_code: code.to_string(),
                    lambda: Some(r.lambda),
                    reference,
                    tolerance,
                    runtime_ms: r.runtime_ms,
                    error: None,
                },
                Err(e) => BenchmarkEntry {
                    bc_code: code.to_string(),
                    lambda: None,
                    reference,
                    tolerance,
                    runtime_ms: 0.0,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    BenchmarkReport { mesh, entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tight_tolerance_fails() {
        let r = validate_benchmarks(None, Some(1e-4));
        assert!(!r.all_passed());
        assert!(r.to_string().contains("FAIL"));
    }

    #[test]
    fn coarse_mesh_still_finite() {
        let r = validate_benchmarks(
            Some(MeshConfig {
                n_strips: 2,
                m_sections: 3,
            }),
            None,
        );
        for e in &r.entries {
            let l = e.lambda.expect("coarse mesh run succeeds");
            assert!(l.is_finite() && l > 0.0);
            assert!(e.rel_delta().unwrap().is_finite());
        }
        assert!(r.to_string().lines().count() >= 6);
    }
}
