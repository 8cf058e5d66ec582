use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cntplate::bench::pipeline::write_rows;
use cntplate::bench::{
    exit, run_buckle, run_sweep, validate_benchmarks, BenchError, MeshConfig, RunConfig, SweepAxis, SweepConfig,
    SweepSpec,
};
use cntplate::micromechanics::homogenize;

#[derive(Parser)]
#[command(
    name = "cntplate",
    version,
    about = "Buckling of thin CNT-reinforced composite plates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print effective E, nu and the reduced stiffness of a config's composite.
    Homogenize { config: PathBuf },
    /// Run one buckling analysis and emit a CSV row.
    Buckle {
        config: PathBuf,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Mesh override, `<strips>x<sections>`.
        #[arg(long)]
        mesh: Option<String>,
    },
    /// Sweep one parameter and emit CSV (and optionally an SVG plot).
    Sweep {
        config: PathBuf,
        /// v_cn, aspect_ratio, bc_code or b_over_h.
        #[arg(long)]
        axis: Option<String>,
        /// Comma-separated axis values.
        #[arg(long)]
        values: Option<String>,
        /// Comma-separated v_cn values, one curve each.
        #[arg(long)]
        series: Option<String>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        mesh: Option<String>,
    },
    /// Run the built-in square-plate benchmarks.
    Validate {
        /// Relative tolerance overriding the per-case defaults.
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long)]
        mesh: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn load(path: &Path, mesh: Option<&str>) -> Result<RunConfig, BenchError> {
    let mut cfg = RunConfig::load(path)?;
    if let Some(m) = mesh {
        cfg.mesh = MeshConfig::parse(m)?;
        cfg.validate()?;
    }
    Ok(cfg)
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>, BenchError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| BenchError::io(p.display(), e))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cmd: Command) -> Result<i32, BenchError> {
    match cmd {
        Command::Homogenize { config } => {
            let cfg = RunConfig::load(&config)?;
            let h = homogenize(&cfg.composite()?).map_err(|e| BenchError::config("cnt", e.to_string()))?;
            println!("E_eff  = {:.6} GPa", h.effective.e);
            println!("nu_eff = {:.6}", h.effective.nu);
            println!("K      = {:.6} GPa", h.bulk_shear.k);
            println!("G      = {:.6} GPa", h.bulk_shear.g);
            let t = h.intermediates;
            println!(
                "alpha_CN = {:.6}, beta_CN = {:.6}, delta_CN = {:.6} GPa, eta_CN = {:.6} GPa",
                t.alpha_cn, t.beta_cn, t.delta_cn, t.eta_cn
            );
            println!(
                "Q11 = Q22 = {:.6} GPa, Q12 = {:.6} GPa, Q66 = {:.6} GPa",
                h.q.q11, h.q.q12, h.q.q66
            );
            Ok(exit::SUCCESS)
        }
        Command::Buckle { config, csv, mesh } => {
            let cfg = load(&config, mesh.as_deref())?;
            let res = run_buckle(&cfg)?;
            if res.critical.multiplicity > 1 {
                eprintln!(
                    "note: critical eigenvalue has multiplicity {}",
                    res.critical.multiplicity
                );
            }
            let path = csv.or_else(|| cfg.output.csv.clone());
            write_rows(open_out(path.as_deref())?, &[res.row()])?;
            Ok(exit::SUCCESS)
        }
        Command::Sweep {
            config,
            axis,
            values,
            series,
            csv,
            svg,
            mesh,
        } => {
            let mut cfg = load(&config, mesh.as_deref())?;
            let from_file = cfg.sweep.take();
            let axis = match (axis, &from_file) {
                (Some(a), _) => SweepAxis::parse(&a)?,
                (None, Some(s)) => s.axis,
                (None, None) => return Err(BenchError::config("sweep.axis", "no axis given (use --axis)")),
            };
            let values = match (values, &from_file) {
                (Some(v), _) => SweepSpec::parse_values(axis, &v)?,
                (None, Some(s)) if s.axis == axis => s.values.clone(),
                _ => return Err(BenchError::config("sweep.values", "no values given (use --values)")),
            };
            let v_cn_series = match (series, &from_file) {
                (Some(s), _) => Some(
                    SweepSpec::parse_values(SweepAxis::VCn, &s)
                        .map_err(|e| BenchError::config("--series", e.to_string()))?
                        .into_iter()
                        .filter_map(|v| match v {
                            cntplate::bench::SweepValue::Number(x) => Some(x),
                            _ => None,
                        })
                        .collect(),
                ),
                (None, Some(s)) => s.v_cn_series.clone(),
                (None, None) => None,
            };
            let spec = SweepSpec::from_config(
                cfg.clone(),
                SweepConfig {
                    axis,
                    values,
                    v_cn_series,
                },
            );
            let out = run_sweep(&spec)?;
            out.write_csv(open_out(csv.or_else(|| cfg.output.csv.clone()).as_deref())?)?;
            if let Some(path) = svg.or_else(|| cfg.output.svg.clone()) {
                match out.chart() {
                    Some(chart) => {
                        std::fs::write(&path, chart.to_svg()).map_err(|e| BenchError::io(path.display(), e))?
                    }
                    None => eprintln!("note: no SVG for a bc_code sweep"),
                }
            }
            match out.failure {
                Some((_, e)) => Err(e),
                None => Ok(exit::SUCCESS),
            }
        }
        Command::Validate { tolerance, mesh } => {
            let mesh = mesh.as_deref().map(MeshConfig::parse).transpose()?;
            let report = validate_benchmarks(mesh, tolerance);
            print!("{report}");
            Ok(if report.all_passed() {
                exit::SUCCESS
            } else {
                exit::VALIDATION_FAILURE
            })
        }
    }
}
