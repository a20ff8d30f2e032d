use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use qcv_core::cases::verify;
use qcv_core::conic_bundle::{degree_bound_cascade, solve_point, superbound, triangle, ConicBundlePoint};
use qcv_core::dpf::{preset, preset_catalog};
use qcv_core::enumeration::{enumerate_with_jobs, Filter, FilterConfig, GrossBound};
use qcv_core::invariants::known_pairs_tsv;
use qcv_core::report::{any_failed, emit_report, Format};
use serde_json::json;

#[derive(Parser)]
#[command(name = "qcv", version, about = "Exact checks for codimension-two subvarieties of quadrics")]
struct Cli {
    /// Also write the result as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Worker threads for `verify` and `enumerate`.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification cases by id, or `all`.
    Verify {
        #[arg(default_value = "all")]
        ids: Vec<String>,
        /// Print the list of case ids and exit.
        #[arg(long)]
        list: bool,
    },
    Solve {
        #[command(subcommand)]
        what: SolveCmd,
    },
    ConicBundle {
        #[command(subcommand)]
        what: ConicCmd,
    },
    Enumerate {
        #[command(subcommand)]
        what: EnumerateCmd,
    },
    Table {
        #[command(subcommand)]
        what: TableCmd,
    },
}

#[derive(Subcommand)]
enum SolveCmd {
    /// Solve the degree-two double point equation of a test-surface preset.
    Dpf {
        #[arg(long, required_unless_present = "list")]
        preset: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum ConicCmd {
    /// Solve the linear system at one point.
    Solve {
        #[arg(long)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
        #[arg(long)]
        y: i64,
    },
    /// Vertices of the feasible triangle and the genus at its corners.
    Triangle {
        #[arg(long)]
        d: i64,
    },
    /// Degree bounds for each surface degree containing the curve section.
    Bounds,
}

#[derive(Subcommand)]
enum EnumerateCmd {
    ConicBundle(EnumerateArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, default_value_t = 20)]
    d_min: i64,
    #[arg(long, default_value_t = 276)]
    d_max: i64,
    /// Filter to switch off; repeatable.
    #[arg(long, value_name = "NAME")]
    disable_filter: Vec<Filter>,
    /// JSON file with an external upper bound on g - 1.
    #[arg(long, value_name = "PATH")]
    gross_bound: Option<PathBuf>,
}

#[derive(Subcommand)]
enum TableCmd {
    KnownPairs,
}

fn write_json(path: &Path, value: &serde_json::Value) -> anyhow::Result<()> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    std::fs::write(path, s).with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let mut out = std::io::stdout().lock();
    let json: serde_json::Value = match cli.cmd {
        Command::Verify { ids, list } => {
            if list {
                for c in qcv_core::cases::registry() {
                    writeln!(out, "{}\t{}", c.id, c.claim)?;
                }
                return Ok(true);
            }
            let reports = verify(&ids, cli.jobs)?;
            emit_report(&reports, Format::Text, &mut out)?;
            if let Some(p) = &cli.json {
                let mut f = std::fs::File::create(p).with_context(|| format!("creating {}", p.display()))?;
                emit_report(&reports, Format::Json, &mut f)?;
            }
            return Ok(!any_failed(&reports));
        }
        Command::Solve { what: SolveCmd::Dpf { preset: name, list } } => {
            if list {
                for p in preset_catalog() {
                    writeln!(out, "{}\t{}", p.name, p.description)?;
                }
                return Ok(true);
            }
            let name = name.expect("clap enforces --preset");
            let Some(p) = preset(&name) else { bail!("unknown preset {name:?}; see `solve dpf --list`") };
            let eq = p.equation()?;
            let s = p.solve()?;
            writeln!(out, "preset: {}\nequation: {eq}", p.name)?;
            for t in &s.trail {
                writeln!(out, "  - {t}")?;
            }
            let sols: Vec<String> = s.solutions.iter().map(ToString::to_string).collect();
            writeln!(out, "solutions: {}", sols.join(", "))?;
            json!({"preset": p.name, "equation": eq.to_string(), "result": s})
        }
        Command::ConicBundle { what } => match what {
            ConicCmd::Solve { d, x, y } => {
                let s = solve_point(&ConicBundlePoint::new(d, x, y)?)?;
                let names = ["b1R", "R2", "Db1", "D2", "b2"];
                writeln!(out, "d = {d}, x = {x}, y = {y}")?;
                for (n, v) in names.iter().zip(s.v.to_vec()) {
                    writeln!(out, "  {n} = {v}")?;
                }
                let yr = qcv_core::Rational::from(y);
                writeln!(out, "  e2 = {}", s.v.e2(d, &yr))?;
                writeln!(out, "  e1D = {}", s.v.e1d(&yr))?;
                writeln!(out, "  g - 1 = {}", s.v.genus_minus_one(d, &yr))?;
                for p in &s.discrepancies {
                    writeln!(out, "  printed {} [{}] = {}, derived {}", p.quantity, p.part, p.printed, p.derived)?;
                }
                serde_json::to_value(&s)?
            }
            ConicCmd::Triangle { d } => {
                let t = triangle(d)?;
                let s = superbound(d)?;
                writeln!(out, "d = {d}")?;
                writeln!(out, "  v1 (e2 = 0) = ({}, {})", t.v1.0, t.v1.1)?;
                writeln!(out, "  v2 (e1D = 0) = ({}, {})", t.v2.0, t.v2.1)?;
                writeln!(out, "  v3 (apex) = ({}, {})", t.v3.0, t.v3.1)?;
                writeln!(out, "  g - 1 at v1, v2, v3: {}, {}, {}", s.lo, s.hi, s.apex)?;
                writeln!(out, "  max g - 1 on triangle: {}", s.max_on_triangle())?;
                let mut discrepancies: Vec<String> = s
                    .discrepancies
                    .iter()
                    .map(|p| format!("{} [{}]: printed {}, derived {}", p.quantity, p.part, p.printed, p.derived))
                    .collect();
                if s.apex > s.hi {
                    discrepancies.push(format!("apex genus {} exceeds the e1D vertex genus {}", s.apex, s.hi));
                }
                for p in &discrepancies {
                    writeln!(out, "  discrepancy: {p}")?;
                }
                json!({
                    "d": d,
                    "vertices": [t.v1, t.v2, t.v3],
                    "endpoints": {"lo": s.lo, "hi": s.hi, "apex": s.apex},
                    "discrepancies": discrepancies,
                })
            }
            ConicCmd::Bounds => {
                let c = degree_bound_cascade()?;
                for r in &c.rows {
                    let d = r.max_d.map_or_else(|| "none".to_string(), |d| d.to_string());
                    writeln!(out, "{:?}\tsurface degree {}\tmax d {d}", r.kind, r.kind.surface_degree())?;
                }
                for t in &c.trail {
                    writeln!(out, "  - {t}")?;
                }
                serde_json::to_value(&c)?
            }
        },
        Command::Enumerate { what: EnumerateCmd::ConicBundle(a) } => {
            let mut config = FilterConfig::from_env()?.with_range(a.d_min, a.d_max);
            for f in a.disable_filter {
                config = config.without(f);
            }
            if let Some(p) = &a.gross_bound {
                let s = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                config.gross_bound = Some(GrossBound::from_json(&s)?);
            }
            let rep = enumerate_with_jobs(&config, cli.jobs)?;
            for s in &rep.survivors {
                for w in &s.witnesses {
                    writeln!(out, "d = {}: (x, y) = ({}, {}), chiY = {}, chiS = {}, g = {}", s.d, w.x, w.y, w.chi_y, w.chi_s, w.g)?;
                }
            }
            let degrees: Vec<String> = rep.surviving_degrees().iter().map(ToString::to_string).collect();
            writeln!(out, "surviving degrees: {{{}}}", degrees.join(", "))?;
            serde_json::from_str(&rep.to_json())?
        }
        Command::Table { what: TableCmd::KnownPairs } => {
            write!(out, "{}", known_pairs_tsv())?;
            serde_json::to_value(qcv_core::invariants::known_pairs())?
        }
    };
    if let Some(p) = &cli.json {
        write_json(p, &json)?;
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
