use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use abel_core::generator::{generate_dyn, Caps, Mode};
use abel_core::numeric::{displacement_grid, poincare_map, write_grid_csv, TrajectoryConfig};
use abel_core::report::{analyze_dyn, numeric_model, verify_dyn, AnalysisReport, AnalyzeOptions};
use abel_core::{DynEquation, Error, Result, RingTag};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

/// Invariant curves, bounds and Darboux certificates of Abel equations
/// x' = A x³ + B x² + C x.
///
/// Exit codes: 0 success, 2 parse or document error, 3 out-of-scope
/// equation, 4 internal inconsistency, 1 any other failure.
#[derive(Parser, Debug)]
#[command(name = "abel", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Cap on worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Read equation files as this ring, ignoring their `ring` key.
    #[arg(long, global = true, value_parser = parse_ring)]
    ring: Option<RingTag>,
    #[command(flatten)]
    tol: Tolerances,
}

#[derive(Args, Debug)]
struct Tolerances {
    /// Relative tolerance of the integrator.
    #[arg(long, default_value_t = 1e-10, global = true)]
    rtol: f64,
    /// Absolute tolerance of the integrator.
    #[arg(long, default_value_t = 1e-12, global = true)]
    atol: f64,
    /// Step budget per trajectory.
    #[arg(long, default_value_t = 200_000, global = true)]
    max_steps: usize,
    /// |x| beyond which a trajectory counts as blown up.
    #[arg(long, default_value_t = 1e8, global = true)]
    escape: f64,
    /// Finite-difference step for d'(0), within [1e-6, 1e-3].
    #[arg(long, default_value_t = 1e-4, global = true)]
    fd_step: f64,
    /// Sample points for curve residuals.
    #[arg(long, default_value_t = 1000, global = true)]
    samples: usize,
    /// Skip every floating-point check.
    #[arg(long, global = true)]
    no_numeric: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GenMode {
    Single,
    Pair,
    Proportional,
    ConjugateSurd,
    /// Any of the above, chosen by the seed.
    Random,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the invariant curves p(t)x − 1 = 0.
    Find { file: PathBuf },
    /// Curves, pair identities, degree laws, Darboux search, bound audit and numeric summary.
    Analyze { file: PathBuf },
    /// Bound case and value, with the audit of the curve count.
    Classify { file: PathBuf },
    /// Darboux certificate search over the found curves.
    Darboux { file: PathBuf },
    /// Write an equation with prescribed curves, plus a `<out>.truth.json` sidecar.
    Generate {
        #[arg(long, value_enum, default_value_t = GenMode::Random)]
        mode: GenMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest degree of A (default 8, or 4 for trig).
        #[arg(long)]
        max_deg_a: Option<usize>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Check one candidate curve p(t)x − 1 = 0 exactly and numerically.
    Verify {
        file: PathBuf,
        /// p(t) in the expression grammar of the equation's ring.
        #[arg(long)]
        curve: String,
    },
    /// Return map x(2π; x₀) of a trig equation.
    Poincare {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x0: Option<f64>,
        /// Displacement grid `lo:hi:n` written as CSV to `--csv`.
        #[arg(long, allow_hyphen_values = true, requires = "csv")]
        grid: Option<String>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn parse_ring(s: &str) -> std::result::Result<RingTag, String> {
    RingTag::parse(s)
        .ok_or_else(|| format!("unknown ring '{s}' (poly-rational, poly-gaussian, trig)"))
}

impl Global {
    fn options(&self) -> Result<AnalyzeOptions> {
        let t = &self.tol;
        let trajectory = TrajectoryConfig {
            rtol: t.rtol,
            atol: t.atol,
            max_steps: t.max_steps,
            escape: t.escape,
        };
        trajectory.validate()?;
        Ok(AnalyzeOptions {
            numeric: !t.no_numeric,
            samples: t.samples,
            fd_step: t.fd_step,
            trajectory,
        })
    }

    fn load(&self, path: &Path) -> Result<DynEquation> {
        let text = fs::read_to_string(path)?;
        DynEquation::from_json_str(&text, self.ring)
    }
}

/// Full analysis, refused with an inconsistency if the report does not
/// survive its own reload check.
fn checked_report(g: &Global, file: &Path, numeric: bool) -> Result<AnalysisReport> {
    let eq = g.load(file)?;
    let mut opts = g.options()?;
    opts.numeric &= numeric;
    let report = analyze_dyn(&eq, &opts)?;
    AnalysisReport::from_json_str(&report.to_json_string()?)?.revalidate()?;
    Ok(report)
}

fn section(report: &AnalysisReport, keys: &[&str]) -> Result<Value> {
    let full = serde_json::to_value(report)?;
    let mut out = Map::new();
    for k in keys {
        out.insert(
            (*k).to_string(),
            full.get(*k).cloned().unwrap_or(Value::Null),
        );
    }
    Ok(Value::Object(out))
}

/// Indented `key: value` projection of a JSON document.
fn text_of(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if x.is_object() || x.is_array() {
                    out.push_str(&format!("{pad}{k}:\n"));
                    text_of(x, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar_text(x)));
                }
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                if x.is_object() || x.is_array() {
                    out.push_str(&format!("{pad}[{i}]\n"));
                    text_of(x, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}[{i}] {}\n", scalar_text(x)));
                }
            }
        }
        x => out.push_str(&format!("{pad}{}\n", scalar_text(x))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        x => x.to_string(),
    }
}

fn emit(format: Format, v: &Value) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(v)? + "\n",
        Format::Text => {
            let mut s = String::new();
            text_of(v, 0, &mut s);
            s
        }
    })
}

fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = || Error::Precondition(format!("grid '{spec}' is not lo:hi:n with n ≥ 2"));
    let parts: Vec<&str> = spec.split(':').collect();
    let [lo, hi, n] = parts[..] else {
        return Err(bad());
    };
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if n < 2 || !(lo.is_finite() && hi.is_finite()) {
        return Err(bad());
    }
    Ok((0..n)
        .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
        .collect())
}

fn run(cli: &Cli) -> Result<String> {
    let g = &cli.global;
    match &cli.command {
        Command::Analyze { file } => {
            let r = checked_report(g, file, true)?;
            Ok(match g.format {
                Format::Json => r.to_json_string()? + "\n",
                Format::Text => r.to_text(),
            })
        }
        Command::Find { file } => {
            let r = checked_report(g, file, false)?;
            emit(g.format, &section(&r, &["equation", "curves", "notes"])?)
        }
        Command::Classify { file } => {
            let r = checked_report(g, file, true)?;
            emit(g.format, &section(&r, &["equation", "bound", "audit"])?)
        }
        Command::Darboux { file } => {
            let r = checked_report(g, file, false)?;
            emit(g.format, &section(&r, &["equation", "curves", "darboux"])?)
        }
        Command::Generate {
            mode,
            seed,
            max_deg_a,
            out,
        } => {
            let tag = g.ring.unwrap_or(RingTag::PolyRational);
            let mode = match mode {
                GenMode::Single => Some(Mode::Single),
                GenMode::Pair => Some(Mode::Pair),
                GenMode::Proportional => Some(Mode::Proportional),
                GenMode::ConjugateSurd => Some(Mode::ConjugateSurd),
                GenMode::Random => None,
            };
            let mut caps = Caps::default_for(tag);
            if let Some(d) = max_deg_a {
                caps.max_deg_a = *d;
            }
            let (eq, curves) = generate_dyn(tag, *seed, caps, mode)?;
            let doc = eq.to_json();
            fs::write(out, serde_json::to_string_pretty(&doc)? + "\n")?;
            let truth = json!({
                "ring": tag.name(),
                "mode": mode.map(Mode::name).unwrap_or("random"),
                "seed": seed,
                "curves": curves,
            });
            let mut truth_path = out.clone().into_os_string();
            truth_path.push(".truth.json");
            fs::write(&truth_path, serde_json::to_string_pretty(&truth)? + "\n")?;
            emit(
                g.format,
                &json!({ "equation": doc, "prescribed_curves": curves }),
            )
        }
        Command::Verify { file, curve } => {
            let eq = g.load(file)?;
            let rec = verify_dyn(&eq, curve, &g.options()?)?;
            emit(g.format, &serde_json::to_value(rec)?)
        }
        Command::Poincare {
            file,
            x0,
            grid,
            csv,
        } => {
            let eq = g.load(file)?;
            let ne = numeric_model(&eq)?;
            let cfg = g.options()?.trajectory;
            let mut doc = Map::new();
            doc.insert("equation".into(), eq.to_json());
            if let Some(x0) = x0 {
                let x1 = poincare_map(&ne, *x0, &cfg)?;
                doc.insert("x0".into(), json!(x0));
                doc.insert("x_return".into(), json!(x1));
                doc.insert("displacement".into(), json!(x1 - x0));
            }
            if let (Some(spec), Some(path)) = (grid, csv) {
                let rows = displacement_grid(&ne, &parse_grid(spec)?, &cfg);
                let mut f = fs::File::create(path)?;
                write_grid_csv(&mut f, &rows)?;
                f.flush()?;
                doc.insert("grid_points".into(), json!(rows.len()));
                doc.insert(
                    "grid_failures".into(),
                    json!(rows.iter().filter(|r| r.1.is_err()).count()),
                );
                doc.insert("csv".into(), json!(path.display().to_string()));
            }
            if x0.is_none() && grid.is_none() {
                return Err(Error::Precondition("poincare needs --x0 or --grid".into()));
            }
            emit(g.format, &Value::Object(doc))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
