use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use plconvex::gen::{double_cover, generate, GenParams, Kind, Polygon};
use plconvex::global::{check, Verdict};
use plconvex::report::{self, Timings};
use plconvex::surface::{Mode, PLSurface};
use plconvex::{format, Error, Result};

#[derive(Parser)]
#[command(
    name = "plconvex",
    version,
    about = "Exact convexity checks for piecewise-linear hypersurfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Euclidean,
    Spherical,
    Hyperbolic,
}

#[derive(clap::Args)]
struct CheckOpts {
    /// Surface file in plconvex format.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Interpret the file in this mode instead of the one in its header.
    #[arg(long, value_enum)]
    mode_override: Option<ModeArg>,
    /// Worker threads for the local checks (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Include wall-clock timings in the report.
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the surface bounds a convex set.
    Check {
        #[command(flatten)]
        opts: CheckOpts,
        /// Also write the witness halfspaces as JSON to this file.
        #[arg(long)]
        witness_out: Option<PathBuf>,
    },
    /// Split a spherical convex cone boundary into directrix and generatrix;
    /// the generatrix is written next to the input as `<input>.generatrix.plx`.
    Decompose {
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// Generate a test instance.
    Gen {
        /// hull, perturbed-hull, sph-cone, great-sphere, double-cover or
        /// cylinder-truncated.
        kind: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Number of points (hulls) or boundary rays of the pointed part.
        #[arg(long, default_value_t = 12)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        lineality: usize,
        /// pentagram, convex or dart.
        #[arg(long, default_value = "pentagram")]
        polygon: String,
        #[arg(long, default_value_t = 2)]
        layers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// For double-cover: double this surface instead of a random cone.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Output file (default: stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read_surface(path: &Path, mode: Option<ModeArg>) -> Result<PLSurface> {
    let text = fs::read_to_string(path).map_err(|e| Error::Syntax {
        line: 0,
        col: 0,
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    let mode = match mode {
        None => None,
        Some(ModeArg::Euclidean) => Some(Mode::Euclidean),
        Some(ModeArg::Spherical) => Some(Mode::Spherical),
        Some(ModeArg::Hyperbolic) => {
            return Err(Error::Unsupported(
                "hyperbolic mode is not supported".into(),
            ))
        }
    };
    format::parse_with_mode(&text, mode)
}

fn set_jobs(jobs: Option<usize>) {
    if let Some(j) = jobs {
        // Fails only if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global();
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::Syntax {
        line: 0,
        col: 0,
        msg: format!("cannot write {}: {e}", path.display()),
    })
}

fn emit_error(fmt: OutputFormat, e: &Error) -> ExitCode {
    match fmt {
        OutputFormat::Json => println!("{}", report::error_json(e)),
        OutputFormat::Text => println!("error: {e}"),
    }
    eprintln!("plconvex: {e}");
    ExitCode::from(report::exit_code(&Err(e.clone())) as u8)
}

/// Parses and checks, returning the surface, outcome and timings.
fn run_check(opts: &CheckOpts) -> Result<(PLSurface, Result<Verdict>, Timings)> {
    set_jobs(opts.jobs);
    let t0 = Instant::now();
    let s = read_surface(&opts.input, opts.mode_override)?;
    let t1 = Instant::now();
    let outcome = check(&s);
    let timings = vec![("parse", t1 - t0), ("check", t1.elapsed())];
    Ok((s, outcome, timings))
}

fn print_report(opts: &CheckOpts, s: &PLSurface, verdict: &Verdict, timings: &Timings) {
    let t = opts.timings.then_some(timings);
    match opts.format {
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report::to_json(s, verdict, t)).expect("json")
            )
        }
        OutputFormat::Text => print!("{}", report::to_text(s, verdict, t)),
    }
}

fn cmd_check(opts: CheckOpts, witness_out: Option<PathBuf>) -> ExitCode {
    let (s, outcome, timings) = match run_check(&opts) {
        Ok(x) => x,
        Err(e) => return emit_error(opts.format, &e),
    };
    let verdict = match &outcome {
        Ok(v) => v,
        Err(e) => return emit_error(opts.format, e),
    };
    print_report(&opts, &s, verdict, &timings);
    if let (Some(path), Some(w)) = (witness_out, verdict.witness()) {
        let text = serde_json::to_string_pretty(&report::witness_json(w)).expect("json") + "\n";
        if let Err(e) = write_file(&path, &text) {
            return emit_error(opts.format, &e);
        }
    }
    ExitCode::from(report::exit_code(&outcome) as u8)
}

fn cmd_decompose(opts: CheckOpts) -> ExitCode {
    let (s, outcome, timings) = match run_check(&opts) {
        Ok(x) => x,
        Err(e) => return emit_error(opts.format, &e),
    };
    if s.mode != Mode::Spherical {
        return emit_error(
            opts.format,
            &Error::Unsupported("decompose needs a spherical surface".into()),
        );
    }
    let verdict = match &outcome {
        Ok(v) => v,
        Err(e) => return emit_error(opts.format, e),
    };
    print_report(&opts, &s, verdict, &timings);
    if let Some(g) = verdict.jn().and_then(|jn| jn.generatrix.as_ref()) {
        let mut path = opts.input.clone().into_os_string();
        path.push(".generatrix.plx");
        if let Err(e) = write_file(Path::new(&path), &format::write(g)) {
            return emit_error(opts.format, &e);
        }
    }
    ExitCode::from(report::exit_code(&outcome) as u8)
}

fn cmd_gen(
    kind: &str,
    params: GenParams,
    polygon: &str,
    input: Option<PathBuf>,
    output: Option<PathBuf>,
) -> Result<()> {
    let kind: Kind = kind.parse()?;
    let params = GenParams {
        polygon: polygon.parse::<Polygon>()?,
        ..params
    };
    let (surface, marked) = match (kind, input) {
        (Kind::DoubleCover, Some(path)) => (double_cover(&read_surface(&path, None)?), None),
        (_, Some(_)) => {
            return Err(Error::BadParams(
                "--input only applies to double-cover".into(),
            ))
        }
        (kind, None) => {
            let g = generate(kind, &params)?;
            (g.surface, g.marked_vertex)
        }
    };
    let mut text = String::new();
    if let Some(v) = marked {
        text.push_str(&format!("# marked-vertex {v}\n"));
    }
    text.push_str(&format::write(&surface));
    match output {
        Some(path) => write_file(&path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Check { opts, witness_out } => cmd_check(opts, witness_out),
        Command::Decompose { opts } => cmd_decompose(opts),
        Command::Gen {
            kind,
            n,
            m,
            lineality,
            polygon,
            layers,
            seed,
            input,
            output,
        } => {
            let params = GenParams {
                n,
                m,
                lineality,
                layers,
                seed,
                ..GenParams::default()
            };
            match cmd_gen(&kind, params, &polygon, input, output) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("plconvex: {e}");
                    ExitCode::from(report::exit_code(&Err(e)) as u8)
                }
            }
        }
    }
}
