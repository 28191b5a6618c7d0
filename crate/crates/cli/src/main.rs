//! wormlab: planar Minkowski length / escape length / worm-cover CLI.

mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use wormlab_core::geom2::PolygonizationMode;
use wormlab_core::io::{read_curve, resolve_body, CurveFile};
use wormlab_core::wormcover::{
    falsify_cover, fits_by_translation, generic_lower_bound, wetzel_lower_bound_with,
    GeneratorKind, WetzelConfig,
};
use wormlab_core::{
    check_mahler, check_symplectic_invariance, check_viterbo, min_escape_length,
    minkowski_length, Error, LinearMap2, Result, DEFAULT_GRID,
};

#[derive(Parser)]
#[command(name = "wormlab", version, about = "Planar Minkowski worm-problem toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Args)]
struct OutputOpts {
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// ℓ_T length of a closed curve.
    Length {
        /// Curve JSON file.
        #[arg(long)]
        curve: PathBuf,
        /// Gauge body: named shape or JSON file.
        #[arg(long)]
        t: String,
    },
    /// EHZ capacity of K x T (full report).
    Capacity {
        #[arg(long)]
        k: String,
        #[arg(long)]
        t: String,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Escape length of K with respect to T (scalar).
    Escape {
        #[arg(long)]
        k: String,
        #[arg(long)]
        t: String,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
    },
    /// Volume-capacity ratio of K x T.
    Viterbo {
        #[arg(long)]
        k: String,
        #[arg(long)]
        t: String,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
    },
    /// Capacity of T x T° and the Mahler volume product.
    Mahler {
        #[arg(long)]
        t: String,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        /// Require and check central symmetry.
        #[arg(long)]
        symmetric: bool,
    },
    /// Capacity before/after the symplectic map (Φ, (Φ^T)^{-1}).
    Invariance {
        #[arg(long)]
        k: String,
        #[arg(long)]
        t: String,
        /// Matrix entries a,b,c,d of Φ = [[a,b],[c,d]].
        #[arg(long, value_delimiter = ',')]
        map: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
    },
    /// Wetzel 3-generator lower bound (max over θ, q̂; min over translations).
    Wetzel {
        #[arg(long, default_value_t = 24)]
        outer_grid: usize,
        #[arg(long, default_value_t = 40)]
        refine: usize,
        #[arg(long, default_value_t = 2048)]
        resolution: usize,
        #[arg(long, default_value_t = 1e-7)]
        tolerance: f64,
        /// Sample the circle inscribed instead of circumscribed.
        #[arg(long)]
        inscribed: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Generic lower bound from a JSON list of generators.
    Bound {
        /// JSON file: list of generator kinds.
        #[arg(long)]
        generators: PathBuf,
        #[arg(long)]
        t: String,
        /// Target ℓ_T length of every generator.
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = 1024)]
        resolution: usize,
        #[arg(long, default_value_t = 1e-7)]
        tolerance: f64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Test whether a translate of the curve fits inside K.
    Fit {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        k: String,
    },
    /// Sample random unit worms and report the first that escapes K.
    Falsify {
        #[arg(long)]
        k: String,
        #[arg(long)]
        t: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("WORMLAB_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: WORMLAB_THREADS must be an integer >= 1");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::NonConvergence => 4,
        Error::Io(_) => 5,
        _ => 3,
    }
}

fn emit(output: &OutputOpts, text: String) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn unsupported_format(what: &str) -> Error {
    Error::Parse(format!("unsupported output format for {what}"))
}

fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::Length { curve, t } => {
            let q = read_curve(&curve)?;
            let t_body = resolve_body(&t)?;
            println!("{}", minkowski_length(&q, &t_body));
            Ok(())
        }
        Command::Capacity { k, t, grid, output } => {
            let k_body = resolve_body(&k)?;
            let t_body = resolve_body(&t)?;
            let rep = min_escape_length(&k_body, &t_body, grid)?;
            let text = match output.format {
                Format::Json => report::to_json(&report::CapacityJson::from_report(&rep))?,
                Format::Svg => report::capacity_svg(&rep, &k_body)?,
                Format::Csv => return Err(unsupported_format("capacity")),
            };
            emit(&output, text)
        }
        Command::Escape { k, t, grid } => {
            let rep = min_escape_length(&resolve_body(&k)?, &resolve_body(&t)?, grid)?;
            println!("{}", rep.value);
            Ok(())
        }
        Command::Viterbo { k, t, grid } => {
            let rep = check_viterbo(&resolve_body(&k)?, &resolve_body(&t)?, grid)?;
            print!("{}", report::to_json(&rep)?);
            Ok(())
        }
        Command::Mahler { t, grid, symmetric } => {
            let rep = check_mahler(&resolve_body(&t)?, symmetric, grid)?;
            print!("{}", report::to_json(&rep)?);
            Ok(())
        }
        Command::Invariance { k, t, map, grid } => {
            if map.len() != 4 {
                return Err(Error::Parse("expected --map a,b,c,d".into()));
            }
            let phi = LinearMap2::new(map[0], map[1], map[2], map[3])?;
            let rep =
                check_symplectic_invariance(&resolve_body(&k)?, &resolve_body(&t)?, &phi, grid)?;
            print!("{}", report::to_json(&rep)?);
            Ok(())
        }
        Command::Wetzel { outer_grid, refine, resolution, tolerance, inscribed, output } => {
            if outer_grid < 8 {
                return Err(Error::InvalidParam("outer_grid must be >= 8".into()));
            }
            if !(tolerance > 0.0) {
                return Err(Error::InvalidParam("tolerance must be > 0".into()));
            }
            let cfg = WetzelConfig {
                resolution,
                mode: if inscribed {
                    PolygonizationMode::Inscribed
                } else {
                    PolygonizationMode::Circumscribed
                },
                outer_grid,
                refine_iters: refine,
                inner_tol: tolerance,
            };
            let rep = wetzel_lower_bound_with(&cfg)?;
            eprintln!(
                "lower bound {:.7}; landmarks: 0.15544 (known lower), \
                 {:.5} = 1/(2*pi) (conjectured), 0.16526 (known upper)",
                rep.lower_bound,
                1.0 / (2.0 * std::f64::consts::PI)
            );
            let text = match output.format {
                Format::Json => report::to_json(&rep)?,
                Format::Csv => report::bound_csv(&rep),
                Format::Svg => report::bound_svg(&rep)?,
            };
            emit(&output, text)
        }
        Command::Bound { generators, t, alpha, resolution, tolerance, output } => {
            let text = std::fs::read_to_string(&generators)?;
            let kinds: Vec<GeneratorKind> = serde_json::from_str(&text).map_err(Error::from)?;
            let t_body = resolve_body(&t)?;
            let rep = generic_lower_bound(&kinds, &t_body, alpha, resolution, tolerance)?;
            let text = match output.format {
                Format::Json => report::to_json(&rep)?,
                Format::Csv => report::bound_csv(&rep),
                Format::Svg => report::bound_svg(&rep)?,
            };
            emit(&output, text)
        }
        Command::Fit { curve, k } => {
            let q = read_curve(&curve)?;
            let k_body = resolve_body(&k)?;
            match fits_by_translation(&q, &k_body) {
                Some(a) => println!("fits: translation [{}, {}]", a.x, a.y),
                None => println!("does not fit"),
            }
            Ok(())
        }
        Command::Falsify { k, t, samples, seed, output } => {
            if samples < 1 {
                return Err(Error::InvalidParam("samples must be >= 1".into()));
            }
            let k_body = resolve_body(&k)?;
            let t_body = resolve_body(&t)?;
            match falsify_cover(&k_body, &t_body, samples, seed)? {
                Some(q) => {
                    eprintln!("counterexample found");
                    let text = match output.format {
                        Format::Json => report::to_json(&CurveFile::from_curve(&q))?,
                        _ => return Err(unsupported_format("falsify")),
                    };
                    emit(&output, text)
                }
                None => {
                    println!("no counterexample in {samples} samples");
                    Ok(())
                }
            }
        }
    }
}
