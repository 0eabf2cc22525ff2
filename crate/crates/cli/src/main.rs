//! `denum`: Sylvester wave decompositions of the denumerant d(t; a) from
//! the command line.
//!
//! Subcommands: `waves` (print the wave list), `eval` (evaluate d(t; a)),
//! `bench` (time the staircase sequences 1..k), `selftest`.
//!
//! Exit codes: 0 success, 1 self-test or internal failure, 2 invalid input.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use denumerant::{Error, FloatWave, QuasiPolynomial, Rat};
use denumerant_cli::{bench, output, selftest, Backend};
use num_traits::Signed;
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "denum", version, about = "Sylvester wave decompositions of the denumerant")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the wave list W_f(t; a) for all divisors f of the entries
    Waves(WavesArgs),
    /// Evaluate d(t; a), the number of solutions of sum a_i x_i = t
    Eval(EvalArgs),
    /// Time wave computation for a = (1, ..., k), k = 2..=K
    Bench(BenchArgs),
    /// Run the built-in consistency checks
    Selftest,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Text,
    Json,
}

#[derive(Args)]
struct SeqArgs {
    /// Comma-separated distinct positive integers with gcd 1, e.g. 1,3,6
    #[arg(short = 'a', long = "sequence", value_delimiter = ',', num_args = 1..)]
    sequence: Vec<u64>,
    /// Shorthand for the sequence 1,2,...,K
    #[arg(long, conflicts_with = "sequence", value_name = "K")]
    upto: Option<u64>,
}

impl SeqArgs {
    fn resolve(&self) -> Result<Vec<u64>, String> {
        let seq = if let Some(k) = self.upto {
            if k == 0 {
                return Err("--upto must be at least 1".into());
            }
            (1..=k).collect()
        } else if self.sequence.is_empty() {
            return Err("a sequence is required: pass -a or --upto".into());
        } else {
            self.sequence.clone()
        };
        denumerant::validate_sequence(&seq).map_err(|e| e.to_string())?;
        Ok(seq)
    }
}

#[derive(Args)]
struct WavesArgs {
    #[command(flatten)]
    seq: SeqArgs,
    #[arg(long, value_enum, default_value = "exact")]
    backend: Backend,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputMode,
    /// Worker threads for per-f wave jobs (default: all logical processors)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    seq: SeqArgs,
    /// Evaluation point (nonnegative integer)
    #[arg(short, long)]
    t: u64,
    #[arg(long, value_enum, default_value = "exact")]
    backend: Backend,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputMode,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct BenchArgs {
    /// Largest k; rows run k = 2..=K
    #[arg(short = 'k', long = "upto", value_name = "K")]
    upto: u64,
    #[arg(long, value_enum, default_value = "exact")]
    backend: Backend,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputMode,
    /// Per-row wall-clock limit in seconds; slower rows are marked TIMEOUT
    #[arg(long, default_value = "60")]
    time_limit: u64,
}

fn build_pool(threads: Option<usize>) -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        if n == 0 {
            return Err("--threads must be at least 1".into());
        }
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| e.to_string())
}

// Per-f wave jobs fan out across the pool; the merge into an f-keyed map
// keeps the output order deterministic regardless of worker count.
fn exact_waves_parallel(
    seq: &[u64],
    pool: &rayon::ThreadPool,
) -> Result<BTreeMap<u64, QuasiPolynomial>, Error> {
    let divisors = denumerant::divisor_union(seq);
    let computed: Result<Vec<_>, Error> = pool.install(|| {
        divisors
            .par_iter()
            .map(|&f| {
                let w = if f == 1 {
                    denumerant::wave_one(seq)?
                } else {
                    denumerant::wave_f(seq, f)?
                };
                Ok((f, w))
            })
            .collect()
    });
    Ok(computed?.into_iter().collect())
}

fn float_waves_parallel(
    seq: &[u64],
    pool: &rayon::ThreadPool,
) -> Result<BTreeMap<u64, FloatWave>, Error> {
    let divisors = denumerant::divisor_union(seq);
    let computed: Result<Vec<_>, Error> = pool.install(|| {
        divisors
            .par_iter()
            .map(|&f| Ok((f, denumerant::float_wave_f(seq, f)?)))
            .collect()
    });
    Ok(computed?.into_iter().collect())
}

fn cmd_waves(args: &WavesArgs) -> Result<(), CliError> {
    let seq = args.seq.resolve().map_err(CliError::Input)?;
    let pool = build_pool(args.threads).map_err(CliError::Input)?;
    match args.backend {
        Backend::Exact => {
            let waves = exact_waves_parallel(&seq, &pool).map_err(CliError::from)?;
            match args.output {
                OutputMode::Text => print!("{}", output::render_exact_text(&waves)),
                OutputMode::Json => {
                    let doc = output::exact_doc(&seq, &waves);
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
                }
            }
        }
        Backend::Float => {
            let waves = float_waves_parallel(&seq, &pool).map_err(CliError::from)?;
            let residual =
                waves.values().map(FloatWave::max_imag_residual).fold(0.0f64, f64::max);
            match args.output {
                OutputMode::Text => print!("{}", output::render_float_text(&waves)),
                OutputMode::Json => {
                    let doc = output::float_doc(&seq, &waves);
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
                }
            }
            eprintln!("max imaginary residual: {residual:.3e}");
        }
    }
    Ok(())
}

fn cmd_eval(args: &EvalArgs) -> Result<(), CliError> {
    let seq = args.seq.resolve().map_err(CliError::Input)?;
    let pool = build_pool(args.threads).map_err(CliError::Input)?;
    match args.backend {
        Backend::Exact => {
            let waves = exact_waves_parallel(&seq, &pool).map_err(CliError::from)?;
            let value: Rat = waves.values().map(|w| w.eval(args.t)).sum();
            if !value.is_integer() || value.is_negative() {
                return Err(CliError::Internal(format!(
                    "wave sum at t = {} is not a nonnegative integer: {value}",
                    args.t
                )));
            }
            match args.output {
                OutputMode::Text => println!("{}", value.to_integer()),
                OutputMode::Json => println!(
                    "{}",
                    serde_json::json!({
                        "sequence": seq,
                        "backend": "exact",
                        "t": args.t,
                        "value": value.to_integer().to_string(),
                    })
                ),
            }
        }
        Backend::Float => {
            let waves = float_waves_parallel(&seq, &pool).map_err(CliError::from)?;
            let value: f64 = waves.values().map(|w| w.eval(args.t)).sum();
            let residual =
                waves.values().map(FloatWave::max_imag_residual).fold(0.0f64, f64::max);
            match args.output {
                OutputMode::Text => println!("{value}"),
                OutputMode::Json => println!(
                    "{}",
                    serde_json::json!({
                        "sequence": seq,
                        "backend": "float",
                        "t": args.t,
                        "value": output::float_string(value),
                        "max_imag_residual": output::float_string(residual),
                    })
                ),
            }
            eprintln!("max imaginary residual: {residual:.3e}");
        }
    }
    Ok(())
}

fn cmd_bench(args: &BenchArgs) -> Result<(), CliError> {
    if args.upto == 0 {
        return Err(CliError::Input("-k/--upto must be at least 1".into()));
    }
    let rows = bench::run(args.upto, args.backend, Duration::from_secs(args.time_limit));
    match args.output {
        OutputMode::Text => print!("{}", bench::render_table(&rows)),
        OutputMode::Json => {
            println!("{}", serde_json::to_string_pretty(&rows).expect("serializable"))
        }
    }
    Ok(())
}

fn cmd_selftest() -> Result<(), CliError> {
    let report = selftest::run();
    match report.failure {
        None => {
            println!("PASS ({} checks)", report.checks_run);
            Ok(())
        }
        Some(msg) => Err(CliError::Selftest(msg)),
    }
}

enum CliError {
    /// Invalid input; exit 2.
    Input(String),
    /// Self-test failure; exit 1.
    Selftest(String),
    /// Anything else; exit 1.
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptySequence
            | Error::ZeroEntry
            | Error::DuplicateEntries
            | Error::GcdNotOne => CliError::Input(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Waves(args) => cmd_waves(args),
        Cmd::Eval(args) => cmd_eval(args),
        Cmd::Bench(args) => cmd_bench(args),
        Cmd::Selftest => cmd_selftest(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Selftest(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
