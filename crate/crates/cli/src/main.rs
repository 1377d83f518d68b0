//! Command-line front end for the trigonal curve and two-bridge toolkit.
//!
//! Every subcommand builds a [`RunReport`]; `--json` prints it verbatim,
//! otherwise a short text summary is shown. Exit status is 0 on success,
//! 1 when a check fails, 2 on bad input and 3 when a degenerate curve is
//! refused.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use trigonal::{Error, RunReport};

#[derive(Parser)]
#[command(name = "trigonal", version, about = "L-schemes, 3-braids and two-bridge knots of trigonal curves")]
struct Cli {
    /// Print the full run report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized input; falls back to TRIGONAL_SEED.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
#[group(required = true, multiple = false)]
pub struct SpecArgs {
    /// Torus-type knot C(m), m odd.
    #[arg(long, value_name = "M", allow_hyphen_values = true)]
    torus: Option<i64>,

    /// Twist-type knot C(m, n), mn even.
    #[arg(long, num_args = 2, value_names = ["M", "N"], allow_hyphen_values = true)]
    twist: Option<Vec<i64>>,
}

#[derive(Args, Clone, Debug)]
pub struct MapArgs {
    /// x-polynomial: low-to-high coefficients "c0,c1,..." or "T<n>[@shift]".
    #[arg(long = "P", value_name = "POLY", allow_hyphen_values = true)]
    p: Option<String>,

    /// y-polynomial, same syntax as --P.
    #[arg(long = "Q", value_name = "POLY", allow_hyphen_values = true)]
    q: Option<String>,

    /// Chebyshev shortcuts "a[@s]" for the x- and y-polynomial.
    #[arg(long, num_args = 2, value_names = ["X", "Y"])]
    cheb: Option<Vec<String>>,

    /// Random map with this y-degree (seeded).
    #[arg(long, value_name = "B")]
    random: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an L-scheme and count its symbols.
    Parse { scheme: String },
    /// Apply one rewrite rule to a scheme.
    Rewrite {
        scheme: String,
        /// exchange_max, exchange_min, cancel, max_solitary, min_solitary, braid_relation
        #[arg(long)]
        rule: String,
        #[arg(long, default_value = "forward")]
        direction: String,
        #[arg(long)]
        position: usize,
        #[arg(long, default_value_t = 1)]
        index: u8,
    },
    /// Search for an alternating scheme reachable by crossing-monotone rewrites.
    Reduce {
        scheme: String,
        #[arg(long, default_value_t = 100_000)]
        max_steps: usize,
    },
    /// Matrix image, triviality and closure linking numbers of a 3-braid.
    Braid {
        /// Signed generator indices, e.g. "1 -2 1^3".
        word: String,
    },
    /// Braid of an L-scheme for a given y-degree.
    #[command(name = "scheme2braid")]
    SchemeToBraid {
        scheme: String,
        #[arg(long)]
        b: u32,
    },
    /// Events, L-scheme and node counts of a map t -> (P(t), Q(t)).
    Trace {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Diagram and two-bridge fraction of the harmonic knot H(a, b, c).
    Harmonic {
        a: u64,
        b: u64,
        c: u64,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Crossing number and degree triples of C(m) or C(m, n).
    Degree {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Representable integers below the Frobenius gap of (a, b).
    Frobenius { a: u64, b: u64 },
    /// Reduce z against the crossings of (x, y) and test alternation.
    Zreduce {
        /// Use (T_a, T_b, T_c).
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], conflicts_with_all = ["x", "y", "z"])]
        harmonic: Option<Vec<u64>>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
    },
    /// Linking-number obstruction search at a candidate y-degree.
    Certify {
        #[command(flatten)]
        spec: SpecArgs,
        /// Candidate y-degree; defaults to floor((3N-1)/2).
        #[arg(long)]
        b: Option<u32>,
        /// Also list every witness and check their shape.
        #[arg(long)]
        witnesses: bool,
    },
    /// Largest crossing number at a given degree.
    Bounds {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        alternating: bool,
    },
    /// End-to-end run on the worked example curve.
    Example25,
    /// Render a scheme, braid, curve or harmonic diagram as SVG.
    Svg {
        #[arg(long, group = "figure")]
        scheme: Option<String>,
        #[arg(long, group = "figure")]
        braid: Option<String>,
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], group = "figure")]
        harmonic: Option<Vec<u64>>,
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, short)]
        out: PathBuf,
    },
}

fn seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| std::env::var("TRIGONAL_SEED").ok()?.trim().parse().ok())
        .unwrap_or(0x5eed_2025)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::DegenerateCurve(_) | Error::SingularSystem => 3,
        _ => 2,
    }
}

fn print(report: &RunReport, json: bool) {
    // a closed pipe (`| head`) is not an error worth a panic
    let mut out = std::io::stdout().lock();
    if json {
        let text = serde_json::to_string_pretty(report).expect("report serializes");
        let _ = writeln!(out, "{text}");
        return;
    }
    if let Some(map) = report.outputs.as_object() {
        for (k, v) in map {
            let _ = match v {
                serde_json::Value::String(s) => writeln!(out, "{k}: {s}"),
                other => writeln!(out, "{k}: {other}"),
            };
        }
    }
    for c in &report.checks {
        let _ = writeln!(out, "[{}] {}: {}", if c.pass { "ok" } else { "FAIL" }, c.name, c.details);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command, seed(cli.seed)) {
        Ok(report) => {
            print(&report, cli.json);
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                let v = serde_json::json!({ "error": e.to_string(), "exit": exit_code(&e) });
                println!("{v}");
            }
            eprintln!("trigonal: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
