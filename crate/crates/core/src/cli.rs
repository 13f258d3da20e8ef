//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a check fails (formula mismatch or
//! invalid witness), 2 on usage or input errors.

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::bpair::b_number;
use crate::connectivity::kappa_with_witness;
use crate::graph::{Graph, Vertex};
use crate::io::{parse_graph, serialize_with_comments};
use crate::product::{double_cover, kronecker_product, ProductVertex};
use crate::theorem::{fuzz_campaign, verify_instance, witness_product_separator, FuzzConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "k2conn",
    about = "Connectivity of G x K2 and the b(G) invariant"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Vertex connectivity with a minimum separating set
    Kappa { file: PathBuf },
    /// b(G) with a minimum b-pair
    Bnum { file: PathBuf },
    /// Kronecker product of two graphs
    Product {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// G x K2
    Doublecover {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// kappa(G), b(G), min{2 kappa(G), b(G)} and a separator of G x K2
    Formula { file: PathBuf },
    /// Compare the formula with direct computation on G x K2 (JSON report)
    Verify {
        file: PathBuf,
        /// Also run the exhaustive search on the product (|G| <= 6)
        #[arg(long)]
        oracle: bool,
    },
    /// Verify the formula on random G(n, p) graphs (JSON summary)
    Fuzz {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        nmin: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        p: Vec<f64>,
        #[arg(long)]
        seed: u64,
        /// Largest |G| also checked by exhaustive search on the product
        #[arg(long = "oracle-limit", default_value_t = 6)]
        oracle_limit: usize,
    },
}

struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure(format!("{}: {e}", p.display())))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn fmt_set<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn fmt_product_set(codes: &[Vertex]) -> String {
    fmt_set(codes.iter().map(|&c| ProductVertex::decode(c)))
}

/// Runs one command line (`args[0]` is the program name).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(status) => status,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Kappa { file } => {
            let g = read_graph(&file)?;
            let (k, witness) = kappa_with_witness(&g);
            writeln!(out, "kappa: {k}")?;
            writeln!(out, "witness: {}", fmt_set(&witness.vertices))?;
        }
        Command::Bnum { file } => {
            let g = read_graph(&file)?;
            let (b, pair) = b_number(&g, None);
            writeln!(out, "b: {b}")?;
            writeln!(out, "X: {}", fmt_set(&pair.x))?;
            writeln!(out, "Y: {}", fmt_set(&pair.y))?;
            writeln!(out, "W: {}", fmt_set(&pair.component_w))?;
            writeln!(out, "value: {}", pair.value)?;
        }
        Command::Product {
            file1,
            file2,
            output,
        } => {
            let g = read_graph(&file1)?;
            let h = read_graph(&file2)?;
            let p = kronecker_product(&g, &h);
            let comments = [format!(
                "Kronecker product: vertex (u,v) is encoded as u*{} + v",
                h.order()
            )];
            write_output(
                output.as_deref(),
                &serialize_with_comments(&p, &comments),
                out,
            )?;
        }
        Command::Doublecover { file, output } => {
            let g = read_graph(&file)?;
            let p = double_cover(&g);
            let comments = [
                "double cover G x K2: vertex (u,a) is encoded as 2u, (u,b) as 2u + 1".to_string(),
            ];
            write_output(
                output.as_deref(),
                &serialize_with_comments(&p, &comments),
                out,
            )?;
        }
        Command::Formula { file } => {
            let g = read_graph(&file)?;
            let (k, _) = kappa_with_witness(&g);
            let (b, _) = b_number(&g, None);
            let witness = witness_product_separator(&g);
            writeln!(out, "kappa: {k}")?;
            writeln!(out, "b: {b}")?;
            writeln!(out, "formula: min{{{}, {b}}} = {}", 2 * k, (2 * k).min(b))?;
            writeln!(out, "witness: {}", fmt_product_set(&witness.vertices))?;
        }
        Command::Verify { file, oracle } => {
            let g = read_graph(&file)?;
            let report = verify_instance(&g, &file.display().to_string(), oracle)?;
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
            if !(report.matches && report.witness_valid) {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
        Command::Fuzz {
            trials,
            nmin,
            nmax,
            p,
            seed,
            oracle_limit,
        } => {
            let config = FuzzConfig {
                trials,
                n_min: nmin,
                n_max: nmax,
                p_choices: p,
                master_seed: seed,
                oracle_limit,
            };
            let summary = fuzz_campaign(&config)?;
            writeln!(out, "{}", serde_json::to_string(&summary)?)?;
            if !summary.all_passed() {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}
