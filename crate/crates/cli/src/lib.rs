//! Command-line front end for `hyperdim`. Every subcommand reads an
//! [`ArrangementDocument`] (from a file, or standard input for `-`) and
//! writes JSON, DOT or plain text to standard output.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use hyperdim::coxeter::CoxeterType;

mod commands;
pub mod document;

pub use document::{AnyArrangement, ArrangementDocument};

/// Environment variable holding the default `chromatic` node budget.
pub const BUDGET_ENV: &str = "HYPERDIM_BUDGET";

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input; exit code 2.
    #[error("{0}")]
    Input(String),
    /// A check did not pass; exit code 1.
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Library(#[from] hyperdim::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use hyperdim::Error as E;
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Library(
                E::Parse(_)
                | E::MixedField(_)
                | E::DimensionMismatch { .. }
                | E::EmptyArrangement
                | E::DuplicateHyperplane(..)
                | E::BasePointOnHyperplane(_)
                | E::ZeroNormal(_)
                | E::InvalidRank(_),
            ) => 2,
            CliError::Failed(_) | CliError::Library(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hyperdim",
    version,
    about = "Posets of regions of hyperplane arrangements and their order embeddings"
)]
pub struct Cli {
    /// Worker threads (only affects speed).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the arrangement of a finite Coxeter group.
    Gen {
        #[arg(long = "type", value_parser = parse_type)]
        kind: CoxeterType,
        #[arg(long)]
        n: usize,
    },
    /// Enumerate regions and their separating sets.
    Regions { file: PathBuf },
    /// Print the basic digraph D, the graph G or the cutting digraph Q as DOT.
    Digraph {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "d")]
        which: Which,
        /// Exit 0 if the digraph is acyclic and 1 otherwise.
        #[arg(long)]
        check_acyclic: bool,
    },
    /// List shards with their upper and lower regions.
    Shards { file: PathBuf },
    /// List subcritical pairs.
    Subcritical {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
    },
    /// Build and verify an order embedding from an acyclic covering.
    Embed {
        file: PathBuf,
        /// `auto`, or a JSON file holding one color per hyperplane.
        #[arg(long, default_value = "auto")]
        coloring: String,
    },
    /// Chromatic number of G, or bounds when the budget runs out.
    Chromatic {
        file: PathBuf,
        #[arg(long, env = BUDGET_ENV, default_value_t = hyperdim::embedding::DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Order dimension of the poset of regions by exhaustive search.
    DimOracle {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Find a supersolvable chain.
    Supersolvable { file: PathBuf },
    /// Build and verify a zonotopal embedding of a supersolvable arrangement.
    Zonotope { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "Q", alias = "q")]
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Shards,
    Both,
}

fn parse_type(s: &str) -> Result<CoxeterType, String> {
    s.parse().map_err(|e: hyperdim::Error| e.to_string())
}

/// Text for standard output, plus whether the command succeeded. A command
/// can print its result and still fail (exit 1), e.g. on a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub success: bool,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            success: true,
        }
    }
}

impl Command {
    /// The input document path, if the command takes one.
    pub fn input(&self) -> Option<&Path> {
        match self {
            Command::Gen { .. } => None,
            Command::Regions { file }
            | Command::Digraph { file, .. }
            | Command::Shards { file }
            | Command::Subcritical { file, .. }
            | Command::Embed { file, .. }
            | Command::Chromatic { file, .. }
            | Command::DimOracle { file, .. }
            | Command::Supersolvable { file }
            | Command::Zonotope { file } => Some(file),
        }
    }
}

/// Runs a parsed command, reading `-` from `stdin`.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let input = match cli.command.input() {
        Some(file) if file.as_os_str() == "-" => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Some(s)
        }
        Some(file) => Some(std::fs::read_to_string(file)?),
        None => None,
    };
    let input = input.as_deref();
    match cli.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Input(format!("cannot start {n} threads: {e}")))?;
            pool.install(|| commands::dispatch(&cli.command, input))
        }
        None => commands::dispatch(&cli.command, input),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    out: &mut dyn std::io::Write,
    err: &mut dyn std::io::Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(o) => {
            let _ = out.write_all(o.stdout.as_bytes());
            if o.success {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
