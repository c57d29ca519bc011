use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "sepcode",
    version,
    about = "Build, verify and trace fingerprinting codes"
)]
pub struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub json: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the length-3 code over q symbols and write it to a file.
    Construct(ConstructArgs),
    /// Check whether a code is frameproof, separable or strongly separable.
    Verify(VerifyArgs),
    /// Identify colluders from a feasible set such as "**0".
    Trace(TraceArgs),
    /// Run embedding, averaging attack and detection for a coalition.
    Simulate(SimulateArgs),
    /// Replace each q-ary symbol by a one-hot block of q bits.
    Compose(ComposeArgs),
}

#[derive(Debug, clap::Args, Serialize)]
pub struct ConstructArgs {
    #[arg(long)]
    pub q: u32,
    /// Number of infinity symbols; chosen to maximize the size when omitted.
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Fpc,
    Sc,
    Ssc,
}

#[derive(Debug, clap::Args, Serialize)]
pub struct VerifyArgs {
    pub code: PathBuf,
    #[arg(long, value_enum)]
    pub property: Property,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    /// Use the exhaustive subset enumeration for SSC.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Fpc,
    Ssc,
}

#[derive(Debug, clap::Args, Serialize)]
pub struct TraceArgs {
    pub code: PathBuf,
    /// One token per position from 0, 1 and *.
    #[arg(long, value_name = "PATTERN")]
    pub r: String,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    #[arg(long, value_enum, default_value_t = Algorithm::Ssc)]
    pub algorithm: Algorithm,
}

#[derive(Debug, clap::Args, Serialize)]
pub struct SimulateArgs {
    pub code: PathBuf,
    /// 1-based codeword indices, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub colluders: Vec<usize>,
    /// Host signal dimension; twice the code length when omitted.
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long, default_value_t = 0.1)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = sepcode::signal::DEFAULT_EPS)]
    pub eps: f64,
    /// Feed the detected feasible set to the SSC tracer.
    #[arg(long)]
    pub then_trace: bool,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
}

#[derive(Debug, clap::Args, Serialize)]
pub struct ComposeArgs {
    pub code: PathBuf,
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
}
