use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Parser, Debug)]
#[command(name = "gtboson", version, about = "Exact Gel'fand patterns, boson bases and SU(2)/SU(3) coupling coefficients")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Output format [default: text]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Directory for relative --output paths
    #[arg(long, global = true, env = "GTBOSON_OUTPUT_DIR")]
    pub output_dir: Option<PathBuf>,
    /// TOML file with defaults for group, format, normalization, jobs, output_dir
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads for table construction
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormArg {
    #[value(name = "3j")]
    #[serde(rename = "3j")]
    ThreeJ,
    Cg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisMethod {
    Kernel,
    Closed,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Pn1Method {
    Closed,
    Bruteforce,
}

#[derive(Args, Debug)]
pub struct LabelArgs {
    /// u<n> or su<n>; su<n> labels are shifted to end in 0 and may omit it
    #[arg(long)]
    pub group: Option<String>,
    /// Highest weight, e.g. 2,1,0
    #[arg(long, allow_hyphen_values = true)]
    pub label: String,
}

#[derive(Args, Debug)]
pub struct TripleArgs {
    /// su3 (the only coupling group with tables)
    #[arg(long)]
    pub group: Option<String>,
    /// Three labels, e.g. --label 2,1,0 --label 2,1,0 --label 2,1,0
    #[arg(long, num_args = 1, required = true, allow_hyphen_values = true)]
    pub label: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gel'fand patterns of an irrep in canonical order
    Patterns(LabelArgs),
    /// Dimension by the Weyl formula
    Dim(LabelArgs),
    /// Normalised basis polynomials of a pattern or a whole irrep
    Basis {
        #[arg(long)]
        group: Option<String>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "pattern", required_unless_present = "pattern")]
        label: Option<String>,
        /// Compact pattern, rows separated by ';', e.g. 2,1,0;2,1;2
        #[arg(long, allow_hyphen_values = true)]
        pattern: Option<String>,
        #[arg(long, value_enum, default_value = "kernel")]
        method: BasisMethod,
    },
    /// P_n(1) for a U(n-1) pattern
    Pn1 {
        #[arg(long, allow_hyphen_values = true)]
        pattern: String,
        #[arg(long, value_enum, default_value = "closed")]
        method: Pn1Method,
    },
    /// SU(2) 3-j symbol
    Threej {
        /// j1,j2,j3 as integers or half-integers (0.5 or 1/2)
        #[arg(long, allow_hyphen_values = true)]
        j: String,
        /// m1,m2,m3
        #[arg(long, allow_hyphen_values = true)]
        m: String,
    },
    /// SU(3) coupling table of three irreps
    Su3cg {
        #[command(flatten)]
        labels: TripleArgs,
        #[arg(long, value_enum)]
        normalization: Option<NormArg>,
    },
    /// SU(3) isoscalar factors of three irreps
    Isoscalar {
        #[command(flatten)]
        labels: TripleArgs,
    },
    /// Run the oracle suites
    Selftest {
        /// Suite name or group: dimension, fixtures, orthonormality, closed-forms, pn1, u4-free, kernel, su2, su3, gelfand, basis
        #[arg(long)]
        suite: Option<String>,
    },
}
