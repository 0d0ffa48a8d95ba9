use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixhom::exactlin::RingSpec;

use crate::format::parse_range;
use crate::report::Format;

fn range_arg(s: &str) -> Result<(i64, i64), String> {
    parse_range(s).ok_or_else(|| format!("expected `a..b` with a <= b, found `{s}`"))
}

fn ring_arg(s: &str) -> Result<RingSpec, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Debug, Clone, Parser)]
#[command(name = "mixhom", version, about = "Hochschild and cyclic homology of presented dg categories")]
pub struct JobSpec {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Parse and validate a presentation.
    Validate(InputArgs),
    /// Hochschild homology.
    Hh(HomologyArgs),
    /// Cyclic homology.
    Hc(HomologyArgs),
    /// Negative cyclic and periodic cyclic homology at a u-truncation order.
    Hp(PeriodicArgs),
    /// Semi-free resolution tower with its ledger and resolution check.
    Resolve(ResolveArgs),
    /// Tensor every hom complex with 0 → R → R → R/m → 0 and test acyclicity.
    ProbeFlat(FlatArgs),
    /// Čech hypercohomology of a cover.
    Cech(CoverArgs),
    /// Mayer–Vietoris bookkeeping for a two-patch cover.
    Mv(CoverArgs),
    /// Compare a presentation with a cover of the scheme it generates.
    Keller(KellerArgs),
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    pub input: PathBuf,
    /// Replace the ring named in the input file.
    #[arg(long, value_parser = ring_arg)]
    pub ring: Option<RingSpec>,
}

#[derive(Debug, Clone, Args)]
pub struct HomologyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Homological degrees `a..b`.
    #[arg(long, value_parser = range_arg, allow_hyphen_values = true)]
    pub degrees: (i64, i64),
    /// Weights `a..b`; defaults to the weight window of the input.
    #[arg(long, value_parser = range_arg, allow_hyphen_values = true)]
    pub weights: Option<(i64, i64)>,
    /// Use the unreduced Hochschild complex.
    #[arg(long)]
    pub unreduced: bool,
    /// Resolve non-flat input first, with at most this many stages.
    #[arg(long)]
    pub stages: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct PeriodicArgs {
    #[command(flatten)]
    pub homology: HomologyArgs,
    /// u-truncation order N; stabilization is judged against N + 1.
    #[arg(long)]
    pub utrunc: i64,
}

#[derive(Debug, Clone, Args)]
pub struct ResolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub stages: usize,
    /// Generators and paths are kept up to this homological degree.
    #[arg(long)]
    pub degcap: i64,
    #[arg(long, value_parser = range_arg, allow_hyphen_values = true)]
    pub weights: (i64, i64),
    /// Degrees in which the resolution is checked; at most `degcap - 1`.
    #[arg(long, value_parser = range_arg, allow_hyphen_values = true)]
    pub check: Option<(i64, i64)>,
}

#[derive(Debug, Clone, Args)]
pub struct FlatArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub modulus: u64,
    #[arg(long, value_parser = range_arg, allow_hyphen_values = true)]
    pub degrees: (i64, i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Hh,
    Hc,
}

#[derive(Debug, Clone, Args)]
pub struct CoverArgs {
    /// `p1`, `a1`, `a1-bar` or a cover file.
    #[arg(long)]
    pub cover: String,
    #[arg(long, value_parser = ring_arg)]
    pub ring: Option<RingSpec>,
    #[arg(long, value_parser = range_arg, allow_hyphen_values = true)]
    pub weights: Option<(i64, i64)>,
    #[arg(long, value_parser = range_arg, allow_hyphen_values = true)]
    pub degrees: (i64, i64),
    #[arg(long, value_enum, default_value = "hh")]
    pub mode: ModeArg,
}

#[derive(Debug, Clone, Args)]
pub struct KellerArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub cover: CoverArgs,
    /// Weights of the categorical side; defaults to the weight window of the input.
    #[arg(long, value_parser = range_arg, allow_hyphen_values = true)]
    pub cat_weights: Option<(i64, i64)>,
    #[arg(long)]
    pub stages: Option<usize>,
}
