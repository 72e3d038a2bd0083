use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Parser, Serialize)]
#[command(
    name = "rankmetric",
    version,
    about = "Rank-metric codes: fields, balls, Gabidulin codes, covering bounds, MacWilliams"
)]
pub struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for parallel kernels (0 = one per core).
    #[arg(long, global = true, env = "RANKMETRIC_WORKERS")]
    pub workers: Option<usize>,
    /// Largest number of vectors any single enumeration may visit.
    #[arg(long, global = true, default_value_t = rankmetric::rankgeom::DEFAULT_GUARD)]
    pub guard: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Describe GF(q^m), optionally evaluating one operation.
    Field(FieldCmd),
    /// Rank of a vector over GF(q^m).
    Rank(RankCmd),
    /// Rank ball sizes, volume bounds and two-ball intersections.
    Ball(BallCmd),
    /// Elementary linear subspaces.
    Els(ElsCmd),
    /// Properties of a code read from a file.
    Code(CodeCmd),
    /// Emit a generalized Gabidulin code in the code file format.
    Gabidulin(GabidulinCmd),
    /// Covering bounds over ranges of parameters.
    Bounds(BoundsCmd),
    /// Regenerate the table of covering-code bounds.
    Table1(Table1Cmd),
    /// Regenerate the table of linear covering-code dimensions.
    Table2(Table2Cmd),
    /// Rank distribution of a code and of its dual.
    Macwilliams(MacwilliamsCmd),
    /// Moment identities between a code and its dual.
    Moments(MomentsCmd),
    /// Exhaustive and greedy searches for covering and packing codes.
    Search(SearchCmd),
    /// Run invariant suites.
    Verify(VerifyCmd),
}

#[derive(Debug, Args, Serialize)]
pub struct FieldArgs {
    /// Prime characteristic.
    #[arg(long)]
    pub q: u32,
    /// Extension degree.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Modulus coefficients from the constant term up, e.g. "1 1 1".
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Inv,
}

#[derive(Debug, Args, Serialize)]
pub struct FieldCmd {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, value_enum, requires = "a")]
    pub op: Option<Op>,
    #[arg(long)]
    pub a: Option<u64>,
    /// Second operand, or the exponent for pow.
    #[arg(long)]
    pub b: Option<u64>,
    /// Print the multiplication table (fields of at most 64 elements).
    #[arg(long)]
    pub table: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct RankCmd {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Coordinates as element integers, e.g. "1 2 3".
    #[arg(long)]
    pub vec: String,
}

#[derive(Debug, Args, Serialize)]
pub struct BallCmd {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub r: u32,
    /// Radius of a second ball, for the intersection size.
    #[arg(long, requires = "distance")]
    pub s: Option<u32>,
    /// Distance between the two centers.
    #[arg(long, requires = "s")]
    pub distance: Option<u32>,
}

#[derive(Debug, Args, Serialize)]
pub struct ElsCmd {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub n: Option<usize>,
    /// Enumerate every ELS of this dimension.
    #[arg(long, requires = "n", conflicts_with = "vec")]
    pub dim: Option<usize>,
    /// Report the smallest ELS containing this vector.
    #[arg(long)]
    pub vec: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct CodeCmd {
    /// Code file.
    #[arg(long)]
    pub code: String,
    /// Print the dual code in the code file format instead.
    #[arg(long)]
    pub dual: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct GabidulinCmd {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Frobenius exponent step, coprime to m.
    #[arg(long, default_value_t = 1)]
    pub a: u32,
    /// Evaluation points; defaults to 1, x, ..., x^{n-1}.
    #[arg(long)]
    pub g: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct BoundsCmd {
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// Value or inclusive range such as 2..7.
    #[arg(long)]
    pub m: String,
    #[arg(long)]
    pub n: String,
    #[arg(long)]
    pub rho: String,
}

#[derive(Debug, Args, Serialize)]
pub struct Table1Cmd {
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long, default_value = "2..7")]
    pub m: String,
    /// Defaults to 2..m for each row.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long, default_value = "1..6")]
    pub rho: String,
}

#[derive(Debug, Args, Serialize)]
pub struct Table2Cmd {
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long, default_value = "4..8")]
    pub m: String,
    /// Defaults to 4..m for each row.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long, default_value = "2..6")]
    pub rho: String,
}

#[derive(Debug, Args, Serialize)]
pub struct MacwilliamsCmd {
    /// Code file; the dual distribution is also counted directly.
    #[arg(long, conflicts_with = "counts", required_unless_present = "counts")]
    pub code: Option<String>,
    /// Rank distribution A_0 ... A_n of a linear code.
    #[arg(long, requires_all = ["q", "m"])]
    pub counts: Option<String>,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
}

#[derive(Debug, Args, Serialize)]
pub struct MomentsCmd {
    #[arg(long)]
    pub code: String,
    /// A single nu; every 0..=n by default.
    #[arg(long)]
    pub nu: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchKind {
    /// Smallest covering code, exhaustively.
    Covering,
    /// Greedy covering code.
    Greedy,
    /// Largest code with a given minimum distance.
    Packing,
}

#[derive(Debug, Args, Serialize)]
pub struct SearchCmd {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "covering")]
    pub kind: SearchKind,
    /// Covering radius.
    #[arg(long, required_if_eq_any = [("kind", "covering"), ("kind", "greedy")])]
    pub rho: Option<usize>,
    /// Minimum distance for packing.
    #[arg(long, required_if_eq("kind", "packing"))]
    pub d: Option<usize>,
    /// Only decide whether a covering of exactly this size exists.
    #[arg(long)]
    pub size: Option<usize>,
    /// Search-tree nodes allowed per top-level branch.
    #[arg(long, default_value_t = 50_000_000)]
    pub budget: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyCmd {
    /// field, geometry, codes, bounds, wenum, oracle, acceptance or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 50_000_000)]
    pub budget: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print every warning and failure line.
    #[arg(long)]
    pub verbose: bool,
}

/// "3", "2..7" or "2..=7", all inclusive.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, CliError> {
    let bad = || CliError::Usage(format!("bad range {s:?}"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

/// Whitespace- or comma-separated integers.
pub fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, CliError> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<T>().map_err(|_| CliError::Usage(format!("bad number {t:?} in {s:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..5").unwrap(), 2..=5);
        assert_eq!(parse_range("2..=5").unwrap(), 2..=5);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(parse_list::<u32>("1 2,3").unwrap(), vec![1, 2, 3]);
        assert!(parse_list::<u32>("1 x").is_err());
    }

    #[test]
    fn definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
