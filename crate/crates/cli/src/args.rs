use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Turán numbers for odd-ballooning of bipartite graphs.
///
/// Graphs are given as named constructors (`star:3`, `path:5`, `cycle:4`,
/// `kbip:2,3`, `complete:4`, `turan:2,7`, `triangle`), graph6 strings, or
/// paths to edge-list files.
#[derive(Debug, Parser)]
#[command(name = "oddballoon", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Directory for cached oracle results.
    #[arg(long, global = true, env = "ODDBALLOON_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Include wall-clock timing in the report (makes reports differ between runs).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Graph6,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// γ, β, α′, degrees and the canonical bipartition.
    Invariants(GraphArg),
    /// Build H(t).
    Balloon(BalloonArgs),
    /// All graphs obtained from the base by simultaneous vertex divisions.
    Divisions(GraphArg),
    /// The 2-decomposition family and its profile (q̃, k, B̃).
    Decompose(BalloonArgs),
    /// Two-sided bound on ex(n, H(t)).
    Bounds(BoundsArgs),
    /// Build a graph of the family 𝓕(n, q, k, ·).
    Construct(ConstructArgs),
    /// Decide whether a host contains a pattern, with a certificate.
    CheckFree(CheckFreeArgs),
    /// Exact ex(n, family) by exhaustive search (n ≤ 9).
    Oracle(OracleArgs),
    /// Check a closed form end to end: build, certify, compare with the bounds.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct GraphArg {
    #[arg(long)]
    pub graph: String,
}

#[derive(Debug, Args)]
pub struct BalloonArgs {
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub t: usize,
    /// Per-edge cycle lengths in edge-id order.
    #[arg(long, value_delimiter = ',')]
    pub lengths: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub balloon: BalloonArgs,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Larger,
    Smaller,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Graph on q − 1 vertices placed inside I_{q−1}; defaults to K_{q−1}.
    #[arg(long)]
    pub inner: Option<String>,
    #[arg(long, value_enum, default_value_t = SideArg::Larger)]
    pub side: SideArg,
}

#[derive(Debug, Args)]
pub struct CheckFreeArgs {
    /// Host graph.
    #[arg(long)]
    pub graph: String,
    /// Pattern graph; ballooned first when --t is given.
    #[arg(long)]
    pub forbid: String,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub lengths: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub n: usize,
    /// Forbidden graph; repeat for a family.
    #[arg(long)]
    pub forbid: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CorollaryArg {
    Star,
    Path,
    EvenCycle,
    GoodTree,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub corollary: CorollaryArg,
    /// Star size.
    #[arg(long)]
    pub a: Option<usize>,
    /// Number of path edges, or cycle length.
    #[arg(long)]
    pub m: Option<usize>,
    /// The tree, for good-tree.
    #[arg(long)]
    pub graph: Option<String>,
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub n: usize,
}
