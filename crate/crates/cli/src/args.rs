use std::net::SocketAddr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rootloop_core::{EqualityMode, DEFAULT_PATTERN_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "rootloop",
    version,
    about = "Exact cluster algebra computations on valued quivers"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Seed equality: strict, symmetric or symmetric-unsigned.
    #[arg(long, global = true, default_value = "symmetric")]
    pub mode: EqualityMode,
    /// Largest number of seeds or quivers explored by any enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_PATTERN_CAP)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

/// Where the root seed comes from.
#[derive(Debug, Clone, Args)]
pub struct QuiverArgs {
    /// Builtin name (a2, b2, g2, a3, d4, w4, cycle3, ...) or a quiver file.
    #[arg(long, short)]
    pub quiver: String,
    /// 1-based mutable vertices; every other vertex is frozen.
    #[arg(long)]
    pub mutable: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Applies a word to the initial seed and prints every produced variable.
    Mutate {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// Comma-separated 1-based vertices in application order.
        #[arg(long, short, allow_hyphen_values = true)]
        word: String,
    },
    /// Enumerates the cluster pattern.
    Explore {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// Print the pattern as DOT instead of a report.
        #[arg(long)]
        dot: bool,
    },
    /// Decides finite type.
    Finite {
        #[command(flatten)]
        quiver: QuiverArgs,
    },
    /// Decides finite type and names the Dynkin type.
    Classify {
        #[command(flatten)]
        quiver: QuiverArgs,
    },
    /// Lists freely reduced rooted loops up to a length.
    Loops {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Computes the rooted mutation group and its Cayley table.
    Group {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// Longest loop searched; defaults to twice the pattern size times the rank.
        #[arg(long)]
        max_walk_len: Option<usize>,
        #[arg(long, default_value_t = 10_000)]
        max_elements: usize,
    },
    /// Lists one coset per seed of the pattern.
    Cosets {
        #[command(flatten)]
        quiver: QuiverArgs,
    },
    /// Tests whether two finite-type seeds give isomorphic cluster algebras.
    Iso {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// Second quiver, builtin or file.
        #[arg(long)]
        other: String,
    },
    /// Serves the session API under /v1/.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        addr: SocketAddr,
    },
    /// Prints the quiver, or its cluster pattern, as DOT.
    ExportDot {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long)]
        pattern: bool,
    },
}
