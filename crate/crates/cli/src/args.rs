use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "binmat", version, about = "Critical numbers, PG-containment and verifiers for binary matroids")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads for sharded work.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Critical number and a disjoint subspace of that codimension.
    Chi(FileArg),
    /// Whether the matroid avoids PG(t-1,2).
    PgFree {
        file: PathBuf,
        #[arg(long)]
        t: u32,
    },
    /// The doubling M_v.
    Double {
        file: PathBuf,
        #[arg(long)]
        v: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Restriction to the span of the given vectors, in its canonical coordinates.
    Restrict {
        file: PathBuf,
        /// Spanning vectors of the subspace.
        #[arg(long, num_args = 1.., required = true)]
        basis: Vec<u32>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Fourier bias of the edge set and its complement.
    Bias(FileArg),
    /// Sum over edges v of |Y ∩ (Y+v)|, direct and spectral, with the spectral bound.
    TripleCount(FileArg),
    /// Write a standard matroid.
    Construct {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        t: Option<u32>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check counterexample hypotheses and necessary conditions.
    Audit {
        file: PathBuf,
        #[arg(long)]
        t: u32,
        /// Evaluate conditions even if a hypothesis fails.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Exhaustive or sampled verification of a statement.
    Verify(VerifyArgs),
    /// The four-element coset case table.
    CosetCheck,
    /// Check a 30-vertex graph, or search for a counterexample.
    GraphLemma {
        /// Graph file, or one of `k30`, `k30-matching`, `triangles`.
        #[arg(long, conflicts_with = "search")]
        graph: Option<String>,
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Pair up edges so that every pair sums to an edge.
    Match(FileArg),
}

#[derive(Args, Debug)]
pub struct FileArg {
    pub file: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    BoseBurton,
    FullPg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    BoseBurton,
    Main,
    Pie,
    Quotp,
    Quotx,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: Theorem,
    #[arg(long)]
    pub rank: u32,
    #[arg(long)]
    pub t: Option<u32>,
    #[arg(long, value_enum, default_value_t = ModeArg::Random)]
    pub mode: ModeArg,
    /// Samples in random mode.
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Candidate cap for exhaustive mode.
    #[arg(long)]
    pub cap: Option<u128>,
}
