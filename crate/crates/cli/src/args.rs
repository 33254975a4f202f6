use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nnhier::{KnnBackend, Metric};

/// Seed used by the benchmark subcommands unless one is given.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(
    name = "nnhier",
    version,
    about = "Hierarchical clustering from k-nearest-neighbor graph components"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cluster a CSV of points and export the hierarchy or a partition
    Cluster(ClusterArgs),
    /// Measure how k* grows with N on synthetic 2-D data
    BenchKstar(BenchKstarArgs),
    /// Time hierarchy construction per backend over a range of N
    Scaling(ScalingArgs),
}

#[derive(Debug, Args)]
pub struct ClusterArgs {
    /// Input CSV, one point per row, numeric columns only; a
    /// non-numeric first row is treated as a header
    #[arg(long)]
    pub input: PathBuf,

    #[arg(long, value_enum, default_value_t = MetricArg::Euclidean)]
    pub metric: MetricArg,

    #[arg(long, value_enum, default_value_t = BackendArg::Kdtree)]
    pub backend: BackendArg,

    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,

    /// Flat partition to include: labels-csv output requires one
    #[arg(long, value_enum, default_value_t = PartitionArg::None)]
    pub partition: PartitionArg,

    /// Write the artifact here instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchKstarArgs {
    /// Dataset sizes, e.g. --n 128 512 2048
    #[arg(long, num_args = 1.., required = true)]
    pub n: Vec<usize>,

    #[arg(long, default_value_t = 20)]
    pub trials: usize,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t = DistArg::Uniform)]
    pub dist: DistArg,

    /// Write the CSV report here instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScalingArgs {
    /// Dataset sizes, e.g. --n 1024 4096 16384
    #[arg(long, num_args = 1.., required = true)]
    pub n: Vec<usize>,

    #[arg(long, value_enum, default_value_t = BackendArg::Kdtree)]
    pub backend: BackendArg,

    #[arg(long, default_value_t = 1)]
    pub repeats: usize,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Write the CSV report here instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Euclidean,
    Manhattan,
    Chebyshev,
}

impl MetricArg {
    pub fn to_metric(self) -> Metric {
        match self {
            MetricArg::Euclidean => Metric::Euclidean,
            MetricArg::Manhattan => Metric::Manhattan,
            MetricArg::Chebyshev => Metric::Chebyshev,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MetricArg::Euclidean => "euclidean",
            MetricArg::Manhattan => "manhattan",
            MetricArg::Chebyshev => "chebyshev",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Brute,
    Kdtree,
}

impl BackendArg {
    pub fn to_backend(self) -> KnnBackend {
        match self {
            BackendArg::Brute => KnnBackend::Brute,
            BackendArg::Kdtree => KnnBackend::KdTree,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BackendArg::Brute => "brute",
            BackendArg::Kdtree => "kdtree",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Newick,
    LabelsCsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PartitionArg {
    Natural,
    Coarsest,
    None,
}

impl PartitionArg {
    pub fn name(self) -> &'static str {
        match self {
            PartitionArg::Natural => "natural",
            PartitionArg::Coarsest => "coarsest",
            PartitionArg::None => "none",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DistArg {
    Uniform,
    Gaussian,
}
