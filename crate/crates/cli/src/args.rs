use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "coinv", version, about = "Ordered set partitions, coinversion codes and harmonic bases of R_{n,λ}")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Number of variables / entries.
    #[arg(long, global = true)]
    pub n: Option<usize>,

    /// Partition, e.g. "3,3,2,2,0,0" (zero parts count toward s).
    #[arg(long, global = true)]
    pub shape: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub out: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List OP_{n,λ} with code, maxcode and coinv (one record per line).
    Enumerate {
        /// Look up a single ordered set partition instead, e.g. "1,2|3".
        #[arg(long)]
        blocks: Option<String>,
    },
    /// Statistics of one ordered set partition, or membership of a code in C_{n,λ}.
    Code {
        #[arg(long, required_unless_present = "code", conflicts_with = "code")]
        blocks: Option<String>,
        /// Code sequence to test for membership, e.g. "1,0,2".
        #[arg(long)]
        code: Option<String>,
    },
    /// Rebuild the ordered set partition with a given code.
    Insert {
        #[arg(long)]
        code: String,
    },
    /// Hilbert series of R_{n,λ} from coinv.
    Hilbert {
        /// Also compute the graded dimensions by linear algebra and compare.
        #[arg(long)]
        cross_check: bool,
    },
    /// δ_T for a tableau, or δ_σ for an ordered set partition.
    Delta {
        /// Row-major tableau, e.g. "2,1,3|5,4,9|6".
        #[arg(long, required_unless_present = "blocks", conflicts_with = "blocks")]
        tableau: Option<String>,
        #[arg(long)]
        blocks: Option<String>,
        /// Number of parts of λ (tableau input only; defaults to the number of rows).
        #[arg(long)]
        s: Option<usize>,
    },
    /// Run verification suites and print a report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Sweep n = 1..=max-n when --n is absent.
        #[arg(long)]
        max_n: Option<usize>,
        /// Sweep every shape even if --shape is given.
        #[arg(long)]
        all_shapes: bool,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        /// Run at most this many cases per suite; the rest are reported as skipped.
        #[arg(long)]
        budget: Option<usize>,
        /// Include wall-clock times in the report.
        #[arg(long)]
        timings: bool,
        /// Golden fixture file to replay instead of the bundled one.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Compare I_{n,k,s} with I_{n,λ(k,s)} degree by degree.
    Wilson {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Bijection,
    Harmonic,
    Staircase,
    Leading,
    Wilson,
    Golden,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijection => "bijection",
            Suite::Harmonic => "harmonic",
            Suite::Staircase => "staircase",
            Suite::Leading => "leading",
            Suite::Wilson => "wilson",
            Suite::Golden => "golden",
            Suite::All => "all",
        }
    }
}
