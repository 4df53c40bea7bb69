use clap::{Args, Parser, Subcommand, ValueEnum};
use convexity::DEFAULT_BUDGET;

/// Finite convexity spaces: invariants, witnesses and transversals.
///
/// Documents are given inline (anything starting with `{` or `[`), as a
/// path, or as `-` for standard input.
#[derive(Debug, Parser)]
#[command(name = "convexity", version)]
pub struct Cli {
    /// Elementary-step budget per command.
    #[arg(long, global = true, env = "CONVEXITY_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,

    /// Seed for randomly generated inputs; echoed in the report.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Include wall-clock time in the report (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct SpaceArg {
    /// Space document.
    #[arg(long)]
    pub space: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms and print the canonical form.
    Validate(SpaceArg),
    /// Close a list of generators under intersection.
    Closure {
        #[arg(long)]
        ground_size: usize,
        /// JSON array of element lists.
        #[arg(long)]
        generators: String,
        #[arg(long, default_value_t = convexity::space::DEFAULT_SIZE_CAP)]
        size_cap: usize,
    },
    /// Build a reference space.
    Build {
        /// Builder document, e.g. `{"name":"interval","params":{"n":7}}`.
        #[arg(long, required_unless_present = "random_closure")]
        builder: Option<String>,
        /// Close random generators chosen by `--seed` instead.
        #[arg(long, conflicts_with = "builder")]
        random_closure: bool,
    },
    /// Convex hull of a set.
    Hull {
        #[command(flatten)]
        space: SpaceArg,
        /// JSON element list.
        #[arg(long)]
        set: String,
    },
    /// Radon number with a largest unsplittable set.
    Radon(SpaceArg),
    /// Partition number r_k, or a Tverberg partition of one multiset.
    PartitionNumber {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        k: usize,
        /// Multiset document such as `{"0":2,"3":1}`.
        #[arg(long)]
        multiset: Option<String>,
    },
    /// Helly number with a critical family.
    Helly(SpaceArg),
    /// Radon, partition and Helly numbers with the classical inequalities.
    Verify {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
    },
    /// Clique statistics of a hypergraph or of an intersection hypergraph.
    Hypergraph {
        /// Hypergraph document `{"n":..,"k":..,"edges":[..]}`.
        #[arg(long, conflicts_with_all = ["space", "family"])]
        hypergraph: Option<String>,
        #[arg(long, requires = "family")]
        space: Option<String>,
        #[arg(long, requires = "space")]
        family: Option<String>,
        /// Uniformity of the intersection hypergraph.
        #[arg(long)]
        k: Option<usize>,
        /// Clique size to count and missing-tuple length to search for.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Number of families the colorful Helly construction needs.
    ColorfulM {
        #[arg(long)]
        r: usize,
    },
    /// Rainbow selection with empty intersection.
    Rainbow {
        #[command(flatten)]
        space: SpaceArg,
        /// JSON array of families.
        #[arg(long)]
        families: String,
        #[arg(long)]
        r: usize,
    },
    /// Fraction of intersecting m-tuples and the deepest point.
    FhStats {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        family: String,
        #[arg(long)]
        m: usize,
        /// Uniformity of the intersection hypergraph (defaults to m).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Minimum transversal.
    Tau {
        #[arg(long)]
        system: String,
    },
    /// Fractional transversal number with primal and dual solutions.
    TauStar {
        #[arg(long)]
        system: String,
    },
    /// Minimum weak ε-net.
    WeakNet {
        #[command(flatten)]
        space: SpaceArg,
        /// Request document `{"Y":{..},"epsilon":"p/q"}`.
        #[arg(long)]
        request: String,
        /// Restrict to this system instead of all convex sets.
        #[arg(long)]
        system: Option<String>,
    },
    /// All intersections of subfamilies.
    ClosureCap {
        #[arg(long)]
        system: String,
        #[arg(long, default_value_t = convexity::space::DEFAULT_SIZE_CAP)]
        size_cap: usize,
    },
    /// Whether among any p members some q share a point.
    PqCheck {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        system: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
}

impl Command {
    pub fn verb(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Closure { .. } => "closure",
            Command::Build { .. } => "build",
            Command::Hull { .. } => "hull",
            Command::Radon(_) => "radon",
            Command::PartitionNumber { .. } => "partition-number",
            Command::Helly(_) => "helly",
            Command::Verify { .. } => "verify",
            Command::Hypergraph { .. } => "hypergraph",
            Command::ColorfulM { .. } => "colorful-m",
            Command::Rainbow { .. } => "rainbow",
            Command::FhStats { .. } => "fh-stats",
            Command::Tau { .. } => "tau",
            Command::TauStar { .. } => "tau-star",
            Command::WeakNet { .. } => "weak-net",
            Command::ClosureCap { .. } => "closure-cap",
            Command::PqCheck { .. } => "pq-check",
        }
    }
}
