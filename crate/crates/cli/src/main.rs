use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;
mod report;

#[derive(Parser, Debug)]
#[command(name = "cornerkit", version, about = "Combinatorial checks for Coxeter orbifolds and quasitoric pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Seed for randomized constructions
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Cap on simplices visited by clique enumeration
    #[arg(long, default_value_t = cornerkit::coxeter::DEFAULT_CLIQUE_BUDGET, global = true)]
    pub budget: usize,

    /// Include wall-clock time in reports (makes output nondeterministic)
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct InputArg {
    /// Input file, a shipped data file name, or `-` for stdin (the default)
    #[arg(short, long)]
    pub input: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Is the complex a generalized homology (n-1)-sphere?
    CheckGhs {
        #[command(flatten)]
        input: InputArg,
        /// Dimension n of the resolution; the complex should be (n-1)-dimensional
        #[arg(short = 'n', long = "dim")]
        dim: isize,
        /// Stop after the first dimension with a defect
        #[arg(long)]
        stop_at_first: bool,
    },
    /// Is the complex a polyhedral homology m-manifold?
    CheckPhm {
        #[command(flatten)]
        input: InputArg,
        /// Manifold dimension m
        #[arg(short = 'n', long = "dim")]
        dim: isize,
        #[arg(long)]
        stop_at_first: bool,
    },
    /// Does every simplex generate a finite special subgroup?
    CheckProper {
        #[command(flatten)]
        input: InputArg,
        /// Label every edge with this value when the input has no labels
        #[arg(long)]
        uniform_label: Option<u64>,
        /// Check every simplex instead of only the facets
        #[arg(long)]
        exhaustive: bool,
    },
    /// Does the Coxeter nerve coincide with the complex?
    CheckAspherical {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        uniform_label: Option<u64>,
    },
    /// The complex of vertex sets spanning finite special subgroups
    CoxeterNerve {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        uniform_label: Option<u64>,
        /// Largest simplex size to enumerate (default: dim + 2)
        #[arg(long)]
        max_rank: Option<usize>,
    },
    /// Find a label-preserving isomorphism between two complexes
    Equiv {
        /// First complex
        #[arg(short, long)]
        input: Option<String>,
        /// Second complex
        #[arg(long)]
        other: String,
    },
    /// Integral homology groups
    Homology {
        #[command(flatten)]
        input: InputArg,
        /// Reduced homology, starting in degree -1
        #[arg(long)]
        reduced: bool,
    },
    /// Solve δd = c on the dual cells of the cone on the nerve
    SolveObstruction {
        #[command(flatten)]
        input: InputArg,
        #[arg(short = 'n', long = "dim")]
        dim: usize,
        /// Cochain file
        #[arg(long)]
        cochain: String,
        /// Leave out the top cell
        #[arg(long)]
        no_top: bool,
    },
    /// Homology of the dual cell complex
    Acyclicity {
        #[command(flatten)]
        input: InputArg,
        #[arg(short = 'n', long = "dim")]
        dim: usize,
        #[arg(long)]
        no_top: bool,
    },
    /// Validate a characteristic pair
    CheckCharfun {
        #[command(flatten)]
        input: InputArg,
        /// Divide non-primitive rows by their gcd first
        #[arg(long)]
        normalize: bool,
    },
    /// Characteristic pair of a nonsingular fan
    FromFan {
        #[command(flatten)]
        input: InputArg,
    },
    /// Betti numbers of the quasitoric manifold over a pair
    Betti {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        normalize: bool,
    },
    /// Build a complex; the output is complex JSON
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        /// Size parameter for generators
        size: Option<usize>,
        /// Inputs, `-` for stdin; `join` takes two
        #[arg(short, long)]
        input: Vec<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructKind {
    BoundarySimplex,
    Simplex,
    Cycle,
    Cone,
    Suspension,
    Join,
    Barycentric,
    #[value(name = "barycentric-all-2")]
    BarycentricAllTwo,
    Shuffle,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            log::warn!("could not size the thread pool: {e}");
        }
    }
    match commands::run(&cli.command, &cli.global) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
