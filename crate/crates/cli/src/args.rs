use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "promaton", version, about = "Promise problems for classical finite automata")]
pub struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Write the JSON report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Seed for sampled experiments.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(flatten)]
    pub caps: CapArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct CapArgs {
    #[arg(long, global = true, env = "PROMATON_MAX_DFA_STATES")]
    pub max_dfa_states: Option<usize>,
    #[arg(long, global = true, env = "PROMATON_MAX_SUBSET_STATES")]
    pub max_subset_states: Option<usize>,
    #[arg(long, global = true, env = "PROMATON_MAX_CRITICAL_LENGTH")]
    pub max_critical_length: Option<u64>,
    #[arg(long, global = true, env = "PROMATON_MAX_ENUMERATION")]
    pub max_enumeration: Option<usize>,
    #[arg(long, global = true, env = "PROMATON_MAX_EXACT_BITS")]
    pub max_exact_bits: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit a construction as a JSON machine.
    Build(BuildArgs),
    /// Run a machine file on a word.
    Simulate(SimulateArgs),
    /// Transform a machine file.
    Convert(ConvertArgs),
    /// Evaluate a size trade-off formula.
    Bounds(BoundsArgs),
    /// Exact and sampled probability analysis.
    #[command(subcommand)]
    Prob(ProbCommand),
    /// Smallest machine solving a promise problem on bounded instances.
    Minsize(MinsizeArgs),
    /// Check the n → n+n! pumping equalities on a machine file.
    Pumping(PumpingArgs),
    /// Verify a machine or construction against a promise problem.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Run the acceptance suite.
    ReproduceAll(ReproduceArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    EvenoddDfa,
    EvenoddAfa,
    EvenoddAfaEpsfree,
    ParityDfa,
    TriosDfa,
    #[value(name = "trios-2dfa")]
    Trios2dfa,
    TriosPfa,
    UpPfa,
    UpDfa,
}

/// Parameters shared by constructions and problem specs.
#[derive(Args, Debug, Clone, Default)]
pub struct Params {
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Rational such as `9/10`.
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long)]
    pub c: Option<u64>,
    /// Parity problems: lengths divisible by this are members.
    #[arg(long)]
    pub modulus: Option<u64>,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    pub construction: Construction,
    #[command(flatten)]
    pub params: Params,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[arg(long, alias = "from")]
    pub machine: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Algorithm {
    Subset,
    EpsRemove,
    UnaryAfaDfa,
    Minimize,
}

#[derive(Args, Debug)]
pub struct ConvertArgs {
    #[arg(long, alias = "machine")]
    pub from: PathBuf,
    #[arg(long)]
    pub algorithm: Algorithm,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Formula {
    #[value(name = "2nfa-to-dfa")]
    TwoNfa,
    #[value(name = "afa-to-dfa")]
    Afa,
    #[value(name = "unary-afa-to-dfa")]
    UnaryAfa,
    #[value(name = "svfa-to-dfa")]
    Svfa,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub formula: Formula,
    #[arg(long)]
    pub n: u64,
}

#[derive(Subcommand, Debug)]
pub enum ProbCommand {
    /// Exact outcome distribution of a PFA on a word.
    Exact {
        #[arg(long)]
        machine: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Monte Carlo estimate, reproducible from `--seed`.
    Mc {
        #[arg(long)]
        machine: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
    /// Las Vegas contract on every instance up to a length.
    Lasvegas(LasVegasArgs),
    /// Compose t rounds of an (a, r) round model.
    ExpeqCompose(ComposeArgs),
    /// Round model parameters for ExpEQ(c) on (a^m b^n)^t.
    ExpeqParams {
        #[arg(long)]
        c: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Args, Debug)]
pub struct LasVegasArgs {
    /// PFA file; defaults to the TRIOS machine for `--n`/`--r`.
    #[arg(long)]
    pub machine: Option<PathBuf>,
    /// Problem family; defaults to `trios`.
    #[arg(long)]
    pub problem: Option<ProblemKind>,
    #[command(flatten)]
    pub params: Params,
    /// Required success probability; defaults to 1−((n−1)/n)^r for TRIOS.
    #[arg(long)]
    pub threshold: Option<String>,
    #[arg(long)]
    pub max_length: Option<usize>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Side {
    /// r = a/c (equal exponents)
    Yes,
    /// r = c·a (different exponents)
    No,
}

#[derive(Args, Debug)]
pub struct ComposeArgs {
    #[arg(long)]
    pub c: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
    /// Extremal reject probability for the ExpEQ model.
    #[arg(long)]
    pub side: Option<Side>,
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub r: Option<String>,
    #[arg(long)]
    pub t: Option<u64>,
    /// Precision of the enclosure used when exact arithmetic is capped.
    #[arg(long, default_value_t = 256)]
    pub bits: u32,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProblemKind {
    Evenodd,
    Trios,
    Up,
    Parity,
    Expeq,
}

#[derive(Args, Debug)]
pub struct ProblemArgs {
    #[arg(long)]
    pub problem: ProblemKind,
    #[command(flatten)]
    pub params: Params,
    #[arg(long)]
    pub max_length: Option<usize>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Kind {
    UnaryDfa,
    Dfa,
    UnaryNfa,
}

#[derive(Args, Debug)]
pub struct MinsizeArgs {
    #[arg(long)]
    pub kind: Kind,
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long)]
    pub max_states: Option<usize>,
}

#[derive(Args, Debug)]
pub struct PumpingArgs {
    #[arg(long)]
    pub machine: PathBuf,
    /// Unary check: prefix length.
    #[arg(long)]
    pub m: Option<u64>,
    /// Unary check: pumping multipliers.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub h: Vec<u64>,
    /// ExpEQ traversal check with this many blocks (DFA over {a, b}).
    #[arg(long)]
    pub expeq_t: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Las Vegas TRIOS machine against its bound.
    LvTrios {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// A machine file against a problem.
    Promise {
        #[arg(long)]
        machine: PathBuf,
        #[command(flatten)]
        problem: ProblemArgs,
    },
    /// A built-in construction against its own problem.
    Construction {
        construction: Construction,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// No enumerated word is both yes and no.
    Disjoint {
        #[command(flatten)]
        problem: ProblemArgs,
    },
}

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    #[arg(long, default_value = "fast")]
    pub tier: String,
}
