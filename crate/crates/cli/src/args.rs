use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use nsq_core::{GeneratorList, QuotientRep};

/// Numerical semigroups, quotients and quotient rank.
#[derive(Debug, Parser)]
#[command(name = "nsq", version)]
pub struct Cli {
    /// Seed for randomized experiments.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiplicity, Frobenius number, genus and gaps.
    Analyze { gens: GeneratorList },
    /// S/d = {t : d·t ∈ S}.
    Quotient {
        gens: GeneratorList,
        #[arg(long)]
        div: u64,
    },
    /// c·S.
    Scale {
        gens: GeneratorList,
        #[arg(long)]
        by: u64,
    },
    /// S + T.
    Sum {
        left: GeneratorList,
        right: GeneratorList,
    },
    /// Combine two representations `gens:d` into one.
    Qsum {
        #[arg(long)]
        a: QuotientRep,
        #[arg(long)]
        b: QuotientRep,
        /// Allow non-coprime denominators; the result then only contains the sum.
        #[arg(long)]
        superset: bool,
    },
    /// Check that `--rep num:d` denotes the semigroup.
    VerifyRep {
        gens: GeneratorList,
        #[arg(long)]
        rep: QuotientRep,
    },
    /// Bounds on the quotient rank, with certificates.
    Rank {
        gens: GeneratorList,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Named families of semigroups.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Count semigroups by genus, or list those with a given multiplicity.
    Enumerate {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        multiplicity: Option<u32>,
    },
    /// Rank bounds for every semigroup with given multiplicity and genus.
    Census {
        #[arg(long)]
        multiplicity: u32,
        #[arg(long)]
        genus: u32,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Monte Carlo experiments.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Largest denominator tried by representation searches.
    #[arg(long)]
    pub dmax: Option<u64>,
    /// Largest numerator generator tried.
    #[arg(long)]
    pub genbound: Option<u64>,
    /// Largest candidate pool for witness searches.
    #[arg(long)]
    pub pool: Option<usize>,
    /// Node budget per search.
    #[arg(long)]
    pub max_nodes: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// ⟨2a+1, 2a+2, ..., 2a+2^k⟩, not a k-quotient.
    Noquotient {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        verify: bool,
    },
    /// Not an intersection of k-quotients.
    Nointersection {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        verify: bool,
        /// Accept a = k·2^k.
        #[arg(long)]
        allow_boundary: bool,
    },
    /// ⟨a, a+d, ..., a+kd⟩.
    Arithmetical {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: u64,
    },
    /// ⟨a, ah+d, ..., ah+kd⟩.
    Generalized {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExperimentCommand {
    /// Generators drawn uniformly from [1, M].
    Box {
        #[arg(long)]
        n: usize,
        /// Comma-separated box bounds.
        #[arg(long = "M", value_delimiter = ',', required = true)]
        bounds: Vec<u64>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Also write the records as CSV to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Enumerate every tuple instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        /// Only keep tuples with gcd 1.
        #[arg(long)]
        coprime: bool,
    },
}
