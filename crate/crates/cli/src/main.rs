mod args;
mod render;

use std::process::ExitCode;
use std::time::Duration;

use clap::Parser;
use nsq_core::explore::{self, BoxModelParams, Sampler};
use nsq_core::families;
use nsq_core::{Error, NumericalSemigroup, SearchBudget};

use args::{BudgetArgs, Cli, Command, ExperimentCommand, FamilyCommand};
use render::Output;

const EXIT_USAGE: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;
const EXIT_BUDGET: u8 = 4;

/// A finished command: what to print and how to exit.
struct Outcome {
    output: Output,
    code: u8,
}

impl From<Output> for Outcome {
    fn from(output: Output) -> Self {
        Self { output, code: 0 }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::VerificationFailed(_) => EXIT_VERIFICATION,
        Error::BudgetExceeded(_) | Error::SearchExhausted(_) => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn budget(args: &BudgetArgs) -> Result<SearchBudget, Error> {
    let mut b = SearchBudget::default();
    if let Some(d) = args.dmax {
        b.d_max = d;
    }
    b.gen_bound = args.genbound.or(b.gen_bound);
    if let Some(p) = args.pool {
        b.pool = p;
    }
    if let Some(n) = args.max_nodes {
        b.max_nodes = n;
    }
    b.time_limit = time_limit()?;
    Ok(b)
}

fn time_limit() -> Result<Option<Duration>, Error> {
    match std::env::var("NSQ_BUDGET_MS") {
        Ok(ms) => ms
            .trim()
            .parse::<u64>()
            .map(|ms| Some(Duration::from_millis(ms)))
            .map_err(|e| Error::Parse {
                input: ms,
                reason: format!("NSQ_BUDGET_MS: {e}"),
            }),
        Err(_) => Ok(None),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let json = cli.json;
    Ok(match &cli.command {
        Command::Analyze { gens } => {
            let s = NumericalSemigroup::from_generators(gens)?;
            render::analysis(&s, json).into()
        }
        Command::Quotient { gens, div } => {
            let s = NumericalSemigroup::from_generators(gens)?;
            render::semigroup(&nsq_core::quotient(&s, *div)?, json).into()
        }
        Command::Scale { gens, by } => {
            let s = NumericalSemigroup::from_generators(gens)?;
            render::semigroup(&nsq_core::scale(&s, *by)?, json).into()
        }
        Command::Sum { left, right } => {
            let s = NumericalSemigroup::from_generators(left)?;
            let t = NumericalSemigroup::from_generators(right)?;
            render::semigroup(&nsq_core::add(&s, &t)?, json).into()
        }
        Command::Qsum { a, b, superset } => {
            let rep = if *superset {
                nsq_core::quotient_sum_superset(a, b)?
            } else {
                nsq_core::quotient_sum_coprime(a, b)?
            };
            render::rep(&rep, json).into()
        }
        Command::VerifyRep { gens, rep } => {
            let s = NumericalSemigroup::from_generators(gens)?;
            let ok = nsq_core::verify_rep(&s, rep)?;
            Outcome {
                output: render::verification(&s, rep, ok, json),
                code: if ok { 0 } else { EXIT_VERIFICATION },
            }
        }
        Command::Rank { gens, budget: b } => {
            let s = NumericalSemigroup::from_generators(gens)?;
            let bounds = nsq_core::quotient_rank_bounds(&s, &budget(b)?);
            let code = if bounds.budget_exhausted {
                EXIT_BUDGET
            } else {
                0
            };
            Outcome {
                output: render::rank(&s, &bounds, json),
                code,
            }
        }
        Command::Family(family) => run_family(family, json)?,
        Command::Enumerate {
            genus,
            multiplicity,
        } => match multiplicity {
            Some(m) => render::population(*m, *genus, &explore::enumerate_fixed(*m, *genus)?, json),
            None => render::genus_counts(&explore::genus_counts(*genus)?, json),
        }
        .into(),
        Command::Census {
            multiplicity,
            genus,
            budget: b,
        } => {
            let population = explore::enumerate_fixed(*multiplicity, *genus)?;
            let census = explore::rank_census(&population, &budget(b)?);
            render::census(&census, json).into()
        }
        Command::Experiment(ExperimentCommand::Box {
            n,
            bounds,
            trials,
            csv,
            exhaustive,
            coprime,
        }) => {
            let params = BoxModelParams {
                n: *n,
                bound: bounds[0],
                trials: *trials,
                seed: cli.seed,
                coprime_only: *coprime,
            };
            let sampler = if *exhaustive {
                Sampler::Exhaustive
            } else {
                Sampler::Random
            };
            let records = explore::box_experiment(&params, bounds, sampler)?;
            if let Some(path) = csv {
                let file = std::fs::File::create(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                explore::write_csv(&records, file)?;
            }
            render::experiment(&records, json)?.into()
        }
    })
}

fn run_family(family: &FamilyCommand, json: bool) -> Result<Outcome, Error> {
    Ok(match family {
        FamilyCommand::Noquotient { k, a, verify } => {
            let (inst, s) = families::noquotient_family(*k, *a)?;
            let proof = verify
                .then(|| families::verify_noquotient_instance(&inst))
                .transpose()?
                .map(|p| render::Proof::new(&p, p.table.len()));
            render::family(&inst, &s, proof, json).into()
        }
        FamilyCommand::Nointersection {
            k,
            a,
            verify,
            allow_boundary,
        } => {
            let (inst, s) = families::nointersection_family(*k, *a, *allow_boundary)?;
            let proof = verify
                .then(|| families::verify_nointersection_instance(&inst))
                .transpose()?
                .map(|p| render::Proof::new(&p, p.table.len()));
            render::family(&inst, &s, proof, json).into()
        }
        FamilyCommand::Arithmetical { a, d, k } => {
            render::semigroup(&families::arithmetical_family(*a, *d, *k)?, json).into()
        }
        FamilyCommand::Generalized { a, h, d, k } => render::semigroup(
            &families::generalized_arithmetical_family(*a, *h, *d, *k)?,
            json,
        )
        .into(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("nsq: cannot start {threads} worker threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(Outcome { output, code }) => {
            if let Err(e) = output.print() {
                eprintln!("nsq: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("nsq: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
