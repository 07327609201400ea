//! Generators drawn uniformly from `[1, M]`.
//!
//! Each trial gets its own ChaCha8 stream keyed by `(seed, trial_index)`,
//! so a record does not depend on how trials are scheduled across threads.

use std::io::Write;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::wilson_interval;
use crate::error::{Error, Result};
use crate::rank::{subset_obstruction, SubsetScan, MAX_SUBSET_SIZE};
use crate::semigroup::NumericalSemigroup;

pub const RNG_NAME: &str = "ChaCha8Rng(seed_from_u64(seed), stream = trial index)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sampler {
    Random,
    /// Every ordered tuple in `[1, M]^n` once; `trials` is ignored.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxModelParams {
    pub n: usize,
    #[serde(rename = "M")]
    pub bound: u64,
    pub trials: u64,
    pub seed: u64,
    /// Redraw tuples until their gcd is 1.
    pub coprime_only: bool,
}

impl BoxModelParams {
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::ParameterTooSmall(format!(
                "n = {} must be at least 2",
                self.n
            )));
        }
        if self.n > MAX_SUBSET_SIZE {
            return Err(Error::InputTooLarge(format!(
                "n = {} exceeds {MAX_SUBSET_SIZE}",
                self.n
            )));
        }
        if self.bound == 0 {
            return Err(Error::ZeroParameter { what: "M" });
        }
        if self.trials == 0 {
            return Err(Error::ZeroParameter { what: "trials" });
        }
        Ok(())
    }
}

/// The draws for one trial and the semigroup they generate.
pub fn sample_box(
    params: &BoxModelParams,
    trial_index: u64,
) -> Result<(Vec<u64>, NumericalSemigroup)> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(trial_index);
    let draws = loop {
        let draws: Vec<u64> = (0..params.n)
            .map(|_| rng.random_range(1..=params.bound))
            .collect();
        if !params.coprime_only || draws.iter().fold(0, |g, &x| x.gcd(&g)) == 1 {
            break draws;
        }
    };
    let s = NumericalSemigroup::from_slice(&draws)?;
    Ok((draws, s))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub model: String,
    pub n: usize,
    #[serde(rename = "M")]
    pub bound: u64,
    pub trials: u64,
    pub seed: u64,
    pub coprime_only: bool,
    /// Trials where some `a_I` lies in `⟨a_j : j ∉ I⟩`.
    pub count_a: u64,
    /// Trials certified full rank (the complement of `count_a`).
    pub count_full_rank: u64,
    pub p_a: f64,
    pub wilson_lo: f64,
    pub wilson_hi: f64,
    /// `p_a` bounds the probability that the quotient rank is below `n`.
    pub estimate_kind: String,
    pub rng: String,
}

/// Whether the subset event holds for this tuple of draws.
fn event_a(draws: &[u64]) -> Result<bool> {
    Ok(matches!(subset_obstruction(draws)?, SubsetScan::Witness(_)))
}

fn exhaustive_tuple(mut index: u64, n: usize, bound: u64) -> Vec<u64> {
    let mut draws = vec![0; n];
    for slot in draws.iter_mut().rev() {
        *slot = index % bound + 1;
        index /= bound;
    }
    draws
}

/// One record per box bound in `bounds`; `params.bound` is overridden.
pub fn box_experiment(
    params: &BoxModelParams,
    bounds: &[u64],
    sampler: Sampler,
) -> Result<Vec<ExperimentRecord>> {
    bounds
        .iter()
        .map(|&bound| {
            let p = BoxModelParams {
                bound,
                ..params.clone()
            };
            p.validate()?;
            let (trials, outcomes) = match sampler {
                Sampler::Random => {
                    let outcomes = (0..p.trials)
                        .into_par_iter()
                        .map(|t| sample_box(&p, t).and_then(|(draws, _)| event_a(&draws)))
                        .collect::<Result<Vec<bool>>>()?;
                    (p.trials, outcomes)
                }
                Sampler::Exhaustive => {
                    let total = u32::try_from(p.n)
                        .ok()
                        .and_then(|n| bound.checked_pow(n))
                        .filter(|&t| t <= 1 << 32)
                        .ok_or_else(|| Error::InputTooLarge(format!("{bound}^{} tuples", p.n)))?;
                    let outcomes = (0..total)
                        .into_par_iter()
                        .filter_map(|t| {
                            let draws = exhaustive_tuple(t, p.n, bound);
                            let coprime = draws.iter().fold(0, |g, &x| x.gcd(&g)) == 1;
                            (!p.coprime_only || coprime).then(|| event_a(&draws))
                        })
                        .collect::<Result<Vec<bool>>>()?;
                    (outcomes.len() as u64, outcomes)
                }
            };
            let count_a = outcomes.iter().filter(|&&a| a).count() as u64;
            let (wilson_lo, wilson_hi) = wilson_interval(count_a, trials);
            Ok(ExperimentRecord {
                model: match sampler {
                    Sampler::Random => "box",
                    Sampler::Exhaustive => "box-exhaustive",
                }
                .to_string(),
                n: p.n,
                bound,
                trials,
                seed: p.seed,
                coprime_only: p.coprime_only,
                count_a,
                count_full_rank: trials - count_a,
                p_a: if trials == 0 {
                    0.0
                } else {
                    count_a as f64 / trials as f64
                },
                wilson_lo,
                wilson_hi,
                estimate_kind: "upper bound on P(rank < n)".to_string(),
                rng: match sampler {
                    Sampler::Random => RNG_NAME.to_string(),
                    Sampler::Exhaustive => "none".to_string(),
                },
            })
        })
        .collect()
}

/// Columns `model,n,M,trials,seed,countA,pA,wilson_lo,wilson_hi`.
pub fn write_csv<W: Write>(records: &[ExperimentRecord], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Io(e.to_string());
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "model",
        "n",
        "M",
        "trials",
        "seed",
        "countA",
        "pA",
        "wilson_lo",
        "wilson_hi",
    ])
    .map_err(io)?;
    for r in records {
        w.write_record([
            r.model.clone(),
            r.n.to_string(),
            r.bound.to_string(),
            r.trials.to_string(),
            r.seed.to_string(),
            r.count_a.to_string(),
            format!("{:.6}", r.p_a),
            format!("{:.6}", r.wilson_lo),
            format!("{:.6}", r.wilson_hi),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, bound: u64, trials: u64, seed: u64) -> BoxModelParams {
        BoxModelParams {
            n,
            bound,
            trials,
            seed,
            coprime_only: false,
        }
    }

    #[test]
    fn sampling_is_reproducible_and_in_range() {
        let p = params(3, 10, 1, 1);
        let (a, _) = sample_box(&p, 0).unwrap();
        let (b, _) = sample_box(&p, 0).unwrap();
        assert_eq!(a, b);
        let distinct: std::collections::HashSet<_> =
            (0..20).map(|t| sample_box(&p, t).unwrap().0).collect();
        assert!(distinct.len() > 1);
        let p = params(3, 1_000_000, 1, 9);
        for t in 0..50 {
            let (draws, _) = sample_box(&p, t).unwrap();
            assert!(draws.iter().all(|&x| (1..=1_000_000).contains(&x)));
        }
    }

    #[test]
    fn unit_box_gives_naturals() {
        let (draws, s) = sample_box(&params(2, 1, 1, 0), 0).unwrap();
        assert_eq!(draws, vec![1, 1]);
        assert_eq!(s, NumericalSemigroup::naturals());
        assert!(matches!(
            sample_box(&params(2, 0, 1, 0), 0),
            Err(Error::ZeroParameter { .. })
        ));
    }

    #[test]
    fn exhaustive_pairs_match_divisibility() {
        let rec = &box_experiment(&params(2, 10, 1, 0), &[10], Sampler::Exhaustive).unwrap()[0];
        let mut expected = 0;
        for a in 1..=10u64 {
            for b in 1..=10u64 {
                if a % b == 0 || b % a == 0 {
                    expected += 1;
                }
            }
        }
        assert_eq!(rec.trials, 100);
        assert_eq!(rec.count_a, expected);
        assert_eq!(rec.count_a + rec.count_full_rank, rec.trials);
    }

    #[test]
    fn single_trial_record() {
        let rec = &box_experiment(&params(3, 50, 1, 3), &[50], Sampler::Random).unwrap()[0];
        assert!(rec.p_a == 0.0 || rec.p_a == 1.0);
        assert!(rec.wilson_hi - rec.wilson_lo > 0.5);
    }

    #[test]
    fn csv_header() {
        let recs = box_experiment(&params(2, 5, 10, 1), &[5], Sampler::Random).unwrap();
        let mut buf = Vec::new();
        write_csv(&recs, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(
            text.starts_with("model,n,M,trials,seed,countA,pA,wilson_lo,wilson_hi\nbox,2,5,10,1,")
        );
    }
}
