//! Bounded search for `k`-quotient representations.
//!
//! For each denominator `d`, numerator generators are chosen in increasing
//! order while tracking which integers up to `L = d · max(F, max a)` the
//! partial numerator semigroup `N` reaches:
//!
//! - gap pruning: `d·g ∈ N` for a gap `g` can never be undone by adding
//!   generators, so such branches are cut;
//! - cover bound: the smallest uncovered target `d·a` must be reached by a
//!   generator no larger than itself, which bounds the next choice;
//! - generators already in `N`, or larger than `L`, never help.
//!
//! Within the bounds the search is complete: if a representation exists,
//! one with no more generators is found.

use crate::budget::{Meter, SearchBudget};
use crate::error::{Error, Result};
use crate::quotient::{verify_rep, QuotientRep};
use crate::semigroup::NumericalSemigroup;

/// Largest reach table the search allocates per node.
const MAX_REACH: u64 = 1 << 24;

/// A verified representation of the primitive semigroup `s` with at most
/// `k` numerator generators, or `None` when there is none within the budget's
/// `d_max` and `gen_bound`. `None` does not prove non-existence.
///
/// Fails with `BudgetExceeded` when a denominator's node budget runs out
/// before any representation is found.
pub fn k_quotient_rep_search(
    s: &NumericalSemigroup,
    k: usize,
    budget: &SearchBudget,
) -> Result<Option<QuotientRep>> {
    if !s.is_primitive() {
        return Err(Error::NotPrimitive(s.content()));
    }
    if k == 0 {
        return Ok(None);
    }
    if s.embedding_dimension() <= k {
        return QuotientRep::plain(s.min_gens(), 1).map(Some);
    }
    let max_gen = *s.min_gens().last().expect("nonempty");
    let gen_bound = budget.gen_bound_for(max_gen);
    let gaps = s.gaps()?;
    let mut exhausted = Vec::new();
    for d in 2..=budget.d_max {
        let mut search = DenominatorSearch::new(s, &gaps, k, d, gen_bound, budget.start())?;
        let mut chosen = Vec::with_capacity(k);
        let mut reach = vec![false; search.limit + 1];
        reach[0] = true;
        match search.dfs(&mut chosen, &reach) {
            Outcome::Found => {
                let rep = QuotientRep::plain(&chosen, d)?;
                if !verify_rep(s, &rep)? {
                    return Err(Error::VerificationFailed(format!(
                        "search produced {rep}, which does not denote {s}"
                    )));
                }
                return Ok(Some(rep));
            }
            Outcome::NotFound => {}
            Outcome::Exhausted => exhausted.push(d),
        }
    }
    if exhausted.is_empty() {
        Ok(None)
    } else {
        Err(Error::BudgetExceeded(format!(
            "{k}-quotient search for {s}: denominators {exhausted:?} ran out of nodes, \
             others in 2..={} searched completely",
            budget.d_max
        )))
    }
}

enum Outcome {
    Found,
    NotFound,
    Exhausted,
}

struct DenominatorSearch {
    targets: Vec<usize>,
    scaled_gaps: Vec<usize>,
    limit: usize,
    k: usize,
    gen_bound: u64,
    meter: Meter,
}

impl DenominatorSearch {
    fn new(
        s: &NumericalSemigroup,
        gaps: &[u64],
        k: usize,
        d: u64,
        gen_bound: u64,
        meter: Meter,
    ) -> Result<Self> {
        let scale = |x: u64| x.checked_mul(d).ok_or(Error::Overflow);
        let targets = s
            .min_gens()
            .iter()
            .map(|&a| scale(a))
            .collect::<Result<Vec<_>>>()?;
        let scaled_gaps = gaps.iter().map(|&g| scale(g)).collect::<Result<Vec<_>>>()?;
        let limit = targets
            .iter()
            .chain(&scaled_gaps)
            .copied()
            .max()
            .unwrap_or(0);
        if limit > MAX_REACH {
            return Err(Error::InputTooLarge(format!(
                "representation search range {limit} exceeds {MAX_REACH}"
            )));
        }
        Ok(Self {
            targets: targets.into_iter().map(|t| t as usize).collect(),
            scaled_gaps: scaled_gaps.into_iter().map(|t| t as usize).collect(),
            limit: limit as usize,
            k,
            gen_bound,
            meter,
        })
    }

    fn dfs(&mut self, chosen: &mut Vec<u64>, reach: &[bool]) -> Outcome {
        let Some(&uncovered) = self.targets.iter().find(|&&t| !reach[t]) else {
            return Outcome::Found;
        };
        if chosen.len() == self.k {
            return Outcome::NotFound;
        }
        let lo = chosen.last().map_or(1, |&b| b + 1) as usize;
        let hi = (uncovered as u64).min(self.gen_bound) as usize;
        let mut next = vec![false; reach.len()];
        for b in lo..=hi {
            if reach[b] {
                continue;
            }
            if !self.meter.tick() {
                return Outcome::Exhausted;
            }
            next.copy_from_slice(reach);
            for y in b..next.len() {
                if next[y - b] {
                    next[y] = true;
                }
            }
            if self.scaled_gaps.iter().any(|&t| next[t]) {
                continue;
            }
            chosen.push(b as u64);
            match self.dfs(chosen, &next) {
                Outcome::NotFound => {}
                done => return done,
            }
            chosen.pop();
        }
        Outcome::NotFound
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_slice(gens).unwrap()
    }

    fn budget(d_max: u64, gen_bound: u64) -> SearchBudget {
        SearchBudget {
            d_max,
            gen_bound: Some(gen_bound),
            ..SearchBudget::default()
        }
    }

    #[test]
    fn finds_worked_examples() {
        let rep = k_quotient_rep_search(&sg(&[3, 4, 5]), 2, &budget(4, 20)).unwrap();
        assert_eq!(rep, Some(QuotientRep::plain(&[3, 5], 2).unwrap()));
        let rep = k_quotient_rep_search(&sg(&[11, 12, 13]), 2, &budget(4, 40)).unwrap();
        assert_eq!(rep, Some(QuotientRep::plain(&[11, 13], 2).unwrap()));
    }

    #[test]
    fn full_rank_semigroup_has_no_two_generator_rep() {
        let rep = k_quotient_rep_search(&sg(&[9, 10, 12]), 2, &budget(6, 200)).unwrap();
        assert_eq!(rep, None);
    }

    #[test]
    fn trivial_cases() {
        let s = sg(&[3, 5]);
        assert_eq!(
            k_quotient_rep_search(&s, 2, &budget(4, 20)).unwrap(),
            Some(QuotientRep::plain(&[3, 5], 1).unwrap())
        );
        assert_eq!(k_quotient_rep_search(&s, 0, &budget(4, 20)).unwrap(), None);
        assert_eq!(
            k_quotient_rep_search(&sg(&[6, 10]), 2, &budget(4, 20)),
            Err(Error::NotPrimitive(2))
        );
    }

    #[test]
    fn node_budget_is_reported() {
        let tight = SearchBudget {
            max_nodes: 3,
            ..budget(6, 200)
        };
        assert!(matches!(
            k_quotient_rep_search(&sg(&[9, 10, 12]), 2, &tight),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
