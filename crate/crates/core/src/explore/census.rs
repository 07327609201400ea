//! Quotient-rank bounds over a population of semigroups.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::SearchBudget;
use crate::rank::{quotient_rank_bounds, RankBounds, RankCertificate};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub gens: Vec<u64>,
    pub multiplicity: u64,
    pub genus: u64,
    pub embedding_dimension: usize,
    pub med: bool,
    pub bounds: RankBounds,
}

impl CensusRow {
    pub fn full_rank_certified(&self) -> bool {
        matches!(
            self.bounds.lower_certificate,
            RankCertificate::FullRank { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Census {
    pub rows: Vec<CensusRow>,
    pub med_fraction: f64,
    pub full_rank_fraction: f64,
    /// Rows whose upper bound is at most 2.
    pub rank_le_2_fraction: f64,
    /// Rows where a bounded search ran out of budget before the bounds met.
    pub budget_exhausted: usize,
}

/// Rank bounds for every member, in input order. A search that runs out
/// of budget leaves its row inexact and is counted, not raised.
pub fn rank_census(population: &[NumericalSemigroup], budget: &SearchBudget) -> Census {
    let rows: Vec<CensusRow> = population
        .par_iter()
        .map(|s| CensusRow {
            gens: s.min_gens().to_vec(),
            multiplicity: s.multiplicity(),
            genus: s.genus(),
            embedding_dimension: s.embedding_dimension(),
            med: s.is_med(),
            bounds: quotient_rank_bounds(s, budget),
        })
        .collect();
    let fraction = |pred: &dyn Fn(&CensusRow) -> bool| {
        if rows.is_empty() {
            0.0
        } else {
            rows.iter().filter(|r| pred(r)).count() as f64 / rows.len() as f64
        }
    };
    Census {
        med_fraction: fraction(&|r| r.med),
        full_rank_fraction: fraction(&|r| r.full_rank_certified()),
        rank_le_2_fraction: fraction(&|r| r.bounds.upper <= 2),
        budget_exhausted: rows.iter().filter(|r| r.bounds.budget_exhausted).count(),
        rows,
    }
}
