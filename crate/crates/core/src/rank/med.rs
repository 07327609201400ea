//! `(m-1)`-generator representations of maximal embedding dimension
//! semigroups.
//!
//! A MED semigroup with multiplicity `m` has one minimal generator in each
//! residue class modulo `m`: `m, g_1, ..., g_{m-1}` with `g_i ≡ i`. Split it
//! as `S_1 + S_2` with `S_1 = ⟨m, g_1, g_{m-1}⟩` and `S_2 = ⟨g_2, ..., g_{m-2}⟩`.
//! The ordering `(g_{m-1}, m, g_1)` shows `S_1` is a 2-quotient, `S_2 = S_2/1`,
//! and the coprime sum formula combines them into `m - 1` generators.

use serde::{Deserialize, Serialize};

use super::pm::is_pm_ordering;
use super::search::k_quotient_rep_search;
use crate::budget::SearchBudget;
use crate::error::{Error, Result};
use crate::quotient::{quotient_sum_coprime, verify_rep, QuotientRep};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MedDecomposition {
    /// Minimal generators of `S_1`.
    pub first: Vec<u64>,
    /// Generators of `S_2` (possibly empty).
    pub rest: Vec<u64>,
    /// Ordering showing `S_1` has quotient rank at most 2.
    pub first_ordering: Vec<u64>,
    /// Two-generator representation of `S_1`.
    pub first_rep: QuotientRep,
    /// Verified representation of the whole semigroup.
    pub rep: QuotientRep,
}

/// Splits `S_1` and `S_2` off a primitive MED semigroup with `m >= 3`.
pub fn med_split(s: &NumericalSemigroup) -> Result<(NumericalSemigroup, Vec<u64>, Vec<u64>)> {
    if !s.is_primitive() {
        return Err(Error::NotPrimitive(s.content()));
    }
    let m = s.multiplicity();
    if !s.is_med() {
        return Err(Error::NotMed {
            embedding_dimension: s.embedding_dimension(),
            multiplicity: m,
        });
    }
    if m < 3 {
        return Err(Error::DegenerateMultiplicity(m));
    }
    let mut by_residue = vec![0u64; m as usize];
    for &g in s.min_gens() {
        by_residue[(g % m) as usize] = g;
    }
    let low = by_residue[1];
    let high = by_residue[m as usize - 1];
    let first = NumericalSemigroup::from_slice(&[m, low, high])?;
    let rest = by_residue[2..m as usize - 1].to_vec();
    Ok((first, vec![high, m, low], rest))
}

/// A verified `(m-1)`-generator representation of a MED semigroup.
///
/// `S_1` is first tried as `⟨b_1, b_3⟩/((b_1 + b_3)/m)` for its ordering
/// `(b_1, m, b_3)`, which holds whenever `gcd(b_1, b_3) = 1`. Otherwise the
/// 2-quotient search runs with `d_max` raised to at least `b_1 + b_3`.
pub fn med_decomposition(
    s: &NumericalSemigroup,
    budget: &SearchBudget,
) -> Result<MedDecomposition> {
    let (first, first_ordering, rest) = med_split(s)?;
    debug_assert!(is_pm_ordering(&first, &first_ordering));
    let (high, m, low) = (first_ordering[0], first_ordering[1], first_ordering[2]);
    let direct = QuotientRep::plain(&[low, high], (low + high) / m)?;
    let first_rep = if verify_rep(&first, &direct)? {
        direct
    } else {
        let widened = SearchBudget {
            d_max: budget.d_max.max(low + high),
            ..*budget
        };
        match k_quotient_rep_search(&first, 2, &widened) {
            Ok(Some(rep)) => rep,
            Ok(None) | Err(Error::BudgetExceeded(_)) => {
                return Err(Error::SearchExhausted(first.to_string()));
            }
            Err(e) => return Err(e),
        }
    };
    let rep = if rest.is_empty() {
        first_rep.clone()
    } else {
        quotient_sum_coprime(&first_rep, &QuotientRep::plain(&rest, 1)?)?
    };
    if !verify_rep(s, &rep)? {
        return Err(Error::VerificationFailed(format!(
            "composed representation {rep} does not denote {s}"
        )));
    }
    Ok(MedDecomposition {
        first: first.min_gens().to_vec(),
        rest,
        first_ordering,
        first_rep,
        rep,
    })
}
