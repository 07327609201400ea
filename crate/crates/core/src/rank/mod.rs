//! Quotient-rank certificates and bounds.
//!
//! Lower bounds come from the subset obstructions in [`obstruction`] and
//! from the absence of a 2-quotient ordering; upper bounds come from
//! explicit, verified representations.

mod med;
mod obstruction;
mod pm;
mod search;

use serde::{Deserialize, Serialize};

pub use med::{med_decomposition, med_split, MedDecomposition};
pub use obstruction::{
    default_element_bound, full_rank_certificate, halving_table, not_k_quotient_search,
    subset_halving_search, subset_obstruction, HalvingReason, HalvingRefutation, SubsetRefutation,
    SubsetScan, MAX_SUBSET_SIZE,
};
pub use pm::{is_pm_ordering, pm_ordering};
pub use search::k_quotient_rep_search;

use crate::budget::SearchBudget;
use crate::error::{Error, Result};
use crate::quotient::{verify_rep, QuotientRep};
use crate::semigroup::NumericalSemigroup;
use obstruction::WitnessOutcome;

/// Machine-checkable evidence about the quotient rank of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RankCertificate {
    /// No proper nonempty subset sum of the generators lies in the semigroup
    /// of the remaining ones: rank = `e(S)`.
    FullRank {
        gens: Vec<u64>,
        table: Vec<SubsetRefutation>,
    },
    /// `k + 1` elements with no halving subset: rank > `k`.
    NotKQuotient {
        k: usize,
        elements: Vec<u64>,
        table: Vec<HalvingRefutation>,
    },
    /// Rank <= 2.
    PmOrdering { ordering: Vec<u64> },
    /// Exhaustive ordering search failed: rank >= 3.
    NoPmOrdering { gens: Vec<u64> },
    /// Rank <= number of numerator generators.
    Representation { rep: QuotientRep },
    /// Holds for every semigroup.
    Trivial { note: String },
    Inconclusive {
        reason: String,
        subset: Option<Vec<usize>>,
    },
}

impl RankCertificate {
    /// Re-checks the certificate against `s` from scratch using semigroup
    /// membership only. `Inconclusive` and `Trivial` claim nothing and
    /// always pass.
    pub fn check(&self, s: &NumericalSemigroup) -> Result<bool> {
        Ok(match self {
            Self::FullRank { gens, table } => {
                let n = gens.len();
                if gens != s.min_gens() || table.len() != (1usize << n).saturating_sub(2) {
                    return Ok(false);
                }
                let mut seen = std::collections::HashSet::new();
                for row in table {
                    if row.subset.is_empty()
                        || row.subset.len() >= n
                        || !seen.insert(row.subset.clone())
                    {
                        return Ok(false);
                    }
                    if row.subset.iter().any(|&i| i >= n) {
                        return Ok(false);
                    }
                    let sum: u64 = row.subset.iter().map(|&i| gens[i]).sum();
                    let complement: Vec<u64> = (0..n)
                        .filter(|i| !row.subset.contains(i))
                        .map(|i| gens[i])
                        .collect();
                    if sum != row.sum || complement != row.complement {
                        return Ok(false);
                    }
                    if NumericalSemigroup::from_slice(&complement)?.contains(sum) {
                        return Ok(false);
                    }
                }
                true
            }
            Self::NotKQuotient { k, elements, table } => {
                elements.len() == k + 1
                    && halving_table(s, elements).ok().flatten().as_ref() == Some(table)
            }
            Self::PmOrdering { ordering } => is_pm_ordering(s, ordering),
            Self::NoPmOrdering { gens } => gens == s.min_gens() && pm_ordering(s).is_none(),
            Self::Representation { rep } => verify_rep(s, rep)?,
            Self::Trivial { .. } | Self::Inconclusive { .. } => true,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankBounds {
    pub lower: usize,
    pub lower_certificate: RankCertificate,
    pub upper: usize,
    pub upper_certificate: RankCertificate,
    pub exact: bool,
    /// Some bounded search stopped on its budget.
    pub budget_exhausted: bool,
}

/// Bounds on the quotient rank of `s`.
///
/// Non-primitive semigroups are analysed through their primitive part,
/// which has the same quotient rank; certificates then refer to `S/D`.
pub fn quotient_rank_bounds(s: &NumericalSemigroup, budget: &SearchBudget) -> RankBounds {
    let s = &s.primitive();
    let e = s.embedding_dimension();
    let gens = s.min_gens().to_vec();
    let mut exhausted = false;

    let mut upper = e;
    let mut upper_certificate = RankCertificate::Representation {
        rep: QuotientRep::plain(&gens, 1).expect("minimal generators are positive"),
    };
    if e == 1 {
        return RankBounds {
            lower: 1,
            lower_certificate: RankCertificate::Trivial {
                note: "every semigroup is at least a 1-quotient".into(),
            },
            upper,
            upper_certificate,
            exact: true,
            budget_exhausted: false,
        };
    }

    let ordering = pm_ordering(s);
    if let Some(ordering) = &ordering {
        upper = 2;
        upper_certificate = RankCertificate::PmOrdering {
            ordering: ordering.clone(),
        };
    } else if s.is_med() && s.multiplicity() >= 3 && (s.multiplicity() as usize - 1) < upper {
        match med_decomposition(s, budget) {
            Ok(dec) => {
                upper = dec.rep.num_generators();
                upper_certificate = RankCertificate::Representation { rep: dec.rep };
            }
            Err(Error::SearchExhausted(_)) => exhausted = true,
            Err(_) => {}
        }
    }

    // Non-cyclic, so not a 1-quotient; look for an explicit witness.
    let mut lower = 2;
    let mut lower_certificate =
        witness(s, 1, budget, &mut exhausted).unwrap_or(RankCertificate::Trivial {
            note: "a 1-quotient ⟨a⟩/d is cyclic".into(),
        });
    match full_rank_certificate(s) {
        Ok(cert @ RankCertificate::FullRank { .. }) => {
            lower = e;
            lower_certificate = cert;
        }
        _ => {
            if ordering.is_none() && e >= 3 {
                lower = 3;
                lower_certificate = RankCertificate::NoPmOrdering { gens: gens.clone() };
            }
            let mut k = lower;
            while k < upper {
                match witness(s, k, budget, &mut exhausted) {
                    Some(cert) => {
                        lower = k + 1;
                        lower_certificate = cert;
                        k += 1;
                    }
                    None => break,
                }
            }
        }
    }

    let found = (lower..upper).find_map(|k| match k_quotient_rep_search(s, k, budget) {
        Ok(Some(rep)) => Some((k, rep)),
        Err(Error::BudgetExceeded(_)) => {
            exhausted = true;
            None
        }
        _ => None,
    });
    if let Some((k, rep)) = found {
        upper = k;
        upper_certificate = RankCertificate::Representation { rep };
    }

    RankBounds {
        lower,
        lower_certificate,
        upper,
        upper_certificate,
        exact: lower == upper,
        budget_exhausted: exhausted && lower != upper,
    }
}

/// A `NotKQuotient` witness with the pool clipped to the budget.
fn witness(
    s: &NumericalSemigroup,
    k: usize,
    budget: &SearchBudget,
    exhausted: &mut bool,
) -> Option<RankCertificate> {
    let mut bound = default_element_bound(s);
    let pool = obstruction::witness_pool(s, bound);
    if pool.len() > budget.pool {
        bound = *pool[..budget.pool].last()?;
    }
    match obstruction::find_witness(s, k, bound, budget) {
        Ok(WitnessOutcome::Found(cert)) => Some(cert),
        Ok(WitnessOutcome::Spent(_)) => {
            *exhausted = true;
            None
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_slice(gens).unwrap()
    }

    fn bounds(gens: &[u64]) -> RankBounds {
        quotient_rank_bounds(&sg(gens), &SearchBudget::default())
    }

    #[test]
    fn canonical_cases() {
        let b = bounds(&[9, 10, 12]);
        assert_eq!((b.lower, b.upper, b.exact), (3, 3, true));
        assert!(matches!(
            b.lower_certificate,
            RankCertificate::FullRank { .. }
        ));

        let b = bounds(&[3, 4, 5]);
        assert_eq!((b.lower, b.upper, b.exact), (2, 2, true));
        assert!(matches!(
            b.lower_certificate,
            RankCertificate::NotKQuotient { k: 1, .. }
        ));
        assert!(matches!(
            b.upper_certificate,
            RankCertificate::PmOrdering { .. }
        ));

        let b = bounds(&[7]);
        assert_eq!((b.lower, b.upper, b.exact), (1, 1, true));
        let b = bounds(&[1]);
        assert_eq!((b.lower, b.upper), (1, 1));
    }

    #[test]
    fn certificates_recheck() {
        for gens in [
            &[9, 10, 12][..],
            &[3, 4, 5],
            &[4, 5, 6, 7],
            &[5, 7, 9, 11, 13],
            &[6, 10, 15],
        ] {
            let s = sg(gens);
            let b = quotient_rank_bounds(&s, &SearchBudget::default());
            assert!(1 <= b.lower && b.lower <= b.upper && b.upper <= s.embedding_dimension());
            assert!(b.lower_certificate.check(&s).unwrap(), "{gens:?}");
            assert!(b.upper_certificate.check(&s).unwrap(), "{gens:?}");
        }
    }

    #[test]
    fn non_primitive_uses_primitive_part() {
        let b = bounds(&[18, 20, 24]);
        assert_eq!((b.lower, b.upper), (3, 3));
    }

    #[test]
    fn tampered_certificates_fail() {
        let s = sg(&[9, 10, 12]);
        let cert = full_rank_certificate(&s).unwrap();
        let RankCertificate::FullRank { gens, mut table } = cert else {
            panic!()
        };
        table.pop();
        assert!(!RankCertificate::FullRank { gens, table }.check(&s).unwrap());
        let bogus = RankCertificate::PmOrdering {
            ordering: vec![9, 10, 12],
        };
        assert!(!bogus.check(&s).unwrap());
        let bogus = RankCertificate::Representation {
            rep: QuotientRep::plain(&[9, 10], 1).unwrap(),
        };
        assert!(!bogus.check(&s).unwrap());
    }

    #[test]
    fn json_carries_refutation_table() {
        let b = bounds(&[9, 10, 12]);
        let json = serde_json::to_value(&b).unwrap();
        assert_eq!(json["lower_certificate"]["kind"], "FullRank");
        assert_eq!(
            json["lower_certificate"]["table"].as_array().unwrap().len(),
            6
        );
        let back: RankBounds = serde_json::from_value(json).unwrap();
        assert_eq!(back, b);
    }
}
