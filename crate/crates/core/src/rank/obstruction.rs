//! Subset obstructions to being a `k`-quotient.
//!
//! If `S = ⟨b_1, ..., b_k⟩/d` then any `p > k` elements `s_1, ..., s_p` of
//! `S` admit a nonempty `I ⊆ [p]` with `s_I / 2 ∈ S`. A tuple of `k + 1`
//! elements for which every nonempty subset sum is odd or has its half
//! outside `S` therefore certifies that `S` is not a `k`-quotient.
//!
//! Applied to the minimal generators themselves this yields the full-rank
//! test: if no proper nonempty `I` has `a_I ∈ ⟨a_j : j ∉ I⟩`, the quotient
//! rank equals the embedding dimension.

use serde::{Deserialize, Serialize};

use super::RankCertificate;
use crate::budget::SearchBudget;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Largest index set enumerated exhaustively.
pub const MAX_SUBSET_SIZE: usize = 30;

/// `sum = a_I` is not in `⟨complement⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetRefutation {
    pub subset: Vec<usize>,
    pub sum: u64,
    pub complement: Vec<u64>,
}

/// Why `s_I / 2` is not an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum HalvingReason {
    OddSum,
    HalfNotInSemigroup { half: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalvingRefutation {
    pub subset: Vec<usize>,
    pub sum: u64,
    #[serde(flatten)]
    pub reason: HalvingReason,
}

/// Outcome of scanning proper nonempty subsets of a generating list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubsetScan {
    /// `a_I ∈ ⟨a_j : j ∉ I⟩` for this `I` (0-based indices).
    Witness(Vec<usize>),
    /// Every proper nonempty subset refuted, in scan order.
    Refuted(Vec<SubsetRefutation>),
}

/// Index sets of `{0..n}` of the given size in lexicographic order.
pub(crate) fn combinations(n: usize, size: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (size <= n).then(|| (0..size).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let next = {
            let c = current.as_mut().unwrap();
            let mut i = size;
            loop {
                if i == 0 {
                    break false;
                }
                i -= 1;
                if c[i] < n - size + i {
                    c[i] += 1;
                    for j in i + 1..size {
                        c[j] = c[j - 1] + 1;
                    }
                    break true;
                }
            }
        };
        if !next {
            current = None;
        }
        Some(out)
    })
}

/// Scans proper nonempty `I` by increasing cardinality, then
/// lexicographically, for `a_I ∈ ⟨a_j : j ∉ I⟩`.
///
/// `gens` is taken as given: duplicates and redundant entries are not
/// removed, so a non-minimal list always produces a witness.
pub fn subset_obstruction(gens: &[u64]) -> Result<SubsetScan> {
    let n = gens.len();
    if n > MAX_SUBSET_SIZE {
        return Err(Error::InputTooLarge(format!(
            "{n} generators exceed the subset scan limit {MAX_SUBSET_SIZE}"
        )));
    }
    let mut table = Vec::new();
    for size in 1..n {
        for subset in combinations(n, size) {
            let mut in_subset = vec![false; n];
            let mut sum = 0u64;
            for &i in &subset {
                in_subset[i] = true;
                sum = sum.checked_add(gens[i]).ok_or(Error::Overflow)?;
            }
            let complement: Vec<u64> = (0..n).filter(|&j| !in_subset[j]).map(|j| gens[j]).collect();
            let smallest = *complement.iter().min().expect("proper subset");
            let member =
                sum >= smallest && NumericalSemigroup::from_slice(&complement)?.contains(sum);
            if member {
                return Ok(SubsetScan::Witness(subset));
            }
            table.push(SubsetRefutation {
                subset,
                sum,
                complement,
            });
        }
    }
    Ok(SubsetScan::Refuted(table))
}

/// Full-rank certificate from the minimal generators, or `Inconclusive`
/// naming the first subset that blocks it. A blocking subset does not by
/// itself show the rank is below `e(S)`.
pub fn full_rank_certificate(s: &NumericalSemigroup) -> Result<RankCertificate> {
    let gens = s.min_gens().to_vec();
    match subset_obstruction(&gens)? {
        SubsetScan::Refuted(table) => Ok(RankCertificate::FullRank { gens, table }),
        SubsetScan::Witness(subset) => Ok(RankCertificate::Inconclusive {
            reason: "a generator subset sum lies in the semigroup of the others".into(),
            subset: Some(subset),
        }),
    }
}

fn check_members(s: &NumericalSemigroup, elements: &[u64]) -> Result<()> {
    if elements.len() > MAX_SUBSET_SIZE {
        return Err(Error::InputTooLarge(format!(
            "{} elements exceed the subset scan limit {MAX_SUBSET_SIZE}",
            elements.len()
        )));
    }
    match elements.iter().find(|&&x| !s.contains(x)) {
        Some(&x) => Err(Error::NotAnElement(x)),
        None => Ok(()),
    }
}

fn mask_sum(elements: &[u64], mask: u64) -> Result<u64> {
    let mut sum = 0u64;
    for (i, &x) in elements.iter().enumerate() {
        if mask >> i & 1 == 1 {
            sum = sum.checked_add(x).ok_or(Error::Overflow)?;
        }
    }
    Ok(sum)
}

fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// First nonempty `I` (by bitmask order, 0-based) with `s_I` even and
/// `s_I / 2 ∈ S`.
pub fn subset_halving_search(
    s: &NumericalSemigroup,
    elements: &[u64],
) -> Result<Option<Vec<usize>>> {
    check_members(s, elements)?;
    for mask in 1..1u64 << elements.len() {
        let sum = mask_sum(elements, mask)?;
        if sum % 2 == 0 && s.contains(sum / 2) {
            return Ok(Some(mask_indices(mask)));
        }
    }
    Ok(None)
}

/// Refutations for every nonempty subset, or `None` if some subset halves
/// into `S`.
pub fn halving_table(
    s: &NumericalSemigroup,
    elements: &[u64],
) -> Result<Option<Vec<HalvingRefutation>>> {
    check_members(s, elements)?;
    let mut table = Vec::with_capacity((1usize << elements.len()) - 1);
    for mask in 1..1u64 << elements.len() {
        let sum = mask_sum(elements, mask)?;
        let reason = if sum % 2 == 1 {
            HalvingReason::OddSum
        } else if s.contains(sum / 2) {
            return Ok(None);
        } else {
            HalvingReason::HalfNotInSemigroup { half: sum / 2 }
        };
        table.push(HalvingRefutation {
            subset: mask_indices(mask),
            sum,
            reason,
        });
    }
    Ok(Some(table))
}

/// Default witness pool bound, `F(S) + 2m` on the primitive scale.
pub fn default_element_bound(s: &NumericalSemigroup) -> u64 {
    let prim = (s.frobenius() + 2 * s.primitive_multiplicity() as i64).max(1) as u64;
    prim.saturating_mul(s.content())
}

/// Candidate witness elements in `[1, bound]`: elements whose half is in `S`
/// can never appear in a witness (the singleton subset halves).
pub(crate) fn witness_pool(s: &NumericalSemigroup, bound: u64) -> Vec<u64> {
    s.elements_up_to(bound)
        .into_iter()
        .filter(|&x| x > 0 && !(x % 2 == 0 && s.contains(x / 2)))
        .collect()
}

/// Searches `(k+1)`-tuples from the witness pool for one with no halving
/// subset, which certifies that `S` is not a `k`-quotient.
///
/// Tuples with a repeated element always halve (`(s + s)/2 = s`), so only
/// strictly increasing tuples are tried. Partial tuples carry all their
/// subset sums, and a partial tuple that already halves is pruned together
/// with all its extensions.
pub fn not_k_quotient_search(
    s: &NumericalSemigroup,
    k: usize,
    element_bound: u64,
    budget: &SearchBudget,
) -> Result<RankCertificate> {
    let pool_len = witness_pool(s, element_bound).len();
    Ok(match find_witness(s, k, element_bound, budget)? {
        WitnessOutcome::Found(cert) => cert,
        WitnessOutcome::Absent => RankCertificate::Inconclusive {
            reason: format!(
                "no {}-element witness among {pool_len} candidates up to {element_bound}",
                k + 1
            ),
            subset: None,
        },
        WitnessOutcome::Spent(nodes) => RankCertificate::Inconclusive {
            reason: format!("witness search budget exhausted after {nodes} nodes"),
            subset: None,
        },
    })
}

pub(crate) enum WitnessOutcome {
    Found(RankCertificate),
    Absent,
    Spent(u64),
}

pub(crate) fn find_witness(
    s: &NumericalSemigroup,
    k: usize,
    element_bound: u64,
    budget: &SearchBudget,
) -> Result<WitnessOutcome> {
    if k == 0 {
        return Err(Error::ZeroParameter { what: "k" });
    }
    if k + 1 > MAX_SUBSET_SIZE {
        return Err(Error::InputTooLarge(format!("k = {k} is too large")));
    }
    element_bound
        .checked_mul(k as u64 + 1)
        .ok_or(Error::Overflow)?;
    let pool = witness_pool(s, element_bound);
    if pool.len() > budget.pool {
        return Err(Error::InputTooLarge(format!(
            "candidate pool has {} elements, budget allows {}",
            pool.len(),
            budget.pool
        )));
    }
    let mut search = WitnessSearch {
        s,
        pool: &pool,
        need: k + 1,
        meter: budget.start(),
    };
    let mut tuple = Vec::with_capacity(k + 1);
    let mut sums = Vec::with_capacity(1 << (k + 1));
    Ok(match search.dfs(0, &mut tuple, &mut sums) {
        Some(true) => {
            let table = halving_table(s, &tuple)?.expect("witness tuple has no halving subset");
            WitnessOutcome::Found(RankCertificate::NotKQuotient {
                k,
                elements: tuple,
                table,
            })
        }
        Some(false) => WitnessOutcome::Absent,
        None => WitnessOutcome::Spent(search.meter.nodes()),
    })
}

struct WitnessSearch<'a> {
    s: &'a NumericalSemigroup,
    pool: &'a [u64],
    need: usize,
    meter: crate::budget::Meter,
}

impl WitnessSearch<'_> {
    /// `Some(true)` when `tuple` is a witness, `None` when out of budget.
    fn dfs(&mut self, start: usize, tuple: &mut Vec<u64>, sums: &mut Vec<u64>) -> Option<bool> {
        if tuple.len() == self.need {
            return Some(true);
        }
        let remaining = self.need - tuple.len();
        for i in start..self.pool.len() {
            if self.pool.len() - i < remaining {
                break;
            }
            if !self.meter.tick() {
                return None;
            }
            let x = self.pool[i];
            let halves = sums.iter().any(|&t| {
                let u = t + x;
                u.is_multiple_of(2) && self.s.contains(u / 2)
            });
            if halves {
                continue;
            }
            let old = sums.len();
            sums.push(x);
            for j in 0..old {
                let v = sums[j] + x;
                sums.push(v);
            }
            tuple.push(x);
            match self.dfs(i + 1, tuple, sums) {
                Some(false) => {}
                found_or_spent => return found_or_spent,
            }
            tuple.pop();
            sums.truncate(old);
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_slice(gens).unwrap()
    }

    #[test]
    fn combinations_in_order() {
        let all: Vec<_> = combinations(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0).count(), 1);
        assert_eq!(combinations(2, 3).count(), 0);
    }

    #[test]
    fn full_rank_nine_ten_twelve() {
        let cert = full_rank_certificate(&sg(&[9, 10, 12])).unwrap();
        match &cert {
            RankCertificate::FullRank { table, .. } => assert_eq!(table.len(), 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(cert.check(&sg(&[9, 10, 12])).unwrap());
    }

    #[test]
    fn three_four_five_is_blocked() {
        let cert = full_rank_certificate(&sg(&[3, 4, 5])).unwrap();
        assert_eq!(
            cert,
            RankCertificate::Inconclusive {
                reason: "a generator subset sum lies in the semigroup of the others".into(),
                subset: Some(vec![0, 2]),
            }
        );
    }

    #[test]
    fn single_generator_is_full_rank() {
        let cert = full_rank_certificate(&sg(&[7])).unwrap();
        assert!(matches!(cert, RankCertificate::FullRank { ref table, .. } if table.is_empty()));
    }

    #[test]
    fn halving_search() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(
            subset_halving_search(&s, &[3, 4, 5]).unwrap(),
            Some(vec![0, 2])
        );
        let s = sg(&[9, 10, 12]);
        assert_eq!(subset_halving_search(&s, &[9, 10, 12]).unwrap(), None);
        assert_eq!(subset_halving_search(&s, &[0]).unwrap(), Some(vec![0]));
        assert_eq!(
            subset_halving_search(&s, &[9, 11]),
            Err(Error::NotAnElement(11))
        );
    }

    #[test]
    fn halving_table_matches_search() {
        let s = sg(&[9, 10, 12]);
        let table = halving_table(&s, &[9, 10, 12]).unwrap().unwrap();
        assert_eq!(table.len(), 7);
        assert_eq!(
            table[1],
            HalvingRefutation {
                subset: vec![1],
                sum: 10,
                reason: HalvingReason::HalfNotInSemigroup { half: 5 }
            }
        );
        assert_eq!(halving_table(&sg(&[3, 4, 5]), &[3, 4, 5]).unwrap(), None);
    }

    #[test]
    fn witness_for_nine_ten_twelve() {
        let s = sg(&[9, 10, 12]);
        let cert = not_k_quotient_search(&s, 2, 13, &SearchBudget::default()).unwrap();
        match &cert {
            RankCertificate::NotKQuotient { k, elements, .. } => {
                assert_eq!(*k, 2);
                assert_eq!(elements, &[9, 10, 12]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(cert.check(&s).unwrap());
    }

    #[test]
    fn no_witness_for_two_quotients() {
        let budget = SearchBudget {
            pool: 64,
            ..SearchBudget::default()
        };
        let cert = not_k_quotient_search(&sg(&[3, 4, 5]), 2, 50, &budget).unwrap();
        assert!(matches!(cert, RankCertificate::Inconclusive { .. }));
        let cert = not_k_quotient_search(&NumericalSemigroup::naturals(), 1, 30, &budget).unwrap();
        assert!(matches!(cert, RankCertificate::Inconclusive { .. }));
    }

    #[test]
    fn pool_budget_is_enforced() {
        let budget = SearchBudget {
            pool: 5,
            ..SearchBudget::default()
        };
        assert!(matches!(
            not_k_quotient_search(&sg(&[3, 4, 5]), 2, 50, &budget),
            Err(Error::InputTooLarge(_))
        ));
    }
}
