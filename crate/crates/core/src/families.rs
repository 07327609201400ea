//! Parametrised families: semigroups that are not `k`-quotients, semigroups
//! that are not intersections of `k`-quotients, and arithmetical sequences.
//!
//! With `a_i = 2a + 2^i` (`0 <= i <= k`) and `b_j = ω(j)·a + j`
//! (`1 <= j < 2^k`, `ω` the binary weight), every `b_j` lies outside
//! `⟨a_0, ..., a_k⟩`. That is the finite fact the verifiers check.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Largest supported `k`; the witness list has `2^k - 1` entries.
pub const MAX_FAMILY_K: u32 = 20;

/// Number of ones in the binary expansion of `j`.
pub fn popcount(j: u64) -> u32 {
    j.count_ones()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub k: u32,
    pub a: u64,
    /// `a_0 < ... < a_k`.
    pub gens: Vec<u64>,
    /// `b_1, ..., b_{2^k - 1}`.
    pub witnesses: Vec<u64>,
    /// `N = (2k + 1)a` for the intersection family.
    pub threshold: Option<u64>,
}

/// `b_j` together with the index it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRefutation {
    pub j: u64,
    pub weight: u32,
    pub value: u64,
    pub in_semigroup: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoQuotientProof {
    pub k: u32,
    pub gens: Vec<u64>,
    pub table: Vec<WitnessRefutation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoIntersectionProof {
    pub k: u32,
    pub gens: Vec<u64>,
    pub threshold: u64,
    pub threshold_in_semigroup: bool,
    /// Membership of each `b_j` in `⟨a_0, ..., a_k⟩`.
    pub table: Vec<WitnessRefutation>,
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroParameter { what: "k" });
    }
    if k > MAX_FAMILY_K {
        return Err(Error::InputTooLarge(format!(
            "k = {k} exceeds the supported maximum {MAX_FAMILY_K}"
        )));
    }
    Ok(())
}

fn base_instance(k: u32, a: u64) -> Result<FamilyInstance> {
    let two_a = a.checked_mul(2).ok_or(Error::Overflow)?;
    let gens = (0..=k)
        .map(|i| two_a.checked_add(1 << i).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    let witnesses = (1..1u64 << k)
        .map(|j| {
            a.checked_mul(popcount(j) as u64)
                .and_then(|x| x.checked_add(j))
                .ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilyInstance {
        k,
        a,
        gens,
        witnesses,
        threshold: None,
    })
}

/// `⟨2a + 1, 2a + 2, ..., 2a + 2^k⟩`, which is not a `k`-quotient.
pub fn noquotient_family(k: u32, a: u64) -> Result<(FamilyInstance, NumericalSemigroup)> {
    check_k(k)?;
    if a < 1 << k {
        return Err(Error::ParameterTooSmall(format!(
            "a = {a} must be at least 2^{k}"
        )));
    }
    let inst = base_instance(k, a)?;
    let s = NumericalSemigroup::from_slice(&inst.gens)?;
    Ok((inst, s))
}

fn refute(s: &NumericalSemigroup, witnesses: &[u64]) -> Vec<WitnessRefutation> {
    witnesses
        .iter()
        .zip(1u64..)
        .map(|(&value, j)| WitnessRefutation {
            j,
            weight: popcount(j),
            value,
            in_semigroup: s.contains(value),
        })
        .collect()
}

/// Checks `b_j ∉ S` for every `j`.
pub fn verify_noquotient_instance(inst: &FamilyInstance) -> Result<NoQuotientProof> {
    let s = NumericalSemigroup::from_slice(&inst.gens)?;
    let table = refute(&s, &inst.witnesses);
    if let Some(bad) = table.iter().find(|r| r.in_semigroup) {
        return Err(Error::VerificationFailed(format!(
            "b_{} = {} lies in {s}",
            bad.j, bad.value
        )));
    }
    Ok(NoQuotientProof {
        k: inst.k,
        gens: inst.gens.clone(),
        table,
    })
}

/// `⟨a_0, ..., a_k, N - b_1, ..., N - b_{2^k - 1}⟩` with `N = (2k + 1)a`,
/// which is not an intersection of `k`-quotients.
///
/// Requires `a > k·2^k`. At `a = k·2^k` the threshold `N` can be a sum of
/// two generators; `allow_boundary` admits that case anyway.
pub fn nointersection_family(
    k: u32,
    a: u64,
    allow_boundary: bool,
) -> Result<(FamilyInstance, NumericalSemigroup)> {
    check_k(k)?;
    if k < 2 {
        return Err(Error::ParameterTooSmall(format!(
            "k = {k} must be at least 2"
        )));
    }
    let min = (k as u64) << k;
    if a < min || (a == min && !allow_boundary) {
        return Err(Error::ParameterTooSmall(format!(
            "a = {a} must exceed k·2^k = {min}"
        )));
    }
    let mut inst = base_instance(k, a)?;
    let n = a.checked_mul(2 * k as u64 + 1).ok_or(Error::Overflow)?;
    inst.threshold = Some(n);
    let mut gens = inst.gens.clone();
    gens.extend(inst.witnesses.iter().map(|&b| n - b));
    let s = NumericalSemigroup::from_slice(&gens)?;
    Ok((inst, s))
}

/// Checks `N ∉ S` and `b_j ∉ ⟨a_0, ..., a_k⟩` for every `j`.
pub fn verify_nointersection_instance(inst: &FamilyInstance) -> Result<NoIntersectionProof> {
    let n = inst
        .threshold
        .ok_or_else(|| Error::VerificationFailed("instance has no threshold N".to_string()))?;
    let base = NumericalSemigroup::from_slice(&inst.gens)?;
    let mut gens = inst.gens.clone();
    gens.extend(inst.witnesses.iter().map(|&b| n - b));
    let s = NumericalSemigroup::from_slice(&gens)?;
    let threshold_in_semigroup = s.contains(n);
    let table = refute(&base, &inst.witnesses);
    if threshold_in_semigroup {
        return Err(Error::VerificationFailed(format!("N = {n} lies in {s}")));
    }
    if let Some(bad) = table.iter().find(|r| r.in_semigroup) {
        return Err(Error::VerificationFailed(format!(
            "b_{} = {} lies in {base}",
            bad.j, bad.value
        )));
    }
    Ok(NoIntersectionProof {
        k: inst.k,
        gens: s.min_gens().to_vec(),
        threshold: n,
        threshold_in_semigroup,
        table,
    })
}

fn progression(first: u64, start: u64, d: u64, k: u64) -> Result<NumericalSemigroup> {
    if first == 0 || d == 0 {
        return Err(Error::ZeroParameter {
            what: if first == 0 { "a" } else { "d" },
        });
    }
    if first.gcd(&d) != 1 {
        return Err(Error::NotCoprime(first, d));
    }
    let mut gens = vec![first];
    for i in 1..=k {
        let g = d
            .checked_mul(i)
            .and_then(|x| x.checked_add(start))
            .ok_or(Error::Overflow)?;
        gens.push(g);
    }
    NumericalSemigroup::from_slice(&gens)
}

/// `⟨a, a + d, ..., a + kd⟩` with `gcd(a, d) = 1`.
pub fn arithmetical_family(a: u64, d: u64, k: u64) -> Result<NumericalSemigroup> {
    progression(a, a, d, k)
}

/// `⟨a, ah + d, ..., ah + kd⟩` with `gcd(a, d) = 1`.
pub fn generalized_arithmetical_family(
    a: u64,
    h: u64,
    d: u64,
    k: u64,
) -> Result<NumericalSemigroup> {
    if h == 0 {
        return Err(Error::ZeroParameter { what: "h" });
    }
    progression(a, a.checked_mul(h).ok_or(Error::Overflow)?, d, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Sieve;

    #[test]
    fn popcount_values() {
        assert_eq!(popcount(0), 0);
        assert_eq!(popcount(3), 2);
        assert_eq!(popcount(5), 2);
    }

    #[test]
    fn noquotient_generators() {
        let (inst, s) = noquotient_family(2, 4).unwrap();
        assert_eq!(s.min_gens(), &[9, 10, 12]);
        assert_eq!(inst.witnesses, vec![5, 6, 11]);
        let (_, s) = noquotient_family(3, 8).unwrap();
        assert_eq!(s.min_gens(), &[17, 18, 20, 24]);
        assert!(matches!(
            noquotient_family(2, 3),
            Err(Error::ParameterTooSmall(_))
        ));
    }

    #[test]
    fn noquotient_witnesses_match_sieve() {
        let (inst, _) = noquotient_family(3, 8).unwrap();
        assert_eq!(inst.witnesses, vec![9, 10, 19, 12, 21, 22, 31]);
        let sieve = Sieve::new(&inst.gens, 100);
        assert!(inst.witnesses.iter().all(|&b| !sieve.contains(b)));
        let proof = verify_noquotient_instance(&inst).unwrap();
        assert_eq!(proof.table.len(), 7);

        let (inst, s) = noquotient_family(1, 2).unwrap();
        assert_eq!(s.min_gens(), &[5, 6]);
        assert_eq!(inst.witnesses, vec![3]);
        verify_noquotient_instance(&inst).unwrap();
    }

    #[test]
    fn tampered_instance_fails() {
        let (mut inst, _) = noquotient_family(2, 4).unwrap();
        inst.witnesses[0] = 9;
        assert!(matches!(
            verify_noquotient_instance(&inst),
            Err(Error::VerificationFailed(_))
        ));
    }

    #[test]
    fn nointersection_generators() {
        let (inst, s) = nointersection_family(2, 17, false).unwrap();
        assert_eq!(inst.threshold, Some(85));
        assert_eq!(s.min_gens(), &[35, 36, 38, 48, 66, 67]);
        let proof = verify_nointersection_instance(&inst).unwrap();
        assert!(!Sieve::new(s.min_gens(), 85).contains(85));
        assert!(!proof.threshold_in_semigroup);

        let (inst, _) = nointersection_family(2, 20, false).unwrap();
        verify_nointersection_instance(&inst).unwrap();

        let (inst, s) = nointersection_family(3, 25, false).unwrap();
        assert_eq!(inst.threshold, Some(175));
        assert_eq!(inst.gens.len() + inst.witnesses.len(), 11);
        assert!(s.embedding_dimension() <= 11);
    }

    #[test]
    fn boundary_case_fails() {
        assert!(matches!(
            nointersection_family(2, 8, false),
            Err(Error::ParameterTooSmall(_))
        ));
        let (inst, s) = nointersection_family(2, 8, true).unwrap();
        assert_eq!(inst.threshold, Some(40));
        assert!(s.contains(40));
        assert!(matches!(
            verify_nointersection_instance(&inst),
            Err(Error::VerificationFailed(_))
        ));
    }

    #[test]
    fn arithmetical() {
        assert_eq!(
            arithmetical_family(5, 3, 2).unwrap().min_gens(),
            &[5, 8, 11]
        );
        assert_eq!(
            generalized_arithmetical_family(4, 2, 1, 3)
                .unwrap()
                .min_gens(),
            &[4, 9, 10, 11]
        );
        assert_eq!(arithmetical_family(4, 2, 1), Err(Error::NotCoprime(4, 2)));
    }
}
