//! Canonical numerical semigroups.
//!
//! A [`NumericalSemigroup`] stores its content `D` (the gcd of all elements),
//! its minimal generators, and the Apéry set of the primitive part `S/D` with
//! respect to the primitive multiplicity `m'`. Membership is then a constant
//! time comparison: `t ∈ S` iff `D | t` and `t/D >= apery[(t/D) mod m']`.
//!
//! The Apéry table is built by round-robin relaxation over residues modulo
//! `m'`: every generator `g` walks each cycle of `r -> r + g (mod m')` once,
//! starting from the cycle's current minimum. This is a shortest-path
//! computation on the residue graph and never sieves up to the Frobenius
//! number, so generators in the millions are fine as long as `m'` fits in
//! memory.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest primitive multiplicity for which an Apéry table is allocated
/// (one `u64` per residue, so about 1 GiB at the limit).
pub const MAX_APERY_LEN: u64 = 1 << 27;

const UNREACHED: u64 = u64::MAX;

/// A nonempty list of positive integers, as entered by a user.
///
/// Order and duplicates are preserved; minimalization happens in
/// [`NumericalSemigroup::from_generators`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct GeneratorList(Vec<u64>);

impl GeneratorList {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        if values.contains(&0) {
            return Err(Error::NonPositiveGenerator);
        }
        Ok(Self(values))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }
}

impl TryFrom<Vec<u64>> for GeneratorList {
    type Error = Error;

    fn try_from(values: Vec<u64>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<GeneratorList> for Vec<u64> {
    fn from(list: GeneratorList) -> Self {
        list.0
    }
}

impl FromStr for GeneratorList {
    type Err = Error;

    /// Parses comma-separated decimal integers, e.g. `3,5` or `11, 12, 13`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut values = Vec::new();
        for part in trimmed.split(',') {
            let part = part.trim();
            let value: u64 = part.parse().map_err(|e: std::num::ParseIntError| {
                if part.starts_with('-') {
                    Error::NonPositiveGenerator
                } else {
                    Error::Parse {
                        input: part.to_string(),
                        reason: e.to_string(),
                    }
                }
            })?;
            values.push(value);
        }
        Self::new(values)
    }
}

impl fmt::Display for GeneratorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, values: &[u64]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// A numerical semigroup in canonical form.
///
/// Semigroups with content `D > 1` are allowed; derived invariants
/// (Apéry set, Frobenius number, genus) describe the primitive part `S/D`.
/// Two values are equal exactly when they denote the same set of integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    content: u64,
    min_gens: Vec<u64>,
    apery: Vec<u64>,
    frobenius: i64,
    genus: u64,
}

impl NumericalSemigroup {
    pub fn from_generators(gens: &GeneratorList) -> Result<Self> {
        Self::from_slice(gens.as_slice())
    }

    /// Like [`from_generators`](Self::from_generators) for an unchecked slice.
    pub fn from_slice(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(Error::NonPositiveGenerator);
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let content = sorted.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        let prim: Vec<u64> = sorted.iter().map(|&g| g / content).collect();
        let m = prim[0];
        if m > MAX_APERY_LEN {
            return Err(Error::InputTooLarge(format!(
                "multiplicity {m} exceeds the Apéry table limit {MAX_APERY_LEN}"
            )));
        }
        let apery = apery_table(m, &prim[1..])?;

        // A generator g is redundant iff g - h lies in S for some smaller
        // generator h, i.e. g is a sum of two nonzero elements.
        let mut min_prim = vec![m];
        for (i, &g) in prim.iter().enumerate().skip(1) {
            let redundant = prim[..i].iter().any(|&h| contains_in_table(&apery, g - h));
            if !redundant {
                min_prim.push(g);
            }
        }
        Self::assemble(content, min_prim, apery)
    }

    /// Builds the primitive semigroup whose Apéry set with respect to its
    /// multiplicity `apery.len()` is `apery`.
    ///
    /// A nonzero Apéry element is a minimal generator iff it is not the sum
    /// of two nonzero Apéry elements.
    pub(crate) fn from_primitive_apery(apery: Vec<u64>) -> Result<Self> {
        let m = apery.len();
        debug_assert!(m >= 1 && apery[0] == 0);
        let mut reducible = vec![false; m];
        for i in 1..m {
            for j in i..m {
                let Some(sum) = apery[i].checked_add(apery[j]) else {
                    continue;
                };
                let r = (i + j) % m;
                if r != 0 && apery[r] == sum {
                    reducible[r] = true;
                }
            }
        }
        let mut min_gens = vec![m as u64];
        min_gens.extend((1..m).filter(|&r| !reducible[r]).map(|r| apery[r]));
        min_gens.sort_unstable();
        Self::assemble(1, min_gens, apery)
    }

    fn assemble(content: u64, min_prim: Vec<u64>, apery: Vec<u64>) -> Result<Self> {
        let m = apery.len() as u64;
        let max = *apery.iter().max().expect("apery table is nonempty");
        let frobenius = i64::try_from(max).map_err(|_| Error::Overflow)? - m as i64;
        let genus = apery.iter().map(|&w| w / m).sum();
        let min_gens = min_prim
            .iter()
            .map(|&g| g.checked_mul(content).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            content,
            min_gens,
            apery,
            frobenius,
            genus,
        })
    }

    /// The semigroup of nonnegative integers, `⟨1⟩`.
    pub fn naturals() -> Self {
        Self {
            content: 1,
            min_gens: vec![1],
            apery: vec![0],
            frobenius: -1,
            genus: 0,
        }
    }

    /// The gcd `D` of all elements.
    pub fn content(&self) -> u64 {
        self.content
    }

    pub fn is_primitive(&self) -> bool {
        self.content == 1
    }

    /// Minimal generators, sorted ascending, at the original scale.
    pub fn min_gens(&self) -> &[u64] {
        &self.min_gens
    }

    pub fn embedding_dimension(&self) -> usize {
        self.min_gens.len()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.min_gens[0]
    }

    /// Multiplicity of the primitive part.
    pub fn primitive_multiplicity(&self) -> u64 {
        self.apery.len() as u64
    }

    /// Apéry set of the primitive part with respect to its multiplicity,
    /// indexed by residue.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    /// Frobenius number of the primitive part; `-1` when it is `N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of gaps of the primitive part.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn is_cyclic(&self) -> bool {
        self.min_gens.len() == 1
    }

    /// Maximal embedding dimension: `e(S)` equals the multiplicity of the
    /// primitive part.
    pub fn is_med(&self) -> bool {
        self.embedding_dimension() as u64 == self.primitive_multiplicity()
    }

    pub fn contains(&self, t: u64) -> bool {
        if !t.is_multiple_of(self.content) {
            return false;
        }
        contains_in_table(&self.apery, t / self.content)
    }

    /// The primitive part `S/D`.
    pub fn primitive(&self) -> Self {
        if self.content == 1 {
            return self.clone();
        }
        Self {
            content: 1,
            min_gens: self.min_gens.iter().map(|g| g / self.content).collect(),
            apery: self.apery.clone(),
            frobenius: self.frobenius,
            genus: self.genus,
        }
    }

    /// Same primitive part, with content replaced by `content`.
    pub(crate) fn with_content(&self, content: u64) -> Result<Self> {
        let min_gens = self
            .min_gens
            .iter()
            .map(|g| {
                (g / self.content)
                    .checked_mul(content)
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            content,
            min_gens,
            apery: self.apery.clone(),
            frobenius: self.frobenius,
            genus: self.genus,
        })
    }

    /// For each residue `r` modulo `n`, the least element of `S` congruent
    /// to `r`. Requires a primitive semigroup and `0 != n ∈ S`.
    pub fn apery_set(&self, n: u64) -> Result<Vec<u64>> {
        if n == 0 || !self.contains(n) {
            return Err(Error::NotAnElement(n));
        }
        if self.content != 1 {
            return Err(Error::NotPrimitive(self.content));
        }
        if n > MAX_APERY_LEN {
            return Err(Error::InputTooLarge(format!(
                "Apéry set of size {n} exceeds the limit {MAX_APERY_LEN}"
            )));
        }
        if n == self.primitive_multiplicity() {
            return Ok(self.apery.clone());
        }
        apery_table(n, &self.min_gens)
    }

    /// All gaps, ascending. Only defined for primitive semigroups.
    pub fn gaps(&self) -> Result<Vec<u64>> {
        if self.content != 1 {
            return Err(Error::InfiniteComplement(self.content));
        }
        if self.frobenius < 0 {
            return Ok(Vec::new());
        }
        Ok((1..=self.frobenius as u64)
            .filter(|&t| !self.contains(t))
            .collect())
    }

    /// Elements of `S` in `[0, bound]`, ascending.
    pub fn elements_up_to(&self, bound: u64) -> Vec<u64> {
        let d = self.content;
        (0..=bound / d)
            .filter(|&q| contains_in_table(&self.apery, q))
            .map(|q| q * d)
            .collect()
    }

    /// Set equality, decided by content, multiplicity and Apéry set.
    pub fn equals(&self, other: &Self) -> bool {
        self.content == other.content
            && self.multiplicity() == other.multiplicity()
            && self.apery == other.apery
    }

    /// `S ⊆ T`, decided on minimal generators.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.min_gens.iter().all(|&g| other.contains(g))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        write_joined(f, &self.min_gens)?;
        f.write_str("⟩")
    }
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_generators(&s.parse()?)
    }
}

fn contains_in_table(apery: &[u64], t: u64) -> bool {
    let m = apery.len() as u64;
    t >= apery[(t % m) as usize]
}

/// Least element of `⟨modulus, steps...⟩` in every residue class modulo
/// `modulus`, by round-robin relaxation along the cycles of each step.
fn apery_table(modulus: u64, steps: &[u64]) -> Result<Vec<u64>> {
    let m = modulus as usize;
    let mut w = vec![UNREACHED; m];
    w[0] = 0;
    for &g in steps {
        let step = (g % modulus) as usize;
        if step == 0 {
            continue;
        }
        let cycles = step.gcd(&m);
        let cycle_len = m / cycles;
        for r in 0..cycles {
            let mut start = r;
            let mut p = r;
            for _ in 1..cycle_len {
                p += step;
                if p >= m {
                    p -= m;
                }
                if w[p] < w[start] {
                    start = p;
                }
            }
            if w[start] == UNREACHED {
                continue;
            }
            let mut p = start;
            let mut cur = w[start];
            for _ in 1..cycle_len {
                let mut q = p + step;
                if q >= m {
                    q -= m;
                }
                let cand = cur.checked_add(g).ok_or(Error::Overflow)?;
                if cand < w[q] {
                    w[q] = cand;
                }
                cur = w[q];
                p = q;
            }
        }
    }
    Ok(w)
}

/// `{"gens":[...],"content":D,"multiplicity":m,"frobenius":F,"genus":g}`
#[derive(Serialize, Deserialize)]
struct SemigroupJson {
    gens: Vec<u64>,
    content: u64,
    multiplicity: u64,
    frobenius: i64,
    genus: u64,
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        SemigroupJson {
            gens: self.min_gens.clone(),
            content: self.content,
            multiplicity: self.multiplicity(),
            frobenius: self.frobenius,
            genus: self.genus,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SemigroupJson::deserialize(deserializer)?;
        let s = Self::from_slice(&raw.gens).map_err(D::Error::custom)?;
        if s.content != raw.content
            || s.multiplicity() != raw.multiplicity
            || s.frobenius != raw.frobenius
            || s.genus != raw.genus
        {
            return Err(D::Error::custom(
                "derived fields do not match the generators",
            ));
        }
        Ok(s)
    }
}
