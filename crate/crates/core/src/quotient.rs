//! Quotients, scaling and sums of numerical semigroups.
//!
//! `S/d = {t ∈ N : dt ∈ S}`. For a semigroup with content `D`, writing
//! `g = gcd(D, d)` gives `S/d = (D/g) · (P / (d/g))` with `P` the primitive
//! part, so every quotient reduces to a quotient of a primitive semigroup.
//!
//! For primitive `P` with Frobenius number `F`, every `t > F` satisfies
//! `dt >= t > F`, hence `t ∈ P/d`. The quotient is therefore determined by
//! the finitely many `t` in `[0, F + m]`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{GeneratorList, NumericalSemigroup};

/// Largest scan range a quotient evaluation will walk.
pub const MAX_QUOTIENT_SCAN: u64 = 1 << 32;

/// `S/d`.
pub fn quotient(s: &NumericalSemigroup, d: u64) -> Result<NumericalSemigroup> {
    if d == 0 {
        return Err(Error::ZeroParameter {
            what: "denominator",
        });
    }
    if d == 1 {
        return Ok(s.clone());
    }
    let g = s.content().gcd(&d);
    let primitive = primitive_quotient(&s.primitive(), d / g)?;
    primitive.with_content(s.content() / g)
}

fn primitive_quotient(p: &NumericalSemigroup, d: u64) -> Result<NumericalSemigroup> {
    if d == 1 || p.frobenius() < 0 {
        return Ok(p.clone());
    }
    let frob = p.frobenius() as u64;
    let in_quotient =
        |t: u64| -> Result<bool> { Ok(p.contains(t.checked_mul(d).ok_or(Error::Overflow)?)) };
    // The new multiplicity q is at most m, since d*m ∈ P.
    let mut q = 1;
    while !in_quotient(q)? {
        q += 1;
    }
    let scan_end = frob.checked_add(q).ok_or(Error::Overflow)?;
    if scan_end > MAX_QUOTIENT_SCAN {
        return Err(Error::InputTooLarge(format!(
            "quotient scan range {scan_end} exceeds {MAX_QUOTIENT_SCAN}"
        )));
    }
    let q_len = q as usize;
    let mut apery = vec![u64::MAX; q_len];
    let mut unfilled = q_len;
    for t in 0..=scan_end {
        let r = (t % q) as usize;
        if apery[r] == u64::MAX && in_quotient(t)? {
            apery[r] = t;
            unfilled -= 1;
            if unfilled == 0 {
                break;
            }
        }
    }
    debug_assert_eq!(unfilled, 0);
    NumericalSemigroup::from_primitive_apery(apery)
}

/// `c·S = {c·s : s ∈ S}`.
pub fn scale(s: &NumericalSemigroup, c: u64) -> Result<NumericalSemigroup> {
    if c == 0 {
        return Err(Error::ZeroParameter { what: "scale" });
    }
    let content = s.content().checked_mul(c).ok_or(Error::Overflow)?;
    s.with_content(content)
}

/// The sumset `S + T`, generated by the union of both generating sets.
pub fn add(s: &NumericalSemigroup, t: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    let mut gens = s.min_gens().to_vec();
    gens.extend_from_slice(t.min_gens());
    NumericalSemigroup::from_slice(&gens)
}

/// `(scale·⟨numerator⟩) / denominator`.
///
/// In canonical form `gcd(scale, denominator) = 1`, where this also equals
/// `scale · (⟨numerator⟩ / denominator)`. [`normalize`](Self::normalize)
/// reaches canonical form without changing the denoted semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRep")]
pub struct QuotientRep {
    pub scale: u64,
    #[serde(rename = "num")]
    pub numerator: GeneratorList,
    #[serde(rename = "den")]
    pub denominator: u64,
}

#[derive(Deserialize)]
struct RawRep {
    scale: u64,
    num: GeneratorList,
    den: u64,
}

impl TryFrom<RawRep> for QuotientRep {
    type Error = Error;

    fn try_from(raw: RawRep) -> Result<Self> {
        Self::new(raw.scale, raw.num, raw.den)
    }
}

impl QuotientRep {
    pub fn new(scale: u64, numerator: GeneratorList, denominator: u64) -> Result<Self> {
        if scale == 0 {
            return Err(Error::ZeroParameter { what: "scale" });
        }
        if denominator == 0 {
            return Err(Error::ZeroParameter {
                what: "denominator",
            });
        }
        Ok(Self {
            scale,
            numerator,
            denominator,
        })
    }

    /// `⟨numerator⟩ / denominator` with unit scale.
    pub fn plain(numerator: &[u64], denominator: u64) -> Result<Self> {
        Self::new(1, GeneratorList::new(numerator.to_vec())?, denominator)
    }

    pub fn num_generators(&self) -> usize {
        self.numerator.len()
    }

    /// Divides scale and denominator by their gcd, using
    /// `mS/d = m'(S/d')` with `m' = m/gcd(m,d)`, `d' = d/gcd(m,d)`.
    pub fn normalize(&self) -> Self {
        let g = self.scale.gcd(&self.denominator);
        Self {
            scale: self.scale / g,
            numerator: self.numerator.clone(),
            denominator: self.denominator / g,
        }
    }

    /// Folds the scale into the numerator, leaving a unit-scale rep.
    fn absorb_scale(&self) -> Result<Self> {
        let r = self.normalize();
        if r.scale == 1 {
            return Ok(r);
        }
        let num = r
            .numerator
            .as_slice()
            .iter()
            .map(|&a| a.checked_mul(r.scale).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Self::new(1, GeneratorList::new(num)?, r.denominator)
    }

    /// The semigroup this representation denotes.
    pub fn evaluate(&self) -> Result<NumericalSemigroup> {
        let numerator = NumericalSemigroup::from_generators(&self.numerator)?;
        quotient(&scale(&numerator, self.scale)?, self.denominator)
    }
}

impl fmt::Display for QuotientRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale != 1 {
            write!(f, "{}·", self.scale)?;
        }
        write!(f, "⟨{}⟩/{}", self.numerator, self.denominator)
    }
}

impl FromStr for QuotientRep {
    type Err = Error;

    /// Parses `num1,num2,...:d` (unit scale).
    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = s.rsplit_once(':').ok_or_else(|| Error::Parse {
            input: s.to_string(),
            reason: "expected <gens>:<denominator>".to_string(),
        })?;
        let den: u64 = den
            .trim()
            .parse()
            .map_err(|e: std::num::ParseIntError| Error::Parse {
                input: den.to_string(),
                reason: e.to_string(),
            })?;
        Self::new(1, num.parse()?, den)
    }
}

pub fn normalize_rep(r: &QuotientRep) -> QuotientRep {
    r.normalize()
}

/// `S/c + T/d = (dS + cT)/(cd)` for coprime `c`, `d`.
///
/// Representations with nontrivial scale are accepted: after normalization
/// their scale is coprime to the denominator and is folded into the
/// numerator first.
pub fn quotient_sum_coprime(a: &QuotientRep, b: &QuotientRep) -> Result<QuotientRep> {
    let a = a.absorb_scale()?;
    let b = b.absorb_scale()?;
    let (c, d) = (a.denominator, b.denominator);
    if c.gcd(&d) != 1 {
        return Err(Error::NotCoprime(c, d));
    }
    combine(&a, &b)
}

/// `(dS + cT)/(cd)` without the coprimality requirement.
///
/// The result always contains `S/c + T/d`; equality may fail when
/// `gcd(c, d) > 1`.
pub fn quotient_sum_superset(a: &QuotientRep, b: &QuotientRep) -> Result<QuotientRep> {
    combine(&a.absorb_scale()?, &b.absorb_scale()?)
}

fn combine(a: &QuotientRep, b: &QuotientRep) -> Result<QuotientRep> {
    let (c, d) = (a.denominator, b.denominator);
    let mut num = Vec::with_capacity(a.num_generators() + b.num_generators());
    for &x in a.numerator.as_slice() {
        num.push(x.checked_mul(d).ok_or(Error::Overflow)?);
    }
    for &y in b.numerator.as_slice() {
        num.push(y.checked_mul(c).ok_or(Error::Overflow)?);
    }
    num.sort_unstable();
    num.dedup();
    let den = c.checked_mul(d).ok_or(Error::Overflow)?;
    QuotientRep::new(1, GeneratorList::new(num)?, den)
}

/// Decides whether `r` denotes `s` without evaluating the quotient.
///
/// With `N = ⟨numerator⟩` and target `T = s/scale` (both reduced to primitive
/// parts), `N/d = T` iff
/// 1. `d·a ∈ N` for every minimal generator `a` of `T`, and
/// 2. `d·g ∉ N` for every gap `g` of `T`.
///
/// The first gives `T ⊆ N/d` by additive closure, the second `N/d ⊆ T`.
/// Only membership in `N` is needed, which its Apéry table answers in
/// constant time even when its Frobenius number is astronomically large.
pub fn verify_rep(s: &NumericalSemigroup, r: &QuotientRep) -> Result<bool> {
    let r = r.normalize();
    if !s.content().is_multiple_of(r.scale) {
        return Ok(false);
    }
    let target_content = s.content() / r.scale;
    let numerator = NumericalSemigroup::from_generators(&r.numerator)?;
    // N/d = (D_N/g) · (P_N / (d/g)) with g = gcd(D_N, d).
    let g = numerator.content().gcd(&r.denominator);
    if numerator.content() / g != target_content {
        return Ok(false);
    }
    let d = r.denominator / g;
    let target = s.primitive();
    let p_num = numerator.primitive();
    let member =
        |t: u64| -> Result<bool> { Ok(p_num.contains(t.checked_mul(d).ok_or(Error::Overflow)?)) };
    for &a in target.min_gens() {
        if !member(a)? {
            return Ok(false);
        }
    }
    for gap in target.gaps()? {
        if member(gap)? {
            return Ok(false);
        }
    }
    Ok(true)
}
