//! Membership by boolean sieve, independent of the library's Apéry tables.

#![allow(dead_code)]

pub struct Sieve {
    reach: Vec<bool>,
}

impl Sieve {
    pub fn new(gens: &[u64], bound: u64) -> Self {
        let n = bound as usize;
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        for x in 1..=n {
            reach[x] = gens
                .iter()
                .any(|&g| g as usize <= x && reach[x - g as usize]);
        }
        Self { reach }
    }

    pub fn contains(&self, t: u64) -> bool {
        self.reach[t as usize]
    }

    pub fn bound(&self) -> u64 {
        self.reach.len() as u64 - 1
    }
}

/// `{t <= bound : d·t ∈ ⟨gens⟩}`, by sieving up to `d·bound`.
pub fn quotient_members(gens: &[u64], d: u64, bound: u64) -> Vec<bool> {
    let sieve = Sieve::new(gens, d * bound);
    (0..=bound).map(|t| sieve.contains(d * t)).collect()
}
