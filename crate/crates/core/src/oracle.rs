//! Boolean-sieve membership, independent of the Apéry machinery.

pub(crate) struct Sieve {
    reach: Vec<bool>,
}

impl Sieve {
    pub(crate) fn new(gens: &[u64], bound: u64) -> Self {
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

    pub(crate) fn contains(&self, t: u64) -> bool {
        self.reach[t as usize]
    }
}
