//! Orderings that witness quotient rank at most 2.
//!
//! A semigroup with content `D` is a 2-quotient iff its minimal generators
//! admit an ordering `b_1, ..., b_n` with `gcd(b_i, b_{i+1}) = D` and
//! `b_i | b_{i-1} + b_{i+1}` for every interior `i`.

use num_integer::Integer;

use crate::semigroup::NumericalSemigroup;

/// The lexicographically smallest valid ordering, if any.
pub fn pm_ordering(s: &NumericalSemigroup) -> Option<Vec<u64>> {
    let gens = s.min_gens();
    let mut path = Vec::with_capacity(gens.len());
    let mut used = vec![false; gens.len()];
    extend(gens, s.content(), &mut path, &mut used).then_some(path)
}

fn fits(path: &[u64], next: u64, content: u64) -> bool {
    let Some(&prev) = path.last() else {
        return true;
    };
    if prev.gcd(&next) != content {
        return false;
    }
    match path.len() {
        1 => true,
        len => (path[len - 2] + next).is_multiple_of(prev),
    }
}

fn extend(gens: &[u64], content: u64, path: &mut Vec<u64>, used: &mut [bool]) -> bool {
    if path.len() == gens.len() {
        return true;
    }
    for i in 0..gens.len() {
        if used[i] || !fits(path, gens[i], content) {
            continue;
        }
        used[i] = true;
        path.push(gens[i]);
        if extend(gens, content, path, used) {
            return true;
        }
        path.pop();
        used[i] = false;
    }
    false
}

/// Whether `ordering` is a permutation of the minimal generators of `s`
/// meeting both conditions.
pub fn is_pm_ordering(s: &NumericalSemigroup, ordering: &[u64]) -> bool {
    let mut sorted = ordering.to_vec();
    sorted.sort_unstable();
    if sorted != s.min_gens() {
        return false;
    }
    (1..ordering.len()).all(|i| fits(&ordering[..i], ordering[i], s.content()))
}
