//! The tree of numerical semigroups ordered by genus.
//!
//! Children of `S` are `S \ {x}` for each minimal generator `x > F(S)`.
//! Every semigroup of genus `g` appears exactly once at depth `g`. Nodes
//! store their gap set as a bitmask, which caps the genus at 32 (all gaps
//! of a genus-32 semigroup are below 64).

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_GENUS_CEILING: u32 = 22;
pub const MAX_GENUS: u32 = 32;

/// Depth at which [`genus_counts`] splits the tree into parallel subtrees.
const SPLIT_DEPTH: u32 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GenusTreeNode {
    /// Bit `t` is set iff `t` is a gap.
    gaps: u64,
    frobenius: i32,
    genus: u32,
    multiplicity: u32,
}

impl GenusTreeNode {
    pub fn root() -> Self {
        Self {
            gaps: 0,
            frobenius: -1,
            genus: 0,
            multiplicity: 1,
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn frobenius(&self) -> i32 {
        self.frobenius
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn contains(&self, t: u32) -> bool {
        t >= 64 || self.gaps & (1 << t) == 0
    }

    pub fn gaps(&self) -> Vec<u32> {
        (1..64).filter(|&t| !self.contains(t)).collect()
    }

    fn is_minimal_generator(&self, x: u32) -> bool {
        x > 0
            && self.contains(x)
            && (1..=x / 2).all(|y| !(self.contains(y) && self.contains(x - y)))
    }

    /// Minimal generators above the Frobenius number, in increasing order.
    /// Apart from the root they all lie in `(F, F + m]`.
    fn removable(&self) -> impl Iterator<Item = u32> + '_ {
        let lo = (self.frobenius + 1).max(1) as u32;
        let hi = (self.frobenius + self.multiplicity as i32).max(1) as u32;
        (lo..=hi).filter(move |&x| self.is_minimal_generator(x))
    }

    fn child(&self, x: u32) -> Self {
        let gaps = self.gaps | 1 << x;
        let multiplicity = if x == self.multiplicity {
            (x + 1..)
                .find(|&t| gaps & (1u64.checked_shl(t).unwrap_or(0)) == 0)
                .expect("finite")
        } else {
            self.multiplicity
        };
        Self {
            gaps,
            frobenius: x as i32,
            genus: self.genus + 1,
            multiplicity,
        }
    }

    pub fn children(&self) -> Vec<Self> {
        self.removable().map(|x| self.child(x)).collect()
    }

    pub fn to_semigroup(&self) -> NumericalSemigroup {
        let m = self.multiplicity;
        let top = (self.frobenius + m as i32) as u32;
        let gens: Vec<u64> = (m..=top.max(m))
            .filter(|&x| self.contains(x))
            .map(u64::from)
            .collect();
        NumericalSemigroup::from_slice(&gens).expect("gap set describes a semigroup")
    }
}

/// Depth-first traversal of all nodes up to a genus, with an explicit
/// stack.
pub struct GenusTree<F = fn(&GenusTreeNode) -> bool> {
    stack: Vec<GenusTreeNode>,
    max_genus: u32,
    keep: F,
}

impl GenusTree {
    /// All semigroups of genus at most `max_genus`, with the default ceiling.
    pub fn new(max_genus: u32) -> Result<Self> {
        Self::with_ceiling(max_genus, DEFAULT_GENUS_CEILING)
    }

    pub fn with_ceiling(max_genus: u32, ceiling: u32) -> Result<Self> {
        Self::from_nodes(vec![GenusTreeNode::root()], max_genus, ceiling, |_| true)
    }
}

impl<F: FnMut(&GenusTreeNode) -> bool> GenusTree<F> {
    /// Traverses the subtrees under `roots`, skipping any node (and its
    /// descendants) for which `keep` is false.
    pub fn from_nodes(
        roots: Vec<GenusTreeNode>,
        max_genus: u32,
        ceiling: u32,
        keep: F,
    ) -> Result<Self> {
        let ceiling = ceiling.min(MAX_GENUS);
        if max_genus > ceiling {
            return Err(Error::BudgetExceeded(format!(
                "genus {max_genus} is above the enumeration ceiling {ceiling}"
            )));
        }
        let mut stack = roots;
        stack.reverse();
        Ok(Self {
            stack,
            max_genus,
            keep,
        })
    }
}

impl<F: FnMut(&GenusTreeNode) -> bool> Iterator for GenusTree<F> {
    type Item = GenusTreeNode;

    fn next(&mut self) -> Option<GenusTreeNode> {
        loop {
            let node = self.stack.pop()?;
            if node.genus > self.max_genus || !(self.keep)(&node) {
                continue;
            }
            if node.genus < self.max_genus {
                let before = self.stack.len();
                self.stack.extend(node.removable().map(|x| node.child(x)));
                self.stack[before..].reverse();
            }
            return Some(node);
        }
    }
}

/// Number of semigroups of each genus `0..=g_max`.
pub fn genus_counts(g_max: u32) -> Result<Vec<u64>> {
    genus_counts_with_ceiling(g_max, DEFAULT_GENUS_CEILING)
}

fn genus_counts_with_ceiling(g_max: u32, ceiling: u32) -> Result<Vec<u64>> {
    GenusTree::with_ceiling(g_max, ceiling)?;
    let split = g_max.min(SPLIT_DEPTH);
    let mut counts = vec![0u64; g_max as usize + 1];
    let mut frontier = Vec::new();
    for node in GenusTree::with_ceiling(split, ceiling)? {
        counts[node.genus as usize] += 1;
        if node.genus == split && split < g_max {
            frontier.push(node);
        }
    }
    let deeper = frontier
        .into_par_iter()
        .map(|root| {
            let mut local = vec![0u64; g_max as usize + 1];
            for node in GenusTree::from_nodes(vec![root], g_max, ceiling, |_| true)
                .expect("genus already checked")
                .skip(1)
            {
                local[node.genus as usize] += 1;
            }
            local
        })
        .reduce(
            || vec![0u64; g_max as usize + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    counts.iter_mut().zip(deeper).for_each(|(x, y)| *x += y);
    Ok(counts)
}

/// Per-genus counts together with a traversal of every node.
pub fn enumerate_by_genus(g_max: u32) -> Result<(Vec<u64>, GenusTree)> {
    Ok((genus_counts(g_max)?, GenusTree::new(g_max)?))
}

/// All semigroups with multiplicity exactly `m` and genus exactly `g`,
/// sorted by minimal generators.
///
/// Removing a generator never lowers the multiplicity, so subtrees whose
/// multiplicity already exceeds `m` are skipped.
pub fn enumerate_fixed(m: u32, g: u32) -> Result<Vec<NumericalSemigroup>> {
    if m < 2 {
        return Err(Error::ParameterTooSmall(format!(
            "multiplicity {m} must be at least 2"
        )));
    }
    let tree = GenusTree::from_nodes(
        vec![GenusTreeNode::root()],
        g,
        DEFAULT_GENUS_CEILING,
        move |node: &GenusTreeNode| node.multiplicity <= m,
    )?;
    let mut out: Vec<NumericalSemigroup> = tree
        .filter(|node| node.genus == g && node.multiplicity == m)
        .map(|node| node.to_semigroup())
        .collect();
    out.sort_by(|a, b| a.min_gens().cmp(b.min_gens()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Gap sets `G ⊆ [1, 2g]` of size `g` whose complement is closed under
    /// addition.
    fn brute_force_count(g: u32) -> u64 {
        let width = 2 * g;
        let mut count = 0;
        for mask in 0u64..1 << width {
            if mask.count_ones() != g {
                continue;
            }
            let gap = |t: u32| t >= 1 && t <= width && mask >> (t - 1) & 1 == 1;
            let closed = (1..=width)
                .all(|x| gap(x) || (1..=width).all(|y| gap(y) || x + y > width || !gap(x + y)));
            if closed {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn counts_match_known_sequence() {
        assert_eq!(
            genus_counts(8).unwrap(),
            vec![1, 1, 2, 4, 7, 12, 23, 39, 67]
        );
    }

    #[test]
    fn counts_match_brute_force() {
        let counts = genus_counts(6).unwrap();
        for g in 0..=6 {
            assert_eq!(counts[g as usize], brute_force_count(g), "genus {g}");
        }
    }

    #[test]
    fn small_genus() {
        let (counts, tree) = enumerate_by_genus(1).unwrap();
        assert_eq!(counts, vec![1, 1]);
        let nodes: Vec<_> = tree.map(|n| n.to_semigroup()).collect();
        assert_eq!(nodes[0], NumericalSemigroup::naturals());
        assert_eq!(nodes[1].min_gens(), &[2, 3]);
    }

    #[test]
    fn nodes_agree_with_semigroups() {
        for node in GenusTree::new(7).unwrap() {
            let s = node.to_semigroup();
            assert_eq!(s.genus(), node.genus() as u64);
            assert_eq!(s.frobenius(), node.frobenius() as i64);
            assert_eq!(s.multiplicity(), node.multiplicity() as u64);
            for c in node.children() {
                assert_eq!(c.genus(), node.genus() + 1);
            }
        }
    }

    #[test]
    fn fixed_multiplicity_and_genus() {
        let three_two = enumerate_fixed(3, 2).unwrap();
        assert_eq!(three_two.len(), 1);
        assert_eq!(three_two[0].min_gens(), &[3, 4, 5]);
        for g in 1..=8 {
            let two = enumerate_fixed(2, g).unwrap();
            assert_eq!(two.len(), 1);
            assert_eq!(two[0].min_gens(), &[2, 2 * g as u64 + 1]);
        }
        assert!(enumerate_fixed(3, 1).unwrap().is_empty());
    }

    #[test]
    fn ceiling_is_enforced() {
        assert!(matches!(genus_counts(23), Err(Error::BudgetExceeded(_))));
        assert!(matches!(
            GenusTree::with_ceiling(33, 40),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
