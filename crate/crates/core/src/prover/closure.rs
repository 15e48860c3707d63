//! Attribute-closure saturation for the dependence calculus.
//!
//! `cl(X)` collects every player `c` with `X ▷ c` derivable. The table is
//! the least one that is extensive, monotone and idempotent, contains each
//! hypothesis, and is closed under the contiguity step
//! `c ∈ cl(X), c ∈ W  ⇒  c ∈ cl(B(U) ∪ B(W) ∪ (X ∖ U))` for every cut
//! `(U, W)`. Using `X ∖ U` as the untouched part of the premise gives the
//! smallest conclusion; larger splits follow by left monotonicity.
//!
//! Every membership records the rule that produced it, pointing only at
//! memberships recorded earlier, so derivations can be rebuilt from it.

use crate::error::{Error, Result};
use crate::graph::{DependencyGraph, PlayerSet};

use super::Hypotheses;

/// The prover refuses graphs with more vertices than this.
pub const MAX_PROVER_VERTICES: usize = 12;

/// Why `c ∈ cl(X)` was recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    /// `X` is the left side of hypothesis number `.0`, which names `c`.
    Hypothesis(usize),
    /// `c ∈ cl(from)` with `from ⊂ X`.
    Widen { from: PlayerSet },
    /// `via ⊆ cl(X)` and `c ∈ cl(via)`.
    Chain { via: PlayerSet },
    /// `c ∈ cl(from)` carried across the cut whose left side is `left`.
    Contiguity { from: PlayerSet, left: PlayerSet },
}

#[derive(Debug, Clone)]
pub struct ClosureTable {
    n: usize,
    closure: Vec<PlayerSet>,
    reasons: Vec<Option<Reason>>,
}

impl ClosureTable {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `cl(X)`.
    pub fn closure(&self, set: PlayerSet) -> PlayerSet {
        self.closure[set.bits() as usize]
    }

    pub fn derives(&self, lhs: PlayerSet, rhs: PlayerSet) -> bool {
        rhs.is_subset(self.closure(lhs))
    }

    /// The rule that put `c` into `cl(X)`; `None` when `c ∈ X` or `c ∉ cl(X)`.
    pub fn reason(&self, set: PlayerSet, c: usize) -> Option<Reason> {
        self.reasons[set.bits() as usize * self.n + c]
    }

    /// All `(X, cl(X))` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (PlayerSet, PlayerSet)> + '_ {
        self.closure
            .iter()
            .enumerate()
            .map(|(x, &c)| (PlayerSet::from_bits(x as u64), c))
    }

    fn add(&mut self, x: usize, new: PlayerSet, reason: Reason) -> bool {
        let fresh = new.difference(self.closure[x]);
        for c in fresh.iter() {
            self.reasons[x * self.n + c] = Some(reason);
        }
        self.closure[x] = self.closure[x].union(fresh);
        !fresh.is_empty()
    }
}

pub(crate) fn check_size(graph: &DependencyGraph) -> Result<()> {
    if graph.len() > MAX_PROVER_VERTICES {
        Err(Error::TooManyVertices {
            count: graph.len(),
            max: MAX_PROVER_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Saturates the closure table for `graph` under `hyps`.
pub fn saturate(graph: &DependencyGraph, hyps: &Hypotheses) -> Result<ClosureTable> {
    check_size(graph)?;
    let n = graph.len();
    let size = 1usize << n;
    let mut table = ClosureTable {
        n,
        closure: (0..size).map(|x| PlayerSet::from_bits(x as u64)).collect(),
        reasons: vec![None; size * n],
    };
    for (h, &(lhs, rhs)) in hyps.atoms().iter().enumerate() {
        table.add(lhs.bits() as usize, rhs, Reason::Hypothesis(h));
    }

    let all = graph.all();
    // border(U) ∪ border(W) for every left side U.
    let divider: Vec<PlayerSet> = (0..size)
        .map(|u| {
            let left = PlayerSet::from_bits(u as u64);
            graph.border(left).union(graph.border(all.difference(left)))
        })
        .collect();
    // Members of cl(X) already pushed through the contiguity step.
    let mut carried = vec![PlayerSet::EMPTY; size];

    loop {
        let mut changed = false;
        for x in 0..size {
            let set = PlayerSet::from_bits(x as u64);

            for v in set.iter() {
                let smaller = set.without(v);
                let inherited = table.closure[smaller.bits() as usize];
                // Point at the fact's origin rather than a chain of one-step widenings.
                for c in inherited.difference(table.closure[x]).iter() {
                    let from = match table.reason(smaller, c) {
                        Some(Reason::Widen { from }) => from,
                        _ => smaller,
                    };
                    changed |= table.add(x, PlayerSet::singleton(c), Reason::Widen { from });
                }
            }

            loop {
                let via = table.closure[x];
                let reach = table.closure[via.bits() as usize];
                if !table.add(x, reach, Reason::Chain { via }) {
                    break;
                }
                changed = true;
            }

            let fresh = table.closure[x].difference(set).difference(carried[x]);
            if fresh.is_empty() {
                continue;
            }
            carried[x] = carried[x].union(fresh);
            for (u, &div) in divider.iter().enumerate() {
                let left = PlayerSet::from_bits(u as u64);
                let moved = fresh.difference(left);
                if moved.is_empty() {
                    continue;
                }
                let lhs = div.union(set.difference(left));
                changed |= table.add(lhs.bits() as usize, moved, Reason::Contiguity { from: set, left });
            }
        }
        if !changed {
            return Ok(table);
        }
    }
}
