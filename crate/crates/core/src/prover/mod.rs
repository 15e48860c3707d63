//! Derivability of dependence atoms from hypotheses in the calculus of
//! Reflexivity, Augmentation, Transitivity and Contiguity over a fixed
//! graph.
//!
//! [`saturate`] computes a closure table that decides sequents
//! `hypotheses ⊢ A ▷ B`; [`derive_tree`] turns a positive answer into an
//! explicit [`Derivation`], and [`check_derivation`] re-verifies any
//! derivation rule by rule without trusting the table.

mod build;
mod check;
mod closure;
mod derivation;
mod sparse;

pub use check::{check_derivation, check_proves, CheckError};
pub use closure::{saturate, ClosureTable, Reason, MAX_PROVER_VERTICES};
pub use derivation::{Derivation, Justification, Step};
pub use sparse::{general_principle, sparse, PrincipleInstance};

use crate::error::Result;
use crate::graph::{DependencyGraph, PlayerSet};

/// Extra axioms `L ▷ R`, kept in first-seen order without repeats.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Hypotheses {
    atoms: Vec<(PlayerSet, PlayerSet)>,
}

impl Hypotheses {
    pub fn new(graph: &DependencyGraph, atoms: Vec<(PlayerSet, PlayerSet)>) -> Result<Self> {
        let mut out = Hypotheses::default();
        for (l, r) in atoms {
            graph.check_set(l.union(r))?;
            if !out.contains(l, r) {
                out.atoms.push((l, r));
            }
        }
        Ok(out)
    }

    pub fn atoms(&self) -> &[(PlayerSet, PlayerSet)] {
        &self.atoms
    }

    pub fn contains(&self, lhs: PlayerSet, rhs: PlayerSet) -> bool {
        self.atoms.contains(&(lhs, rhs))
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }
}

/// `hyps ⊢ lhs ▷ rhs`.
pub fn derives(graph: &DependencyGraph, hyps: &Hypotheses, lhs: PlayerSet, rhs: PlayerSet) -> Result<bool> {
    Ok(saturate(graph, hyps)?.derives(lhs, rhs))
}

/// A derivation of `lhs ▷ rhs` from `hyps`, or `None` when there is none.
pub fn derive_tree(
    graph: &DependencyGraph,
    hyps: &Hypotheses,
    lhs: PlayerSet,
    rhs: PlayerSet,
) -> Result<Option<Derivation>> {
    let table = saturate(graph, hyps)?;
    Ok(derive_from_table(graph, hyps, &table, lhs, rhs))
}

/// Like [`derive_tree`] but reuses an already saturated table.
pub fn derive_from_table(
    graph: &DependencyGraph,
    hyps: &Hypotheses,
    table: &ClosureTable,
    lhs: PlayerSet,
    rhs: PlayerSet,
) -> Option<Derivation> {
    if !table.derives(lhs, rhs) {
        return None;
    }
    let mut builder = build::Builder::new(graph, hyps, table);
    let last = builder.atom(lhs, rhs);
    let derivation = builder.finish();
    Some(prune(derivation, last))
}

/// Keeps only the steps the final one depends on, renumbering premises,
/// and makes `last` the final step.
fn prune(derivation: Derivation, last: usize) -> Derivation {
    let steps = derivation.steps();
    let mut needed = vec![false; steps.len()];
    needed[last] = true;
    for i in (0..=last).rev() {
        if needed[i] {
            for p in steps[i].justification.premises() {
                needed[p] = true;
            }
        }
    }
    let mut renumber = vec![usize::MAX; steps.len()];
    let mut out = Derivation::default();
    for i in 0..=last {
        if !needed[i] {
            continue;
        }
        let mut step = steps[i];
        step.justification = match step.justification {
            Justification::Augmentation { premise, added } => Justification::Augmentation { premise: renumber[premise], added },
            Justification::Transitivity { first, second } => Justification::Transitivity {
                first: renumber[first],
                second: renumber[second],
            },
            Justification::Contiguity { premise, cut, a } => Justification::Contiguity { premise: renumber[premise], cut, a },
            Justification::LeftMonotonicity { premise, added } => {
                Justification::LeftMonotonicity { premise: renumber[premise], added }
            }
            j => j,
        };
        renumber[i] = out.push(step.lhs, step.rhs, step.justification);
    }
    out
}
