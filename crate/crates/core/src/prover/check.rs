//! Independent checker for derivations: every step must instantiate its
//! rule schema exactly. Nothing here consults the closure table.

use std::fmt;

use crate::graph::{DependencyGraph, PlayerSet};

use super::derivation::{Derivation, Justification, Step};
use super::Hypotheses;

/// Why a derivation was rejected; `step` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckError {
    pub step: usize,
    pub message: String,
}

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.step, self.message)
    }
}

impl std::error::Error for CheckError {}

pub fn check_derivation(graph: &DependencyGraph, hyps: &Hypotheses, derivation: &Derivation) -> Result<(), CheckError> {
    let steps = derivation.steps();
    if steps.is_empty() {
        return Err(CheckError { step: 0, message: "empty derivation".into() });
    }
    for (i, step) in steps.iter().enumerate() {
        check_step(graph, hyps, &steps[..i], step).map_err(|message| CheckError { step: i + 1, message })?;
    }
    Ok(())
}

/// Checks the derivation and that its last step is `lhs ▷ rhs`.
pub fn check_proves(
    graph: &DependencyGraph,
    hyps: &Hypotheses,
    derivation: &Derivation,
    lhs: PlayerSet,
    rhs: PlayerSet,
) -> Result<(), CheckError> {
    check_derivation(graph, hyps, derivation)?;
    match derivation.conclusion() {
        Some(goal) if goal == (lhs, rhs) => Ok(()),
        Some((l, r)) => Err(CheckError {
            step: derivation.len(),
            message: format!(
                "concludes {} |> {}, not the goal {} |> {}",
                graph.format_set(l),
                graph.format_set(r),
                graph.format_set(lhs),
                graph.format_set(rhs)
            ),
        }),
        None => unreachable!("checked non-empty"),
    }
}

fn premise<'a>(earlier: &'a [Step], index: usize) -> Result<&'a Step, String> {
    earlier
        .get(index)
        .ok_or_else(|| format!("premise {} is not an earlier step", index + 1))
}

fn check_step(graph: &DependencyGraph, hyps: &Hypotheses, earlier: &[Step], step: &Step) -> Result<(), String> {
    let all = graph.all();
    if !step.lhs.union(step.rhs).is_subset(all) {
        return Err("atom mentions players outside the graph".into());
    }
    let f = |s: PlayerSet| graph.format_braced(s);
    match step.justification {
        Justification::Hypothesis => {
            if !hyps.contains(step.lhs, step.rhs) {
                return Err("atom is not a hypothesis".into());
            }
        }
        Justification::Reflexivity => {
            if !step.rhs.is_subset(step.lhs) {
                return Err(format!("B ⊄ A: {} is not within {}", f(step.rhs), f(step.lhs)));
            }
        }
        Justification::Augmentation { premise: p, added } => {
            let p = premise(earlier, p)?;
            let expected = (p.lhs.union(added), p.rhs.union(added));
            if (step.lhs, step.rhs) != expected {
                return Err(format!(
                    "augmenting with {} gives {} |> {}",
                    f(added),
                    f(expected.0),
                    f(expected.1)
                ));
            }
        }
        Justification::Transitivity { first, second } => {
            let p = premise(earlier, first)?;
            let q = premise(earlier, second)?;
            if p.rhs != q.lhs {
                return Err(format!("middle sets differ: {} vs {}", f(p.rhs), f(q.lhs)));
            }
            if (step.lhs, step.rhs) != (p.lhs, q.rhs) {
                return Err(format!("chaining gives {} |> {}", f(p.lhs), f(q.rhs)));
            }
        }
        Justification::Contiguity { premise: p, cut, a } => {
            let p = premise(earlier, p)?;
            let (u, w) = (cut.left(), cut.right());
            if !u.intersection(w).is_empty() || u.union(w) != all {
                return Err("(U, W) is not a cut".into());
            }
            if !a.is_subset(u) {
                return Err(format!("A ⊄ U: {} is not within {}", f(a), f(u)));
            }
            if !a.is_subset(p.lhs) {
                return Err(format!("A ⊄ premise: {} is not within {}", f(a), f(p.lhs)));
            }
            if !p.rhs.is_subset(w) {
                return Err(format!("C ⊄ W: {} is not within {}", f(p.rhs), f(w)));
            }
            let b = p.lhs.difference(a);
            let lhs = graph.border(u).union(graph.border(w)).union(b);
            if (step.lhs, step.rhs) != (lhs, p.rhs) {
                return Err(format!("contiguity gives {} |> {}", f(lhs), f(p.rhs)));
            }
        }
        Justification::LeftMonotonicity { premise: p, added } => {
            let p = premise(earlier, p)?;
            let expected = p.lhs.union(added);
            if (step.lhs, step.rhs) != (expected, p.rhs) {
                return Err(format!("enlarging gives {} |> {}", f(expected), f(p.rhs)));
            }
        }
    }
    Ok(())
}
