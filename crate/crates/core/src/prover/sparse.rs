//! Sparse vertex sets and the separation principle they satisfy: if every
//! member of a sparse `W` is determined by all other players, then the
//! players outside `W` determine `W`.

use crate::error::{Error, Result};
use crate::graph::{DependencyGraph, PlayerSet};

use super::{derive_tree, Derivation, Hypotheses};

/// Whether distinct members of `set` are pairwise at distance at least 3.
/// Players in different components count as far apart.
pub fn sparse(graph: &DependencyGraph, set: PlayerSet) -> bool {
    let members: Vec<usize> = set.iter().collect();
    members.iter().enumerate().all(|(i, &v)| {
        let dist = graph.distances_from(v);
        members[i + 1..]
            .iter()
            .all(|&w| dist[w].map_or(true, |d| d >= 3))
    })
}

/// Hypotheses, goal and proof of one instance of the principle.
#[derive(Debug, Clone)]
pub struct PrincipleInstance {
    pub hypotheses: Hypotheses,
    pub goal: (PlayerSet, PlayerSet),
    /// `None` would mean the prover failed to derive the goal.
    pub derivation: Option<Derivation>,
}

/// Builds `{V ∖ {w} ▷ w : w ∈ W}` and the goal `V ∖ W ▷ W`, and asks the
/// prover for a derivation.
pub fn general_principle(graph: &DependencyGraph, set: PlayerSet) -> Result<PrincipleInstance> {
    graph.check_set(set)?;
    if !sparse(graph, set) {
        return Err(Error::NotSparse(graph.format_braced(set)));
    }
    let all = graph.all();
    let atoms = set
        .iter()
        .map(|w| (all.without(w), PlayerSet::singleton(w)))
        .collect();
    let hypotheses = Hypotheses::new(graph, atoms)?;
    let goal = (all.difference(set), set);
    let derivation = derive_tree(graph, &hypotheses, goal.0, goal.1)?;
    Ok(PrincipleInstance { hypotheses, goal, derivation })
}
