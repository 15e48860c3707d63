//! Rebuilds explicit derivations from the reasons recorded in a
//! [`ClosureTable`].

use std::collections::HashMap;

use crate::graph::{Cut, DependencyGraph, PlayerSet};

use super::closure::{ClosureTable, Reason};
use super::derivation::{Derivation, Justification};
use super::Hypotheses;

pub(crate) struct Builder<'a> {
    graph: &'a DependencyGraph,
    hyps: &'a Hypotheses,
    table: &'a ClosureTable,
    out: Derivation,
    memo: HashMap<(PlayerSet, PlayerSet), usize>,
}

impl<'a> Builder<'a> {
    pub(crate) fn new(graph: &'a DependencyGraph, hyps: &'a Hypotheses, table: &'a ClosureTable) -> Self {
        Builder {
            graph,
            hyps,
            table,
            out: Derivation::default(),
            memo: HashMap::new(),
        }
    }

    pub(crate) fn finish(self) -> Derivation {
        self.out
    }

    fn emit(&mut self, lhs: PlayerSet, rhs: PlayerSet, justification: Justification) -> usize {
        if let Some(&i) = self.memo.get(&(lhs, rhs)) {
            return i;
        }
        let i = self.out.push(lhs, rhs, justification);
        self.memo.insert((lhs, rhs), i);
        i
    }

    /// Step proving `lhs ▷ rhs`; requires `rhs ⊆ cl(lhs)`.
    pub(crate) fn atom(&mut self, lhs: PlayerSet, rhs: PlayerSet) -> usize {
        if let Some(&i) = self.memo.get(&(lhs, rhs)) {
            return i;
        }
        if rhs.is_subset(lhs) {
            return self.emit(lhs, rhs, Justification::Reflexivity);
        }
        if self.hyps.contains(lhs, rhs) {
            return self.emit(lhs, rhs, Justification::Hypothesis);
        }
        let inside = rhs.intersection(lhs);
        let mut acc = (!inside.is_empty()).then(|| self.emit(lhs, inside, Justification::Reflexivity));
        let mut proved = inside;
        for c in rhs.difference(lhs).iter() {
            let single = self.fact(lhs, c);
            acc = Some(match acc {
                None => single,
                Some(prev) => self.join(lhs, prev, proved, single, PlayerSet::singleton(c)),
            });
            proved.insert(c);
        }
        acc.expect("rhs ⊄ lhs, so at least one member was proved")
    }

    /// From `X ▷ P` and `X ▷ Q` build `X ▷ P ∪ Q`:
    /// augment the first with `X`, the second with `P`, then chain.
    fn join(&mut self, x: PlayerSet, p_step: usize, p: PlayerSet, q_step: usize, q: PlayerSet) -> usize {
        let widened = self.emit(x, p.union(x), Justification::Augmentation { premise: p_step, added: x });
        let lifted = self.emit(
            x.union(p),
            q.union(p),
            Justification::Augmentation { premise: q_step, added: p },
        );
        self.emit(
            x,
            p.union(q),
            Justification::Transitivity { first: widened, second: lifted },
        )
    }

    /// Step proving `X ▷ {c}` for a recorded membership `c ∈ cl(X) ∖ X`.
    fn fact(&mut self, x: PlayerSet, c: usize) -> usize {
        let target = PlayerSet::singleton(c);
        if let Some(&i) = self.memo.get(&(x, target)) {
            return i;
        }
        let reason = self
            .table
            .reason(x, c)
            .expect("every closure member outside X has a recorded reason");
        match reason {
            Reason::Hypothesis(h) => {
                let (l, r) = self.hyps.atoms()[h];
                let given = self.emit(l, r, Justification::Hypothesis);
                if r == target {
                    return given;
                }
                let pick = self.emit(r, target, Justification::Reflexivity);
                self.emit(x, target, Justification::Transitivity { first: given, second: pick })
            }
            Reason::Widen { from } => {
                let p = self.fact(from, c);
                self.emit(
                    x,
                    target,
                    Justification::LeftMonotonicity { premise: p, added: x.difference(from) },
                )
            }
            Reason::Chain { via } => {
                let first = self.atom(x, via);
                let second = self.fact(via, c);
                self.emit(x, target, Justification::Transitivity { first, second })
            }
            Reason::Contiguity { from, left } => {
                let p = self.fact(from, c);
                let cut = Cut::from_left(self.graph, left).expect("recorded cuts lie in the graph");
                self.emit(
                    x,
                    target,
                    Justification::Contiguity { premise: p, cut, a: from.intersection(left) },
                )
            }
        }
    }
}
