use crate::graph::PlayerSet;

/// A formula over a fixed dependency graph: `⊥`, `A ▷ B`, or `φ → ψ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Falsum,
    Atom(PlayerSet, PlayerSet),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(lhs: PlayerSet, rhs: PlayerSet) -> Self {
        Formula::Atom(lhs, rhs)
    }

    pub fn implies(antecedent: Formula, consequent: Formula) -> Self {
        Formula::Implies(Box::new(antecedent), Box::new(consequent))
    }

    /// `φ → ⊥`.
    pub fn not(inner: Formula) -> Self {
        Formula::implies(inner, Formula::Falsum)
    }

    /// `h₁ → (h₂ → … → goal)`.
    pub fn chain(hypotheses: impl IntoIterator<Item = Formula>, goal: Formula) -> Self {
        let hyps: Vec<Formula> = hypotheses.into_iter().collect();
        hyps.into_iter().rev().fold(goal, |acc, h| Formula::implies(h, acc))
    }

    /// Union of every player set mentioned.
    pub fn players(&self) -> PlayerSet {
        match self {
            Formula::Falsum => PlayerSet::EMPTY,
            Formula::Atom(l, r) => l.union(*r),
            Formula::Implies(a, b) => a.players().union(b.players()),
        }
    }

    pub fn as_atom(&self) -> Option<(PlayerSet, PlayerSet)> {
        match self {
            Formula::Atom(l, r) => Some((*l, *r)),
            _ => None,
        }
    }
}
