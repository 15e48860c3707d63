//! Truth of formulas in a game: `A ▷ B` holds when any two equilibria that
//! agree on `A` also agree on `B`.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::equilibrium::{enumerate_equilibria, EquilibriumSet};
use crate::error::Result;
use crate::formula::Formula;
use crate::game::{agrees_on, Game, StrategyProfile};
use crate::graph::PlayerSet;

fn project(s: &StrategyProfile, set: PlayerSet) -> Vec<usize> {
    set.iter().map(|v| s.get(v)).collect()
}

/// Dependence over an explicit list of equilibria, grouping by the
/// projection onto `lhs` and requiring a constant projection onto `rhs`
/// within each group.
pub fn depends_among<'a>(
    equilibria: impl IntoIterator<Item = &'a StrategyProfile>,
    lhs: PlayerSet,
    rhs: PlayerSet,
) -> bool {
    let rhs = rhs.difference(lhs);
    if rhs.is_empty() {
        return true;
    }
    let mut witness: HashMap<Vec<usize>, &StrategyProfile> = HashMap::new();
    for s in equilibria {
        match witness.entry(project(s, lhs)) {
            Entry::Vacant(e) => {
                e.insert(s);
            }
            Entry::Occupied(e) => {
                if !agrees_on(e.get(), s, rhs) {
                    return false;
                }
            }
        }
    }
    true
}

/// A game paired with its equilibrium set, computed once.
#[derive(Debug, Clone)]
pub struct GameModel {
    game: Game,
    equilibria: EquilibriumSet,
}

impl GameModel {
    pub fn new(game: Game) -> Result<Self> {
        let equilibria = enumerate_equilibria(&game)?;
        Ok(GameModel { game, equilibria })
    }

    pub fn from_parts(game: Game, equilibria: EquilibriumSet) -> Self {
        GameModel { game, equilibria }
    }

    pub fn game(&self) -> &Game {
        &self.game
    }

    pub fn equilibria(&self) -> &EquilibriumSet {
        &self.equilibria
    }

    pub fn into_game(self) -> Game {
        self.game
    }

    pub fn depends(&self, lhs: PlayerSet, rhs: PlayerSet) -> bool {
        depends_among(&self.equilibria, lhs, rhs)
    }

    pub fn holds(&self, formula: &Formula) -> bool {
        match formula {
            Formula::Falsum => false,
            Formula::Atom(l, r) => self.depends(*l, *r),
            Formula::Implies(a, b) => !self.holds(a) || self.holds(b),
        }
    }
}

pub fn depends(game: &Game, lhs: PlayerSet, rhs: PlayerSet) -> Result<bool> {
    Ok(depends_among(&enumerate_equilibria(game)?, lhs, rhs))
}

pub fn holds(game: &Game, formula: &Formula) -> Result<bool> {
    let equilibria = enumerate_equilibria(game)?;
    Ok(GameModel::from_parts(game.clone(), equilibria).holds(formula))
}
