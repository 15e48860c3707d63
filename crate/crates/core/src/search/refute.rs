//! Searching for games that falsify a formula.

use crate::equilibrium::enumerate_equilibria_capped;
use crate::error::Result;
use crate::formula::Formula;
use crate::game::Game;
use crate::graph::DependencyGraph;
use crate::semantics::GameModel;

use super::stream::{scan, Stream};
use super::{SearchBounds, SearchMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// The first game in stream order where the formula fails.
    Found { game: Game, index: u128 },
    NoneWithinBounds {
        /// Games whose equilibria were computed and checked.
        examined: u128,
        /// Random games over the profile cap, or systematic count vectors
        /// left out for the same reason.
        skipped: u128,
        /// Whether every game within the bounds was examined.
        exhaustive: bool,
    },
}

enum Verdict {
    Holds,
    Fails(Game),
    Skipped,
}

/// Looks for a game over `graph` in which `formula` fails.
pub fn find_counterexample(graph: &DependencyGraph, formula: &Formula, bounds: &SearchBounds) -> Result<SearchOutcome> {
    graph.check_set(formula.players())?;
    let stream = Stream::new(graph, bounds)?;
    let limit = stream.len().min(bounds.budget());
    let eval = |i: u128| {
        let game = stream.game(i);
        match enumerate_equilibria_capped(&game, bounds.max_profiles) {
            Err(_) => Verdict::Skipped,
            Ok(ne) => {
                let model = GameModel::from_parts(game, ne);
                if model.holds(formula) {
                    Verdict::Holds
                } else {
                    Verdict::Fails(model.into_game())
                }
            }
        }
    };
    let mut examined = 0u128;
    let mut skipped = stream.skipped_vectors();
    let found = scan(limit, eval, |index, verdict| match verdict {
        Verdict::Fails(game) => Some(SearchOutcome::Found { game, index }),
        Verdict::Holds => {
            examined += 1;
            None
        }
        Verdict::Skipped => {
            skipped += 1;
            None
        }
    });
    Ok(found.unwrap_or(SearchOutcome::NoneWithinBounds {
        examined,
        skipped,
        exhaustive: bounds.mode == SearchMode::Systematic && skipped == 0 && limit == stream.len(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_formula;
    use crate::payoff::Payoff;
    use crate::search::builtin_graph;
    use crate::semantics::holds;

    fn systematic(max_strategies: usize) -> SearchBounds {
        SearchBounds { max_strategies, mode: SearchMode::Systematic, ..Default::default() }
    }

    #[test]
    fn empty_lhs_on_one_player() {
        let g = DependencyGraph::from_names(&["a"], &[]).unwrap();
        let phi = parse_formula("{} |> a", &g).unwrap();
        match find_counterexample(&g, &phi, &systematic(2)).unwrap() {
            SearchOutcome::Found { game, index } => {
                // The one-strategy games come first; then the all-zero 2-strategy game.
                assert_eq!(index, 2);
                assert_eq!(game.strategy_count(0), 2);
                assert!(game.table(0).entries().all(|(_, p)| p == Payoff::ZERO));
                assert!(!holds(&game, &phi).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn reflexive_atoms_have_no_counterexample() {
        let g = builtin_graph("gamma3").unwrap();
        let phi = parse_formula("a |> a", &g).unwrap();
        let capped = SearchBounds { max_games: 5000, ..systematic(2) };
        let out = find_counterexample(&g, &phi, &capped).unwrap();
        assert_eq!(out, SearchOutcome::NoneWithinBounds { examined: 5000, skipped: 0, exhaustive: false });
        let random = SearchBounds { sample_count: 200, ..Default::default() };
        let out = find_counterexample(&g, &phi, &random).unwrap();
        assert_eq!(out, SearchOutcome::NoneWithinBounds { examined: 200, skipped: 0, exhaustive: false });
    }

    #[test]
    fn exhaustive_when_the_space_is_covered() {
        let g = DependencyGraph::from_names(&["a", "b"], &[]).unwrap();
        let phi = parse_formula("a |> a", &g).unwrap();
        let out = find_counterexample(&g, &phi, &systematic(2)).unwrap();
        // Count vectors (1,1), (1,2), (2,1), (2,2): 4 + 8 + 8 + 16 games.
        assert_eq!(out, SearchOutcome::NoneWithinBounds { examined: 36, skipped: 0, exhaustive: true });
    }

    #[test]
    fn over_cap_games_are_skipped() {
        let g = DependencyGraph::from_names(&["a", "b"], &[]).unwrap();
        let phi = parse_formula("a |> a", &g).unwrap();
        let bounds = SearchBounds { max_profiles: 1, ..systematic(2) };
        let out = find_counterexample(&g, &phi, &bounds).unwrap();
        assert_eq!(out, SearchOutcome::NoneWithinBounds { examined: 4, skipped: 3, exhaustive: false });
    }

    #[test]
    fn foreign_players_are_rejected() {
        let g = builtin_graph("gamma3").unwrap();
        let phi = Formula::atom(crate::graph::PlayerSet::from_bits(1 << 5), crate::graph::PlayerSet::EMPTY);
        assert!(find_counterexample(&g, &phi, &SearchBounds::default()).is_err());
    }
}
