//! Empirical soundness check of the prover against sampled games.

use std::fmt;

use crate::equilibrium::enumerate_equilibria_capped;
use crate::error::Result;
use crate::game::Game;
use crate::graph::{DependencyGraph, PlayerSet};
use crate::prover::{saturate, Hypotheses};
use crate::semantics::GameModel;

use super::stream::{scan, Stream};
use super::SearchBounds;

/// A derivable atom that fails in a game satisfying the hypotheses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub index: u128,
    pub game: Game,
    pub lhs: PlayerSet,
    pub rhs: PlayerSet,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FuzzReport {
    pub games_tested: u128,
    pub games_skipped: u128,
    pub games_satisfying: u128,
    /// Atoms `X ▷ cl(X)` evaluated on satisfying games.
    pub atoms_checked: u128,
    pub violations: Vec<Violation>,
}

impl FuzzReport {
    pub fn is_sound(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "games tested: {}", self.games_tested)?;
        writeln!(f, "games skipped: {}", self.games_skipped)?;
        writeln!(f, "games satisfying hypotheses: {}", self.games_satisfying)?;
        writeln!(f, "atoms checked: {}", self.atoms_checked)?;
        writeln!(f, "violations: {}", self.violations.len())
    }
}

enum Sample {
    Skipped,
    Unsatisfying,
    Checked { atoms: u128, failures: Vec<(PlayerSet, PlayerSet)>, game: Game },
}

/// Samples games from the stream selected by `bounds` (at most
/// `sample_count` of them in either mode) and, on every game where all
/// hypotheses hold, checks `X ▷ cl(X)` for every `X`. Since dependence
/// is preserved by shrinking the right side, this covers every derivable
/// atom.
pub fn fuzz_soundness(graph: &DependencyGraph, hyps: &Hypotheses, bounds: &SearchBounds) -> Result<FuzzReport> {
    let table = saturate(graph, hyps)?;
    let stream = Stream::new(graph, bounds)?;
    let limit = stream.len().min(bounds.sample_count as u128);
    // Atoms with nothing beyond reflexivity hold in every game.
    let goals: Vec<(PlayerSet, PlayerSet)> = table.iter().filter(|(x, cl)| x != cl).collect();

    let eval = |i: u128| {
        let game = stream.game(i);
        let Ok(ne) = enumerate_equilibria_capped(&game, bounds.max_profiles) else {
            return Sample::Skipped;
        };
        let model = GameModel::from_parts(game, ne);
        if !hyps.atoms().iter().all(|&(l, r)| model.depends(l, r)) {
            return Sample::Unsatisfying;
        }
        let failures = goals
            .iter()
            .copied()
            .filter(|&(x, cl)| !model.depends(x, cl))
            .collect();
        Sample::Checked { atoms: goals.len() as u128, failures, game: model.into_game() }
    };

    let mut report = FuzzReport::default();
    scan(limit, eval, |index, sample| {
        match sample {
            Sample::Skipped => report.games_skipped += 1,
            Sample::Unsatisfying => report.games_tested += 1,
            Sample::Checked { atoms, failures, game } => {
                report.games_tested += 1;
                report.games_satisfying += 1;
                report.atoms_checked += atoms;
                for (lhs, rhs) in failures {
                    report.violations.push(Violation { index, game: game.clone(), lhs, rhs });
                }
            }
        }
        None::<()>
    });
    Ok(report)
}
