//! Example games, reproducible game generators, counterexample search and
//! soundness fuzzing.
//!
//! Two game streams are available over a fixed graph:
//!
//! * **systematic**: every game within the bounds in a fixed order.
//!   Strategy-count vectors (each count in `1..=max_strategies`) come in
//!   ascending order of their profile count, ties broken lexicographically.
//!   Within one vector, the payoff cells of all tables are listed player by
//!   player, each table in lexicographic key order, and the games run
//!   through every assignment of `payoff_values` to those cells in
//!   lexicographic order (first cell slowest, values in the order given).
//!   Vectors with more than `max_profiles` profiles are left out.
//! * **random**: game `i` is [`random_game`]`(graph, bounds, i)`.
//!
//! Player `v` with `m` strategies uses the labels `v1 .. vm`.

mod builtin;
mod fuzz;
mod random;
mod refute;
mod stream;

pub use builtin::{builtin_game, builtin_graph, gamma1_mean_mod, BUILTIN_GAMES, BUILTIN_GRAPHS, MAX_MODULUS};
pub use fuzz::{fuzz_soundness, FuzzReport, Violation};
pub use random::{random_game, stream_seed};
pub use refute::{find_counterexample, SearchOutcome};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::payoff::Payoff;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Systematic,
    Random,
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "systematic" => Ok(SearchMode::Systematic),
            "random" => Ok(SearchMode::Random),
            _ => Err(Error::InvalidBounds(format!("unknown mode `{s}`"))),
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Systematic => "systematic",
            SearchMode::Random => "random",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    /// Upper bound on each player's strategy count.
    pub max_strategies: usize,
    /// Values payoff cells may take.
    pub payoff_values: Vec<Payoff>,
    /// Games with more profiles than this are not examined.
    pub max_profiles: u128,
    pub seed: u64,
    pub mode: SearchMode,
    /// Number of games drawn in random mode.
    pub sample_count: u64,
    /// Number of games examined at most in systematic mode.
    pub max_games: u64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_strategies: 2,
            payoff_values: vec![Payoff::ZERO, Payoff::ONE],
            max_profiles: 1_000_000,
            seed: 0,
            mode: SearchMode::Random,
            sample_count: 10_000,
            max_games: 1_000_000,
        }
    }
}

impl SearchBounds {
    pub fn validate(&self) -> Result<()> {
        if self.max_strategies == 0 {
            return Err(Error::InvalidBounds("max_strategies must be positive".into()));
        }
        if self.payoff_values.is_empty() {
            return Err(Error::InvalidBounds("no payoff values".into()));
        }
        for (i, v) in self.payoff_values.iter().enumerate() {
            if self.payoff_values[..i].contains(v) {
                return Err(Error::InvalidBounds(format!("payoff value {v} listed twice")));
            }
        }
        if self.sample_count == 0 {
            return Err(Error::InvalidBounds("sample_count must be positive".into()));
        }
        Ok(())
    }

    /// Games in the stream selected by `mode`, before any cap.
    pub(crate) fn budget(&self) -> u128 {
        match self.mode {
            SearchMode::Systematic => self.max_games as u128,
            SearchMode::Random => self.sample_count as u128,
        }
    }
}

/// Parses a comma-separated payoff list such as `0,1,1/2`.
pub fn parse_payoff_values(text: &str) -> Result<Vec<Payoff>> {
    text.split(',').map(|v| v.trim().parse()).collect()
}
