//! Finite games over a dependency graph and their strategy profiles.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Cut, DependencyGraph, PlayerSet};
use crate::payoff::Payoff;

/// Strategy labels are opaque tokens of ASCII letters, digits and `_ . + -`.
pub fn is_strategy_label(s: &str) -> bool {
    !s.is_empty()
        && s
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || matches!(b, b'_' | b'.' | b'+' | b'-'))
}

/// Payoffs of one player, keyed by the strategies of its closed
/// neighbourhood. Keys list strategy indices of the scope members in
/// declaration order; absent keys mean payoff 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PayoffTable {
    scope: PlayerSet,
    entries: BTreeMap<Vec<usize>, Payoff>,
}

impl PayoffTable {
    pub fn scope(&self) -> PlayerSet {
        self.scope
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], Payoff)> + '_ {
        self.entries.iter().map(|(k, v)| (k.as_slice(), *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &[usize]) -> Payoff {
        self.entries.get(key).copied().unwrap_or(Payoff::ZERO)
    }
}

/// `G = (V, {S_v}, {u_v})` with each `u_v` stored as a table over `Adj⁺(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    graph: DependencyGraph,
    strategies: Vec<Vec<String>>,
    tables: Vec<PayoffTable>,
}

impl Game {
    /// A game with the given strategy lists (one per player, in vertex
    /// order) and all payoffs zero.
    pub fn new(graph: DependencyGraph, strategies: Vec<Vec<String>>) -> Result<Self> {
        if strategies.len() != graph.len() {
            return Err(Error::InvalidGame(format!(
                "{} strategy lists for {} players",
                strategies.len(),
                graph.len()
            )));
        }
        for (v, labels) in strategies.iter().enumerate() {
            if labels.is_empty() {
                return Err(Error::InvalidGame(format!("player `{}` has no strategies", graph.name(v))));
            }
            for (i, label) in labels.iter().enumerate() {
                if !is_strategy_label(label) {
                    return Err(Error::InvalidGame(format!("invalid strategy label `{label}`")));
                }
                if labels[..i].contains(label) {
                    return Err(Error::InvalidGame(format!(
                        "duplicate strategy `{label}` for player `{}`",
                        graph.name(v)
                    )));
                }
            }
        }
        let tables = (0..graph.len())
            .map(|v| PayoffTable {
                scope: graph.adj_plus(v),
                entries: BTreeMap::new(),
            })
            .collect();
        Ok(Game {
            graph,
            strategies,
            tables,
        })
    }

    /// Convenience constructor used by tests and the built-in library.
    pub fn with_labels(graph: DependencyGraph, strategies: &[&[&str]]) -> Result<Self> {
        let strategies = strategies
            .iter()
            .map(|ls| ls.iter().map(|s| s.to_string()).collect())
            .collect();
        Game::new(graph, strategies)
    }

    pub fn graph(&self) -> &DependencyGraph {
        &self.graph
    }

    pub fn player_count(&self) -> usize {
        self.graph.len()
    }

    pub fn strategies(&self, v: usize) -> &[String] {
        &self.strategies[v]
    }

    pub fn strategy_count(&self, v: usize) -> usize {
        self.strategies[v].len()
    }

    pub fn strategy_index(&self, v: usize, label: &str) -> Option<usize> {
        self.strategies[v].iter().position(|l| l == label)
    }

    pub fn table(&self, v: usize) -> &PayoffTable {
        &self.tables[v]
    }

    /// Number of strategy profiles, saturating at `u128::MAX`.
    pub fn profile_count(&self) -> u128 {
        self.strategies
            .iter()
            .fold(1u128, |acc, s| acc.saturating_mul(s.len() as u128))
    }

    /// Number of cells in `v`'s payoff table.
    pub fn table_size(&self, v: usize) -> u128 {
        self.tables[v]
            .scope
            .iter()
            .fold(1u128, |acc, w| acc.saturating_mul(self.strategies[w].len() as u128))
    }

    /// Every key of `v`'s payoff table in lexicographic order.
    pub fn local_keys(&self, v: usize) -> Vec<Vec<usize>> {
        let radices: Vec<usize> = self.tables[v].scope.iter().map(|w| self.strategies[w].len()).collect();
        let mut keys = Vec::new();
        let mut key = vec![0; radices.len()];
        loop {
            keys.push(key.clone());
            let mut i = radices.len();
            loop {
                if i == 0 {
                    return keys;
                }
                i -= 1;
                key[i] += 1;
                if key[i] < radices[i] {
                    break;
                }
                key[i] = 0;
            }
        }
    }

    /// Sets `u_v` at a local assignment (strategy indices of `Adj⁺(v)` in
    /// declaration order). Returns the entry it replaced, if any.
    pub fn set_payoff(&mut self, v: usize, key: Vec<usize>, payoff: Payoff) -> Result<Option<Payoff>> {
        let scope = self.tables[v].scope;
        if key.len() != scope.len() {
            return Err(Error::InvalidGame(format!(
                "payoff key for `{}` has {} entries, expected {}",
                self.graph.name(v),
                key.len(),
                scope.len()
            )));
        }
        for (w, &s) in scope.iter().zip(&key) {
            if s >= self.strategies[w].len() {
                return Err(Error::InvalidGame(format!(
                    "strategy index {s} out of range for `{}`",
                    self.graph.name(w)
                )));
            }
        }
        Ok(self.tables[v].entries.insert(key, payoff))
    }

    /// Sets `u_v` from `(player, label)` pairs that must cover `Adj⁺(v)` exactly.
    pub fn set_payoff_by_labels(&mut self, player: &str, assignment: &[(&str, &str)], payoff: Payoff) -> Result<()> {
        let v = self.graph.index_of(player)?;
        let scope = self.tables[v].scope;
        let mut key = vec![usize::MAX; self.graph.len()];
        let mut seen = PlayerSet::EMPTY;
        for (p, label) in assignment {
            let w = self.graph.index_of(p)?;
            if seen.contains(w) {
                return Err(Error::InvalidGame(format!("player `{p}` assigned twice")));
            }
            seen.insert(w);
            key[w] = self
                .strategy_index(w, label)
                .ok_or_else(|| Error::InvalidGame(format!("`{label}` is not a strategy of `{p}`")))?;
        }
        if seen != scope {
            return Err(Error::InvalidGame(format!(
                "payoff of `{player}` must be keyed by {}",
                self.graph.format_braced(scope)
            )));
        }
        let key = scope.iter().map(|w| key[w]).collect();
        self.set_payoff(v, key, payoff)?;
        Ok(())
    }

    /// `u_v(s)`: the table entry at the restriction of `s` to `Adj⁺(v)`.
    pub fn payoff_of(&self, v: usize, s: &StrategyProfile) -> Payoff {
        let table = &self.tables[v];
        let key: Vec<usize> = table.scope.iter().map(|w| s.0[w]).collect();
        table.get(&key)
    }

    /// Lists payoff tables that are neither empty nor complete.
    pub fn validate(&self) -> Vec<ValidationWarning> {
        (0..self.player_count())
            .filter_map(|v| {
                let present = self.tables[v].len() as u128;
                let expected = self.table_size(v);
                (present > 0 && present < expected).then(|| ValidationWarning {
                    player: self.graph.name(v).to_string(),
                    present,
                    expected,
                })
            })
            .collect()
    }
}

/// A payoff table with some, but not all, cells given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationWarning {
    pub player: String,
    pub present: u128,
    pub expected: u128,
}

impl fmt::Display for ValidationWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "warning: payoff table of `{}` lists {} of {} entries; missing entries are 0",
            self.player, self.present, self.expected
        )
    }
}

/// One strategy per player, as indices into each player's strategy list.
/// The derived order is the canonical profile order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrategyProfile(Vec<usize>);

impl StrategyProfile {
    pub fn new(game: &Game, choices: Vec<usize>) -> Result<Self> {
        if choices.len() != game.player_count() {
            return Err(Error::InvalidGame(format!(
                "profile has {} entries for {} players",
                choices.len(),
                game.player_count()
            )));
        }
        for (v, &s) in choices.iter().enumerate() {
            if s >= game.strategy_count(v) {
                return Err(Error::InvalidGame(format!(
                    "strategy index {s} out of range for `{}`",
                    game.graph.name(v)
                )));
            }
        }
        Ok(StrategyProfile(choices))
    }

    /// Unchecked; callers guarantee the indices fit the game.
    pub(crate) fn from_raw(choices: Vec<usize>) -> Self {
        StrategyProfile(choices)
    }

    /// Profile from labels in player declaration order.
    pub fn from_labels(game: &Game, labels: &[&str]) -> Result<Self> {
        if labels.len() != game.player_count() {
            return Err(Error::InvalidGame(format!(
                "profile has {} entries for {} players",
                labels.len(),
                game.player_count()
            )));
        }
        let choices = labels
            .iter()
            .enumerate()
            .map(|(v, l)| {
                game.strategy_index(v, l).ok_or_else(|| {
                    Error::InvalidGame(format!("`{l}` is not a strategy of `{}`", game.graph.name(v)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(StrategyProfile(choices))
    }

    pub fn choices(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    /// `s[v ← x]`.
    pub fn deviate(&self, v: usize, x: usize) -> StrategyProfile {
        let mut next = self.0.clone();
        next[v] = x;
        StrategyProfile(next)
    }

    /// `p1=s1 p2=s2 …` in declaration order.
    pub fn display<'a>(&'a self, game: &'a Game) -> impl fmt::Display + 'a {
        ProfileDisplay { profile: self, game }
    }
}

struct ProfileDisplay<'a> {
    profile: &'a StrategyProfile,
    game: &'a Game,
}

impl fmt::Display for ProfileDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, &s) in self.profile.0.iter().enumerate() {
            if v > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}={}", self.game.graph.name(v), self.game.strategies[v][s])?;
        }
        Ok(())
    }
}

/// `s =_X t`: both profiles pick the same strategy for every member of `set`.
pub fn agrees_on(s: &StrategyProfile, t: &StrategyProfile, set: PlayerSet) -> bool {
    set.iter().all(|v| s.0[v] == t.0[v])
}

/// The profile that follows `s` on the cut's left side and `t` on its right.
pub fn splice_profiles(s: &StrategyProfile, t: &StrategyProfile, cut: &Cut) -> StrategyProfile {
    let choices = (0..s.0.len())
        .map(|v| if cut.left().contains(v) { s.0[v] } else { t.0[v] })
        .collect();
    StrategyProfile(choices)
}
