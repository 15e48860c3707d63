//! Pure-strategy Nash equilibria by exhaustive deviation checking.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::game::{Game, StrategyProfile};
use crate::payoff::Payoff;

/// Default cap on the number of profiles [`enumerate_equilibria`] will scan.
pub const DEFAULT_MAX_PROFILES: u128 = 10_000_000;

/// Below this many profiles the scan stays on the calling thread.
const PARALLEL_THRESHOLD: usize = 1 << 15;
const CHUNK: usize = 1 << 12;

/// `u_v(s)`, with missing table entries read as 0.
pub fn payoff_of(game: &Game, v: usize, s: &StrategyProfile) -> Payoff {
    game.payoff_of(v, s)
}

/// True iff no player gains by a unilateral switch (ties do not count as gains).
pub fn is_equilibrium(game: &Game, s: &StrategyProfile) -> bool {
    (0..game.player_count()).all(|v| {
        let current = game.payoff_of(v, s);
        (0..game.strategy_count(v)).all(|x| x == s.get(v) || game.payoff_of(v, &s.deviate(v, x)) <= current)
    })
}

/// Equilibria in canonical profile order, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquilibriumSet {
    profiles: Vec<StrategyProfile>,
}

impl EquilibriumSet {
    pub fn profiles(&self) -> &[StrategyProfile] {
        &self.profiles
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    pub fn contains(&self, s: &StrategyProfile) -> bool {
        self.profiles.binary_search(s).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, StrategyProfile> {
        self.profiles.iter()
    }
}

impl<'a> IntoIterator for &'a EquilibriumSet {
    type Item = &'a StrategyProfile;
    type IntoIter = std::slice::Iter<'a, StrategyProfile>;

    fn into_iter(self) -> Self::IntoIter {
        self.profiles.iter()
    }
}

/// Per-player best-response indicator over local assignments of `Adj⁺(v)`.
struct LocalBest {
    scope: Vec<usize>,
    /// `best[i]` holds iff the assignment with mixed-radix index `i` leaves
    /// `v` no profitable switch.
    best: Vec<bool>,
}

fn compile(game: &Game) -> Vec<LocalBest> {
    (0..game.player_count())
        .map(|v| {
            let table = game.table(v);
            let scope: Vec<usize> = table.scope().iter().collect();
            let radices: Vec<usize> = scope.iter().map(|&w| game.strategy_count(w)).collect();
            let own = scope.iter().position(|&w| w == v).expect("v ∈ Adj⁺(v)");
            let size: usize = radices.iter().product();
            let stride: usize = radices[own + 1..].iter().product();

            let mut values = Vec::with_capacity(size);
            let mut key = vec![0usize; scope.len()];
            for _ in 0..size {
                values.push(table.get(&key));
                advance(&mut key, &radices);
            }
            let own_radix = radices[own];
            let best = (0..size)
                .map(|i| {
                    let x = i / stride % own_radix;
                    let base = i - x * stride;
                    (0..own_radix).all(|y| values[base + y * stride] <= values[i])
                })
                .collect();
            LocalBest { scope, best }
        })
        .collect()
}

/// Odometer step; the last position varies fastest.
fn advance(key: &mut [usize], radices: &[usize]) -> bool {
    for i in (0..key.len()).rev() {
        key[i] += 1;
        if key[i] < radices[i] {
            return true;
        }
        key[i] = 0;
    }
    false
}

fn decode(mut index: usize, radices: &[usize]) -> Vec<usize> {
    let mut out = vec![0; radices.len()];
    for i in (0..radices.len()).rev() {
        out[i] = index % radices[i];
        index /= radices[i];
    }
    out
}

fn holds_everywhere(compiled: &[LocalBest], radices: &[usize], choice: &[usize]) -> bool {
    compiled.iter().all(|local| {
        let index = local
            .scope
            .iter()
            .fold(0usize, |acc, &w| acc * radices[w] + choice[w]);
        local.best[index]
    })
}

/// All pure equilibria, refusing games above [`DEFAULT_MAX_PROFILES`] profiles.
pub fn enumerate_equilibria(game: &Game) -> Result<EquilibriumSet> {
    enumerate_equilibria_capped(game, DEFAULT_MAX_PROFILES)
}

pub fn enumerate_equilibria_capped(game: &Game, max_profiles: u128) -> Result<EquilibriumSet> {
    let count = game.profile_count();
    if count > max_profiles || count > usize::MAX as u128 {
        return Err(Error::TooManyProfiles { count, cap: max_profiles });
    }
    let total = count as usize;
    let radices: Vec<usize> = (0..game.player_count()).map(|v| game.strategy_count(v)).collect();
    let compiled = compile(game);

    let scan = |start: usize, end: usize| -> Vec<StrategyProfile> {
        let mut found = Vec::new();
        let mut choice = decode(start, &radices);
        for _ in start..end {
            if holds_everywhere(&compiled, &radices, &choice) {
                found.push(StrategyProfile::from_raw(choice.clone()));
            }
            advance(&mut choice, &radices);
        }
        found
    };

    let profiles = if total < PARALLEL_THRESHOLD {
        scan(0, total)
    } else {
        let chunks = total.div_ceil(CHUNK);
        (0..chunks)
            .into_par_iter()
            .map(|c| scan(c * CHUNK, ((c + 1) * CHUNK).min(total)))
            .collect::<Vec<_>>()
            .concat()
    };
    Ok(EquilibriumSet { profiles })
}
