//! Seeded random games.
//!
//! Game `i` under seed `s` is drawn from Xoshiro256++ seeded through
//! `seed_from_u64` (SplitMix64 expansion) with `stream_seed(s, i)`, the
//! `(i + 1)`-th output of SplitMix64 started at `s`:
//!
//! ```text
//! z = s + (i + 1) * 0x9E3779B97F4A7C15          (wrapping)
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z ^ (z >> 31)
//! ```
//!
//! A draw below `n` is the high word of the 128-bit product
//! `next_u64() * n`. The generator first draws each player's strategy
//! count in `1..=max_strategies` (players in declaration order), then one
//! value index per payoff cell, tables in player order and keys in
//! lexicographic order. Every cell is set, so tables are complete.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::game::Game;
use crate::graph::DependencyGraph;

use super::stream::blank_game;
use super::SearchBounds;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

pub fn stream_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn below(rng: &mut Xoshiro256PlusPlus, n: usize) -> usize {
    ((rng.next_u64() as u128 * n as u128) >> 64) as usize
}

/// The `index`-th game of the random stream for `bounds.seed`.
///
/// `bounds` must be valid (see [`SearchBounds::validate`]).
pub fn random_game(graph: &DependencyGraph, bounds: &SearchBounds, index: u64) -> Game {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(stream_seed(bounds.seed, index));
    let counts: Vec<usize> = (0..graph.len())
        .map(|_| 1 + below(&mut rng, bounds.max_strategies))
        .collect();
    let mut game = blank_game(graph, &counts);
    let values = &bounds.payoff_values;
    for v in 0..graph.len() {
        for key in game.local_keys(v) {
            let value = values[below(&mut rng, values.len())];
            game.set_payoff(v, key, value).expect("keys come from the table itself");
        }
    }
    game
}
