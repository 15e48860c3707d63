//! Index-addressed game streams shared by the search and the fuzzer.

use crate::error::{Error, Result};
use crate::game::Game;
use crate::graph::DependencyGraph;
use crate::payoff::Payoff;

use super::random::random_game;
use super::{SearchBounds, SearchMode};

/// Systematic mode refuses bounds with more strategy-count vectors than this.
const MAX_COUNT_VECTORS: u128 = 1 << 20;

/// A zero-payoff game where player `v` has `counts[v]` strategies.
pub(crate) fn blank_game(graph: &DependencyGraph, counts: &[usize]) -> Game {
    let strategies = counts
        .iter()
        .enumerate()
        .map(|(v, &m)| (1..=m).map(|i| format!("{}{i}", graph.name(v))).collect())
        .collect();
    Game::new(graph.clone(), strategies).expect("labels built from player names are valid")
}

struct Block {
    template: Game,
    cells: Vec<(usize, Vec<usize>)>,
    offset: u128,
}

pub(crate) struct SystematicSpace {
    blocks: Vec<Block>,
    values: Vec<Payoff>,
    total: u128,
    /// Count vectors left out for exceeding `max_profiles`.
    pub(crate) skipped_vectors: u128,
}

impl SystematicSpace {
    pub(crate) fn new(graph: &DependencyGraph, bounds: &SearchBounds) -> Result<Self> {
        let n = graph.len();
        let k = bounds.max_strategies;
        let vector_count = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if vector_count > MAX_COUNT_VECTORS {
            return Err(Error::InvalidBounds(format!(
                "{k} strategies for {n} players give too many strategy-count vectors"
            )));
        }
        let mut vectors: Vec<(u128, Vec<usize>)> = Vec::new();
        let mut skipped_vectors = 0;
        let mut counts = vec![1usize; n];
        loop {
            let product = counts.iter().map(|&m| m as u128).product::<u128>();
            if product <= bounds.max_profiles {
                vectors.push((product, counts.clone()));
            } else {
                skipped_vectors += 1;
            }
            let Some(i) = (0..n).rev().find(|&i| counts[i] < k) else {
                break;
            };
            counts[i] += 1;
            counts[i + 1..].iter_mut().for_each(|m| *m = 1);
        }
        vectors.sort();

        let base = bounds.payoff_values.len() as u128;
        let mut total: u128 = 0;
        let blocks = vectors
            .into_iter()
            .map(|(_, counts)| {
                let template = blank_game(graph, &counts);
                let cells: Vec<(usize, Vec<usize>)> = (0..n)
                    .flat_map(|v| template.local_keys(v).into_iter().map(move |key| (v, key)))
                    .collect();
                let size = u32::try_from(cells.len())
                    .ok()
                    .and_then(|c| base.checked_pow(c))
                    .unwrap_or(u128::MAX);
                let block = Block { template, cells, offset: total };
                total = total.saturating_add(size);
                block
            })
            .collect();
        Ok(SystematicSpace {
            blocks,
            values: bounds.payoff_values.clone(),
            total,
            skipped_vectors,
        })
    }

    pub(crate) fn len(&self) -> u128 {
        self.total
    }

    pub(crate) fn game(&self, index: u128) -> Game {
        let b = self.blocks.partition_point(|b| b.offset <= index) - 1;
        let block = &self.blocks[b];
        let mut rest = index - block.offset;
        let base = self.values.len() as u128;
        let mut digits = vec![0usize; block.cells.len()];
        for d in digits.iter_mut().rev() {
            *d = (rest % base) as usize;
            rest /= base;
        }
        let mut game = block.template.clone();
        for ((v, key), d) in block.cells.iter().zip(digits) {
            game.set_payoff(*v, key.clone(), self.values[d])
                .expect("cells come from the table itself");
        }
        game
    }
}

/// The games of one search, addressed by position.
pub(crate) enum Stream<'a> {
    Random { graph: &'a DependencyGraph, bounds: &'a SearchBounds },
    Systematic(SystematicSpace),
}

impl<'a> Stream<'a> {
    pub(crate) fn new(graph: &'a DependencyGraph, bounds: &'a SearchBounds) -> Result<Self> {
        bounds.validate()?;
        Ok(match bounds.mode {
            SearchMode::Random => Stream::Random { graph, bounds },
            SearchMode::Systematic => Stream::Systematic(SystematicSpace::new(graph, bounds)?),
        })
    }

    /// Stream length, ignoring the examination budget.
    pub(crate) fn len(&self) -> u128 {
        match self {
            Stream::Random { bounds, .. } => bounds.sample_count as u128,
            Stream::Systematic(space) => space.len(),
        }
    }

    pub(crate) fn game(&self, index: u128) -> Game {
        match self {
            Stream::Random { graph, bounds } => random_game(graph, bounds, index as u64),
            Stream::Systematic(space) => space.game(index),
        }
    }

    pub(crate) fn skipped_vectors(&self) -> u128 {
        match self {
            Stream::Random { .. } => 0,
            Stream::Systematic(space) => space.skipped_vectors,
        }
    }
}

/// Visits positions `0..limit` in order, evaluating them in parallel
/// blocks, until `visit` returns `Some`.
pub(crate) fn scan<T: Send, R>(
    limit: u128,
    eval: impl Fn(u128) -> T + Sync,
    mut visit: impl FnMut(u128, T) -> Option<R>,
) -> Option<R> {
    use rayon::prelude::*;
    const BLOCK: u64 = 1024;
    let mut start: u128 = 0;
    while start < limit {
        let len = (limit - start).min(BLOCK as u128) as u64;
        let results: Vec<T> = (0..len).into_par_iter().map(|j| eval(start + j as u128)).collect();
        for (j, r) in results.into_iter().enumerate() {
            if let Some(out) = visit(start + j as u128, r) {
                return Some(out);
            }
        }
        start += len as u128;
    }
    None
}
