//! Reference implementations used as oracles by the integration tests.
//! They follow the definitions directly and share no code paths with the
//! library beyond the data model.

#![allow(dead_code)]

use std::collections::HashMap;

use fdgame_core::game::Game;
use fdgame_core::graph::{DependencyGraph, PlayerSet};
use fdgame_core::prover::Hypotheses;
use fdgame_core::{Formula, Payoff, StrategyProfile};
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

pub struct TestRng(Xoshiro256PlusPlus);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.0.next_u64() % n as u64) as usize
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.0.next_u64() % den < num
    }

    pub fn subset(&mut self, n: usize) -> PlayerSet {
        PlayerSet::from_bits(self.0.next_u64() & ((1u64 << n) - 1))
    }
}

pub const NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

/// Graph on the first `n` letters with each edge present with
/// probability `num/den`.
pub fn random_graph(rng: &mut TestRng, n: usize, num: u64, den: u64) -> DependencyGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.chance(num, den) {
                edges.push((NAMES[i], NAMES[j]));
            }
        }
    }
    DependencyGraph::from_names(&NAMES[..n], &edges).unwrap()
}

/// Graph on the first `n` letters whose edges are the bits of `mask`
/// over the pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> DependencyGraph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((NAMES[i], NAMES[j]));
            }
            bit += 1;
        }
    }
    DependencyGraph::from_names(&NAMES[..n], &edges).unwrap()
}

pub fn set(g: &DependencyGraph, names: &[&str]) -> PlayerSet {
    g.set_of(names).unwrap()
}

// ---------------------------------------------------------------- games

/// Every profile of `game`, first player slowest.
pub fn all_profiles(game: &Game) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for v in 0..game.player_count() {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..game.strategy_count(v)).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Pure equilibria by checking every unilateral deviation.
pub fn brute_equilibria(game: &Game) -> Vec<Vec<usize>> {
    all_profiles(game)
        .into_iter()
        .filter(|s| is_nash(game, s))
        .collect()
}

pub fn is_nash(game: &Game, s: &[usize]) -> bool {
    let profile = StrategyProfile::new(game, s.to_vec()).unwrap();
    (0..game.player_count()).all(|v| {
        let current = game.payoff_of(v, &profile);
        (0..game.strategy_count(v)).all(|x| game.payoff_of(v, &profile.deviate(v, x)) <= current)
    })
}

fn agree(s: &[usize], t: &[usize], set: PlayerSet) -> bool {
    set.iter().all(|v| s[v] == t[v])
}

/// `A ▷ B` by comparing every pair of equilibria.
pub fn pairwise_depends(ne: &[Vec<usize>], lhs: PlayerSet, rhs: PlayerSet) -> bool {
    ne.iter()
        .all(|s| ne.iter().all(|t| !agree(s, t, lhs) || agree(s, t, rhs)))
}

pub fn oracle_holds(ne: &[Vec<usize>], formula: &Formula) -> bool {
    match formula {
        Formula::Falsum => false,
        Formula::Atom(l, r) => pairwise_depends(ne, *l, *r),
        Formula::Implies(p, q) => !oracle_holds(ne, p) || oracle_holds(ne, q),
    }
}

/// All `(A, B)` verdicts of one game, indexed `[A][B]`.
pub fn dependence_table(ne: &[Vec<usize>], n: usize) -> Vec<Vec<bool>> {
    let size = 1usize << n;
    (0..size)
        .map(|a| {
            let a = PlayerSet::from_bits(a as u64);
            // Group by the A-projection; B holds iff each group is constant on B.
            let mut groups: HashMap<Vec<usize>, Vec<&Vec<usize>>> = HashMap::new();
            for s in ne {
                groups.entry(a.iter().map(|v| s[v]).collect()).or_default().push(s);
            }
            (0..size)
                .map(|b| {
                    let b = PlayerSet::from_bits(b as u64);
                    groups.values().all(|g| g.iter().all(|s| agree(s, g[0], b)))
                })
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------- prover

/// Naive saturation over the whole atom space of a graph with at most 4
/// vertices. `derived[A]` is a bit mask over right-hand sides `B`. Each
/// round applies Reflexivity, the hypotheses, Augmentation with every
/// `C`, Transitivity over every middle set, and Contiguity with every
/// cut and every split `A ∪ B` of the premise's left side.
pub fn naive_derivable(graph: &DependencyGraph, hyps: &Hypotheses) -> Vec<u16> {
    let n = graph.len();
    assert!(n <= 4, "the naive oracle handles at most 4 vertices");
    let size = 1usize << n;
    let all = size - 1;
    let bit = |s: usize| 1u16 << s;
    let mut derived = vec![0u16; size];
    for (a, d) in derived.iter_mut().enumerate() {
        for b in 0..size {
            if b & !a == 0 {
                *d |= bit(b);
            }
        }
    }
    for &(l, r) in hyps.atoms() {
        derived[l.bits() as usize] |= bit(r.bits() as usize);
    }
    let border = |u: usize| graph.border(PlayerSet::from_bits(u as u64)).bits() as usize;
    let divider: Vec<usize> = (0..size).map(|u| border(u) | border(all & !u)).collect();

    loop {
        let before = derived.clone();
        for a in 0..size {
            for b in 0..size {
                if derived[a] & bit(b) == 0 {
                    continue;
                }
                for c in 0..size {
                    derived[a | c] |= bit(b | c);
                }
                let through = derived[b];
                derived[a] |= through;
            }
        }
        for lhs in 0..size {
            for c in 0..size {
                if derived[lhs] & bit(c) == 0 {
                    continue;
                }
                for u in 0..size {
                    if c & u != 0 {
                        continue;
                    }
                    // Splits lhs = A ∪ B with A ⊆ U; B may overlap A.
                    for a in 0..size {
                        if a & !(lhs & u) != 0 {
                            continue;
                        }
                        for b in 0..size {
                            if b & !lhs == 0 && (a | b) == lhs {
                                derived[divider[u] | b] |= bit(c);
                            }
                        }
                    }
                }
            }
        }
        if derived == before {
            return derived;
        }
    }
}

// ---------------------------------------------------------------- sparse sets

/// All-pairs distances by Floyd–Warshall; `None` when unreachable.
pub fn distances(graph: &DependencyGraph) -> Vec<Vec<Option<usize>>> {
    let n = graph.len();
    let mut d = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for (u, w) in graph.edges() {
        d[u][w] = Some(1);
        d[w][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(x), Some(y)) = (d[i][k], d[k][j]) {
                    if d[i][j].map_or(true, |z| x + y < z) {
                        d[i][j] = Some(x + y);
                    }
                }
            }
        }
    }
    d
}

pub fn oracle_sparse(dist: &[Vec<Option<usize>>], w: PlayerSet) -> bool {
    let members: Vec<usize> = w.iter().collect();
    members
        .iter()
        .all(|&x| members.iter().all(|&y| x == y || dist[x][y].map_or(true, |d| d >= 3)))
}

/// Sparse sets with no sparse proper superset.
pub fn maximal_sparse_sets(graph: &DependencyGraph) -> Vec<PlayerSet> {
    let n = graph.len();
    let dist = distances(graph);
    (0..1u64 << n)
        .map(PlayerSet::from_bits)
        .filter(|&w| oracle_sparse(&dist, w))
        .filter(|&w| (0..n).all(|v| w.contains(v) || !oracle_sparse(&dist, w.with(v))))
        .collect()
}

// ---------------------------------------------------------------- random structures

const LABELS: [&str; 6] = ["x", "y1", "z.2", "w-3", "v+", "U_"];

/// A game with arbitrary labels and a random subset of payoff entries,
/// including negative and fractional values.
pub fn random_document_game(rng: &mut TestRng, graph: DependencyGraph) -> Game {
    let strategies = (0..graph.len())
        .map(|_| {
            let m = 1 + rng.below(3);
            LABELS[..m].iter().map(|s| s.to_string()).collect()
        })
        .collect();
    let mut game = Game::new(graph, strategies).unwrap();
    for v in 0..game.player_count() {
        let dense = rng.chance(1, 2);
        for key in game.local_keys(v) {
            if dense || rng.chance(1, 3) {
                let num = rng.below(9) as i64 - 4;
                let den = 1 + rng.below(3) as i64;
                game.set_payoff(v, key, Payoff::new(num, den)).unwrap();
            }
        }
    }
    game
}

pub fn random_formula(rng: &mut TestRng, n: usize, depth: usize) -> Formula {
    match if depth == 0 { 0 } else { rng.below(4) } {
        0 | 1 if !rng.chance(1, 8) => Formula::atom(rng.subset(n), rng.subset(n)),
        0 | 1 => Formula::Falsum,
        2 => Formula::not(random_formula(rng, n, depth - 1)),
        _ => Formula::implies(random_formula(rng, n, depth - 1), random_formula(rng, n, depth - 1)),
    }
}
