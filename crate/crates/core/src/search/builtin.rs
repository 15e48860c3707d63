//! Named example graphs and games.

use crate::error::{Error, Result};
use crate::game::Game;
use crate::graph::DependencyGraph;
use crate::payoff::Payoff;

pub const BUILTIN_GRAPHS: &[&str] = &["gamma1", "gamma2", "gamma3", "gamma4", "gamma5"];

pub const BUILTIN_GAMES: &[&str] = &[
    "coordination",
    "table2",
    "parity",
    "consensus",
    "gamma1_mean_mod(p)",
    "gamma2_rps",
];

/// Largest modulus accepted by `gamma1_mean_mod`.
pub const MAX_MODULUS: u64 = 31;

/// The example graphs:
///
/// * `gamma1`: path a–b–c–d
/// * `gamma2`: complete graph on a, b, c, d without the edge a–d
/// * `gamma3`: path a–b–c
/// * `gamma4`: a–b, a–c, b–d, c–d, d–e
/// * `gamma5`: triangle d–e–f with pendant edges a–d, b–e, c–f
pub fn builtin_graph(name: &str) -> Result<DependencyGraph> {
    let (players, edges): (&[&str], &[(&str, &str)]) = match name {
        "gamma1" => (&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]),
        "gamma2" => (
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d")],
        ),
        "gamma3" => (&["a", "b", "c"], &[("a", "b"), ("b", "c")]),
        "gamma4" => (
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("d", "e")],
        ),
        "gamma5" => (
            &["a", "b", "c", "d", "e", "f"],
            &[("a", "d"), ("b", "e"), ("c", "f"), ("d", "e"), ("d", "f"), ("e", "f")],
        ),
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    };
    DependencyGraph::from_names(players, edges)
}

/// The example games. `gamma1_mean_mod(p)` takes an odd prime `p` up to
/// [`MAX_MODULUS`].
pub fn builtin_game(name: &str) -> Result<Game> {
    if let Some(arg) = name
        .strip_prefix("gamma1_mean_mod(")
        .and_then(|rest| rest.strip_suffix(')'))
    {
        let p: u64 = arg
            .trim()
            .parse()
            .map_err(|_| Error::UnknownBuiltin(name.to_string()))?;
        return gamma1_mean_mod(p);
    }
    match name {
        "coordination" => coordination(),
        "table2" => table2(),
        "parity" => triangle(|s| (s[0] + s[1] + s[2]) % 2 == 0),
        "consensus" => triangle(|s| s[0] == s[1] && s[1] == s[2]),
        "gamma2_rps" => gamma2_rps(),
        _ => Err(Error::UnknownBuiltin(name.to_string())),
    }
}

/// Fills `v`'s whole table from a rule over the local key.
fn fill(game: &mut Game, v: usize, rule: impl Fn(&[usize]) -> bool) -> Result<()> {
    for key in game.local_keys(v) {
        let payoff = if rule(&key) { Payoff::ONE } else { Payoff::ZERO };
        game.set_payoff(v, key, payoff)?;
    }
    Ok(())
}

fn coordination() -> Result<Game> {
    let g = DependencyGraph::from_names(&["a", "b"], &[("a", "b")])?;
    let mut game = Game::with_labels(g, &[&["a1", "a2"], &["b1", "b2"]])?;
    for v in 0..2 {
        fill(&mut game, v, |k| k[0] == k[1])?;
    }
    Ok(game)
}

/// Pays both players 1 at (a1,b1), (a2,b2) and (a3,b1).
fn table2() -> Result<Game> {
    let g = DependencyGraph::from_names(&["a", "b"], &[("a", "b")])?;
    let mut game = Game::with_labels(g, &[&["a1", "a2", "a3"], &["b1", "b2"]])?;
    for v in 0..2 {
        fill(&mut game, v, |k| k[1] == k[0] % 2)?;
    }
    Ok(game)
}

fn triangle(reward: impl Fn(&[usize]) -> bool + Copy) -> Result<Game> {
    let g = DependencyGraph::from_names(&["a", "b", "c"], &[("a", "b"), ("a", "c"), ("b", "c")])?;
    let mut game = Game::with_labels(g, &[&["0", "1"], &["0", "1"], &["0", "1"]])?;
    for v in 0..3 {
        fill(&mut game, v, reward)?;
    }
    Ok(game)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Path a–b–c–d over residues mod `p`. `b` is paid when `2b = a + c`
/// and `c` when `2c = b + d`; `a` and `d` are always paid 0.
pub fn gamma1_mean_mod(p: u64) -> Result<Game> {
    if p == 2 || !is_prime(p) || p > MAX_MODULUS {
        return Err(Error::NotOddPrime(p));
    }
    let g = builtin_graph("gamma1")?;
    let labels: Vec<String> = (0..p).map(|i| i.to_string()).collect();
    let mut game = Game::new(g, vec![labels; 4])?;
    let p = p as usize;
    // Keys of b and c are (left, self, right).
    for v in [1, 2] {
        fill(&mut game, v, |k| (2 * k[1]) % p == (k[0] + k[2]) % p)?;
    }
    Ok(game)
}

/// Rock-paper-scissors between `b` and `c`, played only when `a` and `d`
/// differ; the winner gets 1. `a` and `d` are always paid 0.
fn gamma2_rps() -> Result<Game> {
    let g = builtin_graph("gamma2")?;
    let rps: &[&str] = &["r", "p", "s"];
    let mut game = Game::with_labels(g, &[rps, rps, rps, rps])?;
    let beats = |x: usize, y: usize| (x + 3 - y) % 3 == 1;
    // b and c both see (a, b, c, d).
    fill(&mut game, 1, |k| k[0] != k[3] && beats(k[1], k[2]))?;
    fill(&mut game, 2, |k| k[0] != k[3] && beats(k[2], k[1]))?;
    Ok(game)
}
