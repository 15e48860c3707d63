//! Line-oriented graph and game documents.
//!
//! ```text
//! players <id>+
//! edge <id> <id>
//! strategies <player> <label>+                     (games only)
//! payoff <player> <p1>=<label> … <pk>=<label> <q>  (games only)
//! ```
//!
//! `#` starts a comment; blank lines are ignored. The `players` line comes
//! first. In games, `{p1 … pk}` must be exactly `Adj⁺(player)` and `<q>` is
//! `int` or `int/posint`.

use crate::error::{Error, ParseError, ParseErrorKind};
use crate::game::{is_strategy_label, Game};
use crate::graph::{DependencyGraph, PlayerId, PlayerSet};
use crate::payoff::Payoff;

struct Line<'a> {
    number: usize,
    words: Vec<&'a str>,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.split('\n').enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_ascii_whitespace().collect();
        (!words.is_empty()).then_some(Line { number: i + 1, words })
    })
}

fn graph_error(line: usize, err: Error) -> ParseError {
    let message = match err {
        Error::InvalidGraph(m) | Error::InvalidGame(m) => m,
        other => other.to_string(),
    };
    ParseError::syntax(line, message)
}

/// Reads the `players` and `edge` lines; any other directive is handed to
/// `other` or rejected.
fn read_graph<'a>(
    text: &'a str,
    mut other: impl FnMut(Line<'a>) -> Result<(), ParseError>,
) -> Result<DependencyGraph, ParseError> {
    let mut graph: Option<DependencyGraph> = None;
    for line in lines(text) {
        let n = line.number;
        match line.words[0] {
            "players" => {
                if graph.is_some() {
                    return Err(ParseError::syntax(n, "duplicate `players` line"));
                }
                if line.words.len() < 2 {
                    return Err(ParseError::syntax(n, "`players` needs at least one player"));
                }
                let ids = line.words[1..]
                    .iter()
                    .map(|w| PlayerId::new(*w))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| graph_error(n, e))?;
                graph = Some(DependencyGraph::new(ids).map_err(|e| graph_error(n, e))?);
            }
            _ if graph.is_none() => {
                return Err(ParseError::syntax(n, "missing `players` line before first directive"));
            }
            "edge" => {
                let g = graph.as_mut().expect("checked above");
                if line.words.len() != 3 {
                    return Err(ParseError::syntax(n, "`edge` takes exactly two players"));
                }
                let ends = [line.words[1], line.words[2]].map(|w| {
                    g.lookup(w)
                        .ok_or_else(|| ParseError::syntax(n, format!("undeclared player `{w}`")))
                });
                let [u, w] = ends;
                let (u, w) = (u?, w?);
                if u == w {
                    return Err(ParseError::syntax(n, format!("loop edge at `{}`", line.words[1])));
                }
                g.add_edge(u, w).map_err(|e| graph_error(n, e))?;
            }
            _ => other(line)?,
        }
    }
    graph.ok_or_else(|| ParseError::syntax(1, "missing `players` line"))
}

pub fn parse_graph(text: &str) -> Result<DependencyGraph, ParseError> {
    read_graph(text, |line| {
        Err(ParseError::syntax(
            line.number,
            format!("unexpected `{}` in a graph document", line.words[0]),
        ))
    })
}

pub fn parse_game(text: &str) -> Result<Game, ParseError> {
    let mut strategy_lines = Vec::new();
    let mut payoff_lines = Vec::new();
    let graph = read_graph(text, |line| {
        match line.words[0] {
            "strategies" => strategy_lines.push(line),
            "payoff" => payoff_lines.push(line),
            other => {
                return Err(ParseError::syntax(line.number, format!("unknown directive `{other}`")));
            }
        }
        Ok(())
    })?;

    let mut strategies: Vec<Option<Vec<String>>> = vec![None; graph.len()];
    for line in &strategy_lines {
        let n = line.number;
        if line.words.len() < 3 {
            return Err(ParseError::syntax(n, "`strategies` needs a player and at least one label"));
        }
        let v = graph
            .lookup(line.words[1])
            .ok_or_else(|| ParseError::syntax(n, format!("undeclared player `{}`", line.words[1])))?;
        if strategies[v].is_some() {
            return Err(ParseError::syntax(n, format!("duplicate strategies for `{}`", line.words[1])));
        }
        let labels = &line.words[2..];
        for (i, label) in labels.iter().enumerate() {
            if !is_strategy_label(label) {
                return Err(ParseError::syntax(n, format!("invalid strategy label `{label}`")));
            }
            if labels[..i].contains(label) {
                return Err(ParseError::syntax(n, format!("duplicate strategy `{label}`")));
            }
        }
        strategies[v] = Some(labels.iter().map(|s| s.to_string()).collect());
    }
    let first_line = strategy_lines.first().map_or(1, |l| l.number);
    let strategies = strategies
        .into_iter()
        .enumerate()
        .map(|(v, s)| {
            s.ok_or_else(|| ParseError::syntax(first_line, format!("player `{}` has no strategies", graph.name(v))))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut game = Game::new(graph, strategies).map_err(|e| graph_error(first_line, e))?;

    for line in &payoff_lines {
        read_payoff(&mut game, line)?;
    }
    Ok(game)
}

fn read_payoff(game: &mut Game, line: &Line<'_>) -> Result<(), ParseError> {
    let n = line.number;
    if line.words.len() < 3 {
        return Err(ParseError::syntax(n, "`payoff` needs a player, an assignment and a value"));
    }
    let graph = game.graph();
    let player = line.words[1];
    let v = graph
        .lookup(player)
        .ok_or_else(|| ParseError::syntax(n, format!("undeclared player `{player}`")))?;
    let value_word = line.words[line.words.len() - 1];
    let value: Payoff = value_word
        .parse()
        .map_err(|_| ParseError::syntax(n, format!("invalid payoff value `{value_word}`")))?;

    let mut assigned = PlayerSet::EMPTY;
    let mut choice = vec![0usize; graph.len()];
    for word in &line.words[2..line.words.len() - 1] {
        let (p, label) = word
            .split_once('=')
            .ok_or_else(|| ParseError::syntax(n, format!("expected `player=strategy`, found `{word}`")))?;
        let w = graph
            .lookup(p)
            .ok_or_else(|| ParseError::syntax(n, format!("undeclared player `{p}`")))?;
        if assigned.contains(w) {
            return Err(ParseError::syntax(n, format!("player `{p}` assigned twice")));
        }
        assigned.insert(w);
        choice[w] = game
            .strategy_index(w, label)
            .ok_or_else(|| ParseError::syntax(n, format!("`{label}` is not a strategy of `{p}`")))?;
    }

    let scope = graph.adj_plus(v);
    if assigned != scope {
        let mut detail = Vec::new();
        let extra = assigned.difference(scope);
        if !extra.is_empty() {
            detail.push(format!("{} not in Adj+({player})", graph.format_braced(extra)));
        }
        let missing = scope.difference(assigned);
        if !missing.is_empty() {
            detail.push(format!("{} missing", graph.format_braced(missing)));
        }
        return Err(ParseError::new(
            ParseErrorKind::Locality,
            n,
            1,
            format!(
                "payoff of `{player}` must be keyed by exactly {}: {}",
                graph.format_braced(scope),
                detail.join(", ")
            ),
        ));
    }
    let key: Vec<usize> = scope.iter().map(|w| choice[w]).collect();
    let previous = game
        .set_payoff(v, key, value)
        .map_err(|e| graph_error(n, e))?;
    if previous.is_some() {
        return Err(ParseError::syntax(n, format!("duplicate payoff entry for `{player}`")));
    }
    Ok(())
}

pub fn print_graph(graph: &DependencyGraph) -> String {
    let mut out = String::new();
    write_graph(graph, &mut out);
    out
}

fn write_graph(graph: &DependencyGraph, out: &mut String) {
    out.push_str("players");
    for v in graph.vertices() {
        out.push(' ');
        out.push_str(v.as_str());
    }
    out.push('\n');
    for (u, w) in graph.edges() {
        out.push_str(&format!("edge {} {}\n", graph.name(u), graph.name(w)));
    }
}

pub fn print_game(game: &Game) -> String {
    let graph = game.graph();
    let mut out = String::new();
    write_graph(graph, &mut out);
    for v in 0..graph.len() {
        out.push_str("strategies ");
        out.push_str(graph.name(v));
        for label in game.strategies(v) {
            out.push(' ');
            out.push_str(label);
        }
        out.push('\n');
    }
    for v in 0..graph.len() {
        let table = game.table(v);
        for (key, value) in table.entries() {
            out.push_str("payoff ");
            out.push_str(graph.name(v));
            for (w, &s) in table.scope().iter().zip(key) {
                out.push_str(&format!(" {}={}", graph.name(w), game.strategies(w)[s]));
            }
            out.push_str(&format!(" {value}\n"));
        }
    }
    out
}
