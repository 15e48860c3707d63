//! Text formats for graphs, games and formulas.

mod document;
mod formula;

pub use document::{parse_game, parse_graph, print_game, print_graph};
pub use formula::{parse_atom, parse_formula, print_formula};
