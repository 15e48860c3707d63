//! Functional dependence between players' strategies in the pure Nash
//! equilibria of finite games over a dependency graph.
//!
//! The crate covers the whole pipeline: the data model ([`graph`],
//! [`game`], [`formula`]), text formats ([`parser`]), equilibrium
//! enumeration ([`equilibrium`]), formula evaluation ([`semantics`]), a
//! decision procedure with checkable derivations for the dependence
//! calculus ([`prover`]) and game search ([`search`]).

pub mod equilibrium;
pub mod error;
pub mod formula;
pub mod game;
pub mod graph;
pub mod parser;
pub mod payoff;
pub mod prover;
pub mod search;
pub mod semantics;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use formula::Formula;
pub use game::{agrees_on, splice_profiles, Game, StrategyProfile};
pub use graph::{Cut, DependencyGraph, PlayerId, PlayerSet};
pub use payoff::Payoff;
