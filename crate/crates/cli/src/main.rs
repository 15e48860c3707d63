//! `fdgame`: equilibria, dependence checks, proofs and counterexample
//! search from the command line.
//!
//! Exit status is 0 for an affirmative answer, 1 for a negative one and 2
//! for usage, parse or resource errors.

use std::fmt::Display;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fdgame_core::equilibrium::enumerate_equilibria;
use fdgame_core::parser::{parse_atom, parse_formula, parse_game, parse_graph, print_formula, print_game, print_graph};
use fdgame_core::prover::{check_derivation, check_proves, derive_tree, Derivation, Hypotheses};
use fdgame_core::search::{
    builtin_game, builtin_graph, find_counterexample, fuzz_soundness, parse_payoff_values, SearchBounds, SearchMode,
    SearchOutcome, BUILTIN_GAMES, BUILTIN_GRAPHS,
};
use fdgame_core::semantics::GameModel;
use fdgame_core::{DependencyGraph, Game, PlayerSet};

#[derive(Parser)]
#[command(name = "fdgame", version, about = "Functional dependence in Nash equilibria of graphical games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the pure Nash equilibria of a game.
    Ne { game: String },
    /// Evaluate a formula on a game.
    Check { game: String, formula: String },
    /// Derive an atom from hypotheses over a graph.
    Prove {
        graph: String,
        goal: String,
        /// A hypothesis atom; repeatable.
        #[arg(long = "assume", value_name = "ATOM")]
        assume: Vec<String>,
    },
    /// Search for a game in which a formula fails.
    Refute {
        graph: String,
        formula: String,
        #[command(flatten)]
        bounds: BoundsArgs,
        /// Games examined at most in systematic mode.
        #[arg(long, default_value_t = 1_000_000)]
        max_games: u64,
    },
    /// Report incomplete payoff tables.
    Validate { game: String },
    /// Check derivable atoms against sampled games satisfying the hypotheses.
    FuzzSoundness {
        graph: String,
        #[arg(long = "assume", value_name = "ATOM")]
        assume: Vec<String>,
        #[command(flatten)]
        bounds: BoundsArgs,
    },
    /// Verify a derivation file. Without `--assume`, the atoms its
    /// `Hypothesis` steps cite are taken as the hypotheses.
    ProveCheck {
        graph: String,
        derivation: String,
        #[arg(long = "assume", value_name = "ATOM")]
        assume: Vec<String>,
        /// Also require the last step to prove this atom.
        #[arg(long, value_name = "ATOM")]
        goal: Option<String>,
    },
    /// Print a built-in graph or game document; `list` names them all.
    Builtin { name: String },
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, default_value_t = 2)]
    max_strategies: usize,
    /// Comma-separated payoff values, e.g. `0,1,1/2`.
    #[arg(long, default_value = "0,1")]
    values: String,
    #[arg(long, default_value = "random", value_parser = ["systematic", "random"])]
    mode: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Games drawn in random mode.
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    /// Games with more strategy profiles are skipped.
    #[arg(long, default_value_t = 1_000_000)]
    max_profiles: u128,
}

impl BoundsArgs {
    fn to_bounds(&self, max_games: u64) -> Result<SearchBounds, Failure> {
        let bounds = SearchBounds {
            max_strategies: self.max_strategies,
            payoff_values: parse_payoff_values(&self.values).map_err(Failure::error)?,
            max_profiles: self.max_profiles,
            seed: self.seed,
            mode: self.mode.parse::<SearchMode>().map_err(Failure::error)?,
            sample_count: self.samples,
            max_games,
        };
        bounds.validate().map_err(Failure::error)?;
        Ok(bounds)
    }
}

/// A run that ends with a non-zero status.
enum Failure {
    /// Negative answer, already reported on stdout.
    Negative,
    /// Usage, parse or resource error.
    Error(String),
}

impl Failure {
    fn error(e: impl Display) -> Self {
        Failure::Error(e.to_string())
    }

    fn in_file(path: &str) -> impl Fn(fdgame_core::ParseError) -> Failure + '_ {
        move |e| Failure::Error(format!("{path}: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Error(format!("{path}: {e}")))
}

fn load_game(path: &str) -> Result<Game, Failure> {
    parse_game(&read(path)?).map_err(Failure::in_file(path))
}

/// Accepts a graph document or a game document, whose graph is used.
fn load_graph(path: &str) -> Result<DependencyGraph, Failure> {
    let text = read(path)?;
    match parse_graph(&text) {
        Ok(graph) => Ok(graph),
        Err(graph_err) => match parse_game(&text) {
            Ok(game) => Ok(game.graph().clone()),
            Err(_) => Err(Failure::in_file(path)(graph_err)),
        },
    }
}

fn load_hypotheses(graph: &DependencyGraph, atoms: &[String]) -> Result<Hypotheses, Failure> {
    let parsed = atoms
        .iter()
        .map(|a| parse_atom(a, graph).map_err(|e| Failure::Error(format!("assumption `{a}`: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Hypotheses::new(graph, parsed).map_err(Failure::error)
}

fn atom_text(graph: &DependencyGraph, (lhs, rhs): (PlayerSet, PlayerSet)) -> String {
    format!("{} |> {}", graph.format_set(lhs), graph.format_set(rhs))
}

fn ne(path: &str) -> Outcome {
    let game = load_game(path)?;
    let equilibria = enumerate_equilibria(&game).map_err(Failure::error)?;
    for s in &equilibria {
        println!("{}", s.display(&game));
    }
    println!("total: {}", equilibria.len());
    Ok(())
}

fn check(path: &str, formula: &str) -> Outcome {
    let game = load_game(path)?;
    let phi = parse_formula(formula, game.graph()).map_err(Failure::error)?;
    let model = GameModel::new(game).map_err(Failure::error)?;
    if model.holds(&phi) {
        println!("holds");
        Ok(())
    } else {
        println!("fails");
        Err(Failure::Negative)
    }
}

fn prove(path: &str, goal: &str, assume: &[String]) -> Outcome {
    let graph = load_graph(path)?;
    let hyps = load_hypotheses(&graph, assume)?;
    let (lhs, rhs) = parse_atom(goal, &graph).map_err(Failure::error)?;
    match derive_tree(&graph, &hyps, lhs, rhs).map_err(Failure::error)? {
        Some(derivation) => {
            print!("{}", derivation.to_text(&graph));
            Ok(())
        }
        None => {
            println!("not derivable");
            Err(Failure::Negative)
        }
    }
}

fn refute(path: &str, formula: &str, bounds: &SearchBounds) -> Outcome {
    let graph = load_graph(path)?;
    let phi = parse_formula(formula, &graph).map_err(Failure::error)?;
    match find_counterexample(&graph, &phi, bounds).map_err(Failure::error)? {
        SearchOutcome::Found { game, index } => {
            println!("# refutes: {}", print_formula(&phi, &graph));
            match bounds.mode {
                SearchMode::Random => println!("# random game {index}, seed {}", bounds.seed),
                SearchMode::Systematic => println!("# systematic game {index}"),
            }
            print!("{}", print_game(&game));
            Ok(())
        }
        SearchOutcome::NoneWithinBounds { examined, skipped, exhaustive } => {
            println!("no counterexample within bounds ({examined} games examined)");
            if skipped > 0 {
                eprintln!("note: {skipped} skipped for exceeding the profile cap");
            }
            if bounds.mode == SearchMode::Systematic && !exhaustive {
                eprintln!("note: the search space was not covered completely");
            }
            Err(Failure::Negative)
        }
    }
}

fn validate(path: &str) -> Outcome {
    let game = load_game(path)?;
    let warnings = game.validate();
    for w in &warnings {
        println!("{w}");
    }
    println!("valid ({} warning(s))", warnings.len());
    Ok(())
}

fn fuzz(path: &str, assume: &[String], bounds: &SearchBounds) -> Outcome {
    let graph = load_graph(path)?;
    let hyps = load_hypotheses(&graph, assume)?;
    let report = fuzz_soundness(&graph, &hyps, bounds).map_err(Failure::error)?;
    print!("{report}");
    if report.is_sound() {
        return Ok(());
    }
    for v in &report.violations {
        println!("\n# violation in game {}: {}", v.index, atom_text(&graph, (v.lhs, v.rhs)));
        print!("{}", print_game(&v.game));
    }
    Err(Failure::Negative)
}

fn prove_check(path: &str, derivation_path: &str, assume: &[String], goal: Option<&str>) -> Outcome {
    let graph = load_graph(path)?;
    let derivation = Derivation::parse(&read(derivation_path)?, &graph).map_err(Failure::in_file(derivation_path))?;
    let hyps = if assume.is_empty() {
        let cited = derivation
            .steps()
            .iter()
            .filter(|s| s.justification.rule_name() == "Hypothesis")
            .map(|s| (s.lhs, s.rhs))
            .collect();
        Hypotheses::new(&graph, cited).map_err(Failure::error)?
    } else {
        load_hypotheses(&graph, assume)?
    };
    let verdict = match goal {
        Some(goal) => {
            let (lhs, rhs) = parse_atom(goal, &graph).map_err(Failure::error)?;
            check_proves(&graph, &hyps, &derivation, lhs, rhs)
        }
        None => check_derivation(&graph, &hyps, &derivation),
    };
    match verdict {
        Ok(()) => {
            for &atom in hyps.atoms() {
                println!("hypothesis: {}", atom_text(&graph, atom));
            }
            let conclusion = derivation.conclusion().expect("checked derivations are non-empty");
            println!("valid: {}", atom_text(&graph, conclusion));
            Ok(())
        }
        Err(e) => {
            println!("invalid: {e}");
            Err(Failure::Negative)
        }
    }
}

fn builtin(name: &str) -> Outcome {
    if name == "list" {
        println!("graphs: {}", BUILTIN_GRAPHS.join(" "));
        println!("games: {}", BUILTIN_GAMES.join(" "));
        return Ok(());
    }
    if BUILTIN_GRAPHS.contains(&name) {
        print!("{}", print_graph(&builtin_graph(name).map_err(Failure::error)?));
    } else {
        print!("{}", print_game(&builtin_game(name).map_err(Failure::error)?));
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Ne { game } => ne(&game),
        Command::Check { game, formula } => check(&game, &formula),
        Command::Prove { graph, goal, assume } => prove(&graph, &goal, &assume),
        Command::Refute { graph, formula, bounds, max_games } => refute(&graph, &formula, &bounds.to_bounds(max_games)?),
        Command::Validate { game } => validate(&game),
        Command::FuzzSoundness { graph, assume, bounds } => fuzz(&graph, &assume, &bounds.to_bounds(u64::MAX)?),
        Command::ProveCheck { graph, derivation, assume, goal } => {
            prove_check(&graph, &derivation, &assume, goal.as_deref())
        }
        Command::Builtin { name } => builtin(&name),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Error(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
