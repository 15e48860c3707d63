//! Derivation objects and their one-step-per-line text form.
//!
//! ```text
//! <idx>. <atom> [<Rule> <args>]
//!
//! [Hypothesis]
//! [Reflexivity]
//! [Augmentation <p> C={..}]
//! [Transitivity <p1> <p2>]
//! [Contiguity <p> cut={U}|{W} A={A}]
//! [LeftMonotonicity <p> add={..}]
//! ```
//!
//! Steps are numbered from 1 in order and premises name earlier steps.
//! `<atom>` uses the formula syntax (`b,c |> d`, `{} |> a`); sets inside
//! brackets are always braced and comma-joined without spaces, in vertex
//! declaration order. The `B` of a contiguity split is the premise's left
//! side minus `A`.

use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind};
use crate::graph::{Cut, DependencyGraph, PlayerSet};
use crate::parser::parse_atom;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    Hypothesis,
    /// `A ▷ B` with `B ⊆ A`.
    Reflexivity,
    /// From `A ▷ B` infer `A ∪ C ▷ B ∪ C`.
    Augmentation { premise: usize, added: PlayerSet },
    /// From `A ▷ B` and `B ▷ C` infer `A ▷ C`.
    Transitivity { first: usize, second: usize },
    /// From `A ∪ B ▷ C` infer `border(U) ∪ border(W) ∪ B ▷ C`, where
    /// `A ⊆ U`, `C ⊆ W` and `B` is the premise's left side minus `A`.
    Contiguity { premise: usize, cut: Cut, a: PlayerSet },
    /// From `A ▷ C` infer `A ∪ D ▷ C`.
    LeftMonotonicity { premise: usize, added: PlayerSet },
}

impl Justification {
    pub fn rule_name(&self) -> &'static str {
        match self {
            Justification::Hypothesis => "Hypothesis",
            Justification::Reflexivity => "Reflexivity",
            Justification::Augmentation { .. } => "Augmentation",
            Justification::Transitivity { .. } => "Transitivity",
            Justification::Contiguity { .. } => "Contiguity",
            Justification::LeftMonotonicity { .. } => "LeftMonotonicity",
        }
    }

    /// Premise step indices (0-based).
    pub fn premises(&self) -> Vec<usize> {
        match *self {
            Justification::Hypothesis | Justification::Reflexivity => vec![],
            Justification::Augmentation { premise, .. }
            | Justification::Contiguity { premise, .. }
            | Justification::LeftMonotonicity { premise, .. } => vec![premise],
            Justification::Transitivity { first, second } => vec![first, second],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub lhs: PlayerSet,
    pub rhs: PlayerSet,
    pub justification: Justification,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Derivation {
    steps: Vec<Step>,
}

impl Derivation {
    pub fn new(steps: Vec<Step>) -> Self {
        Derivation { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The atom proved by the last step.
    pub fn conclusion(&self) -> Option<(PlayerSet, PlayerSet)> {
        self.steps.last().map(|s| (s.lhs, s.rhs))
    }

    pub fn count(&self, rule: &str) -> usize {
        self.steps
            .iter()
            .filter(|s| s.justification.rule_name() == rule)
            .count()
    }

    pub(crate) fn push(&mut self, lhs: PlayerSet, rhs: PlayerSet, justification: Justification) -> usize {
        self.steps.push(Step { lhs, rhs, justification });
        self.steps.len() - 1
    }

    #[cfg(test)]
    pub(crate) fn steps_mut(&mut self) -> &mut Vec<Step> {
        &mut self.steps
    }

    pub fn to_text(&self, graph: &DependencyGraph) -> String {
        let mut out = String::new();
        for (i, step) in self.steps.iter().enumerate() {
            let _ = write!(
                out,
                "{}. {} |> {} [{}",
                i + 1,
                graph.format_set(step.lhs),
                graph.format_set(step.rhs),
                step.justification.rule_name()
            );
            match step.justification {
                Justification::Hypothesis | Justification::Reflexivity => {}
                Justification::Augmentation { premise, added } => {
                    let _ = write!(out, " {} C={}", premise + 1, graph.format_braced(added));
                }
                Justification::Transitivity { first, second } => {
                    let _ = write!(out, " {} {}", first + 1, second + 1);
                }
                Justification::Contiguity { premise, cut, a } => {
                    let _ = write!(
                        out,
                        " {} cut={}|{} A={}",
                        premise + 1,
                        graph.format_braced(cut.left()),
                        graph.format_braced(cut.right()),
                        graph.format_braced(a)
                    );
                }
                Justification::LeftMonotonicity { premise, added } => {
                    let _ = write!(out, " {} add={}", premise + 1, graph.format_braced(added));
                }
            }
            out.push_str("]\n");
        }
        out
    }

    /// Reads the text form. Structural rule side conditions are left to
    /// the checker; only syntax, scope and cut shape are validated here.
    pub fn parse(text: &str, graph: &DependencyGraph) -> Result<Derivation, ParseError> {
        let mut steps = Vec::new();
        for (li, raw) in text.split('\n').enumerate() {
            let line = li + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            steps.push(parse_step(body, line, steps.len() + 1, graph)?);
        }
        Ok(Derivation { steps })
    }
}

fn parse_step(body: &str, line: usize, expected: usize, graph: &DependencyGraph) -> Result<Step, ParseError> {
    let err = |m: String| ParseError::new(ParseErrorKind::Syntax, line, 1, m);
    let (index, rest) = body
        .split_once(". ")
        .ok_or_else(|| err("expected `<index>. <atom> [<rule> ...]`".into()))?;
    let index: usize = index
        .trim()
        .parse()
        .map_err(|_| err(format!("invalid step index `{index}`")))?;
    if index != expected {
        return Err(err(format!("step numbered {index}, expected {expected}")));
    }
    let open = rest.find('[').ok_or_else(|| err("missing `[rule]`".into()))?;
    let inner = rest[open + 1..]
        .strip_suffix(']')
        .ok_or_else(|| err("rule must end the line with `]`".into()))?;
    let (lhs, rhs) = parse_atom(&rest[..open], graph).map_err(|e| ParseError { line, ..e })?;

    let words: Vec<&str> = inner.split_whitespace().collect();
    let rule = *words.first().ok_or_else(|| err("empty rule".into()))?;
    let premise = |i: usize| -> Result<usize, ParseError> {
        let word = words.get(i).ok_or_else(|| err(format!("{rule} needs a premise index")))?;
        let p: usize = word
            .parse()
            .map_err(|_| err(format!("invalid premise index `{word}`")))?;
        if p == 0 || p >= expected {
            return Err(err(format!("premise {p} does not name an earlier step")));
        }
        Ok(p - 1)
    };
    let keyed = |i: usize, key: &str| -> Result<PlayerSet, ParseError> {
        let word = words.get(i).ok_or_else(|| err(format!("{rule} needs `{key}=...`")))?;
        let value = word
            .strip_prefix(key)
            .and_then(|w| w.strip_prefix('='))
            .ok_or_else(|| err(format!("expected `{key}=...`, found `{word}`")))?;
        parse_braced(value, graph).map_err(|m| err(m))
    };
    let arity = |n: usize| -> Result<(), ParseError> {
        if words.len() == n {
            Ok(())
        } else {
            Err(err(format!("{rule} takes {} argument(s)", n - 1)))
        }
    };

    let justification = match rule {
        "Hypothesis" => {
            arity(1)?;
            Justification::Hypothesis
        }
        "Reflexivity" => {
            arity(1)?;
            Justification::Reflexivity
        }
        "Augmentation" => {
            arity(3)?;
            Justification::Augmentation { premise: premise(1)?, added: keyed(2, "C")? }
        }
        "Transitivity" => {
            arity(3)?;
            Justification::Transitivity { first: premise(1)?, second: premise(2)? }
        }
        "LeftMonotonicity" => {
            arity(3)?;
            Justification::LeftMonotonicity { premise: premise(1)?, added: keyed(2, "add")? }
        }
        "Contiguity" => {
            arity(4)?;
            let p = premise(1)?;
            let cut_word = words[2]
                .strip_prefix("cut=")
                .ok_or_else(|| err(format!("expected `cut={{U}}|{{W}}`, found `{}`", words[2])))?;
            let (u, w) = cut_word
                .split_once('|')
                .ok_or_else(|| err("cut must be written `{U}|{W}`".into()))?;
            let u = parse_braced(u, graph).map_err(|m| err(m))?;
            let w = parse_braced(w, graph).map_err(|m| err(m))?;
            let cut = Cut::new(graph, u, w).map_err(|e| err(e.to_string()))?;
            Justification::Contiguity { premise: p, cut, a: keyed(3, "A")? }
        }
        other => return Err(err(format!("unknown rule `{other}`"))),
    };
    Ok(Step { lhs, rhs, justification })
}

fn parse_braced(text: &str, graph: &DependencyGraph) -> Result<PlayerSet, String> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| format!("expected a braced set, found `{text}`"))?;
    if inner.is_empty() {
        return Ok(PlayerSet::EMPTY);
    }
    inner
        .split(',')
        .map(|name| {
            graph
                .lookup(name)
                .ok_or_else(|| format!("player `{name}` is not in the graph"))
        })
        .collect()
}
