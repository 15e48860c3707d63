//! Formula grammar:
//!
//! ```text
//! formula := imp
//! imp     := unary ('->' imp)?
//! unary   := '!' unary | primary
//! primary := 'false' | '(' formula ')' | atom
//! atom    := set '|>' set
//! set     := '{' idlist? '}' | idlist
//! idlist  := id (',' id)*
//! ```
//!
//! `!φ` abbreviates `φ -> false`.

use crate::error::{ParseError, ParseErrorKind};
use crate::formula::Formula;
use crate::graph::{is_identifier, DependencyGraph, PlayerSet};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Determines,
    Arrow,
    Bang,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Determines => "`|>`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Bang => "`!`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let (mut end_line, mut end_col) = (1, 1);
    for (li, raw) in text.split('\n').enumerate() {
        let line = li + 1;
        let body = raw.split('#').next().unwrap_or("");
        let bytes = body.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let column = i + 1;
            let c = bytes[i];
            let single = match c {
                b'{' => Some(Tok::LBrace),
                b'}' => Some(Tok::RBrace),
                b'(' => Some(Tok::LParen),
                b')' => Some(Tok::RParen),
                b',' => Some(Tok::Comma),
                b'!' => Some(Tok::Bang),
                _ => None,
            };
            if let Some(tok) = single {
                out.push(Spanned { tok, line, column });
                i += 1;
            } else if c.is_ascii_whitespace() {
                i += 1;
            } else if bytes[i..].starts_with(b"|>") {
                out.push(Spanned { tok: Tok::Determines, line, column });
                i += 2;
            } else if bytes[i..].starts_with(b"->") {
                out.push(Spanned { tok: Tok::Arrow, line, column });
                i += 2;
            } else if c.is_ascii_alphanumeric() || c == b'_' {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &body[start..i];
                if !is_identifier(word) {
                    return Err(ParseError::new(
                        ParseErrorKind::Syntax,
                        line,
                        column,
                        format!("invalid identifier `{word}`"),
                    ));
                }
                out.push(Spanned { tok: Tok::Ident(word.to_string()), line, column });
            } else {
                let ch = body[i..].chars().next().unwrap_or('?');
                return Err(ParseError::new(
                    ParseErrorKind::Syntax,
                    line,
                    column,
                    format!("unexpected character `{ch}`"),
                ));
            }
        }
        end_line = line;
        end_col = body.len() + 1;
    }
    out.push(Spanned { tok: Tok::End, line: end_line, column: end_col });
    Ok(out)
}

struct Parser<'g> {
    toks: Vec<Spanned>,
    pos: usize,
    graph: &'g DependencyGraph,
}

impl<'g> Parser<'g> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let t = self.peek();
        ParseError::new(ParseErrorKind::Syntax, t.line, t.column, message)
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.peek().tok == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(format!(
                "expected {}, found {}",
                tok.describe(),
                self.peek().tok.describe()
            )))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.unary()?;
        if self.peek().tok == Tok::Arrow {
            self.bump();
            let rhs = self.formula()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match &self.peek().tok {
            Tok::Bang => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(w) if w == "false" => {
                self.bump();
                Ok(Formula::Falsum)
            }
            Tok::Ident(_) | Tok::LBrace => self.atom(),
            other => Err(self.error_here(format!("expected a formula, found {}", other.describe()))),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.set()?;
        self.expect(Tok::Determines)?;
        let rhs = self.set()?;
        Ok(Formula::Atom(lhs, rhs))
    }

    fn set(&mut self) -> Result<PlayerSet, ParseError> {
        if self.peek().tok == Tok::LBrace {
            self.bump();
            if self.peek().tok == Tok::RBrace {
                self.bump();
                return Ok(PlayerSet::EMPTY);
            }
            let set = self.idlist()?;
            self.expect(Tok::RBrace)?;
            Ok(set)
        } else {
            self.idlist()
        }
    }

    fn idlist(&mut self) -> Result<PlayerSet, ParseError> {
        let mut set = PlayerSet::EMPTY;
        loop {
            set.insert(self.player()?);
            if self.peek().tok != Tok::Comma {
                return Ok(set);
            }
            self.bump();
        }
    }

    fn player(&mut self) -> Result<usize, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Ident(w) if w != "false" => match self.graph.lookup(w) {
                Some(i) => {
                    self.bump();
                    Ok(i)
                }
                None => Err(ParseError::new(
                    ParseErrorKind::Scope,
                    t.line,
                    t.column,
                    format!("player `{w}` is not in the graph"),
                )),
            },
            other => Err(self.error_here(format!("expected a player, found {}", other.describe()))),
        }
    }
}

/// Parses a formula whose players must belong to `graph`.
pub fn parse_formula(text: &str, graph: &DependencyGraph) -> Result<Formula, ParseError> {
    let mut parser = Parser { toks: lex(text)?, pos: 0, graph };
    let formula = parser.formula()?;
    if parser.peek().tok != Tok::End {
        return Err(parser.error_here(format!("unexpected {}", parser.peek().tok.describe())));
    }
    Ok(formula)
}

/// Parses a single dependence atom `A |> B`.
pub fn parse_atom(text: &str, graph: &DependencyGraph) -> Result<(PlayerSet, PlayerSet), ParseError> {
    match parse_formula(text, graph)? {
        Formula::Atom(l, r) => Ok((l, r)),
        _ => Err(ParseError::new(
            ParseErrorKind::Syntax,
            1,
            1,
            format!("`{}` is not a single atom `A |> B`", text.trim()),
        )),
    }
}

fn is_negation(f: &Formula) -> bool {
    matches!(f, Formula::Implies(_, c) if **c == Formula::Falsum)
}

fn write_formula(f: &Formula, graph: &DependencyGraph, out: &mut String) {
    match f {
        Formula::Falsum => out.push_str("false"),
        Formula::Atom(l, r) => {
            out.push_str(&graph.format_set(*l));
            out.push_str(" |> ");
            out.push_str(&graph.format_set(*r));
        }
        Formula::Implies(a, _) if is_negation(f) => {
            out.push('!');
            write_operand(a, graph, out);
        }
        Formula::Implies(a, b) => {
            write_operand(a, graph, out);
            out.push_str(" -> ");
            write_formula(b, graph, out);
        }
    }
}

/// Writes `f` where a `unary` is expected, parenthesising bare implications.
fn write_operand(f: &Formula, graph: &DependencyGraph, out: &mut String) {
    if matches!(f, Formula::Implies(..)) && !is_negation(f) {
        out.push('(');
        write_formula(f, graph, out);
        out.push(')');
    } else {
        write_formula(f, graph, out);
    }
}

/// Canonical text with minimal parentheses.
pub fn print_formula(f: &Formula, graph: &DependencyGraph) -> String {
    let mut out = String::new();
    write_formula(f, graph, &mut out);
    out
}
