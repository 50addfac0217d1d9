//! Parser for the ASCII formula grammar.
//!
//! ```text
//! formula := iff
//! iff     := imp ("<->" imp)*
//! imp     := or ("->" imp)?
//! or      := and ("|" and)*
//! and     := cond ("&" cond)*
//! cond    := unary ("=>" unary)?
//! unary   := "~" unary | "[]" unary | atom
//! atom    := "false" | "true" | ident | "(" formula ")"
//! ident   := [a-z][a-zA-Z0-9_]*
//! ```
//!
//! `=>` is non-associative: `a => b => c` is a syntax error. Sugar
//! (`true`, `|`, `->`, `<->`) is eliminated during parsing, so the
//! resulting [`Formula`] only uses `false`, variables, `~`, `&`, `[]`
//! and `=>`.

use thiserror::Error;

use super::formula::Formula;
use super::sequent::Sequent;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("syntax error at column {column}: {message}")]
pub struct ParseError {
    /// 1-based byte column of the offending token.
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            column: pos + 1,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    False,
    True,
    Not,
    BoxOp,
    And,
    Or,
    Imp,
    Iff,
    Cond,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::False => "`false`".into(),
            Tok::True => "`true`".into(),
            Tok::Not => "`~`".into(),
            Tok::BoxOp => "`[]`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Imp => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::Cond => "`=>`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'~' => {
                toks.push((Tok::Not, i));
                i += 1;
            }
            b'&' => {
                toks.push((Tok::And, i));
                i += 1;
            }
            b'|' => {
                toks.push((Tok::Or, i));
                i += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            b',' => {
                toks.push((Tok::Comma, i));
                i += 1;
            }
            b'[' => {
                if bytes.get(i + 1) == Some(&b']') {
                    toks.push((Tok::BoxOp, i));
                    i += 2;
                } else {
                    return Err(ParseError::new(i, "expected `]` after `[`"));
                }
            }
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Tok::Imp, i));
                    i += 2;
                } else {
                    return Err(ParseError::new(i, "expected `>` after `-`"));
                }
            }
            b'=' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Tok::Cond, i));
                    i += 2;
                } else {
                    return Err(ParseError::new(i, "expected `>` after `=`"));
                }
            }
            b'<' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    toks.push((Tok::Iff, i));
                    i += 3;
                } else {
                    return Err(ParseError::new(i, "expected `->` after `<`"));
                }
            }
            b'a'..=b'z' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "false" => Tok::False,
                    "true" => Tok::True,
                    _ => Tok::Ident(word.to_string()),
                };
                toks.push((tok, start));
            }
            _ => {
                return Err(ParseError::new(
                    i,
                    format!("unexpected character `{}`", &text[i..i + c.len_utf8().min(4)]),
                ))
            }
        }
    }
    toks.push((Tok::Eof, bytes.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(ParseError::new(
                self.here(),
                format!("expected {}, found {}", want.describe(), self.peek().describe()),
            ))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        self.iff()
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.imp()?;
        while *self.peek() == Tok::Iff {
            self.bump();
            let rhs = self.imp()?;
            acc = Formula::iff(acc, rhs);
        }
        Ok(acc)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Imp {
            self.bump();
            let rhs = self.imp()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.and()?;
            acc = Formula::or(acc, rhs);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.cond()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.cond()?;
            acc = Formula::and(acc, rhs);
        }
        Ok(acc)
    }

    fn cond(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.unary()?;
        if *self.peek() == Tok::Cond {
            self.bump();
            let rhs = self.unary()?;
            if *self.peek() == Tok::Cond {
                return Err(ParseError::new(
                    self.here(),
                    "`=>` is non-associative; parenthesize nested conditionals",
                ));
            }
            Ok(Formula::cond(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Tok::BoxOp => {
                self.bump();
                Ok(Formula::boxed(self.unary()?))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::False => {
                self.bump();
                Ok(Formula::bot())
            }
            Tok::True => {
                self.bump();
                Ok(Formula::top())
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::var(name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => Err(ParseError::new(
                self.here(),
                format!("expected a formula, found {}", other.describe()),
            )),
        }
    }
}

/// Parse a single formula, desugaring `true`/`|`/`->`/`<->`.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let f = p.formula()?;
    p.expect(Tok::Eof)?;
    Ok(f)
}

/// Parse a comma-separated formula list; whitespace-only input is the
/// empty sequent. Duplicates are preserved.
pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    let toks = lex(text)?;
    if toks.len() == 1 {
        return Ok(Sequent::empty());
    }
    let mut p = Parser { toks, pos: 0 };
    let mut formulas = vec![p.formula()?];
    while *p.peek() == Tok::Comma {
        p.bump();
        formulas.push(p.formula()?);
    }
    p.expect(Tok::Eof)?;
    Ok(Sequent::from_formulas(formulas))
}
