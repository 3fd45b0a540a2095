//! Product expressions of named classes.
//!
//! Grammar:
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' integer)?
//! atom    := integer ('/' integer)? | name | '(' sum ')'
//! ```
//!
//! A literal `p/q` is a rational scalar. There is no general division.

use std::fmt;

use symcurve_core::class_catalog::{
    e_k_class, hyperelliptic_c1d_class, ramification_divisor_class, small_diagonal_class,
    subordinate_class, LinearSeries,
};
use symcurve_core::ns_ring::{CycleClass, SymPower};
use symcurve_core::{Error, Integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(Rational),
    Name(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: {}", self.position + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(Integer),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((
                pos,
                Tok::Ident(chars[start..i].iter().map(|&(_, c)| c).collect()),
            ));
        } else if "+-*^/()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError {
                position: pos,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                let Ok(e) = u32::try_from(&n) else {
                    return self.err("exponent is too large");
                };
                self.at += 1;
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => self.err("expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(p)) => {
                self.at += 1;
                if !self.eat('/') {
                    return Ok(Expr::Scalar(Rational::from_integer(p)));
                }
                match self.peek().cloned() {
                    Some(Tok::Int(q)) if q != Integer::from(0) => {
                        self.at += 1;
                        Ok(Expr::Scalar(Rational::new(p, q)))
                    }
                    _ => self.err("expected a nonzero integer denominator"),
                }
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                Ok(Expr::Name(name))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(_) => self.err("expected a number, a name or '('"),
            None => self.err("unexpected end of expression"),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        at: 0,
        end: src.len(),
    };
    let e = p.sum()?;
    if p.at != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Names that [`Env::lookup`] understands.
pub const NAMES: [&str; 7] = [
    "theta",
    "x",
    "smalldiag",
    "ramification",
    "c1d",
    "subordinate",
    "ek",
];

/// Evaluation context: the space and the optional series parameters used by
/// `subordinate`.
#[derive(Clone, Copy, Debug)]
pub struct Env {
    pub space: SymPower,
    pub n: Option<i64>,
    pub r: Option<i64>,
}

#[derive(Debug)]
pub enum EvalError {
    UnknownName(String),
    MissingParameter(&'static str),
    Class(Error),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::UnknownName(n) => {
                write!(f, "unknown name {n:?}; known names: {}", NAMES.join(", "))
            }
            EvalError::MissingParameter(p) => write!(f, "`subordinate` needs --{p}"),
            EvalError::Class(e) => e.fmt(f),
        }
    }
}

impl From<Error> for EvalError {
    fn from(e: Error) -> Self {
        EvalError::Class(e)
    }
}

impl Env {
    fn lookup(&self, name: &str) -> Result<CycleClass, EvalError> {
        let (g, d) = (self.space.genus(), self.space.dim());
        Ok(match name {
            "theta" => self.space.theta(),
            "x" => self.space.x(),
            "smalldiag" => small_diagonal_class(g, d)?,
            "ramification" => ramification_divisor_class(g, d)?.into_class(),
            "c1d" => hyperelliptic_c1d_class(g, d)?.into_class(),
            "subordinate" => {
                let n = self.n.ok_or(EvalError::MissingParameter("n"))?;
                let r = self.r.ok_or(EvalError::MissingParameter("r"))?;
                subordinate_class(LinearSeries::new(g, d, n, r))?
            }
            "ek" => {
                if g != 2 * d - 1 {
                    return Err(Error::Precondition(format!(
                        "E_(k) lives on C_k for genus 2k-1, got g={g}, d={d}"
                    ))
                    .into());
                }
                e_k_class(d)?.into_class()
            }
            other => return Err(EvalError::UnknownName(other.to_string())),
        })
    }

    pub fn eval(&self, e: &Expr) -> Result<CycleClass, EvalError> {
        Ok(match e {
            Expr::Scalar(q) => self.space.scalar(q.clone()),
            Expr::Name(n) => self.lookup(n)?,
            Expr::Neg(a) => self.eval(a)?.neg(),
            Expr::Add(a, b) => self.eval(a)?.checked_add(&self.eval(b)?)?,
            Expr::Sub(a, b) => self.eval(a)?.checked_sub(&self.eval(b)?)?,
            Expr::Mul(a, b) => self.eval(a)?.multiply(&self.eval(b)?)?,
            Expr::Pow(a, k) => self.eval(a)?.pow(*k)?,
        })
    }
}
