//! Expressions over `tau h e f x y x1 y1 Delta`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := '-' term | factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := literal | ident | '(' expr ')'
//! ```
//!
//! A literal is an integer or `p/q` written without spaces.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Tau,
    H,
    E,
    F,
    X,
    Y,
    X1,
    Y1,
    Delta,
}

impl Var {
    pub fn from_name(s: &str) -> Option<Var> {
        Some(match s {
            "tau" => Var::Tau,
            "h" => Var::H,
            "e" => Var::E,
            "f" => Var::F,
            "x" => Var::X,
            "y" => Var::Y,
            "x1" => Var::X1,
            "y1" => Var::Y1,
            "Delta" => Var::Delta,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Tau => "tau",
            Var::H => "h",
            Var::E => "e",
            Var::F => "f",
            Var::X => "x",
            Var::Y => "y",
            Var::X1 => "x1",
            Var::Y1 => "y1",
            Var::Delta => "Delta",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Non-negative rational literal.
    Num(BigRational),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    col: usize,
}

fn error(pos: Pos, message: impl Into<String>) -> ParseError {
    ParseError {
        line: pos.line,
        col: pos.col,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = chars[start..=i].iter().collect::<String>().parse().unwrap();
                let mut den = BigInt::one();
                if chars.get(i + 1) == Some(&'/') {
                    let ds = i + 2;
                    let mut j = ds;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == ds {
                        return Err(error(
                            Pos {
                                line,
                                col: col + (ds - start),
                            },
                            "expected a denominator after `/`",
                        ));
                    }
                    den = chars[ds..j].iter().collect::<String>().parse().unwrap();
                    if den.is_zero() {
                        return Err(error(pos, "zero denominator"));
                    }
                    i = j - 1;
                }
                Tok::Num(BigRational::new(num, den))
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i + 1 < chars.len()
                    && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_')
                {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            other => return Err(error(pos, format!("unexpected character `{other}`"))),
        };
        i += 1;
        col += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.term()?)));
        }
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (tok, pos) = self.bump();
        match tok {
            Tok::Num(n) if n.is_integer() => {
                let e =
                    u32::try_from(n.to_integer()).map_err(|_| error(pos, "exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            other => Err(error(
                pos,
                format!("malformed exponent: expected a non-negative integer, found {other}"),
            )),
        }
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Num(n) => Ok(Expr::Num(n)),
            Tok::Ident(s) => Var::from_name(&s)
                .map(Expr::Var)
                .ok_or_else(|| error(pos, format!("unknown identifier `{s}`"))),
            Tok::LParen => {
                let inner = self.expr()?;
                let (close, cpos) = self.bump();
                if close != Tok::RParen {
                    return Err(error(
                        cpos,
                        format!("unbalanced parentheses: expected `)`, found {close}"),
                    ));
                }
                Ok(inner)
            }
            Tok::RParen => Err(error(pos, "unbalanced parentheses: unexpected `)`")),
            other => Err(error(
                pos,
                format!("expected a number, identifier or `(`, found {other}"),
            )),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
    };
    let e = p.expr()?;
    let (tok, pos) = p.bump();
    match tok {
        Tok::Eof => Ok(e),
        Tok::RParen => Err(error(pos, "unbalanced parentheses: unexpected `)`")),
        other => Err(error(pos, format!("expected an operator, found {other}"))),
    }
}

// Binding strength of each node: sums 1, negation 2, products 3,
// powers 4, atoms 5.
fn strength(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Neg(..) => 2,
        Expr::Mul(..) => 3,
        Expr::Pow(..) => 4,
        Expr::Num(n) if !n.is_integer() => 4,
        Expr::Num(_) | Expr::Var(_) => 5,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if strength(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(n) => {
                if n.is_negative() {
                    write!(f, "-{}", -n)
                } else {
                    write!(f, "{n}")
                }
            }
            Expr::Var(v) => f.write_str(v.name()),
            Expr::Neg(a) => {
                f.write_str("-")?;
                write_at(f, a, 2)
            }
            Expr::Add(a, b) => {
                write_at(f, a, 1)?;
                f.write_str(" + ")?;
                write_at(f, b, 2)
            }
            Expr::Sub(a, b) => {
                write_at(f, a, 1)?;
                f.write_str(" - ")?;
                write_at(f, b, 2)
            }
            Expr::Mul(a, b) => {
                write_at(f, a, 3)?;
                f.write_str("*")?;
                write_at(f, b, 4)
            }
            Expr::Pow(a, n) => {
                write_at(f, a, 5)?;
                write!(f, "^{n}")
            }
        }
    }
}
