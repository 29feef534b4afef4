//! Text expressions for classes on `P(T_X)`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/' | <juxtaposition>) unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | symbol | '(' expr ')'
//! ```
//!
//! `z` is the tautological class, `K` the canonical class of the base, and
//! every other symbol must be a basis symbol of the profile. Division is
//! only by non-zero scalars, so `4/3*H` is `(4/3) H`. Offsets in syntax
//! errors are 1-based character columns; the end of input is `len + 1`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::chow::{eval_top, PtClass};
use crate::error::{Error, Result};
use crate::profile::BaseProfile;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Num(digits.parse().expect("digits")), pos));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(syntax(pos, format!("unexpected character `{other}`"))),
        };
        out.push((tok, pos));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    profile: &'a BaseProfile,
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if t.0 != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<PtClass> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PtClass> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let rhs = self.unary()?;
                    let scalar = as_scalar(&rhs)
                        .ok_or_else(|| syntax(pos, "division is only by scalars"))?;
                    if scalar.is_zero() {
                        return Err(syntax(pos, "division by zero"));
                    }
                    acc = acc.scale(&(Rational::from_integer(1.into()) / scalar));
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                    acc = &acc * &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<PtClass> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<PtClass> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            (Tok::Num(k), pos) => {
                let k = k
                    .to_u32()
                    .ok_or_else(|| syntax(pos, "exponent too large"))?;
                Ok(base.pow(k))
            }
            (_, pos) => Err(syntax(pos, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<PtClass> {
        match self.bump() {
            (Tok::Num(n), _) => Ok(PtClass::constant(self.profile, Rational::from_integer(n))),
            (Tok::Ident(name), _) => self.symbol(&name),
            (Tok::LParen, _) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (_, pos) => Err(syntax(pos, "expected `)`")),
                }
            }
            (Tok::End, pos) => Err(syntax(pos, "unexpected end of input")),
            (tok, pos) => Err(syntax(pos, format!("unexpected token {tok:?}"))),
        }
    }

    fn symbol(&self, name: &str) -> Result<PtClass> {
        match name {
            "z" => Ok(PtClass::zeta(self.profile)),
            "K" => Ok(PtClass::pullback(self.profile, &self.profile.canonical())),
            other => PtClass::symbol(self.profile, other),
        }
    }
}

fn as_scalar(cls: &PtClass) -> Option<Rational> {
    let mut value = Rational::zero();
    for ((a, e), c) in cls.terms() {
        if *a != 0 || e.iter().any(|x| *x != 0) {
            return None;
        }
        value = c.clone();
    }
    Some(value)
}

pub fn parse_expr(profile: &BaseProfile, text: &str) -> Result<PtClass> {
    let toks = lex(text)?;
    let mut p = Parser {
        profile,
        toks,
        at: 0,
    };
    let cls = p.expr()?;
    match p.bump() {
        (Tok::End, _) => Ok(cls),
        (Tok::RParen, pos) => Err(syntax(pos, "unbalanced `)`")),
        (_, pos) => Err(syntax(pos, "unexpected trailing input")),
    }
}

/// Parses and evaluates a top-degree expression.
pub fn evaluate_expr(profile: &BaseProfile, text: &str) -> Result<Rational> {
    let cls = parse_expr(profile, text)?;
    let degrees = cls.degrees();
    if degrees.len() > 1 {
        return Err(Error::Inhomogeneous(degrees));
    }
    eval_top(profile, &cls)
}
