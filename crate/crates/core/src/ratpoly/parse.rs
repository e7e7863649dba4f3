//! Expression syntax for polynomials.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := ('+' | '-') unary | power
//! power   := atom ('^' integer)?
//! atom    := integer | identifier | '(' expr ')'
//! ```
//!
//! Division is only allowed by a non-zero constant, so `7/3` and `w1/2` are
//! fine while `1/w0` is a syntax error. Rendering writes `^` for powers,
//! an explicit `*`, and rational coefficients as `a/b`.

use std::fmt;


use super::{Monomial, MultiPoly, VarTable};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// How identifiers not present in the supplied table are treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariablePolicy {
    /// Unknown identifiers are errors.
    Strict,
    /// Unknown identifiers are appended to the table in order of appearance.
    DeclareOnUse,
}

/// Parse over a table built from the identifiers in order of appearance.
pub fn parse<C: Scalar>(src: &str) -> Result<MultiPoly<C>> {
    parse_with(src, &VarTable::new(Vec::<String>::new())?, VariablePolicy::DeclareOnUse)
}

pub fn parse_with<C: Scalar>(
    src: &str,
    table: &VarTable,
    policy: VariablePolicy,
) -> Result<MultiPoly<C>> {
    let tokens = tokenize(src)?;
    let table = match policy {
        VariablePolicy::Strict => {
            for t in &tokens {
                if let Tok::Ident(name) = &t.kind {
                    if table.index_of(name).is_none() {
                        return Err(Error::Syntax {
                            pos: t.pos,
                            msg: format!("unknown variable `{name}`"),
                        });
                    }
                }
            }
            table.clone()
        }
        VariablePolicy::DeclareOnUse => {
            let mut extra: Vec<String> = Vec::new();
            for t in &tokens {
                if let Tok::Ident(name) = &t.kind {
                    if table.index_of(name).is_none() && !extra.contains(name) {
                        extra.push(name.clone());
                    }
                }
            }
            if extra.is_empty() {
                table.clone()
            } else {
                table.extended(extra)?
            }
        }
    };
    let mut p = Parser { tokens, pos: 0, table, end: src.len() };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(Error::Syntax { pos: t.pos, msg: "unexpected token".into() });
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    kind: Tok,
    pos: usize,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let pos = i;
        let kind = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token { kind: Tok::Int(src[pos..i].to_string()), pos });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Token { kind: Tok::Ident(src[pos..i].to_string()), pos });
                continue;
            }
            _ => {
                let ch = src[pos..].chars().next().unwrap();
                return Err(Error::Syntax { pos, msg: format!("unexpected character `{ch}`") });
            }
        };
        out.push(Token { kind, pos });
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    table: VarTable,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        let msg = if self.peek().is_none() {
            format!("{msg} at end of input")
        } else {
            msg.to_string()
        };
        Err(Error::Syntax { pos: self.here(), msg })
    }

    fn eat(&mut self, k: &Tok) -> bool {
        if self.peek().map(|t| &t.kind) == Some(k) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<C: Scalar>(&mut self) -> Result<MultiPoly<C>> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<C: Scalar>(&mut self) -> Result<MultiPoly<C>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = &acc * &self.unary()?;
            } else if self.peek().map(|t| &t.kind) == Some(&Tok::Slash) {
                let pos = self.here();
                self.pos += 1;
                let d = self.unary::<C>()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Syntax {
                        pos,
                        msg: "division only by a non-zero constant".into(),
                    });
                }
                let inv = C::one() / d.constant_term();
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary<C: Scalar>(&mut self) -> Result<MultiPoly<C>> {
        if self.eat(&Tok::Minus) {
            return Ok(-self.unary::<C>()?);
        }
        if self.eat(&Tok::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power<C: Scalar>(&mut self) -> Result<MultiPoly<C>> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            match self.peek().map(|t| t.kind.clone()) {
                Some(Tok::Int(digits)) => {
                    let e: u32 = digits.parse().map_err(|_| Error::Syntax {
                        pos: self.here(),
                        msg: "exponent too large".into(),
                    })?;
                    self.pos += 1;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom<C: Scalar>(&mut self) -> Result<MultiPoly<C>> {
        let tok = match self.peek() {
            Some(t) => t.clone(),
            None => return self.err("expected an operand"),
        };
        match tok.kind {
            Tok::Int(digits) => {
                self.pos += 1;
                let n = C::parse_integer(&digits).ok_or(Error::Syntax {
                    pos: tok.pos,
                    msg: "integer literal out of range".into(),
                })?;
                Ok(MultiPoly::constant(&self.table, C::from_integer(n)))
            }
            Tok::Ident(name) => {
                self.pos += 1;
                let i = self.table.index_of(&name).expect("identifiers resolved up front");
                Ok(MultiPoly::var_at(&self.table, i))
            }
            Tok::LParen => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            _ => self.err("expected an operand"),
        }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &VarTable, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(vars.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl<C: Scalar> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, self.vars(), m)?;
            }
        }
        Ok(())
    }
}
