//! Text form of polynomials.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
//! `factor := ('-' factor) | atom ('^' integer)?`, `atom := integer ('/' integer)? | ident | '(' expr ')'`.
//! A `/` is only accepted between two integer literals.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at offset {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected token at offset {pos}: {found}")]
    UnexpectedToken { found: String, pos: usize },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("duplicate variable {0:?}")]
    DuplicateVariable(String),
    #[error("invalid variable name {0:?}")]
    InvalidName(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent out of range")]
    BadExponent,
}

/// Ordered variable names of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ring, ParseError> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !is_identifier(n) {
                return Err(ParseError::InvalidName(n.to_string()));
            }
            if out.iter().any(|m| m == n) {
                return Err(ParseError::DuplicateVariable(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(Ring { names: out })
    }

    /// `x1, …, xn`.
    pub fn numbered(n: usize) -> Ring {
        Ring {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Keeps the variables whose flag is set.
    pub fn restrict(&self, keep: &[bool]) -> Ring {
        Ring {
            names: self
                .names
                .iter()
                .zip(keep)
                .filter(|(_, k)| **k)
                .map(|(n, _)| n.clone())
                .collect(),
        }
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial, ParseError> {
        let tokens = lex(text)?;
        let mut p = Parser {
            ring: self,
            tokens,
            pos: 0,
        };
        let out = p.expr()?;
        if p.pos < p.tokens.len() {
            let (t, at) = &p.tokens[p.pos];
            return Err(ParseError::UnexpectedToken {
                found: t.describe(),
                pos: *at,
            });
        }
        Ok(out)
    }

    pub fn format(&self, p: &Polynomial) -> String {
        assert_eq!(p.nvars(), self.nvars(), "ring mismatch");
        format_terms(p, &self.names)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn format_with_default_names(p: &Polynomial) -> String {
    Ring::numbered(p.nvars()).format(p)
}

fn format_monomial(m: &Monomial, names: &[String], out: &mut String) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&names[i]);
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

fn format_terms(p: &Polynomial, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            write!(out, "{a}").unwrap();
        } else {
            if !a.is_one() {
                write!(out, "{a}*").unwrap();
            }
            format_monomial(m, names, &mut out);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(i) => i.to_string(),
            Token::Ident(s) => s.clone(),
            Token::Plus => "+".into(),
            Token::Minus => "-".into(),
            Token::Star => "*".into(),
            Token::Slash => "/".into(),
            Token::Caret => "^".into(),
            Token::LParen => "(".into(),
            Token::RParen => ")".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let (pos, c) = bytes[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = bytes[start..i].iter().map(|(_, c)| c).collect();
            out.push((Token::Int(s.parse().unwrap()), pos));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].1.is_ascii_alphanumeric() || bytes[i].1 == '_') {
                i += 1;
            }
            let s: String = bytes[start..i].iter().map(|(_, c)| c).collect();
            out.push((Token::Ident(s), pos));
            continue;
        }
        let t = match c {
            '+' => Token::Plus,
            '-' | '\u{2212}' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            _ => return Err(ParseError::UnexpectedChar { ch: c, pos }),
        };
        out.push((t, pos));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn next(&mut self) -> Result<(Token, usize), ParseError> {
        let t = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or(ParseError::UnexpectedEnd)?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, want: Token) -> Result<(), ParseError> {
        let (t, at) = self.next()?;
        if t == want {
            Ok(())
        } else {
            Err(ParseError::UnexpectedToken {
                found: t.describe(),
                pos: at,
            })
        }
    }

    fn n(&self) -> usize {
        self.ring.nvars()
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if let Some(Token::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            let (t, at) = self.next()?;
            let e = match t {
                Token::Int(i) => u32::try_from(i).map_err(|_| ParseError::BadExponent)?,
                other => {
                    return Err(ParseError::UnexpectedToken {
                        found: other.describe(),
                        pos: at,
                    })
                }
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let (t, at) = self.next()?;
        match t {
            Token::Int(num) => {
                let mut value = Rational::from_integer(num);
                if let (Some(Token::Slash), Some(Token::Int(_))) = (
                    self.peek(),
                    self.tokens.get(self.pos + 1).map(|(t, _)| t),
                ) {
                    self.pos += 1;
                    let (den, _) = self.next()?;
                    let Token::Int(den) = den else { unreachable!() };
                    if den.is_zero() {
                        return Err(ParseError::DivisionByZero);
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Polynomial::constant(self.n(), value))
            }
            Token::Ident(name) => match self.ring.index_of(&name) {
                Some(i) => Ok(Polynomial::var(self.n(), i)),
                None => Err(ParseError::UnknownVariable(name)),
            },
            Token::LParen => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            other => Err(ParseError::UnexpectedToken {
                found: other.describe(),
                pos: at,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Ring {
        Ring::new(&["x", "y"]).unwrap()
    }

    #[test]
    fn prints_descending_degrevlex() {
        let r = xy();
        let f = r.parse("x*y^3 - y*x^3").unwrap();
        assert_eq!(r.format(&f), "-x^3*y + x*y^3");
        let g = r.parse("3/2*x^2 - 1").unwrap();
        assert_eq!(r.format(&g), "3/2*x^2 - 1");
        assert_eq!(r.format(&Polynomial::zero(2)), "0");
    }

    #[test]
    fn parses_parentheses_and_powers() {
        let r = xy();
        let f = r.parse("(x+y)^2").unwrap();
        assert_eq!(f, r.parse("x^2 + 2*x*y + y^2").unwrap());
        assert_eq!(r.parse("-(x)").unwrap(), r.parse("-1*x").unwrap());
        assert_eq!(r.parse("2^3").unwrap(), Polynomial::from_int(2, 8));
    }

    #[test]
    fn rejects_bad_input() {
        let r = xy();
        assert!(matches!(r.parse("xy"), Err(ParseError::UnknownVariable(_))));
        assert!(matches!(r.parse("x y"), Err(ParseError::UnexpectedToken { .. })));
        assert!(matches!(r.parse("x/y"), Err(ParseError::UnexpectedToken { .. })));
        assert_eq!(r.parse("1/0"), Err(ParseError::DivisionByZero));
        assert_eq!(r.parse("x +"), Err(ParseError::UnexpectedEnd));
        assert!(matches!(r.parse("x.5"), Err(ParseError::UnexpectedChar { .. })));
        assert!(Ring::new(&["x", "x"]).is_err());
    }
}
