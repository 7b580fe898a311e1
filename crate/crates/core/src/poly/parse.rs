//! Human-readable polynomial syntax: `2*x^2*y - 3/4*z + 1`.
//!
//! The printer emits terms in descending graded-reverse-lex order; parsing the
//! printed form gives back the identical polynomial. The parser also accepts
//! parentheses and named definitions, which problem files use.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial, Rational, Ring};
use crate::{Error, Result};

fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.name(i).to_string()),
            _ => parts.push(format!("{}^{}", ring.name(i), e)),
        }
    }
    parts.join("*")
}

pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if m.is_one() {
            out.push_str(&format_rational(&a));
        } else if a.is_one() {
            out.push_str(&format_monomial(p.ring(), m));
        } else {
            out.push_str(&format_rational(&a));
            out.push('*');
            out.push_str(&format_monomial(p.ring(), m));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
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

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

impl Lexer {
    fn new(src: &str, line: usize, col0: usize) -> Result<Self> {
        let chars: Vec<char> = src.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        let err = |col: usize, msg: String| Error::Parse {
            line,
            column: col0 + col + 1,
            message: msg,
        };
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            let tok = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                d if d.is_ascii_digit() => {
                    while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                        i += 1;
                    }
                    let s: String = chars[start..=i].iter().collect();
                    Tok::Num(s.parse().unwrap())
                }
                a if a.is_alphabetic() || a == '_' => {
                    while i + 1 < chars.len()
                        && (chars[i + 1].is_alphanumeric()
                            || chars[i + 1] == '_'
                            || chars[i + 1] == '\'')
                    {
                        i += 1;
                    }
                    Tok::Ident(chars[start..=i].iter().collect())
                }
                other => return Err(err(start, format!("unexpected character '{other}'"))),
            };
            toks.push((tok, col0 + start + 1));
            i += 1;
        }
        toks.push((Tok::End, col0 + chars.len() + 1));
        Ok(Lexer { toks })
    }
}

/// Parser for polynomial expressions in a fixed ring, with optional named
/// definitions that expand to previously parsed polynomials.
pub struct PolyParser<'a> {
    ring: &'a Ring,
    definitions: Option<&'a HashMap<String, Polynomial>>,
}

struct State<'s> {
    toks: &'s [(Tok, usize)],
    pos: usize,
    line: usize,
}

impl<'s> State<'s> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }
    fn col(&self) -> usize {
        self.toks[self.pos].1
    }
    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col(),
            message: msg.into(),
        }
    }
}

impl<'a> PolyParser<'a> {
    pub fn new(ring: &'a Ring) -> Self {
        PolyParser {
            ring,
            definitions: None,
        }
    }

    pub fn with_definitions(ring: &'a Ring, defs: &'a HashMap<String, Polynomial>) -> Self {
        PolyParser {
            ring,
            definitions: Some(defs),
        }
    }

    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        self.parse_at(src, 1, 0)
    }

    /// Parse with error positions reported relative to `line` and column offset `col0`.
    pub fn parse_at(&self, src: &str, line: usize, col0: usize) -> Result<Polynomial> {
        let lexer = Lexer::new(src, line, col0)?;
        let mut st = State {
            toks: &lexer.toks,
            pos: 0,
            line,
        };
        if *st.peek() == Tok::End {
            return Err(st.error("empty expression"));
        }
        let p = self.expr(&mut st)?;
        if *st.peek() != Tok::End {
            return Err(st.error("unexpected trailing input"));
        }
        Ok(p)
    }

    fn expr(&self, st: &mut State) -> Result<Polynomial> {
        let mut acc = self.term(st)?;
        loop {
            match st.peek() {
                Tok::Plus => {
                    st.bump();
                    acc = &acc + &self.term(st)?;
                }
                Tok::Minus => {
                    st.bump();
                    acc = &acc - &self.term(st)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&self, st: &mut State) -> Result<Polynomial> {
        let mut acc = self.unary(st)?;
        loop {
            match st.peek() {
                Tok::Star => {
                    st.bump();
                    acc = &acc * &self.unary(st)?;
                }
                Tok::Slash => {
                    st.bump();
                    let col = st.col();
                    let d = self.unary(st)?;
                    match d.constant_value() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                        Some(_) => {
                            return Err(Error::Parse {
                                line: st.line,
                                column: col,
                                message: "division by zero".into(),
                            })
                        }
                        None => {
                            return Err(Error::Parse {
                                line: st.line,
                                column: col,
                                message: "division by a non-constant".into(),
                            })
                        }
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&self, st: &mut State) -> Result<Polynomial> {
        match st.peek() {
            Tok::Minus => {
                st.bump();
                Ok(-self.unary(st)?)
            }
            Tok::Plus => {
                st.bump();
                self.unary(st)
            }
            _ => self.power(st),
        }
    }

    fn power(&self, st: &mut State) -> Result<Polynomial> {
        let base = self.primary(st)?;
        if *st.peek() == Tok::Caret {
            st.bump();
            match st.bump() {
                Tok::Num(n) => {
                    let e: u32 = n.try_into().map_err(|_| st.error("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(st.error("expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&self, st: &mut State) -> Result<Polynomial> {
        let col = st.col();
        match st.bump() {
            Tok::Num(n) => Ok(Polynomial::constant(self.ring, Rational::from_integer(n))),
            Tok::Ident(name) => {
                if let Some(i) = self.ring.index_of(&name) {
                    Ok(Polynomial::var(self.ring, i))
                } else if let Some(p) = self.definitions.and_then(|d| d.get(&name)) {
                    Ok(p.clone())
                } else {
                    Err(Error::Parse {
                        line: st.line,
                        column: col,
                        message: format!("unknown identifier '{name}'"),
                    })
                }
            }
            Tok::LParen => {
                let p = self.expr(st)?;
                match st.bump() {
                    Tok::RParen => Ok(p),
                    _ => Err(st.error("expected ')'")),
                }
            }
            Tok::End => Err(Error::Parse {
                line: st.line,
                column: col,
                message: "unexpected end of expression".into(),
            }),
            t => Err(Error::Parse {
                line: st.line,
                column: col,
                message: format!("unexpected token {t:?}"),
            }),
        }
    }
}

/// Parse a polynomial in `ring`.
pub fn parse_polynomial(ring: &Ring, src: &str) -> Result<Polynomial> {
    PolyParser::new(ring).parse(src)
}
