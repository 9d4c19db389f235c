//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' digits)?
//! atom   := digits ('/' digits)? | 'x' | 'y' | 'z' | 't' | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. The unicode minus sign is accepted as `-`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{MPoly, Poly2, Poly3};
use super::rat::Rat;
use crate::error::{Error, Result};

type Poly4 = MPoly<4>;

struct Parser {
    toks: Vec<(usize, char)>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        let toks = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i, if c == '−' { '-' } else { c }))
            .collect();
        Parser { toks, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|t| t.0)
            .unwrap_or_else(|| self.toks.last().map(|t| t.0 + 1).unwrap_or(0))
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        (!s.is_empty()).then_some(s)
    }

    fn expr(&mut self) -> Result<Poly4> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly4> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly4> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly4> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let Some(d) = self.digits() else {
                return self.err("expected a nonnegative integer exponent after '^'");
            };
            let Ok(n) = d.parse::<u32>() else {
                return self.err("exponent too large");
            };
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly4> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().unwrap().parse().unwrap();
                let mut val = Rat::from_integer(num);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let Some(d) = self.digits() else {
                        return self.err("expected a denominator after '/'");
                    };
                    let den: BigInt = d.parse().unwrap();
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    val /= Rat::from_integer(den);
                }
                Ok(Poly4::constant(val))
            }
            Some(c @ ('x' | 'y' | 'z' | 't')) => {
                self.pos += 1;
                let i = match c {
                    'x' => 0,
                    'y' => 1,
                    'z' => 2,
                    _ => 3,
                };
                Ok(Poly4::var(i))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) => self.err(format!("unexpected character '{}'", c)),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse4(src: &str) -> Result<Poly4> {
    let mut p = Parser::new(src);
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err(format!("unexpected '{}'", p.peek().unwrap()));
    }
    Ok(e)
}

fn restrict<const N: usize>(p: Poly4, what: &str) -> Result<MPoly<N>> {
    let mut out = MPoly::<N>::zero();
    for (e, c) in p.terms() {
        if e[N..].iter().any(|&k| k > 0) {
            return Err(Error::Parse {
                offset: 0,
                message: format!("{} may only use the variables {}", what, &"x, y, z"[..3 * N - 2]),
            });
        }
        let mut k = [0u32; N];
        k.copy_from_slice(&e[..N]);
        out.add_term(k, c.clone());
    }
    Ok(out)
}

/// Parses a polynomial in `x, y`.
pub fn parse_poly2(src: &str) -> Result<Poly2> {
    restrict::<2>(parse4(src)?, "a local polynomial")
}

/// Parses a polynomial in `x, y, z`.
pub fn parse_poly3(src: &str) -> Result<Poly3> {
    restrict::<3>(parse4(src)?, "a projective form")
}

/// Parses a univariate polynomial in `t` into `(coefficient of t^k)`.
pub fn parse_in_t(src: &str) -> Result<Vec<Rat>> {
    let p = parse4(src)?;
    let mut out: Vec<Rat> = Vec::new();
    for (e, c) in p.terms() {
        if e[0] + e[1] + e[2] > 0 {
            return Err(Error::Parse {
                offset: 0,
                message: "a series may only use the variable t".into(),
            });
        }
        let k = e[3] as usize;
        if out.len() <= k {
            out.resize(k + 1, Rat::zero());
        }
        out[k] += c;
    }
    Ok(out)
}
