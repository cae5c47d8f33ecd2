//! Reader for the polynomial text grammar.
//!
//! ```text
//! expr   := sign? term (sign term)*      sign := '+' | '-'
//! term   := factor ('*' factor)*
//! factor := int ('/' int)? | name ('^' int)?
//! ```
//! Whitespace is insignificant; `0` is the empty sum.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Chart, Monomial, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at column {column}")]
pub struct GrammarError {
    /// 1-based character column of the offending token.
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, GrammarError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
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
            out.push((col, Tok::Int(digits.parse().expect("ascii digits"))));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((col, Tok::Name(chars[start..i].iter().collect())));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            _ => return Err(GrammarError { column: col, message: format!("unexpected character '{c}'") }),
        };
        out.push((col, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_col: usize,
    chart: &'a Chart,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(c, _)| *c)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, GrammarError> {
        Err(GrammarError { column: self.col(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Poly, GrammarError> {
        if self.toks.is_empty() {
            return self.err("empty polynomial (write 0 for the zero polynomial)");
        }
        let mut acc = Poly::zero(self.chart);
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (m, c) = self.term()?;
            let c = if negate { -c } else { c };
            acc = &acc + &Poly::from_terms(self.chart, [(m, c)]);
            match self.peek() {
                None => return Ok(acc),
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), GrammarError> {
        let mut coeff = Rational::from_integer(1.into());
        let mut exps = vec![0u32; self.chart.dim()];
        loop {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let mut value = Rational::from_integer(n);
                    if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        match self.peek().cloned() {
                            Some(Tok::Int(d)) if !d.is_zero() => {
                                self.pos += 1;
                                value /= Rational::from_integer(d);
                            }
                            Some(Tok::Int(_)) => return self.err("zero denominator"),
                            _ => return self.err("expected integer denominator"),
                        }
                    }
                    coeff *= value;
                }
                Some(Tok::Name(name)) => {
                    let Some(idx) = self.chart.index_of(&name) else {
                        return self.err(format!("unknown coordinate '{name}'"));
                    };
                    self.pos += 1;
                    let mut e = 1u32;
                    if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        match self.peek().cloned() {
                            Some(Tok::Int(k)) => match u32::try_from(k) {
                                Ok(k) => {
                                    self.pos += 1;
                                    e = k;
                                }
                                Err(_) => return self.err("exponent too large"),
                            },
                            _ => return self.err("expected non-negative integer exponent"),
                        }
                    }
                    exps[idx] = exps[idx]
                        .checked_add(e)
                        .ok_or_else(|| GrammarError { column: self.col(), message: "exponent overflow".into() })?;
                }
                _ => return self.err("expected a number or coordinate name"),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                return Ok((Monomial::from_exponents(exps), coeff));
            }
        }
    }
}

impl Poly {
    /// Parses `src` in the polynomial text grammar over `chart`.
    pub fn parse(src: &str, chart: &Chart) -> Result<Poly, GrammarError> {
        let toks = lex(src)?;
        let mut p = Parser { toks, pos: 0, end_col: src.chars().count() + 1, chart };
        p.expr()
    }
}

/// Parses a constant (a polynomial over the point chart).
pub fn parse_rational(src: &str) -> Result<Rational, GrammarError> {
    let p = Poly::parse(src, &Chart::point())?;
    Ok(p.as_constant().expect("point-chart polynomials are constant"))
}
