//! Text grammar: terms joined by `+`/`-`; a term is a product of factors
//! (rationals `p` or `p/q`, variables `x` or `x^e`) joined by `*` or
//! juxtaposition. Whitespace is insignificant.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Coeff, Monomial, Polynomial, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse { column, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((col, Tok::Num(digits.parse().expect("ascii digits"))));
                continue;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((col, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            _ => return Err(err(col, format!("unexpected character `{c}`"))),
        };
        out.push((col, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(c, _)| *c)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn number(&mut self) -> Result<BigInt> {
        let col = self.col();
        match self.next() {
            Some(Tok::Num(n)) => Ok(n),
            _ => Err(err(col, "expected a number")),
        }
    }

    fn term(&mut self) -> Result<(Coeff, Monomial)> {
        let n = self.ring.nvars();
        let mut coeff = Coeff::one();
        let mut exps = vec![0u32; n];
        let mut first = true;
        loop {
            match self.peek() {
                Some(Tok::Star) if !first => {
                    self.pos += 1;
                    if !matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_))) {
                        return Err(err(self.col(), "expected a factor after `*`"));
                    }
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) => {}
                _ if first => return Err(err(self.col(), "expected a term")),
                _ => break,
            }
            first = false;
            let col = self.col();
            match self.next() {
                Some(Tok::Num(p)) => {
                    let mut value = Coeff::from_integer(p);
                    if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        let qcol = self.col();
                        let q = self.number()?;
                        if q.is_zero() {
                            return Err(err(qcol, "zero denominator"));
                        }
                        value /= Coeff::from_integer(q);
                    }
                    coeff *= value;
                }
                Some(Tok::Ident(name)) => {
                    let idx = self
                        .ring
                        .index_of(&name)
                        .ok_or_else(|| err(col, format!("unknown variable `{name}`")))?;
                    let mut e: u32 = 1;
                    if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        let ecol = self.col();
                        let big = self.number()?;
                        e = u32::try_from(big).map_err(|_| err(ecol, "exponent too large"))?;
                    }
                    exps[idx] = exps[idx].checked_add(e).ok_or_else(|| err(col, "exponent too large"))?;
                }
                _ => unreachable!(),
            }
        }
        Ok((coeff, Monomial::new(exps)))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -Coeff::one()
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                Coeff::one()
            }
            _ => Coeff::one(),
        };
        loop {
            let (c, m) = self.term()?;
            terms.push((sign * c, m));
            match self.peek() {
                None => break,
                Some(Tok::Plus) => sign = Coeff::one(),
                Some(Tok::Minus) => sign = -Coeff::one(),
                Some(_) => return Err(err(self.col(), "expected `+`, `-` or end of input")),
            }
            self.pos += 1;
        }
        Polynomial::from_terms(self.ring, terms)
    }
}

/// Parse a polynomial in `ring`. Columns in errors are 1-based character
/// offsets into `text`.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(err(1, "empty polynomial"));
    }
    let mut p = Parser { ring, toks, pos: 0, end_col: text.chars().count() + 1 };
    p.polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rational, PolyRing};

    #[test]
    fn parses_grammar_variants() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let f = parse_polynomial(&r, " 2x^2*y - 1/2 y +3").unwrap();
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f.coefficient(&Monomial::new(vec![2, 1])), rational(2, 1));
        assert_eq!(f.coefficient(&Monomial::new(vec![0, 1])), rational(-1, 2));
        let g = parse_polynomial(&r, "x*x - x^2").unwrap();
        assert!(g.is_zero());
        assert_eq!(parse_polynomial(&r, "0").unwrap(), Polynomial::zero(&r));
    }

    #[test]
    fn reports_columns() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        assert_eq!(
            parse_polynomial(&r, "x + z").unwrap_err(),
            Error::Parse { column: 5, message: "unknown variable `z`".into() }
        );
        assert!(matches!(parse_polynomial(&r, "x +"), Err(Error::Parse { column: 4, .. })));
        assert!(matches!(parse_polynomial(&r, "1/0"), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(parse_polynomial(&r, "x $ y"), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(parse_polynomial(&r, "x y^"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, ""), Err(Error::Parse { .. })));
    }
}
