//! Line-oriented problem files.
//!
//! ```text
//! # twisted cubic
//! ring x, y, z
//! order lex
//! weight a 3 2 1
//! ideal
//!   x^2 - y
//!   x*y - z
//! end
//! dmax 8
//! ```
//!
//! Blocks are `ideal`, `algebra` (one polynomial per line, or several
//! separated by commas) and `compare` (lines `m > n` of monomials), each
//! closed by `end`. Exactly one block is allowed. Parameters: `cap`, `dmax`,
//! `jmax`, `fiber`, `freeness-bound`.

use std::fmt;

use inideal::weight::ComparisonSet;
use inideal::{Coeff, Error, IdealGens, Monomial, OrderSpec, PolyRing, Polynomial, Ring, SubalgebraGens, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
        }
    }
}

impl std::error::Error for InputError {}

impl InputError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        InputError { line, column, message: message.into() }
    }

    /// An error not tied to a file position (flags, missing blocks).
    pub fn general(message: impl Into<String>) -> Self {
        InputError { line: 0, column: 0, message: message.into() }
    }

    fn from_core(line: usize, offset: usize, e: Error) -> Self {
        match e {
            Error::Parse { column, message } => InputError::new(line, offset + column, message),
            other => InputError::new(line, offset + 1, other.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    Ideal(IdealGens),
    Algebra(SubalgebraGens),
    Compare(ComparisonSet),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    pub cap: Option<u64>,
    pub dmax: Option<usize>,
    pub jmax: Option<u64>,
    pub fiber: Option<Coeff>,
    pub freeness_bound: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub ring: Ring,
    pub order: OrderSpec,
    /// Text of the order as written, for reports.
    pub order_text: String,
    pub weight_a: Option<WeightVector>,
    pub weight_b: Option<WeightVector>,
    pub block: Block,
    pub params: Params,
}

struct Line<'a> {
    number: usize,
    /// Content with comments removed, untrimmed.
    text: &'a str,
}

impl<'a> Line<'a> {
    fn indent(&self) -> usize {
        self.text.len() - self.text.trim_start().len()
    }

    fn keyword(&self) -> (&'a str, &'a str, usize) {
        let t = self.text.trim_start();
        let start = self.indent();
        match t.find(char::is_whitespace) {
            Some(i) => {
                let rest = &t[i..];
                let rest_start = start + i + (rest.len() - rest.trim_start().len());
                (&t[..i], rest.trim(), rest_start)
            }
            None => (t.trim_end(), "", start + t.len()),
        }
    }

    fn err(&self, column0: usize, message: impl Into<String>) -> InputError {
        InputError::new(self.number, column0 + 1, message)
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| Line { number: i + 1, text: l.split('#').next().unwrap_or("") })
        .filter(|l| !l.text.trim().is_empty())
        .collect()
}

pub fn parse_weight(text: &str, n: usize) -> Result<WeightVector, String> {
    let entries = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u64>().map_err(|_| format!("weight entry `{s}` is not a positive integer")))
        .collect::<Result<Vec<_>, _>>()?;
    if entries.len() != n {
        return Err(format!("weight has {} entries but the ring has {n} variables", entries.len()));
    }
    WeightVector::new(entries).map_err(|e| e.to_string())
}

pub fn parse_coeff(text: &str) -> Result<Coeff, String> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: num_bigint::BigInt = num.parse().map_err(|_| format!("`{t}` is not a rational number"))?;
    let q: num_bigint::BigInt = den.parse().map_err(|_| format!("`{t}` is not a rational number"))?;
    if q == num_bigint::BigInt::from(0) {
        return Err(format!("`{t}` has a zero denominator"));
    }
    Ok(Coeff::new(p, q))
}

/// Polynomials separated by commas on one line, with their 0-based columns.
fn split_polys<'a>(line: &Line<'a>) -> Vec<(usize, &'a str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in line.text.char_indices().chain(std::iter::once((line.text.len(), ','))) {
        if c == ',' {
            let piece = &line.text[start..i];
            if !piece.trim().is_empty() {
                let lead = piece.len() - piece.trim_start().len();
                out.push((start + lead, piece.trim()));
            }
            start = i + 1;
        }
    }
    out
}

fn parse_monomial(ring: &Ring, line: &Line, col: usize, text: &str) -> Result<Monomial, InputError> {
    let p = Polynomial::parse(ring, text).map_err(|e| InputError::from_core(line.number, col, e))?;
    match p.terms() {
        [t] if *t.coeff() == Coeff::from_integer(1.into()) => Ok(t.monomial().clone()),
        _ => Err(line.err(col, format!("`{text}` is not a monomial"))),
    }
}

fn parse_comparison(ring: &Ring, line: &Line) -> Result<(Monomial, Monomial), InputError> {
    let t = line.text;
    let (idx, op) = t
        .char_indices()
        .find(|&(_, c)| c == '>' || c == '<')
        .ok_or_else(|| line.err(line.indent(), "expected `m > n` or `m < n`"))?;
    let (lhs, rhs) = (&t[..idx], &t[idx + 1..]);
    let lcol = lhs.len() - lhs.trim_start().len();
    let rcol = idx + 1 + rhs.len() - rhs.trim_start().len();
    let m = parse_monomial(ring, line, lcol, lhs.trim())?;
    let n = parse_monomial(ring, line, rcol, rhs.trim())?;
    if m == n {
        return Err(line.err(lcol, "a monomial cannot be larger than itself"));
    }
    Ok(if op == '>' { (m, n) } else { (n, m) })
}

enum BlockKind {
    Ideal,
    Algebra,
    Compare,
}

impl Problem {
    pub fn parse(text: &str) -> Result<Problem, InputError> {
        let lines = lines(text);
        let mut ring: Option<Ring> = None;
        let mut order: Option<(usize, usize, String)> = None;
        let mut weight_a: Option<(usize, usize, String)> = None;
        let mut weight_b: Option<(usize, usize, String)> = None;
        let mut block: Option<Block> = None;
        let mut params = Params::default();
        let mut i = 0;
        while i < lines.len() {
            let line = &lines[i];
            let (key, rest, rest_col) = line.keyword();
            let need_ring = |what: &str| {
                ring.clone().ok_or_else(|| line.err(line.indent(), format!("`{what}` must come after `ring`")))
            };
            match key {
                "ring" => {
                    if ring.is_some() {
                        return Err(line.err(line.indent(), "duplicate `ring` declaration"));
                    }
                    let names: Vec<&str> =
                        rest.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
                    ring = Some(PolyRing::new(names).map_err(|e| line.err(rest_col, e.to_string()))?);
                }
                "order" => order = Some((line.number, rest_col, rest.to_string())),
                "weight" => {
                    let (which, spec, col) = match rest.split_once(char::is_whitespace) {
                        Some(("a", s)) => ('a', s.trim(), rest_col + 2),
                        Some(("b", s)) => ('b', s.trim(), rest_col + 2),
                        _ => ('a', rest, rest_col),
                    };
                    let slot = if which == 'a' { &mut weight_a } else { &mut weight_b };
                    *slot = Some((line.number, col, spec.to_string()));
                }
                "ideal" | "algebra" | "compare" => {
                    if block.is_some() {
                        return Err(line.err(line.indent(), "only one generator block is allowed"));
                    }
                    if !rest.is_empty() {
                        return Err(line.err(rest_col, format!("put the generators on the lines after `{key}`")));
                    }
                    let r = need_ring(key)?;
                    let kind = match key {
                        "ideal" => BlockKind::Ideal,
                        "algebra" => BlockKind::Algebra,
                        _ => BlockKind::Compare,
                    };
                    let start = line.number;
                    let mut polys = Vec::new();
                    let mut pairs = Vec::new();
                    i += 1;
                    loop {
                        let Some(l) = lines.get(i) else {
                            return Err(InputError::new(start, 1, format!("`{key}` block is missing its `end`")));
                        };
                        if l.text.trim() == "end" {
                            break;
                        }
                        match kind {
                            BlockKind::Compare => pairs.push(parse_comparison(&r, l)?),
                            _ => {
                                for (col, piece) in split_polys(l) {
                                    let p = Polynomial::parse(&r, piece)
                                        .map_err(|e| InputError::from_core(l.number, col, e))?;
                                    polys.push(p);
                                }
                            }
                        }
                        i += 1;
                    }
                    block = Some(match kind {
                        BlockKind::Ideal => Block::Ideal(
                            IdealGens::new(&r, polys).map_err(|e| InputError::new(start, 1, e.to_string()))?,
                        ),
                        BlockKind::Algebra => {
                            if let Some(p) = polys.iter().find(|p| p.is_constant()) {
                                return Err(InputError::new(start, 1, format!("constant generator `{p}`")));
                            }
                            Block::Algebra(
                                SubalgebraGens::new(&r, polys)
                                    .map_err(|e| InputError::new(start, 1, e.to_string()))?,
                            )
                        }
                        BlockKind::Compare => {
                            Block::Compare(ComparisonSet::new(r.nvars(), pairs).map_err(|e| InputError::new(start, 1, e.to_string()))?)
                        }
                    });
                }
                "end" => return Err(line.err(line.indent(), "`end` without an open block")),
                "cap" => params.cap = Some(parse_number(line, rest, rest_col)?),
                "dmax" => params.dmax = Some(parse_number(line, rest, rest_col)?),
                "jmax" => params.jmax = Some(parse_number(line, rest, rest_col)?),
                "freeness-bound" => params.freeness_bound = Some(parse_number(line, rest, rest_col)?),
                "fiber" => params.fiber = Some(parse_coeff(rest).map_err(|m| line.err(rest_col, m))?),
                other => return Err(line.err(line.indent(), format!("unknown keyword `{other}`"))),
            }
            i += 1;
        }
        let ring = ring.ok_or_else(|| InputError::general("missing `ring` declaration"))?;
        let block = block.ok_or_else(|| InputError::general("missing `ideal`, `algebra` or `compare` block"))?;
        let (order, order_text) = match order {
            Some((ln, col, text)) => {
                let o = OrderSpec::parse(&text, &ring).map_err(|e| InputError::new(ln, col + 1, e.to_string()))?;
                (o, text)
            }
            None => (OrderSpec::revlex(), "revlex".to_string()),
        };
        let weight = |w: Option<(usize, usize, String)>| -> Result<Option<WeightVector>, InputError> {
            w.map(|(ln, col, text)| parse_weight(&text, ring.nvars()).map_err(|m| InputError::new(ln, col + 1, m)))
                .transpose()
        };
        let weight_a = weight(weight_a)?;
        let weight_b = match (&block, weight(weight_b)?) {
            (Block::Algebra(g), Some(b)) if b.len() != g.ring().nvars() => {
                return Err(InputError::general("weight b must have one entry per variable"))
            }
            (_, b) => b,
        };
        Ok(Problem { ring, order, order_text, weight_a, weight_b, block, params })
    }
}

fn parse_number<T: std::str::FromStr>(line: &Line, rest: &str, col: usize) -> Result<T, InputError> {
    rest.parse::<T>().map_err(|_| line.err(col, format!("`{rest}` is not a nonnegative integer")))
}
