//! Exact sparse multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] always stores its terms strictly descending under the
//! degree-lexicographic order with the natural variable order, whatever
//! monomial order a computation happens to use. Equality is therefore
//! structural. Active orders only matter inside algorithms and when printing
//! (see [`crate::order`]).

mod parse;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use parse::parse_polynomial;

/// Exact rational coefficient, always in lowest terms with positive denominator.
pub type Coeff = BigRational;

/// Shared handle to a polynomial ring.
pub type Ring = Arc<PolyRing>;

/// `K[X_1, ..., X_n]`, optionally with a distinguished homogenizing variable
/// stored last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
    has_homvar: bool,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<I, S>(names: I) -> Result<Ring>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::build(names.into_iter().map(Into::into).collect(), false)
    }

    /// Ring whose last variable `homvar` is the homogenizing variable.
    pub fn with_homvar<I, S>(names: I, homvar: &str) -> Result<Ring>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        names.push(homvar.to_string());
        Self::build(names, true)
    }

    fn build(names: Vec<String>, has_homvar: bool) -> Result<Ring> {
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("`{name}` is not a valid variable name")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("variable `{name}` declared twice")));
            }
        }
        Ok(Arc::new(PolyRing { names, has_homvar }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Number of variables excluding the homogenizing variable.
    pub fn base_nvars(&self) -> usize {
        self.names.len() - usize::from(self.has_homvar)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn homvar(&self) -> Option<usize> {
        self.has_homvar.then(|| self.names.len() - 1)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `S = R[t]`. Picks `t`, or `t` followed by underscores if `t` is taken.
    pub fn extend(&self) -> Result<Ring> {
        if self.has_homvar {
            return Err(Error::InvalidRing("ring already has a homogenizing variable".into()));
        }
        let mut t = String::from("t");
        while self.names.contains(&t) {
            t.push('_');
        }
        PolyRing::with_homvar(self.names.iter().cloned(), &t)
    }

    /// Drop the homogenizing variable.
    pub fn base_ring(&self) -> Result<Ring> {
        if !self.has_homvar {
            return Err(Error::InvalidRing("ring has no homogenizing variable".into()));
        }
        PolyRing::new(self.names[..self.names.len() - 1].iter().cloned())
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn check_same_ring(a: &Ring, b: &Ring) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!(
            "[{}] vs [{}]",
            a.names().join(","),
            b.names().join(",")
        )))
    }
}

/// Strictly positive integral grading vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidWeight("empty weight vector".into()));
        }
        if entries.contains(&0) {
            return Err(Error::InvalidWeight(format!("entries must be positive, got {entries:?}")));
        }
        Ok(WeightVector(entries))
    }

    pub fn ones(n: usize) -> Self {
        WeightVector(vec![1; n])
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `a' = (a_1, ..., a_n, 1)`.
    pub fn extended(&self) -> Self {
        let mut e = self.0.clone();
        e.push(1);
        WeightVector(e)
    }

    pub fn dot(&self, exps: &[u32]) -> u128 {
        self.0
            .iter()
            .zip(exps)
            .map(|(&w, &e)| u128::from(w) * u128::from(e))
            .sum()
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() == n {
            Ok(())
        } else {
            Err(Error::InvalidWeight(format!(
                "weight has {} entries, ring has {n} variables",
                self.0.len()
            )))
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Power product `X^alpha` as a dense exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn weighted_degree(&self, a: &WeightVector) -> u128 {
        a.dot(&self.0)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn fmt_with(&self, ring: &PolyRing) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ring.names()[i].clone()),
                _ => parts.push(format!("{}^{}", ring.names()[i], e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// All monomials of `a`-degree exactly `d`, in ascending canonical order.
pub fn monomials_of_weighted_degree(a: &WeightVector, d: u128) -> Vec<Monomial> {
    fn rec(a: &[u64], i: usize, left: u128, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == a.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let w = u128::from(a[i]);
        let mut e = 0u32;
        loop {
            let used = w * u128::from(e);
            if used > left {
                break;
            }
            cur[i] = e;
            rec(a, i + 1, left - used, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; a.len()];
    rec(a.entries(), 0, d, &mut cur, &mut out);
    out.sort_by(|x, y| canonical_cmp(&x.0, &y.0));
    out
}

/// Degree-lexicographic comparison with `X_1 > ... > X_n`: the canonical
/// storage order.
pub(crate) fn canonical_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub(crate) coeff: Coeff,
    pub(crate) mono: Monomial,
}

impl Term {
    pub fn new(coeff: Coeff, mono: Monomial) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::InvalidArgument("term coefficient must be nonzero".into()));
        }
        Ok(Term { coeff, mono })
    }

    pub fn coeff(&self) -> &Coeff {
        &self.coeff
    }

    pub fn monomial(&self) -> &Monomial {
        &self.mono
    }
}

#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Coeff::one(), Monomial::var(ring.nvars(), i))
    }

    pub fn monomial(ring: &Ring, c: Coeff, m: Monomial) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![Term { coeff: c, mono: m }] }
    }

    /// Builds the canonical form: like monomials combined, zeros dropped,
    /// terms sorted.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Coeff, Monomial)>,
    {
        let n = ring.nvars();
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (c, m) in terms {
            if m.nvars() != n {
                return Err(Error::RingMismatch(format!(
                    "monomial with {} exponents in a ring with {n} variables",
                    m.nvars()
                )));
            }
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        Ok(Self::from_map(ring, acc))
    }

    fn from_map(ring: &Ring, acc: HashMap<Monomial, Coeff>) -> Self {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        terms.sort_by(|a, b| canonical_cmp(&b.mono.0, &a.mono.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Terms already combined and nonzero, in any order.
    pub(crate) fn from_distinct_terms(ring: &Ring, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| canonical_cmp(&b.mono.0, &a.mono.0));
        debug_assert!(terms.windows(2).all(|w| w[0].mono != w[1].mono));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        parse_polynomial(ring, text)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Number of terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.mono)
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|t| &t.mono == m)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Coeff::zero)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        Ok(self.combine(other, true))
    }

    fn combine(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let negate = |c: &Coeff| if subtract { -c.clone() } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match canonical_cmp(&a.mono.0, &b.mono.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { coeff: negate(&b.coeff), mono: b.mono.clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { &a.coeff - &b.coeff } else { &a.coeff + &b.coeff };
                    if !c.is_zero() {
                        out.push(Term { coeff: c, mono: a.mono.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|t| Term { coeff: negate(&t.coeff), mono: t.mono.clone() }));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    /// Product in canonical form. Fails only if the rings differ.
    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.num_terms() * other.num_terms());
        for a in &self.terms {
            for b in &other.terms {
                *acc.entry(a.mono.mul(&b.mono)).or_insert_with(Coeff::zero) += &a.coeff * &b.coeff;
            }
        }
        Ok(Self::from_map(&self.ring, acc))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Coeff::one())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, mono: t.mono.clone() })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // Multiplying by a monomial preserves the degree-lexicographic order.
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: &t.coeff * c, mono: t.mono.mul(m) })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn total_degree(&self) -> Result<u64> {
        self.terms
            .iter()
            .map(|t| t.mono.degree())
            .max()
            .ok_or(Error::ZeroPolynomial("degree"))
    }

    /// Largest `a`-degree of a monomial of `self`.
    pub fn a_degree(&self, a: &WeightVector) -> Result<u128> {
        a.check_len(self.ring.nvars())?;
        self.terms
            .iter()
            .map(|t| a.dot(&t.mono.0))
            .max()
            .ok_or(Error::ZeroPolynomial("a-degree"))
    }

    /// Sum of the terms of maximal `a`-degree.
    pub fn initial_form(&self, a: &WeightVector) -> Result<Polynomial> {
        let top = self.a_degree(a)?;
        let terms = self.terms.iter().filter(|t| a.dot(&t.mono.0) == top).cloned().collect();
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// True if every term has the same `a`-degree (the zero polynomial counts).
    pub fn is_homogeneous(&self, a: &WeightVector) -> bool {
        let mut degs = self.terms.iter().map(|t| a.dot(&t.mono.0));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// `hom_a(f) = sum c_i m_i t^(a(f) - a(m_i))` in `S = R[t]`, built on a
    /// fresh extended ring (see [`PolyRing::extend`]).
    pub fn homogenize(&self, a: &WeightVector) -> Result<Polynomial> {
        let ext = self.ring.extend()?;
        self.homogenize_into(a, &ext)
    }

    /// As [`Polynomial::homogenize`] with an explicit target ring, which must
    /// be this ring extended by a homogenizing variable.
    pub fn homogenize_into(&self, a: &WeightVector, ext: &Ring) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if ext.homvar().is_none() || ext.nvars() != n + 1 || ext.names()[..n] != self.ring.names()[..] {
            return Err(Error::RingMismatch("target is not the source ring extended by t".into()));
        }
        let top = self.a_degree(a)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let gap = top - a.dot(&t.mono.0);
            let gap = u32::try_from(gap).map_err(|_| Error::ExponentOverflow)?;
            let mut e = t.mono.0.clone();
            e.push(gap);
            terms.push(Term { coeff: t.coeff.clone(), mono: Monomial(e) });
        }
        Ok(Polynomial::from_distinct_terms(ext, terms))
    }

    /// Substitute `t -> c` and land in the base ring.
    pub fn specialize_t(&self, c: &Coeff) -> Result<Polynomial> {
        let base = self.ring.base_ring()?;
        self.specialize_t_into(c, &base)
    }

    pub fn specialize_t_into(&self, c: &Coeff, base: &Ring) -> Result<Polynomial> {
        let tv = self
            .ring
            .homvar()
            .ok_or_else(|| Error::InvalidRing("ring has no homogenizing variable".into()))?;
        if base.nvars() != tv || base.names() != &self.ring.names()[..tv] {
            return Err(Error::RingMismatch("target is not the base ring".into()));
        }
        let terms = self.terms.iter().map(|t| {
            let e = t.mono.0[tv];
            let factor = num_traits::pow(c.clone(), e as usize);
            (&t.coeff * factor, Monomial(t.mono.0[..tv].to_vec()))
        });
        Polynomial::from_terms(base, terms)
    }

    /// Evaluate `self(Y_1 -> images[0], ...)` where `images` live in a common ring.
    pub fn substitute(&self, images: &[Polynomial], target: &Ring) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::RingMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        for img in images {
            check_same_ring(img.ring(), target)?;
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut result = Polynomial::zero(target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(target, t.coeff.clone());
            for (i, &e) in t.mono.0.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    prod = &prod * &powers[i][e];
                }
            }
            result = &result + &prod;
        }
        Ok(result)
    }

    /// Re-embed into `target`, sending variable `i` to variable `map[i]`.
    pub fn map_variables(&self, target: &Ring, map: &[usize]) -> Result<Polynomial> {
        if map.len() != self.ring.nvars() || map.iter().any(|&j| j >= target.nvars()) {
            return Err(Error::RingMismatch("variable map does not fit the rings".into()));
        }
        let m = target.nvars();
        let terms = self.terms.iter().map(|t| {
            let mut e = vec![0u32; m];
            for (i, &x) in t.mono.0.iter().enumerate() {
                e[map[i]] += x;
            }
            (t.coeff.clone(), Monomial(e))
        });
        Polynomial::from_terms(target, terms)
    }

    /// Human-readable form with terms in canonical order.
    pub fn to_text(&self) -> String {
        format_terms(&self.ring, self.terms.iter())
    }
}

pub(crate) fn format_coeff(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn format_terms<'a>(ring: &PolyRing, terms: impl Iterator<Item = &'a Term>) -> String {
    let mut out = String::new();
    for (k, t) in terms.enumerate() {
        let neg = t.coeff.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = t.coeff.abs();
        if t.mono.is_one() {
            out.push_str(&format_coeff(&abs));
        } else if abs.is_one() {
            out.push_str(&t.mono.fmt_with(ring));
        } else {
            out.push_str(&format_coeff(&abs));
            out.push('*');
            out.push_str(&t.mono.fmt_with(ring));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl std::ops::$trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// Panics if the operands live in different rings; use the
            /// `try_*` methods to get an error instead.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

pub fn rational(n: i64, d: i64) -> Coeff {
    Coeff::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Ring {
        PolyRing::new(names.iter().copied()).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn ring_rejects_bad_names() {
        assert!(PolyRing::new(Vec::<String>::new()).is_err());
        assert!(PolyRing::new(["x", "x"]).is_err());
        assert!(PolyRing::new(["1x"]).is_err());
        let s = PolyRing::with_homvar(["x", "y"], "t").unwrap();
        assert_eq!(s.homvar(), Some(2));
        assert_eq!(s.base_nvars(), 2);
    }

    #[test]
    fn extend_avoids_clashing_names() {
        let r = ring(&["t", "x"]);
        let s = r.extend().unwrap();
        assert_eq!(s.names(), &["t", "x", "t_"]);
        assert!(s.extend().is_err());
    }

    #[test]
    fn multiply_examples() {
        let r = ring(&["x", "y"]);
        assert!((&p(&r, "x + y") * &Polynomial::zero(&r)).is_zero());
        assert_eq!(&p(&r, "x + y") * &p(&r, "x - y"), p(&r, "x^2 - y^2"));
        let prod = &(&p(&r, "x + y") * &p(&r, "x*y")) * &p(&r, "x*y^2");
        assert_eq!(prod, p(&r, "x^3*y^3 + x^2*y^4"));
    }

    #[test]
    fn multiply_rejects_foreign_ring() {
        let r = ring(&["x", "y"]);
        let s = ring(&["x", "z"]);
        assert!(matches!(p(&r, "x").try_mul(&p(&s, "x")), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn a_degree_examples() {
        let r = ring(&["x1", "x2", "x3", "x4"]);
        let f = p(&r, "x1 + x2*x4 + x3^2");
        assert_eq!(f.a_degree(&WeightVector::ones(4)).unwrap(), 2);
        assert_eq!(Polynomial::one(&r).a_degree(&WeightVector::new(vec![5, 1, 2, 3]).unwrap()).unwrap(), 0);
        let r3 = ring(&["x", "y", "z"]);
        let a = WeightVector::new(vec![3, 2, 1]).unwrap();
        assert_eq!(p(&r3, "x^2 - z^2").a_degree(&a).unwrap(), 6);
        assert_eq!(Polynomial::zero(&r3).a_degree(&a), Err(Error::ZeroPolynomial("a-degree")));
    }

    #[test]
    fn initial_form_examples() {
        let r = ring(&["x1", "x2", "x3", "x4"]);
        let f = p(&r, "x1 + x2*x4 + x3^2");
        assert_eq!(f.initial_form(&WeightVector::ones(4)).unwrap(), p(&r, "x2*x4 + x3^2"));
        let h = p(&r, "x1*x2 - 3*x3^2");
        assert_eq!(h.initial_form(&WeightVector::ones(4)).unwrap(), h);
        let r3 = ring(&["x", "y", "z"]);
        let a = WeightVector::new(vec![3, 2, 1]).unwrap();
        assert_eq!(p(&r3, "x^2 - z^2").initial_form(&a).unwrap(), p(&r3, "x^2"));
        assert!(Polynomial::zero(&r3).initial_form(&a).is_err());
    }

    #[test]
    fn homogenize_examples() {
        let r = ring(&["x", "y"]);
        let s = r.extend().unwrap();
        let one = WeightVector::ones(2);
        assert_eq!(p(&r, "x^2 + y").homogenize_into(&one, &s).unwrap(), p(&s, "x^2 + y*t"));
        let h = p(&r, "x^2 - x*y");
        assert_eq!(h.homogenize_into(&one, &s).unwrap(), p(&s, "x^2 - x*y"));
        let r3 = ring(&["x", "y", "z"]);
        let a = WeightVector::new(vec![3, 2, 1]).unwrap();
        let hz = p(&r3, "x^2 - z^2").homogenize(&a).unwrap();
        assert_eq!(hz.to_text(), "-z^2*t^4 + x^2");
        assert!(Polynomial::zero(&r).homogenize(&one).is_err());
    }

    #[test]
    fn specialize_examples() {
        let r = ring(&["x", "y"]);
        let s = r.extend().unwrap();
        let f = p(&s, "x^2 - y*t");
        assert_eq!(f.specialize_t(&integer(0)).unwrap(), p(&r, "x^2"));
        assert_eq!(f.specialize_t(&integer(1)).unwrap(), p(&r, "x^2 - y"));
        let r3 = ring(&["x", "y", "z"]);
        let s3 = r3.extend().unwrap();
        assert_eq!(p(&s3, "x^2 - z^2*t^4").specialize_t(&integer(2)).unwrap(), p(&r3, "x^2 - 16*z^2"));
        assert!(p(&r, "x").specialize_t(&integer(1)).is_err());
    }

    #[test]
    fn substitute_checks_relation() {
        let y = ring(&["Y1", "Y2", "Y3"]);
        let r = ring(&["x", "y"]);
        let rel = p(&y, "Y1*Y3 - Y2^2");
        let imgs = vec![p(&r, "x^2"), p(&r, "x*y"), p(&r, "y^2")];
        assert!(rel.substitute(&imgs, &r).unwrap().is_zero());
    }

    #[test]
    fn display_conventions() {
        let r = ring(&["x", "y"]);
        assert_eq!(p(&r, "1/3 + x^2 - 2 x y").to_text(), "x^2 - 2*x*y + 1/3");
        assert_eq!(p(&r, "-x + 2/4*y").to_text(), "-x + 1/2*y");
        assert_eq!(Polynomial::zero(&r).to_text(), "0");
    }
}
