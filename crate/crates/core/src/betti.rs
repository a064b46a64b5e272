//! Graded Betti numbers `beta_{i,j} = dim Tor_i(R/I, K)_j` from the strands
//! of the Koszul complex `K(x_1, ..., x_n) (x) R/I`, with exact ranks.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, IdealGens, ReducedGroebnerBasis};
use crate::hilbert::hilbert_series_monomial;
use crate::linalg::{Echelon, SparseRow};
use crate::order::OrderSpec;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{monomials_of_weighted_degree, Coeff, Monomial, Polynomial, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    /// Nonzero entries keyed by `(i, j)`.
    entries: BTreeMap<(usize, u64), u64>,
    j_max: u64,
    complete: bool,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u64), u64> {
        &self.entries
    }

    pub fn j_max(&self) -> u64 {
        self.j_max
    }

    /// Whether every nonzero `beta_{i,j}` is known to lie in `j <= j_max`.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Total Betti numbers `beta_i = sum_j beta_{i,j}`, for `i = 0..=n`.
    pub fn totals(&self) -> Vec<u64> {
        let mut t = vec![0u64; self.nvars + 1];
        for (&(i, _), &b) in &self.entries {
            t[i] += b;
        }
        t
    }

    /// `sum_{i,j} (-1)^i beta_{i,j} t^j`, the numerator of the Hilbert
    /// series over `(1-t)^n`.
    pub fn euler_numerator(&self) -> Vec<BigInt> {
        let mut num = vec![BigInt::zero(); self.j_max as usize + 1];
        for (&(i, j), &b) in &self.entries {
            let v = BigInt::from(b);
            if i % 2 == 0 {
                num[j as usize] += v;
            } else {
                num[j as usize] -= v;
            }
        }
        while num.len() > 1 && num.last().is_some_and(Zero::is_zero) {
            num.pop();
        }
        num
    }

    /// Conventional layout: column `i`, row `j - i`.
    pub fn to_text(&self) -> String {
        let cols = self.entries.keys().map(|&(i, _)| i).max().map_or(1, |m| m + 1);
        let rows = self.entries.keys().map(|&(i, j)| j - i as u64).max().map_or(1, |m| m + 1);
        let totals = self.totals();
        let mut cells: Vec<Vec<String>> = Vec::new();
        cells.push(std::iter::once(String::new()).chain((0..cols).map(|i| i.to_string())).collect());
        cells.push(std::iter::once("total:".to_string()).chain(totals[..cols].iter().map(u64::to_string)).collect());
        for r in 0..rows {
            let mut line = vec![format!("{r}:")];
            for i in 0..cols {
                let b = self.get(i, r + i as u64);
                line.push(if b == 0 { "-".to_string() } else { b.to_string() });
            }
            cells.push(line);
        }
        let widths: Vec<usize> =
            (0..=cols).map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for row in &cells {
            let mut line = String::new();
            for (c, cell) in row.iter().enumerate() {
                if c > 0 {
                    line.push(' ');
                }
                let _ = write!(line, "{cell:>w$}", w = widths[c]);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        if !self.complete {
            let _ = writeln!(out, "incomplete: entries beyond degree {} may be missing", self.j_max);
        }
        out
    }
}

/// Largest internal degree in which a Betti number of `R/I` can be nonzero:
/// the degree of the lcm of the minimal generators of `ini(I)`. The Taylor
/// complex bounds `R/ini(I)`, and `R/I` is bounded by `R/ini(I)`.
pub fn betti_degree_bound(ideal: &IdealGens) -> Result<u64> {
    ideal.require_graded(&WeightVector::ones(ideal.ring().nvars()))?;
    let gb = buchberger(ideal, &OrderSpec::revlex())?;
    Ok(gb.initial_ideal().lcm().degree())
}

struct Strands<'a> {
    n: usize,
    gb: &'a ReducedGroebnerBasis,
    ones: WeightVector,
    ini: MonomialIdeal,
    standard: HashMap<u64, Vec<Monomial>>,
}

impl Strands<'_> {
    fn standard(&mut self, d: u64) -> &[Monomial] {
        let (ini, ones) = (&self.ini, &self.ones);
        self.standard.entry(d).or_insert_with(|| {
            monomials_of_weighted_degree(ones, u128::from(d)).into_iter().filter(|m| !ini.contains(m)).collect()
        })
    }

    /// Rank of `d_i: K_{i,j} -> K_{i-1,j}`, where `K_{i,j}` has basis
    /// `m e_S` with `|S| = i` and `m` standard of degree `j - i`.
    fn rank(&mut self, i: usize, j: u64) -> Result<usize> {
        if i == 0 || i > self.n || (i as u64) > j {
            return Ok(0);
        }
        let sources = self.standard(j - i as u64).to_vec();
        if sources.is_empty() {
            return Ok(0);
        }
        let ring = self.gb.ring().clone();
        let mut echelon: Echelon<(Vec<usize>, Monomial)> = Echelon::new();
        for s in subsets(self.n, i) {
            for m in &sources {
                let mut row: SparseRow<(Vec<usize>, Monomial)> = SparseRow::new();
                for (pos, &k) in s.iter().enumerate() {
                    let xm = Polynomial::monomial(&ring, Coeff::one(), m.mul(&Monomial::var(self.n, k)));
                    let nf = self.gb.normal_form(&xm)?;
                    let face: Vec<usize> = s.iter().copied().filter(|&v| v != k).collect();
                    for t in nf.terms() {
                        let c = if pos % 2 == 0 { t.coeff().clone() } else { -t.coeff().clone() };
                        let key = (face.clone(), t.monomial().clone());
                        let e = row.entry(key).or_insert_with(Zero::zero);
                        *e += c;
                    }
                }
                echelon.insert(row);
            }
        }
        Ok(echelon.rank())
    }

    fn dim(&mut self, i: usize, j: u64) -> usize {
        if i > self.n || (i as u64) > j {
            return 0;
        }
        binomial(self.n, i) * self.standard(j - i as u64).len()
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Betti numbers of `R/I` in internal degrees `j <= j_max`. The table is
/// marked complete when the numerator `H_{R/I}(t) (1-t)^n` has no term
/// beyond `j_max` and `j_max` reaches the lcm bound of [`betti_degree_bound`].
pub fn graded_betti(ideal: &IdealGens, j_max: u64) -> Result<BettiTable> {
    let n = ideal.ring().nvars();
    let ones = WeightVector::ones(n);
    ideal.require_graded(&ones)?;
    let gb = buchberger(ideal, &OrderSpec::revlex())?;
    if gb.is_unit_ideal() {
        return Err(Error::Precondition("Betti numbers need a proper ideal".into()));
    }
    let ini = gb.initial_ideal();
    let series = hilbert_series_monomial(&ini, &ones)?;
    let numerator = series.numerator().to_vec();
    let mut strands = Strands { n, gb: &gb, ones, ini: ini.clone(), standard: HashMap::new() };
    let mut entries = BTreeMap::new();
    for j in 0..=j_max {
        // ranks[i] = rank of d_i on the degree-j strand; d_0 = d_{n+1} = 0.
        let mut ranks = vec![0usize; n + 2];
        for (i, r) in ranks.iter_mut().enumerate().take(n + 1).skip(1) {
            *r = strands.rank(i, j)?;
        }
        let mut euler = BigInt::zero();
        for i in 0..=n {
            let beta = strands.dim(i, j) - ranks[i] - ranks[i + 1];
            if beta > 0 {
                entries.insert((i, j), beta as u64);
            }
            let b = BigInt::from(beta);
            if i % 2 == 0 {
                euler += b;
            } else {
                euler -= b;
            }
        }
        let expected = numerator.get(j as usize).cloned().unwrap_or_default();
        if euler != expected {
            return Err(Error::Inconsistency(format!(
                "Euler characteristic {euler} of the degree-{j} strand differs from the Hilbert numerator {expected}"
            )));
        }
    }
    let beyond = numerator.iter().enumerate().any(|(d, c)| d as u64 > j_max && !c.is_zero());
    let complete = !beyond && j_max >= ini.lcm().degree();
    Ok(BettiTable { nvars: n, entries, j_max, complete })
}

/// `(projdim, reg)` of `R/I` from a complete table.
pub fn projdim_and_reg(table: &BettiTable) -> Result<(usize, u64)> {
    if !table.complete {
        return Err(Error::IncompleteTable(table.j_max as usize));
    }
    let pd = table.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
    let reg = table.entries.keys().map(|&(i, j)| j - i as u64).max().unwrap_or(0);
    Ok((pd, reg))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiComparison {
    pub ideal: BettiTable,
    pub initial: BettiTable,
    pub projdim: (usize, usize),
    pub reg: (u64, u64),
}

impl BettiComparison {
    pub fn is_equality(&self) -> bool {
        self.ideal.entries == self.initial.entries
    }
}

/// Tables of `R/I` and `R/ini(I)` and the entrywise inequality between them.
/// `j_max = None` uses [`betti_degree_bound`]. A violated inequality is
/// reported as an [`Error::Inconsistency`].
pub fn betti_comparison(ideal: &IdealGens, ord: &OrderSpec, j_max: Option<u64>) -> Result<BettiComparison> {
    let n = ideal.ring().nvars();
    ideal.require_graded(&WeightVector::ones(n))?;
    let gb = buchberger(ideal, ord)?;
    let ini_gens: Vec<Polynomial> = gb
        .leading_monomials()
        .into_iter()
        .map(|m| Polynomial::monomial(ideal.ring(), Coeff::one(), m))
        .collect();
    let ini = IdealGens::new(ideal.ring(), ini_gens)?;
    let j_max = match j_max {
        Some(j) => j,
        None => gb.initial_ideal().lcm().degree(),
    };
    let first = graded_betti(ideal, j_max)?;
    let second = graded_betti(&ini, j_max)?;
    let (pd1, reg1) = projdim_and_reg(&first)?;
    let (pd2, reg2) = projdim_and_reg(&second)?;
    for (&(i, j), &b) in first.entries() {
        if b > second.get(i, j) {
            return Err(Error::Inconsistency(format!(
                "beta_{{{i},{j}}} = {b} exceeds {} for the initial ideal",
                second.get(i, j)
            )));
        }
    }
    if pd1 > pd2 || reg1 > reg2 {
        return Err(Error::Inconsistency(format!(
            "projdim/reg ({pd1}, {reg1}) exceed ({pd2}, {reg2}) of the initial ideal"
        )));
    }
    Ok(BettiComparison { ideal: first, initial: second, projdim: (pd1, pd2), reg: (reg1, reg2) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{PolyRing, Ring};

    fn ring(names: &[&str]) -> Ring {
        PolyRing::new(names.iter().copied()).unwrap()
    }

    fn table(r: &Ring, gens: &[&str], j_max: u64) -> BettiTable {
        graded_betti(&IdealGens::parse(r, gens).unwrap(), j_max).unwrap()
    }

    fn nonzero(t: &BettiTable) -> Vec<((usize, u64), u64)> {
        t.entries().iter().map(|(&k, &v)| (k, v)).collect()
    }

    #[test]
    fn koszul_and_small_monomial_ideals() {
        let r = ring(&["x", "y"]);
        let t = table(&r, &["x", "y"], 4);
        assert_eq!(nonzero(&t), [((0, 0), 1), ((1, 1), 2), ((2, 2), 1)]);
        assert_eq!(projdim_and_reg(&t).unwrap(), (2, 0));
        let t = table(&r, &["x^2", "x*y"], 4);
        assert_eq!(nonzero(&t), [((0, 0), 1), ((1, 2), 2), ((2, 3), 1)]);
        assert_eq!(projdim_and_reg(&t).unwrap(), (2, 1));
        let t = graded_betti(&IdealGens::zero(&r), 3).unwrap();
        assert_eq!(nonzero(&t), [((0, 0), 1)]);
        assert_eq!(projdim_and_reg(&t).unwrap(), (0, 0));
    }

    #[test]
    fn truncated_tables_are_incomplete() {
        let r = ring(&["x", "y"]);
        let t = table(&r, &["x^2", "x*y"], 2);
        assert!(!t.is_complete());
        assert!(matches!(projdim_and_reg(&t), Err(Error::IncompleteTable(2))));
    }

    #[test]
    fn comparisons() {
        let r = ring(&["x", "y"]);
        let c = betti_comparison(&IdealGens::parse(&r, &["x^2 - y^2"]).unwrap(), &OrderSpec::lex(), None).unwrap();
        assert!(c.is_equality());
        assert_eq!(c.ideal.get(1, 2), 1);
        let r3 = ring(&["x", "y", "z"]);
        let i = IdealGens::parse(&r3, &["x^2 - y*z", "x*y"]).unwrap();
        let c = betti_comparison(&i, &OrderSpec::deglex(), None).unwrap();
        assert!(c.projdim.0 <= c.projdim.1 && c.reg.0 <= c.reg.1);
        // A complete intersection of two quadrics: 1, 2 in degree 2, 1 in degree 4.
        assert_eq!(nonzero(&c.ideal), [((0, 0), 1), ((1, 2), 2), ((2, 4), 1)]);
        assert!(!c.is_equality());
        let mono = IdealGens::parse(&r3, &["x^2", "x*y", "y*z"]).unwrap();
        assert!(betti_comparison(&mono, &OrderSpec::revlex(), None).unwrap().is_equality());
    }

    #[test]
    fn rejects_inhomogeneous_input() {
        let r = ring(&["x", "y"]);
        assert!(graded_betti(&IdealGens::parse(&r, &["x^2 - y"]).unwrap(), 3).is_err());
    }

    #[test]
    fn layout() {
        let r = ring(&["x", "y"]);
        let t = table(&r, &["x^2", "x*y"], 4);
        assert_eq!(t.to_text(), "       0 1 2\ntotal: 1 2 1\n    0: 1 - -\n    1: - 2 1\n");
    }
}
