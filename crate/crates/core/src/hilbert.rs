//! Hilbert series of weighted monomial quotients by pivot splitting, Hilbert
//! functions, Krull dimension of monomial quotients, the Hilbert-function
//! transfer check and the h-vector symmetry certificate.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groebner::{initial_ideal, IdealGens};
use crate::monomial_ideal::MonomialIdeal;
use crate::order::OrderSpec;
use crate::poly::{Monomial, WeightVector};

/// `N(t) / prod_i (1 - t^{d_i})` with an integer numerator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    /// Coefficients from `t^0` upward, without trailing zeros.
    numerator: Vec<BigInt>,
    denom_degrees: Vec<u64>,
}

/// Hilbert function values for degrees `0..=d_max`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertFunctionTable {
    pub values: Vec<u128>,
}

impl HilbertFunctionTable {
    pub fn d_max(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    /// `1,1,2,3,...`
    pub fn to_csv(&self) -> String {
        let v: Vec<String> = self.values.iter().map(u128::to_string).collect();
        v.join(",")
    }
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

/// `1 - t^d`.
fn one_minus(d: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); d + 1];
    v[0] = BigInt::one();
    v[d] -= BigInt::one();
    trim(v)
}

/// Exact quotient by `1 - t^d`, if it exists.
fn div_one_minus(a: &[BigInt], d: usize) -> Option<Vec<BigInt>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() <= d {
        return None;
    }
    let qlen = a.len() - d;
    let mut q = vec![BigInt::zero(); qlen];
    for i in 0..qlen {
        q[i] = a[i].clone();
        if i >= d {
            let prev = q[i - d].clone();
            q[i] += prev;
        }
    }
    // Remainder coefficients must vanish.
    for i in qlen..a.len() {
        let mut r = a[i].clone();
        if i >= d && i - d < qlen {
            r += &q[i - d];
        }
        if !r.is_zero() {
            return None;
        }
    }
    Some(trim(q))
}

fn to_usize(d: u128) -> Result<usize> {
    usize::try_from(d).map_err(|_| Error::InvalidWeight("degree too large for a Hilbert series".into()))
}

impl HilbertSeries {
    pub fn new(numerator: Vec<BigInt>, denom_degrees: Vec<u64>) -> Result<Self> {
        if denom_degrees.contains(&0) {
            return Err(Error::InvalidArgument("denominator degrees must be positive".into()));
        }
        let mut denom_degrees = denom_degrees;
        denom_degrees.sort_unstable();
        Ok(HilbertSeries { numerator: trim(numerator), denom_degrees })
    }

    pub fn from_i64(numerator: &[i64], denom_degrees: &[u64]) -> Result<Self> {
        Self::new(numerator.iter().map(|&c| BigInt::from(c)).collect(), denom_degrees.to_vec())
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denom_degrees(&self) -> &[u64] {
        &self.denom_degrees
    }

    /// Power series coefficients for degrees `0..=d_max`.
    pub fn expand(&self, d_max: usize) -> Result<HilbertFunctionTable> {
        let mut series: Vec<BigInt> = (0..=d_max).map(|i| self.numerator.get(i).cloned().unwrap_or_default()).collect();
        for &d in &self.denom_degrees {
            let d = d as usize;
            for i in d..=d_max {
                let prev = series[i - d].clone();
                series[i] += prev;
            }
        }
        let values = series
            .into_iter()
            .map(|c| {
                if c.is_negative() {
                    return Err(Error::Inconsistency("negative Hilbert function value".into()));
                }
                c.to_u128().ok_or_else(|| Error::Inconsistency("Hilbert function value overflow".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HilbertFunctionTable { values })
    }

    /// Cancel denominator factors `1 - t^d` that divide the numerator.
    pub fn reduced(&self) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let mut denoms = self.denom_degrees.clone();
        loop {
            let hit = denoms.iter().position(|&d| div_one_minus(&num, d as usize).is_some());
            match hit {
                Some(k) if !num.is_empty() => {
                    num = div_one_minus(&num, denoms[k] as usize).expect("checked");
                    denoms.remove(k);
                }
                _ => break,
            }
        }
        HilbertSeries { numerator: num, denom_degrees: denoms }
    }

    fn numerator_root_multiplicity_at_one(&self) -> usize {
        let mut num = self.numerator.clone();
        let mut k = 0;
        while !num.is_empty() {
            let at_one: BigInt = num.iter().sum();
            if !at_one.is_zero() {
                break;
            }
            num = div_one_minus(&num, 1).expect("t = 1 is a root");
            k += 1;
        }
        k
    }

    /// Order of the pole at `t = 1`, which is the Krull dimension.
    pub fn pole_order_at_one(&self) -> usize {
        if self.numerator.is_empty() {
            return 0;
        }
        self.denom_degrees.len().saturating_sub(self.numerator_root_multiplicity_at_one())
    }

    pub fn to_text(&self) -> String {
        let mut num = String::new();
        for (i, c) in self.numerator.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if num.is_empty() {
                if neg {
                    num.push('-');
                }
            } else {
                num.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            match (i, abs.is_one()) {
                (0, _) => num.push_str(&abs.to_string()),
                (1, true) => num.push('t'),
                (1, false) => num.push_str(&format!("{abs}*t")),
                (_, true) => num.push_str(&format!("t^{i}")),
                (_, false) => num.push_str(&format!("{abs}*t^{i}")),
            }
        }
        if num.is_empty() {
            num.push('0');
        }
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for &d in &self.denom_degrees {
            *counts.entry(d).or_default() += 1;
        }
        let den: Vec<String> = counts
            .into_iter()
            .map(|(d, k)| {
                let f = if d == 1 { "(1-t)".to_string() } else { format!("(1-t^{d})") };
                if k == 1 {
                    f
                } else {
                    format!("{f}^{k}")
                }
            })
            .collect();
        if den.is_empty() {
            format!("({num}) / 1")
        } else {
            format!("({num}) / {}", den.join("*"))
        }
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// How the splitting recursion picks its pivot `x_i^e`; the variable is
/// always the one in the most minimal generators (lowest index on ties).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotStrategy {
    /// `e` is the smallest positive exponent of `x_i` among the generators.
    #[default]
    MinExponent,
    /// `e = 1`.
    Variable,
}

fn numerator_rec(ideal: &MonomialIdeal, a: &WeightVector, strategy: PivotStrategy) -> Result<Vec<BigInt>> {
    let gens = ideal.mingens();
    if gens.is_empty() {
        return Ok(vec![BigInt::one()]);
    }
    let n = ideal.nvars();
    let mut counts = vec![0usize; n];
    for g in gens {
        for i in g.support() {
            counts[i] += 1;
        }
    }
    let (pivot_var, &most) = counts
        .iter()
        .enumerate()
        .max_by(|(i, c), (j, d)| c.cmp(d).then(j.cmp(i)))
        .expect("at least one variable");
    if most <= 1 {
        // Pairwise coprime generators.
        let mut num = vec![BigInt::one()];
        for g in gens {
            num = poly_mul(&num, &one_minus(to_usize(a.dot(g.exponents()))?));
        }
        return Ok(num);
    }
    let e = match strategy {
        PivotStrategy::MinExponent => gens
            .iter()
            .map(|g| g.exponents()[pivot_var])
            .filter(|&e| e > 0)
            .min()
            .expect("pivot variable occurs"),
        PivotStrategy::Variable => 1,
    };
    let mut exps = vec![0u32; n];
    exps[pivot_var] = e;
    let pivot = Monomial::new(exps);
    let shift = to_usize(a.dot(pivot.exponents()))?;
    let sum = numerator_rec(&ideal.with_generator(pivot.clone()), a, strategy)?;
    let colon = numerator_rec(&ideal.colon(&pivot), a, strategy)?;
    let mut shifted = vec![BigInt::zero(); shift];
    shifted.extend(colon);
    Ok(poly_add(&sum, &trim(shifted)))
}

/// Hilbert series of `R/M` under the `a`-grading.
pub fn hilbert_series_monomial(ideal: &MonomialIdeal, a: &WeightVector) -> Result<HilbertSeries> {
    hilbert_series_monomial_with(ideal, a, PivotStrategy::default())
}

pub fn hilbert_series_monomial_with(
    ideal: &MonomialIdeal,
    a: &WeightVector,
    strategy: PivotStrategy,
) -> Result<HilbertSeries> {
    a.check_len(ideal.nvars())?;
    let numerator = numerator_rec(ideal, a, strategy)?;
    HilbertSeries::new(numerator, a.entries().to_vec())
}

pub fn hilbert_function(series: &HilbertSeries, d_max: usize) -> Result<HilbertFunctionTable> {
    series.expand(d_max)
}

/// `dim R/M`: the largest set of variables containing the support of no
/// minimal generator, found as `n` minus a minimum hitting set of the
/// generator supports.
pub fn krull_dim_monomial(ideal: &MonomialIdeal) -> usize {
    let supports: Vec<Vec<usize>> = ideal.mingens().iter().map(|g| g.support().collect()).collect();
    if supports.iter().any(Vec::is_empty) {
        // Unit ideal.
        return 0;
    }
    fn min_hitting(supports: &[Vec<usize>], chosen: &mut HashSet<usize>, best: &mut usize) {
        if chosen.len() >= *best {
            return;
        }
        match supports.iter().find(|s| !s.iter().any(|v| chosen.contains(v))) {
            None => *best = chosen.len(),
            Some(s) => {
                for &v in s {
                    chosen.insert(v);
                    min_hitting(supports, chosen, best);
                    chosen.remove(&v);
                }
            }
        }
    }
    let mut best = ideal.nvars();
    min_hitting(&supports, &mut HashSet::new(), &mut best);
    ideal.nvars() - best
}

/// Outcome of comparing the Hilbert functions of `R/ini(I)` for two orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertComparison {
    pub first_initial: MonomialIdeal,
    pub second_initial: MonomialIdeal,
    pub first: HilbertFunctionTable,
    pub second: HilbertFunctionTable,
    pub first_dim: usize,
    pub second_dim: usize,
}

impl HilbertComparison {
    pub fn functions_agree(&self) -> bool {
        self.first == self.second
    }

    pub fn dimensions_agree(&self) -> bool {
        self.first_dim == self.second_dim
    }
}

/// For a `b`-graded ideal, `R/I` and `R/ini(I)` share their Hilbert
/// function. The function of `R/I` is read off `ini_first(I)` and checked
/// against `ini_second(I)`; pass `OrderSpec::WeightRefined` to go through a
/// weight.
pub fn compare_hilbert(
    ideal: &IdealGens,
    b: &WeightVector,
    first: &OrderSpec,
    second: &OrderSpec,
    d_max: usize,
) -> Result<HilbertComparison> {
    ideal.require_graded(b)?;
    let first_initial = initial_ideal(ideal, first)?;
    let second_initial = initial_ideal(ideal, second)?;
    let h1 = hilbert_series_monomial(&first_initial, b)?;
    let h2 = hilbert_series_monomial(&second_initial, b)?;
    Ok(HilbertComparison {
        first: h1.expand(d_max)?,
        second: h2.expand(d_max)?,
        first_dim: krull_dim_monomial(&first_initial),
        second_dim: krull_dim_monomial(&second_initial),
        first_initial,
        second_initial,
    })
}

/// Counts the monomials of the semigroup generated by `gens`, by
/// `b`-degree, up to `d_max`.
pub fn semigroup_hilbert_function(gens: &[Monomial], b: &WeightVector, d_max: usize) -> Result<HilbertFunctionTable> {
    let n = b.len();
    if gens.iter().any(|g| g.nvars() != n) {
        return Err(Error::RingMismatch("generator arity differs from the grading".into()));
    }
    if gens.iter().any(Monomial::is_one) {
        return Err(Error::InvalidArgument("semigroup generators must be nonconstant".into()));
    }
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut frontier = vec![Monomial::one(n)];
    seen.insert(Monomial::one(n));
    while let Some(m) = frontier.pop() {
        for g in gens {
            let next = m.mul(g);
            if b.dot(next.exponents()) <= d_max as u128 && seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    let mut values = vec![0u128; d_max + 1];
    for m in &seen {
        values[b.dot(m.exponents()) as usize] += 1;
    }
    Ok(HilbertFunctionTable { values })
}

/// Certificate of Gorensteinness for a Cohen-Macaulay graded domain: the
/// reduced numerator `h` satisfies `h(t) = ±t^s h(1/t)`. Without the
/// Cohen-Macaulay and domain hypotheses, which this crate does not decide,
/// the answer certifies nothing.
pub fn gorenstein_symmetry_check(series: &HilbertSeries) -> Result<bool> {
    if series.numerator.is_empty() {
        return Err(Error::InvalidArgument("Hilbert series with zero numerator".into()));
    }
    let h = series.reduced();
    let coeffs: Vec<&BigInt> = {
        let start = h.numerator.iter().position(|c| !c.is_zero()).expect("nonzero numerator");
        h.numerator[start..].iter().collect()
    };
    let reversed: Vec<&BigInt> = coeffs.iter().rev().copied().collect();
    let same = coeffs == reversed;
    let opposite = coeffs.iter().zip(&reversed).all(|(a, b)| *a == &-(*b).clone());
    Ok(same || opposite)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn series_of_small_quotients() {
        let one = WeightVector::ones(2);
        let i = MonomialIdeal::new(2, [m(&[2, 0]), m(&[1, 1])]);
        let h = hilbert_series_monomial(&i, &one).unwrap();
        assert_eq!(h.numerator(), ints(&[1, 0, -2, 1]).as_slice());
        assert_eq!(h.denom_degrees(), &[1, 1]);
        assert_eq!(h.to_text(), "(1 - 2*t^2 + t^3) / (1-t)^2");
        assert_eq!(hilbert_series_monomial(&MonomialIdeal::zero(2), &one).unwrap().numerator(), ints(&[1]).as_slice());
        let max = MonomialIdeal::new(2, [m(&[1, 0]), m(&[0, 1])]);
        let hm = hilbert_series_monomial(&max, &one).unwrap();
        assert_eq!(hm.numerator(), ints(&[1, -2, 1]).as_slice());
        assert_eq!(hm.expand(4).unwrap().values, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn function_expansions() {
        let a = HilbertSeries::from_i64(&[1, -1, 1], &[1, 1]).unwrap();
        assert_eq!(hilbert_function(&a, 5).unwrap().values, vec![1, 1, 2, 3, 4, 5]);
        let b = HilbertSeries::from_i64(&[1], &[1, 1]).unwrap();
        assert_eq!(hilbert_function(&b, 3).unwrap().values, vec![1, 2, 3, 4]);
        let c = HilbertSeries::from_i64(&[1, 0, -2, 1], &[1, 1]).unwrap();
        assert_eq!(hilbert_function(&c, 4).unwrap().to_csv(), "1,2,1,1,1");
        // Three generators of degrees 1, 2, 3 with a relation in degree 6.
        let d = HilbertSeries::from_i64(&[1, 0, 0, 0, 0, 0, -1], &[1, 2, 3]).unwrap();
        assert_eq!(d.expand(8).unwrap(), a.expand(8).unwrap());
    }

    #[test]
    fn krull_dimensions() {
        assert_eq!(krull_dim_monomial(&MonomialIdeal::new(2, [m(&[2, 0]), m(&[1, 1])])), 1);
        assert_eq!(krull_dim_monomial(&MonomialIdeal::zero(5)), 5);
        assert_eq!(krull_dim_monomial(&MonomialIdeal::new(2, [m(&[1, 0]), m(&[0, 1])])), 0);
        assert_eq!(krull_dim_monomial(&MonomialIdeal::new(2, [m(&[0, 0])])), 0);
    }

    #[test]
    fn gorenstein_certificates() {
        let cone = HilbertSeries::from_i64(&[1, 0, -1], &[1, 1, 1, 1]).unwrap();
        assert_eq!(cone.reduced(), HilbertSeries::from_i64(&[1, 1], &[1, 1, 1]).unwrap());
        assert!(gorenstein_symmetry_check(&cone).unwrap());
        let c = HilbertSeries::from_i64(&[1, 0, -2, 1], &[1, 1]).unwrap();
        assert_eq!(c.reduced().numerator(), ints(&[1, 1, -1]).as_slice());
        assert!(!gorenstein_symmetry_check(&c).unwrap());
        assert!(gorenstein_symmetry_check(&HilbertSeries::from_i64(&[1], &[1]).unwrap()).unwrap());
        assert!(gorenstein_symmetry_check(&HilbertSeries::from_i64(&[], &[1]).unwrap()).is_err());
    }

    #[test]
    fn pole_order_matches_dimension() {
        let i = MonomialIdeal::new(3, [m(&[2, 0, 0]), m(&[1, 1, 0])]);
        let h = hilbert_series_monomial(&i, &WeightVector::ones(3)).unwrap();
        assert_eq!(h.pole_order_at_one(), krull_dim_monomial(&i));
    }

    #[test]
    fn semigroup_counts() {
        let gens = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[0, 1, 1])];
        let t = semigroup_hilbert_function(&gens, &WeightVector::ones(3), 6).unwrap();
        // K[T,U,V,W]/(U^2 - TV) in degree k has (k+1)^2 elements; T..W sit in degree 2.
        assert_eq!(t.values, vec![1, 0, 4, 0, 9, 0, 16]);
        let full = semigroup_hilbert_function(&[m(&[1, 0]), m(&[0, 1])], &WeightVector::ones(2), 3).unwrap();
        assert_eq!(full.values, vec![1, 2, 3, 4]);
    }
}
