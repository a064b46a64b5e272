//! Positive integral weights realizing finitely many monomial comparisons,
//! and weight representations of Groebner and Sagbi computations.
//!
//! A weight `a` realizes the pair `(m, n)` when `a.(alpha - beta) >= 1` for
//! `m = X^alpha`, `n = X^beta`. Feasibility is decided by exact simplex on
//! `{Gamma a >= 1, a >= 1}`. The answer is canonicalized: the sum of the
//! entries is minimized over the rational feasible region, ties are broken
//! by lexicographic minimization, and the optimal vertex is scaled to a
//! primitive integer vector. When no weight exists, a Farkas certificate
//! `c >= 0, c != 0` with `sum c_i gamma_i <= 0` is returned instead.
//!
//! The canonical choice is a convention of this crate; any feasible weight
//! is mathematically as good.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, IdealGens};
use crate::lp::{solve, Constraint, LinearProgram, LpOutcome, Relation};
use crate::order::OrderSpec;
use crate::poly::{Monomial, PolyRing, Polynomial, WeightVector};
use crate::sagbi::{sagbi_test, SubalgebraGens};

type Q = BigRational;

/// Pairs `(m, n)` with `m` meant to be strictly larger than `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonSet {
    nvars: usize,
    pairs: Vec<(Monomial, Monomial)>,
}

impl ComparisonSet {
    pub fn new(nvars: usize, pairs: Vec<(Monomial, Monomial)>) -> Result<Self> {
        for (m, n) in &pairs {
            if m.nvars() != nvars || n.nvars() != nvars {
                return Err(Error::RingMismatch("comparison arity differs from the ring".into()));
            }
            if m == n {
                return Err(Error::InvalidArgument("a monomial cannot be strictly larger than itself".into()));
            }
        }
        Ok(ComparisonSet { nvars, pairs })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn pairs(&self) -> &[(Monomial, Monomial)] {
        &self.pairs
    }

    /// Difference vectors `alpha_i - beta_i`.
    pub fn differences(&self) -> Vec<Vec<i64>> {
        self.pairs
            .iter()
            .map(|(m, n)| {
                m.exponents()
                    .iter()
                    .zip(n.exponents())
                    .map(|(&a, &b)| i64::from(a) - i64::from(b))
                    .collect()
            })
            .collect()
    }

    /// The inequality system `gamma_i . a >= 1`, one line per pair, for
    /// external audit.
    pub fn tableau(&self, ring: &PolyRing) -> String {
        let mut out = String::new();
        for ((m, n), g) in self.pairs.iter().zip(self.differences()) {
            let mut lhs = String::new();
            for (j, &c) in g.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let var = format!("a_{}", ring.names()[j]);
                let mag = c.abs();
                let term = if mag == 1 { var } else { format!("{mag}*{var}") };
                if lhs.is_empty() {
                    lhs = if c < 0 { format!("-{term}") } else { term };
                } else {
                    lhs.push_str(if c < 0 { " - " } else { " + " });
                    lhs.push_str(&term);
                }
            }
            if lhs.is_empty() {
                lhs.push('0');
            }
            out.push_str(&format!("{lhs} >= 1    # {} > {}\n", m.fmt_with(ring), n.fmt_with(ring)));
        }
        out
    }
}

/// True iff `a` satisfies every strict comparison.
pub fn weight_realizes(set: &ComparisonSet, a: &WeightVector) -> bool {
    a.len() == set.nvars
        && set.pairs.iter().all(|(m, n)| a.dot(m.exponents()) > a.dot(n.exponents()))
}

/// True iff `c` is a valid Farkas certificate for `set`.
pub fn certificate_is_valid(set: &ComparisonSet, c: &[BigInt]) -> bool {
    if c.len() != set.pairs.len() || c.iter().any(Signed::is_negative) || c.iter().all(Zero::is_zero) {
        return false;
    }
    let diffs = set.differences();
    (0..set.nvars).all(|j| {
        let s: BigInt = diffs.iter().zip(c).map(|(g, ci)| ci * BigInt::from(g[j])).sum();
        !s.is_positive()
    })
}

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Scale a nonnegative rational vector to a primitive integer vector.
fn primitive(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Canonical strictly positive weight realizing `set`, or
/// [`Error::Infeasible`] with a Farkas certificate.
pub fn find_weight(set: &ComparisonSet) -> Result<WeightVector> {
    let n = set.nvars;
    if set.pairs.is_empty() {
        return Ok(WeightVector::ones(n));
    }
    let diffs = set.differences();
    // a = 1 + y with y >= 0; gamma.y >= 1 - gamma.1.
    let base: Vec<Constraint> = diffs
        .iter()
        .map(|g| Constraint {
            coeffs: g.iter().map(|&c| q(c)).collect(),
            relation: Relation::Ge,
            rhs: q(1 - g.iter().sum::<i64>()),
        })
        .collect();
    let mut lp = LinearProgram { nvars: n, objective: vec![q(1); n], constraints: base };
    let opt = match solve(&lp) {
        LpOutcome::Optimal { value, .. } => value,
        LpOutcome::Infeasible => return Err(Error::Infeasible(farkas_certificate(set)?)),
        LpOutcome::Unbounded => unreachable!("objective is bounded below by zero"),
    };
    lp.constraints.push(Constraint { coeffs: vec![q(1); n], relation: Relation::Eq, rhs: opt });
    let mut y = Vec::with_capacity(n);
    for k in 0..n {
        let mut obj = vec![q(0); n];
        obj[k] = q(1);
        lp.objective = obj;
        let value = match solve(&lp) {
            LpOutcome::Optimal { value, .. } => value,
            other => return Err(Error::Inconsistency(format!("lexicographic refinement failed: {other:?}"))),
        };
        let mut fix = vec![q(0); n];
        fix[k] = q(1);
        lp.constraints.push(Constraint { coeffs: fix, relation: Relation::Eq, rhs: value.clone() });
        y.push(value);
    }
    let a: Vec<Q> = y.iter().map(|v| v + q(1)).collect();
    let entries = primitive(&a)
        .into_iter()
        .map(|x| x.to_u64().ok_or_else(|| Error::InvalidWeight("weight entry exceeds 64 bits".into())))
        .collect::<Result<Vec<_>>>()?;
    let w = WeightVector::new(entries)?;
    if !weight_realizes(set, &w) {
        return Err(Error::Inconsistency("solver returned a weight violating a comparison".into()));
    }
    Ok(w)
}

/// `c >= 0`, `sum c = 1`, `sum_i c_i gamma_i <= 0`, scaled to integers.
fn farkas_certificate(set: &ComparisonSet) -> Result<Vec<BigInt>> {
    let diffs = set.differences();
    let m = diffs.len();
    let mut constraints = vec![Constraint { coeffs: vec![q(1); m], relation: Relation::Eq, rhs: q(1) }];
    for j in 0..set.nvars {
        constraints.push(Constraint {
            coeffs: diffs.iter().map(|g| q(g[j])).collect(),
            relation: Relation::Le,
            rhs: q(0),
        });
    }
    let lp = LinearProgram { nvars: m, objective: vec![q(0); m], constraints };
    match solve(&lp) {
        LpOutcome::Optimal { x, .. } => {
            let c = primitive(&x);
            if certificate_is_valid(set, &c) {
                Ok(c)
            } else {
                Err(Error::Inconsistency("invalid Farkas certificate".into()))
            }
        }
        _ => Err(Error::Inconsistency("no weight and no Farkas certificate".into())),
    }
}

fn leading_vs_rest(polys: &[Polynomial], ord: &OrderSpec, nvars: usize) -> Result<ComparisonSet> {
    let mut pairs = Vec::new();
    for g in polys {
        let lead = ord.leading_term(g)?.monomial().clone();
        for m in g.monomials() {
            if *m != lead {
                pairs.push((lead.clone(), m.clone()));
            }
        }
    }
    ComparisonSet::new(nvars, pairs)
}

/// A weight `a` with `ini_a(g) = ini_ord(g)` for every element `g` of the
/// reduced Groebner basis of `ideal`, hence `ini_a(I) = ini_ord(I)`.
pub fn represent_order_by_weight(ideal: &IdealGens, ord: &OrderSpec) -> Result<WeightVector> {
    let gb = buchberger(ideal, ord)?;
    let set = leading_vs_rest(gb.elements(), ord, ideal.ring().nvars())?;
    find_weight(&set).map_err(|e| match e {
        Error::Infeasible(_) => Error::Inconsistency("comparisons from a monomial order must be feasible".into()),
        other => other,
    })
}

/// A weight `a` with `ini_a(f_i) = ini_ord(f_i)` for a Sagbi basis.
pub fn represent_sagbi_by_weight(gens: &SubalgebraGens, ord: &OrderSpec) -> Result<WeightVector> {
    if !sagbi_test(gens, ord)?.passed {
        return Err(Error::Precondition("generators are not a Sagbi basis for this order".into()));
    }
    let set = leading_vs_rest(gens.gens(), ord, gens.ring().nvars())?;
    find_weight(&set).map_err(|e| match e {
        Error::Infeasible(_) => Error::Inconsistency("comparisons from a monomial order must be feasible".into()),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{initial_ideal, initial_ideal_weight};
    use crate::monomial_ideal::MonomialIdeal;
    use crate::poly::Ring;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ring(names: &[&str]) -> Ring {
        PolyRing::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn chain_of_variables() {
        let set = ComparisonSet::new(3, vec![(m(&[1, 0, 0]), m(&[0, 1, 0])), (m(&[0, 1, 0]), m(&[0, 0, 1]))]).unwrap();
        let w = find_weight(&set).unwrap();
        assert!(weight_realizes(&set, &w));
        assert_eq!(w.entries(), &[3, 2, 1]);
    }

    #[test]
    fn contradictory_pair_has_certificate() {
        let set = ComparisonSet::new(2, vec![(m(&[1, 0]), m(&[0, 1])), (m(&[0, 1]), m(&[1, 0]))]).unwrap();
        match find_weight(&set) {
            Err(Error::Infeasible(c)) => {
                assert_eq!(c, vec![BigInt::from(1), BigInt::from(1)]);
                assert!(certificate_is_valid(&set, &c));
            }
            other => panic!("{other:?}"),
        }
        // A monomial can never beat one of its multiples.
        let div = ComparisonSet::new(1, vec![(m(&[1]), m(&[2]))]).unwrap();
        assert!(matches!(find_weight(&div), Err(Error::Infeasible(_))));
    }

    #[test]
    fn empty_set_gives_ones() {
        assert_eq!(find_weight(&ComparisonSet::new(4, vec![]).unwrap()).unwrap().entries(), &[1, 1, 1, 1]);
        assert!(ComparisonSet::new(2, vec![(m(&[1, 0]), m(&[1, 0]))]).is_err());
    }

    #[test]
    fn twisted_cubic_lex_pairs() {
        let set = ComparisonSet::new(
            3,
            vec![
                (m(&[2, 0, 0]), m(&[0, 1, 0])),
                (m(&[1, 1, 0]), m(&[0, 0, 1])),
                (m(&[1, 0, 1]), m(&[0, 2, 0])),
                (m(&[0, 3, 0]), m(&[0, 0, 2])),
            ],
        )
        .unwrap();
        let w = find_weight(&set).unwrap();
        assert!(weight_realizes(&set, &w));
        assert!(weight_realizes(&set, &WeightVector::new(vec![5, 3, 4]).unwrap()));
        // Scaling a valid weight keeps it valid.
        let scaled = WeightVector::new(w.entries().iter().map(|x| x * 7).collect()).unwrap();
        assert!(weight_realizes(&set, &scaled));
    }

    #[test]
    fn represent_lex_on_twisted_cubic() {
        let r = ring(&["x", "y", "z"]);
        let i = IdealGens::parse(&r, &["x^2 - y", "x*y - z"]).unwrap();
        let a = represent_order_by_weight(&i, &OrderSpec::lex()).unwrap();
        let gens = initial_ideal_weight(&i, &a, &OrderSpec::lex()).unwrap();
        assert!(gens.gens().iter().all(Polynomial::is_monomial));
        let back = MonomialIdeal::new(3, gens.gens().iter().map(|g| g.terms()[0].monomial().clone()));
        assert_eq!(back, initial_ideal(&i, &OrderSpec::lex()).unwrap());
    }

    #[test]
    fn represent_revlex_on_standard_example() {
        let r = ring(&["x1", "x2", "x3", "x4"]);
        let i = IdealGens::parse(&r, &["x1 + x2*x4 + x3^2"]).unwrap();
        let a = represent_order_by_weight(&i, &OrderSpec::revlex()).unwrap();
        let e = a.entries();
        assert!(2 * e[2] > e[1] + e[3] && e[1] + e[3] > e[0]);
        let f = &i.gens()[0];
        assert_eq!(f.initial_form(&a).unwrap(), Polynomial::parse(&r, "x3^2").unwrap());
    }

    #[test]
    fn monomial_ideal_gives_ones() {
        let r = ring(&["x", "y"]);
        let i = IdealGens::parse(&r, &["x^2", "x*y"]).unwrap();
        assert_eq!(represent_order_by_weight(&i, &OrderSpec::lex()).unwrap().entries(), &[1, 1]);
    }

    #[test]
    fn sagbi_weights() {
        let r = ring(&["x", "y"]);
        let f = SubalgebraGens::parse(&r, &["x + y"]).unwrap();
        assert_eq!(represent_sagbi_by_weight(&f, &OrderSpec::lex()).unwrap().entries(), &[2, 1]);
        let r3 = ring(&["x", "y", "z"]);
        let g = SubalgebraGens::parse(&r3, &["x^2 - z^2", "x*y", "y^2", "y*z"]).unwrap();
        let a = represent_sagbi_by_weight(&g, &OrderSpec::lex()).unwrap();
        let e = a.entries();
        assert!(e[0] > e[2]);
        let bad = SubalgebraGens::parse(&r, &["x + y", "x*y", "x*y^2"]).unwrap();
        assert!(matches!(represent_sagbi_by_weight(&bad, &OrderSpec::deglex()), Err(Error::Precondition(_))));
    }

    #[test]
    fn tableau_lists_inequalities() {
        let r = ring(&["x", "y"]);
        let set = ComparisonSet::new(2, vec![(m(&[2, 0]), m(&[0, 1]))]).unwrap();
        assert_eq!(set.tableau(&r), "2*a_x - a_y >= 1    # x^2 > y\n");
    }
}
