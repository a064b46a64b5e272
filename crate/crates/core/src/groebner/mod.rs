//! Division with remainder, Buchberger's algorithm and reduced Groebner
//! bases, initial ideals for orders and weights, elimination and kernels of
//! algebra maps.

mod kernel;

use std::cmp::Ordering;
use std::collections::HashSet;
use std::cell::Cell;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;
use crate::order::OrderSpec;
use crate::poly::{check_same_ring, Coeff, Monomial, Polynomial, Ring, Term, WeightVector};

pub use kernel::{eliminate, kernel_ring, presentation_kernel, toric_kernel};

thread_local! {
    static STEP_LIMIT: Cell<Option<usize>> = const { Cell::new(None) };
}

/// Cap on reduction steps per Groebner basis computation on the calling
/// thread; `None` removes it. Exceeding the cap makes [`buchberger`] fail
/// with [`Error::StepLimit`].
pub fn set_step_limit(limit: Option<usize>) {
    STEP_LIMIT.with(|c| c.set(limit));
}

pub fn step_limit() -> Option<usize> {
    STEP_LIMIT.with(Cell::get)
}

/// Generators of an ideal. Zero generators are dropped, so an empty list is
/// the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGens {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl IdealGens {
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut out = Vec::new();
        for g in gens {
            check_same_ring(ring, g.ring())?;
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(IdealGens { ring: ring.clone(), gens: out })
    }

    pub fn zero(ring: &Ring) -> Self {
        IdealGens { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|s| Polynomial::parse(ring, s)).collect::<Result<Vec<_>>>()?;
        IdealGens::new(ring, polys)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Every generator is homogeneous for `a`.
    pub fn is_graded(&self, a: &WeightVector) -> bool {
        a.len() == self.ring.nvars() && self.gens.iter().all(|g| g.is_homogeneous(a))
    }

    pub(crate) fn require_graded(&self, a: &WeightVector) -> Result<()> {
        if self.is_graded(a) {
            Ok(())
        } else {
            Err(Error::NotHomogeneous(format!("ideal is not graded for the weight ({a})")))
        }
    }
}

/// Reduced Groebner basis: monic, interreduced, sorted ascending by leading
/// monomial. Unique for an ideal and an order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGroebnerBasis {
    ring: Ring,
    order: OrderSpec,
    elements: Vec<Polynomial>,
}

impl ReducedGroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| lead_of(&self.order, g).mono.clone()).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.nvars(), self.leading_monomials())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        check_same_ring(&self.ring, f.ring())?;
        if self.elements.is_empty() {
            return Ok(f.clone());
        }
        normal_form(f, &self.elements, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn to_ideal(&self) -> IdealGens {
        IdealGens { ring: self.ring.clone(), gens: self.elements.clone() }
    }

    /// Elements printed with terms descending under the basis order.
    pub fn to_lines(&self) -> Vec<String> {
        self.elements.iter().map(|g| self.order.format(g)).collect()
    }

    /// Wrap elements already known to form the reduced basis.
    pub(crate) fn from_parts(ring: &Ring, order: &OrderSpec, mut elements: Vec<Polynomial>) -> Self {
        elements.sort_by(|f, g| order.cmp_exponents(lead_of(order, f).mono.exponents(), lead_of(order, g).mono.exponents()));
        ReducedGroebnerBasis { ring: ring.clone(), order: order.clone(), elements }
    }
}

fn lead_of<'a>(ord: &OrderSpec, f: &'a Polynomial) -> &'a Term {
    f.terms()
        .iter()
        .max_by(|s, t| ord.cmp_exponents(s.monomial().exponents(), t.monomial().exponents()))
        .expect("nonzero polynomial")
}

/// Terms sorted strictly descending under the active order.
type Sorted = Vec<Term>;

fn sorted(f: &Polynomial, ord: &OrderSpec) -> Sorted {
    let mut t = f.terms().to_vec();
    t.sort_by(|a, b| ord.cmp_exponents(b.mono.exponents(), a.mono.exponents()));
    t
}

/// `f - c * m * g` for sorted inputs.
fn sub_mul(f: &[Term], c: &Coeff, m: &Monomial, g: &[Term], ord: &OrderSpec) -> Sorted {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut pending: Option<Term> = None;
    while i < f.len() || j < g.len() {
        if pending.is_none() && j < g.len() {
            pending = Some(Term { coeff: -(c * &g[j].coeff), mono: g[j].mono.mul(m) });
        }
        match (f.get(i), pending.as_ref()) {
            (Some(a), Some(b)) => match ord.cmp_exponents(a.mono.exponents(), b.mono.exponents()) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a.coeff + &b.coeff;
                    if !s.is_zero() {
                        out.push(Term { coeff: s, mono: a.mono.clone() });
                    }
                    pending = None;
                    i += 1;
                    j += 1;
                }
            },
            (Some(a), None) => {
                out.push(a.clone());
                i += 1;
            }
            (None, Some(_)) => {
                out.push(pending.take().unwrap());
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

struct Reducer<'a> {
    ord: &'a OrderSpec,
    basis: Vec<&'a [Term]>,
    /// Basis indices by ascending leading monomial, then index.
    preference: Vec<usize>,
    steps: usize,
    limit: Option<usize>,
}

impl<'a> Reducer<'a> {
    fn new(ord: &'a OrderSpec, basis: Vec<&'a [Term]>) -> Self {
        let mut preference: Vec<usize> = (0..basis.len()).collect();
        preference.sort_by(|&i, &j| {
            ord.cmp_exponents(basis[i][0].mono.exponents(), basis[j][0].mono.exponents()).then(i.cmp(&j))
        });
        Reducer { ord, basis, preference, steps: 0, limit: step_limit() }
    }

    fn divisor_of(&self, m: &Monomial) -> Option<usize> {
        self.preference.iter().copied().find(|&i| self.basis[i][0].mono.divides(m))
    }

    /// Full reduction: no monomial of the result is divisible by a leading
    /// monomial of the basis.
    fn reduce(&mut self, f: Sorted) -> Result<Sorted> {
        let mut p = f;
        let mut start = 0;
        let mut rem = Vec::new();
        while start < p.len() {
            let lead = &p[start];
            match self.divisor_of(&lead.mono) {
                Some(k) => {
                    self.steps += 1;
                    if let Some(limit) = self.limit {
                        if self.steps > limit {
                            return Err(Error::StepLimit(limit));
                        }
                    }
                    let g = self.basis[k];
                    let q = g[0].mono.quotient_of(&lead.mono).expect("divisor");
                    let c = &lead.coeff / &g[0].coeff;
                    p = sub_mul(&p[start..], &c, &q, g, self.ord);
                    start = 0;
                }
                None => {
                    rem.push(lead.clone());
                    start += 1;
                }
            }
        }
        Ok(rem)
    }
}

fn make_monic(f: &mut Sorted) {
    if let Some(lc) = f.first().map(|t| t.coeff.clone()) {
        if !lc.is_one() {
            for t in f.iter_mut() {
                t.coeff = &t.coeff / &lc;
            }
        }
    }
}

/// Remainder of `f` on division by `basis` with full tail reduction.
///
/// Among the elements whose leading monomial divides the current monomial,
/// the one with the smallest leading monomial (then the smallest index) is
/// used.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &OrderSpec) -> Result<Polynomial> {
    ord.validate(f.ring())?;
    for g in basis {
        check_same_ring(f.ring(), g.ring())?;
        if g.is_zero() {
            return Err(Error::InvalidArgument("division by the zero polynomial".into()));
        }
    }
    let sorted_basis: Vec<Sorted> = basis.iter().map(|g| sorted(g, ord)).collect();
    let mut reducer = Reducer::new(ord, sorted_basis.iter().map(Vec::as_slice).collect());
    let rem = reducer.reduce(sorted(f, ord))?;
    Ok(Polynomial::from_distinct_terms(f.ring(), rem))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Groebner basis of the ideal generated by `ideal` under `ord`.
///
/// S-pairs are processed by the normal strategy (smallest lcm degree, then
/// the order on lcms, then indices); the coprime and chain criteria discard
/// superfluous pairs.
pub fn buchberger(ideal: &IdealGens, ord: &OrderSpec) -> Result<ReducedGroebnerBasis> {
    let ring = ideal.ring();
    ord.validate(ring)?;
    let mut basis: Vec<Sorted> = Vec::new();
    for g in ideal.gens() {
        let mut s = sorted(g, ord);
        make_monic(&mut s);
        if s[0].mono.is_one() {
            return Ok(ReducedGroebnerBasis::from_parts(ring, ord, vec![Polynomial::one(ring)]));
        }
        basis.push(s);
    }
    let limit = step_limit();
    let mut steps = 0usize;
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(Pair { i, j, lcm: basis[i][0].mono.lcm(&basis[j][0].mono) });
            pending.insert((i, j));
        }
    }
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&p, &q| {
                let (a, b) = (&pairs[p], &pairs[q]);
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| ord.cmp_exponents(a.lcm.exponents(), b.lcm.exponents()))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .expect("nonempty");
        let Pair { i, j, lcm } = pairs.swap_remove(best);
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i][0].mono, &basis[j][0].mono);
        if li.is_coprime(lj) {
            continue;
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].mono.divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let qi = li.quotient_of(&lcm).expect("lcm");
        let qj = lj.quotient_of(&lcm).expect("lcm");
        let left: Sorted = basis[i].iter().map(|t| Term { coeff: t.coeff.clone(), mono: t.mono.mul(&qi) }).collect();
        let spoly = sub_mul(&left, &Coeff::one(), &qj, &basis[j], ord);
        let mut reducer = Reducer::new(ord, basis.iter().map(Vec::as_slice).collect());
        reducer.limit = limit.map(|l| l.saturating_sub(steps));
        let mut h = reducer.reduce(spoly).map_err(|_| Error::StepLimit(limit.unwrap_or(0)))?;
        steps += reducer.steps;
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        if h[0].mono.is_one() {
            return Ok(ReducedGroebnerBasis::from_parts(ring, ord, vec![Polynomial::one(ring)]));
        }
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            pairs.push(Pair { i, j: k, lcm: g[0].mono.lcm(&h[0].mono) });
            pending.insert((i, k));
        }
        basis.push(h);
    }
    reduce_basis(ring, ord, basis)
}

/// Minimalize and interreduce a Groebner basis.
fn reduce_basis(ring: &Ring, ord: &OrderSpec, basis: Vec<Sorted>) -> Result<ReducedGroebnerBasis> {
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len()).any(|j| {
                j != i
                    && basis[j][0].mono.divides(&basis[i][0].mono)
                    && (basis[j][0].mono != basis[i][0].mono || j < i)
            })
        })
        .collect();
    let minimal: Vec<Sorted> = keep.into_iter().map(|i| basis[i].clone()).collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<&[Term]> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| h.as_slice())
            .collect();
        let mut reducer = Reducer::new(ord, others);
        let mut tail = reducer.reduce(g[1..].to_vec())?;
        let mut full = vec![g[0].clone()];
        full.append(&mut tail);
        make_monic(&mut full);
        reduced.push(Polynomial::from_distinct_terms(ring, full));
    }
    Ok(ReducedGroebnerBasis::from_parts(ring, ord, reduced))
}

/// Minimal monomial generators of `ini_ord(I)`.
pub fn initial_ideal(ideal: &IdealGens, ord: &OrderSpec) -> Result<MonomialIdeal> {
    Ok(buchberger(ideal, ord)?.initial_ideal())
}

/// Generators of `ini_a(I)`: the initial forms of the reduced Groebner basis
/// under the weight order refined by `tiebreak`.
pub fn initial_ideal_weight(ideal: &IdealGens, a: &WeightVector, tiebreak: &OrderSpec) -> Result<IdealGens> {
    a.check_len(ideal.ring().nvars())?;
    let gb = buchberger(ideal, &OrderSpec::weight_refined(a.clone(), tiebreak.clone()))?;
    let forms = gb.elements().iter().map(|g| g.initial_form(a)).collect::<Result<Vec<_>>>()?;
    IdealGens::new(ideal.ring(), forms)
}

/// True iff every minimal generator of `ini_ord(I)` has degree 2. For a
/// standard-graded `I` this certifies that `R/I` is Koszul; `false`
/// certifies nothing.
pub fn quadratic_initial_certificate(ideal: &IdealGens, ord: &OrderSpec) -> Result<bool> {
    ideal.require_graded(&WeightVector::ones(ideal.ring().nvars()))?;
    let ini = initial_ideal(ideal, ord)?;
    Ok(ini.mingens().iter().all(|m| m.degree() == 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn ring(names: &[&str]) -> Ring {
        PolyRing::new(names.iter().copied()).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"]);
        let nf = |f: &str, g: &[&str], o: &OrderSpec| {
            let gs: Vec<_> = g.iter().map(|s| p(&r, s)).collect();
            normal_form(&p(&r, f), &gs, o).unwrap()
        };
        assert!(nf("x^2", &["x"], &OrderSpec::deglex()).is_zero());
        assert_eq!(nf("x^2 + y", &["x^2 - y"], &OrderSpec::deglex()), p(&r, "2*y"));
        assert_eq!(nf("y", &["x"], &OrderSpec::lex()), p(&r, "y"));
        assert!(normal_form(&p(&r, "x"), &[Polynomial::zero(&r)], &OrderSpec::lex()).is_err());
    }

    #[test]
    fn division_prefers_smallest_leading_monomial() {
        let r = ring(&["x", "y"]);
        // Both x and x*y divide x^2*y; the basis element led by x is used.
        let g = vec![p(&r, "x*y - 1"), p(&r, "x - y")];
        let nf = normal_form(&p(&r, "x^2*y"), &g, &OrderSpec::deglex()).unwrap();
        assert_eq!(nf, p(&r, "y^3"));
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(&["x", "y"]);
        for o in [OrderSpec::lex(), OrderSpec::deglex(), OrderSpec::revlex()] {
            let gb = buchberger(&IdealGens::parse(&r, &["x*y", "x^2"]).unwrap(), &o).unwrap();
            assert_eq!(gb.elements(), &[p(&r, "x*y"), p(&r, "x^2")][..]);
        }
    }

    #[test]
    fn twisted_cubic_lex_basis() {
        let r = ring(&["x", "y", "z"]);
        let gb = buchberger(&IdealGens::parse(&r, &["x^2 - y", "x*y - z"]).unwrap(), &OrderSpec::lex()).unwrap();
        let expected = ["y^3 - z^2", "x*z - y^2", "x*y - z", "x^2 - y"];
        assert_eq!(gb.to_lines(), expected);
        // Every element vanishes on (s, s^2, s^3).
        let s = ring(&["s"]);
        let param = vec![p(&s, "s"), p(&s, "s^2"), p(&s, "s^3")];
        for g in gb.elements() {
            assert!(g.substitute(&param, &s).unwrap().is_zero());
        }
        assert_eq!(
            gb.initial_ideal(),
            MonomialIdeal::new(3, ["x^2", "x*y", "x*z", "y^3"].map(|m| p(&r, m).terms()[0].monomial().clone()))
        );
    }

    #[test]
    fn unit_and_linear_ideals() {
        let r = ring(&["x"]);
        let gb = buchberger(&IdealGens::parse(&r, &["x - 1"]).unwrap(), &OrderSpec::lex()).unwrap();
        assert_eq!(gb.to_lines(), ["x - 1"]);
        let r2 = ring(&["x", "y"]);
        let unit = buchberger(&IdealGens::parse(&r2, &["x*y - 1", "x"]).unwrap(), &OrderSpec::lex()).unwrap();
        assert!(unit.is_unit_ideal());
        let zero = buchberger(&IdealGens::zero(&r2), &OrderSpec::lex()).unwrap();
        assert!(zero.is_empty());
    }

    #[test]
    fn revlex_initial_ideal_of_the_standard_example() {
        let r = ring(&["x1", "x2", "x3", "x4"]);
        let ini = initial_ideal(&IdealGens::parse(&r, &["x1 + x2*x4 + x3^2"]).unwrap(), &OrderSpec::revlex()).unwrap();
        assert_eq!(ini.mingens(), &[Monomial::new(vec![0, 0, 2, 0])]);
    }

    #[test]
    fn weight_initial_ideals() {
        let r = ring(&["x", "y"]);
        let i = IdealGens::parse(&r, &["x^2 - y"]).unwrap();
        let one = WeightVector::ones(2);
        let w12 = WeightVector::new(vec![1, 2]).unwrap();
        assert_eq!(initial_ideal_weight(&i, &one, &OrderSpec::lex()).unwrap().gens(), &[p(&r, "x^2")]);
        assert_eq!(initial_ideal_weight(&i, &w12, &OrderSpec::lex()).unwrap().gens(), &[p(&r, "x^2 - y")]);
        let h = IdealGens::parse(&r, &["x^2 - x*y"]).unwrap();
        assert_eq!(initial_ideal_weight(&h, &one, &OrderSpec::lex()).unwrap().gens(), h.gens());
    }

    #[test]
    fn quadratic_certificates() {
        let r = ring(&["x", "y", "z", "w"]);
        let yes = IdealGens::parse(&r, &["x^2 - y*z"]).unwrap();
        assert!(quadratic_initial_certificate(&yes, &OrderSpec::lex()).unwrap());
        let no = IdealGens::parse(&r, &["y^3 - z^2*w"]).unwrap();
        assert!(!quadratic_initial_certificate(&no, &OrderSpec::deglex()).unwrap());
        let mono = IdealGens::parse(&r, &["x*y", "y*z"]).unwrap();
        assert!(quadratic_initial_certificate(&mono, &OrderSpec::revlex()).unwrap());
        let bad = IdealGens::parse(&r, &["x^2 - y"]).unwrap();
        assert!(matches!(quadratic_initial_certificate(&bad, &OrderSpec::lex()), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn step_limit_stops_runaway_runs() {
        let r = ring(&["x", "y", "z"]);
        let i = IdealGens::parse(&r, &["x^3 - y*z", "y^3 - x*z", "z^3 - x*y"]).unwrap();
        set_step_limit(Some(1));
        let limited = buchberger(&i, &OrderSpec::lex());
        set_step_limit(None);
        assert_eq!(limited.unwrap_err(), Error::StepLimit(1));
        assert!(buchberger(&i, &OrderSpec::lex()).is_ok());
    }
}
