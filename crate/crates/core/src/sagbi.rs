//! Initial algebras of finitely generated subalgebras: subduction, the Sagbi
//! criterion via toric relations among the initial monomials, completion up
//! to a degree cap, and the kernel comparison `ini_b(Ker rho_1) = Ker rho`.

use std::collections::HashMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, initial_ideal_weight, presentation_kernel, toric_kernel, ReducedGroebnerBasis};
use crate::hilbert::{hilbert_series_monomial, semigroup_hilbert_function, HilbertFunctionTable, HilbertSeries};
use crate::order::OrderSpec;
use crate::poly::{check_same_ring, Coeff, Monomial, Polynomial, Ring, WeightVector};

/// Nonconstant generators `f_1, ..., f_k` of a subalgebra `K[f_1, ..., f_k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraGens {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl SubalgebraGens {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            check_same_ring(ring, g.ring())?;
            if g.is_constant() {
                return Err(Error::InvalidArgument(format!("constant generator `{g}`")));
            }
        }
        if gens.is_empty() {
            return Err(Error::InvalidArgument("a subalgebra needs at least one generator".into()));
        }
        Ok(SubalgebraGens { ring: ring.clone(), gens })
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|s| Polynomial::parse(ring, s)).collect::<Result<Vec<_>>>()?;
        SubalgebraGens::new(ring, polys)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    fn leading_monomials(&self, ord: &OrderSpec) -> Result<Vec<Monomial>> {
        self.gens.iter().map(|g| Ok(ord.leading_term(g)?.monomial().clone())).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SagbiStatus {
    Confirmed,
    TruncatedAtDegree(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SagbiState {
    pub gens: SubalgebraGens,
    pub status: SagbiStatus,
}

/// One subtraction `remainder -= scalar * prod f_i^{exponents[i]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubductionStep {
    pub scalar: Coeff,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subduction {
    pub remainder: Polynomial,
    pub steps: Vec<SubductionStep>,
}

impl Subduction {
    /// `f - remainder` rebuilt from the recorded steps.
    pub fn replay(&self, gens: &SubalgebraGens) -> Result<Polynomial> {
        let mut powers = PowerCache::new(gens);
        let mut acc = Polynomial::zero(gens.ring());
        for step in &self.steps {
            let prod = powers.product(&step.exponents);
            acc = &acc + &prod.scale(&step.scalar);
        }
        Ok(acc)
    }
}

struct PowerCache<'a> {
    gens: &'a SubalgebraGens,
    powers: HashMap<(usize, u32), Polynomial>,
}

impl<'a> PowerCache<'a> {
    fn new(gens: &'a SubalgebraGens) -> Self {
        PowerCache { gens, powers: HashMap::new() }
    }

    fn power(&mut self, i: usize, e: u32) -> Polynomial {
        if let Some(p) = self.powers.get(&(i, e)) {
            return p.clone();
        }
        let p = self.gens.gens[i].pow(e);
        self.powers.insert((i, e), p.clone());
        p
    }

    fn product(&mut self, exps: &[u32]) -> Polynomial {
        let mut acc = Polynomial::one(self.gens.ring());
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                acc = &acc * &self.power(i, e);
            }
        }
        acc
    }
}

/// Nonnegative integer `c` with `prod factors[i]^c[i] = target`; the
/// lexicographically largest solution is returned.
pub fn factor_over(target: &Monomial, factors: &[Monomial]) -> Option<Vec<u32>> {
    fn search(rest: &[u32], factors: &[Monomial], i: usize, chosen: &mut Vec<u32>) -> bool {
        if rest.iter().all(|&e| e == 0) {
            chosen.resize(factors.len(), 0);
            return true;
        }
        if i == factors.len() {
            return false;
        }
        let f = factors[i].exponents();
        let bound = f
            .iter()
            .zip(rest)
            .filter(|(&fe, _)| fe > 0)
            .map(|(&fe, &r)| r / fe)
            .min()
            .unwrap_or(0);
        for c in (0..=bound).rev() {
            let next: Vec<u32> = rest.iter().zip(f).map(|(&r, &fe)| r - c * fe).collect();
            chosen.push(c);
            if search(&next, factors, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    if factors.iter().any(Monomial::is_one) {
        return None;
    }
    let mut chosen = Vec::with_capacity(factors.len());
    search(target.exponents(), factors, 0, &mut chosen).then_some(chosen)
}

/// Subtract products of generators while the leading monomial of the
/// remainder factors over the generators' leading monomials.
pub fn subduct(f: &Polynomial, gens: &SubalgebraGens, ord: &OrderSpec) -> Result<Subduction> {
    check_same_ring(f.ring(), gens.ring())?;
    ord.validate(f.ring())?;
    let lms = gens.leading_monomials(ord)?;
    let mut powers = PowerCache::new(gens);
    let mut rem = f.clone();
    let mut steps = Vec::new();
    while !rem.is_zero() {
        let lead = ord.leading_term(&rem)?.clone();
        let Some(c) = factor_over(lead.monomial(), &lms) else { break };
        let prod = powers.product(&c);
        let lc = ord.leading_term(&prod)?.coeff().clone();
        let scalar = lead.coeff() / &lc;
        rem = &rem - &prod.scale(&scalar);
        steps.push(SubductionStep { scalar, exponents: c });
    }
    Ok(Subduction { remainder: rem, steps })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SagbiTest {
    pub passed: bool,
    /// Binomial generators of the toric ideal of the initial monomials.
    pub relations: ReducedGroebnerBasis,
    /// One subduction per relation, in the same order.
    pub subductions: Vec<Subduction>,
    /// Distinct nonzero remainders.
    pub witnesses: Vec<Polynomial>,
}

/// `gens` is a Sagbi basis iff every lifted toric relation of the initial
/// monomials subducts to zero.
pub fn sagbi_test(gens: &SubalgebraGens, ord: &OrderSpec) -> Result<SagbiTest> {
    ord.validate(gens.ring())?;
    let lms = gens.leading_monomials(ord)?;
    let relations = toric_kernel(gens.ring(), &lms)?;
    let mut subductions = Vec::with_capacity(relations.len());
    let mut witnesses: Vec<Polynomial> = Vec::new();
    for rel in relations.elements() {
        let lifted = rel.substitute(gens.gens(), gens.ring())?;
        let s = subduct(&lifted, gens, ord)?;
        if !s.remainder.is_zero() && !witnesses.contains(&s.remainder) {
            witnesses.push(s.remainder.clone());
        }
        subductions.push(s);
    }
    Ok(SagbiTest { passed: witnesses.is_empty(), relations, subductions, witnesses })
}

fn monic(f: &Polynomial, ord: &OrderSpec) -> Result<Polynomial> {
    let lc = ord.leading_term(f)?.coeff().clone();
    Ok(f.scale(&(Coeff::one() / lc)))
}

/// Adjoin subduction remainders of lifted toric relations until the Sagbi
/// test passes, discarding candidates of total degree above `degree_cap`.
pub fn sagbi_complete(gens: &SubalgebraGens, ord: &OrderSpec, degree_cap: u64) -> Result<SagbiState> {
    let max_deg = gens.gens().iter().map(|g| g.total_degree()).collect::<Result<Vec<_>>>()?;
    let max_deg = max_deg.into_iter().max().unwrap_or(0);
    if degree_cap < max_deg {
        return Err(Error::Precondition(format!(
            "degree cap {degree_cap} is below the generator degree {max_deg}"
        )));
    }
    let mut current = gens.clone();
    loop {
        let test = sagbi_test(&current, ord)?;
        let mut truncated = false;
        let mut lms = current.leading_monomials(ord)?;
        let mut fresh = Vec::new();
        for w in &test.witnesses {
            if w.total_degree()? > degree_cap {
                truncated = true;
                continue;
            }
            let w = monic(w, ord)?;
            let lm = ord.leading_term(&w)?.monomial().clone();
            if !lms.contains(&lm) {
                lms.push(lm);
                fresh.push(w);
            }
        }
        if fresh.is_empty() {
            let status = if truncated { SagbiStatus::TruncatedAtDegree(degree_cap) } else { SagbiStatus::Confirmed };
            return Ok(SagbiState { gens: current, status });
        }
        let mut all = current.gens.clone();
        all.extend(fresh);
        current = SubalgebraGens::new(gens.ring(), all)?;
    }
}

/// Leading monomials of the state's generators, minimalized as semigroup
/// generators and sorted ascending under `ord`.
pub fn initial_algebra_gens(state: &SagbiState, ord: &OrderSpec) -> Result<Vec<Monomial>> {
    let mut lms = state.gens.leading_monomials(ord)?;
    lms.sort_by(|a, b| ord.cmp_exponents(a.exponents(), b.exponents()));
    lms.dedup();
    let minimal: Vec<Monomial> = lms
        .iter()
        .enumerate()
        .filter(|(i, m)| {
            let others: Vec<Monomial> =
                lms.iter().enumerate().filter(|(j, _)| j != i).map(|(_, o)| o.clone()).collect();
            factor_over(m, &others).is_none()
        })
        .map(|(_, m)| m.clone())
        .collect();
    Ok(minimal)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundaReport {
    /// `b = (a(f_1), ..., a(f_k))`.
    pub b: WeightVector,
    /// Kernel of `Y_i -> f_i`.
    pub kernel: ReducedGroebnerBasis,
    /// Kernel of `Y_i -> ini_a(f_i)`.
    pub initial_kernel: ReducedGroebnerBasis,
    /// Reduced basis of `ini_b(kernel)` in the same order as `initial_kernel`.
    pub initial_of_kernel: ReducedGroebnerBasis,
    pub holds: bool,
}

/// Checks `ini_b(Ker rho_1) = Ker rho` for `rho_1: Y_i -> f_i`,
/// `rho: Y_i -> ini_a(f_i)` and `b_i = a(f_i)`. The caller asserts that the
/// `ini_a(f_i)` generate `ini_a(A)`.
pub fn verify_founda(gens: &SubalgebraGens, a: &WeightVector, tiebreak: &OrderSpec) -> Result<FoundaReport> {
    a.check_len(gens.ring().nvars())
        .map_err(|_| Error::RingMismatch("weight length differs from the ring".into()))?;
    let degrees = gens
        .gens()
        .iter()
        .map(|g| {
            let d = g.a_degree(a)?;
            u64::try_from(d).map_err(|_| Error::InvalidWeight("a-degree exceeds 64 bits".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let b = WeightVector::new(degrees)?;
    let kernel = presentation_kernel(gens.gens())?;
    let forms = gens.gens().iter().map(|g| g.initial_form(a)).collect::<Result<Vec<_>>>()?;
    let initial_kernel = presentation_kernel(&forms)?;
    let y_order = initial_kernel.order().clone();
    let ini_b = initial_ideal_weight(&kernel.to_ideal(), &b, tiebreak_on_y(tiebreak))?;
    let initial_of_kernel = buchberger(&ini_b, &y_order)?;
    let holds = initial_of_kernel == initial_kernel;
    Ok(FoundaReport { b, kernel, initial_kernel, initial_of_kernel, holds })
}

/// The tie-break order lives on `R`; on `K[Y]` only its kind is reused.
fn tiebreak_on_y(tiebreak: &OrderSpec) -> &'static OrderSpec {
    use std::sync::OnceLock;
    static LEX: OnceLock<OrderSpec> = OnceLock::new();
    static DEGLEX: OnceLock<OrderSpec> = OnceLock::new();
    static REVLEX: OnceLock<OrderSpec> = OnceLock::new();
    match tiebreak {
        OrderSpec::Base { kind: crate::order::BaseKind::Lex, .. } => LEX.get_or_init(OrderSpec::lex),
        OrderSpec::Base { kind: crate::order::BaseKind::DegLex, .. } => DEGLEX.get_or_init(OrderSpec::deglex),
        _ => REVLEX.get_or_init(OrderSpec::revlex),
    }
}

/// Hilbert function of a graded subalgebra, read off its (possibly
/// truncated) initial algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraHilbert {
    pub table: HilbertFunctionTable,
    /// `TruncatedAtDegree(d)` marks a claim about degrees `<= d` of the
    /// completion only; the table never extends beyond what it covers.
    pub status: SagbiStatus,
    pub initial_gens: Vec<Monomial>,
}

/// Hilbert function of `K[F]` in the `b`-grading up to `d_max`, computed by
/// counting the monomials of the initial algebra.
pub fn hilbert_series_subalgebra(
    gens: &SubalgebraGens,
    ord: &OrderSpec,
    b: &WeightVector,
    d_max: usize,
) -> Result<SubalgebraHilbert> {
    b.check_len(gens.ring().nvars())?;
    for g in gens.gens() {
        if !g.is_homogeneous(b) {
            return Err(Error::NotHomogeneous(format!("generator `{g}` is not graded for ({b})")));
        }
    }
    let min_b = *b.entries().iter().min().expect("nonempty weight");
    let max_deg = gens.gens().iter().map(|g| g.total_degree()).collect::<Result<Vec<_>>>()?;
    let cap = (d_max as u64 / min_b).max(max_deg.into_iter().max().unwrap_or(1));
    let state = sagbi_complete(gens, ord, cap)?;
    let initial_gens = initial_algebra_gens(&state, ord)?;
    let table = semigroup_hilbert_function(&initial_gens, b, d_max)?;
    Ok(SubalgebraHilbert { table, status: state.status, initial_gens })
}

/// Hilbert series of `K[F] ≅ K[Y]/Ker` for generators homogeneous in the
/// standard grading, with `Y_i` in degree `deg f_i / g` where `g` is the gcd
/// of the generator degrees.
pub fn presentation_series(gens: &SubalgebraGens) -> Result<HilbertSeries> {
    let ones = WeightVector::ones(gens.ring().nvars());
    let mut degrees = Vec::with_capacity(gens.gens().len());
    for g in gens.gens() {
        if !g.is_homogeneous(&ones) {
            return Err(Error::NotHomogeneous(format!("generator `{g}` is not homogeneous")));
        }
        degrees.push(g.total_degree()?);
    }
    let g = degrees.iter().fold(0u64, |acc, &d| num_integer::gcd(acc, d));
    let b = WeightVector::new(degrees.iter().map(|d| d / g).collect())?;
    let kernel = presentation_kernel(gens.gens())?;
    hilbert_series_monomial(&kernel.initial_ideal(), &b)
}

impl SagbiState {
    pub fn is_confirmed(&self) -> bool {
        self.status == SagbiStatus::Confirmed
    }
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

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn factorization_search() {
        let f = [m(&[1, 0]), m(&[1, 1]), m(&[1, 2])];
        assert_eq!(factor_over(&m(&[1, 3]), &f), None);
        assert_eq!(factor_over(&m(&[2, 2]), &f), Some(vec![1, 0, 1]));
        assert_eq!(factor_over(&m(&[0, 0]), &f), Some(vec![0, 0, 0]));
    }

    #[test]
    fn subduction_examples() {
        let r = ring(&["x", "y"]);
        let f = SubalgebraGens::parse(&r, &["x + y", "x*y", "x*y^2"]).unwrap();
        let o = OrderSpec::deglex();
        let s = subduct(&p(&r, "x*y^3"), &f, &o).unwrap();
        assert_eq!(s.remainder, p(&r, "x*y^3"));
        assert!(s.steps.is_empty());
        let prod = p(&r, "x + y").try_mul(&p(&r, "x*y")).unwrap();
        let s = subduct(&prod, &f, &o).unwrap();
        assert!(s.remainder.is_zero());
        assert_eq!(s.replay(&f).unwrap(), prod);
        let single = SubalgebraGens::parse(&r, &["x"]).unwrap();
        assert!(subduct(&p(&r, "x^2"), &single, &o).unwrap().remainder.is_zero());
    }

    #[test]
    fn sagbi_test_examples() {
        let r = ring(&["x", "y"]);
        let mono = SubalgebraGens::parse(&r, &["x", "x*y"]).unwrap();
        assert!(sagbi_test(&mono, &OrderSpec::lex()).unwrap().passed);
        let f = SubalgebraGens::parse(&r, &["x + y", "x*y", "x*y^2"]).unwrap();
        let t = sagbi_test(&f, &OrderSpec::deglex()).unwrap();
        assert!(!t.passed);
        let o = OrderSpec::deglex();
        assert!(t.witnesses.iter().any(|w| o.leading_term(w).unwrap().monomial() == &m(&[1, 3])));
        let r3 = ring(&["x", "y", "z"]);
        let g = SubalgebraGens::parse(&r3, &["x^2 - z^2", "x*y", "y^2", "y*z"]).unwrap();
        assert!(sagbi_test(&g, &OrderSpec::lex()).unwrap().passed);
    }

    #[test]
    fn completion_is_truncated_for_the_non_finite_example() {
        let r = ring(&["x", "y"]);
        let f = SubalgebraGens::parse(&r, &["x + y", "x*y", "x*y^2"]).unwrap();
        let o = OrderSpec::deglex();
        let state = sagbi_complete(&f, &o, 6).unwrap();
        assert_eq!(state.status, SagbiStatus::TruncatedAtDegree(6));
        let ini = initial_algebra_gens(&state, &o).unwrap();
        assert_eq!(ini, (0..6).map(|k| m(&[1, k])).collect::<Vec<_>>());
        assert!(matches!(sagbi_complete(&f, &o, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn completion_confirms_finite_bases() {
        let r3 = ring(&["x", "y", "z"]);
        let mono = SubalgebraGens::parse(&r3, &["x^2", "x*y", "y^2", "y*z"]).unwrap();
        let s = sagbi_complete(&mono, &OrderSpec::deglex(), 2).unwrap();
        assert!(s.is_confirmed());
        assert_eq!(s.gens, mono);
        let g = SubalgebraGens::parse(&r3, &["x^2 - z^2", "x*y", "y^2", "y*z"]).unwrap();
        let s = sagbi_complete(&g, &OrderSpec::lex(), 4).unwrap();
        assert!(s.is_confirmed());
        assert_eq!(
            initial_algebra_gens(&s, &OrderSpec::lex()).unwrap(),
            vec![m(&[0, 1, 1]), m(&[0, 2, 0]), m(&[1, 1, 0]), m(&[2, 0, 0])]
        );
    }

    #[test]
    fn founda_examples() {
        let r3 = ring(&["x", "y", "z"]);
        let g = SubalgebraGens::parse(&r3, &["x^2 - z^2", "x*y", "y^2", "y*z"]).unwrap();
        let a = WeightVector::new(vec![3, 2, 1]).unwrap();
        let rep = verify_founda(&g, &a, &OrderSpec::lex()).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.b.entries(), &[6, 5, 4, 3]);
        assert_eq!(rep.kernel.to_lines(), ["Y2^2 - Y1*Y3 - Y4^2"]);
        assert_eq!(rep.initial_of_kernel.to_lines(), ["Y2^2 - Y1*Y3"]);
        let mono = SubalgebraGens::parse(&r3, &["x^2", "x*y", "y^2"]).unwrap();
        assert!(verify_founda(&mono, &WeightVector::ones(3), &OrderSpec::lex()).unwrap().holds);
        let r = ring(&["x", "y"]);
        let free = SubalgebraGens::parse(&r, &["x + y", "x - y"]).unwrap();
        let rep = verify_founda(&free, &WeightVector::ones(2), &OrderSpec::lex()).unwrap();
        assert!(rep.holds && rep.kernel.is_empty() && rep.initial_kernel.is_empty());
        assert!(verify_founda(&free, &WeightVector::ones(3), &OrderSpec::lex()).is_err());
    }

    #[test]
    fn subalgebra_hilbert_functions() {
        let r = ring(&["x", "y"]);
        let f = SubalgebraGens::parse(&r, &["x + y", "x*y", "x*y^2"]).unwrap();
        let h = hilbert_series_subalgebra(&f, &OrderSpec::deglex(), &WeightVector::ones(2), 5).unwrap();
        assert_eq!(h.table.values, vec![1, 1, 2, 3, 4, 5]);
        let full = SubalgebraGens::parse(&r, &["x", "y"]).unwrap();
        let h = hilbert_series_subalgebra(&full, &OrderSpec::lex(), &WeightVector::ones(2), 4).unwrap();
        assert_eq!(h.table.values, vec![1, 2, 3, 4, 5]);
        assert!(h.status == SagbiStatus::Confirmed);
        let bad = SubalgebraGens::parse(&r, &["x + y^2"]).unwrap();
        assert!(hilbert_series_subalgebra(&bad, &OrderSpec::lex(), &WeightVector::ones(2), 4).is_err());
    }

    #[test]
    fn presentation_series_of_the_quadric_cone() {
        let r3 = ring(&["x", "y", "z"]);
        let g = SubalgebraGens::parse(&r3, &["x^2 - z^2", "x*y", "y^2", "y*z"]).unwrap();
        let h = presentation_series(&g).unwrap();
        assert_eq!(h.reduced(), HilbertSeries::from_i64(&[1, 1], &[1, 1, 1]).unwrap());
    }
}
