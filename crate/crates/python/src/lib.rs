//! Python bindings. Polynomials cross the boundary as objects or as text in
//! the problem-file syntax; orders as `lex`, `deglex`, `revlex`, optionally
//! with a variable list such as `lex(y, x)`.

use inideal::betti::{betti_degree_bound, graded_betti, projdim_and_reg};
use inideal::family::{default_freeness_bound, homogenize_ideal};
use inideal::groebner::{buchberger, initial_ideal, initial_ideal_weight, presentation_kernel, set_step_limit};
use inideal::hilbert::{hilbert_series_monomial, krull_dim_monomial};
use inideal::sagbi::{hilbert_series_subalgebra, initial_algebra_gens, sagbi_complete, sagbi_test, subduct};
use inideal::weight::{find_weight, represent_order_by_weight, represent_sagbi_by_weight, ComparisonSet};
use inideal::{
    Coeff, Error, IdealGens, Monomial, OrderSpec, SagbiStatus, SubalgebraGens, WeightVector,
};
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(inideal, Infeasible, PyValueError, "No positive weight realizes the comparisons.");
create_exception!(inideal, StepLimitExceeded, PyRuntimeError, "A Groebner computation hit the step limit.");

fn err(e: Error) -> PyErr {
    match e {
        Error::Infeasible(c) => Infeasible::new_err(("comparisons are infeasible", c)),
        Error::StepLimit(_) => StepLimitExceeded::new_err(e.to_string()),
        Error::Inconsistency(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

trait OrRaise<T> {
    fn or_raise(self) -> PyResult<T>;
}

impl<T> OrRaise<T> for inideal::Result<T> {
    fn or_raise(self) -> PyResult<T> {
        self.map_err(err)
    }
}

fn order(ring: &inideal::Ring, text: &str) -> PyResult<OrderSpec> {
    OrderSpec::parse(text, ring).or_raise()
}

fn weight(entries: Vec<u64>) -> PyResult<WeightVector> {
    WeightVector::new(entries).or_raise()
}

fn grading(ring: &inideal::Ring, b: Option<Vec<u64>>) -> PyResult<WeightVector> {
    match b {
        Some(b) => weight(b),
        None => Ok(WeightVector::ones(ring.nvars())),
    }
}

fn coeff(ring: &inideal::Ring, text: &str) -> PyResult<Coeff> {
    let p = inideal::Polynomial::parse(ring, text).or_raise()?;
    if !p.is_constant() && !p.is_zero() {
        return Err(PyValueError::new_err(format!("`{text}` is not a rational number")));
    }
    Ok(p.coefficient(&Monomial::one(ring.nvars())))
}

fn monomial(ring: &inideal::Ring, text: &str) -> PyResult<Monomial> {
    let p = inideal::Polynomial::parse(ring, text).or_raise()?;
    match p.terms() {
        [t] if *t.coeff() == Coeff::from_integer(1.into()) => Ok(t.monomial().clone()),
        _ => Err(PyValueError::new_err(format!("`{text}` is not a monomial"))),
    }
}

fn wrap(ps: &[inideal::Polynomial]) -> Vec<Polynomial> {
    ps.iter().cloned().map(|inner| Polynomial { inner }).collect()
}

fn as_poly(m: &Monomial, ring: &inideal::Ring) -> Polynomial {
    Polynomial { inner: inideal::Polynomial::monomial(ring, Coeff::from_integer(1.into()), m.clone()) }
}

/// Accepts a `Polynomial` in `ring` or a string.
fn to_poly(ring: &inideal::Ring, obj: &Bound<'_, PyAny>) -> PyResult<inideal::Polynomial> {
    if let Ok(p) = obj.cast::<Polynomial>() {
        let p = p.get().inner.clone();
        if p.ring() != ring {
            return Err(PyValueError::new_err("polynomial belongs to a different ring"));
        }
        return Ok(p);
    }
    if let Ok(s) = obj.extract::<String>() {
        return inideal::Polynomial::parse(ring, &s).or_raise();
    }
    Err(PyTypeError::new_err("expected a Polynomial or a string"))
}

fn to_polys(ring: &inideal::Ring, objs: &Bound<'_, PyAny>) -> PyResult<Vec<inideal::Polynomial>> {
    objs.try_iter()?.map(|o| to_poly(ring, &o?)).collect()
}

#[pyclass(frozen, eq, skip_from_py_object, module = "inideal")]
#[derive(Clone, PartialEq)]
pub struct Ring {
    inner: inideal::Ring,
}

#[pymethods]
impl Ring {
    #[new]
    fn new(names: Vec<String>) -> PyResult<Self> {
        Ok(Ring { inner: inideal::PolyRing::new(names).or_raise()? })
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    fn gens(&self) -> Vec<Polynomial> {
        (0..self.inner.nvars()).map(|i| Polynomial { inner: inideal::Polynomial::var(&self.inner, i) }).collect()
    }

    fn parse(&self, text: &str) -> PyResult<Polynomial> {
        Ok(Polynomial { inner: inideal::Polynomial::parse(&self.inner, text).or_raise()? })
    }

    fn __len__(&self) -> usize {
        self.inner.nvars()
    }

    fn __repr__(&self) -> String {
        format!("Ring([{}])", self.inner.names().join(", "))
    }
}

#[pyclass(frozen, eq, skip_from_py_object, module = "inideal")]
#[derive(Clone, PartialEq)]
pub struct Polynomial {
    inner: inideal::Polynomial,
}

impl Polynomial {
    fn other(&self, obj: &Bound<'_, PyAny>) -> PyResult<inideal::Polynomial> {
        if let Ok(n) = obj.extract::<BigInt>() {
            return Ok(inideal::Polynomial::constant(self.inner.ring(), Coeff::from_integer(n)));
        }
        to_poly(self.inner.ring(), obj)
    }
}

#[pymethods]
impl Polynomial {
    #[getter]
    fn ring(&self) -> Ring {
        Ring { inner: self.inner.ring().clone() }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn total_degree(&self) -> PyResult<u64> {
        self.inner.total_degree().or_raise()
    }

    /// `(coefficient as text, exponent list)` pairs.
    fn terms(&self) -> Vec<(String, Vec<u32>)> {
        self.inner.terms().iter().map(|t| (t.coeff().to_string(), t.monomial().exponents().to_vec())).collect()
    }

    #[pyo3(signature = (order = "revlex"))]
    fn leading_term(&self, order: &str) -> PyResult<Polynomial> {
        let ord = self::order(self.inner.ring(), order)?;
        let t = ord.leading_term(&self.inner).or_raise()?;
        Ok(Polynomial { inner: inideal::Polynomial::monomial(self.inner.ring(), t.coeff().clone(), t.monomial().clone()) })
    }

    fn initial_form(&self, weight: Vec<u64>) -> PyResult<Polynomial> {
        Ok(Polynomial { inner: self.inner.initial_form(&self::weight(weight)?).or_raise()? })
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        Ok(Polynomial { inner: self.inner.try_add(&self.other(other)?).or_raise()? })
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        Ok(Polynomial { inner: self.inner.try_sub(&self.other(other)?).or_raise()? })
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        Ok(Polynomial { inner: self.other(other)?.try_sub(&self.inner).or_raise()? })
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        Ok(Polynomial { inner: self.inner.try_mul(&self.other(other)?).or_raise()? })
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        self.__mul__(other)
    }

    fn __neg__(&self) -> Polynomial {
        Polynomial { inner: self.inner.neg() }
    }

    fn __pow__(&self, k: u32, _modulo: Option<&Bound<'_, PyAny>>) -> Polynomial {
        Polynomial { inner: self.inner.pow(k) }
    }

    fn __str__(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.inner.to_text())
    }
}

#[pyclass(frozen, module = "inideal")]
pub struct GroebnerBasis {
    inner: inideal::ReducedGroebnerBasis,
    order: String,
}

#[pymethods]
impl GroebnerBasis {
    #[getter]
    fn elements(&self) -> Vec<Polynomial> {
        wrap(self.inner.elements())
    }

    #[getter]
    fn order(&self) -> String {
        self.order.clone()
    }

    fn leading_monomials(&self) -> Vec<Polynomial> {
        self.inner.leading_monomials().iter().map(|m| as_poly(m, self.inner.ring())).collect()
    }

    fn normal_form(&self, f: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        let f = to_poly(self.inner.ring(), f)?;
        Ok(Polynomial { inner: self.inner.normal_form(&f).or_raise()? })
    }

    fn contains(&self, f: &Bound<'_, PyAny>) -> PyResult<bool> {
        self.inner.contains(&to_poly(self.inner.ring(), f)?).or_raise()
    }

    fn is_unit_ideal(&self) -> bool {
        self.inner.is_unit_ideal()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_lines().join("\n")
    }
}

/// `N(t) / prod (1 - t^d)`.
#[pyclass(frozen, module = "inideal")]
pub struct HilbertSeries {
    inner: inideal::HilbertSeries,
}

#[pymethods]
impl HilbertSeries {
    #[getter]
    fn numerator(&self) -> Vec<BigInt> {
        self.inner.numerator().to_vec()
    }

    #[getter]
    fn denominator(&self) -> Vec<u64> {
        self.inner.denom_degrees().to_vec()
    }

    fn reduced(&self) -> HilbertSeries {
        HilbertSeries { inner: self.inner.reduced() }
    }

    /// Values of the Hilbert function in degrees `0..=dmax`.
    fn function(&self, dmax: usize) -> PyResult<Vec<u128>> {
        Ok(self.inner.expand(dmax).or_raise()?.values)
    }

    fn __str__(&self) -> String {
        self.inner.to_text()
    }
}

#[pyclass(frozen, module = "inideal")]
pub struct Family {
    inner: inideal::HomogenizedFamily,
}

#[pymethods]
impl Family {
    #[getter]
    fn weight(&self) -> Vec<u64> {
        self.inner.weight().entries().to_vec()
    }

    /// Generators of the homogenized ideal in `R[t]`.
    #[getter]
    fn total(&self) -> Vec<Polynomial> {
        wrap(self.inner.total().elements())
    }

    #[getter]
    fn total_ring(&self) -> Ring {
        Ring { inner: self.inner.total_ring().clone() }
    }

    /// The fiber at `t = c`; `c` is a rational number such as `"0"` or `"-2/3"`.
    fn fiber(&self, c: &str) -> PyResult<Vec<Polynomial>> {
        let c = coeff(self.inner.base().ring(), c)?;
        Ok(wrap(self.inner.fiber(&c).or_raise()?.gens()))
    }

    #[pyo3(signature = (bound = None))]
    fn is_free(&self, bound: Option<u128>) -> PyResult<bool> {
        let bound = match bound {
            Some(b) => b,
            None => default_freeness_bound(self.inner.base(), self.inner.weight()).or_raise()?,
        };
        Ok(self.inner.freeness_basis_check(bound).or_raise()?.holds())
    }

    fn __str__(&self) -> String {
        self.inner.to_text()
    }
}

#[pyclass(frozen, module = "inideal")]
pub struct BettiTable {
    inner: inideal::BettiTable,
}

#[pymethods]
impl BettiTable {
    fn __getitem__(&self, ij: (usize, u64)) -> u64 {
        self.inner.get(ij.0, ij.1)
    }

    /// Nonzero entries keyed by `(i, j)`.
    fn entries<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (k, v) in self.inner.entries() {
            d.set_item(*k, *v)?;
        }
        Ok(d)
    }

    #[getter]
    fn complete(&self) -> bool {
        self.inner.is_complete()
    }

    #[getter]
    fn jmax(&self) -> u64 {
        self.inner.j_max()
    }

    fn totals(&self) -> Vec<u64> {
        self.inner.totals()
    }

    fn projdim(&self) -> PyResult<usize> {
        Ok(projdim_and_reg(&self.inner).or_raise()?.0)
    }

    fn reg(&self) -> PyResult<u64> {
        Ok(projdim_and_reg(&self.inner).or_raise()?.1)
    }

    fn __str__(&self) -> String {
        self.inner.to_text()
    }
}

#[pyclass(frozen, module = "inideal")]
pub struct Ideal {
    inner: IdealGens,
}

#[pymethods]
impl Ideal {
    #[new]
    fn new(ring: &Ring, gens: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Ideal { inner: IdealGens::new(&ring.inner, to_polys(&ring.inner, gens)?).or_raise()? })
    }

    #[getter]
    fn ring(&self) -> Ring {
        Ring { inner: self.inner.ring().clone() }
    }

    #[getter]
    fn gens(&self) -> Vec<Polynomial> {
        wrap(self.inner.gens())
    }

    #[pyo3(signature = (order = "revlex"))]
    fn groebner_basis(&self, order: &str) -> PyResult<GroebnerBasis> {
        let ord = self::order(self.inner.ring(), order)?;
        let inner = buchberger(&self.inner, &ord).or_raise()?;
        Ok(GroebnerBasis { order: ord.to_text(self.inner.ring()), inner })
    }

    /// Minimal generators of the initial monomial ideal, or with `weight`,
    /// the reduced basis of the ideal of initial forms under `order`.
    #[pyo3(signature = (order = "revlex", weight = None))]
    fn initial_ideal(&self, order: &str, weight: Option<Vec<u64>>) -> PyResult<Vec<Polynomial>> {
        let ring = self.inner.ring();
        let ord = self::order(ring, order)?;
        match weight {
            Some(a) => {
                let forms = initial_ideal_weight(&self.inner, &self::weight(a)?, &ord).or_raise()?;
                Ok(wrap(buchberger(&forms, &ord).or_raise()?.elements()))
            }
            None => {
                let m = initial_ideal(&self.inner, &ord).or_raise()?;
                Ok(m.mingens().iter().map(|g| as_poly(g, ring)).collect())
            }
        }
    }

    /// Hilbert series of `R/I` in the grading `grading` (default: standard).
    #[pyo3(signature = (order = "revlex", grading = None))]
    fn hilbert_series(&self, order: &str, grading: Option<Vec<u64>>) -> PyResult<HilbertSeries> {
        let ring = self.inner.ring();
        let b = self::grading(ring, grading)?;
        if !self.inner.is_graded(&b) {
            return Err(PyValueError::new_err(format!("the ideal is not graded for ({b})")));
        }
        let m = initial_ideal(&self.inner, &self::order(ring, order)?).or_raise()?;
        Ok(HilbertSeries { inner: hilbert_series_monomial(&m, &b).or_raise()? })
    }

    #[pyo3(signature = (order = "revlex"))]
    fn krull_dim(&self, order: &str) -> PyResult<usize> {
        let m = initial_ideal(&self.inner, &self::order(self.inner.ring(), order)?).or_raise()?;
        Ok(krull_dim_monomial(&m))
    }

    /// A positive integer weight whose initial ideal agrees with `order`'s.
    #[pyo3(signature = (order = "revlex"))]
    fn weight_for(&self, order: &str) -> PyResult<Vec<u64>> {
        let a = represent_order_by_weight(&self.inner, &self::order(self.inner.ring(), order)?).or_raise()?;
        Ok(a.entries().to_vec())
    }

    /// The flat family degenerating `I` to its initial ideal under `weight`
    /// (default: a weight representing `tiebreak`).
    #[pyo3(signature = (weight = None, tiebreak = "revlex"))]
    fn family(&self, weight: Option<Vec<u64>>, tiebreak: &str) -> PyResult<Family> {
        let ord = self::order(self.inner.ring(), tiebreak)?;
        let a = match weight {
            Some(a) => self::weight(a)?,
            None => represent_order_by_weight(&self.inner, &ord).or_raise()?,
        };
        Ok(Family { inner: homogenize_ideal(&self.inner, &a, &ord).or_raise()? })
    }

    /// Graded Betti numbers of `R/I` for a homogeneous ideal, in degrees up
    /// to `jmax` (default: large enough for a complete table).
    #[pyo3(signature = (jmax = None))]
    fn betti(&self, jmax: Option<u64>) -> PyResult<BettiTable> {
        let jmax = match jmax {
            Some(j) => j,
            None => betti_degree_bound(&self.inner).or_raise()?,
        };
        Ok(BettiTable { inner: graded_betti(&self.inner, jmax).or_raise()? })
    }

    fn __repr__(&self) -> String {
        let gens: Vec<String> = self.inner.gens().iter().map(|g| format!("'{g}'")).collect();
        format!("Ideal([{}])", gens.join(", "))
    }
}

#[pyclass(frozen, module = "inideal")]
pub struct Subalgebra {
    inner: SubalgebraGens,
}

fn confirmed(s: SagbiStatus) -> bool {
    s == SagbiStatus::Confirmed
}

impl Subalgebra {
    fn default_cap(&self) -> PyResult<u64> {
        let mut d = 1;
        for g in self.inner.gens() {
            d = d.max(g.total_degree().or_raise()?);
        }
        Ok(2 * d)
    }
}

#[pymethods]
impl Subalgebra {
    #[new]
    fn new(ring: &Ring, gens: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Subalgebra { inner: SubalgebraGens::new(&ring.inner, to_polys(&ring.inner, gens)?).or_raise()? })
    }

    #[getter]
    fn gens(&self) -> Vec<Polynomial> {
        wrap(self.inner.gens())
    }

    /// `(passed, witnesses)`: the nonzero remainders of lifted toric relations.
    #[pyo3(signature = (order = "revlex"))]
    fn sagbi_test(&self, order: &str) -> PyResult<(bool, Vec<Polynomial>)> {
        let t = sagbi_test(&self.inner, &self::order(self.inner.ring(), order)?).or_raise()?;
        Ok((t.passed, wrap(&t.witnesses)))
    }

    /// `(generators, confirmed)`; `confirmed` is false when the completion
    /// was cut off at degree `cap` (default: twice the largest degree).
    #[pyo3(signature = (order = "revlex", cap = None))]
    fn sagbi(&self, order: &str, cap: Option<u64>) -> PyResult<(Vec<Polynomial>, bool)> {
        let cap = match cap {
            Some(c) => c,
            None => self.default_cap()?,
        };
        let s = sagbi_complete(&self.inner, &self::order(self.inner.ring(), order)?, cap).or_raise()?;
        Ok((wrap(s.gens.gens()), confirmed(s.status)))
    }

    /// Monomial generators of the initial algebra found up to `cap`.
    #[pyo3(signature = (order = "revlex", cap = None))]
    fn initial_algebra(&self, order: &str, cap: Option<u64>) -> PyResult<(Vec<Polynomial>, bool)> {
        let cap = match cap {
            Some(c) => c,
            None => self.default_cap()?,
        };
        let ord = self::order(self.inner.ring(), order)?;
        let s = sagbi_complete(&self.inner, &ord, cap).or_raise()?;
        let ms = initial_algebra_gens(&s, &ord).or_raise()?;
        Ok((ms.iter().map(|m| as_poly(m, self.inner.ring())).collect(), confirmed(s.status)))
    }

    #[pyo3(signature = (f, order = "revlex"))]
    fn subduct(&self, f: &Bound<'_, PyAny>, order: &str) -> PyResult<Polynomial> {
        let f = to_poly(self.inner.ring(), f)?;
        let s = subduct(&f, &self.inner, &self::order(self.inner.ring(), order)?).or_raise()?;
        Ok(Polynomial { inner: s.remainder })
    }

    /// `(values in degrees 0..=dmax, confirmed)`.
    #[pyo3(signature = (dmax, order = "revlex", grading = None))]
    fn hilbert_function(&self, dmax: usize, order: &str, grading: Option<Vec<u64>>) -> PyResult<(Vec<u128>, bool)> {
        let ring = self.inner.ring();
        let h = hilbert_series_subalgebra(&self.inner, &self::order(ring, order)?, &self::grading(ring, grading)?, dmax)
            .or_raise()?;
        Ok((h.table.values, confirmed(h.status)))
    }

    /// Reduced revlex basis of the presentation kernel in `K[Y1..Yk]`.
    fn kernel(&self) -> PyResult<GroebnerBasis> {
        let inner = presentation_kernel(self.inner.gens()).or_raise()?;
        Ok(GroebnerBasis { order: inner.order().to_text(inner.ring()), inner })
    }

    #[pyo3(signature = (order = "revlex"))]
    fn weight_for(&self, order: &str) -> PyResult<Vec<u64>> {
        let a = represent_sagbi_by_weight(&self.inner, &self::order(self.inner.ring(), order)?).or_raise()?;
        Ok(a.entries().to_vec())
    }
}

/// A positive integer weight `a` with `a.u > a.v` for every pair `(u, v)` of
/// monomials; raises `Infeasible` carrying a Farkas certificate otherwise.
#[pyfunction(name = "find_weight")]
fn py_find_weight(ring: &Ring, pairs: Vec<(String, String)>) -> PyResult<Vec<u64>> {
    let ms = pairs
        .iter()
        .map(|(u, v)| Ok((monomial(&ring.inner, u)?, monomial(&ring.inner, v)?)))
        .collect::<PyResult<Vec<_>>>()?;
    let set = ComparisonSet::new(ring.inner.nvars(), ms).or_raise()?;
    Ok(find_weight(&set).or_raise()?.entries().to_vec())
}

/// Caps the reductions of each Groebner computation on this thread; `None`
/// removes the cap.
#[pyfunction(name = "set_step_limit")]
fn py_set_step_limit(limit: Option<usize>) {
    set_step_limit(limit);
}

pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<Ring>()?;
    m.add_class::<Polynomial>()?;
    m.add_class::<Ideal>()?;
    m.add_class::<GroebnerBasis>()?;
    m.add_class::<HilbertSeries>()?;
    m.add_class::<Family>()?;
    m.add_class::<BettiTable>()?;
    m.add_class::<Subalgebra>()?;
    m.add_function(wrap_pyfunction!(py_find_weight, m)?)?;
    m.add_function(wrap_pyfunction!(py_set_step_limit, m)?)?;
    m.add("Infeasible", py.get_type::<Infeasible>())?;
    m.add("StepLimitExceeded", py.get_type::<StepLimitExceeded>())?;
    Ok(())
}

#[pymodule]
#[pyo3(name = "inideal")]
fn inideal_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
