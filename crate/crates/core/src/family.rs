//! The homogenized family `S/hom_a(I)` over `K[t]`, its fibers, and a
//! bounded check that it is a free `K[t]`-module.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, IdealGens, ReducedGroebnerBasis};
use crate::linalg::{Echelon, SparseRow};
use crate::monomial_ideal::MonomialIdeal;
use crate::order::OrderSpec;
use crate::poly::{monomials_of_weighted_degree, Coeff, Monomial, Polynomial, Ring, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogenizedFamily {
    base: IdealGens,
    a: WeightVector,
    tiebreak: OrderSpec,
    /// Reduced basis of `I` under `weight(a; tiebreak)`.
    base_basis: ReducedGroebnerBasis,
    /// `hom_a` of `base_basis`: the reduced basis of `hom_a(I)` in `R[t]`.
    total: ReducedGroebnerBasis,
}

/// `hom_a(I)` from homogenizations of the reduced `weight(a; tiebreak)`
/// basis. Homogenizing arbitrary generators can give a smaller ideal.
pub fn homogenize_ideal(ideal: &IdealGens, a: &WeightVector, tiebreak: &OrderSpec) -> Result<HomogenizedFamily> {
    let ring = ideal.ring();
    if ring.homvar().is_some() {
        return Err(Error::InvalidRing("the base ring already has a homogenizing variable".into()));
    }
    a.check_len(ring.nvars())?;
    tiebreak.validate(ring)?;
    let tau_a = OrderSpec::weight_refined(a.clone(), tiebreak.clone());
    let base_basis = buchberger(ideal, &tau_a)?;
    let ext = ring.extend()?;
    let ext_order = OrderSpec::extended_to_t(a.clone(), tiebreak.clone());
    let total = base_basis
        .elements()
        .iter()
        .map(|g| g.homogenize_into(a, &ext))
        .collect::<Result<Vec<_>>>()?;
    let total = ReducedGroebnerBasis::from_parts(&ext, &ext_order, total);
    Ok(HomogenizedFamily { base: ideal.clone(), a: a.clone(), tiebreak: tiebreak.clone(), base_basis, total })
}

/// The `a'`-degree bound used when none is given: twice the largest
/// `a`-degree among the generators of `I`.
pub fn default_freeness_bound(ideal: &IdealGens, a: &WeightVector) -> Result<u128> {
    let mut best = 0u128;
    for g in ideal.gens() {
        best = best.max(g.a_degree(a)?);
    }
    Ok((2 * best).max(1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCount {
    pub degree: u128,
    /// Standard monomials `t^k m` of `a'`-degree `degree`.
    pub standard: usize,
    /// `dim S_degree - dim hom_a(I)_degree`.
    pub codimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessReport {
    pub bound: u128,
    pub degrees: Vec<DegreeCount>,
}

impl FreenessReport {
    pub fn holds(&self) -> bool {
        self.degrees.iter().all(|d| d.standard == d.codimension)
    }
}

impl HomogenizedFamily {
    pub fn base(&self) -> &IdealGens {
        &self.base
    }

    pub fn weight(&self) -> &WeightVector {
        &self.a
    }

    pub fn tiebreak(&self) -> &OrderSpec {
        &self.tiebreak
    }

    pub fn base_basis(&self) -> &ReducedGroebnerBasis {
        &self.base_basis
    }

    pub fn total(&self) -> &ReducedGroebnerBasis {
        &self.total
    }

    pub fn total_ring(&self) -> &Ring {
        self.total.ring()
    }

    /// `a' = (a, 1)`.
    pub fn extended_weight(&self) -> WeightVector {
        self.a.extended()
    }

    pub fn is_homogeneous(&self) -> bool {
        let ext = self.extended_weight();
        self.total.elements().iter().all(|g| g.is_homogeneous(&ext))
    }

    /// Generators of `hom_a(I) + (t - c)` read in `R`.
    pub fn fiber(&self, c: &Coeff) -> Result<IdealGens> {
        let base_ring = self.base.ring();
        let gens = self
            .total
            .elements()
            .iter()
            .map(|g| g.specialize_t_into(c, base_ring))
            .collect::<Result<Vec<_>>>()?;
        IdealGens::new(base_ring, gens)
    }

    /// Compares, in every `a'`-degree `d <= bound`, the number of standard
    /// monomials `t^k m` (`m` outside `ini(I)`, `a(m) <= d`) with the
    /// codimension of `hom_a(I)_d` in `S_d`, the latter by exact rank of the
    /// span of all `u * g` with `g` in the total basis.
    pub fn freeness_basis_check(&self, bound: u128) -> Result<FreenessReport> {
        let ext_weight = self.extended_weight();
        let ini = self.base_basis.initial_ideal();
        let n = self.base.ring().nvars();
        let mut degrees = Vec::new();
        let mut standard_below = 0usize;
        for d in 0..=bound {
            standard_below += monomials_of_weighted_degree(&self.a, d)
                .iter()
                .filter(|m| !ini.contains(m))
                .count();
            let dim_s = monomials_of_weighted_degree(&ext_weight, d).len();
            let rank = self.ideal_piece_rank(&ext_weight, d)?;
            degrees.push(DegreeCount { degree: d, standard: standard_below, codimension: dim_s - rank });
        }
        debug_assert!(ini.nvars() == n);
        Ok(FreenessReport { bound, degrees })
    }

    fn ideal_piece_rank(&self, ext_weight: &WeightVector, d: u128) -> Result<usize> {
        let mut echelon: Echelon<Monomial> = Echelon::new();
        for g in self.total.elements() {
            let dg = g.a_degree(ext_weight)?;
            if dg > d {
                continue;
            }
            for u in monomials_of_weighted_degree(ext_weight, d - dg) {
                let row: SparseRow<Monomial> = g
                    .terms()
                    .iter()
                    .filter(|t| !t.coeff().is_zero())
                    .map(|t| (t.monomial().mul(&u), t.coeff().clone()))
                    .collect();
                echelon.insert(row);
            }
        }
        Ok(echelon.rank())
    }

    /// Leading monomials of the total basis restricted to `R`.
    pub fn total_initial_ideal(&self) -> Result<MonomialIdeal> {
        let n = self.base.ring().nvars();
        let ini = self.total.initial_ideal();
        let mut gens = Vec::with_capacity(ini.mingens().len());
        for m in ini.mingens() {
            if m.exponents()[n] != 0 {
                return Err(Error::Inconsistency(format!(
                    "leading monomial {} of the family involves t",
                    m.fmt_with(self.total.ring())
                )));
            }
            gens.push(Monomial::new(m.exponents()[..n].to_vec()));
        }
        Ok(MonomialIdeal::new(n, gens))
    }

    /// Text dump: weight and tie-break header, then the total basis.
    pub fn to_text(&self) -> String {
        let mut out = format!("weight {}\ntiebreak {}\n", self.a, self.tiebreak.to_text(self.base.ring()));
        for line in self.total.to_lines() {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

/// `psi(X_i) = c^{-a_i} X_i`, the graded isomorphism between the fiber at
/// `c` and the fiber at 1.
pub fn rescale(f: &Polynomial, a: &WeightVector, c: &Coeff) -> Result<Polynomial> {
    if c.is_zero() {
        return Err(Error::InvalidArgument("rescaling needs a nonzero parameter".into()));
    }
    let ring = f.ring();
    a.check_len(ring.nvars())?;
    let images = (0..ring.nvars())
        .map(|i| {
            let e = usize::try_from(a.entries()[i]).map_err(|_| Error::InvalidWeight("weight entry too large".into()))?;
            let factor = num_traits::pow(c.clone(), e).recip();
            Ok(Polynomial::var(ring, i).scale(&factor))
        })
        .collect::<Result<Vec<_>>>()?;
    f.substitute(&images, ring)
}
