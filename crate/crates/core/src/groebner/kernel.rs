use crate::error::{Error, Result};
use crate::order::OrderSpec;
use crate::poly::{check_same_ring, Monomial, PolyRing, Polynomial, Ring};

use super::{buchberger, IdealGens, ReducedGroebnerBasis};

/// `I ∩ K[keep]` via a block order: the eliminated variables form a DegLex
/// block that dominates, ties go to `rest` (an order on the whole ring that
/// is only consulted on the kept variables). The generators returned are the
/// reduced basis elements free of eliminated variables, so they form the
/// reduced basis of the elimination ideal under `rest`.
pub fn eliminate(ideal: &IdealGens, keep: &[usize], rest: &OrderSpec) -> Result<IdealGens> {
    let n = ideal.ring().nvars();
    if keep.iter().any(|&i| i >= n) {
        return Err(Error::InvalidArgument("kept variable out of range".into()));
    }
    let eliminated: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
    let gb = buchberger(ideal, &OrderSpec::elimination(eliminated.clone(), rest.clone()))?;
    let gens = gb
        .elements()
        .iter()
        .filter(|g| g.monomials().all(|m| eliminated.iter().all(|&i| m.exponents()[i] == 0)))
        .cloned();
    IdealGens::new(ideal.ring(), gens)
}

/// Fresh ring `K[Y1, ..., Yk]`.
pub fn kernel_ring(k: usize) -> Result<Ring> {
    PolyRing::new((1..=k).map(|i| format!("Y{i}")))
}

/// Kernel of `K[Y1..Yk] -> R`, `Yi -> images[i]`, as the reduced Groebner
/// basis under degree reverse lexicographic order on `K[Y]`. Computed by
/// eliminating the variables of `R` from `(Yi - fi)`.
pub fn presentation_kernel(images: &[Polynomial]) -> Result<ReducedGroebnerBasis> {
    let Some(first) = images.first() else {
        return Err(Error::InvalidArgument("no generators".into()));
    };
    let base = first.ring().clone();
    for f in images {
        check_same_ring(&base, f.ring())?;
        if f.is_zero() {
            return Err(Error::InvalidArgument("zero generator".into()));
        }
    }
    let n = base.nvars();
    let k = images.len();
    let target = kernel_ring(k)?;

    let mut names: Vec<String> = base.names().to_vec();
    for i in 1..=k {
        let mut y = format!("Y{i}");
        while base.names().contains(&y) {
            y.insert(0, '_');
        }
        names.push(y);
    }
    let joint = PolyRing::new(names)?;
    let embed: Vec<usize> = (0..n).collect();
    let mut gens = Vec::with_capacity(k);
    for (i, f) in images.iter().enumerate() {
        let fx = f.map_variables(&joint, &embed)?;
        let y = Polynomial::var(&joint, n + i);
        gens.push(&y - &fx);
    }
    let keep: Vec<usize> = (n..n + k).collect();
    let elim = eliminate(&IdealGens::new(&joint, gens)?, &keep, &OrderSpec::revlex())?;

    let project = |g: &Polynomial| {
        Polynomial::from_terms(
            &target,
            g.terms().iter().map(|t| (t.coeff().clone(), Monomial::new(t.monomial().exponents()[n..].to_vec()))),
        )
    };
    let elements = elim.gens().iter().map(project).collect::<Result<Vec<_>>>()?;
    Ok(ReducedGroebnerBasis::from_parts(&target, &OrderSpec::revlex(), elements))
}

/// Binomial kernel of `Yi -> monomials[i]` in `ring`.
pub fn toric_kernel(ring: &Ring, monomials: &[Monomial]) -> Result<ReducedGroebnerBasis> {
    let images: Vec<Polynomial> = monomials
        .iter()
        .map(|m| {
            if m.nvars() != ring.nvars() {
                Err(Error::RingMismatch("monomial arity differs from the ring".into()))
            } else {
                Ok(Polynomial::monomial(ring, crate::poly::integer(1), m.clone()))
            }
        })
        .collect::<Result<_>>()?;
    presentation_kernel(&images)
}
