//! Seeded random instances: sparse, small coefficients, low degree.

use inideal::poly::monomials_of_weighted_degree;
use inideal::{Coeff, IdealGens, Monomial, Polynomial, Ring, WeightVector};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    fn coeff(&mut self) -> Coeff {
        let mut c = 0i64;
        while c == 0 {
            c = self.rng.gen_range(-3..=3);
        }
        Coeff::from_integer(c.into())
    }

    pub fn weight(&mut self, n: usize, max: u64) -> WeightVector {
        WeightVector::new((0..n).map(|_| self.rng.gen_range(1..=max)).collect()).expect("positive entries")
    }

    /// Up to three terms, all of `b`-degree `d`; zero if no monomial has
    /// that degree.
    pub fn graded_poly(&mut self, ring: &Ring, b: &WeightVector, d: u128) -> Polynomial {
        let monos = monomials_of_weighted_degree(b, d);
        let k = self.rng.gen_range(1..=3usize).min(monos.len());
        let chosen: Vec<&Monomial> = monos.choose_multiple(&mut self.rng, k).collect();
        let terms: Vec<(Coeff, Monomial)> = chosen.into_iter().map(|m| (self.coeff(), m.clone())).collect();
        Polynomial::from_terms(ring, terms).expect("monomials match the ring")
    }

    /// Two or three nonzero generators of `b`-degree between `min_b` and
    /// `max_deg * min_b`.
    pub fn graded_ideal(&mut self, ring: &Ring, b: &WeightVector, max_deg: u128) -> IdealGens {
        let lo = u128::from(*b.entries().iter().min().expect("nonempty weight"));
        let ngens = self.rng.gen_range(2..=3);
        let mut gens = Vec::new();
        while gens.len() < ngens {
            let d = self.rng.gen_range(lo..=max_deg * lo);
            let p = self.graded_poly(ring, b, d);
            if !p.is_zero() {
                gens.push(p);
            }
        }
        IdealGens::new(ring, gens).expect("same ring")
    }

    pub fn homogeneous_ideal(&mut self, ring: &Ring, max_deg: u128) -> IdealGens {
        self.graded_ideal(ring, &WeightVector::ones(ring.nvars()), max_deg)
    }

    /// Two or three generators with one to three terms of total degree at
    /// most `max_deg`, not necessarily homogeneous.
    pub fn ideal(&mut self, ring: &Ring, max_deg: u32) -> IdealGens {
        let n = ring.nvars();
        let ngens = self.rng.gen_range(2..=3);
        let mut gens = Vec::new();
        while gens.len() < ngens {
            let nterms = self.rng.gen_range(1..=3);
            let terms: Vec<(Coeff, Monomial)> = (0..nterms)
                .map(|_| {
                    let d = self.rng.gen_range(1..=max_deg);
                    let mut e = vec![0u32; n];
                    for _ in 0..d {
                        e[self.rng.gen_range(0..n)] += 1;
                    }
                    (self.coeff(), Monomial::new(e))
                })
                .collect();
            let p = Polynomial::from_terms(ring, terms).expect("monomials match the ring");
            if !p.is_zero() && !p.is_constant() {
                gens.push(p);
            }
        }
        IdealGens::new(ring, gens).expect("same ring")
    }
}
