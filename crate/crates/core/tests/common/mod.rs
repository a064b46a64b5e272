#![allow(dead_code)]

use inideal::{Coeff, IdealGens, Monomial, PolyRing, Polynomial, Ring};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn ring(names: &[&str]) -> Ring {
    PolyRing::new(names.iter().copied()).unwrap()
}

pub fn xyz() -> Ring {
    ring(&["x", "y", "z"])
}

pub fn exps(n: usize, max_deg: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max_deg, n).prop_filter("bounded degree", move |e| e.iter().sum::<u32>() <= max_deg)
}

pub fn coeff() -> impl Strategy<Value = i64> {
    prop_oneof![-3i64..=-1, 1i64..=3]
}

pub fn poly(r: Ring, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = r.nvars();
    prop::collection::vec((coeff(), exps(n, max_deg)), 1..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            &r,
            terms.into_iter().map(|(c, e)| (Coeff::from_integer(BigInt::from(c)), Monomial::new(e))),
        )
        .unwrap()
    })
}

/// Monomials of total degree exactly `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n - 1 {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=d).rev() {
            cur.push(e);
            rec(n, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Standard-graded polynomial: up to `max_terms` monomials of one degree.
pub fn homogeneous_poly(r: Ring, min_deg: u32, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = r.nvars();
    (min_deg..=max_deg).prop_flat_map(move |d| {
        let monos = monomials_of_degree(n, d);
        let r = r.clone();
        prop::collection::vec((coeff(), prop::sample::select(monos)), 1..=max_terms).prop_map(move |terms| {
            Polynomial::from_terms(
                &r,
                terms.into_iter().map(|(c, e)| (Coeff::from_integer(BigInt::from(c)), Monomial::new(e))),
            )
            .unwrap()
        })
    })
}

pub fn homogeneous_ideal(r: Ring, max_gens: usize) -> impl Strategy<Value = IdealGens> {
    let rr = r.clone();
    prop::collection::vec(homogeneous_poly(r, 1, 3, 3), 1..=max_gens)
        .prop_map(move |gens| IdealGens::new(&rr, gens).unwrap())
}

pub fn ideal(r: Ring, max_gens: usize) -> impl Strategy<Value = IdealGens> {
    let rr = r.clone();
    prop::collection::vec(poly(r, 3, 3), 1..=max_gens).prop_map(move |gens| IdealGens::new(&rr, gens).unwrap())
}
