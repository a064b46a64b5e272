mod common;

use common::*;
use inideal::betti::{betti_comparison, graded_betti, projdim_and_reg};
use inideal::family::{default_freeness_bound, homogenize_ideal};
use inideal::groebner::{buchberger, initial_ideal_weight, normal_form};
use inideal::hilbert::{
    compare_hilbert, hilbert_series_monomial, hilbert_series_monomial_with, krull_dim_monomial, PivotStrategy,
};
use inideal::weight::represent_order_by_weight;
use inideal::{Coeff, IdealGens, Monomial, MonomialIdeal, OrderSpec, Polynomial, ReducedGroebnerBasis, WeightVector};
use proptest::prelude::*;

fn s_polynomial(f: &Polynomial, g: &Polynomial, o: &OrderSpec) -> Polynomial {
    let (lf, lg) = (o.leading_term(f).unwrap(), o.leading_term(g).unwrap());
    let l = lf.monomial().lcm(lg.monomial());
    let uf = lf.monomial().quotient_of(&l).unwrap();
    let ug = lg.monomial().quotient_of(&l).unwrap();
    let one = Coeff::from_integer(1.into());
    &f.mul_term(&(&one / lf.coeff()), &uf) - &g.mul_term(&(&one / lg.coeff()), &ug)
}

fn assert_groebner(gb: &ReducedGroebnerBasis, ideal: &IdealGens) {
    let o = gb.order();
    for g in ideal.gens() {
        assert!(gb.contains(g).unwrap(), "generator not in the ideal");
    }
    for (i, f) in gb.elements().iter().enumerate() {
        assert_eq!(o.leading_term(f).unwrap().coeff(), &Coeff::from_integer(1.into()));
        for g in &gb.elements()[i + 1..] {
            assert!(normal_form(&s_polynomial(f, g, o), gb.elements(), o).unwrap().is_zero());
        }
        // Reduced: no term of f lies in the initial ideal of the others.
        let others: Vec<Monomial> =
            gb.elements().iter().filter(|h| *h != f).map(|h| o.leading_term(h).unwrap().monomial().clone()).collect();
        let others = MonomialIdeal::new(f.ring().nvars(), others);
        assert!(f.monomials().all(|m| !others.contains(m)));
    }
}

fn standard_count(ini: &MonomialIdeal, d: u32) -> u128 {
    monomials_of_degree(ini.nvars(), d).into_iter().filter(|e| !ini.contains(&Monomial::new(e.clone()))).count() as u128
}

fn two_orders() -> [OrderSpec; 2] {
    [OrderSpec::lex(), OrderSpec::revlex()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn buchberger_output_is_a_reduced_basis(i in ideal(xyz(), 3)) {
        for o in [OrderSpec::lex(), OrderSpec::deglex(), OrderSpec::revlex()] {
            let gb = buchberger(&i, &o).unwrap();
            assert_groebner(&gb, &i);
            prop_assert_eq!(buchberger(&gb.to_ideal(), &o).unwrap(), gb);
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(i in ideal(xyz(), 3)) {
        let mut rev = i.gens().to_vec();
        rev.reverse();
        let rev = IdealGens::new(i.ring(), rev).unwrap();
        let scaled = IdealGens::new(i.ring(), i.gens().iter().map(|g| g.scale(&Coeff::new((-3).into(), 2.into())))).unwrap();
        let o = OrderSpec::deglex();
        let gb = buchberger(&i, &o).unwrap();
        prop_assert_eq!(&buchberger(&rev, &o).unwrap(), &gb);
        prop_assert_eq!(&buchberger(&scaled, &o).unwrap(), &gb);
    }

    #[test]
    fn hilbert_series_counts_standard_monomials(i in homogeneous_ideal(xyz(), 3)) {
        let ini = buchberger(&i, &OrderSpec::revlex()).unwrap().initial_ideal();
        let ones = WeightVector::ones(3);
        let s = hilbert_series_monomial(&ini, &ones).unwrap();
        prop_assert_eq!(&hilbert_series_monomial_with(&ini, &ones, PivotStrategy::Variable).unwrap(), &s);
        let table = s.expand(8).unwrap();
        for d in 0..=8u32 {
            prop_assert_eq!(table.values[d as usize], standard_count(&ini, d));
        }
        prop_assert_eq!(s.reduced().pole_order_at_one(), krull_dim_monomial(&ini));
    }

    #[test]
    fn initial_ideals_share_hilbert_functions(i in homogeneous_ideal(xyz(), 3)) {
        let [a, b] = two_orders();
        let c = compare_hilbert(&i, &WeightVector::ones(3), &a, &b, 12).unwrap();
        prop_assert!(c.functions_agree());
        prop_assert!(c.dimensions_agree());
    }

    #[test]
    fn weights_represent_orders(i in homogeneous_ideal(xyz(), 3)) {
        for o in two_orders() {
            let gb = buchberger(&i, &o).unwrap();
            let a = represent_order_by_weight(&i, &o).unwrap();
            let forms = initial_ideal_weight(&i, &a, &o).unwrap();
            let regenerated = buchberger(&forms, &o).unwrap();
            prop_assert!(regenerated.elements().iter().all(Polynomial::is_monomial));
            prop_assert_eq!(regenerated.initial_ideal(), gb.initial_ideal());
        }
    }

    #[test]
    fn family_fibers_and_freeness(i in ideal(xyz(), 3), w in prop::collection::vec(1u64..=3, 3)) {
        let a = WeightVector::new(w).unwrap();
        let tie = OrderSpec::revlex();
        let fam = homogenize_ideal(&i, &a, &tie).unwrap();
        prop_assert!(fam.is_homogeneous());
        prop_assert_eq!(fam.total_initial_ideal().unwrap(), fam.base_basis().initial_ideal());
        let one = Coeff::from_integer(1.into());
        let zero = Coeff::from_integer(0.into());
        prop_assert_eq!(&buchberger(&fam.fiber(&one).unwrap(), &tie).unwrap(), &buchberger(&i, &tie).unwrap());
        let ini = initial_ideal_weight(&i, &a, &tie).unwrap();
        prop_assert_eq!(buchberger(&fam.fiber(&zero).unwrap(), &tie).unwrap(), buchberger(&ini, &tie).unwrap());
        let bound = default_freeness_bound(&i, &a).unwrap().min(8);
        prop_assert!(fam.freeness_basis_check(bound).unwrap().holds());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn betti_numbers_are_consistent(i in homogeneous_ideal(xyz(), 3)) {
        let c = betti_comparison(&i, &OrderSpec::deglex(), None).unwrap();
        let (pd, reg) = projdim_and_reg(&c.ideal).unwrap();
        prop_assert!(pd <= 3 && pd <= c.projdim.1 && reg <= c.reg.1);
        // The Betti numerator reproduces the Hilbert series.
        let ini = buchberger(&i, &OrderSpec::revlex()).unwrap().initial_ideal();
        let s = hilbert_series_monomial(&ini, &WeightVector::ones(3)).unwrap();
        prop_assert_eq!(c.ideal.euler_numerator(), s.numerator().to_vec());
        prop_assert!(c.ideal.entries().keys().all(|&(k, j)| j >= k as u64));
        let gb = buchberger(&i, &OrderSpec::revlex()).unwrap();
        if gb.elements().iter().all(|g| g.total_degree().unwrap() > 1) {
            prop_assert!(c.ideal.entries().keys().all(|&(k, j)| k == 0 || j > k as u64));
        }
        let again = graded_betti(&i, c.ideal.j_max()).unwrap();
        prop_assert_eq!(again, c.ideal);
    }
}
