mod common;

use common::*;
use inideal::{OrderSpec, Polynomial, WeightVector};
use num_traits::One;
use proptest::prelude::*;

fn orders() -> Vec<OrderSpec> {
    vec![
        OrderSpec::lex(),
        OrderSpec::deglex(),
        OrderSpec::revlex(),
        OrderSpec::permuted(inideal::BaseKind::Lex, vec![2, 0, 1]),
        OrderSpec::weight_refined(WeightVector::new(vec![1, 3, 2]).unwrap(), OrderSpec::revlex()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly(xyz(), 3, 4), g in poly(xyz(), 3, 4), h in poly(xyz(), 2, 3)) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Polynomial::one(f.ring()), f.clone());
    }

    #[test]
    fn text_round_trip(f in poly(xyz(), 4, 5)) {
        let text = f.to_text();
        prop_assert_eq!(Polynomial::parse(f.ring(), &text).unwrap(), f.clone());
        for o in orders() {
            prop_assert_eq!(Polynomial::parse(f.ring(), &o.format(&f)).unwrap(), f.clone());
        }
    }

    #[test]
    fn leading_terms_are_multiplicative(f in poly(xyz(), 3, 4), g in poly(xyz(), 3, 4)) {
        let fg = &f * &g;
        for o in orders() {
            let (lf, lg, lfg) = (o.leading_term(&f).unwrap(), o.leading_term(&g).unwrap(), o.leading_term(&fg).unwrap());
            prop_assert_eq!(lfg.monomial(), &lf.monomial().mul(lg.monomial()));
            prop_assert_eq!(lfg.coeff(), &(lf.coeff() * lg.coeff()));
        }
    }

    #[test]
    fn orders_are_monomial_orders(a in exps(3, 4), b in exps(3, 4), u in exps(3, 3)) {
        let r = xyz();
        let (ma, mb, mu) = (inideal::Monomial::new(a), inideal::Monomial::new(b), inideal::Monomial::new(u));
        let one = inideal::Monomial::one(3);
        for o in orders() {
            let ab = o.compare(&ma, &mb, &r).unwrap();
            prop_assert_eq!(ab, o.compare(&mb, &ma, &r).unwrap().reverse());
            prop_assert_eq!(ab == std::cmp::Ordering::Equal, ma == mb);
            prop_assert_eq!(o.compare(&ma.mul(&mu), &mb.mul(&mu), &r).unwrap(), ab);
            prop_assert_ne!(o.compare(&one, &ma, &r).unwrap(), std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn homogenization_inverts_specialization(f in poly(xyz(), 4, 5), w in prop::collection::vec(1u64..=4, 3)) {
        let a = WeightVector::new(w).unwrap();
        let h = f.homogenize(&a).unwrap();
        prop_assert!(h.is_homogeneous(&a.extended()));
        prop_assert_eq!(h.specialize_t(&inideal::Coeff::one()).unwrap(), f.clone());
        let ini = f.initial_form(&a).unwrap();
        prop_assert_eq!(h.specialize_t(&inideal::Coeff::from_integer(0.into())).unwrap(), ini.clone());
        prop_assert!(ini.is_homogeneous(&a));
    }
}

#[test]
fn leading_monomials_of_one_polynomial_under_three_orders() {
    let r = ring(&["X1", "X2", "X3", "X4"]);
    let f = Polynomial::parse(&r, "X1 + X2*X4 + X3^2").unwrap();
    let lead = |o: OrderSpec| o.leading_term(&f).unwrap().monomial().fmt_with(&r);
    assert_eq!(lead(OrderSpec::lex()), "X1");
    assert_eq!(lead(OrderSpec::deglex()), "X2*X4");
    assert_eq!(lead(OrderSpec::revlex()), "X3^2");
}
