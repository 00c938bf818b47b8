use std::sync::Arc;

use canal_core::parse::{parse_rational_function, parse_surface_expression};
use canal_core::qpoly::factor::is_irreducible;
use canal_core::qpoly::resultant::resultant_upoly;
use canal_core::qpoly::{factor_univariate, Field, MPoly, Rat, Ring, UPoly};
use canal_core::sqrtfield::{RatFunc, SqrtElem};
use proptest::prelude::*;

fn upoly(max_deg: usize, bound: i64) -> impl Strategy<Value = UPoly<Rat>> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| UPoly::from_ints(&c))
}

fn nonzero_upoly(max_deg: usize, bound: i64) -> impl Strategy<Value = UPoly<Rat>> {
    upoly(max_deg, bound).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (upoly(2, 4), nonzero_upoly(1, 3)).prop_map(|(n, d)| RatFunc::new(n, d))
}

fn radicand() -> impl Strategy<Value = Arc<UPoly<Rat>>> {
    prop::sample::select(vec![
        UPoly::from_ints(&[1, 0, 1]),
        UPoly::from_ints(&[-2, 0, 0, 1]),
        UPoly::from_ints(&[3, 2]),
        UPoly::from_ints(&[1, -1, 0, 0, 1]),
    ])
    .prop_map(Arc::new)
}

fn triple() -> impl Strategy<Value = (SqrtElem, SqrtElem, SqrtElem)> {
    radicand().prop_flat_map(|p| {
        let elem = move |p: Arc<UPoly<Rat>>| (ratfunc(), ratfunc()).prop_map(move |(a, b)| SqrtElem::new(a, b, &p));
        (elem(p.clone()), elem(p.clone()), elem(p))
    })
}

fn mpoly() -> impl Strategy<Value = MPoly<Rat>> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -9i64..=9, 1i64..=4), 0..6).prop_map(|terms| {
        MPoly::from_terms(
            terms.into_iter().map(|((a, b, c), n, d)| (vec![a, b, c], Rat::new(n.into(), d.into()))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn sqrt_field_ring_laws((a, b, c) in triple()) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert!(a.minus(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.times(&a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn sqrt_field_conjugation((a, b, _c) in triple()) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.times(&b).conjugate(), a.conjugate().times(&b.conjugate()));
        prop_assert_eq!(a.plus(&b).conjugate(), a.conjugate().plus(&b.conjugate()));
        let n = a.times(&a.conjugate());
        prop_assert!(n.is_rational());
        prop_assert_eq!(n.rational_part().unwrap(), a.norm());
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(p in nonzero_upoly(4, 6), q in nonzero_upoly(4, 6)) {
        prop_assume!(p.deg() + q.deg() >= 1);
        let res = resultant_upoly(&p, &q);
        let common = p.gcd(&q).deg() >= 1;
        prop_assert_eq!(res.is_zero(), common);
    }

    #[test]
    fn resultant_of_shared_factor_is_zero(a in nonzero_upoly(3, 5), b in nonzero_upoly(3, 5), c in upoly(2, 5)) {
        prop_assume!(c.deg() >= 1);
        prop_assert!(resultant_upoly(&a.mul_ref(&c), &b.mul_ref(&c)).is_zero());
    }

    #[test]
    fn factorization_reassembles(p in nonzero_upoly(7, 9), q in nonzero_upoly(2, 4)) {
        let f = p.mul_ref(&q).mul_ref(&q);
        let fac = factor_univariate(&f).unwrap();
        prop_assert_eq!(fac.expand(), f);
        for (i, (g, e)) in fac.factors.iter().enumerate() {
            prop_assert!(*e >= 1);
            prop_assert!(g.lead().is_one());
            prop_assert!(g.deg() >= 1);
            prop_assert!(is_irreducible(g));
            for (h, _) in &fac.factors[i + 1..] {
                prop_assert!(g != h);
            }
        }
    }

    #[test]
    fn parse_print_round_trip(p in mpoly()) {
        let text = p.to_string();
        prop_assert_eq!(parse_surface_expression(&text).unwrap(), p);
    }

    #[test]
    fn rational_function_round_trip(r in ratfunc()) {
        prop_assert_eq!(parse_rational_function(&r.display("t")).unwrap(), r);
    }
}
