use std::sync::Arc;

use laurent::{rat, LaurentError, LaurentPoly, Monomial, VarSet};
use proptest::prelude::*;

fn vars() -> Arc<VarSet> {
    VarSet::new(["a", "b", "c"])
}

prop_compose! {
    fn term()(e in prop::collection::vec(-3i64..=3, 3), n in -9i64..=9, d in 1i64..=4) -> (Monomial, (i64, i64)) {
        (Monomial(e), (n, d))
    }
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(term(), 0..6).prop_map(|ts| {
        let v = vars();
        LaurentPoly::from_terms(&v, ts.into_iter().map(|(m, (n, d))| (m, rat(n, d))))
    })
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn add_commutes_and_associates(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn mul_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(&vars()), a);
    }

    #[test]
    fn division_recovers_factor(p in poly(), q in nonzero_poly()) {
        let prod = &p * &q;
        prop_assert_eq!(prod.exact_div(&q).unwrap(), p);
    }

    #[test]
    fn division_result_is_exact_or_reported(p in poly(), q in nonzero_poly()) {
        match p.exact_div(&q) {
            Ok(r) => prop_assert_eq!(&r * &q, p),
            Err(e) => prop_assert_eq!(e, LaurentError::InexactDivision),
        }
    }

    #[test]
    fn text_round_trip(p in poly()) {
        let s = p.to_text();
        let back = LaurentPoly::parse(&s, &vars()).unwrap();
        prop_assert_eq!(back.to_text(), s);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn eval_is_a_ring_map(a in poly(), b in poly(), x in 1i64..5, y in -4i64..-1, z in 1i64..7) {
        let vals = [rat(x, 2), rat(y, 1), rat(z, 3)];
        let one = rat(1, 1);
        let ea = a.eval_in(&vals, &one).unwrap();
        let eb = b.eval_in(&vals, &one).unwrap();
        prop_assert_eq!((&a * &b).eval_in(&vals, &one).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval_in(&vals, &one).unwrap(), &ea + &eb);
    }
}
