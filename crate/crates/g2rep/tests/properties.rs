use g2rep::group::{invariant_form, is_reduced, preserves_form, weyl_image};
use g2rep::{
    generalized_minor, infer_degree, lowering_derivation, named_function, one_param, random_group_point, registry,
    weyl_lift_word, GroupPoint, Sign,
};
use laurent::{rat, Rational};
use mutation::DegreeVector;
use num::One;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn minor_name(family: u8, weight: (i64, i64)) -> &'static str {
    match (family, weight) {
        (1, (2, 1)) => "Delta_omega1",
        (1, (1, 1)) => "Delta_s1_omega1",
        (1, (1, 0)) => "Delta_s2s1_omega1",
        (1, (-1, 0)) => "Delta_s1s2s1_omega1",
        (1, (-1, -1)) => "Delta_s2s1s2s1_omega1",
        (1, (-2, -1)) => "Delta_w0_omega1",
        (2, (3, 2)) => "Delta_omega2",
        (2, (3, 1)) => "Delta_s2_omega2",
        (2, (0, 1)) => "Delta_s1s2_omega2",
        (2, (0, -1)) => "Delta_s2s1s2_omega2",
        (2, (-3, -1)) => "Delta_s1s2s1s2_omega2",
        (2, (-3, -2)) => "Delta_w0_omega2",
        _ => panic!("unexpected extremal weight {weight:?}"),
    }
}

#[test]
fn every_prefix_of_both_longest_words() {
    // Each prefix w of 121212 or 212121 gives Δ^{wωᵢ}(x) = Δ^{ωᵢ}(x w̄); it must depend only on wωᵢ.
    let mut seen = 0;
    for top in [[1u8, 2, 1, 2, 1, 2], [2, 1, 2, 1, 2, 1]] {
        for len in 0..=6 {
            let w = &top[..len];
            assert!(is_reduced(w));
            for family in [1u8, 2] {
                let omega = if family == 1 { (2, 1) } else { (3, 2) };
                let name = minor_name(family, weyl_image(w, omega));
                assert_eq!(generalized_minor(family, w).unwrap(), named_function(name).unwrap(), "{name} via {w:?}");
                seen += 1;
            }
        }
    }
    assert_eq!(seen, 28);
}

#[test]
fn nonreduced_words_rejected() {
    assert!(weyl_lift_word(&[1, 1]).is_err());
    assert!(weyl_lift_word(&[1, 2, 1, 2, 1, 2, 1]).is_err());
}

#[test]
fn registry_degrees_match_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let expect = [
        ("F(2,1)", 2, (2, 1)),
        ("F(1,1)", 2, (1, 1)),
        ("F(1,0)", 2, (1, 0)),
        ("F2(0,0)", 2, (0, 0)),
        ("F(-1,0)", 2, (-1, 0)),
        ("F(-1,-1)", 2, (-1, -1)),
        ("F(-2,-1)", 2, (-2, -1)),
        ("X-2", 1, (0, 0)),
        ("X1_GLS", 1, (1, 1)),
    ];
    for (name, case, (p, q)) in expect {
        let d = infer_degree(&named_function(name).unwrap(), case, &mut rng).unwrap();
        assert_eq!((d.p, d.q), (p, q), "{name}");
    }
    let d = infer_degree(&named_function("X2_GLS").unwrap(), 1, &mut rng).unwrap();
    assert_eq!(d, DegreeVector { n: 3, p: 3, q: 2 });
}

#[test]
fn composite_evaluation_agrees_with_expansion() {
    let r = registry();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..3 {
        let g = random_group_point(&mut rng, 6);
        for name in ["X2", "X-2", "Y1_GLS"] {
            assert_eq!(r.evaluate(name, &g).unwrap(), r.get(name).unwrap().function.evaluate(&g), "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn one_parameter_subgroups_are_homomorphisms(i in 1u8..=2, raise in any::<bool>(), s in small_rational(), t in small_rational()) {
        let sign = if raise { Sign::Raise } else { Sign::Lower };
        let a = one_param(i, s.clone(), sign).unwrap();
        let b = one_param(i, t.clone(), sign).unwrap();
        let ab = one_param(i, &s + &t, sign).unwrap();
        let prod = a.mul(&b);
        prop_assert_eq!(prod.matrix(), ab.matrix());
    }

    #[test]
    fn samples_lie_in_the_group(seed in any::<u64>(), len in 0usize..10) {
        let g = random_group_point(&mut ChaCha8Rng::seed_from_u64(seed), len);
        prop_assert_eq!(g.matrix().det(), Rational::one());
        prop_assert!(preserves_form(&g, &invariant_form()));
    }

    #[test]
    fn minors_are_left_invariant_under_lower_unipotents(seed in any::<u64>(), i in 1u8..=2, t in small_rational()) {
        // Δ(y·g) = Δ(g) for y ∈ N⁻, the defining invariance of the coordinate ring quotient
        let g = random_group_point(&mut ChaCha8Rng::seed_from_u64(seed), 5);
        let y = one_param(i, t, Sign::Lower).unwrap();
        for name in ["Delta_omega2", "Delta_s2s1_omega1", "X0", "F(1,0)", "F1(0,0)"] {
            let f = named_function(name).unwrap();
            prop_assert_eq!(f.evaluate(&y.mul(&g)), f.evaluate(&g));
        }
    }

    #[test]
    fn lowering_is_a_derivation(seed in any::<u64>()) {
        let g = random_group_point(&mut ChaCha8Rng::seed_from_u64(seed), 4);
        let a = named_function("Delta_s1_omega1").unwrap();
        let b = named_function("Delta_s2_omega2").unwrap();
        let lhs = lowering_derivation(1, &(&a * &b)).evaluate(&g);
        let rhs = &lowering_derivation(1, &a).evaluate(&g) * &b.evaluate(&g)
            + &a.evaluate(&g) * &lowering_derivation(1, &b).evaluate(&g);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_is_unchanged_by_scaling(n in 1i64..20, d in 1i64..20, neg in any::<bool>(), seed in any::<u64>()) {
        let c = if neg { rat(-n, d) } else { rat(n, d) };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = named_function("F(-1,-1)").unwrap();
        let a = infer_degree(&f, 2, &mut rng).unwrap();
        let b = infer_degree(&f.scale(&c), 2, &mut rng).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn identity_point_values() {
    let e = GroupPoint::identity(&Rational::one());
    assert_eq!(named_function("Delta_w0_omega1").unwrap().evaluate(&e), rat(0, 1));
}
