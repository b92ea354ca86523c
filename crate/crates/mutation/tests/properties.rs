use mutation::random::random_skew_symmetrizable;
use mutation::{catalog, CMatrix, Seed, ValuedQuiver};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn matrix_mutation_is_an_involution(seed in any::<u64>(), n in 1usize..6, f in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_skew_symmetrizable(&mut rng, n, f, 4);
        for &k in b.mutable_labels() {
            let m = b.mutate(k).unwrap();
            prop_assert_eq!(m.mutate(k).unwrap(), b.clone());
            for (ri, row) in b.rows().iter().enumerate() {
                prop_assert_eq!(m.rows()[ri][(k - 1) as usize], -row[(k - 1) as usize]);
            }
        }
    }

    #[test]
    fn mutation_keeps_symmetrizer(seed in any::<u64>(), n in 2usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_skew_symmetrizable(&mut rng, n, 2, 3);
        let d = mutation::skew_symmetrizer(&b.principal());
        prop_assert!(d.is_some());
        for &k in b.mutable_labels() {
            prop_assert!(mutation::skew_symmetrizer(&b.mutate(k).unwrap().principal()).is_some());
        }
    }

    #[test]
    fn seed_mutation_is_an_involution(seed in any::<u64>(), n in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = Seed::initial(random_skew_symmetrizable(&mut rng, n, 2, 2));
        for &k in s.matrix().mutable_labels() {
            let back = s.mutate(k).unwrap().mutate(k).unwrap();
            prop_assert!(back.same_cluster(&s));
            prop_assert_eq!(back.matrix(), s.matrix());
        }
    }

    #[test]
    fn quiver_rules_agree_with_matrix_rule(
        classes in prop::collection::vec(prop::bool::ANY, 5),
        arrows in prop::collection::vec((0usize..5, 0usize..5), 0..12),
        path in prop::collection::vec(1i32..=3, 0..8),
    ) {
        let labels = vec![1, 2, 3, -1, -2];
        let class: Vec<i64> = classes.iter().map(|&c| if c { 3 } else { 1 }).collect();
        let arrows: Vec<(i32, i32)> = arrows
            .into_iter()
            .filter(|(a, b)| a != b && (*a < 3 || *b < 3))
            .map(|(a, b)| (labels[a], labels[b]))
            .collect();
        let mut q = ValuedQuiver::from_arrows(labels, 3, class.clone(), &arrows).unwrap();
        let mut b = q.decode();
        prop_assert_eq!(ValuedQuiver::encode(&b, class.clone()).unwrap(), q.clone());
        for k in path {
            q = q.mutate(k).unwrap();
            b = b.mutate(k).unwrap();
            prop_assert_eq!(q.decode(), b.clone());
        }
    }
}

#[test]
fn belt_quivers_carry_the_recurrence() {
    for case in [1u8, 2] {
        let base = catalog::underline_matrix(case).mutate(3).unwrap().mutate(2).unwrap();
        let mut q = ValuedQuiver::encode(&base, catalog::underline_classes(case)).unwrap();
        assert_eq!(CMatrix::from_quiver(&q), CMatrix::INITIAL);
        let cs = mutation::cmatrix::iterate(0, 20);
        for r in 0..20 {
            for &k in mutation::belt::step_between(r) {
                q = q.mutate(k).unwrap();
            }
            assert_eq!(CMatrix::from_quiver(&q), cs[&(r + 1)], "case {case} r {}", r + 1);
        }
    }
}
