mod common;

use common::arb_semigroup;
use proptest::prelude::*;
use semigroup_norm::green::{d_relation_l_then_r, d_relation_r_then_l, green_structure, Partition};
use semigroup_norm::semigroup::validate;
use semigroup_norm::{catalog, natural_order, FiniteSemigroup};

fn is_partition(p: &Partition, order: usize) -> bool {
    let mut seen = vec![false; order];
    for class in &p.classes {
        if class.is_empty() {
            return false;
        }
        for x in class.iter() {
            if x >= order || seen[x] {
                return false;
            }
            seen[x] = true;
        }
    }
    seen.into_iter().all(|b| b)
}

fn check_green(s: &FiniteSemigroup) {
    let g = green_structure(s);
    let n = s.order();
    for p in [&g.r_classes, &g.l_classes, &g.d_classes, &g.h_classes] {
        assert!(is_partition(p, n));
    }
    assert!(g.h_classes.refines(&g.r_classes));
    assert!(g.h_classes.refines(&g.l_classes));
    assert!(g.r_classes.refines(&g.d_classes));
    assert!(g.l_classes.refines(&g.d_classes));
    // R∘L and L∘R give the same relation, and it is the partition's relation
    let rl = d_relation_r_then_l(s, &g);
    let lr = d_relation_l_then_r(s, &g);
    assert_eq!(rl, lr);
    for a in s.elements() {
        assert_eq!(&rl[a], g.d_classes.class_of(a));
    }
    // H = R ∩ L pointwise
    for a in s.elements() {
        for b in s.elements() {
            assert_eq!(
                g.h_classes.related(a, b),
                g.r_classes.related(a, b) && g.l_classes.related(a, b)
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn validate_agrees_with_exhaustive_scan(n in 1usize..=4, seed in prop::collection::vec(0i64..4, 16)) {
        let table: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| seed[i * 4 + j] % n as i64).collect()).collect();
        let associative = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| {
            let ij = table[i][j] as usize;
            let jk = table[j][k] as usize;
            table[ij][k] == table[i][jk]
        })));
        prop_assert_eq!(validate(&table).unwrap().is_valid(), associative);
    }

    #[test]
    fn adjoin_identity_is_idempotent(s in arb_semigroup()) {
        let once = s.adjoin_identity();
        prop_assert_eq!(once.adjoin_identity().order(), once.order());
        prop_assert!(once.identity().is_some());
    }

    #[test]
    fn mutual_inverses_are_symmetric(s in arb_semigroup()) {
        for a in s.elements() {
            for b in s.inverse_set(a).iter() {
                prop_assert!(s.inverse_set(b).contains(a));
            }
        }
    }

    #[test]
    fn two_sided_zero_is_unique(s in arb_semigroup()) {
        prop_assert!(s.zero_elements().two_sided.len() <= 1);
    }

    #[test]
    fn regularity_matches_inverse_sets(s in arb_semigroup()) {
        let by_inverses = s.elements().all(|a| !s.inverse_set(a).is_empty());
        prop_assert_eq!(s.is_regular(), by_inverses);
    }

    #[test]
    fn green_relations_are_well_formed(s in arb_semigroup()) {
        check_green(&s);
    }

    #[test]
    fn natural_order_is_partial(s in arb_semigroup()) {
        let rel = natural_order(&s);
        prop_assert!(rel.is_partial_order());
        if s.is_group() {
            prop_assert!(rel.is_equality());
        }
    }
}

#[test]
fn suite_green_and_order() {
    for (name, s) in catalog::suite() {
        check_green(&s);
        let rel = natural_order(&s);
        assert!(rel.is_partial_order(), "{name}");
        if s.is_group() {
            assert!(rel.is_equality(), "{name}");
        }
    }
}

#[test]
fn validate_scales_to_moderate_orders() {
    let t3 = catalog::full_transformation(3);
    let big = common::closure(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3], vec![0, 0, 2, 3]]);
    assert_eq!(big.order(), 256);
    for s in [t3, big] {
        let raw: Vec<Vec<i64>> = s.rows().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        assert!(validate(&raw).unwrap().is_valid());
    }
}
