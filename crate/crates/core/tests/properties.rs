//! Invariants of λ, closure and tangles on random matroids.

use proptest::prelude::*;
use tanglekit::corpus::{random_graphic_matroid, random_linear_matroid, random_plane_configuration};
use tanglekit::tangle::{breadth, enumerate_tangles, tangle_matroid};
use tanglekit::{Matroid, SubsetMask};

fn matroid() -> impl Strategy<Value = Matroid> {
    prop_oneof![
        (6usize..=10, 2usize..=4, any::<u64>(), prop::sample::select(vec![2u64, 3, 5]))
            .prop_map(|(n, r, s, p)| random_linear_matroid(p, n, r, s).unwrap()),
        (6usize..=10, any::<u64>()).prop_map(|(n, s)| random_plane_configuration(n, 4, 0.5, s).unwrap()),
        (5usize..=6, any::<u64>()).prop_map(|(v, s)| random_graphic_matroid(v, 8, s).unwrap()),
    ]
}

fn with_sets() -> impl Strategy<Value = (Matroid, u64, u64)> {
    matroid().prop_flat_map(|m| {
        let full = (1u64 << m.len()) - 1;
        (Just(m), 0..=full, 0..=full)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lambda_is_symmetric((m, a, _) in with_sets()) {
        let a = SubsetMask(a);
        let e = m.ground();
        prop_assert_eq!(m.lam(a), m.lam(e - a));
        prop_assert_eq!(m.lam(a), m.dual().lam(a));
    }

    #[test]
    fn lambda_is_submodular((m, a, b) in with_sets()) {
        let (a, b) = (SubsetMask(a), SubsetMask(b));
        prop_assert!(m.lam(a) + m.lam(b) >= m.lam(a & b) + m.lam(a | b));
    }

    #[test]
    fn adding_an_element_moves_lambda_by_closures((m, a, x) in with_sets()) {
        let a = SubsetMask(a);
        let x = (x % m.len() as u64) as usize;
        prop_assume!(!a.contains(x));
        let expected: i64 = match (m.closure(a).contains(x), m.coclosure(a).contains(x)) {
            (true, true) => -1,
            (false, false) => 1,
            _ => 0,
        };
        prop_assert_eq!(m.lam(a.with(x)) as i64 - m.lam(a) as i64, expected);
    }

    #[test]
    fn tangle_matroid_is_a_quotient(m in matroid()) {
        for t in enumerate_tangles(&m, 4).unwrap() {
            let p = tangle_matroid(&t).unwrap();
            let p = p.matroid();
            for a in m.ground().submasks() {
                prop_assert!(m.closure(a).is_subset_of(p.closure(a)));
            }
            prop_assert!(breadth(&t).unwrap().value <= m.len());
        }
    }
}
