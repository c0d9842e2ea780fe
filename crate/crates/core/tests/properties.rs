use nck_core::combinat::{enumerate_forests, Composition, PlaneForest};
use nck_core::ehrhart::{ehrhart_polynomial, eval_at, lattice_points, ForestPoset};
use nck_core::nck_hopf::{x_product, y_coproduct};
use nck_core::ncsf_qsym::{embed_x, NsfBasis, NsfElem};
use nck_core::polyring::int;
use nck_core::tamari;
use proptest::prelude::*;

fn forest(max: usize) -> impl Strategy<Value = PlaneForest> {
    (0..=max).prop_flat_map(|n| {
        let all = enumerate_forests(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn composition(max: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max, 0..=3).prop_filter_map("too heavy", move |v| {
        (v.iter().sum::<u32>() <= max).then(|| Composition::new(v).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn codes_round_trip(f in forest(7)) {
        prop_assert_eq!(PlaneForest::parse(&f.code_string()).unwrap(), f.clone());
        let rev: String = f.reverse_polish_code().iter().map(|d| d.to_string()).collect();
        prop_assert_eq!(PlaneForest::parse_reverse(&rev).unwrap(), f);
    }

    #[test]
    fn upsets_are_upward_closed(f in forest(5)) {
        let up = tamari::upset(&f);
        prop_assert!(up.contains(&f));
        for g in &up.elements {
            prop_assert!(tamari::leq(&f, g).unwrap());
            prop_assert!(tamari::upset(g).elements.iter().all(|h| up.contains(h)));
        }
    }

    #[test]
    fn coproduct_counit(f in forest(6)) {
        let d = y_coproduct(&f, 2);
        let e = PlaneForest::empty();
        prop_assert_eq!(d.get(&vec![e.clone(), f.clone()]), 1);
        prop_assert_eq!(d.get(&vec![f.clone(), e]), 1);
        // sizes are additive on every term
        prop_assert!(d.iter().all(|(p, _)| p[0].size() + p[1].size() == f.size()));
    }

    #[test]
    fn ribbon_embedding_is_multiplicative(i in composition(3), j in composition(3)) {
        let r = |c: &Composition| NsfElem::<i64>::basis_elem(NsfBasis::R, c.clone());
        let lhs = embed_x(&r(&i).mul(&r(&j)));
        let rhs = x_product(&embed_x(&r(&i)), &embed_x(&r(&j))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ehrhart_counts_points(f in forest(5), n in 0u32..=3) {
        let p = ForestPoset::from_forest(&f);
        let count = lattice_points(&p, n, false).len() as i64;
        prop_assert_eq!(eval_at(&ehrhart_polynomial(&p), n as i64), int(count));
    }
}
