use comatrix_core::coring::{check_comodule, check_coring, comodule_from_grouplike, grouplike_hom_ring, is_grouplike};
use comatrix_core::fixtures;
use comatrix_core::graded::{
    comodule_to_grading, graded_coring, graded_to_comodule, is_strongly_graded, subgroup_family, GradedAlgebra, Group,
};
use comatrix_core::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_algebra(seed: u64) -> GradedAlgebra {
    fixtures::random_graded_algebra(&mut ChaCha8Rng::seed_from_u64(seed))
}

/// Size of the coproduct coring for the full family, used to keep the
/// exhaustive checks small.
fn small_enough(ga: &GradedAlgebra) -> bool {
    ga.group.order() * ga.dim() * ga.dim() <= 24
}

#[test]
fn strong_grading_examples() {
    assert!(is_strongly_graded(&fixtures::f1_graded()));
    assert!(is_strongly_graded(&fixtures::f2_graded()));
    assert!(!is_strongly_graded(&fixtures::f3_graded()));
}

#[test]
fn subgroup_must_be_a_subgroup() {
    let ga = GradedAlgebra::new(
        std::sync::Arc::new(fixtures::f2_algebra()),
        Group::cyclic(4),
        vec![0, 2],
    )
    .unwrap();
    let (ag, gs) = graded_coring(&ga).unwrap();
    assert!(matches!(
        subgroup_family(&ga, &ag, &gs, &[0, 1]),
        Err(Error::NotSubgroup(_))
    ));
    assert!(subgroup_family(&ga, &ag, &gs, &[0, 2]).is_ok());
}

#[test]
fn subgroup_family_examples() {
    let cases = [
        (fixtures::f2_graded(), vec![0, 1], true),
        (fixtures::f2_graded(), vec![0], true),
        (fixtures::f3_graded(), vec![0], false),
        (fixtures::f3_graded(), vec![0, 1], true),
    ];
    for (ga, h, bijective) in cases {
        let (ag, gs) = graded_coring(&ga).unwrap();
        let sf = subgroup_family(&ga, &ag, &gs, &h).unwrap();
        assert_eq!(sf.analysis.can.is_bijective, bijective, "H = {h:?}");
        assert!(sf.matches_components);
    }
}

#[test]
fn random_modules_round_trip_over_fixtures() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for ga in [fixtures::f2_graded(), fixtures::f3_graded()] {
        let (ag, _) = graded_coring(&ga).unwrap();
        for _ in 0..10 {
            let gm = fixtures::random_graded_module(&mut rng, &ga);
            let c = graded_to_comodule(&ga, &ag, &gm).unwrap();
            assert!(check_comodule(&ag, &c).ok);
            let back = comodule_to_grading(&ga, &c).unwrap();
            assert_eq!(back.projections, gm.projections(ga.group.order()));
            let (regraded, change) = back.to_graded_module(&ga, &c).unwrap();
            assert!(regraded.module.check().ok);
            assert_eq!(change.rank(), gm.dim());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn graded_coring_axioms(seed in any::<u64>()) {
        let ga = random_algebra(seed);
        let (ag, gs) = graded_coring(&ga).unwrap();
        prop_assert_eq!(ag.dim(), ga.group.order() * ga.dim());
        prop_assert!(check_coring(&ag).ok);
        for g in &gs {
            prop_assert!(is_grouplike(&ag, &g.vector));
            prop_assert!(check_comodule(&ag, &comodule_from_grouplike(&ag, g).unwrap()).ok);
        }
    }

    #[test]
    fn grouplike_entries_are_homogeneous_components(seed in any::<u64>()) {
        let ga = random_algebra(seed);
        let (ag, gs) = graded_coring(&ga).unwrap();
        let group = &ga.group;
        for g in 0..group.order() {
            for h in 0..group.order() {
                let gh = grouplike_hom_ring(&ag, &gs[g], &gs[h]).unwrap();
                prop_assert!(gh.identified);
                prop_assert_eq!(gh.subspace, ga.component(group.mul(group.inv(h), g)));
            }
        }
    }

    #[test]
    fn full_subgroup_family_is_galois(seed in any::<u64>()) {
        let ga = random_algebra(seed);
        prop_assume!(small_enough(&ga));
        let (ag, gs) = graded_coring(&ga).unwrap();
        let all: Vec<usize> = (0..ga.group.order()).collect();
        let sf = subgroup_family(&ga, &ag, &gs, &all).unwrap();
        prop_assert!(sf.analysis.can.is_bijective);
        prop_assert!(sf.matches_components);
    }

    #[test]
    fn dictionary_round_trip_on_random_algebras(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ga = fixtures::random_graded_algebra(&mut rng);
        let (ag, _) = graded_coring(&ga).unwrap();
        let gm = fixtures::random_graded_module(&mut rng, &ga);
        let c = graded_to_comodule(&ga, &ag, &gm).unwrap();
        prop_assert!(check_comodule(&ag, &c).ok);
        prop_assert_eq!(comodule_to_grading(&ga, &c).unwrap().projections, gm.projections(ga.group.order()));
    }
}
