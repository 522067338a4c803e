mod common;

use common::*;
use gmn::automorphism::{AutMap, KappaPart};
use gmn::quotient::{
    fp_conjugate, induced_map, is_normal_automorphism, project, Certificate, NormalityVerdict,
    Quotient,
};
use gmn::GroupParams;
use proptest::prelude::*;

fn group() -> impl Strategy<Value = GroupParams> {
    prop::sample::select(PARAM_SETS.to_vec()).prop_map(|(m, n)| params(m, n))
}

fn quotient() -> impl Strategy<Value = Quotient> {
    prop::sample::select(vec![Quotient::M, Quotient::N])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn project_is_a_homomorphism(p in group(), which in quotient(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let (g, h) = (random_elem(&mut r, p, 20), random_elem(&mut r, p, 20));
        prop_assert_eq!(project(&g.mul(&h), which), project(&g, which).mul(&project(&h, which)));
        prop_assert!(project(&which.relator(p).conjugate_by(&g), which).is_identity());
    }

    #[test]
    fn conjugacy_matches_search(p in group(), which in quotient(), seed in any::<u64>(), related in any::<bool>()) {
        let mut r = rng(seed);
        let spec = which.spec(p);
        let e1 = random_fp(&mut r, spec, 3, 2);
        let e2 = if related {
            e1.conjugate_by(&random_fp(&mut r, spec, 3, 2))
        } else {
            random_fp(&mut r, spec, 3, 2)
        };
        let conjugators = all_fp(spec, 4, 4);
        prop_assert_eq!(fp_conjugate(&e1, &e2), brute_conjugate(&e1, &e2, &conjugators));
        if related {
            prop_assert!(fp_conjugate(&e1, &e2));
        }
    }

    #[test]
    fn inner_maps_are_normal(p in group(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let w = random_elem(&mut r, p, 16);
        let phi = AutMap::inner(&w);
        prop_assert!(induced_map(&phi, Quotient::M).is_some());
        prop_assert!(induced_map(&phi, Quotient::N).is_some());
        prop_assert_eq!(is_normal_automorphism(&phi).unwrap(), NormalityVerdict::Normal { w });
    }

    #[test]
    fn outer_maps_have_verified_certificates(p in group(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let w = random_elem(&mut r, p, 10);
        for kappa in KappaPart::all(p).into_iter().filter(|k| !k.is_identity()) {
            let phi = kappa.to_map(p).unwrap().compose(&AutMap::inner(&w));
            match is_normal_automorphism(&phi).unwrap() {
                NormalityVerdict::NotNormal(c) => {
                    prop_assert!(c.verify(&phi));
                    let expected = if kappa.eta || kappa.mu { Quotient::M } else { Quotient::N };
                    prop_assert_eq!(c.quotient(), expected);
                    prop_assert_eq!(matches!(c, Certificate::OrderObstruction { .. }), kappa.eta);
                }
                NormalityVerdict::Normal { .. } => prop_assert!(false, "{} accepted", kappa),
            }
        }
    }
}

#[test]
fn certificates_reject_inner_maps() {
    let mut r = rng(11);
    for p in all_params() {
        for kappa in KappaPart::all(p).into_iter().filter(|k| !k.is_identity()) {
            let phi = kappa.to_map(p).unwrap();
            let NormalityVerdict::NotNormal(c) = is_normal_automorphism(&phi).unwrap() else {
                panic!("{kappa} accepted");
            };
            assert!(!c.verify(&AutMap::identity(p)));
            for _ in 0..20 {
                assert!(!c.verify(&AutMap::inner(&random_elem(&mut r, p, 12))));
            }
        }
    }
}
