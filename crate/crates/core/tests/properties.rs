use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nakayama::endo::{end_algebra, hom_module, pd_over, projective_cover, AlgebraModule, CappedDim};
use nakayama::hom_ext::{
    compose, domdim, ext_dim, gldim, hom_basis, hom_dim, id, oracle_ext1_dim, oracle_hom_dim, pd, projective_cover as cover,
    syzygy,
};
use nakayama::sweep::{random_algebra, Filter};
use nakayama::tilting::{build_tc, classify, criterion, ClassificationReport};
use nakayama::{AdmissibleSequence, ExtendedNat, Kind, ModuleSum, Uniserial};

fn algebra(n_max: usize, c_max: usize) -> impl Strategy<Value = AdmissibleSequence> {
    any::<u64>().prop_map(move |s| random_algebra(&mut ChaCha8Rng::seed_from_u64(s), n_max, c_max))
}

fn algebra_and_module(n_max: usize, c_max: usize) -> impl Strategy<Value = (AdmissibleSequence, Uniserial)> {
    algebra(n_max, c_max).prop_flat_map(|a| {
        let mods = a.indecomposables();
        (Just(a), prop::sample::select(mods))
    })
}

fn algebra_and_pair(n_max: usize, c_max: usize) -> impl Strategy<Value = (AdmissibleSequence, Uniserial, Uniserial)> {
    algebra(n_max, c_max).prop_flat_map(|a| {
        let mods = a.indecomposables();
        (Just(a), prop::sample::select(mods.clone()), prop::sample::select(mods))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn algebra_text_round_trips(a in algebra(9, 14)) {
        let back: AdmissibleSequence = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn module_text_round_trips((a, u) in algebra_and_module(8, 12), extra in 0usize..3) {
        let back: Uniserial = u.to_string().parse().unwrap();
        prop_assert_eq!(back, u);
        let m = ModuleSum::new(std::iter::repeat_n(u, extra));
        let back: ModuleSum = m.to_string().parse().unwrap();
        prop_assert_eq!(back, m);
        prop_assert!(a.contains(u));
    }

    #[test]
    fn tau_round_trips((a, u) in algebra_and_module(8, 12)) {
        if !a.is_projective(u) {
            let t = a.tau(u).unwrap();
            prop_assert!(!a.is_injective(t));
            prop_assert_eq!(a.tau_inv(t).unwrap(), u);
        } else {
            prop_assert!(a.tau(u).is_err());
        }
    }

    #[test]
    fn oracle_agrees((a, u, v) in algebra_and_pair(6, 9)) {
        prop_assert_eq!(hom_dim(&a, u, v), oracle_hom_dim(&a, u, v));
        prop_assert_eq!(ext_dim(&a, u, v, 1), oracle_ext1_dim(&a, u, v));
    }

    #[test]
    fn hom_basis_matches_dim((a, u, v) in algebra_and_pair(8, 12)) {
        let b = hom_basis(&a, u, v);
        prop_assert_eq!(b.len(), hom_dim(&a, u, v));
        prop_assert_eq!(hom_dim(&a, u, u) >= 1, true);
    }

    #[test]
    fn composition_is_associative((a, u, v) in algebra_and_pair(6, 9), w_pick in any::<prop::sample::Index>()) {
        let mods = a.indecomposables();
        let w = mods[w_pick.index(mods.len())];
        for f in hom_basis(&a, u, v) {
            for g in hom_basis(&a, v, w) {
                for h in hom_basis(&a, w, u) {
                    let left = compose(f, g).unwrap().and_then(|fg| compose(fg, h).unwrap());
                    let right = compose(g, h).unwrap().and_then(|gh| compose(f, gh).unwrap());
                    prop_assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn syzygy_dimension((a, u) in algebra_and_module(8, 12)) {
        let p = cover(&a, u);
        prop_assert!(a.is_projective(p));
        let omega = syzygy(&a, u).map_or(0, |s| s.len);
        prop_assert_eq!(p.len, u.len + omega);
    }

    #[test]
    fn ext_vanishes_above_pd((a, u, v) in algebra_and_pair(8, 12)) {
        if let ExtendedNat::Finite(p) = pd(&a, u) {
            for k in p + 1..p + 4 {
                prop_assert_eq!(ext_dim(&a, u, v, k), 0);
            }
        }
        if let ExtendedNat::Finite(i) = id(&a, v) {
            prop_assert_eq!(ext_dim(&a, u, v, i + 1), 0);
        }
    }

    #[test]
    fn gldim_bounds_pd((a, u) in algebra_and_module(8, 12)) {
        prop_assert!(pd(&a, u) <= gldim(&a));
        prop_assert!(id(&a, u) <= gldim(&a));
    }

    #[test]
    fn criterion_matches_domdim(a in algebra(9, 14)) {
        prop_assert_eq!(criterion(&a), domdim(&a) >= ExtendedNat::Finite(2));
    }

    #[test]
    fn domdim_of_opposite(a in algebra(9, 14)) {
        let (op, relabel) = a.opposite();
        prop_assert_eq!(domdim(&a), domdim(&op));
        prop_assert_eq!(gldim(&a), gldim(&op));
        let mut sorted = relabel.clone();
        sorted.sort();
        prop_assert_eq!(sorted, (1..=a.n()).collect::<Vec<_>>());
        prop_assert_eq!(op.opposite().0, a);
    }

    #[test]
    fn invariants_ignore_rotation(a in algebra(8, 12), k in 0usize..8) {
        if a.kind() == Kind::Cyclic {
            let b = a.rotate(k % a.n());
            let (ra, rb) = (classify(&a), classify(&b));
            prop_assert_eq!((ra.gldim, ra.domdim, ra.gdim), (rb.gldim, rb.domdim, rb.gdim));
            prop_assert_eq!(ra.tilting_exists, rb.tilting_exists);
            prop_assert!(a.is_rotation_of(&b));
        }
    }

    #[test]
    fn tilting_existence_depends_on_difference_class(a in algebra(8, 10)) {
        if a.kind() == Kind::Cyclic {
            let n = a.n();
            let shifted = AdmissibleSequence::cyclic(&a.lengths().iter().map(|c| c + n).collect::<Vec<_>>()).unwrap();
            prop_assert_eq!(criterion(&a), criterion(&shifted));
            prop_assert_eq!(shifted.difference_class_representative(), a.difference_class_representative());
        }
    }

    #[test]
    fn report_json_round_trips(a in algebra(8, 12)) {
        let r = classify(&a);
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        let mut want = vec![
            "kind", "c", "gldim", "domdim", "id_left", "id_right", "gdim", "selfinjective", "auslander",
            "m_auslander", "one_aus_gorenstein", "dtr_selfinjective", "tilting_exists", "t_c", "c_c",
            "tilting_cotilting",
        ];
        want.sort();
        let mut keys = keys;
        keys.sort();
        prop_assert_eq!(keys, want);
        let back: ClassificationReport = serde_json::from_value(v).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn filters_round_trip(key in prop::sample::select(vec!["gldim", "domdim", "gdim", "id_left"]),
                          op in prop::sample::select(vec![">=", "<=", "="]),
                          value in prop::option::of(0usize..20)) {
        let value = value.map_or("inf".to_string(), |v| v.to_string());
        let f: Filter = format!("{key}{op}{value}").parse().unwrap();
        let back: Filter = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn hom_modules_over_end_tc_are_valid((a, u) in algebra_and_module(6, 8)) {
        if let Some(tc) = build_tc(&a) {
            let b = end_algebra(&a, &tc).unwrap();
            let m: AlgebraModule = hom_module(&a, &b, &ModuleSum::new([u])).unwrap();
            prop_assert_eq!(m.dim(), tc.iter().map(|&t| hom_dim(&a, t, u)).sum::<usize>());
            if tc.contains(&u) {
                prop_assert_eq!(pd_over(&b, &m, 30).unwrap(), CappedDim::Finite(0));
            }
            if m.dim() > 0 {
                let pc = projective_cover(&b, &m);
                let cover_dim: usize = pc.tops.iter().map(|&t| b.projective_basis(t).len()).sum();
                prop_assert_eq!(cover_dim, m.dim() + pc.syzygy.dim());
                prop_assert!(pc.syzygy.validate(&b).is_ok());
            }
        }
    }
}
