mod common;

use std::collections::BTreeSet;

use common::*;
use ordmotif::implications::theory_base;
use ordmotif::io::{parse_csv, parse_cxt, parse_map, write_csv, write_cxt, write_map};
use ordmotif::{
    census, enumerate_motifs, exists_full_sm, exists_surjective_sm, is_full_scale_measure, CensusOptions, EmptyExtent,
    FormalContext, ObjectSet, PartialMap, ScaleFamily,
};
use proptest::prelude::*;

fn context(max_n: usize, max_m: usize) -> impl Strategy<Value = FormalContext> {
    (1..=max_n, 0..=max_m).prop_flat_map(|(n, m)| {
        prop::collection::vec(0u64..(1 << m), n).prop_map(move |rows| context_from_rows(n, m, &rows))
    })
}

fn labelled(max_n: usize, max_m: usize) -> impl Strategy<Value = FormalContext> {
    (context(max_n, max_m), "[a-z]{1,3}( [a-z,\"]{1,3})?").prop_map(|(k, stem)| {
        FormalContext::from_fn(
            (0..k.object_count()).map(|g| format!("{stem}{g}")).collect(),
            (0..k.attribute_count()).map(|m| format!("{m}{stem}")).collect(),
            |g, m| k.incident(g, m),
        )
        .unwrap()
    })
}

fn family() -> impl Strategy<Value = ScaleFamily> {
    prop::sample::select(ScaleFamily::ALL.to_vec())
}

fn masks(family: &ordmotif::ExtentFamily) -> BTreeSet<u64> {
    family.iter().map(to_mask).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn extents_match_brute_force(k in context(7, 7)) {
        let ours = k.all_extents();
        prop_assert_eq!(masks(&ours), Dense::of(&k).extents());
        prop_assert!(ours.is_closure_system(k.object_count()));
    }

    #[test]
    fn closure_is_a_closure_operator(k in context(7, 6), a in 0u64..128, b in 0u64..128) {
        let all = Dense::of(&k).all();
        let (a, b) = (a & all, b & all);
        let n = k.object_count();
        let ca = k.extent_closure(&to_set(n, a));
        prop_assert!(to_set(n, a).is_subset(&ca));
        prop_assert_eq!(k.extent_closure(&ca), ca.clone());
        let cab = k.extent_closure(&to_set(n, a | b));
        prop_assert!(ca.is_subset(&cab));
    }

    #[test]
    fn canonical_base_models_are_the_extents(k in context(6, 6)) {
        let base = theory_base(&k);
        let dense = Dense::of(&k);
        let models: BTreeSet<u64> = subsets(dense.all())
            .filter(|&a| base.iter().all(|imp| imp.respected_by(&to_set(k.object_count(), a))))
            .collect();
        prop_assert_eq!(models, dense.extents());
        // every premise is pseudo-closed, so no implication follows from the rest
        for (i, imp) in base.iter().enumerate() {
            let rest = ordmotif::ImplicationTheory::from_implications(
                k.object_count(),
                base.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()),
            );
            prop_assert!(!rest.entails(imp));
        }
    }

    #[test]
    fn recogniser_matches_definition(k in context(4, 4), s in context(4, 4), seed in any::<u64>()) {
        let t = s.object_count();
        let images: Vec<usize> = (0..k.object_count())
            .map(|g| (seed >> (4 * g) & 0xf) as usize % t)
            .collect();
        let sigma = PartialMap::total(t, images.clone()).unwrap();
        let v = is_full_scale_measure(&k, &s, &sigma).unwrap();
        prop_assert_eq!((v.is_scale_measure, v.is_full), oracle_measure(&k, &s, &images));
    }

    #[test]
    fn existence_matches_exhaustive_maps(k in context(4, 3), s in context(3, 3)) {
        let maps = all_maps(k.object_count(), s.object_count());
        let onto = |images: &&Vec<usize>| (0..s.object_count()).all(|t| images.contains(&t));
        let any_sm = maps.iter().filter(onto).any(|im| oracle_measure(&k, &s, im).0);
        let any_full = maps.iter().filter(onto).any(|im| oracle_measure(&k, &s, im).1);
        let dsm = exists_surjective_sm(&k, &s);
        let dfsm = exists_full_sm(&k, &s);
        prop_assert_eq!(dsm.is_some(), any_sm);
        prop_assert_eq!(dfsm.is_some(), any_full);
        if let Some(sigma) = dfsm {
            let v = is_full_scale_measure(&k, &s, &sigma).unwrap();
            prop_assert!(v.is_full && v.is_surjective);
        }
    }

    #[test]
    fn cxt_round_trip(k in labelled(6, 6)) {
        prop_assert_eq!(parse_cxt(&write_cxt(&k)).unwrap(), k);
    }

    #[test]
    fn csv_round_trip(k in labelled(6, 6).prop_filter("needs an attribute", |k| k.attribute_count() > 0)) {
        prop_assert_eq!(parse_csv(&write_csv(&k)).unwrap(), k);
    }

    #[test]
    fn map_round_trip(k in labelled(5, 3), s in labelled(3, 3), seed in any::<u64>()) {
        let assignment: Vec<Option<usize>> = (0..k.object_count())
            .map(|g| {
                let v = (seed >> (4 * g) & 0xf) as usize;
                (!v.is_multiple_of(4)).then_some(v % s.object_count())
            })
            .collect();
        let sigma = PartialMap::new(s.object_count(), assignment).unwrap();
        prop_assert_eq!(parse_map(&write_map(&k, &s, &sigma), &k, &s).unwrap(), sigma);
    }

    #[test]
    fn lenient_motifs_are_closed_under_subsets(k in context(6, 5), family in family()) {
        prop_assume!(family.is_hereditary());
        let motifs = enumerate_motifs(&k, family, 1, EmptyExtent::Lenient).unwrap();
        let domains: BTreeSet<u64> = motifs.iter().map(|m| to_mask(&m.domain)).collect();
        for &d in &domains {
            for g in members(d) {
                let smaller = d & !(1 << g);
                prop_assert!(smaller == 0 || domains.contains(&smaller));
            }
        }
    }

    #[test]
    fn strict_motifs_match_oracle(k in context(5, 5), family in family()) {
        let min = family.min_arity();
        let found = if family == ScaleFamily::Crown {
            ordmotif::enumerate_crown_motifs(&k, min, EmptyExtent::Strict).unwrap()
        } else {
            enumerate_motifs(&k, family, min, EmptyExtent::Strict).unwrap()
        };
        let ours: BTreeSet<u64> = found.iter().map(|m| to_mask(&m.domain)).collect();
        prop_assert_eq!(ours, oracle_domains(&k, family, min, false));
    }

    #[test]
    fn census_ignores_thread_count(k in context(7, 6)) {
        let one = census(&k, &CensusOptions { threads: 1, ..Default::default() }).unwrap();
        let four = census(&k, &CensusOptions { threads: 4, ..Default::default() }).unwrap();
        prop_assert_eq!(one, four);
    }
}

#[test]
fn identity_is_full_on_every_small_context() {
    for k in small_family() {
        let sigma = PartialMap::identity(k.object_count());
        let v = is_full_scale_measure(&k, &k, &sigma).unwrap();
        assert!(v.is_full && v.is_surjective, "{k:?}");
    }
}

#[test]
fn object_set_masks_round_trip() {
    for mask in 0u64..256 {
        assert_eq!(to_mask(&ObjectSet::from_mask(8, mask)), mask);
    }
}
