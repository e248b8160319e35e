use std::collections::BTreeSet;

use proptest::prelude::*;

use magilab::analysis::predicted_b_candidates;
use magilab::constructions::{
    caterpillar_beta_labeling, caterpillar_super_labeling, dual, lambda_star, lambda_star_case, lambda_star_constant,
    to_graceful, to_super_edge_magic,
};
use magilab::corpus::test_corpus;
use magilab::graph::{build_caterpillar, build_double_star};
use magilab::labeling::{classify, is_graceful, magic_constant_of};
use magilab::search::{
    automorphisms, feasible_b_set, feasible_b_set_with, find_consecutive, permute_labeling, SearchQuery,
};
use magilab::{CaterpillarSpec, Graph, Label};

fn spec_strategy() -> impl Strategy<Value = CaterpillarSpec> {
    prop::collection::vec(0usize..4, 1..6)
        .prop_filter("needs an edge", |c| c.len() > 1 || c[0] > 0)
        .prop_map(|c| CaterpillarSpec::new(c).unwrap())
}

/// A random tree (parent of vertex i is below i) plus a few extra edges.
fn connected_graph(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (2..=max_vertices)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            let extra = prop::collection::vec((0..n, 0..n), 0..3);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: BTreeSet<(usize, usize)> =
                parents.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
            edges.extend(
                extra
                    .into_iter()
                    .filter(|(u, v)| u != v)
                    .map(|(u, v)| (u.min(v), u.max(v))),
            );
            Graph::new(n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn beta_labeling_transforms(spec in spec_strategy()) {
        let handle = build_caterpillar(&spec);
        let g = &handle.graph;
        let bip = handle.bipartition.as_ref();
        let l = caterpillar_beta_labeling(&spec);
        let c = classify(g, &l).unwrap();
        let (alpha, beta) = (spec.alpha() as Label, spec.beta() as Label);
        prop_assert_eq!(c.consecutive_index, Some(beta));
        prop_assert_eq!(c.magic_constant, Some(2 * alpha + 4 * beta));

        let d = dual(g, &l).unwrap();
        let cd = classify(g, &d).unwrap();
        prop_assert_eq!(cd.consecutive_index, Some(alpha));
        prop_assert_eq!(cd.magic_constant, Some(3 * (g.label_count() as Label + 1) - 2 * alpha - 4 * beta));
        prop_assert_eq!(dual(g, &d).unwrap(), l.clone());

        let case = lambda_star_case(g, bip, &l).unwrap();
        let s = lambda_star(g, bip, &l).unwrap();
        let cs = classify(g, &s).unwrap();
        prop_assert_eq!(cs.consecutive_index, Some(beta));
        prop_assert_eq!(cs.magic_constant, Some(lambda_star_constant(g, bip, case, 2 * alpha + 4 * beta).unwrap()));
        prop_assert_eq!(lambda_star(g, bip, &s).unwrap(), l.clone());

        prop_assert!(is_graceful(g, &to_graceful(g, bip, &l).unwrap()));
        prop_assert!(classify(g, &to_super_edge_magic(g, bip, &l).unwrap()).unwrap().is_super);

        let sup = classify(g, &caterpillar_super_labeling(&spec)).unwrap();
        prop_assert!(sup.is_super);
        prop_assert_eq!(sup.magic_constant, Some(2 * alpha + 3 * beta + 1));
    }

    #[test]
    fn feasible_sets_stay_within_candidates(g in connected_graph(6)) {
        let feasible = feasible_b_set(&g).unwrap();
        let candidates = predicted_b_candidates(&g, None).unwrap();
        prop_assert!(feasible.is_subset(&candidates), "{:?} ⊄ {:?}", feasible, candidates);
        let pruned = feasible_b_set_with(&SearchQuery::new(&g).pruning(true)).unwrap();
        prop_assert_eq!(pruned, feasible);
    }

    #[test]
    fn search_results_reverify(g in connected_graph(5), b_seed in 0usize..6) {
        let b = (b_seed % (g.vertex_count() + 1)) as Label;
        let report = find_consecutive(&SearchQuery::consecutive(&g, b)).unwrap();
        prop_assert!(report.exhausted);
        prop_assert!(report.labelings.windows(2).all(|w| w[0] < w[1]));
        for l in &report.labelings {
            let c = classify(&g, l).unwrap();
            prop_assert_eq!(c.consecutive_index, Some(b));
            prop_assert!(report.constants_found.contains(&c.magic_constant.unwrap()));
        }
        let pruned = find_consecutive(&SearchQuery::consecutive(&g, b).pruning(true)).unwrap();
        prop_assert_eq!(pruned, report);
    }

    #[test]
    fn automorphisms_preserve_classification(m in 1usize..3, n in 1usize..4) {
        let g = build_double_star(m, n).unwrap().graph;
        let report = find_consecutive(&SearchQuery::consecutive(&g, m as Label + 1)).unwrap();
        for sigma in automorphisms(&g).unwrap() {
            for l in &report.labelings {
                let image = permute_labeling(&g, l, &sigma);
                let (before, after) = (classify(&g, l).unwrap(), classify(&g, &image).unwrap());
                // Side names may swap when m = n; k and b may not change.
                prop_assert_eq!(after.magic_constant, before.magic_constant);
                prop_assert_eq!(after.consecutive_index, before.consecutive_index);
                prop_assert!(report.labelings.binary_search(&image).is_ok());
            }
        }
    }
}

#[test]
fn corpus_feasible_sets_stay_within_candidates() {
    for (name, g) in test_corpus(9) {
        let feasible = feasible_b_set(&g).unwrap();
        let candidates = predicted_b_candidates(&g, None).unwrap();
        assert!(feasible.is_subset(&candidates), "{name}: {feasible:?} ⊄ {candidates:?}");
    }
}

#[test]
fn limited_search_is_a_prefix_by_constant() {
    let g = build_double_star(2, 3).unwrap().graph;
    let full = find_consecutive(&SearchQuery::consecutive(&g, 0)).unwrap();
    for limit in [1, 5, 17] {
        let part = find_consecutive(&SearchQuery::consecutive(&g, 0).with_limit(limit)).unwrap();
        assert_eq!(part.labelings.len(), limit.min(full.labelings.len()));
        assert!(part.labelings.iter().all(|l| full.labelings.contains(l)));
        for l in &part.labelings {
            assert!(magic_constant_of(&g, l).unwrap().is_some());
        }
    }
}
