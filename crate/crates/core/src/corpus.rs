//! Finite graph collections used by the verification suites.

use std::collections::BTreeMap;

use crate::graph::{build_complete_bipartite, build_cycle, CaterpillarSpec, Graph};
use crate::search::canonical_form;

/// Every leaf-count sequence `(n_1, ..., n_r)` with `r >= 1` whose caterpillar
/// has at most `max_vertices` vertices. Isomorphic caterpillars appear once
/// per sequence.
pub fn caterpillar_specs(max_vertices: usize) -> Vec<CaterpillarSpec> {
    fn grow(prefix: &mut Vec<usize>, room: usize, out: &mut Vec<CaterpillarSpec>) {
        // `room` counts vertices still available after the current prefix.
        if !prefix.is_empty() {
            out.push(CaterpillarSpec::new(prefix.clone()).expect("non-empty"));
        }
        if room == 0 {
            return;
        }
        for leaves in 0..room {
            prefix.push(leaves);
            grow(prefix, room - 1 - leaves, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), max_vertices, &mut out);
    out
}

/// One representative of each isomorphism class of trees on `2..=max_vertices`
/// vertices, ordered by size and then by canonical form.
pub fn trees(max_vertices: usize) -> Vec<Graph> {
    let mut all = Vec::new();
    let mut layer: BTreeMap<String, Graph> = BTreeMap::new();
    if max_vertices >= 2 {
        let k2 = Graph::new(2, [(0, 1)]).expect("K_2");
        layer.insert(canonical_form(&k2).expect("tree"), k2);
    }
    for n in 2..=max_vertices {
        let next: BTreeMap<String, Graph> = if n < max_vertices {
            layer
                .values()
                .flat_map(|t| (0..n).map(move |v| attach_leaf(t, v)))
                .map(|t| (canonical_form(&t).expect("tree"), t))
                .collect()
        } else {
            BTreeMap::new()
        };
        all.extend(std::mem::replace(&mut layer, next).into_values());
    }
    all
}

fn attach_leaf(t: &Graph, v: usize) -> Graph {
    let n = t.vertex_count();
    Graph::new(n + 1, t.edges().iter().copied().chain([(v, n)])).expect("tree plus leaf")
}

/// Named connected graphs with at most `max_vertices` vertices: all trees,
/// cycles, small complete bipartite graphs and a few non-bipartite graphs.
pub fn test_corpus(max_vertices: usize) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = trees(max_vertices)
        .into_iter()
        .map(|t| (format!("tree {}", canonical_form(&t).expect("tree")), t))
        .collect();
    for l in 3..=max_vertices {
        out.push((format!("C_{l}"), build_cycle(l).expect("cycle").graph));
    }
    for m in 2..=3 {
        for n in m..=4 {
            if m + n <= max_vertices {
                out.push((
                    format!("K_{{{m},{n}}}"),
                    build_complete_bipartite(m, n).expect("K_mn").graph,
                ));
            }
        }
    }
    type Named = (&'static str, usize, &'static [(usize, usize)]);
    let extras: [Named; 5] = [
        ("K_4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        ("paw", 4, &[(0, 1), (0, 2), (1, 2), (2, 3)]),
        ("diamond", 4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        ("bull", 5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
        ("C_5 with chord", 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]),
    ];
    for (name, n, edges) in extras {
        if n <= max_vertices {
            out.push((name.to_string(), Graph::new(n, edges.iter().copied()).expect("simple")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        // Non-isomorphic trees on n = 2..=10 vertices.
        let expected = [1, 1, 2, 3, 6, 11, 23, 47, 106];
        let all = trees(10);
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 2;
            assert_eq!(all.iter().filter(|t| t.vertex_count() == n).count(), count, "n = {n}");
        }
        assert!(all.iter().all(Graph::is_tree));
    }

    #[test]
    fn caterpillar_spec_counts() {
        // Sequences with r + Σ n_i = v number 2^(v-1).
        let specs = caterpillar_specs(8);
        for v in 1..=8 {
            let count = specs.iter().filter(|s| s.vertex_count() == v).count();
            assert_eq!(count, 1 << (v - 1), "v = {v}");
        }
    }

    #[test]
    fn corpus_is_connected_and_bounded() {
        for (name, g) in test_corpus(9) {
            assert!(crate::graph::is_connected(&g), "{name}");
            assert!(g.vertex_count() <= 9, "{name}");
        }
    }
}
