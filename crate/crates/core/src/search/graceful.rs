//! Backtracking search for a graceful vertex labeling.

use crate::graph::{is_connected, Graph};
use crate::labeling::VertexLabeling;
use crate::{Error, Label, Result};

/// Largest edge count the graceful search accepts (differences live in a
/// `u64` mask).
pub const MAX_GRACEFUL_EDGES: usize = 63;

struct State<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    labels: Vec<Option<Label>>,
    used_labels: u64,
    used_diffs: u64,
}

impl State<'_> {
    fn run(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        let top = self.g.edge_count() as Label;
        for label in 0..=top {
            if self.used_labels & (1 << label) != 0 {
                continue;
            }
            let mut diffs = 0u64;
            let ok = self.g.neighbors(v).iter().all(|&w| match self.labels[w] {
                None => true,
                Some(other) => {
                    let bit = 1u64 << label.abs_diff(other);
                    let fresh = (self.used_diffs | diffs) & bit == 0;
                    diffs |= bit;
                    fresh
                }
            });
            if !ok {
                continue;
            }
            self.labels[v] = Some(label);
            self.used_labels |= 1 << label;
            self.used_diffs |= diffs;
            if self.run(pos + 1) {
                return true;
            }
            self.used_diffs &= !diffs;
            self.used_labels &= !(1 << label);
            self.labels[v] = None;
        }
        false
    }
}

/// The lexicographically first graceful labeling in breadth-first vertex
/// order from vertex 0, or `None` when the graph has none.
pub fn find_graceful(g: &Graph) -> Result<Option<VertexLabeling>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if g.edge_count() > MAX_GRACEFUL_EDGES {
        return Err(Error::TooLarge {
            what: "graceful search edges",
            size: g.edge_count(),
            max: MAX_GRACEFUL_EDGES,
        });
    }
    if g.vertex_count() > g.edge_count() + 1 {
        return Ok(None);
    }
    let mut order = vec![0];
    let mut seen = vec![false; g.vertex_count()];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    let mut state = State {
        g,
        order,
        labels: vec![None; g.vertex_count()],
        used_labels: 0,
        used_diffs: 0,
    };
    if !state.run(0) {
        return Ok(None);
    }
    let labels = state.labels.into_iter().map(|l| l.expect("assigned")).collect();
    VertexLabeling::new(labels, g.edge_count()).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete_bipartite, build_cycle, build_lobster, build_path};
    use crate::labeling::is_graceful;

    #[test]
    fn finds_graceful_labelings() {
        for g in [
            build_path(6).unwrap().graph,
            build_lobster(4).unwrap().graph,
            build_complete_bipartite(2, 3).unwrap().graph,
            build_cycle(4).unwrap().graph,
        ] {
            let phi = find_graceful(&g).unwrap().expect("graceful");
            assert!(is_graceful(&g, &phi));
        }
    }

    #[test]
    fn small_odd_cycles_are_not_graceful() {
        // C_l with l ≡ 1, 2 (mod 4) has no graceful labeling.
        assert!(find_graceful(&build_cycle(5).unwrap().graph).unwrap().is_none());
        assert!(find_graceful(&build_cycle(6).unwrap().graph).unwrap().is_none());
        assert!(find_graceful(&build_cycle(3).unwrap().graph).unwrap().is_some());
    }
}
