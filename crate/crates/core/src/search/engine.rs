//! The backtracking core shared by the consecutive and edge-magic searches.
//!
//! For a fixed magic constant `k`, vertices are labelled one at a time; every
//! edge whose second endpoint has just been labelled gets the forced label
//! `k - λ(x) - λ(y)`, which must lie in the allowed edge set and be unused.

use std::sync::atomic::{AtomicU32, Ordering};

use rayon::prelude::*;

use crate::graph::Graph;
use crate::labeling::TotalLabeling;
use crate::Label;

/// Vertex assignment order plus the constraints each step must check.
pub(crate) struct Plan {
    order: Vec<usize>,
    /// For each position: (earlier neighbor, edge index).
    back_edges: Vec<Vec<(usize, usize)>>,
    /// For each position: a twin vertex assigned earlier that must carry a
    /// smaller label.
    twin_prev: Vec<Option<usize>>,
}

impl Plan {
    /// Greedy order: start at a highest-degree vertex, then repeatedly take
    /// the vertex with the most already-placed neighbors (ties: higher
    /// degree, then lower index).
    pub(crate) fn new(g: &Graph, break_twins: bool) -> Plan {
        let n = g.vertex_count();
        let mut placed = vec![false; n];
        let mut placed_nbrs = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (placed_nbrs[v], g.degree(v), std::cmp::Reverse(v)))
                .expect("unplaced vertex");
            placed[v] = true;
            order.push(v);
            for &w in g.neighbors(v) {
                placed_nbrs[w] += 1;
            }
        }
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let back_edges = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&w| position[w] < i)
                    .map(|&w| (w, g.edge_index(v, w).expect("edge")))
                    .collect()
            })
            .collect();
        let mut twin_prev = vec![None; n];
        if break_twins {
            for (i, &v) in order.iter().enumerate() {
                twin_prev[i] = order[..i]
                    .iter()
                    .rev()
                    .copied()
                    .find(|&u| g.neighbors(u) == g.neighbors(v));
            }
        }
        Plan {
            order,
            back_edges,
            twin_prev,
        }
    }
}

/// Label sets and optional block pruning for one search.
#[derive(Clone)]
pub(crate) struct Space {
    /// Labels vertices may take, ascending.
    pub vertex_pool: Vec<Label>,
    /// Bit `l` set iff label `l` may go on an edge.
    pub edge_mask: u64,
    /// `b` when neighbor-block pruning is on.
    pub block_pruning: Option<Label>,
}

pub(crate) struct KOutcome {
    pub k: Label,
    pub labelings: Vec<TotalLabeling>,
    /// The per-k cap was reached, so enumeration for this k is incomplete.
    pub capped: bool,
}

struct Dfs<'a> {
    g: &'a Graph,
    plan: &'a Plan,
    space: &'a Space,
    k: Label,
    cap: usize,
    cutoff: &'a AtomicU32,
    vertex_labels: Vec<Label>,
    edge_labels: Vec<Label>,
    used: u64,
    found: Vec<TotalLabeling>,
    aborted: bool,
}

impl Dfs<'_> {
    fn block_of(&self, label: Label) -> bool {
        let b = self.space.block_pruning.expect("pruning on");
        label <= b
    }

    /// Every labelled neighbor of each labelled neighbor of `v` must sit in
    /// the same block as `label`.
    fn blocks_consistent(&self, v: usize, label: Label) -> bool {
        let low = self.block_of(label);
        self.g.neighbors(v).iter().all(|&u| {
            self.g
                .neighbors(u)
                .iter()
                .all(|&w| w == v || self.vertex_labels[w] == 0 || self.block_of(self.vertex_labels[w]) == low)
        })
    }

    /// Returns false to stop the whole search.
    fn run(&mut self, pos: usize) -> bool {
        if self.k > self.cutoff.load(Ordering::Relaxed) {
            self.aborted = true;
            return false;
        }
        if pos == self.plan.order.len() {
            self.found.push(TotalLabeling::from_parts_unchecked(
                self.vertex_labels.clone(),
                self.edge_labels.clone(),
            ));
            if self.found.len() >= self.cap {
                self.cutoff.fetch_min(self.k, Ordering::Relaxed);
                return false;
            }
            return true;
        }
        let v = self.plan.order[pos];
        let floor = self.plan.twin_prev[pos].map_or(1, |u| self.vertex_labels[u] + 1);
        let start = self.space.vertex_pool.partition_point(|&l| l < floor);
        for idx in start..self.space.vertex_pool.len() {
            let label = self.space.vertex_pool[idx];
            if self.used & (1 << label) != 0 {
                continue;
            }
            if self.space.block_pruning.is_some() && !self.blocks_consistent(v, label) {
                continue;
            }
            let mut used = self.used | (1 << label);
            let mut ok = true;
            for &(u, e) in &self.plan.back_edges[pos] {
                let sum = self.vertex_labels[u] + label;
                if sum >= self.k {
                    ok = false;
                    break;
                }
                let edge_label = self.k - sum;
                if edge_label >= 64 {
                    ok = false;
                    break;
                }
                let bit = 1u64 << edge_label;
                if self.space.edge_mask & bit == 0 || used & bit != 0 {
                    ok = false;
                    break;
                }
                used |= bit;
                self.edge_labels[e] = edge_label;
            }
            if !ok {
                continue;
            }
            let saved = self.used;
            self.used = used;
            self.vertex_labels[v] = label;
            let keep_going = self.run(pos + 1);
            self.vertex_labels[v] = 0;
            self.used = saved;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Enumerates labelings for each `k` in `ks` in parallel.
///
/// With a `limit`, each `k` stops after `limit` results and any `k` above the
/// smallest capped one is abandoned. Callers merge outcomes in ascending `k`,
/// which makes the kept results independent of scheduling.
pub(crate) fn search_constants(
    g: &Graph,
    plan: &Plan,
    space: &Space,
    ks: &[Label],
    limit: Option<usize>,
) -> Vec<KOutcome> {
    let cap = limit.unwrap_or(usize::MAX);
    let cutoff = AtomicU32::new(Label::MAX);
    let mut outcomes: Vec<KOutcome> = ks
        .par_iter()
        .map(|&k| {
            let mut dfs = Dfs {
                g,
                plan,
                space,
                k,
                cap,
                cutoff: &cutoff,
                vertex_labels: vec![0; g.vertex_count()],
                edge_labels: vec![0; g.edge_count()],
                used: 0,
                found: Vec::new(),
                aborted: false,
            };
            if cap > 0 {
                dfs.run(0);
            }
            KOutcome {
                k,
                capped: dfs.found.len() >= cap || dfs.aborted,
                labelings: dfs.found,
            }
        })
        .collect();
    let cutoff = cutoff.into_inner();
    outcomes.retain(|o| o.k <= cutoff);
    outcomes.sort_by_key(|o| o.k);
    outcomes
}
