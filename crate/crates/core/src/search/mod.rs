//! Exhaustive search for edge-magic and b-edge consecutive labelings.
//!
//! The search is the oracle the structural predictions are checked against,
//! so by default it uses nothing beyond the definitions: fix the magic
//! constant `k`, label vertices from the allowed pool and force every edge
//! label to `k - λ(x) - λ(y)`. Neighbor-block pruning is available behind
//! [`SearchQuery::use_theorem_pruning`] and must never change the output.

mod automorphism;
mod engine;
mod graceful;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::graph::{is_connected, Graph};
use crate::labeling::{magic_constant_of, TotalLabeling};
use crate::{Error, Label, Result};

pub use automorphism::{automorphisms, canonical_form, count_orbits, permute_labeling};
pub use graceful::find_graceful;

use engine::{search_constants, Plan, Space};

/// Label-count budget used when `MAGILAB_BUDGET` is unset.
pub const DEFAULT_BUDGET: usize = 22;

/// Hard ceiling imposed by the 64-bit label masks.
pub const MAX_LABELS: usize = 63;

/// The search budget in labels (`|V| + |E|`), read from `MAGILAB_BUDGET` when
/// set to a valid number.
pub fn default_budget() -> usize {
    std::env::var("MAGILAB_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Debug, Clone)]
pub struct SearchQuery<'g> {
    pub graph: &'g Graph,
    /// Consecutive index; `None` searches all edge-magic labelings.
    pub b: Option<Label>,
    pub magic_constant: Option<Label>,
    pub limit: Option<usize>,
    /// Only report labelings whose false twins (vertices with identical
    /// neighborhoods) carry increasing labels in search order.
    pub canonical_only: bool,
    pub use_theorem_pruning: bool,
    pub budget: usize,
}

impl<'g> SearchQuery<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        SearchQuery {
            graph,
            b: None,
            magic_constant: None,
            limit: None,
            canonical_only: false,
            use_theorem_pruning: false,
            budget: default_budget(),
        }
    }

    pub fn consecutive(graph: &'g Graph, b: Label) -> Self {
        SearchQuery {
            b: Some(b),
            ..Self::new(graph)
        }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn with_constant(mut self, k: Label) -> Self {
        self.magic_constant = Some(k);
        self
    }

    pub fn canonical_only(mut self, on: bool) -> Self {
        self.canonical_only = on;
        self
    }

    pub fn pruning(mut self, on: bool) -> Self {
        self.use_theorem_pruning = on;
        self
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    fn check(&self) -> Result<()> {
        let g = self.graph;
        let labels = g.label_count();
        if labels > self.budget.min(MAX_LABELS) {
            return Err(Error::BudgetExceeded {
                labels,
                budget: self.budget.min(MAX_LABELS),
            });
        }
        if !is_connected(g) {
            return Err(Error::Disconnected);
        }
        if g.edge_count() == 0 {
            return Err(Error::NoEdges);
        }
        if let Some(b) = self.b {
            if b as usize > g.vertex_count() {
                return Err(Error::Precondition(format!(
                    "b = {b} exceeds |V| = {}",
                    g.vertex_count()
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub b: Option<Label>,
    /// True iff the space was enumerated completely.
    pub exhausted: bool,
    #[serde(rename = "constants")]
    pub constants_found: BTreeSet<Label>,
    /// Sorted by vertex-label vector, then edge-label vector.
    pub labelings: Vec<TotalLabeling>,
}

impl SearchReport {
    pub fn is_empty(&self) -> bool {
        self.labelings.is_empty()
    }
}

/// All `b`-edge consecutive magic labelings (up to `limit`).
pub fn find_consecutive(query: &SearchQuery) -> Result<SearchReport> {
    let b = query
        .b
        .ok_or_else(|| Error::Precondition("consecutive search needs b".into()))?;
    query.check()?;
    let g = query.graph;
    let v = g.vertex_count() as Label;
    let e = g.edge_count() as Label;
    let vertex_pool: Vec<Label> = (1..=b).chain(b + e + 1..=v + e).collect();
    let edge_mask = (b + 1..=b + e).fold(0u64, |m, l| m | 1 << l);
    // Extremes: the two smallest (largest) pool labels plus the smallest
    // (largest) edge label.
    let k_min = vertex_pool[0] + vertex_pool[1] + b + 1;
    let k_max = vertex_pool[vertex_pool.len() - 1] + vertex_pool[vertex_pool.len() - 2] + b + e;
    let space = Space {
        vertex_pool,
        edge_mask,
        block_pruning: (query.use_theorem_pruning && b >= 1).then_some(b),
    };
    run(query, space, k_min, k_max)
}

/// All edge-magic total labelings (up to `limit`), any consecutive index or
/// none.
pub fn find_edge_magic(query: &SearchQuery) -> Result<SearchReport> {
    if query.b.is_some() {
        return find_consecutive(query);
    }
    query.check()?;
    let n = query.graph.label_count() as Label;
    let space = Space {
        vertex_pool: (1..=n).collect(),
        edge_mask: (1..=n).fold(0u64, |m, l| m | 1 << l),
        block_pruning: None,
    };
    run(query, space, 6, 3 * n - 3)
}

fn run(query: &SearchQuery, space: Space, k_min: Label, k_max: Label) -> Result<SearchReport> {
    let g = query.graph;
    let ks: Vec<Label> = match query.magic_constant {
        Some(k) if (k_min..=k_max).contains(&k) => vec![k],
        Some(_) => Vec::new(),
        None => (k_min..=k_max).collect(),
    };
    let plan = Plan::new(g, query.canonical_only);
    let outcomes = search_constants(g, &plan, &space, &ks, query.limit);

    let cap = query.limit.unwrap_or(usize::MAX);
    let capped = outcomes.iter().any(|o| o.capped);
    let mut labelings: Vec<TotalLabeling> = outcomes.into_iter().flat_map(|o| o.labelings).collect();
    let exhausted = !capped && labelings.len() <= cap;
    labelings.truncate(cap);
    labelings.sort();
    let mut constants_found = BTreeSet::new();
    for l in &labelings {
        let k = magic_constant_of(g, l)?.expect("search emits magic labelings");
        constants_found.insert(k);
    }
    Ok(SearchReport {
        b: query.b,
        exhausted,
        constants_found,
        labelings,
    })
}

/// `{b : a b-edge consecutive magic labeling exists}` over every
/// `0 <= b <= |V|`.
///
/// Each `b` stops at its first witness; a `b` reported absent was searched
/// exhaustively.
pub fn feasible_b_set(g: &Graph) -> Result<BTreeSet<Label>> {
    feasible_b_set_with(&SearchQuery::new(g))
}

/// [`feasible_b_set`] using the budget and pruning settings of `template`.
pub fn feasible_b_set_with(template: &SearchQuery) -> Result<BTreeSet<Label>> {
    Ok(feasible_witnesses(template)?.into_keys().collect())
}

/// One witness labeling for every feasible `b`, searched with the budget and
/// pruning settings of `template`.
pub fn feasible_witnesses(template: &SearchQuery) -> Result<BTreeMap<Label, TotalLabeling>> {
    template.check()?;
    let mut witnesses = BTreeMap::new();
    for b in 0..=template.graph.vertex_count() as Label {
        let query = SearchQuery {
            b: Some(b),
            magic_constant: None,
            limit: Some(1),
            canonical_only: true,
            ..template.clone()
        };
        let report = find_consecutive(&query)?;
        match report.labelings.into_iter().next() {
            Some(l) => {
                witnesses.insert(b, l);
            }
            None => debug_assert!(report.exhausted),
        }
    }
    Ok(witnesses)
}

/// Raw and orbit counts of `b`-edge consecutive labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalCount {
    pub raw: usize,
    pub orbits: usize,
}

/// Number of `b`-edge consecutive labelings up to the action of `group` (a
/// list of vertex permutations, e.g. from [`automorphisms`]).
pub fn count_canonical(g: &Graph, b: Label, group: &[Vec<usize>]) -> Result<CanonicalCount> {
    let report = find_consecutive(&SearchQuery::consecutive(g, b))?;
    Ok(CanonicalCount {
        raw: report.labelings.len(),
        orbits: count_orbits(g, &report.labelings, group),
    })
}
