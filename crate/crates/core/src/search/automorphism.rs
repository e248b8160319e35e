//! Automorphism groups of small graphs and orbit counting of labelings.

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::labeling::TotalLabeling;
use crate::{Error, Result};

/// Largest graph accepted by [`automorphisms`].
pub const MAX_AUTOMORPHISM_VERTICES: usize = 16;

/// Largest group [`automorphisms`] will materialise.
pub const MAX_GROUP_ORDER: usize = 1 << 20;

/// Iterated degree refinement: two vertices share a color only if they have
/// the same multiset of neighbor colors at every round.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                s.sort_unstable();
                (color[v], s)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = signatures.iter().collect();
        let index = |sig: &(usize, Vec<usize>)| distinct.iter().position(|d| *d == sig).expect("present");
        let next: Vec<usize> = signatures.iter().map(index).collect();
        let before = color.iter().collect::<BTreeSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        color = next;
    }
}

/// Every automorphism of `g`, as vertex permutations `v -> perm[v]`, in
/// lexicographic order (the identity first).
pub fn automorphisms(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n > MAX_AUTOMORPHISM_VERTICES {
        return Err(Error::TooLarge {
            what: "automorphism search vertices",
            size: n,
            max: MAX_AUTOMORPHISM_VERTICES,
        });
    }
    let color = refine(g);
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    extend(g, &color, 0, &mut perm, &mut taken, &mut out)?;
    Ok(out)
}

fn extend(
    g: &Graph,
    color: &[usize],
    v: usize,
    perm: &mut Vec<usize>,
    taken: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if v == g.vertex_count() {
        if out.len() == MAX_GROUP_ORDER {
            return Err(Error::TooLarge {
                what: "automorphism group order",
                size: MAX_GROUP_ORDER + 1,
                max: MAX_GROUP_ORDER,
            });
        }
        out.push(perm.clone());
        return Ok(());
    }
    for image in 0..g.vertex_count() {
        if taken[image] || color[image] != color[v] {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(perm[u], image));
        if !consistent {
            continue;
        }
        perm[v] = image;
        taken[image] = true;
        extend(g, color, v + 1, perm, taken, out)?;
        taken[image] = false;
        perm[v] = usize::MAX;
    }
    Ok(())
}

/// The labeling `λ ∘ σ⁻¹`: vertex `σ(v)` receives `λ(v)`, edge `σ(u)σ(w)`
/// receives `λ(uw)`.
pub fn permute_labeling(g: &Graph, labeling: &TotalLabeling, sigma: &[usize]) -> TotalLabeling {
    let mut vertex_labels = vec![0; g.vertex_count()];
    for (v, &l) in labeling.vertex_labels().iter().enumerate() {
        vertex_labels[sigma[v]] = l;
    }
    let mut edge_labels = vec![0; g.edge_count()];
    for (e, &(u, w)) in g.edges().iter().enumerate() {
        let image = g
            .edge_index(sigma[u], sigma[w])
            .expect("automorphism maps edges to edges");
        edge_labels[image] = labeling.edge_labels()[e];
    }
    TotalLabeling::from_parts_unchecked(vertex_labels, edge_labels)
}

/// Number of distinct orbits among `labelings` under `group`.
pub fn count_orbits(g: &Graph, labelings: &[TotalLabeling], group: &[Vec<usize>]) -> usize {
    labelings
        .iter()
        .map(|l| {
            group
                .iter()
                .map(|sigma| permute_labeling(g, l, sigma))
                .min()
                .unwrap_or_else(|| l.clone())
        })
        .collect::<BTreeSet<_>>()
        .len()
}

/// Canonical form of a tree: the smaller of the two AHU encodings rooted at
/// its centers. Two trees are isomorphic iff their forms are equal.
pub fn canonical_form(g: &Graph) -> Result<String> {
    if !g.is_tree() {
        return Err(Error::Precondition("canonical form is implemented for trees".into()));
    }
    let centers = tree_centers(g);
    Ok(centers
        .into_iter()
        .map(|c| encode(g, c, usize::MAX))
        .min()
        .expect("a tree has a center"))
}

fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in g.neighbors(leaf) {
                if degree[w] == 0 {
                    continue;
                }
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer
}

fn encode(g: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(g, w, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}
