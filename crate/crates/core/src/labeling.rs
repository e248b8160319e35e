//! Total and vertex labelings and the checks that classify them.

use serde::{Deserialize, Serialize};

use crate::graph::{two_coloring, Bipartition, Graph, Side};
use crate::{Error, Label, Result};

/// A bijection from `V ∪ E` onto `{1, ..., |V| + |E|}`.
///
/// Vertex labels are indexed by vertex, edge labels by the graph's canonical
/// edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTotalLabeling")]
pub struct TotalLabeling {
    vertex_labels: Vec<Label>,
    edge_labels: Vec<Label>,
}

#[derive(Deserialize)]
struct RawTotalLabeling {
    vertex_labels: Vec<Label>,
    edge_labels: Vec<Label>,
}

impl TryFrom<RawTotalLabeling> for TotalLabeling {
    type Error = Error;

    fn try_from(raw: RawTotalLabeling) -> Result<Self> {
        TotalLabeling::new(raw.vertex_labels, raw.edge_labels)
    }
}

impl TotalLabeling {
    /// Checks that the labels are exactly `1..=|V|+|E|`.
    pub fn new(vertex_labels: Vec<Label>, edge_labels: Vec<Label>) -> Result<Self> {
        let total = vertex_labels.len() + edge_labels.len();
        let max = total as Label;
        let mut seen = vec![false; total + 1];
        for &l in vertex_labels.iter().chain(&edge_labels) {
            if l == 0 || l > max {
                return Err(Error::NotBijection {
                    max,
                    reason: format!("label {l} out of range"),
                });
            }
            if std::mem::replace(&mut seen[l as usize], true) {
                return Err(Error::NotBijection {
                    max,
                    reason: format!("label {l} used twice"),
                });
            }
        }
        Ok(TotalLabeling {
            vertex_labels,
            edge_labels,
        })
    }

    /// Builds a labeling the caller already knows to be a bijection.
    pub(crate) fn from_parts_unchecked(vertex_labels: Vec<Label>, edge_labels: Vec<Label>) -> Self {
        debug_assert!(TotalLabeling::new(vertex_labels.clone(), edge_labels.clone()).is_ok());
        TotalLabeling {
            vertex_labels,
            edge_labels,
        }
    }

    pub fn vertex_labels(&self) -> &[Label] {
        &self.vertex_labels
    }

    pub fn edge_labels(&self) -> &[Label] {
        &self.edge_labels
    }

    pub fn vertex(&self, v: usize) -> Label {
        self.vertex_labels[v]
    }

    pub fn edge(&self, e: usize) -> Label {
        self.edge_labels[e]
    }

    /// Largest label, `|V| + |E|`.
    pub fn max_label(&self) -> Label {
        (self.vertex_labels.len() + self.edge_labels.len()) as Label
    }

    pub(crate) fn check_against(&self, g: &Graph) -> Result<()> {
        if self.vertex_labels.len() != g.vertex_count() || self.edge_labels.len() != g.edge_count() {
            return Err(Error::LabelCountMismatch {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                vertex_labels: self.vertex_labels.len(),
                edge_labels: self.edge_labels.len(),
            });
        }
        Ok(())
    }

    /// Applies `f` to every vertex label and `h` to every edge label.
    pub(crate) fn map_unchecked(
        &self,
        mut f: impl FnMut(usize, Label) -> Label,
        mut h: impl FnMut(usize, Label) -> Label,
    ) -> TotalLabeling {
        let vertex_labels = self.vertex_labels.iter().enumerate().map(|(v, &l)| f(v, l)).collect();
        let edge_labels = self.edge_labels.iter().enumerate().map(|(e, &l)| h(e, l)).collect();
        TotalLabeling::from_parts_unchecked(vertex_labels, edge_labels)
    }
}

/// An injective vertex labeling into `{0, ..., |E|}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexLabeling {
    vertex_labels: Vec<Label>,
}

impl VertexLabeling {
    pub fn new(vertex_labels: Vec<Label>, edge_count: usize) -> Result<Self> {
        let max = edge_count as Label;
        let mut seen = vec![false; edge_count + 1];
        for &l in &vertex_labels {
            if l > max {
                return Err(Error::InvalidVertexLabeling(format!("label {l} exceeds |E| = {max}")));
            }
            if std::mem::replace(&mut seen[l as usize], true) {
                return Err(Error::InvalidVertexLabeling(format!("label {l} used twice")));
            }
        }
        Ok(VertexLabeling { vertex_labels })
    }

    pub fn vertex_labels(&self) -> &[Label] {
        &self.vertex_labels
    }
}

/// Everything the verifier can say about a total labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    #[serde(rename = "k")]
    pub magic_constant: Option<Label>,
    #[serde(rename = "b")]
    pub consecutive_index: Option<Label>,
    #[serde(rename = "super")]
    pub is_super: bool,
    /// The partite side carrying labels `1..=b` when `b` is a side size.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub small_side: Option<Side>,
}

/// The common edge sum `λ(x) + λ(y) + λ(xy)`, or `None` when sums differ or
/// there are no edges.
pub fn magic_constant_of(g: &Graph, labeling: &TotalLabeling) -> Result<Option<Label>> {
    labeling.check_against(g)?;
    let mut sums = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| labeling.vertex(u) + labeling.vertex(v) + labeling.edge(e));
    let Some(first) = sums.next() else {
        return Ok(None);
    };
    Ok(sums.all(|s| s == first).then_some(first))
}

/// `b` such that the edge labels are exactly `b+1 ..= b+|E|`, reported only for
/// edge-magic labelings.
pub fn consecutive_index_of(g: &Graph, labeling: &TotalLabeling) -> Result<Option<Label>> {
    if magic_constant_of(g, labeling)?.is_none() {
        return Ok(None);
    }
    Ok(edge_block_start(labeling))
}

/// `b` when the edge labels form one run `b+1 ..= b+|E|`.
fn edge_block_start(labeling: &TotalLabeling) -> Option<Label> {
    let edges = labeling.edge_labels();
    let min = *edges.iter().min()?;
    let max = *edges.iter().max()?;
    // Labels are distinct, so a span of exactly |E| values is a full run.
    (max - min + 1 == edges.len() as Label).then_some(min - 1)
}

/// For every vertex, checks that its neighbors' labels lie entirely in the low
/// block `1..=b` or entirely in the high block `b+|E|+1 ..= |V|+|E|`.
pub fn neighbor_block_holds(g: &Graph, labeling: &TotalLabeling, b: Label) -> Result<bool> {
    labeling.check_against(g)?;
    if b == 0 || b as usize > g.vertex_count() {
        return Err(Error::Precondition(format!(
            "block check needs 1 <= b <= |V| = {}, got {b}",
            g.vertex_count()
        )));
    }
    let high_start = b + g.edge_count() as Label + 1;
    // Some(true) for the low block, Some(false) for the high one.
    let block = |v: usize| match labeling.vertex(v) {
        l if l <= b => Some(true),
        l if l >= high_start => Some(false),
        _ => None,
    };
    Ok((0..g.vertex_count()).all(|x| {
        let mut nbrs = g.neighbors(x).iter().map(|&y| block(y));
        match nbrs.next() {
            Some(Some(first)) => nbrs.all(|blk| blk == Some(first)),
            Some(None) => false,
            None => true,
        }
    }))
}

/// True iff the endpoint differences over all edges are exactly `{1..|E|}`.
pub fn is_graceful(g: &Graph, labeling: &VertexLabeling) -> bool {
    let labels = labeling.vertex_labels();
    let m = g.edge_count();
    if labels.len() != g.vertex_count() || labels.iter().any(|&l| l as usize > m) {
        return false;
    }
    let mut seen = vec![false; m + 1];
    for &(u, v) in g.edges() {
        let d = labels[u].abs_diff(labels[v]) as usize;
        if d == 0 || std::mem::replace(&mut seen[d], true) {
            return false;
        }
    }
    true
}

/// The side whose labels are exactly `1..=b`, if one exists.
pub fn small_label_side(bipartition: &Bipartition, labeling: &TotalLabeling, b: Label) -> Option<Side> {
    [Side::X, Side::Y].into_iter().find(|&side| {
        let vs = bipartition.vertices(side);
        vs.len() == b as usize && vs.iter().all(|&v| labeling.vertex(v) <= b)
    })
}

pub fn classify(g: &Graph, labeling: &TotalLabeling) -> Result<Classification> {
    let magic_constant = magic_constant_of(g, labeling)?;
    let consecutive_index = consecutive_index_of(g, labeling)?;
    let is_super = consecutive_index == Some(g.vertex_count() as Label);
    let small_side = consecutive_index.and_then(|b| {
        let sides = two_coloring(g)?;
        let bip = Bipartition::from_sides(g, sides).ok()?;
        if b as usize != bip.len(Side::X) && b as usize != bip.len(Side::Y) {
            return None;
        }
        small_label_side(&bip, labeling, b)
    });
    Ok(Classification {
        magic_constant,
        consecutive_index,
        is_super,
        small_side,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_caterpillar, build_path};

    /// CS(2;1,1) in canonical order `c_1, c_{1,1}, c_2, c_{2,1}`.
    fn p4_labeling() -> (Graph, TotalLabeling) {
        let g = build_caterpillar(&"1,1".parse().unwrap()).graph;
        let l = TotalLabeling::new(vec![6, 1, 2, 7], vec![5, 4, 3]).unwrap();
        (g, l)
    }

    fn p3_labeling() -> (Graph, TotalLabeling) {
        let g = build_path(3).unwrap().graph;
        (g, TotalLabeling::new(vec![1, 5, 2], vec![4, 3]).unwrap())
    }

    #[test]
    fn bijection_checked() {
        assert!(TotalLabeling::new(vec![1, 2], vec![3]).is_ok());
        assert!(TotalLabeling::new(vec![1, 2], vec![2]).is_err());
        assert!(TotalLabeling::new(vec![0, 2], vec![3]).is_err());
        assert!(TotalLabeling::new(vec![1, 4], vec![3]).is_err());
        let json = r#"{"vertex_labels":[1,1],"edge_labels":[3]}"#;
        assert!(serde_json::from_str::<TotalLabeling>(json).is_err());
    }

    #[test]
    fn magic_constants() {
        let (g, l) = p4_labeling();
        assert_eq!(magic_constant_of(&g, &l).unwrap(), Some(12));
        let (g, l) = p3_labeling();
        assert_eq!(magic_constant_of(&g, &l).unwrap(), Some(10));
        let l = TotalLabeling::new(vec![1, 5, 2], vec![3, 4]).unwrap();
        assert_eq!(magic_constant_of(&g, &l).unwrap(), None);
        let edgeless = Graph::new(1, []).unwrap();
        assert_eq!(
            magic_constant_of(&edgeless, &TotalLabeling::new(vec![1], vec![]).unwrap()).unwrap(),
            None
        );
    }

    #[test]
    fn count_mismatch_rejected() {
        let (g, _) = p4_labeling();
        let l = TotalLabeling::new(vec![1, 5, 2], vec![4, 3]).unwrap();
        assert!(matches!(
            magic_constant_of(&g, &l),
            Err(Error::LabelCountMismatch { .. })
        ));
    }

    #[test]
    fn consecutive_indices() {
        let (g, l) = p4_labeling();
        assert_eq!(consecutive_index_of(&g, &l).unwrap(), Some(2));
        let (g, l) = p3_labeling();
        assert_eq!(consecutive_index_of(&g, &l).unwrap(), Some(2));
        // Magic (k = 10) but edges {2, 4} are not a run.
        let l = TotalLabeling::new(vec![1, 5, 3], vec![4, 2]).unwrap();
        assert_eq!(magic_constant_of(&g, &l).unwrap(), Some(10));
        assert_eq!(consecutive_index_of(&g, &l).unwrap(), None);
        let gapped = TotalLabeling::new(vec![1, 3, 6, 7], vec![2, 4, 5]).unwrap();
        assert_eq!(edge_block_start(&gapped), None);
    }

    #[test]
    fn neighbor_blocks() {
        let (g, l) = p4_labeling();
        assert!(neighbor_block_holds(&g, &l, 2).unwrap());
        let swapped = TotalLabeling::new(vec![6, 7, 2, 1], vec![5, 4, 3]).unwrap();
        assert!(!neighbor_block_holds(&g, &swapped, 2).unwrap());
        assert!(neighbor_block_holds(&g, &l, 0).is_err());
        assert!(neighbor_block_holds(&g, &l, 5).is_err());
    }

    #[test]
    fn graceful() {
        let p2 = build_path(2).unwrap().graph;
        assert!(is_graceful(&p2, &VertexLabeling::new(vec![0, 1], 1).unwrap()));
        let p3 = build_path(3).unwrap().graph;
        assert!(is_graceful(&p3, &VertexLabeling::new(vec![0, 2, 1], 2).unwrap()));
        assert!(!is_graceful(&p3, &VertexLabeling::new(vec![0, 1, 2], 2).unwrap()));
        assert!(VertexLabeling::new(vec![0, 0, 1], 2).is_err());
        assert!(VertexLabeling::new(vec![0, 3, 1], 2).is_err());
    }

    #[test]
    fn classification() {
        let (g, l) = p4_labeling();
        let c = classify(&g, &l).unwrap();
        assert_eq!(
            c,
            Classification {
                magic_constant: Some(12),
                consecutive_index: Some(2),
                is_super: false,
                small_side: Some(Side::Y),
            }
        );
        // Super labeling of P_3: vertices 1..3, edges 4..5, k = 10.
        let p3 = build_path(3).unwrap().graph;
        let sup = TotalLabeling::new(vec![1, 3, 2], vec![5, 4]).unwrap();
        let c = classify(&p3, &sup).unwrap();
        assert_eq!(
            (c.consecutive_index, c.is_super, c.magic_constant),
            (Some(3), true, Some(9))
        );
        assert_eq!(c.small_side, None);

        let not_magic = TotalLabeling::new(vec![1, 2, 3], vec![4, 5]).unwrap();
        let c = classify(&p3, &not_magic).unwrap();
        assert_eq!(
            (c.magic_constant, c.consecutive_index, c.is_super, c.small_side),
            (None, None, false, None)
        );
    }

    #[test]
    fn classification_json() {
        let (g, l) = p4_labeling();
        let json = serde_json::to_string(&classify(&g, &l).unwrap()).unwrap();
        assert_eq!(json, r#"{"k":12,"b":2,"super":false,"small_side":"Y"}"#);
    }
}
