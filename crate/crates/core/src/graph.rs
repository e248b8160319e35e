//! Simple undirected graphs, bipartitions and the named graph families.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An undirected simple graph on the vertices `0..vertex_count`.
///
/// Edges are kept in canonical order: every pair is stored as `(u, v)` with
/// `u < v`, and the list is sorted lexicographically. Edge labels elsewhere in
/// the crate are indexed by this order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adjacency: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.vertex_count, raw.edges)
    }
}

impl Graph {
    /// Builds a graph, canonicalising the edge list.
    ///
    /// Rejects self-loops, duplicate edges and out-of-range endpoints.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canonical = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint >= {vertex_count}"
                )));
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge {:?}", w[0])));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &canonical {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges: canonical,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of edge `{u, v}` in the canonical edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Total number of labels a total labeling of this graph uses.
    pub fn label_count(&self) -> usize {
        self.vertex_count + self.edges.len()
    }

    /// True for connected graphs with exactly `|V| - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.vertex_count >= 1 && self.edges.len() + 1 == self.vertex_count && is_connected(self)
    }
}

/// True iff a single component covers every vertex. The empty graph has no
/// components and is reported as disconnected.
pub fn is_connected(g: &Graph) -> bool {
    if g.vertex_count == 0 {
        return false;
    }
    let mut seen = vec![false; g.vertex_count];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == g.vertex_count
}

/// One side of a bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::X => "X",
            Side::Y => "Y",
        })
    }
}

/// An ordered pair of partite sets `(X, Y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    side_x: Vec<usize>,
    side_y: Vec<usize>,
    #[serde(skip)]
    side_of: Vec<Side>,
}

impl Bipartition {
    /// Builds a bipartition from a side assignment, checking that every edge
    /// crosses.
    pub fn from_sides(g: &Graph, side_of: Vec<Side>) -> Result<Self> {
        if side_of.len() != g.vertex_count() {
            return Err(Error::InvalidGraph(format!(
                "side assignment covers {} of {} vertices",
                side_of.len(),
                g.vertex_count()
            )));
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| side_of[u] == side_of[v]) {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) does not cross the bipartition"
            )));
        }
        let side_x = (0..side_of.len()).filter(|&v| side_of[v] == Side::X).collect();
        let side_y = (0..side_of.len()).filter(|&v| side_of[v] == Side::Y).collect();
        Ok(Bipartition {
            side_x,
            side_y,
            side_of,
        })
    }

    pub fn side_x(&self) -> &[usize] {
        &self.side_x
    }

    pub fn side_y(&self) -> &[usize] {
        &self.side_y
    }

    pub fn vertices(&self, side: Side) -> &[usize] {
        match side {
            Side::X => &self.side_x,
            Side::Y => &self.side_y,
        }
    }

    pub fn len(&self, side: Side) -> usize {
        self.vertices(side).len()
    }

    pub fn side(&self, v: usize) -> Side {
        self.side_of[v]
    }
}

/// Two-colours a connected graph by breadth-first layering, vertex 0 on side X.
///
/// Returns `Ok(None)` when an odd cycle exists.
pub fn bipartition_of(g: &Graph) -> Result<Option<Bipartition>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(two_coloring(g).map(|sides| Bipartition::from_sides(g, sides).expect("proper colouring")))
}

/// Breadth-first two-colouring of every component; `None` on an odd cycle.
pub(crate) fn two_coloring(g: &Graph) -> Option<Vec<Side>> {
    let mut side: Vec<Option<Side>> = vec![None; g.vertex_count()];
    for start in 0..g.vertex_count() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(Side::X);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].unwrap();
            for &w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(s.other());
                        queue.push_back(w);
                    }
                    Some(t) if t == s => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

/// Caterpillar parameters: the spine `c_1 .. c_r` and the number of leaves
/// hanging off each spine vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CaterpillarSpec {
    leaf_counts: Vec<usize>,
}

impl CaterpillarSpec {
    pub fn new(leaf_counts: Vec<usize>) -> Result<Self> {
        if leaf_counts.is_empty() {
            return Err(Error::InvalidFamily(
                "caterpillar spine must have at least one vertex".into(),
            ));
        }
        Ok(CaterpillarSpec { leaf_counts })
    }

    pub fn spine_length(&self) -> usize {
        self.leaf_counts.len()
    }

    pub fn leaf_counts(&self) -> &[usize] {
        &self.leaf_counts
    }

    /// Leaves on spine vertex `c_i`, 1-based.
    pub fn leaves_at(&self, i: usize) -> usize {
        self.leaf_counts[i - 1]
    }

    pub fn vertex_count(&self) -> usize {
        self.leaf_counts.iter().sum::<usize>() + self.spine_length()
    }

    /// Size of side X: the odd spine vertices plus the leaves of even ones,
    /// `Σ n_{2i} + ⌈r/2⌉`.
    pub fn alpha(&self) -> usize {
        let r = self.spine_length();
        let even_leaves: usize = self.leaf_counts.iter().skip(1).step_by(2).sum();
        even_leaves + r.div_ceil(2)
    }

    /// Size of side Y: the even spine vertices plus the leaves of odd ones,
    /// `Σ n_{2i-1} + ⌊r/2⌋`.
    pub fn beta(&self) -> usize {
        let r = self.spine_length();
        let odd_leaves: usize = self.leaf_counts.iter().step_by(2).sum();
        odd_leaves + r / 2
    }
}

impl TryFrom<Vec<usize>> for CaterpillarSpec {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        CaterpillarSpec::new(v)
    }
}

impl From<CaterpillarSpec> for Vec<usize> {
    fn from(spec: CaterpillarSpec) -> Self {
        spec.leaf_counts
    }
}

impl FromStr for CaterpillarSpec {
    type Err = Error;

    /// Parses comma-separated leaf counts, e.g. `"2,1,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let counts = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidFamily(format!("bad leaf count {part:?} in spine {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CaterpillarSpec::new(counts)
    }
}

impl fmt::Display for CaterpillarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.leaf_counts.iter().map(ToString::to_string).collect();
        write!(f, "S({})", parts.join(","))
    }
}

/// Structural name of a vertex in a named family. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexName {
    /// Spine vertex `c_i`.
    Spine(usize),
    /// Leaf `c_{i,j}` attached to `c_i`.
    Leaf(usize, usize),
    /// Lobster center `x`.
    Center,
    /// Lobster vertex `y_i` adjacent to the center.
    Inner(usize),
    /// Lobster vertex `x_i` adjacent to `y_i`.
    Outer(usize),
    /// The `i`-th vertex of a partite side of `K_{m,n}`.
    Part(Side, usize),
    /// Position along a path or cycle.
    Position(usize),
}

/// Parameters of a named graph family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Family {
    Caterpillar { spine: CaterpillarSpec },
    DoubleStar { m: usize, n: usize },
    Lobster { p: usize },
    Cycle { length: usize },
    CompleteBipartite { m: usize, n: usize },
    Path { n: usize },
    Star { p: usize },
}

impl Family {
    pub fn build(&self) -> Result<FamilyHandle> {
        match self {
            Family::Caterpillar { spine } => Ok(build_caterpillar(spine)),
            &Family::DoubleStar { m, n } => build_double_star(m, n),
            &Family::Lobster { p } => build_lobster(p),
            &Family::Cycle { length } => build_cycle(length),
            &Family::CompleteBipartite { m, n } => build_complete_bipartite(m, n),
            &Family::Path { n } => build_path(n),
            &Family::Star { p } => build_star(p),
        }
    }

    /// The caterpillar parameters when the family is a caterpillar.
    pub fn caterpillar_spec(&self) -> Option<CaterpillarSpec> {
        match self {
            Family::Caterpillar { spine } => Some(spine.clone()),
            &Family::DoubleStar { m, n } => Some(CaterpillarSpec {
                leaf_counts: vec![m, n],
            }),
            &Family::Star { p } => Some(CaterpillarSpec { leaf_counts: vec![p] }),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Caterpillar { spine } => write!(f, "{spine}"),
            Family::DoubleStar { m, n } => write!(f, "DS({m},{n})"),
            Family::Lobster { p } => write!(f, "L_{p}"),
            Family::Cycle { length } => write!(f, "C_{length}"),
            Family::CompleteBipartite { m, n } => write!(f, "K_{{{m},{n}}}"),
            Family::Path { n } => write!(f, "P_{n}"),
            Family::Star { p } => write!(f, "K_{{1,{p}}}"),
        }
    }
}

/// A generated graph together with its family parameters, the family's
/// bipartition convention and the structural name of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyHandle {
    pub graph: Graph,
    pub bipartition: Option<Bipartition>,
    pub family: Family,
    names: Vec<VertexName>,
}

impl FamilyHandle {
    /// Structural names indexed by vertex.
    pub fn names(&self) -> &[VertexName] {
        &self.names
    }

    pub fn name_of(&self, v: usize) -> VertexName {
        self.names[v]
    }

    pub fn vertex(&self, name: VertexName) -> Option<usize> {
        self.names.iter().position(|&n| n == name)
    }

    /// Centers `(u, v)` of a double star; `u` carries `m` leaves.
    pub fn double_star_centers(&self) -> Option<(usize, usize)> {
        match self.family {
            Family::DoubleStar { .. } => Some((self.vertex(VertexName::Spine(1))?, self.vertex(VertexName::Spine(2))?)),
            _ => None,
        }
    }
}

/// Caterpillar with vertices ordered `c_1, c_{1,1..n_1}, c_2, c_{2,1..n_2}, ...`.
///
/// Side X holds the odd spine vertices and the leaves of even ones.
pub fn build_caterpillar(spec: &CaterpillarSpec) -> FamilyHandle {
    let mut names = Vec::with_capacity(spec.vertex_count());
    let mut sides = Vec::with_capacity(spec.vertex_count());
    let mut edges = Vec::new();
    let mut previous_spine = None;
    for (idx, &leaves) in spec.leaf_counts().iter().enumerate() {
        let i = idx + 1;
        let spine_side = if i % 2 == 1 { Side::X } else { Side::Y };
        let c = names.len();
        names.push(VertexName::Spine(i));
        sides.push(spine_side);
        if let Some(p) = previous_spine {
            edges.push((p, c));
        }
        for j in 1..=leaves {
            edges.push((c, names.len()));
            names.push(VertexName::Leaf(i, j));
            sides.push(spine_side.other());
        }
        previous_spine = Some(c);
    }
    let graph = Graph::new(names.len(), edges).expect("caterpillar is simple");
    let bipartition = Bipartition::from_sides(&graph, sides).expect("caterpillar sides cross");
    FamilyHandle {
        graph,
        bipartition: Some(bipartition),
        family: Family::Caterpillar { spine: spec.clone() },
        names,
    }
}

/// Double star `S_{m,n}`: the caterpillar `S(m, n)`. Center `u = c_1` has `m`
/// leaves, center `v = c_2` has `n`.
pub fn build_double_star(m: usize, n: usize) -> Result<FamilyHandle> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidFamily(format!(
            "double star needs m, n >= 1, got ({m}, {n})"
        )));
    }
    let mut handle = build_caterpillar(&CaterpillarSpec::new(vec![m, n])?);
    handle.family = Family::DoubleStar { m, n };
    Ok(handle)
}

/// Lobster `L_p`: center `x = 0`, then `y_i = 2i - 1` and `x_i = 2i`.
pub fn build_lobster(p: usize) -> Result<FamilyHandle> {
    if p == 0 {
        return Err(Error::InvalidFamily("lobster needs p >= 1".into()));
    }
    let mut names = vec![VertexName::Center];
    let mut sides = vec![Side::X];
    let mut edges = Vec::new();
    for i in 1..=p {
        let y = names.len();
        names.push(VertexName::Inner(i));
        sides.push(Side::Y);
        names.push(VertexName::Outer(i));
        sides.push(Side::X);
        edges.push((0, y));
        edges.push((y, y + 1));
    }
    let graph = Graph::new(names.len(), edges)?;
    let bipartition = Bipartition::from_sides(&graph, sides)?;
    Ok(FamilyHandle {
        graph,
        bipartition: Some(bipartition),
        family: Family::Lobster { p },
        names,
    })
}

pub fn build_cycle(length: usize) -> Result<FamilyHandle> {
    if length < 3 {
        return Err(Error::InvalidFamily(format!("cycle length must be >= 3, got {length}")));
    }
    let graph = Graph::new(length, (0..length).map(|i| (i, (i + 1) % length)))?;
    let bipartition = if length.is_multiple_of(2) {
        let sides = (0..length)
            .map(|i| if i % 2 == 0 { Side::X } else { Side::Y })
            .collect();
        Some(Bipartition::from_sides(&graph, sides)?)
    } else {
        None
    };
    Ok(FamilyHandle {
        graph,
        bipartition,
        family: Family::Cycle { length },
        names: (1..=length).map(VertexName::Position).collect(),
    })
}

/// `K_{m,n}` with side X = `0..m` and side Y = `m..m+n`.
pub fn build_complete_bipartite(m: usize, n: usize) -> Result<FamilyHandle> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidFamily(format!(
            "K_{{m,n}} needs m, n >= 1, got ({m}, {n})"
        )));
    }
    let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
    let graph = Graph::new(m + n, edges)?;
    let sides = (0..m + n).map(|v| if v < m { Side::X } else { Side::Y }).collect();
    let bipartition = Bipartition::from_sides(&graph, sides)?;
    let names = (1..=m)
        .map(|i| VertexName::Part(Side::X, i))
        .chain((1..=n).map(|i| VertexName::Part(Side::Y, i)))
        .collect();
    Ok(FamilyHandle {
        graph,
        bipartition: Some(bipartition),
        family: Family::CompleteBipartite { m, n },
        names,
    })
}

/// Path on `n` vertices.
pub fn build_path(n: usize) -> Result<FamilyHandle> {
    if n == 0 {
        return Err(Error::InvalidFamily("path needs n >= 1".into()));
    }
    let graph = Graph::new(n, (1..n).map(|i| (i - 1, i)))?;
    let sides = (0..n).map(|i| if i % 2 == 0 { Side::X } else { Side::Y }).collect();
    let bipartition = Bipartition::from_sides(&graph, sides)?;
    Ok(FamilyHandle {
        graph,
        bipartition: Some(bipartition),
        family: Family::Path { n },
        names: (1..=n).map(VertexName::Position).collect(),
    })
}

/// Star `K_{1,p}`, built as the caterpillar `S(p)`.
pub fn build_star(p: usize) -> Result<FamilyHandle> {
    if p == 0 {
        return Err(Error::InvalidFamily("star needs p >= 1".into()));
    }
    let mut handle = build_caterpillar(&CaterpillarSpec::new(vec![p])?);
    handle.family = Family::Star { p };
    Ok(handle)
}
