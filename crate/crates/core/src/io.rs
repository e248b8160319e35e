//! JSON documents exchanged by the command-line tool, and DOT export.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::{Family, FamilyHandle, Graph};
use crate::labeling::{TotalLabeling, VertexLabeling};
use crate::{Error, Result};

/// A graph on disk: `{"vertex_count": n, "edges": [[u, v], ...]}` with an
/// optional `"family"` block for named families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(flatten)]
    pub graph: Graph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
}

impl GraphDocument {
    /// Resolves the family handle, rejecting a family block that does not
    /// match the stored graph.
    pub fn handle(&self) -> Result<Option<FamilyHandle>> {
        let Some(family) = &self.family else {
            return Ok(None);
        };
        let handle = family.build()?;
        if handle.graph != self.graph {
            return Err(Error::InvalidGraph(format!("graph does not match its family {family}")));
        }
        Ok(Some(handle))
    }

    pub fn describe(&self) -> String {
        match &self.family {
            Some(f) => f.to_string(),
            None => format!("graph on {} vertices", self.graph.vertex_count()),
        }
    }
}

impl From<&FamilyHandle> for GraphDocument {
    fn from(handle: &FamilyHandle) -> Self {
        GraphDocument {
            graph: handle.graph.clone(),
            family: Some(handle.family.clone()),
        }
    }
}

impl From<Graph> for GraphDocument {
    fn from(graph: Graph) -> Self {
        GraphDocument { graph, family: None }
    }
}

/// A graph together with one of its total labelings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bundle {
    pub graph: GraphDocument,
    pub labeling: TotalLabeling,
}

/// A graph together with a vertex labeling (e.g. a graceful one).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexBundle {
    pub graph: GraphDocument,
    pub vertex_labeling: VertexLabeling,
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering. Vertex labels become node labels and edge labels edge
/// labels; without a labeling, nodes show their indices.
pub fn to_dot(g: &Graph, labeling: Option<&TotalLabeling>, title: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", dot_escape(title)).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 0..g.vertex_count() {
        let text = labeling.map_or_else(|| v.to_string(), |l| l.vertex(v).to_string());
        writeln!(out, "  {v} [label=\"{text}\"];").unwrap();
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match labeling {
            Some(l) => writeln!(out, "  {u} -- {v} [label=\"{}\"];", l.edge(e)).unwrap(),
            None => writeln!(out, "  {u} -- {v};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

/// Graphviz rendering of a vertex labeling; edges show endpoint differences.
pub fn vertex_labeling_to_dot(g: &Graph, labeling: &VertexLabeling, title: &str) -> String {
    let labels = labeling.vertex_labels();
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", dot_escape(title)).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (v, l) in labels.iter().enumerate() {
        writeln!(out, "  {v} [label=\"{l}\"];").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v} [label=\"{}\"];", labels[u].abs_diff(labels[v])).unwrap();
    }
    out.push_str("}\n");
    out
}
