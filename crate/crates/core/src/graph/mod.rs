//! Simple undirected graphs, their statistics, and the file formats they are
//! read from.

mod algo;
mod canon;
mod family;
mod planarity;
mod validate;

pub use algo::{bridges, decompose_tree_of_cycles, girth_and_count, strip_leaves, Girth, TreeOfCycles};
pub use canon::{canonical_form, CanonicalForm};
pub use family::{generate_family, Attachment, FamilySpec};
pub use planarity::is_planar;
pub use validate::{prop12_criterion, subgraph_bound, validate_assumption, SubgraphWitness, ValidationReport, Witness};

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    /// Sorted, each pair stored as `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `vertex_count` vertices. Self-loops and repeated
    /// edges are rejected rather than merged.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: v, vertex_count });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            vertex_count,
            edges: norm,
            adj,
        })
    }

    /// Builds a graph from an edge list alone; the vertex range is
    /// `0..=max index`.
    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let d = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
        Self::new(d, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|l| l.binary_search(&v).is_ok())
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// Adjacency as bitmasks; only valid for graphs with at most 64 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.vertex_count <= 64);
        self.adj
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphFile::from(self)).expect("graph serializes")
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("# {} vertices, {} edges\n", self.vertex_count, self.edges.len());
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses either the JSON object format or the plain edge-list format
    /// (detected by a leading `{`).
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        if text.trim_start().starts_with('{') {
            let file: GraphFile = serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
            let edges: Vec<(usize, usize)> = file.edges.iter().map(|e| (e[0], e[1])).collect();
            Self::new(file.vertices, &edges)
        } else {
            let mut edges = Vec::new();
            for (lineno, line) in text.lines().enumerate() {
                let line = line.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let parts: Vec<&str> = line.split_whitespace().collect();
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| GraphError::Parse(format!("line {}: bad vertex {s:?}", lineno + 1)))
                };
                match parts.as_slice() {
                    [a, b] => edges.push((parse(a)?, parse(b)?)),
                    _ => return Err(GraphError::Parse(format!("line {}: expected \"u v\"", lineno + 1))),
                }
            }
            Self::from_edges(&edges)
        }
    }

    pub fn read(path: &Path) -> Result<Self, GraphError> {
        let text = std::fs::read_to_string(path).map_err(|e| GraphError::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(d={}; ", self.vertex_count)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, ")")
    }
}

/// JSON graph file: `{"vertices": d, "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        Self {
            vertices: g.vertex_count,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

/// Counts attached to a connected graph. `x_i` of the degree histogram is
/// the number of vertices of degree `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub d: usize,
    pub m: usize,
    /// Arithmetic genus `m - d + 1`.
    pub g: i64,
    /// Ambient dimension `d - g`.
    pub n: i64,
    pub degree_histogram: BTreeMap<usize, usize>,
}

pub fn graph_stats(g: &Graph) -> Result<GraphStats, GraphError> {
    if g.vertex_count == 0 {
        return Err(GraphError::Empty);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let d = g.vertex_count;
    let m = g.edge_count();
    let genus = m as i64 - d as i64 + 1;
    let mut degree_histogram = BTreeMap::new();
    for v in 0..d {
        *degree_histogram.entry(g.degree(v)).or_insert(0) += 1;
    }
    Ok(GraphStats {
        d,
        m,
        g: genus,
        n: d as i64 - genus,
        degree_histogram,
    })
}
