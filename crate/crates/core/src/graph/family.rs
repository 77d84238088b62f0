use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::GraphError;

/// Hang a path of `count` new vertices off base vertex `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub vertex: usize,
    pub count: usize,
}

/// Parametrized graph families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    /// Path on `n` vertices.
    Path(usize),
    /// Cycle on `n` vertices.
    Cycle(usize),
    /// Successive degree-one additions to a base graph.
    Extension {
        base: Box<FamilySpec>,
        attachments: Vec<Attachment>,
    },
    /// A tree on vertices `0..t` in which the listed edges (by index into
    /// `tree_edges`, pairwise non-adjacent) are replaced by cycles of the
    /// given lengths through both endpoints.
    TreeOfCycles {
        tree_edges: Vec<(usize, usize)>,
        replaced: Vec<(usize, usize)>,
    },
    /// `k` copies of a `cycle_len`-cycle, each glued to the previous one
    /// along a single edge.
    GluedChain { cycle_len: usize, k: usize },
}

impl FamilySpec {
    /// Tree of cycles shaped as a chain: cycles joined consecutively by
    /// paths with `bridges[i]` edges between cycle `i` and cycle `i + 1`.
    pub fn cycle_chain(cycles: &[usize], bridges: &[usize]) -> Result<Self, GraphError> {
        if cycles.is_empty() {
            return Err(GraphError::InvalidFamily("at least one cycle required".into()));
        }
        if bridges.len() + 1 != cycles.len() {
            return Err(GraphError::InvalidFamily(format!(
                "{} cycles need {} bridge lengths, got {}",
                cycles.len(),
                cycles.len() - 1,
                bridges.len()
            )));
        }
        if bridges.contains(&0) {
            return Err(GraphError::InvalidFamily("bridge paths must have at least one edge".into()));
        }
        let mut tree_edges = Vec::new();
        let mut replaced = Vec::new();
        let mut next = 0usize;
        let mut prev_exit: Option<usize> = None;
        for (i, &len) in cycles.iter().enumerate() {
            let (entry, exit) = (next, next + 1);
            next += 2;
            if let Some(from) = prev_exit {
                let mut cur = from;
                for _ in 1..bridges[i - 1] {
                    tree_edges.push((cur, next));
                    cur = next;
                    next += 1;
                }
                tree_edges.push((cur, entry));
            }
            replaced.push((tree_edges.len(), len));
            tree_edges.push((entry, exit));
            prev_exit = Some(exit);
        }
        Ok(FamilySpec::TreeOfCycles { tree_edges, replaced })
    }
}

/// Materializes a family member with deterministic vertex labels.
pub fn generate_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    let (d, edges) = family_edges(spec)?;
    let g = Graph::new(d, &edges)?;
    Ok(g)
}

fn family_edges(spec: &FamilySpec) -> Result<(usize, Vec<(usize, usize)>), GraphError> {
    match spec {
        FamilySpec::Path(n) => {
            if *n == 0 {
                return Err(GraphError::InvalidFamily("path needs at least one vertex".into()));
            }
            Ok((*n, (1..*n).map(|i| (i - 1, i)).collect()))
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(GraphError::InvalidFamily(format!("cycle length {n} < 3")));
            }
            Ok((*n, (0..*n).map(|i| (i, (i + 1) % n)).collect()))
        }
        FamilySpec::Extension { base, attachments } => {
            let (mut d, mut edges) = family_edges(base)?;
            let base_d = d;
            let mut degree = vec![0usize; d];
            for &(u, v) in &edges {
                degree[u] += 1;
                degree[v] += 1;
            }
            for a in attachments {
                if a.vertex >= base_d {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: a.vertex,
                        vertex_count: base_d,
                    });
                }
                if a.count == 0 {
                    return Err(GraphError::InvalidFamily("attachment count must be positive".into()));
                }
                let mut cur = a.vertex;
                for _ in 0..a.count {
                    edges.push((cur, d));
                    degree[cur] += 1;
                    degree.push(1);
                    cur = d;
                    d += 1;
                }
                if degree[a.vertex] > 3 {
                    return Err(GraphError::DegreeExceeded {
                        vertex: a.vertex,
                        degree: degree[a.vertex],
                    });
                }
            }
            Ok((d, edges))
        }
        FamilySpec::TreeOfCycles { tree_edges, replaced } => {
            let t = tree_edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(1);
            let tree = Graph::new(t, tree_edges)?;
            if tree.edge_count() + 1 != t || !tree.is_connected() {
                return Err(GraphError::InvalidFamily("tree_edges do not form a tree".into()));
            }
            let mut touched = vec![false; t];
            let mut is_replaced = vec![false; tree_edges.len()];
            for &(idx, len) in replaced {
                let &(a, b) = tree_edges
                    .get(idx)
                    .ok_or_else(|| GraphError::InvalidFamily(format!("no tree edge {idx}")))?;
                if len < 3 {
                    return Err(GraphError::InvalidFamily(format!("cycle length {len} < 3")));
                }
                if touched[a] || touched[b] {
                    return Err(GraphError::InvalidFamily("replaced edges must be pairwise non-adjacent".into()));
                }
                touched[a] = true;
                touched[b] = true;
                is_replaced[idx] = true;
            }
            let mut edges: Vec<(usize, usize)> = tree_edges.clone();
            let mut d = t;
            for &(idx, len) in replaced {
                let (a, b) = tree_edges[idx];
                let mut cur = a;
                for _ in 0..len - 2 {
                    edges.push((cur, d));
                    cur = d;
                    d += 1;
                }
                edges.push((cur, b));
            }
            Ok((d, edges))
        }
        FamilySpec::GluedChain { cycle_len, k } => {
            let len = *cycle_len;
            if len < 3 || *k == 0 {
                return Err(GraphError::InvalidFamily(format!("glued chain needs cycle_len >= 3 and k >= 1, got {len}, {k}")));
            }
            let mut edges = vec![(0, 1)];
            let (mut a, mut b) = (0usize, 1usize);
            let mut d = 2;
            for _ in 0..*k {
                let mut walk = vec![a];
                for _ in 0..len - 2 {
                    walk.push(d);
                    d += 1;
                }
                walk.push(b);
                for w in walk.windows(2) {
                    edges.push((w[0], w[1]));
                }
                let h = (len - 2) / 2;
                (a, b) = (walk[h], walk[h + 1]);
            }
            Ok((d, edges))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph_stats;

    #[test]
    fn sizes() {
        let p4 = generate_family(&FamilySpec::Path(4)).unwrap();
        assert_eq!((p4.vertex_count(), p4.edge_count()), (4, 3));
        let ex = generate_family(&FamilySpec::cycle_chain(&[3, 4, 6], &[3, 2]).unwrap()).unwrap();
        assert_eq!((ex.vertex_count(), ex.edge_count()), (16, 18));
        assert_eq!(graph_stats(&ex).unwrap().g, 3);
        let c43 = generate_family(&FamilySpec::GluedChain { cycle_len: 4, k: 3 }).unwrap();
        let s = graph_stats(&c43).unwrap();
        assert_eq!((s.d, s.m, s.g, s.n), (8, 10, 3, 5));
        let c44 = generate_family(&FamilySpec::GluedChain { cycle_len: 4, k: 4 }).unwrap();
        let s = graph_stats(&c44).unwrap();
        assert_eq!((s.d, s.m, s.g, s.n), (10, 13, 4, 6));
        assert!(c44.max_degree() <= 3);
    }

    #[test]
    fn extension_degree_guard() {
        let spec = FamilySpec::Extension {
            base: Box::new(FamilySpec::Cycle(4)),
            attachments: vec![Attachment { vertex: 0, count: 1 }, Attachment { vertex: 0, count: 1 }],
        };
        assert_eq!(generate_family(&spec), Err(GraphError::DegreeExceeded { vertex: 0, degree: 4 }));
        let ok = FamilySpec::Extension {
            base: Box::new(FamilySpec::Cycle(4)),
            attachments: vec![Attachment { vertex: 0, count: 1 }, Attachment { vertex: 2, count: 2 }],
        };
        let g = generate_family(&ok).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 7));
    }

    #[test]
    fn tree_of_cycles_guards() {
        assert!(FamilySpec::cycle_chain(&[3, 4], &[]).is_err());
        assert!(FamilySpec::cycle_chain(&[3, 4], &[0]).is_err());
        let adjacent = FamilySpec::TreeOfCycles {
            tree_edges: vec![(0, 1), (1, 2)],
            replaced: vec![(0, 3), (1, 3)],
        };
        assert!(generate_family(&adjacent).is_err());
        let short = FamilySpec::TreeOfCycles {
            tree_edges: vec![(0, 1)],
            replaced: vec![(0, 2)],
        };
        assert!(generate_family(&short).is_err());
    }
}
