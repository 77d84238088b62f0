//! The standing assumptions on graphs: planar, connected, simple, every
//! vertex of degree at most three, and every connected subgraph with
//! `d >= 2g + 1`.
//!
//! The subgraph condition is checked by enumerating connected vertex
//! subsets (exponential; fine at desk scale). Checking induced subgraphs
//! suffices: deleting edges from a vertex set only lowers its genus. The
//! degree criterion (no connected subgraph whose vertices all have degree 2
//! or 3 with fewer than three of degree 2) is evaluated over the same
//! enumeration as an independent check.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{is_planar, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgraphWitness {
    pub vertices: Vec<usize>,
    pub d: usize,
    pub genus: i64,
}

impl fmt::Display for SubgraphWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "subgraph on {:?} has d={}, g={}", self.vertices, self.d, self.genus)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    NotPlanar,
    Disconnected,
    HighDegree { vertex: usize, degree: usize },
    Subgraph(SubgraphWitness),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub planar: bool,
    pub connected: bool,
    pub simple: bool,
    pub subtrivalent: bool,
    pub subgraph_bound_ok: bool,
    pub prop12_ok: bool,
    pub failing_witness: Option<Witness>,
    /// Witness found by the degree criterion, if any.
    pub prop12_witness: Option<SubgraphWitness>,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.planar && self.connected && self.simple && self.subtrivalent && self.subgraph_bound_ok
    }

    /// The two formulations of the subgraph condition must agree whenever
    /// the degree bound holds.
    pub fn criteria_agree(&self) -> bool {
        !self.subtrivalent || self.subgraph_bound_ok == self.prop12_ok
    }

    /// One line per failed condition, numbered as in the standing
    /// assumptions (1) planar .. (5) subgraph bound.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.planar {
            out.push("condition (1): graph is not planar".to_string());
        }
        if !self.connected {
            out.push("condition (2): graph is not connected".to_string());
        }
        if !self.simple {
            out.push("condition (3): graph is not simple".to_string());
        }
        if !self.subtrivalent {
            let detail = match &self.failing_witness {
                Some(Witness::HighDegree { vertex, degree }) => format!(" (vertex {vertex} has degree {degree})"),
                _ => String::new(),
            };
            out.push(format!("condition (4): graph is not subtrivalent{detail}"));
        }
        if !self.subgraph_bound_ok {
            let detail = match &self.failing_witness {
                Some(Witness::Subgraph(w)) => {
                    format!(": {} < 2g+1 = {}", w, 2 * w.genus + 1)
                }
                _ => String::new(),
            };
            out.push(format!("condition (5): connected subgraph violates d >= 2g+1{detail}"));
        }
        out
    }
}

pub fn validate_assumption(g: &Graph) -> ValidationReport {
    let planar = is_planar(g);
    let connected = g.is_connected();
    let high = (0..g.vertex_count()).find(|&v| g.degree(v) > 3);
    let bound = subgraph_bound(g);
    let prop12 = prop12_criterion(g);
    let failing_witness = if !planar {
        Some(Witness::NotPlanar)
    } else if !connected {
        Some(Witness::Disconnected)
    } else if let Some(v) = high {
        Some(Witness::HighDegree {
            vertex: v,
            degree: g.degree(v),
        })
    } else {
        bound.clone().err().map(Witness::Subgraph)
    };
    ValidationReport {
        planar,
        connected,
        // enforced at construction
        simple: true,
        subtrivalent: high.is_none(),
        subgraph_bound_ok: bound.is_ok(),
        prop12_ok: prop12.is_ok(),
        failing_witness,
        prop12_witness: prop12.err(),
    }
}

/// Every connected induced subgraph satisfies `d >= 2g + 1`; returns the
/// first offender otherwise.
pub fn subgraph_bound(g: &Graph) -> Result<(), SubgraphWitness> {
    let adj = g.adjacency_masks();
    let mut found = None;
    for_each_connected_subset(&adj, &mut |set| {
        let d = set.count_ones() as i64;
        let m = edges_within(&adj, set) as i64;
        let genus = m - d + 1;
        if d < 2 * genus + 1 {
            found = Some(witness(set, genus));
            return false;
        }
        true
    });
    found.map_or(Ok(()), Err)
}

/// No connected subgraph has all degrees in {2, 3} with `x_2 < 3`.
pub fn prop12_criterion(g: &Graph) -> Result<(), SubgraphWitness> {
    let adj = g.adjacency_masks();
    let mut found = None;
    for_each_connected_subset(&adj, &mut |set| {
        let mut x2 = 0;
        let mut x3 = 0;
        let mut bits = set;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            match (adj[v] & set).count_ones() {
                2 => x2 += 1,
                3 => x3 += 1,
                _ => return true,
            }
        }
        if x2 < 3 {
            let d = (x2 + x3) as i64;
            let genus = edges_within(&adj, set) as i64 - d + 1;
            found = Some(witness(set, genus));
            return false;
        }
        true
    });
    found.map_or(Ok(()), Err)
}

fn witness(set: u64, genus: i64) -> SubgraphWitness {
    let vertices: Vec<usize> = (0..64).filter(|&v| set & (1 << v) != 0).collect();
    SubgraphWitness {
        d: vertices.len(),
        vertices,
        genus,
    }
}

fn edges_within(adj: &[u64], set: u64) -> u32 {
    let mut twice = 0;
    let mut bits = set;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        twice += (adj[v] & set).count_ones();
    }
    twice / 2
}

/// Visits every connected vertex subset exactly once (each is grown from its
/// smallest vertex through exclusive neighborhoods). The visitor returns
/// `false` to stop early.
pub(crate) fn for_each_connected_subset(adj: &[u64], visit: &mut dyn FnMut(u64) -> bool) {
    fn extend(adj: &[u64], sub: u64, nbhd: u64, mut ext: u64, floor: u64, visit: &mut dyn FnMut(u64) -> bool) -> bool {
        if !visit(sub) {
            return false;
        }
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let excl = adj[w] & !sub & !nbhd & floor;
            if !extend(adj, sub | (1 << w), nbhd | adj[w], ext | excl, floor, visit) {
                return false;
            }
        }
        true
    }
    let d = adj.len();
    for v in 0..d {
        // only vertices above v may join
        let floor = !((1u64 << (v + 1)) - 1) & if d == 64 { u64::MAX } else { (1u64 << d) - 1 };
        let sub = 1u64 << v;
        if !extend(adj, sub, adj[v] | sub, adj[v] & floor, floor, visit) {
            return;
        }
    }
}
