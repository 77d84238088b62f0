use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Graph;

/// Bridges of `g` (edges whose removal disconnects their component), found
/// with the usual DFS lowpoint computation. Sorted.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let d = g.vertex_count();
    let mut disc = vec![usize::MAX; d];
    let mut low = vec![0usize; d];
    let mut out = Vec::new();
    let mut timer = 0;
    for root in 0..d {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*next) {
                *next += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        out.push((parent.min(v), parent.max(v)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Girth and the number of distinct cycles realizing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Girth {
    pub length: usize,
    pub count: usize,
}

/// `None` for acyclic graphs.
pub fn girth_and_count(g: &Graph) -> Option<Girth> {
    let d = g.vertex_count();
    let mut best = usize::MAX;
    for root in 0..d {
        let mut dist = vec![usize::MAX; d];
        let mut parent = vec![usize::MAX; d];
        let mut queue = std::collections::VecDeque::from([root]);
        dist[root] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        return None;
    }
    // Each cycle is found once per direction from its smallest vertex.
    let mut directed = 0;
    let mut on_path = vec![false; d];
    for start in 0..d {
        on_path[start] = true;
        count_closed_walks(g, start, start, 1, best, &mut on_path, &mut directed);
        on_path[start] = false;
    }
    Some(Girth {
        length: best,
        count: directed / 2,
    })
}

fn count_closed_walks(
    g: &Graph,
    start: usize,
    v: usize,
    len: usize,
    target: usize,
    on_path: &mut [bool],
    found: &mut usize,
) {
    for &w in g.neighbors(v) {
        if len == target {
            if w == start {
                *found += 1;
            }
            continue;
        }
        if w > start && !on_path[w] {
            on_path[w] = true;
            count_closed_walks(g, start, w, len + 1, target, on_path, found);
            on_path[w] = false;
        }
    }
}

/// Cycle structure of a tree of cycles: every edge is a bridge or lies on a
/// single cycle, and cycles are pairwise vertex-disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeOfCycles {
    /// cycle length -> number of cycles of that length
    pub cycle_lengths: BTreeMap<usize, usize>,
    pub bridge_count: usize,
}

impl TreeOfCycles {
    pub fn genus(&self) -> usize {
        self.cycle_lengths.values().sum()
    }
}

pub fn decompose_tree_of_cycles(g: &Graph) -> Option<TreeOfCycles> {
    if !g.is_connected() {
        return None;
    }
    let br = bridges(g);
    let d = g.vertex_count();
    let is_bridge = |u: usize, v: usize| br.binary_search(&(u.min(v), u.max(v))).is_ok();
    let mut comp = vec![usize::MAX; d];
    let mut cycle_lengths = BTreeMap::new();
    for s in 0..d {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        let mut members = vec![s];
        let mut stack = vec![s];
        let mut inner_edges = 0;
        while let Some(v) = stack.pop() {
            let mut inner_deg = 0;
            for &w in g.neighbors(v) {
                if is_bridge(v, w) {
                    continue;
                }
                inner_deg += 1;
                if v < w {
                    inner_edges += 1;
                }
                if comp[w] == usize::MAX {
                    comp[w] = s;
                    members.push(w);
                    stack.push(w);
                }
            }
            if inner_deg != 0 && inner_deg != 2 {
                return None;
            }
        }
        if members.len() > 1 {
            // connected, 2-regular: a single cycle
            debug_assert_eq!(inner_edges, members.len());
            *cycle_lengths.entry(members.len()).or_insert(0) += 1;
        }
    }
    Some(TreeOfCycles {
        cycle_lengths,
        bridge_count: br.len(),
    })
}

/// Repeatedly deletes vertices of degree at most one. Returns the surviving
/// vertices (sorted) and how many were removed.
pub fn strip_leaves(g: &Graph) -> (Vec<usize>, usize) {
    let d = g.vertex_count();
    let mut deg: Vec<usize> = (0..d).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; d];
    let mut queue: Vec<usize> = (0..d).filter(|&v| deg[v] <= 1).collect();
    let mut removed = 0;
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        removed += 1;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push(w);
                }
            }
        }
    }
    ((0..d).filter(|&v| alive[v]).collect(), removed)
}
