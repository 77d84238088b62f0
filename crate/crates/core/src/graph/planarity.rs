//! Planarity by path addition (Demoucron, Malgrange, Pertuiset) applied to
//! each biconnected block. Quadratic, which is plenty at these sizes.

use std::collections::{BTreeSet, VecDeque};

use super::Graph;

pub fn is_planar(g: &Graph) -> bool {
    let d = g.vertex_count();
    let m = g.edge_count();
    if d <= 4 {
        return true;
    }
    if m > 3 * d - 6 {
        return false;
    }
    biconnected_blocks(g).iter().all(|block| block_is_planar(g, block))
}

/// Edge sets of the biconnected blocks.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        edge_stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, v: usize, parent: usize) {
            self.disc[v] = self.timer;
            self.low[v] = self.timer;
            self.timer += 1;
            for &w in self.g.neighbors(v) {
                if w == parent {
                    continue;
                }
                if self.disc[w] == usize::MAX {
                    self.edge_stack.push((v, w));
                    self.visit(w, v);
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] >= self.disc[v] {
                        let mut block = Vec::new();
                        while let Some(e) = self.edge_stack.pop() {
                            block.push(e);
                            if e == (v, w) {
                                break;
                            }
                        }
                        self.blocks.push(block);
                    }
                } else if self.disc[w] < self.disc[v] {
                    self.edge_stack.push((v, w));
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
            }
        }
    }
    let d = g.vertex_count();
    let mut dfs = Dfs {
        g,
        disc: vec![usize::MAX; d],
        low: vec![0; d],
        timer: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..d {
        if dfs.disc[v] == usize::MAX {
            dfs.visit(v, usize::MAX);
        }
    }
    dfs.blocks
}

fn block_is_planar(g: &Graph, block: &[(usize, usize)]) -> bool {
    if block.len() < 3 {
        return true;
    }
    let d = g.vertex_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); d];
    for &(u, v) in block {
        adj[u].push(v);
        adj[v].push(u);
    }
    let vertices: Vec<usize> = (0..d).filter(|&v| !adj[v].is_empty()).collect();
    let nv = vertices.len();
    if nv <= 4 {
        return true;
    }
    if block.len() > 3 * nv - 6 {
        return false;
    }

    let cycle = find_cycle(&adj, vertices[0]);
    let mut embedded_v = vec![false; d];
    let mut embedded_e: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        embedded_v[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        embedded_e.insert((v.min(w), v.max(w)));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    loop {
        let fragments = fragments(&adj, &vertices, &embedded_v, &embedded_e);
        if fragments.is_empty() {
            return true;
        }
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, face)| frag.attachments.iter().all(|a| face.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment");
        let path = fragment_path(&adj, &fragments[fi], &embedded_v);
        for w in path.windows(2) {
            embedded_e.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            embedded_v[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let walk = |from: usize, to: usize| -> Vec<usize> {
            let mut out = vec![face[from]];
            let mut i = from;
            while i != to {
                i = (i + 1) % face.len();
                out.push(face[i]);
            }
            out
        };
        let interior = &path[1..path.len() - 1];
        let mut f1 = walk(ia, ib);
        f1.extend(interior.iter().rev());
        let mut f2 = walk(ib, ia);
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
    }
}

fn find_cycle(adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    fn dfs(adj: &[Vec<usize>], v: usize, parent: usize, path: &mut Vec<usize>, on_path: &mut [bool], seen: &mut [bool]) -> Option<Vec<usize>> {
        seen[v] = true;
        on_path[v] = true;
        path.push(v);
        for &w in &adj[v] {
            if w == parent {
                continue;
            }
            if on_path[w] {
                let at = path.iter().position(|&x| x == w).unwrap();
                return Some(path[at..].to_vec());
            }
            if !seen[w] {
                if let Some(c) = dfs(adj, w, v, path, on_path, seen) {
                    return Some(c);
                }
            }
        }
        path.pop();
        on_path[v] = false;
        None
    }
    let mut on_path = vec![false; adj.len()];
    let mut seen = vec![false; adj.len()];
    dfs(adj, start, usize::MAX, &mut Vec::new(), &mut on_path, &mut seen)
        .expect("biconnected block with at least three edges has a cycle")
}

struct Fragment {
    /// Interior vertices (empty for a single chord edge).
    interior: Vec<usize>,
    attachments: Vec<usize>,
}

fn fragments(
    adj: &[Vec<usize>],
    vertices: &[usize],
    embedded_v: &[bool],
    embedded_e: &BTreeSet<(usize, usize)>,
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for &u in vertices {
        if !embedded_v[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && embedded_v[v] && !embedded_e.contains(&(u, v)) {
                out.push(Fragment {
                    interior: Vec::new(),
                    attachments: vec![u, v],
                });
            }
        }
    }
    let mut seen = vec![false; adj.len()];
    for &s in vertices {
        if embedded_v[s] || seen[s] {
            continue;
        }
        let mut interior = vec![s];
        let mut attachments = BTreeSet::new();
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if embedded_v[w] {
                    attachments.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    interior.push(w);
                    stack.push(w);
                }
            }
        }
        out.push(Fragment {
            interior,
            attachments: attachments.into_iter().collect(),
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], frag: &Fragment, embedded_v: &[bool]) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let a = frag.attachments[0];
    let mut prev = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::new();
    for &w in &adj[a] {
        if !embedded_v[w] && frag.interior.contains(&w) {
            prev[w] = a;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if embedded_v[w] {
                if w != a {
                    let mut path = vec![w, v];
                    let mut x = v;
                    while prev[x] != a {
                        x = prev[x];
                        path.push(x);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
            } else if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    fn k33() -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                e.push((i, j));
            }
        }
        e
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&Graph::from_edges(&k33()).unwrap()));
    }

    #[test]
    fn subdivided_k33_is_detected() {
        // subdivide every edge of K_{3,3} once: sparse, passes the edge bound
        let mut e = Vec::new();
        for (next, (u, v)) in (6..).zip(k33()) {
            e.push((u, next));
            e.push((next, v));
        }
        let g = Graph::from_edges(&e).unwrap();
        assert!(g.edge_count() <= 3 * g.vertex_count() - 6);
        assert!(!is_planar(&g));
    }

    #[test]
    fn petersen_is_not_planar_prism_is() {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        assert!(!is_planar(&Graph::from_edges(&e).unwrap()));
        let mut prism = Vec::new();
        for i in 0..5 {
            prism.push((i, (i + 1) % 5));
            prism.push((i, i + 5));
            prism.push((5 + i, 5 + (i + 1) % 5));
        }
        assert!(is_planar(&Graph::from_edges(&prism).unwrap()));
    }

    #[test]
    fn cube_and_wheels() {
        let cube = Graph::from_edges(&[
            (0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7),
        ])
        .unwrap();
        assert!(is_planar(&cube));
        for n in 4..9 {
            let mut e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            e.extend((0..n).map(|i| (i, n)));
            assert!(is_planar(&Graph::from_edges(&e).unwrap()));
        }
    }
}
