//! Canonical labeling by degree refinement plus exhaustive individualization.
//! No automorphism pruning: fine for subcubic graphs on a dozen vertices.

use super::Graph;

/// Isomorphism invariant that is complete: two graphs are isomorphic iff
/// their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    /// Upper-triangle adjacency bits of the canonically relabeled graph.
    pub bits: u128,
}

/// Canonical form of a graph with at most 16 vertices.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let d = g.vertex_count();
    assert!(d <= 16, "canonical_form supports at most 16 vertices");
    let adj = g.adjacency_masks();
    let cells = refine(&adj, vec![(0..d).collect()]);
    let mut best: Option<u128> = None;
    search(&adj, cells, &mut best);
    CanonicalForm {
        vertex_count: d,
        bits: best.unwrap_or(0),
    }
}

/// Splits cells until every vertex in a cell has the same number of
/// neighbors in every cell. Split order depends only on counts.
fn refine(adj: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v))).collect();
        let mut next = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    changed |= start > 0 || i < keyed.len();
                    start = i;
                }
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn search(adj: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<u128>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = encode(adj, &order);
        if best.is_none_or(|b| code < b) {
            *best = Some(code);
        }
        return;
    };
    for (k, &v) in cells[target].iter().enumerate() {
        let mut split = cells[..target].to_vec();
        split.push(vec![v]);
        let rest: Vec<usize> = cells[target].iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &w)| w).collect();
        split.push(rest);
        split.extend_from_slice(&cells[target + 1..]);
        search(adj, refine(adj, split), best);
    }
}

fn encode(adj: &[u64], order: &[usize]) -> u128 {
    let mut bits = 0u128;
    let mut pos = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if adj[order[i]] & (1 << order[j]) != 0 {
                bits |= 1 << pos;
            }
            pos += 1;
        }
    }
    bits
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let e: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(g.vertex_count(), &e).unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let graphs = [
            Graph::from_edges(&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7), (7, 4)]).unwrap(),
            Graph::from_edges(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 0)]).unwrap(),
            Graph::from_edges(&[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5), (2, 6)]).unwrap(),
        ];
        for g in &graphs {
            let c = canonical_form(g);
            for _ in 0..20 {
                let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&relabel(g, &perm)), c);
            }
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        // both cubic on six vertices
        let prism = Graph::from_edges(&[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        let mut k33 = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                k33.push((i, j));
            }
        }
        let k33 = Graph::from_edges(&k33).unwrap();
        assert_ne!(canonical_form(&prism), canonical_form(&k33));
        let p4 = Graph::from_edges(&[(0, 1), (1, 2), (2, 3)]).unwrap();
        let claw = Graph::from_edges(&[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4), canonical_form(&claw));
    }
}
