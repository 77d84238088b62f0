use std::collections::BTreeSet;

use graphcurve::graph::{canonical_form, validate_assumption, Graph};
use graphcurve::harness::{enumerate_connected, enumerate_graphs, graphs_on};

fn edge_sets(graphs: &[Graph]) -> BTreeSet<Vec<(usize, usize)>> {
    graphs.iter().map(|g| g.edges().to_vec()).collect()
}

fn canon_of(edges: &[(usize, usize)]) -> graphcurve::graph::CanonicalForm {
    canonical_form(&Graph::from_edges(edges).unwrap())
}

#[test]
fn hand_enumerated_levels() {
    let two = graphs_on(2);
    assert_eq!(two.len(), 1);
    assert_eq!(two[0].edge_count(), 1);

    let three: BTreeSet<_> = graphs_on(3).iter().map(canonical_form).collect();
    let expected: BTreeSet<_> = [canon_of(&[(0, 1), (1, 2)]), canon_of(&[(0, 1), (1, 2), (2, 0)])].into();
    assert_eq!(three, expected);

    let four: BTreeSet<_> = graphs_on(4).iter().map(canonical_form).collect();
    let expected: BTreeSet<_> = [
        canon_of(&[(0, 1), (1, 2), (2, 3)]),
        canon_of(&[(0, 1), (0, 2), (0, 3)]),
        canon_of(&[(0, 1), (1, 2), (2, 0), (2, 3)]),
        canon_of(&[(0, 1), (1, 2), (2, 3), (3, 0)]),
    ]
    .into();
    assert_eq!(four, expected);
    let diamond = Graph::from_edges(&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
    assert!(!four.contains(&canonical_form(&diamond)));
}

#[test]
fn no_isomorphic_duplicates_and_deterministic() {
    let all = enumerate_graphs(9);
    let forms: BTreeSet<_> = all.iter().map(canonical_form).collect();
    assert_eq!(forms.len(), all.len());
    assert_eq!(edge_sets(&all), edge_sets(&enumerate_graphs(9)));
    assert_eq!(all, enumerate_graphs(9));
    assert!(all.iter().all(|g| validate_assumption(g).passes()));
}

#[test]
fn valid_graphs_are_exactly_the_filtered_subcubic_ones() {
    let subcubic = enumerate_connected(8, &|g| g.max_degree() <= 3);
    let filtered: BTreeSet<_> = subcubic
        .iter()
        .filter(|g| validate_assumption(g).passes())
        .map(canonical_form)
        .collect();
    let valid: BTreeSet<_> = enumerate_graphs(8).iter().map(canonical_form).collect();
    assert_eq!(filtered, valid);
}

#[test]
fn degree_criterion_agrees_through_ten_vertices() {
    let subcubic = enumerate_connected(10, &|g| g.max_degree() <= 3);
    let counts: Vec<usize> = (1..=10).map(|d| subcubic.iter().filter(|g| g.vertex_count() == d).count()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 10, 29, 64, 194, 531, 1733]);
    let mut rejected = 0;
    for g in &subcubic {
        let r = validate_assumption(g);
        assert!(r.criteria_agree(), "criteria disagree on {g}");
        if r.planar && !r.subgraph_bound_ok {
            rejected += 1;
        }
    }
    assert!(rejected > 0);
}
