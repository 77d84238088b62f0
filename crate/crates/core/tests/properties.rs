mod common;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use common::pascal;
use graphcurve::formula::*;
use graphcurve::graph::{canonical_form, validate_assumption};
use graphcurve::harness::enumerate_graphs;
use graphcurve::oracle::{oracle_for_graph, OracleOptions};
use graphcurve::{graph_stats, BettiTable, FieldConfig, Graph, Strand};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn strand(max_len: usize) -> impl Strategy<Value = Strand> {
    prop::collection::vec(0u64..40, 1..=max_len).prop_map(Strand)
}

/// Cycle-length multiset of a tree of cycles plus an ambient dimension
/// large enough to hold it.
fn tree_config() -> impl Strategy<Value = (usize, BTreeMap<usize, usize>)> {
    (prop::collection::btree_map(3usize..8, 1usize..3, 1..3), 0usize..4).prop_map(|(cycles, slack)| {
        let span: usize = cycles.iter().map(|(&j, &k)| k * (j - 1)).sum();
        (span + slack, cycles)
    })
}

fn small_graphs() -> &'static [Graph] {
    static G: OnceLock<Vec<Graph>> = OnceLock::new();
    G.get_or_init(|| enumerate_graphs(7).into_iter().filter(|g| g.vertex_count() >= 2).collect())
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let e: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.vertex_count(), &e).unwrap()
}

proptest! {
    #[test]
    fn extension_composes(c in strand(6), a in 1usize..5, b in 1usize..5) {
        let twice = extend_cubic(&extend_cubic(&c, a).unwrap(), b).unwrap();
        prop_assert_eq!(twice, extend_cubic(&c, a + b).unwrap());
    }

    #[test]
    fn padding_by_zero_is_identity(c in strand(8)) {
        prop_assert_eq!(pad_ambient(&c, 0), c);
    }

    #[test]
    fn padding_matches_pascal(c in strand(6), e in 0usize..5) {
        let p = pad_ambient(&c, e);
        prop_assert_eq!(p.len(), c.len() + e);
        for i in 1..=p.len() as i64 {
            let expected: u128 = (0..=e as i64).map(|t| pascal(e as i64, t) * c.at(i - t) as u128).sum();
            prop_assert_eq!(p.at(i) as u128, expected);
        }
    }

    #[test]
    fn union_is_symmetric(c1 in strand(5), c2 in strand(5)) {
        let (n1, n2) = (c1.len(), c2.len());
        let a = union_cubic(&c1, n1, &c2, n2, n1 + n2).unwrap();
        let b = union_cubic(&c2, n2, &c1, n1, n1 + n2).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn genus_one_without_tail_is_a_cycle(r in 2usize..14) {
        prop_assert_eq!(genus1_table(r, 0).unwrap(), cycle_table(r + 1).unwrap());
    }

    #[test]
    fn single_cycle_tree_is_genus_one(j in 3usize..10, extra in 0usize..5) {
        let t = tree_of_cycles_table(j - 1 + extra, &BTreeMap::from([(j, 1)])).unwrap();
        prop_assert_eq!(&t, &genus1_table(j - 1, extra).unwrap());
        if extra == 0 {
            prop_assert_eq!(t, cycle_table(j).unwrap());
        }
    }

    #[test]
    fn genus_zero_is_eagon_northcott(n in 1usize..16) {
        let t = genus0_table(n).unwrap();
        for i in 1..=n {
            prop_assert_eq!(t.get(i, i + 1) as u128, i as u128 * pascal(n as i64, i as i64 + 1));
            prop_assert_eq!(t.get(i, i + 2), 0);
        }
    }

    #[test]
    fn cycles_are_self_dual(v in 3usize..16) {
        let t = cycle_table(v).unwrap();
        let n = t.n;
        for i in 0..n {
            for j in i..=i + 2 {
                prop_assert_eq!(t.get(i, j), t.get(n - 1 - i, n + 1 - j), "b({},{})", i, j);
            }
        }
    }

    #[test]
    fn tree_tables_satisfy_euler_and_reconstruction((n, cycles) in tree_config()) {
        let t = tree_of_cycles_table(n, &cycles).unwrap();
        let g: usize = cycles.values().sum();
        prop_assert!(k_polynomial_check(&t, n + g, g).is_ok());
        prop_assert_eq!(quadratic_from_cubic(n, g, &t.cubic).unwrap(), t.quad.clone());
        prop_assert_eq!(t.get(n - 1, n + 1), g as u64);
        prop_assert_eq!(t.get(n, n + 1), 0);
        let gamma = *cycles.keys().next().unwrap();
        prop_assert_eq!(t.get(gamma - 2, gamma), cycles[&gamma] as u64);
    }

    #[test]
    fn padding_preserves_n2p((n, cycles) in tree_config(), e in 1usize..5) {
        let base = tree_of_cycles_table(n, &cycles).unwrap();
        let g: usize = cycles.values().sum();
        let cubic = extend_cubic(&base.cubic, e).unwrap();
        let padded = BettiTable::new(n + e, quadratic_from_cubic(n + e, g, &cubic).unwrap(), cubic);
        prop_assert_eq!(&padded, &tree_of_cycles_table(n + e, &cycles).unwrap());
        for p in 1..=n {
            prop_assert_eq!(n2p_level(&base) >= p, n2p_level(&padded) >= p, "p = {}", p);
        }
    }

    #[test]
    fn union_preserves_n2p(a in tree_config(), b in tree_config()) {
        let (t1, t2) = (tree_of_cycles_table(a.0, &a.1).unwrap(), tree_of_cycles_table(b.0, &b.1).unwrap());
        let n = a.0 + b.0;
        let cubic = union_cubic(&t1.cubic, a.0, &t2.cubic, b.0, n).unwrap();
        let mut merged = a.1.clone();
        for (&j, &k) in &b.1 {
            *merged.entry(j).or_insert(0) += k;
        }
        prop_assert_eq!(&cubic, &tree_of_cycles_table(n, &merged).unwrap().cubic);
        let g: usize = merged.values().sum();
        let union = BettiTable::new(n, quadratic_from_cubic(n, g, &cubic).unwrap(), cubic);
        for p in 1..=a.0.min(b.0) {
            let both = n2p_level(&t1) >= p && n2p_level(&t2) >= p;
            prop_assert_eq!(both, n2p_level(&union) >= p, "p = {}", p);
        }
    }

    #[test]
    fn table_json_round_trip(q in strand(10), c in strand(10)) {
        let n = q.len().max(c.len());
        let t = BettiTable::new(n, q, c);
        prop_assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn graph_json_round_trip(idx in 0usize..1000) {
        let g = &small_graphs()[idx % small_graphs().len()];
        prop_assert_eq!(&Graph::parse(&g.to_json()).unwrap(), g);
        prop_assert_eq!(&Graph::parse(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn relabeling_changes_nothing(idx in 0usize..1000, seed in any::<u64>()) {
        let g = &small_graphs()[idx % small_graphs().len()];
        let mut order: Vec<usize> = (0..g.vertex_count()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = relabel(g, &order);
        prop_assert_eq!(canonical_form(&h), canonical_form(g));
        prop_assert_eq!(validate_assumption(&h).passes(), validate_assumption(g).passes());
        prop_assert_eq!(graph_stats(&h).unwrap(), graph_stats(g).unwrap());
        let f = table_for_graph(g, None).ok().map(|x| x.0);
        prop_assert_eq!(table_for_graph(&h, None).ok().map(|x| x.0), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_independent_of_labels_seed_and_prime(idx in 0usize..1000, seed in 0u64..1000, second in prop::bool::ANY) {
        let g = &small_graphs()[idx % small_graphs().len()];
        let opts = OracleOptions::default();
        let (_, a) = oracle_for_graph(g, &FieldConfig::default(), &opts).unwrap();
        let cfg = FieldConfig { p: if second { 65537 } else { 32003 }, ..FieldConfig::default() }.with_seed(seed);
        let rev: Vec<usize> = (0..g.vertex_count()).rev().collect();
        let (_, b) = oracle_for_graph(&relabel(g, &rev), &cfg, &opts).unwrap();
        prop_assert_eq!(&a, &b);
        let s = graph_stats(g).unwrap();
        prop_assert!(k_polynomial_check(&a, s.d, s.g as usize).is_ok());
    }
}
