mod common;

use common::*;
use graphcurve::formula::{table_for_graph, FormulaSource};
use graphcurve::graph::graph_stats;
use graphcurve::oracle::{oracle_for_graph, OracleOptions};
use graphcurve::{BettiTable, FieldConfig};

#[test]
fn fixtures_are_self_consistent() {
    for name in all_names() {
        let f = fixture(name);
        assert_eq!(f.name, name);
        assert_eq!(f.table.totals(), f.totals, "{name}");
        let s = graph_stats(&f.graph).unwrap();
        assert_eq!(s.n as usize, f.table.n, "{name}");
    }
}

#[test]
fn closed_forms_match_fixtures() {
    for name in [TABLE1, TABLE3[0], TABLE3[1]] {
        let f = fixture(name);
        let (t, _) = table_for_graph(&f.graph, None).unwrap();
        assert_eq!(t, f.table, "{name}");
    }
    let (_, source) = table_for_graph(&fixture(TABLE1).graph, None).unwrap();
    assert_eq!(source, FormulaSource::TreeOfCycles);
}

#[test]
fn oracle_matches_small_fixtures() {
    let cfg = FieldConfig::default();
    for name in INTRO.iter().chain(&TABLE3).chain(&TABLE4) {
        let f = fixture(name);
        let (_, t) = oracle_for_graph(&f.graph, &cfg, &OracleOptions::default()).unwrap();
        assert_eq!(t.diff(&f.table), vec![], "{name}");
    }
}

#[test]
fn rendered_table1_has_printed_rows() {
    let f = fixture(TABLE1);
    let text = f.table.render_text();
    let rows: Vec<Vec<String>> = text
        .lines()
        .filter(|l| !l.starts_with("--"))
        .map(|l| l.split_whitespace().filter(|t| *t != "|").map(String::from).collect())
        .collect();
    assert_eq!(rows[0], (0..=12).map(|i| i.to_string()).fold(vec!["-".to_string()], |mut v, s| {
        v.push(s);
        v
    }));
    assert_eq!(rows[1][0], "T");
    assert_eq!(rows[1][7], "9078");
    assert_eq!(rows[1][13], "8");
    assert_eq!(rows[2][1..], ["1"].iter().chain(&["-"; 12]).map(|s| s.to_string()).collect::<Vec<_>>()[..]);
    assert_eq!(rows[3][2], "75");
    assert_eq!(rows[4][1], "-");
    assert_eq!(rows[4][13], "3");
    assert_eq!(rows.len(), 5);
}

#[test]
fn fixture_tables_round_trip() {
    for name in all_names() {
        let t = fixture(name).table;
        assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
    }
}
