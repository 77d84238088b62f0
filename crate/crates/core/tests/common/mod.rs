#![allow(dead_code)]

use std::path::PathBuf;

use graphcurve::{BettiTable, Graph};
use serde::Deserialize;

#[derive(Deserialize)]
struct Raw {
    name: String,
    graph: serde_json::Value,
    table: BettiTable,
    totals: Vec<u64>,
}

pub struct Fixture {
    pub name: String,
    pub graph: Graph,
    pub table: BettiTable,
    pub totals: Vec<u64>,
}

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn fixture(name: &str) -> Fixture {
    let text = std::fs::read_to_string(fixture_dir().join(format!("{name}.json"))).unwrap();
    let raw: Raw = serde_json::from_str(&text).unwrap();
    Fixture {
        name: raw.name,
        graph: Graph::parse(&raw.graph.to_string()).unwrap(),
        table: raw.table,
        totals: raw.totals,
    }
}

pub const INTRO: [&str; 3] = ["intro_two_triangles", "intro_ladder", "intro_pentagon_square"];
pub const TABLE3: [&str; 2] = ["table3_square_tail", "table3_pentagon_pendant"];
pub const TABLE4: [&str; 2] = ["table4_c4x3", "table4_c4x4"];
pub const TABLE1: &str = "table1_tree_of_cycles";

pub fn all_names() -> Vec<&'static str> {
    let mut v: Vec<&str> = INTRO.to_vec();
    v.push(TABLE1);
    v.extend(TABLE3);
    v.extend(TABLE4);
    v
}

/// `C(n, k)` by Pascal's rule, independent of the library's binomial.
pub fn pascal(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k as usize]
}
