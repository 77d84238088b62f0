//! Formula-vs-oracle comparison, graph enumeration and conjecture scans.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arrangement::FieldConfig;
use crate::error::HarnessError;
use crate::formula::{check_corollaries, k_polynomial_check, table_for_graph, CorollaryReport, FormulaSource};
use crate::graph::{
    bridges, canonical_form, decompose_tree_of_cycles, generate_family, girth_and_count, graph_stats, validate_assumption,
    CanonicalForm, FamilySpec, Girth, Graph,
};
use crate::oracle::{oracle_for_graph, OracleOptions};
use crate::table::{BettiTable, EntryDiff};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub graph_id: String,
    pub d: usize,
    pub m: usize,
    pub genus: usize,
    pub n: usize,
    pub source: Option<FormulaSource>,
    pub formula: Option<BettiTable>,
    pub oracle: BettiTable,
    /// Entries where `formula` (left) and `oracle` (right) differ.
    pub diffs: Vec<EntryDiff>,
    pub verdict: Verdict,
    pub corollaries: CorollaryReport,
    /// Alternating sums of the oracle table match the Hilbert series.
    pub euler_ok: bool,
}

/// Stable identifier derived from the isomorphism class.
pub fn graph_id(g: &Graph) -> String {
    let c = canonical_form(g);
    format!("d{}m{}-{:x}", g.vertex_count(), g.edge_count(), c.bits)
}

/// Relabels a canonical form back into a graph.
pub fn graph_from_canonical(c: &CanonicalForm) -> Graph {
    let d = c.vertex_count;
    let mut edges = Vec::new();
    let mut pos = 0;
    for i in 0..d {
        for j in i + 1..d {
            if c.bits >> pos & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Graph::new(d, &edges).expect("canonical bits encode a simple graph")
}

pub fn compare(g: &Graph, cfg: &FieldConfig) -> Result<ComparisonReport, HarnessError> {
    compare_with(&graph_id(g), g, cfg, &OracleOptions::default())
}

/// Runs the oracle and the matching closed form. Graphs of genus at least two
/// that are not trees of cycles are checked by rebuilding the quadratic
/// strand from the oracle's cubic strand.
pub fn compare_with(id: &str, g: &Graph, cfg: &FieldConfig, opts: &OracleOptions) -> Result<ComparisonReport, HarnessError> {
    let stats = graph_stats(g)?;
    let report = validate_assumption(g);
    if !report.passes() {
        return Err(HarnessError::Formula(crate::FormulaError::InvalidGraph(report.failures().join("; "))));
    }
    let (_, oracle) = oracle_for_graph(g, cfg, opts)?;
    let (formula, source) = match table_for_graph(g, None) {
        Ok((t, s)) => (t, s),
        Err(crate::FormulaError::CubicStrandUnknown { .. }) => table_for_graph(g, Some(&oracle.cubic))?,
        Err(e) => return Err(e.into()),
    };
    let diffs = formula.diff(&oracle);
    let verdict = if diffs.is_empty() { Verdict::Match } else { Verdict::Mismatch };
    let tree = decompose_tree_of_cycles(g).filter(|t| t.genus() >= 1);
    let corollaries = check_corollaries(&oracle, &stats, bridges(g).len(), girth_and_count(g), tree.as_ref());
    let euler_ok = k_polynomial_check(&oracle, g.vertex_count(), stats.g as usize).is_ok();
    Ok(ComparisonReport {
        graph_id: id.to_string(),
        d: g.vertex_count(),
        m: g.edge_count(),
        genus: stats.g as usize,
        n: stats.n as usize,
        source: Some(source),
        formula: Some(formula),
        oracle,
        diffs,
        verdict,
        corollaries,
        euler_ok,
    })
}

/// All connected graphs on `1..=d_max` vertices satisfying `keep`, one per
/// isomorphism class, ordered by vertex count and then canonical form.
///
/// `keep` must be inherited by some connected induced subgraph on one vertex
/// fewer (true for any property closed under deleting a non-cut vertex),
/// since level `d` is grown from level `d - 1` by adding one vertex.
pub fn enumerate_connected(d_max: usize, keep: &dyn Fn(&Graph) -> bool) -> Vec<Graph> {
    assert!(d_max <= 16, "enumeration supports at most 16 vertices");
    let mut out = Vec::new();
    if d_max == 0 {
        return out;
    }
    let single = Graph::new(1, &[]).expect("single vertex");
    if !keep(&single) {
        return out;
    }
    let mut level = vec![single];
    out.extend(level.iter().cloned());
    for d in 2..=d_max {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in &level {
            let open: Vec<usize> = (0..d - 1).filter(|&v| g.degree(v) < 3).collect();
            for mask in 1u32..1 << open.len() {
                if mask.count_ones() > 3 {
                    continue;
                }
                let mut edges = g.edges().to_vec();
                edges.extend(open.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &v)| (v, d - 1)));
                let h = Graph::new(d, &edges).expect("new vertex adds fresh edges");
                let c = canonical_form(&h);
                if next.contains_key(&c) {
                    continue;
                }
                if keep(&h) {
                    let relabeled = graph_from_canonical(&c);
                    next.insert(c, relabeled);
                }
            }
        }
        level = next.into_values().collect();
        if level.is_empty() {
            break;
        }
        out.extend(level.iter().cloned());
    }
    out
}

/// Valid graphs (connected, planar, simple, subcubic, `d >= 2g + 1` on
/// every connected induced subgraph) on `1..=d_max` vertices.
pub fn enumerate_graphs(d_max: usize) -> Vec<Graph> {
    enumerate_connected(d_max, &|g| validate_assumption(g).passes())
}

/// Valid graphs on exactly `d` vertices.
pub fn graphs_on(d: usize) -> Vec<Graph> {
    enumerate_graphs(d).into_iter().filter(|g| g.vertex_count() == d).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conj41 {
    /// `d = 2g + 1 + p` with `γ - 2 <= p`.
    pub applicable: bool,
    pub girth: Option<Girth>,
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conj42 {
    pub bridges: usize,
    pub value: u64,
    pub holds: bool,
    /// Genus at most one or a tree of cycles, where the statement is a theorem.
    pub proved_class: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conj43 {
    /// Isomorphic to `k` four-cycles glued in a chain along edges.
    pub applicable: bool,
    pub k: Option<usize>,
    /// `b_{2,4} = b_{1,2} - 1`.
    pub first: Option<bool>,
    /// `b_{i,i+1} = b_{i+2,i+4}` for `i >= 2`.
    pub holds_as_written: Option<bool>,
    /// `b_{i,i+1} = b_{i+1,i+3}` for `i >= 2`.
    pub holds_shifted: Option<bool>,
    /// `b_{k,k+2} = b_{k+1,k+3}^2 - 1`.
    pub square: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub graph_id: String,
    pub d: usize,
    pub genus: usize,
    pub n: usize,
    pub table: BettiTable,
    pub corollaries: CorollaryReport,
    pub conj41: Conj41,
    pub conj42: Conj42,
    pub conj43: Conj43,
}

impl ConjectureReport {
    /// A proved statement failed: a corollary, or Conjecture 4.1/4.2 on a
    /// class where they are theorems.
    pub fn proved_violation(&self) -> bool {
        !self.corollaries.all_hold()
            || (self.genus <= 1 && self.conj41.holds == Some(false))
            || (self.conj42.proved_class && !self.conj42.holds)
    }

    /// Some applicable conjecture (in any convention except the as-written
    /// symmetry, which is known to fail) does not hold.
    pub fn conjecture_violation(&self) -> bool {
        let c = &self.conj43;
        self.conj41.holds == Some(false)
            || !self.conj42.holds
            || [c.first, c.holds_shifted, c.square].contains(&Some(false))
    }
}

fn glued_square_count(g: &Graph) -> Option<usize> {
    let d = g.vertex_count();
    if d < 6 || !d.is_multiple_of(2) || g.edge_count() != 3 * (d / 2 - 1) + 1 {
        return None;
    }
    let k = d / 2 - 1;
    let chain = generate_family(&FamilySpec::GluedChain { cycle_len: 4, k }).ok()?;
    (canonical_form(&chain) == canonical_form(g)).then_some(k)
}

/// Checks the structural conjectures against a precomputed table.
pub fn conjecture_report(id: &str, g: &Graph, table: &BettiTable) -> Result<ConjectureReport, HarnessError> {
    let stats = graph_stats(g)?;
    let d = g.vertex_count();
    let genus = stats.g as usize;
    let n = table.n;
    let girth = girth_and_count(g);
    let bridge_list = bridges(g);
    let tree = decompose_tree_of_cycles(g);
    let tree_with_cycles = tree.clone().filter(|t| t.genus() >= 1);
    let corollaries = check_corollaries(table, &stats, bridge_list.len(), girth, tree_with_cycles.as_ref());

    let conj41 = match girth {
        Some(gi) if d > 2 * genus && gi.length >= 3 && gi.length - 2 < d - 2 * genus => Conj41 {
            applicable: true,
            girth,
            holds: Some(table.get(gi.length - 2, gi.length) == gi.count as u64),
        },
        _ => Conj41 {
            applicable: false,
            girth,
            holds: None,
        },
    };

    let value = if n >= 1 { table.get(n - 1, n) } else { 0 };
    let conj42 = Conj42 {
        bridges: bridge_list.len(),
        value,
        holds: value == bridge_list.len() as u64,
        proved_class: genus <= 1 || tree.is_some(),
    };

    let conj43 = match glued_square_count(g) {
        Some(k) => {
            let b = |i: usize, j: usize| table.get(i, j);
            let top = n + 2;
            Conj43 {
                applicable: true,
                k: Some(k),
                first: Some(b(2, 4) + 1 == b(1, 2)),
                holds_as_written: Some((2..=top).all(|i| b(i, i + 1) == b(i + 2, i + 4))),
                holds_shifted: Some((2..=top).all(|i| b(i, i + 1) == b(i + 1, i + 3))),
                square: Some(b(k, k + 2) + 1 == b(k + 1, k + 3).pow(2)),
            }
        }
        None => Conj43 {
            applicable: false,
            k: None,
            first: None,
            holds_as_written: None,
            holds_shifted: None,
            square: None,
        },
    };

    Ok(ConjectureReport {
        graph_id: id.to_string(),
        d,
        genus,
        n,
        table: table.clone(),
        corollaries,
        conj41,
        conj42,
        conj43,
    })
}

/// Oracle run plus conjecture checks for each supplied graph. Work is spread
/// over threads; output is sorted by graph id.
pub fn scan_graphs(graphs: &[(String, Graph)], cfg: &FieldConfig, opts: &OracleOptions) -> Result<Vec<ConjectureReport>, HarnessError> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(graphs.len().max(1));
    let chunk = graphs.len().div_ceil(workers).max(1);
    let results: Vec<Result<Vec<ConjectureReport>, HarnessError>> = std::thread::scope(|s| {
        let handles: Vec<_> = graphs
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(|(id, g)| {
                            let (_, t) = oracle_for_graph(g, cfg, opts)?;
                            conjecture_report(id, g, &t)
                        })
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("scan worker panicked")).collect()
    });
    let mut out = Vec::with_capacity(graphs.len());
    for r in results {
        out.extend(r?);
    }
    out.sort_by(|a, b| a.graph_id.cmp(&b.graph_id));
    Ok(out)
}

/// Conjecture scan over every valid graph with at most `d_max` vertices.
pub fn scan_conjectures(d_max: usize, cfg: &FieldConfig) -> Result<Vec<ConjectureReport>, HarnessError> {
    let graphs: Vec<(String, Graph)> = enumerate_graphs(d_max).into_iter().map(|g| (graph_id(&g), g)).collect();
    scan_graphs(&graphs, cfg, &OracleOptions::default())
}

/// One JSON object per line.
pub fn json_lines<T: Serialize>(reports: &[T]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("reports serialize"));
        out.push('\n');
    }
    out
}

fn tally(label: &str, values: impl Iterator<Item = Option<bool>>) -> String {
    let (mut ok, mut bad, mut na) = (0, 0, 0);
    for v in values {
        match v {
            Some(true) => ok += 1,
            Some(false) => bad += 1,
            None => na += 1,
        }
    }
    format!("{label:<28} {ok:>6} {bad:>6} {na:>6}\n")
}

pub fn conjecture_summary(reports: &[ConjectureReport]) -> String {
    let mut out = format!("{} graphs\n{:<28} {:>6} {:>6} {:>6}\n", reports.len(), "statement", "hold", "fail", "n/a");
    let r = reports;
    out += &tally("cor: b(n-1,n+1) = g", r.iter().map(|x| Some(x.corollaries.last_cubic_is_genus)));
    out += &tally("cor: girth cycles (ToC)", r.iter().map(|x| x.corollaries.girth_cycles));
    out += &tally("cor: bridges (ToC)", r.iter().map(|x| x.corollaries.bridges));
    out += &tally("conj 4.1 genus <= 1", r.iter().map(|x| if x.genus <= 1 { x.conj41.holds } else { None }));
    out += &tally("conj 4.1 genus >= 2", r.iter().map(|x| if x.genus >= 2 { x.conj41.holds } else { None }));
    out += &tally("conj 4.2 proved classes", r.iter().map(|x| x.conj42.proved_class.then_some(x.conj42.holds)));
    out += &tally("conj 4.2 other", r.iter().map(|x| (!x.conj42.proved_class).then_some(x.conj42.holds)));
    out += &tally("conj 4.3 b(2,4)=b(1,2)-1", r.iter().map(|x| x.conj43.first));
    out += &tally("conj 4.3 symmetry (written)", r.iter().map(|x| x.conj43.holds_as_written));
    out += &tally("conj 4.3 symmetry (shifted)", r.iter().map(|x| x.conj43.holds_shifted));
    out += &tally("conj 4.3 square identity", r.iter().map(|x| x.conj43.square));
    for x in r.iter().filter(|x| x.proved_violation() || x.conjecture_violation()) {
        let _ = writeln!(out, "COUNTEREXAMPLE {} (genus {}): {}", x.graph_id, x.genus, describe(x));
    }
    out
}

fn describe(x: &ConjectureReport) -> String {
    let mut parts = Vec::new();
    if !x.corollaries.all_hold() {
        parts.push(format!("corollaries {:?}", x.corollaries));
    }
    if x.conj41.holds == Some(false) {
        parts.push("conj 4.1".to_string());
    }
    if !x.conj42.holds {
        parts.push(format!("conj 4.2 (b = {}, bridges = {})", x.conj42.value, x.conj42.bridges));
    }
    let c = &x.conj43;
    if [c.first, c.holds_shifted, c.square].contains(&Some(false)) {
        parts.push("conj 4.3".to_string());
    }
    parts.join(", ")
}

pub fn comparison_summary(reports: &[ComparisonReport]) -> String {
    let mut out = format!("{:<24} {:>3} {:>3} {:>3}  {:<13} {}\n", "graph", "d", "g", "n", "source", "verdict");
    for r in reports {
        let source = r.source.map_or("-".to_string(), |s| format!("{s:?}"));
        let verdict = match r.verdict {
            Verdict::Match => "match",
            Verdict::Mismatch => "MISMATCH",
        };
        let _ = writeln!(out, "{:<24} {:>3} {:>3} {:>3}  {:<13} {}", r.graph_id, r.d, r.genus, r.n, source, verdict);
    }
    let bad = reports.iter().filter(|r| r.verdict == Verdict::Mismatch).count();
    let _ = writeln!(out, "{} compared, {} mismatched", reports.len(), bad);
    out
}
