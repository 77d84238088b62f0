//! Explicit line arrangements over F_p realizing a graph curve.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{ArrangementError, GraphError};
use crate::field::{PrimeField, DEFAULT_PRIME};
use crate::graph::{validate_assumption, Graph};
use crate::linalg::{rank_mod_p, Matrix};

/// Odd multiplier used to derive retry sub-seeds.
const SEED_STEP: u64 = 0x9E37_79B9_7F4A_7C15;

/// Sample points per line that the oracle may ask for.
pub const MAX_SAMPLES_PER_LINE: u64 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldConfig {
    pub p: u64,
    pub seed: u64,
    pub max_retries: u32,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig {
            p: DEFAULT_PRIME,
            seed: 0,
            max_retries: 5,
        }
    }
}

impl FieldConfig {
    pub fn with_prime(p: u64) -> Self {
        FieldConfig { p, ..Self::default() }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Checks `p` and returns the field. `lines` bounds how many distinct
    /// parameter values sampling needs.
    pub fn field(&self, lines: usize) -> Result<PrimeField, ArrangementError> {
        let field = PrimeField::new(self.p)?;
        let min = 4 * MAX_SAMPLES_PER_LINE * lines.max(1) as u64;
        if self.p <= min {
            return Err(ArrangementError::PrimeTooSmall { p: self.p, min });
        }
        Ok(field)
    }

    /// Seed used for attempt number `attempt` (0-based).
    pub fn attempt_seed(&self, attempt: u32) -> u64 {
        self.seed.wrapping_add((attempt as u64).wrapping_mul(SEED_STEP))
    }
}

/// Lines in `P^n`, one per vertex, with one prescribed intersection point per
/// edge. Points are normalized so their first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineArrangement {
    pub p: u64,
    pub n: usize,
    /// Two points spanning each vertex's line.
    pub lines: Vec<[Vec<u64>; 2]>,
    /// Sorted edge list; `edge_points[k]` lies on both lines of `edges[k]`.
    pub edges: Vec<(usize, usize)>,
    pub edge_points: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct ArrangementFile {
    p: u64,
    n: usize,
    lines: Vec<[Vec<u64>; 2]>,
    edge_points: BTreeMap<String, Vec<u64>>,
}

impl LineArrangement {
    pub fn field(&self) -> Result<PrimeField, ArrangementError> {
        PrimeField::new(self.p)
    }

    pub fn edge_point(&self, u: usize, v: usize) -> Option<&[u64]> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(|k| self.edge_points[k].as_slice())
    }

    /// Edge points lying on the line of `v`, in edge order.
    pub fn points_on_line(&self, v: usize) -> Vec<&[u64]> {
        self.edges
            .iter()
            .zip(&self.edge_points)
            .filter(|((a, b), _)| *a == v || *b == v)
            .map(|(_, pt)| pt.as_slice())
            .collect()
    }

    pub fn to_json(&self) -> String {
        let file = ArrangementFile {
            p: self.p,
            n: self.n,
            lines: self.lines.clone(),
            edge_points: self
                .edges
                .iter()
                .zip(&self.edge_points)
                .map(|(&(u, v), pt)| (format!("{u}-{v}"), pt.clone()))
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("arrangement serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ArrangementError> {
        let file: ArrangementFile = serde_json::from_str(text).map_err(|e| ArrangementError::Malformed(e.to_string()))?;
        let mut pairs = Vec::new();
        for (key, pt) in file.edge_points {
            let parsed = key
                .split_once('-')
                .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)));
            let Some((a, b)) = parsed else {
                return Err(ArrangementError::Malformed(format!("bad edge key {key:?}")));
            };
            pairs.push(((a.min(b), a.max(b)), pt));
        }
        pairs.sort();
        let width = file.n + 1;
        let all_points = file.lines.iter().flatten().chain(pairs.iter().map(|(_, p)| p));
        for pt in all_points {
            if pt.len() != width || pt.iter().any(|&x| x >= file.p) {
                return Err(ArrangementError::Malformed(format!(
                    "point {pt:?} is not a vector of {width} residues mod {}",
                    file.p
                )));
            }
        }
        Ok(LineArrangement {
            p: file.p,
            n: file.n,
            lines: file.lines,
            edges: pairs.iter().map(|(e, _)| *e).collect(),
            edge_points: pairs.into_iter().map(|(_, p)| p).collect(),
        })
    }
}

/// Order in which every vertex has at most two earlier neighbors.
pub fn degeneracy_order(g: &Graph) -> Result<Vec<usize>, GraphError> {
    let d = g.vertex_count();
    let mut deg: Vec<usize> = (0..d).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; d];
    let mut reversed = Vec::with_capacity(d);
    for _ in 0..d {
        let v = (0..d)
            .filter(|&v| !removed[v] && deg[v] <= 2)
            .min_by_key(|&v| (deg[v], v))
            .ok_or(GraphError::NotTwoDegenerate)?;
        removed[v] = true;
        reversed.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    reversed.reverse();
    Ok(reversed)
}

/// Generic realization of `g` in `P^{d-g}`, retried with derived seeds until
/// [`verify_genericity`] passes.
pub fn build_arrangement(g: &Graph, cfg: &FieldConfig) -> Result<LineArrangement, ArrangementError> {
    let report = validate_assumption(g);
    if !report.passes() {
        return Err(ArrangementError::InvalidGraph(report.failures().join("; ")));
    }
    let field = cfg.field(g.vertex_count())?;
    let order = degeneracy_order(g)?;
    let attempts = cfg.max_retries.max(1);
    let mut last = String::new();
    for attempt in 0..attempts {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.attempt_seed(attempt));
        let arr = construct(g, &order, &field, &mut rng);
        let check = verify_genericity(&arr, g);
        if check.passes() {
            return Ok(arr);
        }
        last = check.failures.join("; ");
    }
    Err(ArrangementError::RetriesExhausted { attempts, reason: last })
}

fn random_point(field: &PrimeField, width: usize, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let p = field.modulus();
    loop {
        let mut v: Vec<u64> = (0..width).map(|_| rng.gen_range(0..p)).collect();
        if v.iter().any(|&x| x != 0) {
            field.normalize(&mut v);
            return v;
        }
    }
}

fn random_on_line(field: &PrimeField, a: &[u64], b: &[u64], rng: &mut ChaCha8Rng) -> Vec<u64> {
    let p = field.modulus();
    loop {
        let (s, t) = (rng.gen_range(0..p), rng.gen_range(0..p));
        let mut v: Vec<u64> = a.iter().zip(b).map(|(&x, &y)| field.add(field.mul(s, x), field.mul(t, y))).collect();
        if v.iter().any(|&x| x != 0) {
            field.normalize(&mut v);
            return v;
        }
    }
}

fn construct(g: &Graph, order: &[usize], field: &PrimeField, rng: &mut ChaCha8Rng) -> LineArrangement {
    let d = g.vertex_count();
    let n = d + d - 1 - g.edge_count();
    let width = n + 1;
    let mut pos = vec![0; d];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    let mut lines: Vec<Option<[Vec<u64>; 2]>> = vec![None; d];
    let mut points: BTreeMap<(usize, usize), Vec<u64>> = BTreeMap::new();
    for &v in order {
        let fixed: Vec<Vec<u64>> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| pos[w] < pos[v])
            .map(|&w| points[&(v.min(w), v.max(w))].clone())
            .collect();
        let pair = match fixed.len() {
            0 => [random_point(field, width, rng), random_point(field, width, rng)],
            1 => [fixed[0].clone(), random_point(field, width, rng)],
            _ => [fixed[0].clone(), fixed[1].clone()],
        };
        for &w in g.neighbors(v) {
            if pos[w] > pos[v] {
                let pt = random_on_line(field, &pair[0], &pair[1], rng);
                points.insert((v.min(w), v.max(w)), pt);
            }
        }
        lines[v] = Some(pair);
    }
    LineArrangement {
        p: field.modulus(),
        n,
        lines: lines.into_iter().map(|l| l.expect("every vertex placed")).collect(),
        edges: points.keys().copied().collect(),
        edge_points: points.into_values().collect(),
    }
}

/// Outcome of [`verify_genericity`]: one message per failed check.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GenericityReport {
    pub checks_run: usize,
    pub failures: Vec<String>,
}

impl GenericityReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks_run += 1;
        if !ok {
            self.failures.push(msg());
        }
    }
}

pub fn verify_genericity(arr: &LineArrangement, g: &Graph) -> GenericityReport {
    let mut report = GenericityReport::default();
    let field = match arr.field() {
        Ok(f) => f,
        Err(e) => {
            report.check(false, || e.to_string());
            return report;
        }
    };
    let width = arr.n + 1;
    let d = g.vertex_count();
    let shape_ok = arr.lines.len() == d
        && arr.edges == g.edges()
        && arr.edge_points.len() == arr.edges.len()
        && arr.lines.iter().flatten().chain(&arr.edge_points).all(|pt| pt.len() == width);
    report.check(shape_ok, || "arrangement shape does not match the graph".into());
    if !shape_ok {
        return report;
    }
    let rank = |pts: &[&Vec<u64>]| -> usize {
        let rows: Vec<Vec<u64>> = pts.iter().map(|p| p.to_vec()).collect();
        rank_mod_p(&Matrix::from_rows(&rows), &field)
    };
    for (v, [a, b]) in arr.lines.iter().enumerate() {
        report.check(rank(&[a, b]) == 2, || format!("degenerate line {v}"));
    }
    for (&(u, v), pt) in arr.edges.iter().zip(&arr.edge_points) {
        for w in [u, v] {
            let [a, b] = &arr.lines[w];
            report.check(rank(&[a, b, pt]) == 2, || format!("edge point {u}-{v} is off line {w}"));
        }
        for w in (0..d).filter(|&w| w != u && w != v) {
            let [a, b] = &arr.lines[w];
            report.check(rank(&[a, b, pt]) == 3, || {
                format!("unintended incidence: edge point {u}-{v} lies on line {w}")
            });
        }
    }
    for x in 0..arr.edge_points.len() {
        for y in x + 1..arr.edge_points.len() {
            report.check(rank(&[&arr.edge_points[x], &arr.edge_points[y]]) == 2, || {
                format!("duplicate point: edges {:?} and {:?}", arr.edges[x], arr.edges[y])
            });
        }
    }
    for u in 0..d {
        for v in u + 1..d {
            let [a, b] = &arr.lines[u];
            let [c, e] = &arr.lines[v];
            let r = rank(&[a, b, c, e]);
            if g.has_edge(u, v) {
                report.check(r == 3, || format!("unintended incidence: lines {u} and {v} meet in rank {r}, expected 3"));
            } else {
                report.check(r == 4, || format!("lines {u} and {v} are not disjoint"));
            }
        }
    }
    let all: Vec<&Vec<u64>> = arr.lines.iter().flatten().collect();
    report.check(rank(&all) == width, || format!("lines do not span P^{}", arr.n));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, FamilySpec};

    fn family(spec: FamilySpec) -> Graph {
        generate_family(&spec).unwrap()
    }

    #[test]
    fn orders_are_two_degenerate() {
        for spec in [
            FamilySpec::Path(6),
            FamilySpec::Cycle(6),
            FamilySpec::GluedChain { cycle_len: 4, k: 3 },
        ] {
            let g = family(spec);
            let order = degeneracy_order(&g).unwrap();
            let mut seen = vec![false; g.vertex_count()];
            for &v in &order {
                assert!(g.neighbors(v).iter().filter(|&&w| seen[w]).count() <= 2);
                seen[v] = true;
            }
        }
        let k4 = Graph::from_edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(degeneracy_order(&k4), Err(GraphError::NotTwoDegenerate));
    }

    #[test]
    fn builds_small_arrangements() {
        let p3 = family(FamilySpec::Path(3));
        let arr = build_arrangement(&p3, &FieldConfig::default()).unwrap();
        assert_eq!((arr.n, arr.lines.len(), arr.edge_points.len()), (3, 3, 2));
        let c4 = family(FamilySpec::Cycle(4));
        let arr = build_arrangement(&c4, &FieldConfig::default()).unwrap();
        assert_eq!(arr.n, 3);
        assert!(verify_genericity(&arr, &c4).passes());
    }

    #[test]
    fn deterministic_and_seed_sensitive() {
        let g = family(FamilySpec::GluedChain { cycle_len: 4, k: 3 });
        let a = build_arrangement(&g, &FieldConfig::default()).unwrap();
        let b = build_arrangement(&g, &FieldConfig::default()).unwrap();
        assert_eq!(a, b);
        let c = build_arrangement(&g, &FieldConfig::default().with_seed(9)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn detects_broken_arrangements() {
        let c4 = family(FamilySpec::Cycle(4));
        let good = build_arrangement(&c4, &FieldConfig::default()).unwrap();
        let mut dup = good.clone();
        dup.edge_points[1] = dup.edge_points[0].clone();
        let report = verify_genericity(&dup, &c4);
        assert!(report.failures.iter().any(|f| f.starts_with("duplicate point")), "{report:?}");

        // a triangle whose three edge points are collinear: all three lines coincide
        let tri = family(FamilySpec::Cycle(3));
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_point(&f, 3, &mut rng);
        let b = random_point(&f, 3, &mut rng);
        let pts: Vec<Vec<u64>> = (0..3).map(|_| random_on_line(&f, &a, &b, &mut rng)).collect();
        let bad = LineArrangement {
            p: DEFAULT_PRIME,
            n: 2,
            lines: vec![[pts[0].clone(), pts[1].clone()], [pts[0].clone(), pts[2].clone()], [pts[1].clone(), pts[2].clone()]],
            edges: tri.edges().to_vec(),
            edge_points: pts.clone(),
        };
        let report = verify_genericity(&bad, &tri);
        assert!(report.failures.iter().any(|f| f.starts_with("unintended incidence")), "{report:?}");
    }

    #[test]
    fn rejects_bad_configs() {
        let g = family(FamilySpec::Path(3));
        assert_eq!(
            build_arrangement(&g, &FieldConfig::with_prime(32001)),
            Err(ArrangementError::NotPrime(32001))
        );
        assert!(matches!(
            build_arrangement(&g, &FieldConfig::with_prime(53)),
            Err(ArrangementError::PrimeTooSmall { p: 53, .. })
        ));
        let k4 = Graph::from_edges(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(build_arrangement(&k4, &FieldConfig::default()), Err(ArrangementError::InvalidGraph(_))));
    }

    #[test]
    fn json_round_trip() {
        let g = family(FamilySpec::Cycle(5));
        let arr = build_arrangement(&g, &FieldConfig::default()).unwrap();
        let text = arr.to_json();
        assert!(text.contains("\"0-1\""));
        assert_eq!(LineArrangement::from_json(&text).unwrap(), arr);
        assert!(LineArrangement::from_json("{\"p\":7}").is_err());
    }
}
