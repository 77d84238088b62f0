//! Closed-form Betti tables of graph curves and the rules for composing them.
//!
//! Strand vectors are indexed from homological degree 1; a table for ambient
//! dimension `n` stores `n` entries per strand (the last one is always zero
//! for a valid graph curve).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::FormulaError;
use crate::graph::{decompose_tree_of_cycles, strip_leaves, validate_assumption, Girth, Graph, GraphStats, TreeOfCycles};
use crate::table::{BettiTable, Strand};

/// `C(n, k)`, zero whenever `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as i128 / (t + 1) as i128;
    }
    acc
}

/// The part of `b_{i,i+1}` shared by every theorem: the value for a curve
/// of genus `g` in `P^n` before the cubic correction.
fn quad_base(n: i64, g: i64, i: i64) -> i128 {
    n as i128 * binomial(n - 1, i) - g as i128 * binomial(n - 1, i - 1) - binomial(n, i + 1)
}

fn to_strand(values: Vec<i128>, n: usize, g: usize) -> Result<Strand, FormulaError> {
    values
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            u64::try_from(v).map_err(|_| FormulaError::Inconsistent {
                i: k + 1,
                j: k + 2,
                value: v,
                n,
                g,
            })
        })
        .collect::<Result<Vec<u64>, _>>()
        .map(Strand)
}

fn cubic_strand(values: Vec<i128>, n: usize, g: usize) -> Result<Strand, FormulaError> {
    values
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            u64::try_from(v).map_err(|_| FormulaError::Inconsistent {
                i: k + 1,
                j: k + 3,
                value: v,
                n,
                g,
            })
        })
        .collect::<Result<Vec<u64>, _>>()
        .map(Strand)
}

/// Path on `n` vertices, spanning `P^n`.
pub fn path_table(n: usize) -> Result<BettiTable, FormulaError> {
    if n < 2 {
        return Err(FormulaError::InvalidArgument(format!("path needs n >= 2, got {n}")));
    }
    genus0_table(n)
}

/// Any genus-zero graph curve in `P^n`; only degree and genus matter.
pub fn genus0_table(n: usize) -> Result<BettiTable, FormulaError> {
    if n < 1 {
        return Err(FormulaError::InvalidArgument("genus zero needs n >= 1".into()));
    }
    let ni = n as i64;
    let quad = (1..=ni).map(|i| quad_base(ni, 0, i)).collect();
    Ok(BettiTable::new(n, to_strand(quad, n, 0)?, Strand::zeros(n)))
}

/// Cycle on `n_plus_1` vertices, spanning `P^n`.
pub fn cycle_table(n_plus_1: usize) -> Result<BettiTable, FormulaError> {
    if n_plus_1 < 3 {
        return Err(FormulaError::InvalidArgument(format!("cycle needs at least 3 vertices, got {n_plus_1}")));
    }
    let n = n_plus_1 - 1;
    let ni = n as i64;
    let quad = (1..=ni).map(|i| if i < ni { quad_base(ni, 1, i) } else { 0 }).collect();
    let mut cubic = Strand::zeros(n);
    cubic.0[n - 2] = 1;
    Ok(BettiTable::new(n, to_strand(quad, n, 1)?, cubic))
}

/// Quadratic strand implied by a cubic strand for a curve of genus `g` in
/// `P^n`. The cubic entry feeding `b_{1,2}` is taken to be zero.
pub fn quadratic_from_cubic(n: usize, g: usize, cubic: &Strand) -> Result<Strand, FormulaError> {
    if n < 1 {
        return Err(FormulaError::InvalidArgument("n must be at least 1".into()));
    }
    let (ni, gi) = (n as i64, g as i64);
    let quad = (1..=ni).map(|i| quad_base(ni, gi, i) + cubic.at(i - 1) as i128).collect();
    to_strand(quad, n, g)
}

/// Strand of the same curve viewed in a space `extra` dimensions larger:
/// the binomial transform `out_i = sum_t C(extra, t) in_{i-t}`.
pub fn pad_ambient(strand: &Strand, extra: usize) -> Strand {
    let len = strand.len() + extra;
    let out = (1..=len as i64)
        .map(|i| {
            (0..=extra as i64)
                .map(|t| binomial(extra as i64, t) as u64 * strand.at(i - t))
                .sum()
        })
        .collect();
    Strand(out)
}

/// Cubic strand after `d` successive pendant additions.
pub fn extend_cubic(base: &Strand, d: usize) -> Result<Strand, FormulaError> {
    if d == 0 {
        return Err(FormulaError::InvalidArgument("extension count must be at least 1".into()));
    }
    Ok(pad_ambient(base, d))
}

/// Cubic strand of the union of two curves meeting in a single reduced
/// point, spanning `P^n1` and `P^n2`, inside `P^n` with `n = n1 + n2`.
pub fn union_cubic(c1: &Strand, n1: usize, c2: &Strand, n2: usize, n: usize) -> Result<Strand, FormulaError> {
    if n != n1 + n2 {
        return Err(FormulaError::InvalidArgument(format!("one-point union needs n = n1 + n2, got {n} != {n1} + {n2}")));
    }
    let (Some(c1), Some(c2)) = (c1.resized(n1), c2.resized(n2)) else {
        return Err(FormulaError::InvalidArgument("strand support exceeds its ambient dimension".into()));
    };
    let a = pad_ambient(&c1, n - n1);
    let b = pad_ambient(&c2, n - n2);
    Ok(Strand(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect()))
}

/// Pendant extension of a cycle: `C_{r+1}` with `d` degree-one additions,
/// spanning `P^{r+d}`.
pub fn genus1_table(r: usize, d: usize) -> Result<BettiTable, FormulaError> {
    if r < 2 {
        return Err(FormulaError::InvalidArgument(format!("cycle length r+1 must be at least 3, got {}", r + 1)));
    }
    let n = r + d;
    let (ni, ri, di) = (n as i64, r as i64, d as i64);
    let quad = (1..=ni).map(|i| quad_base(ni, 1, i) + binomial(di, i - ri)).collect();
    let cubic = (1..=ni).map(|i| binomial(di, i - ri + 1)).collect();
    Ok(BettiTable::new(n, to_strand(quad, n, 1)?, cubic_strand(cubic, n, 1)?))
}

/// Tree of cycles in `P^n` with `cycles[j]` cycles of length `j`.
pub fn tree_of_cycles_table(n: usize, cycles: &BTreeMap<usize, usize>) -> Result<BettiTable, FormulaError> {
    if let Some(&j) = cycles.keys().find(|&&j| j < 3) {
        return Err(FormulaError::InvalidArgument(format!("cycle length {j} < 3")));
    }
    let g: usize = cycles.values().sum();
    let span: usize = cycles.iter().map(|(&j, &k)| k * (j - 1)).sum();
    if n < span.max(1) {
        return Err(FormulaError::InvalidArgument(format!("cycles of total span {span} do not fit in P^{n}")));
    }
    let ni = n as i64;
    let cubic_at = |i: i64| -> i128 {
        cycles
            .iter()
            .map(|(&j, &k)| k as i128 * binomial(ni - j as i64 + 1, i - j as i64 + 2))
            .sum()
    };
    let quad = (1..=ni).map(|i| quad_base(ni, g as i64, i) + cubic_at(i - 1)).collect();
    let cubic = (1..=ni).map(cubic_at).collect();
    Ok(BettiTable::new(n, to_strand(quad, n, g)?, cubic_strand(cubic, n, g)?))
}

/// Which closed form produced a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormulaSource {
    GenusZero,
    GenusOne,
    TreeOfCycles,
    /// Quadratic strand reconstructed from a supplied cubic strand.
    FromCubic,
}

/// Closed-form table for a valid graph; graphs with no closed form need a
/// cubic strand (typically from the oracle).
pub fn table_for_graph(g: &Graph, cubic_hint: Option<&Strand>) -> Result<(BettiTable, FormulaSource), FormulaError> {
    let report = validate_assumption(g);
    if !report.passes() {
        return Err(FormulaError::InvalidGraph(report.failures().join("; ")));
    }
    let d = g.vertex_count();
    let genus = g.edge_count() + 1 - d;
    let n = d - genus;
    match genus {
        0 => Ok((genus0_table(n)?, FormulaSource::GenusZero)),
        1 => {
            let (core, removed) = strip_leaves(g);
            Ok((genus1_table(core.len() - 1, removed)?, FormulaSource::GenusOne))
        }
        _ => {
            if let Some(t) = decompose_tree_of_cycles(g) {
                return Ok((tree_of_cycles_table(n, &t.cycle_lengths)?, FormulaSource::TreeOfCycles));
            }
            let Some(cubic) = cubic_hint else {
                return Err(FormulaError::CubicStrandUnknown { genus });
            };
            let cubic = cubic
                .resized(n)
                .ok_or_else(|| FormulaError::InvalidArgument(format!("cubic strand longer than n = {n}")))?;
            let quad = quadratic_from_cubic(n, genus, &cubic)?;
            Ok((BettiTable::new(n, quad, cubic), FormulaSource::FromCubic))
        }
    }
}

/// Largest `p` with `b_{i,i+2} = 0` for `1 <= i <= p`: the ideal is cut out
/// by quadrics with linear syzygies for `p - 1` further steps.
pub fn n2p_level(t: &BettiTable) -> usize {
    t.cubic.0.iter().take_while(|&&v| v == 0).count().min(t.n)
}

/// Structural identities checked on a table. `None` means the statement
/// does not apply to this graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    /// `b_{n-1,n+1} = g`.
    pub last_cubic_is_genus: bool,
    /// `b_{γ-2,γ}` equals the number of girth cycles (trees of cycles).
    pub girth_cycles: Option<bool>,
    /// `b_{n-1,n}` equals the number of bridges (trees of cycles).
    pub bridges: Option<bool>,
}

impl CorollaryReport {
    pub fn all_hold(&self) -> bool {
        self.last_cubic_is_genus && self.girth_cycles != Some(false) && self.bridges != Some(false)
    }
}

pub fn check_corollaries(
    t: &BettiTable,
    stats: &GraphStats,
    bridge_count: usize,
    girth: Option<Girth>,
    tree: Option<&TreeOfCycles>,
) -> CorollaryReport {
    let n = t.n;
    let last_cubic_is_genus = n >= 2 && t.get(n - 1, n + 1) as i64 == stats.g || n < 2 && stats.g == 0;
    let (girth_cycles, bridges) = match tree {
        Some(_) => (
            girth.map(|gi| gi.length >= 3 && t.get(gi.length - 2, gi.length) == gi.count as u64),
            Some(n >= 1 && t.get(n - 1, n) == bridge_count as u64),
        ),
        None => (None, None),
    };
    CorollaryReport {
        last_cubic_is_genus,
        girth_cycles,
        bridges,
    }
}

/// Coefficient mismatch `(degree, from table, from Hilbert function)`.
pub type KPolyMismatch = (usize, i128, i128);

/// Compares the alternating sum `sum (-1)^i b_{i,j} t^j` with
/// `H(t) (1-t)^{n+1}`, where `H` is the Hilbert series `1 + sum (D j + 1 - g) t^j`
/// of a non-special ACM curve of degree `D` and genus `g`.
pub fn k_polynomial_check(t: &BettiTable, degree: usize, genus: usize) -> Result<(), Vec<KPolyMismatch>> {
    let n = t.n as i64;
    let top = t.n + 3;
    let hilbert = |j: i64| -> i128 {
        if j == 0 {
            1
        } else {
            (degree as i64 * j + 1 - genus as i64) as i128
        }
    };
    let mut bad = Vec::new();
    for j in 0..=top {
        let expected: i128 = (0..=j as i64)
            .map(|s| {
                let sign = if s % 2 == 0 { 1 } else { -1 };
                sign * binomial(n + 1, s) * hilbert(j as i64 - s)
            })
            .sum();
        let actual: i128 = (0..=j)
            .map(|i| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                sign * t.get(i, j) as i128
            })
            .sum();
        if expected != actual {
            bad.push((j, actual, expected));
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u64]) -> Strand {
        Strand(v.to_vec())
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, -1), 0);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(40, 20), 137846528820);
    }

    #[test]
    fn paths_and_cycles() {
        assert_eq!(path_table(3).unwrap().quad, s(&[3, 2, 0]));
        assert_eq!(path_table(2).unwrap().quad, s(&[1, 0]));
        assert_eq!(path_table(5).unwrap().quad.at(1), 10);
        assert!(path_table(1).is_err());
        let c3 = cycle_table(3).unwrap();
        assert_eq!((c3.quad.clone(), c3.cubic.clone()), (s(&[0, 0]), s(&[1, 0])));
        let c4 = cycle_table(4).unwrap();
        assert_eq!((c4.quad.clone(), c4.cubic.clone()), (s(&[2, 0, 0]), s(&[0, 1, 0])));
        let c6 = cycle_table(6).unwrap();
        assert_eq!((c6.get(1, 2), c6.get(4, 6)), (9, 1));
        assert!(cycle_table(2).is_err());
        assert!(genus0_table(1).unwrap().quad.is_zero());
        assert_eq!(genus0_table(4).unwrap().quad.at(1), 6);
    }

    #[test]
    fn quadratic_strand_reconstruction() {
        assert_eq!(quadratic_from_cubic(5, 2, &s(&[2, 6, 6, 2, 0])).unwrap(), s(&[8, 14, 9, 2, 0]));
        assert_eq!(quadratic_from_cubic(5, 2, &s(&[0, 3, 5, 2, 0])).unwrap(), s(&[8, 12, 6, 1, 0]));
        assert_eq!(quadratic_from_cubic(6, 0, &Strand::zeros(6)).unwrap(), path_table(6).unwrap().quad);
        let err = quadratic_from_cubic(5, 2, &Strand::zeros(5)).unwrap_err();
        assert!(matches!(err, FormulaError::Inconsistent { i: 4, .. }), "{err}");
    }

    #[test]
    fn padding_and_unions() {
        assert_eq!(pad_ambient(&s(&[4, 5]), 0), s(&[4, 5]));
        assert_eq!(pad_ambient(&s(&[1, 2, 3]), 1), s(&[1, 3, 5, 3]));
        assert_eq!(pad_ambient(&s(&[0, 1, 0]), 2), s(&[0, 1, 2, 1, 0]));
        assert_eq!(extend_cubic(&s(&[0, 0, 1, 0]), 1).unwrap(), s(&[0, 0, 1, 1, 0]));
        assert!(extend_cubic(&s(&[1]), 0).is_err());
        // two triangles through a shared point, then a pendant line
        let tri = cycle_table(3).unwrap().cubic;
        let two = union_cubic(&tri, 2, &tri, 2, 4).unwrap();
        assert_eq!(extend_cubic(&two, 1).unwrap(), s(&[2, 6, 6, 2, 0]));
        assert!(union_cubic(&tri, 2, &tri, 2, 5).is_err());
        let line = Strand::zeros(1);
        assert_eq!(union_cubic(&tri, 2, &line, 1, 3).unwrap(), pad_ambient(&tri, 1));
    }

    #[test]
    fn genus_one() {
        let left = genus1_table(3, 2).unwrap();
        assert_eq!(left.quad, s(&[9, 16, 10, 2, 0]));
        assert_eq!(left.cubic, s(&[0, 1, 2, 1, 0]));
        let right = genus1_table(4, 1).unwrap();
        assert_eq!(right.quad, s(&[9, 16, 9, 1, 0]));
        assert_eq!(right.cubic, s(&[0, 0, 1, 1, 0]));
        for r in 2..8 {
            assert_eq!(genus1_table(r, 0).unwrap(), cycle_table(r + 1).unwrap());
        }
    }

    #[test]
    fn trees_of_cycles() {
        let t = tree_of_cycles_table(5, &BTreeMap::from([(3, 2)])).unwrap();
        assert_eq!(t.quad, s(&[8, 14, 9, 2, 0]));
        assert_eq!(t.cubic, s(&[2, 6, 6, 2, 0]));
        for j in 3..9 {
            assert_eq!(tree_of_cycles_table(j - 1, &BTreeMap::from([(j, 1)])).unwrap(), cycle_table(j).unwrap());
        }
        assert!(tree_of_cycles_table(3, &BTreeMap::from([(3, 2)])).is_err());
    }

    #[test]
    fn levels() {
        assert_eq!(n2p_level(&BettiTable::new(5, s(&[8, 12, 6, 1, 0]), s(&[0, 3, 5, 2, 0]))), 1);
        assert_eq!(n2p_level(&BettiTable::new(5, s(&[8, 14, 9, 2, 0]), s(&[2, 6, 6, 2, 0]))), 0);
        assert_eq!(n2p_level(&genus0_table(6).unwrap()), 6);
    }

    #[test]
    fn k_polynomial() {
        assert!(k_polynomial_check(&genus1_table(3, 2).unwrap(), 6, 1).is_ok());
        assert!(k_polynomial_check(&path_table(4).unwrap(), 4, 0).is_ok());
        let mut wrong = genus1_table(3, 2).unwrap();
        wrong.quad.0[1] += 1;
        assert!(k_polynomial_check(&wrong, 6, 1).is_err());
    }
}
