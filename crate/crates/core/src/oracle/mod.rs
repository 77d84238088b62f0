//! Exact Betti numbers of a line arrangement's coordinate ring over F_p.
//!
//! Two routes compute the same numbers. [`Method::Direct`] takes homology of
//! Koszul strands of `R` itself; [`Method::Reduced`] first cuts down by two
//! generic linear forms (see [`reduced`]), which shrinks the matrices by
//! orders of magnitude and is what makes `n` in the low teens tractable.

mod koszul;
mod model;
mod reduced;
mod subsets;

use serde::{Deserialize, Serialize};

pub use koszul::{strand_betti, KoszulComplex, StrandResult, StrandShape};
pub use model::{build_model, EvaluationModel};

use crate::arrangement::{build_arrangement, FieldConfig, LineArrangement};
use crate::error::OracleError;
use crate::graph::Graph;
use crate::table::{BettiTable, Strand};

/// Largest strand matrix (rows times columns) that [`Method::Auto`] still
/// sends down the direct route.
pub const AUTO_DIRECT_LIMIT: usize = 3_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum Method {
    Direct,
    Reduced,
    #[default]
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOptions {
    pub method: Method,
    /// Also check `b_{i,i+3} = 0` and `b_{n,*} = 0` (direct route only; the
    /// reduced route certifies regularity through `A_3 = 0`).
    pub check_regularity: bool,
    /// Seed for the linear forms of the reduced route.
    pub seed: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            method: Method::Auto,
            check_regularity: false,
            seed: 0,
        }
    }
}

/// Betti table of the arrangement's coordinate ring, choosing the route
/// automatically.
pub fn betti_table_oracle(arr: &LineArrangement, check_regularity: bool) -> Result<BettiTable, OracleError> {
    oracle_table(
        arr,
        &OracleOptions {
            check_regularity,
            ..OracleOptions::default()
        },
    )
}

pub fn oracle_table(arr: &LineArrangement, opts: &OracleOptions) -> Result<BettiTable, OracleError> {
    let method = resolve_method(arr, opts);
    let direct = method == Method::Direct;
    let max_deg = if direct && opts.check_regularity { 4 } else { 3 };
    let model = build_model(arr, max_deg)?;
    let table = if direct {
        direct_table(&model, opts.check_regularity)?
    } else {
        reduced::ArtinianReduction::new(&model, opts.seed)?.table(model.n)?
    };
    Ok(table)
}

/// Route that [`Method::Auto`] picks for this arrangement.
pub fn resolve_method(arr: &LineArrangement, opts: &OracleOptions) -> Method {
    match opts.method {
        Method::Auto => {
            let d = arr.lines.len();
            let g = (arr.edges.len() + 1).saturating_sub(d);
            let dims = |j: usize| (d * j + 1).saturating_sub(g);
            let largest = largest_direct_matrix(arr.n, &dims, if opts.check_regularity { 3 } else { 2 });
            if largest <= AUTO_DIRECT_LIMIT {
                Method::Direct
            } else {
                Method::Reduced
            }
        }
        m => m,
    }
}

fn largest_direct_matrix(n: usize, dims: &dyn Fn(usize) -> usize, top: usize) -> usize {
    let v = n + 1;
    let c = |k: usize| crate::formula::binomial(v as i64, k as i64) as usize;
    (1..=v)
        .flat_map(|i| (0..=top).map(move |a| (i, a)))
        .map(|(i, a)| c(i) * dims(a) * c(i - 1) * dims(a + 1))
        .max()
        .unwrap_or(0)
}

fn direct_table(model: &EvaluationModel, check_regularity: bool) -> Result<BettiTable, OracleError> {
    let n = model.n;
    let mut complex = KoszulComplex::new(model);
    let mut quad = Strand::zeros(n);
    let mut cubic = Strand::zeros(n);
    for i in 1..=n {
        quad.0[i - 1] = complex.strand_betti(i, i + 1)?.betti as u64;
        cubic.0[i - 1] = complex.strand_betti(i, i + 2)?.betti as u64;
        if check_regularity {
            let b = complex.strand_betti(i, i + 3)?.betti;
            if b != 0 {
                return Err(OracleError::Regularity { i, j: i + 3, value: b as u64 });
            }
        }
    }
    if check_regularity {
        for (j, v) in [(n + 1, quad.at(n as i64)), (n + 2, cubic.at(n as i64))] {
            if v != 0 {
                return Err(OracleError::Regularity { i: n, j, value: v });
            }
        }
    }
    Ok(BettiTable::new(n, quad, cubic))
}

/// Matrix shapes of every direct strand map, one per `(i, a)`.
pub fn strand_shapes(model: &EvaluationModel) -> Vec<StrandShape> {
    let complex = KoszulComplex::new(model);
    (1..=model.n + 1)
        .flat_map(|i| (0..model.max_deg).map(move |a| (i, a)))
        .map(|(i, a)| complex.shape(i, a))
        .collect()
}

/// `dim R_j` for `j = 0..=max_deg`, as realized by the model.
pub fn hilbert_values(model: &EvaluationModel) -> Vec<usize> {
    (0..=model.max_deg).map(|j| model.dim(j)).collect()
}

/// Builds an arrangement and runs the oracle, rebuilding with the next
/// derived seed when the model reports a genericity failure.
pub fn oracle_for_graph(g: &Graph, cfg: &FieldConfig, opts: &OracleOptions) -> Result<(LineArrangement, BettiTable), OracleError> {
    let attempts = cfg.max_retries.max(1);
    let mut last = None;
    for attempt in 0..attempts {
        let sub = FieldConfig {
            seed: cfg.attempt_seed(attempt),
            ..*cfg
        };
        let arr = build_arrangement(g, &sub)?;
        match oracle_table(&arr, opts) {
            Ok(t) => return Ok((arr, t)),
            Err(e @ OracleError::Genericity(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Oracle tables at two primes; they should agree for any graph curve.
pub fn two_prime_tables(g: &Graph, cfg: &FieldConfig, second_prime: u64, opts: &OracleOptions) -> Result<(BettiTable, BettiTable), OracleError> {
    let (_, a) = oracle_for_graph(g, cfg, opts)?;
    let (_, b) = oracle_for_graph(g, &FieldConfig { p: second_prime, ..*cfg }, opts)?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula;
    use crate::graph::{generate_family, FamilySpec};

    fn arrangement(spec: FamilySpec) -> (Graph, LineArrangement) {
        let g = generate_family(&spec).unwrap();
        let arr = build_arrangement(&g, &FieldConfig::default()).unwrap();
        (g, arr)
    }

    fn with(method: Method) -> OracleOptions {
        OracleOptions {
            method,
            ..OracleOptions::default()
        }
    }

    #[test]
    fn hilbert_function_of_models() {
        let (_, arr) = arrangement(FamilySpec::Path(1));
        let m = build_model(&arr, 4).unwrap();
        assert_eq!(hilbert_values(&m), vec![1, 2, 3, 4, 5]);
        let (_, arr) = arrangement(FamilySpec::Path(3));
        let m = build_model(&arr, 3).unwrap();
        assert_eq!(hilbert_values(&m), vec![1, 4, 7, 10]);
    }

    #[test]
    fn plane_cubic() {
        let (_, arr) = arrangement(FamilySpec::Cycle(3));
        let m = build_model(&arr, 3).unwrap();
        assert_eq!(strand_betti(&m, 1, 3).unwrap().betti, 1);
        assert_eq!(strand_betti(&m, 1, 2).unwrap().betti, 0);
        for method in [Method::Direct, Method::Reduced] {
            assert_eq!(oracle_table(&arr, &with(method)).unwrap(), formula::cycle_table(3).unwrap());
        }
    }

    #[test]
    fn routes_agree_on_small_curves() {
        for spec in [
            FamilySpec::Path(4),
            FamilySpec::Cycle(5),
            FamilySpec::GluedChain { cycle_len: 4, k: 2 },
            FamilySpec::GluedChain { cycle_len: 5, k: 2 },
        ] {
            let (_, arr) = arrangement(spec.clone());
            let direct = oracle_table(&arr, &with(Method::Direct)).unwrap();
            let reduced = oracle_table(&arr, &with(Method::Reduced)).unwrap();
            assert_eq!(direct, reduced, "{spec:?}");
        }
    }

    #[test]
    fn regularity_check_runs() {
        let (_, arr) = arrangement(FamilySpec::Cycle(4));
        let t = oracle_table(
            &arr,
            &OracleOptions {
                method: Method::Direct,
                check_regularity: true,
                seed: 0,
            },
        )
        .unwrap();
        assert_eq!(t, formula::cycle_table(4).unwrap());
    }

    #[test]
    fn shapes_listed() {
        let (_, arr) = arrangement(FamilySpec::Path(3));
        let m = build_model(&arr, 3).unwrap();
        let shapes = strand_shapes(&m);
        assert_eq!(shapes.len(), 4 * 3);
        assert!(shapes.contains(&StrandShape { i: 2, a: 1, rows: 6 * 4, cols: 4 * 7 }));
    }
}
