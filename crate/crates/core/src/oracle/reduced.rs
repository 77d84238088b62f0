//! Betti numbers through an Artinian reduction.
//!
//! For generic linear forms `l1, l2`, the quotient `A = R/(l1, l2)` has
//! Hilbert function `1, n-1, g, 0` and the same graded Betti numbers as `R`
//! (over the polynomial ring in the remaining `N = n - 1` variables), as long
//! as `l1, l2` is a regular sequence on `R`. Since `A_1` is the whole space
//! of linear forms `W`, the Koszul complex of `A` has only two kinds of
//! nontrivial maps, `∧^k W ⊗ W -> ∧^{k-1} W ⊗ A_2`, and
//!
//! ```text
//! b_{i,i+1} = C(N,i) N - rank φ_i - C(N,i+1)
//! b_{i,i+2} = C(N,i) g - rank φ_{i+1}
//! ```
//!
//! Regularity of `l1, l2` is verified rather than assumed: `l1` must not
//! vanish on any line, `l1 R_1 + l2 R_1` must have dimension `2n + 1` and
//! `l1 R_2 + l2 R_2` must be all of `R_3`. The last condition forces
//! `A_j = 0` for `j >= 3`; together with the linear Hilbert polynomial of a
//! nodal curve of genus g this rules out torsion in every degree.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::model::EvaluationModel;
use super::subsets::{elements, subsets, SubsetIndex};
use crate::error::OracleError;
use crate::field::PrimeField;
use crate::linalg::{Rref, SparseMatrix};
use crate::table::{BettiTable, Strand};

const ATTEMPTS: u64 = 8;

/// Multiplication `W x W -> A_2` for a verified Artinian reduction.
pub(crate) struct ArtinianReduction {
    field: PrimeField,
    /// Number of variables of the reduced polynomial ring.
    pub vars: usize,
    pub genus: usize,
    /// `mult[a][b]`: coordinates of `w_a w_b` in `A_2`.
    mult: Vec<Vec<Vec<u64>>>,
}

impl ArtinianReduction {
    pub fn new(model: &EvaluationModel, seed: u64) -> Result<Self, OracleError> {
        if model.max_deg < 3 {
            return Err(OracleError::DegreeOutOfRange {
                degree: 3,
                max_deg: model.max_deg,
            });
        }
        let mut last = String::new();
        for attempt in 0..ATTEMPTS {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED_A871_0000_0000 ^ attempt);
            match Self::attempt(model, &mut rng) {
                Ok(r) => return Ok(r),
                Err(msg) => last = msg,
            }
        }
        Err(OracleError::Genericity(format!("no regular sequence of linear forms found: {last}")))
    }

    fn attempt(model: &EvaluationModel, rng: &mut ChaCha8Rng) -> Result<Self, String> {
        let f = *model.field();
        let p = f.modulus();
        let width = model.n + 1;
        let l1: Vec<u64> = (0..width).map(|_| rng.gen_range(0..p)).collect();
        let l2: Vec<u64> = (0..width).map(|_| rng.gen_range(0..p)).collect();
        let v1 = model.linear_values(&l1);
        let v2 = model.linear_values(&l2);
        let s = model.samples_per_line;
        for (line, chunk) in v1.chunks(s).enumerate() {
            if chunk.iter().all(|&x| x == 0) {
                return Err(format!("first form vanishes on line {line}"));
            }
        }
        let count = model.sample_count();
        let ideal_in = |deg: usize| {
            let mut span = Rref::empty(f, count);
            for r in model.basis[deg].rows() {
                span.push(model.pointwise(&v1, r));
                span.push(model.pointwise(&v2, r));
            }
            span
        };
        let u2 = ideal_in(1);
        if u2.dim() != 2 * model.n + 1 {
            return Err(format!("(l1, l2) has {} quadrics, expected {}", u2.dim(), 2 * model.n + 1));
        }
        let u3 = ideal_in(2);
        if u3.dim() != model.dim(3) {
            return Err(format!("quotient is nonzero in degree 3 ({} of {})", u3.dim(), model.dim(3)));
        }
        let mut quotient = Rref::empty(f, count);
        for r in model.basis[2].rows() {
            let mut v = r.clone();
            u2.reduce(&mut v);
            quotient.push(v);
        }
        if quotient.dim() != model.genus {
            return Err(format!("dim A_2 = {} but genus is {}", quotient.dim(), model.genus));
        }
        // Eliminate two coordinates on which (l1, l2) has a nonzero minor.
        let pair = (0..width)
            .flat_map(|a| (a + 1..width).map(move |b| (a, b)))
            .find(|&(a, b)| f.sub(f.mul(l1[a], l2[b]), f.mul(l1[b], l2[a])) != 0)
            .ok_or_else(|| "linear forms are dependent".to_string())?;
        let kept: Vec<usize> = (0..width).filter(|&k| k != pair.0 && k != pair.1).collect();
        let mult = kept
            .iter()
            .map(|&a| {
                kept.iter()
                    .map(|&b| {
                        let mut v = model.pointwise(&model.var_values[a], &model.var_values[b]);
                        u2.reduce(&mut v);
                        quotient.coordinates(&v)
                    })
                    .collect()
            })
            .collect();
        Ok(ArtinianReduction {
            field: f,
            vars: kept.len(),
            genus: model.genus,
            mult,
        })
    }

    /// The map `∧^k W ⊗ W -> ∧^{k-1} W ⊗ A_2`, restricted to rows
    /// `e_S ⊗ w_m` with `m <= max S`; the remaining rows add nothing to the
    /// image since they agree with the others modulo Koszul boundaries.
    fn phi(&self, k: usize, index: &SubsetIndex) -> SparseMatrix {
        let g = self.genus;
        let mut m = SparseMatrix::new(index.count(self.vars, k - 1) * g);
        for s in subsets(self.vars, k) {
            let top = 31 - s.leading_zeros() as usize;
            let faces: Vec<(usize, usize, bool)> = elements(s)
                .enumerate()
                .map(|(t, e)| (e, index.rank(s & !(1 << e)), t % 2 == 1))
                .collect();
            for w in 0..=top {
                let mut row = Vec::with_capacity(k * g);
                for &(e, face, negative) in &faces {
                    for (c, &x) in self.mult[e][w].iter().enumerate() {
                        if x != 0 {
                            let x = if negative { self.field.neg(x) } else { x };
                            row.push(((face * g + c) as u32, x));
                        }
                    }
                }
                m.push_row(row);
            }
        }
        m
    }

    pub fn phi_rank(&self, k: usize, index: &SubsetIndex) -> usize {
        if k == 0 || k > self.vars || self.genus == 0 {
            return 0;
        }
        self.phi(k, index).rank(&self.field)
    }

    pub fn table(&self, n: usize) -> Result<BettiTable, OracleError> {
        let nv = self.vars;
        let g = self.genus as i128;
        let index = SubsetIndex::new(nv.max(1));
        let ranks: Vec<i128> = (0..=nv + 1).map(|k| self.phi_rank(k, &index) as i128).collect();
        let c = |k: usize| index.count(nv, k) as i128;
        let mut quad = Strand::zeros(n);
        let mut cubic = Strand::zeros(n);
        for i in 1..=n.min(nv) {
            let q = c(i) * nv as i128 - ranks[i] - c(i + 1);
            let r = c(i) * g - ranks[i + 1];
            for (j, v) in [(i + 1, q), (i + 2, r)] {
                if v < 0 {
                    return Err(OracleError::Genericity(format!("negative homology dimension {v} at b_({i},{j})")));
                }
            }
            quad.0[i - 1] = q as u64;
            cubic.0[i - 1] = r as u64;
        }
        Ok(BettiTable::new(n, quad, cubic))
    }
}
