//! Koszul strands of `R` over the full polynomial ring.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::model::EvaluationModel;
use super::subsets::{elements, subsets, SubsetIndex};
use crate::error::OracleError;
use crate::linalg::SparseMatrix;

/// Homology of `∧^{i+1}V⊗R_{j-i-1} -> ∧^i V⊗R_{j-i} -> ∧^{i-1}V⊗R_{j-i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandResult {
    pub i: usize,
    pub j: usize,
    pub kernel_dim: usize,
    pub image_dim: usize,
    pub betti: usize,
}

/// Shape of the Koszul differential `∧^i V⊗R_a -> ∧^{i-1}V⊗R_{a+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandShape {
    pub i: usize,
    pub a: usize,
    pub rows: usize,
    pub cols: usize,
}

/// Computes strand homology with cached differential ranks.
pub struct KoszulComplex<'m> {
    model: &'m EvaluationModel,
    index: SubsetIndex,
    ranks: HashMap<(usize, usize), usize>,
    mult: HashMap<usize, Vec<Vec<Vec<u64>>>>,
}

impl<'m> KoszulComplex<'m> {
    pub fn new(model: &'m EvaluationModel) -> Self {
        KoszulComplex {
            model,
            index: SubsetIndex::new(model.n + 1),
            ranks: HashMap::new(),
            mult: HashMap::new(),
        }
    }

    pub fn shape(&self, i: usize, a: usize) -> StrandShape {
        let v = self.model.n + 1;
        let dim = |j: usize| if j <= self.model.max_deg { self.model.dim(j) } else { 0 };
        StrandShape {
            i,
            a,
            rows: self.index.count(v, i) * dim(a),
            cols: if i == 0 { 0 } else { self.index.count(v, i - 1) * dim(a + 1) },
        }
    }

    /// Rank of `∧^i V⊗R_a -> ∧^{i-1}V⊗R_{a+1}`.
    pub fn rank(&mut self, i: usize, a: usize) -> Result<usize, OracleError> {
        let v = self.model.n + 1;
        if i == 0 || i > v {
            return Ok(0);
        }
        if a + 1 > self.model.max_deg {
            return Err(OracleError::DegreeOutOfRange {
                degree: a + 1,
                max_deg: self.model.max_deg,
            });
        }
        if let Some(&r) = self.ranks.get(&(i, a)) {
            return Ok(r);
        }
        let r = self.matrix(i, a).rank(self.model.field());
        self.ranks.insert((i, a), r);
        Ok(r)
    }

    fn matrix(&mut self, i: usize, a: usize) -> SparseMatrix {
        let model = self.model;
        let f = *model.field();
        let v = model.n + 1;
        let mult = self.mult.entry(a).or_insert_with(|| model.multiplication(a));
        let da = model.dim(a);
        let db = model.dim(a + 1);
        let mut m = SparseMatrix::new(self.index.count(v, i - 1) * db);
        #[allow(clippy::needless_range_loop)]
        for s in subsets(v, i) {
            let faces: Vec<(usize, usize, bool)> = elements(s)
                .enumerate()
                .map(|(t, k)| (k, self.index.rank(s & !(1 << k)), t % 2 == 1))
                .collect();
            for b in 0..da {
                let mut row = Vec::with_capacity(i * db);
                for &(k, face, negative) in &faces {
                    let base = (face * db) as u32;
                    for (c, &x) in mult[k][b].iter().enumerate() {
                        if x != 0 {
                            row.push((base + c as u32, if negative { f.neg(x) } else { x }));
                        }
                    }
                }
                m.push_row(row);
            }
        }
        m
    }

    /// `b_{i,j}` as middle homology of the strand through `∧^i V⊗R_{j-i}`.
    pub fn strand_betti(&mut self, i: usize, j: usize) -> Result<StrandResult, OracleError> {
        if j < i {
            return Err(OracleError::DegreeOutOfRange { degree: 0, max_deg: self.model.max_deg });
        }
        let a = j - i;
        if a + 1 > self.model.max_deg {
            return Err(OracleError::DegreeOutOfRange {
                degree: a + 1,
                max_deg: self.model.max_deg,
            });
        }
        let v = self.model.n + 1;
        let middle = self.index.count(v, i) * self.model.dim(a);
        let kernel_dim = middle - self.rank(i, a)?;
        let image_dim = if a == 0 { 0 } else { self.rank(i + 1, a - 1)? };
        if image_dim > kernel_dim {
            return Err(OracleError::Genericity(format!("image exceeds kernel at b_({i},{j})")));
        }
        Ok(StrandResult {
            i,
            j,
            kernel_dim,
            image_dim,
            betti: kernel_dim - image_dim,
        })
    }
}

/// `b_{i,j}` computed directly from the evaluation model.
pub fn strand_betti(model: &EvaluationModel, i: usize, j: usize) -> Result<StrandResult, OracleError> {
    KoszulComplex::new(model).strand_betti(i, j)
}
