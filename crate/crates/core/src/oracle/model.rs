use crate::arrangement::LineArrangement;
use crate::error::OracleError;
use crate::field::PrimeField;
use crate::linalg::Rref;

/// Graded pieces `R_0..=R_max_deg` of the coordinate ring of a line
/// arrangement, each stored as the space of value vectors that its forms
/// take at a fixed set of sample points.
///
/// A degree-j form restricted to a line is a binary form of degree j, so
/// `max_deg + 1` distinct points per line determine it.
#[derive(Debug, Clone)]
pub struct EvaluationModel {
    pub(crate) field: PrimeField,
    pub n: usize,
    pub lines: usize,
    pub genus: usize,
    pub max_deg: usize,
    pub samples_per_line: usize,
    /// `sample_points[v]` lists the points sampled on line `v`.
    pub sample_points: Vec<Vec<Vec<u64>>>,
    /// `var_values[k][s]` is coordinate `k` of sample point `s` (lines in
    /// order, `samples_per_line` points each).
    pub var_values: Vec<Vec<u64>>,
    /// Row-reduced `R_j` for `j = 0..=max_deg`.
    pub basis: Vec<Rref>,
}

impl EvaluationModel {
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn dim(&self, j: usize) -> usize {
        self.basis[j].dim()
    }

    pub fn sample_count(&self) -> usize {
        self.lines * self.samples_per_line
    }

    /// Expected `dim R_j` for a non-special ACM curve.
    pub fn expected_dim(&self, j: usize) -> usize {
        if j == 0 {
            1
        } else {
            self.lines * j + 1 - self.genus
        }
    }

    /// Values at all sample points of the linear form with coefficients `l`.
    pub fn linear_values(&self, l: &[u64]) -> Vec<u64> {
        let f = &self.field;
        let mut out = vec![0u64; self.sample_count()];
        for (coef, vals) in l.iter().zip(&self.var_values) {
            if *coef == 0 {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(vals) {
                *o = f.add(*o, f.mul(*coef, v));
            }
        }
        out
    }

    pub(crate) fn pointwise(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| self.field.mul(x, y)).collect()
    }

    /// Coordinates, in the basis of `R_{a+1}`, of `x_k` times the basis
    /// elements of `R_a`: `out[k][b]`.
    pub(crate) fn multiplication(&self, a: usize) -> Vec<Vec<Vec<u64>>> {
        let f = &self.field;
        let target = &self.basis[a + 1];
        let pivots = target.pivots();
        (0..=self.n)
            .map(|k| {
                self.basis[a]
                    .rows()
                    .iter()
                    .map(|r| pivots.iter().map(|&c| f.mul(r[c], self.var_values[k][c])).collect())
                    .collect()
            })
            .collect()
    }
}

/// Samples `max_deg + 1` points on every line (edge points first) and
/// row-reduces the value spaces of forms of each degree. Fails with a
/// genericity error if some `dim R_j` differs from `D j + 1 - g`.
pub fn build_model(arr: &LineArrangement, max_deg: usize) -> Result<EvaluationModel, OracleError> {
    if max_deg == 0 {
        return Err(OracleError::DegreeOutOfRange { degree: 0, max_deg });
    }
    let field = arr.field()?;
    let d = arr.lines.len();
    let m = arr.edges.len();
    if d == 0 || m + 1 < d {
        return Err(OracleError::Genericity(format!("{d} lines with {m} intersection points cannot be connected")));
    }
    let genus = m + 1 - d;
    let s = max_deg + 1;
    let width = arr.n + 1;
    let mut sample_points = Vec::with_capacity(d);
    for v in 0..d {
        let mut pts: Vec<Vec<u64>> = Vec::with_capacity(s);
        for pt in arr.points_on_line(v) {
            if pts.len() < s && !pts.iter().any(|q| q.as_slice() == pt) {
                pts.push(pt.to_vec());
            }
        }
        let [a, b] = &arr.lines[v];
        let mut t = 1u64;
        while pts.len() < s {
            if t >= field.modulus() {
                return Err(OracleError::Genericity(format!("not enough points on line {v}")));
            }
            let mut pt: Vec<u64> = a.iter().zip(b).map(|(&x, &y)| field.add(x, field.mul(t, y))).collect();
            t += 1;
            if pt.iter().all(|&x| x == 0) {
                continue;
            }
            field.normalize(&mut pt);
            if !pts.contains(&pt) {
                pts.push(pt);
            }
        }
        sample_points.push(pts);
    }
    let count = d * s;
    let var_values: Vec<Vec<u64>> = (0..width)
        .map(|k| sample_points.iter().flatten().map(|pt| pt[k]).collect())
        .collect();
    let mut basis = vec![Rref::new(field, count, [vec![1u64; count]])];
    for j in 1..=max_deg {
        let prev = &basis[j - 1];
        let mut next = Rref::empty(field, count);
        for r in prev.rows() {
            for vals in &var_values {
                next.push(r.iter().zip(vals).map(|(&x, &y)| field.mul(x, y)).collect());
            }
        }
        let expected = d * j + 1 - genus;
        if next.dim() != expected {
            return Err(OracleError::Genericity(format!(
                "dim R_{j} = {} but a curve of degree {d} and genus {genus} needs {expected}",
                next.dim()
            )));
        }
        basis.push(next);
    }
    Ok(EvaluationModel {
        field,
        n: arr.n,
        lines: d,
        genus,
        max_deg,
        samples_per_line: s,
        sample_points,
        var_values,
        basis,
    })
}
