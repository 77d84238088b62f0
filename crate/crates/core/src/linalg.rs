//! Exact dense linear algebra over word-sized prime fields.
//!
//! The workhorse is [`EchelonBasis`], an incremental row-echelon form: rows
//! are inserted one at a time and reduced against the pivots found so far.
//! When `(p-1)^2 * width` fits comfortably in 64 bits the inner update loop
//! skips modular reduction entirely and reduces each entry only when it
//! becomes the leading candidate, which keeps the loop a plain widening
//! multiply-add.

use crate::field::PrimeField;

/// Dense row-major matrix with entries in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows(rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix, field: &PrimeField) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = field.add(out.get(i, j), field.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

/// Exact rank of `m` over `field`.
pub fn rank_mod_p(m: &Matrix, field: &PrimeField) -> usize {
    let (rows, cols) = m.shape();
    // Eliminate along the shorter dimension.
    if rows <= cols {
        let mut basis = EchelonBasis::new(*field, cols);
        for r in 0..rows {
            basis.insert(m.row(r).to_vec());
            if basis.rank() == cols {
                break;
            }
        }
        basis.rank()
    } else {
        let mut basis = EchelonBasis::new(*field, rows);
        for c in 0..cols {
            basis.insert((0..rows).map(|r| m.get(r, c)).collect());
            if basis.rank() == rows {
                break;
            }
        }
        basis.rank()
    }
}

enum PivotRows {
    /// Entries stored as `u32`; updates are accumulated without reduction.
    Lazy(Vec<Vec<u32>>),
    Eager(Vec<Vec<u64>>),
}

/// Incremental row-echelon basis of a subspace of `F_p^width`.
pub struct EchelonBasis {
    field: PrimeField,
    width: usize,
    /// `pivot_of[c]` is the index of the stored row whose leading entry is at
    /// column `c`.
    pivot_of: Vec<Option<usize>>,
    pivot_cols: Vec<usize>,
    rows: PivotRows,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, width: usize) -> Self {
        let p = field.modulus() as u128;
        let sq = (p - 1) * (p - 1);
        let lazy = p <= u32::MAX as u128 && sq * (width as u128 + 1) + p < (u64::MAX as u128) / 2;
        Self {
            field,
            width,
            pivot_of: vec![None; width],
            pivot_cols: Vec::new(),
            rows: if lazy {
                PivotRows::Lazy(Vec::new())
            } else {
                PivotRows::Eager(Vec::new())
            },
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `row` against the basis; if a nonzero remainder survives it
    /// becomes a new pivot row. Returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        assert_eq!(row.len(), self.width);
        let p = self.field.modulus();
        match &mut self.rows {
            PivotRows::Lazy(rows) => {
                for j in 0..self.width {
                    let x = row[j] % p;
                    row[j] = 0;
                    if x == 0 {
                        continue;
                    }
                    match self.pivot_of[j] {
                        Some(idx) => {
                            let f = p - x;
                            let piv = &rows[idx];
                            for (dst, &src) in row[j + 1..].iter_mut().zip(&piv[j + 1..]) {
                                *dst += f * src as u64;
                            }
                        }
                        None => {
                            let inv = self.field.inv(x);
                            let mut stored = vec![0u32; self.width];
                            stored[j] = 1;
                            for k in j + 1..self.width {
                                stored[k] = self.field.mul(row[k] % p, inv) as u32;
                            }
                            self.pivot_of[j] = Some(rows.len());
                            self.pivot_cols.push(j);
                            rows.push(stored);
                            return true;
                        }
                    }
                }
                false
            }
            PivotRows::Eager(rows) => {
                for j in 0..self.width {
                    let x = row[j] % p;
                    row[j] = 0;
                    if x == 0 {
                        continue;
                    }
                    match self.pivot_of[j] {
                        Some(idx) => {
                            let f = p - x;
                            let piv = &rows[idx];
                            for k in j + 1..self.width {
                                row[k] = self.field.add(row[k], self.field.mul(f, piv[k]));
                            }
                        }
                        None => {
                            let inv = self.field.inv(x);
                            let mut stored = vec![0u64; self.width];
                            stored[j] = 1;
                            for k in j + 1..self.width {
                                stored[k] = self.field.mul(row[k], inv);
                            }
                            self.pivot_of[j] = Some(rows.len());
                            self.pivot_cols.push(j);
                            rows.push(stored);
                            return true;
                        }
                    }
                }
                false
            }
        }
    }
}

/// Fully reduced row echelon form of a row space.
#[derive(Debug, Clone)]
pub struct Rref {
    field: PrimeField,
    width: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Rref {
    /// Row-reduces the span of `rows` (all of length `width`).
    pub fn new(field: PrimeField, width: usize, rows: impl IntoIterator<Item = Vec<u64>>) -> Self {
        let mut out = Self {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        };
        for r in rows {
            out.push(r);
        }
        out
    }

    pub fn empty(field: PrimeField, width: usize) -> Self {
        Self::new(field, width, std::iter::empty())
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the projection onto this space along the pivot columns;
    /// the result vanishes on every pivot column.
    pub fn reduce(&self, v: &mut [u64]) {
        let f = &self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                let m = f.neg(c);
                for (dst, &src) in v.iter_mut().zip(row) {
                    if src != 0 {
                        *dst = f.add(*dst, f.mul(m, src));
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the stored basis. Only meaningful when `v` lies
    /// in the span.
    pub fn coordinates(&self, v: &[u64]) -> Vec<u64> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    /// Adds `v` to the spanning set, keeping the form fully reduced.
    /// Returns whether the dimension grew.
    pub fn push(&mut self, mut v: Vec<u64>) -> bool {
        assert_eq!(v.len(), self.width);
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(v[pc]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in &mut self.rows {
            let c = row[pc];
            if c != 0 {
                let m = f.neg(c);
                for (dst, &src) in row.iter_mut().zip(&v) {
                    if src != 0 {
                        *dst = f.add(*dst, f.mul(m, src));
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }
}

/// Matrix stored as sparse rows of `(column, value)` pairs.
#[derive(Debug, Clone, Default)]
pub struct SparseMatrix {
    cols: usize,
    rows: Vec<Vec<(u32, u64)>>,
}

impl SparseMatrix {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    pub fn push_row(&mut self, row: Vec<(u32, u64)>) {
        debug_assert!(row.iter().all(|&(c, _)| (c as usize) < self.cols));
        self.rows.push(row);
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Exact rank. Vectors along the longer side are inserted into an
    /// echelon basis whose width is the shorter side, stopping once full.
    pub fn rank(&self, field: &PrimeField) -> usize {
        let (nrows, ncols) = self.shape();
        if nrows == 0 || ncols == 0 {
            return 0;
        }
        if ncols <= nrows {
            let mut basis = EchelonBasis::new(*field, ncols);
            for row in &self.rows {
                let mut dense = vec![0u64; ncols];
                for &(c, v) in row {
                    dense[c as usize] = field.add(dense[c as usize], v);
                }
                basis.insert(dense);
                if basis.rank() == ncols {
                    break;
                }
            }
            basis.rank()
        } else {
            let mut columns: Vec<Vec<(u32, u64)>> = vec![Vec::new(); ncols];
            for (r, row) in self.rows.iter().enumerate() {
                for &(c, v) in row {
                    columns[c as usize].push((r as u32, v));
                }
            }
            let mut basis = EchelonBasis::new(*field, nrows);
            for col in columns {
                let mut dense = vec![0u64; nrows];
                for (r, v) in col {
                    dense[r as usize] = field.add(dense[r as usize], v);
                }
                basis.insert(dense);
                if basis.rank() == nrows {
                    break;
                }
            }
            basis.rank()
        }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows.len(), self.cols);
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                m.set(r, c as usize, v);
            }
        }
        m
    }
}
