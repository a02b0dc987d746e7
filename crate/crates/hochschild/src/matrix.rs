//! Dense exact matrices with deterministic Gauss-Jordan elimination.
//!
//! Pivoting always takes the first nonzero column and the smallest row
//! index, so every echelon form, kernel basis and solution is reproducible
//! across runs.

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> std::fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.field.render(self.get(r, c)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        Matrix { field, rows: r, cols: c, data }
    }

    /// Build from integer entries, mapped through the field.
    pub fn from_i64(field: F, rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&n| field.from_i64(n)))
            .collect();
        Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols: rows.first().map_or(0, |r| r.len()),
            data,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &F::Elem) {
        let cur = self.get(r, c).clone();
        self.set(r, c, self.field.add(&cur, v));
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn set_column(&mut self, c: usize, v: &[F::Elem]) {
        assert_eq!(v.len(), self.rows);
        for (r, x) in v.iter().enumerate() {
            self.set(r, c, x.clone());
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if f.is_zero(b) {
                        continue;
                    }
                    let cur = out.get(r, c).clone();
                    let prod = f.mul(a, b);
                    out.set(r, c, f.add(&cur, &prod));
                }
            }
        }
        out
    }

    /// Matrix-vector product, skipping zero input entries.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols, "matvec shape mismatch");
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for r in 0..self.rows {
                let a = self.get(r, c);
                if f.is_zero(a) {
                    continue;
                }
                f.add_scaled(&mut out[r], x, a);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.field.clone(), self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Kronecker product; index convention (i ⊗ j) -> i * other_dim + j.
    pub fn kron(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if f.is_zero(a) {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if f.is_zero(b) {
                            continue;
                        }
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, k: &F::Elem) {
        for c in 0..self.cols {
            let v = self.field.mul(self.get(r, c), k);
            self.set(r, c, v);
        }
    }

    /// row_i -= k * row_j
    fn row_sub_scaled(&mut self, i: usize, j: usize, k: &F::Elem) {
        for c in 0..self.cols {
            let v = self.field.sub(self.get(i, c), &self.field.mul(k, self.get(j, c)));
            self.set(i, c, v);
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut r = self.clone();
        let pivots = r.rref_in_place(None);
        (r, pivots)
    }

    /// RREF that also accumulates the row transform T with `T * self = rref`.
    pub fn rref_with_transform(&self) -> (Self, Self, Vec<usize>) {
        let mut r = self.clone();
        let mut t = Self::identity(self.field.clone(), self.rows);
        let pivots = r.rref_in_place(Some(&mut t));
        (r, t, pivots)
    }

    fn rref_in_place(&mut self, mut transform: Option<&mut Self>) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let pivot_row = (pr..self.rows).find(|&i| !f.is_zero(self.get(i, c)));
            let Some(pi) = pivot_row else { continue };
            self.swap_rows(pr, pi);
            if let Some(t) = transform.as_deref_mut() {
                t.swap_rows(pr, pi);
            }
            let inv = f.inv(self.get(pr, c)).expect("nonzero pivot");
            self.scale_row(pr, &inv);
            if let Some(t) = transform.as_deref_mut() {
                t.scale_row(pr, &inv);
            }
            for i in 0..self.rows {
                if i != pr && !f.is_zero(self.get(i, c)) {
                    let k = self.get(i, c).clone();
                    self.row_sub_scaled(i, pr, &k);
                    if let Some(t) = transform.as_deref_mut() {
                        t.row_sub_scaled(i, pr, &k);
                    }
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the null space {v : Mv = 0}, one column per free
    /// column of the echelon form, ordered by free-column index.
    pub fn kernel(&self) -> Self {
        let (r, pivots) = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(f.clone(), self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, f.one());
            for (row, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, f.neg(r.get(row, fc)));
            }
        }
        out
    }

    /// Canonical (echelonized) basis of the column space, one basis vector
    /// per column.
    pub fn image(&self) -> Self {
        let (r, pivots) = self.transpose().rref();
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, pivots.len());
        for k in 0..pivots.len() {
            for c in 0..self.rows {
                out.set(c, k, r.get(k, c).clone());
            }
        }
        out
    }

    /// One solution of Mx = b (free variables set to zero), or `None` when
    /// inconsistent. Deterministic by the fixed pivoting rule.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows, "solve shape mismatch");
        let f = &self.field;
        let mut aug = Self::zeros(f.clone(), self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square full-rank matrix.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "inverse of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let (r, t, pivots) = self.rref_with_transform();
        if pivots.len() != self.rows {
            return Err(Error::Degenerate);
        }
        debug_assert!(r == Self::identity(self.field.clone(), self.rows));
        Ok(t)
    }
}
