//! Subspaces and quotient spaces with deterministic representative bases.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// A subspace of k^n held as an echelonized row basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    /// Echelon basis, one row per basis vector (zero rows dropped).
    rows: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    pub fn from_spanning_rows(field: F, ambient: usize, vectors: Vec<Vec<F::Elem>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        if vectors.is_empty() {
            return Subspace { ambient, rows: Matrix::zeros(field, 0, ambient) };
        }
        let m = Matrix::from_rows(field.clone(), vectors);
        let (r, pivots) = m.rref();
        let mut rows = Matrix::zeros(field, pivots.len(), ambient);
        for i in 0..pivots.len() {
            for c in 0..ambient {
                rows.set(i, c, r.get(i, c).clone());
            }
        }
        Subspace { ambient, rows }
    }

    /// Span of the columns of `m`.
    pub fn from_spanning_columns(m: &Matrix<F>) -> Self {
        let vectors = (0..m.cols()).map(|c| m.column(c)).collect();
        Self::from_spanning_rows(m.field().clone(), m.rows(), vectors)
    }

    /// Kernel of `m` as a subspace of its column count space.
    pub fn kernel_of(m: &Matrix<F>) -> Self {
        Self::from_spanning_columns(&m.kernel())
    }

    /// Image of `m` as a subspace of its row count space.
    pub fn image_of(m: &Matrix<F>) -> Self {
        Self::from_spanning_columns(&m.image())
    }

    pub fn full(field: F, ambient: usize) -> Self {
        Subspace { ambient, rows: Matrix::identity(field, ambient) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.rows()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        self.rows.row(i).to_vec()
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F::Elem>> {
        (0..self.dim()).map(|i| self.basis_vector(i)).collect()
    }

    /// Basis as matrix columns (ambient x dim).
    pub fn as_columns(&self) -> Matrix<F> {
        self.rows.transpose()
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce_residue(v).iter().all(|x| self.rows.field().is_zero(x))
    }

    /// Residue of v after reduction against the echelon basis.
    fn reduce_residue(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.ambient);
        let f = self.rows.field().clone();
        let mut w = v.to_vec();
        for i in 0..self.dim() {
            // pivot column of row i = first nonzero entry (pivot normalized to 1)
            let pc = (0..self.ambient)
                .find(|&c| !f.is_zero(self.rows.get(i, c)))
                .expect("nonzero basis row");
            if !f.is_zero(&w[pc]) {
                let k = w[pc].clone();
                for c in 0..self.ambient {
                    let v = f.sub(&w[c], &f.mul(&k, self.rows.get(i, c)));
                    w[c] = v;
                }
            }
        }
        w
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        (0..self.dim()).all(|i| other.contains(self.rows.row(i)))
    }
}

/// A quotient `amb / sub` with a fixed complement inside `amb`: carries the
/// representative basis and a linear reduction map onto class coordinates.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub dim: usize,
    sub_dim: usize,
    /// Columns: [sub basis | complement representatives], spanning `amb`.
    combined: Matrix<F>,
    /// Left inverse of `combined`.
    left_inv: Matrix<F>,
    /// Complement representatives as columns (ambient x dim).
    reps: Matrix<F>,
}

pub fn quotient<F: Field>(amb: &Subspace<F>, sub: &Subspace<F>) -> Result<Quotient<F>> {
    if !sub.is_subspace_of(amb) {
        return Err(Error::SubspaceNotContained);
    }
    let field = amb.as_columns().field().clone();
    let ambient = amb.ambient_dim();

    // Extend the sub basis to a basis of amb by greedily taking amb basis rows.
    let mut rows: Vec<Vec<F::Elem>> = sub.basis_vectors();
    let mut complement: Vec<Vec<F::Elem>> = Vec::new();
    for cand in amb.basis_vectors() {
        let span = Subspace::from_spanning_rows(field.clone(), ambient, rows.clone());
        if !span.contains(&cand) {
            rows.push(cand.clone());
            complement.push(cand);
        }
    }
    debug_assert_eq!(rows.len(), amb.dim());

    let mut combined = Matrix::zeros(field.clone(), ambient, rows.len());
    for (j, v) in rows.iter().enumerate() {
        combined.set_column(j, v);
    }
    let mut reps = Matrix::zeros(field.clone(), ambient, complement.len());
    for (j, v) in complement.iter().enumerate() {
        reps.set_column(j, v);
    }

    // combined has full column rank; the first rank rows of the transform of
    // its RREF form a left inverse.
    let (r, t, pivots) = combined.rref_with_transform();
    debug_assert_eq!(pivots.len(), rows.len());
    let _ = r;
    let mut left_inv = Matrix::zeros(field, rows.len(), ambient);
    for i in 0..rows.len() {
        for c in 0..ambient {
            left_inv.set(i, c, t.get(i, c).clone());
        }
    }

    Ok(Quotient {
        dim: complement.len(),
        sub_dim: sub.dim(),
        combined,
        left_inv,
        reps,
    })
}

impl<F: Field> Quotient<F> {
    /// Class coordinates of `v`, which must lie in the ambient subspace.
    /// Linear, and vanishes exactly on the distinguished subspace.
    pub fn reduce(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let x = self.left_inv.apply(v);
        // membership check: combined * x must reproduce v exactly
        let back = self.combined.apply(&x);
        if back != v {
            return Err(Error::NotInSubspace);
        }
        Ok(x[self.sub_dim..].to_vec())
    }

    /// Representative of the class with the given coordinates.
    pub fn lift(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        self.reps.apply(coords)
    }

    /// Representative basis as columns.
    pub fn representatives(&self) -> &Matrix<F> {
        &self.reps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn trivial_quotients() {
        let amb = Subspace::full(f2(), 2);
        // amb = sub -> dim 0
        let q = quotient(&amb, &amb).unwrap();
        assert_eq!(q.dim, 0);
        // sub = 0 -> dim = dim(amb), reduce = coordinates in the amb basis
        let zero = Subspace::from_spanning_rows(f2(), 2, vec![]);
        let q = quotient(&amb, &zero).unwrap();
        assert_eq!(q.dim, 2);
        assert_eq!(q.reduce(&[1, 0]).unwrap(), vec![1, 0]);
    }

    #[test]
    fn quotient_of_plane_by_diagonal() {
        let amb = Subspace::full(f2(), 2);
        let sub = Subspace::from_spanning_rows(f2(), 2, vec![vec![1, 1]]);
        let q = quotient(&amb, &sub).unwrap();
        assert_eq!(q.dim, 1);
        // reduce vanishes on the subspace and is linear
        assert_eq!(q.reduce(&[1, 1]).unwrap(), vec![0]);
        let a = q.reduce(&[1, 0]).unwrap();
        let b = q.reduce(&[0, 1]).unwrap();
        assert_eq!(a[0] ^ b[0], 0); // classes of e1, e2 agree mod the diagonal
        assert_eq!(a[0], 1);
    }

    #[test]
    fn rejects_non_subspace() {
        let amb = Subspace::from_spanning_rows(f2(), 2, vec![vec![1, 0]]);
        let sub = Subspace::from_spanning_rows(f2(), 2, vec![vec![0, 1]]);
        assert!(matches!(quotient(&amb, &sub), Err(Error::SubspaceNotContained)));
    }
}
