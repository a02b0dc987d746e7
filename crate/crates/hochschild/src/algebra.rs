//! Finite-dimensional associative unital algebras given by structure
//! constants, and the bimodules the (co)homology machinery needs: tensor
//! powers with the outer action, normalized bar components, the linear dual
//! D(A) and the invariant bimodule (A⊗A)^A.
//!
//! Convention: the first basis vector of every algebra is its unit. The
//! normalized quotient then drops the first coordinate (`pi`) and re-inserts
//! a zero (`iota`).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

#[derive(Clone, Debug)]
pub struct Algebra<F: Field> {
    field: F,
    dim: usize,
    labels: Vec<String>,
    /// table[i][j] = coordinates of b_i * b_j.
    table: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> Algebra<F> {
    /// Validate structure constants and build the algebra. The unit must be
    /// the first basis vector; associativity and the unit law are checked on
    /// all basis triples.
    pub fn new(field: F, labels: Vec<String>, table: Vec<Vec<Vec<F::Elem>>>) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::BadDefinition("algebra dimension must be positive".into()));
        }
        if table.len() != dim || table.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return Err(Error::BadDefinition("structure constant tensor has wrong shape".into()));
        }
        let alg = Algebra { field, dim, labels, table };
        alg.check_unit()?;
        alg.check_associative()?;
        Ok(alg)
    }

    fn check_unit(&self) -> Result<()> {
        let f = &self.field;
        for i in 0..self.dim {
            let mut e = vec![f.zero(); self.dim];
            e[i] = f.one();
            if self.table[0][i] != e {
                return Err(Error::NoUnit(i));
            }
            if self.table[i][0] != e {
                return Err(Error::NoUnit(i));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = &self.table[i][j];
                for k in 0..self.dim {
                    let left = self.mul_vec_basis(ij, k);
                    let jk = &self.table[j][k];
                    let right = self.mul_basis_vec(i, jk);
                    if left != right {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    /// Dimension of the normalized quotient A/(k·1).
    pub fn abar_dim(&self) -> usize {
        self.dim - 1
    }

    pub fn unit(&self) -> Vec<F::Elem> {
        let mut e = vec![self.field.zero(); self.dim];
        e[0] = self.field.one();
        e
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.table[i][j]
    }

    /// (sum over i of v_i b_i) * b_k
    fn mul_vec_basis(&self, v: &[F::Elem], k: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (t, x) in self.table[i][k].iter().enumerate() {
                f.add_scaled(&mut out[t], c, x);
            }
        }
        out
    }

    fn mul_basis_vec(&self, i: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (j, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (t, x) in self.table[i][j].iter().enumerate() {
                f.add_scaled(&mut out[t], c, x);
            }
        }
        out
    }

    /// Bilinear product of two coordinate vectors.
    pub fn multiply(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(a.len(), self.dim);
        assert_eq!(b.len(), self.dim);
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, ca) in a.iter().enumerate() {
            if f.is_zero(ca) {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if f.is_zero(cb) {
                    continue;
                }
                let c = f.mul(ca, cb);
                for (t, x) in self.table[i][j].iter().enumerate() {
                    f.add_scaled(&mut out[t], &c, x);
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by basis element b_i.
    pub fn left_mult_matrix(&self, i: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(self.field.clone(), self.dim, self.dim);
        for j in 0..self.dim {
            for (t, x) in self.table[i][j].iter().enumerate() {
                m.set(t, j, x.clone());
            }
        }
        m
    }

    /// Matrix of right multiplication by basis element b_i.
    pub fn right_mult_matrix(&self, i: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(self.field.clone(), self.dim, self.dim);
        for j in 0..self.dim {
            for (t, x) in self.table[j][i].iter().enumerate() {
                m.set(t, j, x.clone());
            }
        }
        m
    }

    /// Projection A -> Abar (drop the unit coordinate).
    pub fn pi(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        v[1..].to_vec()
    }

    /// Section Abar -> A (insert a zero unit coordinate).
    pub fn iota(&self, w: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = Vec::with_capacity(self.dim);
        v.push(self.field.zero());
        v.extend_from_slice(w);
        v
    }

    /// Product of two Abar basis elements, projected back to Abar.
    /// Index convention: Abar basis j corresponds to algebra basis j + 1.
    pub fn abar_product(&self, j1: usize, j2: usize) -> Vec<F::Elem> {
        self.pi(&self.table[j1 + 1][j2 + 1])
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.table[i][j] != self.table[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// The regular bimodule A over itself.
    pub fn regular_bimodule(&self) -> Bimodule<F> {
        let left = (0..self.dim).map(|i| self.left_mult_matrix(i)).collect();
        let right = (0..self.dim).map(|i| self.right_mult_matrix(i)).collect();
        Bimodule { dim: self.dim, left, right, label: "A".into() }
    }
}

/// The normalized quotient Abar = A/(k·1) with its projection and section.
#[derive(Clone, Debug)]
pub struct NormalizedQuotient<F: Field> {
    pub projection: Matrix<F>,
    pub section: Matrix<F>,
}

impl<F: Field> NormalizedQuotient<F> {
    pub fn new(alg: &Algebra<F>) -> Self {
        let f = alg.field().clone();
        let d = alg.dim();
        let mut projection = Matrix::zeros(f.clone(), d - 1, d);
        let mut section = Matrix::zeros(f.clone(), d, d - 1);
        for i in 0..d - 1 {
            projection.set(i, i + 1, f.one());
            section.set(i + 1, i, f.one());
        }
        NormalizedQuotient { projection, section }
    }
}

/// An A-A-bimodule presented by its left/right action matrices on the
/// algebra basis.
#[derive(Clone, Debug)]
pub struct Bimodule<F: Field> {
    pub dim: usize,
    pub left: Vec<Matrix<F>>,
    pub right: Vec<Matrix<F>>,
    pub label: String,
}

impl<F: Field> Bimodule<F> {
    /// Left action by an arbitrary algebra element.
    pub fn act_left(&self, field: &F, a: &[F::Elem], m: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); self.dim];
        for (i, c) in a.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let part = self.left[i].apply(m);
            for (t, x) in part.iter().enumerate() {
                field.add_scaled(&mut out[t], c, x);
            }
        }
        out
    }

    pub fn act_right(&self, field: &F, m: &[F::Elem], a: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); self.dim];
        for (i, c) in a.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let part = self.right[i].apply(m);
            for (t, x) in part.iter().enumerate() {
                field.add_scaled(&mut out[t], c, x);
            }
        }
        out
    }

    /// Exact check of all bimodule axioms on every basis pair:
    /// L_{ab} = L_a L_b, R_{ab} = R_b R_a, L_a R_b = R_b L_a, L_1 = R_1 = id.
    pub fn validate(&self, alg: &Algebra<F>) -> Result<()> {
        let f = alg.field();
        let d = alg.dim();
        let id = Matrix::identity(f.clone(), self.dim);
        if self.left[0] != id || self.right[0] != id {
            return Err(Error::BadDefinition(format!("{}: unit does not act as identity", self.label)));
        }
        let combine = |mats: &Vec<Matrix<F>>, coeffs: &[F::Elem]| {
            let mut acc = Matrix::zeros(f.clone(), self.dim, self.dim);
            for (t, c) in coeffs.iter().enumerate() {
                if !f.is_zero(c) {
                    acc = acc.add(&mats[t].scale(c));
                }
            }
            acc
        };
        for i in 0..d {
            for j in 0..d {
                let prod = alg.basis_product(i, j);
                if combine(&self.left, prod) != self.left[i].mul(&self.left[j]) {
                    return Err(Error::BadDefinition(format!("{}: left action not multiplicative at ({i},{j})", self.label)));
                }
                if combine(&self.right, prod) != self.right[j].mul(&self.right[i]) {
                    return Err(Error::BadDefinition(format!("{}: right action not anti-multiplicative at ({i},{j})", self.label)));
                }
                if self.left[i].mul(&self.right[j]) != self.right[j].mul(&self.left[i]) {
                    return Err(Error::BadDefinition(format!("{}: left/right actions do not commute at ({i},{j})", self.label)));
                }
            }
        }
        Ok(())
    }
}

/// Multi-index helpers for tensor bases: index = big-endian digits in `base`.
pub fn encode_index(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * base + d)
}

pub fn decode_index(mut idx: usize, len: usize, base: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for i in (0..len).rev() {
        out[i] = idx % base;
        idx /= base;
    }
    out
}

/// A^{⊗p} with the outer action a·(x_1⊗…⊗x_p)·b = a x_1 ⊗ … ⊗ x_p b.
pub fn tensor_bimodule<F: Field>(alg: &Algebra<F>, p: usize) -> Bimodule<F> {
    assert!(p >= 1, "tensor power requires p >= 1");
    let f = alg.field().clone();
    let d = alg.dim();
    let inner = d.pow((p - 1) as u32);
    let id_inner = Matrix::identity(f.clone(), inner);
    let left = (0..d)
        .map(|i| alg.left_mult_matrix(i).kron(&id_inner))
        .collect();
    let right = (0..d)
        .map(|i| id_inner.kron(&alg.right_mult_matrix(i)))
        .collect();
    Bimodule { dim: d.pow(p as u32), left, right, label: format!("A^{{⊗{p}}}") }
}

/// Normalized bar component A ⊗ Abar^{⊗r} ⊗ A with the outer action.
/// Basis index: (u, J, v) -> (u * abar^r + J) * d + v.
pub fn bar_component<F: Field>(alg: &Algebra<F>, r: usize) -> Bimodule<F> {
    let f = alg.field().clone();
    let d = alg.dim();
    let mid = alg.abar_dim().pow(r as u32);
    let id_mid = Matrix::identity(f.clone(), mid);
    let id_last = Matrix::identity(f.clone(), d);
    let left = (0..d)
        .map(|i| alg.left_mult_matrix(i).kron(&id_mid).kron(&id_last))
        .collect();
    let id_first = Matrix::identity(f.clone(), d * mid);
    let right = (0..d)
        .map(|i| id_first.kron(&alg.right_mult_matrix(i)))
        .collect();
    Bimodule { dim: d * mid * d, left, right, label: format!("Bar_{r}") }
}

/// The linear dual D(A) = Hom_k(A, k) with (a·f·b)(c) = f(bca), so that for
/// a symmetric algebra the form-induced map t: A -> D(A) is a bimodule map.
pub fn dual_bimodule<F: Field>(alg: &Algebra<F>) -> Bimodule<F> {
    let f = alg.field().clone();
    let d = alg.dim();
    let mut left = Vec::with_capacity(d);
    let mut right = Vec::with_capacity(d);
    for k in 0..d {
        // (b_k · f)(c) = f(c b_k): (L_k)[i][j] = coeff of b_j in b_i b_k
        let mut lm = Matrix::zeros(f.clone(), d, d);
        // (f · b_k)(c) = f(b_k c): (R_k)[i][j] = coeff of b_j in b_k b_i
        let mut rm = Matrix::zeros(f.clone(), d, d);
        for i in 0..d {
            for j in 0..d {
                lm.set(i, j, alg.basis_product(i, k)[j].clone());
                rm.set(i, j, alg.basis_product(k, i)[j].clone());
            }
        }
        left.push(lm);
        right.push(rm);
    }
    Bimodule { dim: d, left, right, label: "D(A)".into() }
}

/// The invariant bimodule (A⊗A)^A ≅ Hom_{A^e}(A, A^e), realized concretely
/// inside A⊗A. Elements are invariants z = Σ x_i ⊗ y_i with
/// Σ a x_i ⊗ y_i = Σ x_i ⊗ y_i a for all a; the bimodule structure is
/// a·z·b = Σ x_i b ⊗ a y_i (right factor of A^e acting by multiplication).
#[derive(Clone, Debug)]
pub struct AVee<F: Field> {
    pub module: Bimodule<F>,
    /// Columns embed the chosen basis into A⊗A (index x*d + y).
    pub embed: Matrix<F>,
    /// Left inverse of `embed` on its image.
    retract: Matrix<F>,
}

impl<F: Field> AVee<F> {
    pub fn dim(&self) -> usize {
        self.module.dim
    }

    /// Coordinates in the A^∨ basis of an invariant vector of A⊗A.
    pub fn retract(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let x = self.retract.apply(v);
        if self.embed.apply(&x) != v {
            return Err(Error::NotInSubspace);
        }
        Ok(x)
    }
}

pub fn a_vee<F: Field>(alg: &Algebra<F>) -> AVee<F> {
    let f = alg.field().clone();
    let d = alg.dim();
    let dd = d * d;
    // Invariance: for each basis a, (leftmult_a ⊗ id − id ⊗ rightmult_a) z = 0.
    let id = Matrix::identity(f.clone(), d);
    let mut stacked = Matrix::zeros(f.clone(), 0, dd);
    for a in 0..d {
        let cond = alg
            .left_mult_matrix(a)
            .kron(&id)
            .sub(&id.kron(&alg.right_mult_matrix(a)));
        stacked = if stacked.rows() == 0 { cond } else { stacked_vstack(&stacked, &cond) };
    }
    let basis = Subspace::kernel_of(&stacked);
    let embed = basis.as_columns();
    let k = basis.dim();

    // Transport the actions: left by a = id ⊗ leftmult_a, right by b = rightmult_b ⊗ id.
    let retract_full = pseudo_left_inverse(&embed);
    let mut left = Vec::with_capacity(d);
    let mut right = Vec::with_capacity(d);
    for a in 0..d {
        let amb_l = id.kron(&alg.left_mult_matrix(a));
        let amb_r = alg.right_mult_matrix(a).kron(&id);
        left.push(retract_full.mul(&amb_l).mul(&embed));
        right.push(retract_full.mul(&amb_r).mul(&embed));
    }
    let module = Bimodule { dim: k, left, right, label: "A^∨".into() };
    AVee { module, embed, retract: retract_full }
}

fn stacked_vstack<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    assert_eq!(a.cols(), b.cols());
    let mut out = Matrix::zeros(a.field().clone(), a.rows() + b.rows(), a.cols());
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            out.set(r, c, a.get(r, c).clone());
        }
    }
    for r in 0..b.rows() {
        for c in 0..b.cols() {
            out.set(a.rows() + r, c, b.get(r, c).clone());
        }
    }
    out
}

/// Left inverse of a full-column-rank matrix.
pub fn pseudo_left_inverse<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let (_, t, pivots) = m.rref_with_transform();
    assert_eq!(pivots.len(), m.cols(), "matrix does not have full column rank");
    let mut out = Matrix::zeros(m.field().clone(), m.cols(), m.rows());
    for i in 0..m.cols() {
        for c in 0..m.rows() {
            out.set(i, c, t.get(i, c).clone());
        }
    }
    out
}

// ---------------------------------------------------------------------------
// definition files
// ---------------------------------------------------------------------------

/// Scalar literal in a definition file: an integer or a string like "2/3".
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Int(i64),
    Str(String),
}

impl ScalarRepr {
    pub fn to_elem<F: Field>(&self, field: &F) -> Result<F::Elem> {
        match self {
            ScalarRepr::Int(n) => Ok(field.from_i64(*n)),
            ScalarRepr::Str(s) => field.parse(s),
        }
    }
}

/// On-disk algebra description. `structure_constants` lists sparse entries
/// [i, j, k, value] meaning b_i · b_j has coefficient `value` on b_k;
/// omitted entries are zero. The unit must be the first basis vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraDefinition {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    pub structure_constants: Vec<(usize, usize, usize, ScalarRepr)>,
    pub unit: Vec<ScalarRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric_form: Option<Vec<Vec<ScalarRepr>>>,
}

impl AlgebraDefinition {
    pub fn build<F: Field>(&self, field: F) -> Result<Algebra<F>> {
        if self.basis.len() != self.dim {
            return Err(Error::BadDefinition(format!(
                "dim = {} but {} basis labels given",
                self.dim,
                self.basis.len()
            )));
        }
        if self.unit.len() != self.dim {
            return Err(Error::BadDefinition("unit vector has wrong length".into()));
        }
        // The engine's basis convention requires unit = first basis vector.
        let unit: Vec<F::Elem> = self
            .unit
            .iter()
            .map(|s| s.to_elem(&field))
            .collect::<Result<_>>()?;
        let mut expected = vec![field.zero(); self.dim];
        expected[0] = field.one();
        if unit != expected {
            return Err(Error::BadDefinition(
                "the unit must be the first basis vector (coordinates [1, 0, ..., 0])".into(),
            ));
        }
        let mut table = vec![vec![vec![field.zero(); self.dim]; self.dim]; self.dim];
        for (i, j, k, v) in &self.structure_constants {
            if *i >= self.dim || *j >= self.dim || *k >= self.dim {
                return Err(Error::BadDefinition(format!(
                    "structure constant index ({i}, {j}, {k}) out of range"
                )));
            }
            table[*i][*j][*k] = v.to_elem(&field)?;
        }
        Algebra::new(field, self.basis.clone(), table)
    }

    pub fn symmetric_form_matrix<F: Field>(&self, field: &F) -> Result<Option<Matrix<F>>> {
        let Some(rows) = &self.symmetric_form else { return Ok(None) };
        if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
            return Err(Error::BadDefinition("symmetric_form has wrong shape".into()));
        }
        let mut m = Matrix::zeros(field.clone(), self.dim, self.dim);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.to_elem(field)?);
            }
        }
        Ok(Some(m))
    }
}

/// Parse a JSON definition file.
pub fn parse_definition(text: &str) -> Result<AlgebraDefinition> {
    let def: AlgebraDefinition = serde_json::from_str(text)?;
    def.field.validate()?;
    Ok(def)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::presets;

    fn dual_numbers() -> Algebra<PrimeField> {
        presets::preset("f2-dual-numbers").unwrap().algebra_f2().unwrap()
    }

    #[test]
    fn dual_numbers_multiplication() {
        let a = dual_numbers();
        let one = a.unit();
        let x = vec![0u64, 1];
        assert_eq!(a.multiply(&one, &x), x);
        assert_eq!(a.multiply(&x, &x), vec![0, 0]);
    }

    #[test]
    fn group_algebra_z2_and_change_of_basis() {
        let p = presets::preset("f2-z2").unwrap();
        let a = p.algebra_f2().unwrap();
        let g = vec![0u64, 1];
        assert_eq!(a.multiply(&g, &g), a.unit());
        // over F_2: the substitution g = 1 + x identifies F2[Z/2] with the
        // dual numbers; check multiplicativity of the change of basis.
        let d = dual_numbers();
        let s = |v: &[u64]| -> Vec<u64> {
            // e -> 1, g -> 1 + x
            vec![(v[0] + v[1]) % 2, v[1]]
        };
        for i in 0..2usize {
            for j in 0..2usize {
                let mut ei = vec![0u64, 0];
                ei[i] = 1;
                let mut ej = vec![0u64, 0];
                ej[j] = 1;
                let lhs = s(&a.multiply(&ei, &ej));
                let rhs = d.multiply(&s(&ei), &s(&ej));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn rejects_broken_unit() {
        let f = PrimeField::new(2).unwrap();
        // x * 1 = 0 breaks the unit law
        let zero = vec![0u64, 0];
        let one = vec![1u64, 0];
        let x = vec![0u64, 1];
        let table = vec![
            vec![one.clone(), x.clone()],
            vec![zero.clone(), zero.clone()],
        ];
        let err = Algebra::new(f, vec!["1".into(), "x".into()], table).unwrap_err();
        assert!(matches!(err, Error::NoUnit(_)));
    }

    #[test]
    fn rejects_non_associative_table() {
        let f = PrimeField::new(2).unwrap();
        // dim 3, u*u = v, u*v = 1, rest zero: (uu)v = v^2 = 0 but u(uv) = u.
        let d = 3usize;
        let mut table = vec![vec![vec![0u64; d]; d]; d];
        for i in 0..d {
            table[0][i][i] = 1;
            table[i][0][i] = 1;
        }
        table[1][1][2] = 1; // u*u = v
        table[1][2][0] = 1; // u*v = 1
        table[2][1][0] = 1; // v*u = 1 (keeps it commutative but broken)
        let err = Algebra::new(f, vec!["1".into(), "u".into(), "v".into()], table).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }));
    }

    #[test]
    fn tensor_and_bar_bimodules_satisfy_axioms() {
        let a = presets::preset("f3-trunc-poly").unwrap().algebra_f3().unwrap();
        for p in 1..=3 {
            tensor_bimodule(&a, p).validate(&a).unwrap();
        }
        for r in 0..=4 {
            bar_component(&a, r).validate(&a).unwrap();
        }
        assert_eq!(bar_component(&a, 2).dim, 3 * 4 * 3);
    }

    #[test]
    fn bar_component_dims_for_dual_numbers() {
        let a = dual_numbers();
        assert_eq!(bar_component(&a, 0).dim, 4);
        assert_eq!(bar_component(&a, 3).dim, 4); // 2 * 1 * 2
    }

    #[test]
    fn tensor_p1_recovers_regular_bimodule() {
        let a = dual_numbers();
        let t = tensor_bimodule(&a, 1);
        let r = a.regular_bimodule();
        for i in 0..2 {
            assert_eq!(t.left[i], r.left[i]);
            assert_eq!(t.right[i], r.right[i]);
        }
    }

    #[test]
    fn dual_bimodule_actions() {
        let a = dual_numbers();
        let d = dual_bimodule(&a);
        d.validate(&a).unwrap();
        // x · x* = 1*: left action by x on the dual basis vector x*
        let xstar = vec![0u64, 1];
        let f = a.field().clone();
        let x = vec![0u64, 1];
        assert_eq!(d.act_left(&f, &x, &xstar), vec![1, 0]);
    }

    #[test]
    fn double_dual_is_regular() {
        for name in ["f2-dual-numbers", "f3-trunc-poly", "f2-z2"] {
            let p = presets::preset(name).unwrap();
            match name {
                "f3-trunc-poly" => {
                    let a = p.algebra_f3().unwrap();
                    check_double_dual(&a);
                }
                _ => {
                    let a = p.algebra_f2().unwrap();
                    check_double_dual(&a);
                }
            }
        }
    }

    fn check_double_dual<F: Field>(a: &Algebra<F>) {
        // D(D(A)) under the canonical identification has the actions of A.
        let d = dual_bimodule(a);
        let dd_left: Vec<Matrix<F>> = (0..a.dim())
            .map(|k| {
                // (b_k · φ)(f) = φ(f b_k) on D(D(A)); in matrices this is the
                // transpose construction applied twice.
                d.right[k].transpose()
            })
            .collect();
        let reg = a.regular_bimodule();
        for k in 0..a.dim() {
            assert_eq!(dd_left[k], reg.left[k]);
        }
    }

    #[test]
    fn a_vee_of_dual_numbers() {
        let a = dual_numbers();
        let v = a_vee(&a);
        assert_eq!(v.dim(), 2);
        v.module.validate(&a).unwrap();
        // contains the Casimir 1⊗x + x⊗1 (indices 0*2+1 = 1 and 1*2+0 = 2)
        let casimir = vec![0u64, 1, 1, 0];
        assert!(v.retract(&casimir).is_ok());
    }

    #[test]
    fn a_vee_of_the_base_field_is_one_dimensional() {
        let p = presets::preset("field").unwrap();
        let a = p.algebra_f2().unwrap();
        let v = a_vee(&a);
        assert_eq!(v.dim(), 1);
    }

    #[test]
    fn a_vee_of_z2_group_algebra() {
        let p = presets::preset("f2-z2").unwrap();
        let a = p.algebra_f2().unwrap();
        assert_eq!(a_vee(&a).dim(), 2);
    }

    #[test]
    fn definition_round_trip() {
        let text = r#"{
            "field": {"characteristic": 2},
            "dim": 2,
            "basis": ["1", "x"],
            "structure_constants": [[0,0,0,1],[0,1,1,1],[1,0,1,1]],
            "unit": [1, 0]
        }"#;
        let def = parse_definition(text).unwrap();
        let f = PrimeField::new(2).unwrap();
        let a = def.build(f).unwrap();
        assert_eq!(a.dim(), 2);
        let x = vec![0u64, 1];
        assert_eq!(a.multiply(&x, &x), vec![0, 0]);
    }
}

pub type ArcAlgebra<F> = Arc<Algebra<F>>;
