//! Bar complexes, syzygies and Hochschild (co)homology.
//!
//! Normalized complexes are the default everywhere; the unnormalized
//! variants exist for cross-checks. A cochain in C^m(A, M) is stored as a
//! (dim M) x (abar^m) matrix over the normalized slot basis, i.e. as the
//! full multilinear map that vanishes whenever a slot receives the unit.
//!
//! Syzygies: the p-th kernel of the normalized bar resolution is presented
//! in "form coordinates" A ⊗ Abar^{⊗p}, identified with Ker(dbar_{p-1})
//! inside A ⊗ Abar^{⊗p-1} ⊗ A by y ↦ dbar(y ⊗ 1). In form coordinates the
//! left action is multiplication on the head factor and all chain-level
//! operator pipelines become pure splices.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{bar_component, decode_index, encode_index, pseudo_left_inverse, Algebra, Bimodule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::subspace::{quotient, Quotient, Subspace};

/// Configurable guard against accidentally huge dense spaces.
pub fn size_guard() -> usize {
    static GUARD: OnceLock<usize> = OnceLock::new();
    *GUARD.get_or_init(|| {
        std::env::var("HH_SIZE_GUARD")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(2_000_000)
    })
}

pub fn check_guard(entries: usize) -> Result<()> {
    let guard = size_guard();
    if entries > guard {
        Err(Error::SizeGuardExceeded { entries, guard })
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// bar differentials
// ---------------------------------------------------------------------------

/// Matrix of the bar differential in degree `r`.
///
/// Normalized: Bar_r = A ⊗ Abar^r ⊗ A -> Bar_{r-1} (with Bar_{-1} read as A,
/// so r = 0 is the multiplication). Unnormalized: A^{⊗ r+2} -> A^{⊗ r+1}.
pub fn bar_differential<F: Field>(alg: &Algebra<F>, r: usize, normalized: bool) -> Result<Matrix<F>> {
    if normalized {
        normalized_bar_differential(alg, r)
    } else {
        unnormalized_bar_differential(alg, r)
    }
}

fn normalized_bar_differential<F: Field>(alg: &Algebra<F>, r: usize) -> Result<Matrix<F>> {
    let f = alg.field().clone();
    let d = alg.dim();
    let ab = alg.abar_dim();
    let rows = if r == 0 { d } else { d * ab.pow((r - 1) as u32) * d };
    let cols = d * ab.pow(r as u32) * d;
    check_guard(rows.saturating_mul(cols))?;
    let mut m = Matrix::zeros(f.clone(), rows, cols);
    if r == 0 {
        // multiplication A ⊗ A -> A
        for u in 0..d {
            for v in 0..d {
                let col = u * d + v;
                for (t, x) in alg.basis_product(u, v).iter().enumerate() {
                    m.add_at(t, col, x);
                }
            }
        }
        return Ok(m);
    }
    let mid_out = ab.pow((r - 1) as u32);
    let enc_out = |u: usize, j: &[usize], v: usize| (u * mid_out + encode_index(j, ab)) * d + v;
    for u in 0..d {
        for jidx in 0..ab.pow(r as u32) {
            let j = decode_index(jidx, r, ab);
            for v in 0..d {
                let col = (u * ab.pow(r as u32) + jidx) * d + v;
                // i = 0: multiply u into the first interior slot
                let w = alg.basis_product(u, j[0] + 1);
                for (t, x) in w.iter().enumerate() {
                    if !f.is_zero(x) {
                        m.add_at(enc_out(t, &j[1..], v), col, x);
                    }
                }
                // interior merges
                for i in 1..r {
                    let merged = alg.abar_product(j[i - 1], j[i]);
                    let sign = f.sign(i as i64);
                    let mut jj = Vec::with_capacity(r - 1);
                    jj.extend_from_slice(&j[..i - 1]);
                    jj.push(0); // placeholder
                    jj.extend_from_slice(&j[i + 1..]);
                    for (s, x) in merged.iter().enumerate() {
                        if f.is_zero(x) {
                            continue;
                        }
                        jj[i - 1] = s;
                        m.add_at(enc_out(u, &jj, v), col, &f.mul(&sign, x));
                    }
                }
                // i = r: multiply the last interior slot into v
                let w = alg.basis_product(j[r - 1] + 1, v);
                let sign = f.sign(r as i64);
                for (t, x) in w.iter().enumerate() {
                    if !f.is_zero(x) {
                        m.add_at(enc_out(u, &j[..r - 1], t), col, &f.mul(&sign, x));
                    }
                }
            }
        }
    }
    Ok(m)
}

fn unnormalized_bar_differential<F: Field>(alg: &Algebra<F>, r: usize) -> Result<Matrix<F>> {
    let f = alg.field().clone();
    let d = alg.dim();
    let rows = d.pow((r + 1) as u32);
    let cols = d.pow((r + 2) as u32);
    check_guard(rows.saturating_mul(cols))?;
    let mut m = Matrix::zeros(f.clone(), rows, cols);
    for idx in 0..cols {
        let t = decode_index(idx, r + 2, d);
        for i in 0..=r {
            let prod = alg.basis_product(t[i], t[i + 1]);
            let sign = f.sign(i as i64);
            let mut out = Vec::with_capacity(r + 1);
            out.extend_from_slice(&t[..i]);
            out.push(0);
            out.extend_from_slice(&t[i + 2..]);
            for (s, x) in prod.iter().enumerate() {
                if f.is_zero(x) {
                    continue;
                }
                out[i] = s;
                m.add_at(encode_index(&out, d), idx, &f.mul(&sign, x));
            }
        }
    }
    Ok(m)
}

// ---------------------------------------------------------------------------
// syzygies
// ---------------------------------------------------------------------------

/// The p-th syzygy of the normalized bar resolution.
#[derive(Debug)]
pub struct Syzygy<F: Field> {
    pub p: usize,
    /// Value space in form coordinates A ⊗ Abar^{⊗p}: dimension d * abar^p.
    pub form_dim: usize,
    /// Ambient bar component the syzygy embeds in (the algebra for p = 0).
    pub ambient: Arc<Bimodule<F>>,
    /// Embedding y ↦ dbar(y ⊗ 1): form coordinates -> ambient coordinates.
    pub embed: Matrix<F>,
    /// Left inverse of `embed`.
    pub retract: Matrix<F>,
    /// Bimodule structure in form coordinates (left = head multiplication).
    pub module: Bimodule<F>,
    /// The kernel subspace inside the ambient component.
    pub subspace: Subspace<F>,
}

impl<F: Field> Syzygy<F> {
    /// Ambient coordinates of a form-coordinate vector.
    pub fn to_ambient(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.embed.apply(v)
    }

    /// Form coordinates of an ambient vector, which must lie in the syzygy.
    pub fn from_ambient(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        let x = self.retract.apply(v);
        if self.embed.apply(&x) != v {
            return Err(Error::NotInSubspace);
        }
        Ok(x)
    }
}

// ---------------------------------------------------------------------------
// the tower: per-algebra cache of bar data, syzygies and cohomology
// ---------------------------------------------------------------------------

pub struct Tower<F: Field> {
    algebra: Arc<Algebra<F>>,
    bars: Mutex<BTreeMap<usize, Arc<Bimodule<F>>>>,
    dbars: Mutex<BTreeMap<usize, Arc<Matrix<F>>>>,
    syzygies: Mutex<BTreeMap<usize, Arc<Syzygy<F>>>>,
    cohomology: Mutex<BTreeMap<(usize, usize), Arc<CohomologyGroup<F>>>>,
}

impl<F: Field> Tower<F> {
    pub fn new(algebra: Arc<Algebra<F>>) -> Self {
        Tower {
            algebra,
            bars: Mutex::new(BTreeMap::new()),
            dbars: Mutex::new(BTreeMap::new()),
            syzygies: Mutex::new(BTreeMap::new()),
            cohomology: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> Arc<Algebra<F>> {
        Arc::clone(&self.algebra)
    }

    pub fn bar(&self, r: usize) -> Arc<Bimodule<F>> {
        let mut cache = self.bars.lock().unwrap();
        cache
            .entry(r)
            .or_insert_with(|| Arc::new(bar_component(&self.algebra, r)))
            .clone()
    }

    pub fn dbar(&self, r: usize) -> Result<Arc<Matrix<F>>> {
        let mut cache = self.dbars.lock().unwrap();
        if let Some(m) = cache.get(&r) {
            return Ok(m.clone());
        }
        let m = Arc::new(normalized_bar_differential(&self.algebra, r)?);
        cache.insert(r, m.clone());
        Ok(m)
    }

    pub fn syzygy(&self, p: usize) -> Result<Arc<Syzygy<F>>> {
        {
            let cache = self.syzygies.lock().unwrap();
            if let Some(s) = cache.get(&p) {
                return Ok(s.clone());
            }
        }
        let s = Arc::new(self.build_syzygy(p)?);
        self.syzygies.lock().unwrap().insert(p, s.clone());
        Ok(s)
    }

    fn build_syzygy(&self, p: usize) -> Result<Syzygy<F>> {
        let alg = &self.algebra;
        let f = alg.field().clone();
        let d = alg.dim();
        let ab = alg.abar_dim();
        let form_dim = d * ab.pow(p as u32);
        check_guard(form_dim)?;
        if p == 0 {
            let ambient = Arc::new(alg.regular_bimodule());
            let id = Matrix::identity(f.clone(), d);
            return Ok(Syzygy {
                p,
                form_dim,
                module: alg.regular_bimodule(),
                embed: id.clone(),
                retract: id,
                subspace: Subspace::full(f, d),
                ambient,
            });
        }
        let ambient = self.bar(p - 1);
        let dbar_p = self.dbar(p)?;
        // embed: column (h, K) = dbar_p applied to the basis tensor (h, K, 1)
        let mut embed = Matrix::zeros(f.clone(), ambient.dim, form_dim);
        for h in 0..d {
            for kidx in 0..ab.pow(p as u32) {
                let col_in = (h * ab.pow(p as u32) + kidx) * d; // last factor = unit = basis 0
                let mut e = vec![f.zero(); dbar_p.cols()];
                e[col_in] = f.one();
                let img = dbar_p.apply(&e);
                embed.set_column(h * ab.pow(p as u32) + kidx, &img);
            }
        }
        if embed.rank() != form_dim {
            return Err(Error::ExactnessViolation(p));
        }
        let retract = pseudo_left_inverse(&embed);

        // exactness: image(dbar_p) = kernel(dbar_{p-1}) = image of the embed
        let image = Subspace::image_of(&dbar_p);
        let dbar_prev = self.dbar(p - 1)?;
        let kernel = Subspace::kernel_of(&dbar_prev);
        if image != kernel {
            return Err(Error::ExactnessViolation(p));
        }
        let span = Subspace::from_spanning_columns(&embed);
        if span != kernel {
            return Err(Error::ExactnessViolation(p));
        }

        // transported bimodule structure; the left action is multiplication
        // on the head factor, the right action is conjugated through embed.
        let id_tail = Matrix::identity(f.clone(), ab.pow(p as u32));
        let mut left = Vec::with_capacity(d);
        let mut right = Vec::with_capacity(d);
        for t in 0..d {
            left.push(alg.left_mult_matrix(t).kron(&id_tail));
            right.push(retract.mul(&ambient.right[t]).mul(&embed));
        }
        let module = Bimodule { dim: form_dim, left, right, label: format!("Ω̄^{p}") };
        Ok(Syzygy { p, form_dim, ambient, embed, retract, module, subspace: kernel })
    }

    pub fn omega_cohomology(&self, m: usize, p: usize) -> Result<Arc<CohomologyGroup<F>>> {
        {
            let cache = self.cohomology.lock().unwrap();
            if let Some(g) = cache.get(&(m, p)) {
                return Ok(g.clone());
            }
        }
        let syz = self.syzygy(p)?;
        let g = Arc::new(cohomology(&self.algebra, &syz.module, m)?);
        self.cohomology.lock().unwrap().insert((m, p), g.clone());
        Ok(g)
    }
}

// ---------------------------------------------------------------------------
// cochains with arbitrary bimodule coefficients
// ---------------------------------------------------------------------------

/// An element of C^m(A, M): matrix of shape (dim M) x (abar^m).
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<F: Field> {
    pub degree: usize,
    pub values: Matrix<F>,
}

impl<F: Field> Cochain<F> {
    pub fn zero(field: F, module_dim: usize, abar: usize, m: usize) -> Self {
        Cochain { degree: m, values: Matrix::zeros(field, module_dim, abar.pow(m as u32)) }
    }

    pub fn value_at(&self, slots: &[usize], abar: usize) -> Vec<F::Elem> {
        debug_assert_eq!(slots.len(), self.degree);
        self.values.column(encode_index(slots, abar))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        Cochain { degree: self.degree, values: self.values.add(&other.values) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        Cochain { degree: self.degree, values: self.values.sub(&other.values) }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Cochain { degree: self.degree, values: self.values.scale(c) }
    }

    pub fn flatten(&self) -> Vec<F::Elem> {
        let mut out = Vec::with_capacity(self.values.rows() * self.values.cols());
        for r in 0..self.values.rows() {
            out.extend(self.values.row(r).iter().cloned());
        }
        out
    }

    pub fn from_flat(field: F, module_dim: usize, abar: usize, m: usize, flat: &[F::Elem]) -> Self {
        let cols = abar.pow(m as u32);
        assert_eq!(flat.len(), module_dim * cols);
        let mut values = Matrix::zeros(field, module_dim, cols);
        for r in 0..module_dim {
            for c in 0..cols {
                values.set(r, c, flat[r * cols + c].clone());
            }
        }
        Cochain { degree: m, values }
    }
}

/// Cochain differential on normalized cochains with coefficients in `module`.
pub fn delta_apply<F: Field>(alg: &Algebra<F>, module: &Bimodule<F>, f0: &Cochain<F>) -> Cochain<F> {
    let f = alg.field();
    let ab = alg.abar_dim();
    let m = f0.degree;
    let mut out = Cochain::zero(f.clone(), module.dim, ab, m + 1);
    for jidx in 0..ab.pow((m + 1) as u32) {
        let j = decode_index(jidx, m + 1, ab);
        let mut acc = vec![f.zero(); module.dim];
        // a_1 · f(a_2 .. a_{m+1})
        let tail = f0.value_at(&j[1..], ab);
        let lv = module.left[j[0] + 1].apply(&tail);
        for (t, x) in lv.iter().enumerate() {
            f.add_assign(&mut acc[t], x);
        }
        // interior merges
        for i in 1..=m {
            let merged = alg.abar_product(j[i - 1], j[i]);
            let sign = f.sign(i as i64);
            let mut jj = Vec::with_capacity(m);
            jj.extend_from_slice(&j[..i - 1]);
            jj.push(0);
            jj.extend_from_slice(&j[i + 1..]);
            for (s, c) in merged.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                jj[i - 1] = s;
                let v = f0.value_at(&jj, ab);
                let k = f.mul(&sign, c);
                for (t, x) in v.iter().enumerate() {
                    f.add_scaled(&mut acc[t], &k, x);
                }
            }
        }
        // f(a_1 .. a_m) · a_{m+1}
        let head = f0.value_at(&j[..m], ab);
        let rv = module.right[j[m] + 1].apply(&head);
        let sign = f.sign((m + 1) as i64);
        for (t, x) in rv.iter().enumerate() {
            f.add_scaled(&mut acc[t], &sign, x);
        }
        out.values.set_column(jidx, &acc);
    }
    out
}

/// Matrix of the cochain differential C^m(A, M) -> C^{m+1}(A, M) in the
/// flattened basis (value coordinate major, slot index minor).
pub fn delta_matrix<F: Field>(alg: &Algebra<F>, module: &Bimodule<F>, m: usize) -> Result<Matrix<F>> {
    let f = alg.field();
    let ab = alg.abar_dim();
    let in_cols = ab.pow(m as u32);
    let out_cols = ab.pow((m + 1) as u32);
    let rows = module.dim * out_cols;
    let cols = module.dim * in_cols;
    check_guard(rows.saturating_mul(cols))?;
    let mut big = Matrix::zeros(f.clone(), rows, cols);
    let enc_out = |t: usize, jidx: usize| t * out_cols + jidx;
    let enc_in = |t: usize, jidx: usize| t * in_cols + jidx;
    for jidx in 0..out_cols {
        let j = decode_index(jidx, m + 1, ab);
        // left action term
        let tail = encode_index(&j[1..], ab);
        let lm = &module.left[j[0] + 1];
        for r in 0..module.dim {
            for c in 0..module.dim {
                let x = lm.get(r, c);
                if !f.is_zero(x) {
                    big.add_at(enc_out(r, jidx), enc_in(c, tail), x);
                }
            }
        }
        // merges
        for i in 1..=m {
            let merged = alg.abar_product(j[i - 1], j[i]);
            let sign = f.sign(i as i64);
            let mut jj = Vec::with_capacity(m);
            jj.extend_from_slice(&j[..i - 1]);
            jj.push(0);
            jj.extend_from_slice(&j[i + 1..]);
            for (s, c) in merged.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                jj[i - 1] = s;
                let col = encode_index(&jj, ab);
                let k = f.mul(&sign, c);
                for t in 0..module.dim {
                    big.add_at(enc_out(t, jidx), enc_in(t, col), &k);
                }
            }
        }
        // right action term
        let head = encode_index(&j[..m], ab);
        let rm = &module.right[j[m] + 1];
        let sign = f.sign((m + 1) as i64);
        for r in 0..module.dim {
            for c in 0..module.dim {
                let x = rm.get(r, c);
                if !f.is_zero(x) {
                    big.add_at(enc_out(r, jidx), enc_in(c, head), &f.mul(&sign, x));
                }
            }
        }
    }
    Ok(big)
}

// ---------------------------------------------------------------------------
// chains
// ---------------------------------------------------------------------------

/// An element of C_r(A, M) = M ⊗ Abar^{⊗r}, flattened value-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain<F: Field> {
    pub degree: usize,
    pub values: Vec<F::Elem>,
}

impl<F: Field> Chain<F> {
    pub fn zero(field: &F, module_dim: usize, abar: usize, r: usize) -> Self {
        Chain { degree: r, values: vec![field.zero(); module_dim * abar.pow(r as u32)] }
    }

    pub fn is_zero_over(&self, field: &F) -> bool {
        self.values.iter().all(|x| field.is_zero(x))
    }
}

/// Matrix of the chain differential C_r(A, M) -> C_{r-1}(A, M), r >= 1.
pub fn partial_matrix<F: Field>(alg: &Algebra<F>, module: &Bimodule<F>, r: usize) -> Result<Matrix<F>> {
    assert!(r >= 1);
    let f = alg.field();
    let ab = alg.abar_dim();
    let in_cols = ab.pow(r as u32);
    let out_cols = ab.pow((r - 1) as u32);
    let rows = module.dim * out_cols;
    let cols = module.dim * in_cols;
    check_guard(rows.saturating_mul(cols))?;
    let mut big = Matrix::zeros(f.clone(), rows, cols);
    for jidx in 0..in_cols {
        let j = decode_index(jidx, r, ab);
        for k in 0..module.dim {
            let col = k * in_cols + jidx;
            // m · a_1
            let mv = module.right[j[0] + 1].column(k);
            let tail = encode_index(&j[1..], ab);
            for (t, x) in mv.iter().enumerate() {
                if !f.is_zero(x) {
                    big.add_at(t * out_cols + tail, col, x);
                }
            }
            // interior merges
            for i in 1..r {
                let merged = alg.abar_product(j[i - 1], j[i]);
                let sign = f.sign(i as i64);
                let mut jj = Vec::with_capacity(r - 1);
                jj.extend_from_slice(&j[..i - 1]);
                jj.push(0);
                jj.extend_from_slice(&j[i + 1..]);
                for (s, c) in merged.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    jj[i - 1] = s;
                    big.add_at(k * out_cols + encode_index(&jj, ab), col, &f.mul(&sign, c));
                }
            }
            // a_r · m
            let mv = module.left[j[r - 1] + 1].column(k);
            let head = encode_index(&j[..r - 1], ab);
            let sign = f.sign(r as i64);
            for (t, x) in mv.iter().enumerate() {
                if !f.is_zero(x) {
                    big.add_at(t * out_cols + head, col, &f.mul(&sign, x));
                }
            }
        }
    }
    Ok(big)
}

// ---------------------------------------------------------------------------
// (co)homology groups
// ---------------------------------------------------------------------------

/// A computed (co)homology group in a fixed flattened basis: dimension,
/// deterministic representative (co)cycles, and a reduction onto class
/// coordinates that vanishes exactly on (co)boundaries.
#[derive(Debug)]
pub struct CohomologyGroup<F: Field> {
    pub dim: usize,
    pub space_dim: usize,
    pub cocycles: Subspace<F>,
    pub coboundaries: Subspace<F>,
    quotient: Quotient<F>,
}

impl<F: Field> CohomologyGroup<F> {
    pub fn new(cocycles: Subspace<F>, coboundaries: Subspace<F>) -> Result<Self> {
        let q = quotient(&cocycles, &coboundaries)?;
        Ok(CohomologyGroup {
            dim: q.dim,
            space_dim: cocycles.ambient_dim(),
            cocycles,
            coboundaries,
            quotient: q,
        })
    }

    /// Representative of the i-th class basis vector (flattened cocycle).
    pub fn representative(&self, i: usize) -> Vec<F::Elem> {
        self.quotient.representatives().column(i)
    }

    pub fn representatives(&self) -> Vec<Vec<F::Elem>> {
        (0..self.dim).map(|i| self.representative(i)).collect()
    }

    /// Class coordinates of a flattened cocycle.
    pub fn class_coords(&self, flat: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.quotient.reduce(flat).map_err(|_| Error::NotACocycle)
    }

    /// Flattened representative of a class given by coordinates.
    pub fn lift(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        self.quotient.lift(coords)
    }
}

/// HH^r(A, M) from the normalized cochain complex.
pub fn cohomology<F: Field>(alg: &Algebra<F>, module: &Bimodule<F>, r: usize) -> Result<CohomologyGroup<F>> {
    let f = alg.field().clone();
    let d_r = delta_matrix(alg, module, r)?;
    let cocycles = Subspace::kernel_of(&d_r);
    let coboundaries = if r == 0 {
        Subspace::from_spanning_rows(f, module.dim, vec![])
    } else {
        let d_prev = delta_matrix(alg, module, r - 1)?;
        Subspace::image_of(&d_prev)
    };
    CohomologyGroup::new(cocycles, coboundaries)
}

/// HH_r(A, M) from the normalized chain complex.
pub fn homology<F: Field>(alg: &Algebra<F>, module: &Bimodule<F>, r: usize) -> Result<CohomologyGroup<F>> {
    let f = alg.field().clone();
    let ab = alg.abar_dim();
    let cycles = if r == 0 {
        Subspace::full(f.clone(), module.dim)
    } else {
        Subspace::kernel_of(&partial_matrix(alg, module, r)?)
    };
    let boundaries = {
        let d_next = partial_matrix(alg, module, r + 1)?;
        Subspace::image_of(&d_next)
    };
    let _ = ab;
    CohomologyGroup::new(cycles, boundaries)
}

// ---------------------------------------------------------------------------
// unnormalized cross-checks
// ---------------------------------------------------------------------------

/// Cochain differential on the unnormalized complex Hom(A^{⊗m}, M).
pub fn unnormalized_delta_matrix<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    m: usize,
) -> Result<Matrix<F>> {
    let f = alg.field();
    let d = alg.dim();
    let in_cols = d.pow(m as u32);
    let out_cols = d.pow((m + 1) as u32);
    check_guard((module.dim * out_cols).saturating_mul(module.dim * in_cols))?;
    let mut big = Matrix::zeros(f.clone(), module.dim * out_cols, module.dim * in_cols);
    for jidx in 0..out_cols {
        let j = decode_index(jidx, m + 1, d);
        let lm = &module.left[j[0]];
        let tail = encode_index(&j[1..], d);
        for r in 0..module.dim {
            for c in 0..module.dim {
                let x = lm.get(r, c);
                if !f.is_zero(x) {
                    big.add_at(r * out_cols + jidx, c * in_cols + tail, x);
                }
            }
        }
        for i in 1..=m {
            let merged = alg.basis_product(j[i - 1], j[i]);
            let sign = f.sign(i as i64);
            let mut jj = Vec::with_capacity(m);
            jj.extend_from_slice(&j[..i - 1]);
            jj.push(0);
            jj.extend_from_slice(&j[i + 1..]);
            for (s, c) in merged.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                jj[i - 1] = s;
                let col = encode_index(&jj, d);
                for t in 0..module.dim {
                    big.add_at(t * out_cols + jidx, t * in_cols + col, &f.mul(&sign, c));
                }
            }
        }
        let rm = &module.right[j[m]];
        let head = encode_index(&j[..m], d);
        let sign = f.sign((m + 1) as i64);
        for r in 0..module.dim {
            for c in 0..module.dim {
                let x = rm.get(r, c);
                if !f.is_zero(x) {
                    big.add_at(r * out_cols + jidx, c * in_cols + head, &f.mul(&sign, x));
                }
            }
        }
    }
    Ok(big)
}

pub fn unnormalized_cohomology_dim<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    r: usize,
) -> Result<usize> {
    let d_r = unnormalized_delta_matrix(alg, module, r)?;
    let z = d_r.cols() - d_r.rank();
    let b = if r == 0 {
        0
    } else {
        unnormalized_delta_matrix(alg, module, r - 1)?.rank()
    };
    Ok(z - b)
}

/// Chain differential on the unnormalized complex M ⊗ A^{⊗r}.
pub fn unnormalized_partial_matrix<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    r: usize,
) -> Result<Matrix<F>> {
    assert!(r >= 1);
    let f = alg.field();
    let d = alg.dim();
    let in_cols = d.pow(r as u32);
    let out_cols = d.pow((r - 1) as u32);
    check_guard((module.dim * out_cols).saturating_mul(module.dim * in_cols))?;
    let mut big = Matrix::zeros(f.clone(), module.dim * out_cols, module.dim * in_cols);
    for jidx in 0..in_cols {
        let j = decode_index(jidx, r, d);
        for k in 0..module.dim {
            let col = k * in_cols + jidx;
            let mv = module.right[j[0]].column(k);
            let tail = encode_index(&j[1..], d);
            for (t, x) in mv.iter().enumerate() {
                if !f.is_zero(x) {
                    big.add_at(t * out_cols + tail, col, x);
                }
            }
            for i in 1..r {
                let merged = alg.basis_product(j[i - 1], j[i]);
                let sign = f.sign(i as i64);
                let mut jj = Vec::with_capacity(r - 1);
                jj.extend_from_slice(&j[..i - 1]);
                jj.push(0);
                jj.extend_from_slice(&j[i + 1..]);
                for (s, c) in merged.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    jj[i - 1] = s;
                    big.add_at(k * out_cols + encode_index(&jj, d), col, &f.mul(&sign, c));
                }
            }
            let mv = module.left[j[r - 1]].column(k);
            let head = encode_index(&j[..r - 1], d);
            let sign = f.sign(r as i64);
            for (t, x) in mv.iter().enumerate() {
                if !f.is_zero(x) {
                    big.add_at(t * out_cols + head, col, &f.mul(&sign, x));
                }
            }
        }
    }
    Ok(big)
}

pub fn unnormalized_homology_dim<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    r: usize,
) -> Result<usize> {
    let z = if r == 0 {
        module.dim
    } else {
        let d_r = unnormalized_partial_matrix(alg, module, r)?;
        d_r.cols() - d_r.rank()
    };
    let b = unnormalized_partial_matrix(alg, module, r + 1)?.rank();
    Ok(z - b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn dual_numbers_tower() -> Tower<crate::field::PrimeField> {
        let a = presets::preset("f2-dual-numbers").unwrap().algebra_f2().unwrap();
        Tower::new(Arc::new(a))
    }

    fn f3_tower() -> Tower<crate::field::PrimeField> {
        let a = presets::preset("f3-trunc-poly").unwrap().algebra_f3().unwrap();
        Tower::new(Arc::new(a))
    }

    #[test]
    fn bar_differential_squares_to_zero() {
        for t in [dual_numbers_tower(), f3_tower()] {
            for r in 1..=6 {
                let d_r = t.dbar(r).unwrap();
                let d_prev = t.dbar(r - 1).unwrap();
                assert!(d_prev.mul(&d_r).is_zero(), "dbar^2 != 0 at r = {r}");
            }
            // unnormalized as well
            for r in 1..=3 {
                let d_r = bar_differential(t.algebra(), r, false).unwrap();
                let d_prev = bar_differential(t.algebra(), r - 1, false).unwrap();
                assert!(d_prev.mul(&d_r).is_zero());
            }
        }
    }

    #[test]
    fn d0_is_multiplication_and_d1_is_two_terms() {
        let t = f3_tower();
        let alg = t.algebra();
        let d0 = bar_differential(alg, 0, false).unwrap();
        // d0(x ⊗ x) = x^2
        let mut e = vec![0u64; 9];
        e[1 * 3 + 1] = 1;
        assert_eq!(d0.apply(&e), vec![0, 0, 1]);
        // d1(a⊗b⊗c) = ab⊗c - a⊗bc on basis x⊗x⊗x: x^2⊗x - x⊗x^2
        let d1 = bar_differential(alg, 1, false).unwrap();
        let mut e = vec![0u64; 27];
        e[(1 * 3 + 1) * 3 + 1] = 1;
        let out = d1.apply(&e);
        let mut expect = vec![0u64; 9];
        expect[2 * 3 + 1] = 1;
        expect[1 * 3 + 2] = 2; // minus one mod 3
        assert_eq!(out, expect);
    }

    #[test]
    fn syzygy_dimensions_follow_the_form_model() {
        let t = dual_numbers_tower();
        for p in 0..=5 {
            let s = t.syzygy(p).unwrap();
            assert_eq!(s.form_dim, 2, "dual numbers: dim Ω̄^{p}");
            s.module.validate(t.algebra()).unwrap();
        }
        let t = f3_tower();
        for p in 0..=3 {
            let s = t.syzygy(p).unwrap();
            assert_eq!(s.form_dim, 3 * 2usize.pow(p as u32));
            s.module.validate(t.algebra()).unwrap();
        }
    }

    #[test]
    fn delta_squares_to_zero() {
        for t in [dual_numbers_tower(), f3_tower()] {
            let alg = t.algebra();
            let m0 = alg.regular_bimodule();
            for m in 0..=4 {
                let d1 = delta_matrix(alg, &m0, m).unwrap();
                let d2 = delta_matrix(alg, &m0, m + 1).unwrap();
                assert!(d2.mul(&d1).is_zero(), "delta^2 != 0 at m = {m}");
            }
            // with syzygy coefficients
            let s = t.syzygy(2).unwrap();
            for m in 0..=2 {
                let d1 = delta_matrix(alg, &s.module, m).unwrap();
                let d2 = delta_matrix(alg, &s.module, m + 1).unwrap();
                assert!(d2.mul(&d1).is_zero());
            }
        }
    }

    #[test]
    fn partial_squares_to_zero() {
        for t in [dual_numbers_tower(), f3_tower()] {
            let alg = t.algebra();
            let m0 = alg.regular_bimodule();
            for r in 1..=4 {
                let d_r = partial_matrix(alg, &m0, r).unwrap();
                let d_next = partial_matrix(alg, &m0, r + 1).unwrap();
                assert!(d_r.mul(&d_next).is_zero(), "partial^2 != 0 at r = {r}");
            }
        }
    }

    #[test]
    fn hh0_is_the_center() {
        for name in ["f2-dual-numbers", "f3-trunc-poly", "f2-z2"] {
            let p = presets::preset(name).unwrap();
            let a = p.algebra_fp().unwrap();
            let g = cohomology(&a, &a.regular_bimodule(), 0).unwrap();
            assert_eq!(g.dim, a.dim(), "commutative algebra: HH^0 = A");
        }
    }

    #[test]
    fn delta0_on_commutative_is_zero() {
        let a = presets::preset("f3-trunc-poly").unwrap().algebra_f3().unwrap();
        let d0 = delta_matrix(&a, &a.regular_bimodule(), 0).unwrap();
        assert!(d0.is_zero());
    }

    #[test]
    fn multiplication_cochain_is_a_cocycle() {
        // δ(μ) = 0 restates associativity; on normalized slots the (2,0)
        // cochain (j1, j2) ↦ b_{j1+1} b_{j2+1} is a cocycle.
        let t = f3_tower();
        let alg = t.algebra();
        let ab = alg.abar_dim();
        let m0 = alg.regular_bimodule();
        let mut mu = Cochain::zero(alg.field().clone(), alg.dim(), ab, 2);
        for j1 in 0..ab {
            for j2 in 0..ab {
                let v = alg.basis_product(j1 + 1, j2 + 1).to_vec();
                mu.values.set_column(j1 * ab + j2, &v);
            }
        }
        assert!(delta_apply(alg, &m0, &mu).is_zero());
    }

    #[test]
    fn dual_numbers_cohomology_dims() {
        let t = dual_numbers_tower();
        for n in 0..=4 {
            let g = t.omega_cohomology(n, 0).unwrap();
            assert_eq!(g.dim, 2, "dim HH^{n}(A, A)");
        }
    }

    #[test]
    fn dual_numbers_homology_dims() {
        let t = dual_numbers_tower();
        let alg = t.algebra();
        let m0 = alg.regular_bimodule();
        for n in 0..=4 {
            let g = homology(alg, &m0, n).unwrap();
            assert_eq!(g.dim, 2, "dim HH_{n}(A, A)");
        }
    }

    #[test]
    fn normalized_and_unnormalized_dims_agree() {
        for name in ["f2-dual-numbers", "f2-z2"] {
            let p = presets::preset(name).unwrap();
            let a = p.algebra_fp().unwrap();
            let m0 = a.regular_bimodule();
            for r in 0..=3 {
                let norm = cohomology(&a, &m0, r).unwrap().dim;
                let un = unnormalized_cohomology_dim(&a, &m0, r).unwrap();
                assert_eq!(norm, un, "cohomology degree {r}");
                let norm_h = homology(&a, &m0, r).unwrap().dim;
                let un_h = unnormalized_homology_dim(&a, &m0, r).unwrap();
                assert_eq!(norm_h, un_h, "homology degree {r}");
            }
        }
    }

    #[test]
    fn cohomology_dim_invariant_under_basis_permutation() {
        // permute the basis of the coefficient bimodule; dims must not move
        let t = f3_tower();
        let alg = t.algebra();
        let m0 = alg.regular_bimodule();
        let d = m0.dim;
        let f = alg.field().clone();
        let mut perm = Matrix::zeros(f.clone(), d, d);
        for i in 0..d {
            perm.set((i + 1) % d, i, f.one());
        }
        let perm_inv = perm.inverse().unwrap();
        let conj = |m: &Matrix<crate::field::PrimeField>| perm.mul(m).mul(&perm_inv);
        let m1 = Bimodule {
            dim: d,
            left: m0.left.iter().map(&conj).collect(),
            right: m0.right.iter().map(&conj).collect(),
            label: "A-permuted".into(),
        };
        for r in 0..=3 {
            assert_eq!(
                cohomology(alg, &m0, r).unwrap().dim,
                cohomology(alg, &m1, r).unwrap().dim
            );
        }
    }

    #[test]
    fn size_guard_triggers() {
        let t = f3_tower();
        let err = t.algebra();
        // a degree high enough to overflow the guard on F_3[x]/(x^3)
        let res = delta_matrix(err, &err.regular_bimodule(), 12);
        assert!(matches!(res, Err(Error::SizeGuardExceeded { .. })));
    }

    #[test]
    fn quotient_reduce_vanishes_on_coboundaries() {
        use rand::{Rng, SeedableRng};
        let t = dual_numbers_tower();
        let alg = t.algebra();
        let m0 = alg.regular_bimodule();
        let g = cohomology(alg, &m0, 2).unwrap();
        let d_prev = delta_matrix(alg, &m0, 1).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let v: Vec<u64> = (0..d_prev.cols()).map(|_| rng.gen_range(0..2)).collect();
            let b = d_prev.apply(&v);
            let coords = g.class_coords(&b).unwrap();
            assert!(coords.iter().all(|x| *x == 0));
        }
    }
}
