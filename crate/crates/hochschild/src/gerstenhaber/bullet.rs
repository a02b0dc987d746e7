//! Bullet products and the bracket on syzygy-valued cochains.
//!
//! A bigraded cochain of bidegree (m, p) is a map Abar^{⊗m} -> Ω̄^p with
//! values stored in form coordinates A ⊗ Abar^{⊗p}. In these coordinates
//! every operator below is a splice: value factors are threaded into slots
//! and output positions directly, with the projection π applied to any
//! head factor that lands in a normalized position (where it kills unit
//! components). Appending the algebra unit and taking the bar differential
//! is the identification of A ⊗ Abar^{⊗p} with the p-th syzygy, so it never
//! appears explicitly.

use crate::algebra::{decode_index, encode_index};
use crate::complexes::{check_guard, delta_apply, Cochain, Tower};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// An element of C^m(A, Ω̄^p): (d · abar^p) x (abar^m) matrix in form
/// coordinates, value index = head * abar^p + bars.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaCochain<F: Field> {
    pub m: usize,
    pub p: usize,
    pub values: Matrix<F>,
}

impl<F: Field> OmegaCochain<F> {
    pub fn zero(tower: &Tower<F>, m: usize, p: usize) -> Result<Self> {
        let alg = tower.algebra();
        let ab = alg.abar_dim();
        let form_dim = alg.dim() * ab.pow(p as u32);
        check_guard(form_dim.saturating_mul(ab.pow(m as u32)))?;
        Ok(OmegaCochain {
            m,
            p,
            values: Matrix::zeros(alg.field().clone(), form_dim, ab.pow(m as u32)),
        })
    }

    pub fn value_at(&self, slots: &[usize], abar: usize) -> Vec<F::Elem> {
        debug_assert_eq!(slots.len(), self.m);
        self.values.column(encode_index(slots, abar))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.m, self.p), (other.m, other.p), "bidegree mismatch");
        OmegaCochain { m: self.m, p: self.p, values: self.values.add(&other.values) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.m, self.p), (other.m, other.p), "bidegree mismatch");
        OmegaCochain { m: self.m, p: self.p, values: self.values.sub(&other.values) }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        OmegaCochain { m: self.m, p: self.p, values: self.values.scale(c) }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    pub fn flatten(&self) -> Vec<F::Elem> {
        let mut out = Vec::with_capacity(self.values.rows() * self.values.cols());
        for r in 0..self.values.rows() {
            out.extend(self.values.row(r).iter().cloned());
        }
        out
    }

    pub fn from_flat(tower: &Tower<F>, m: usize, p: usize, flat: &[F::Elem]) -> Result<Self> {
        let mut z = Self::zero(tower, m, p)?;
        let cols = z.values.cols();
        assert_eq!(flat.len(), z.values.rows() * cols);
        for r in 0..z.values.rows() {
            for c in 0..cols {
                z.values.set(r, c, flat[r * cols + c].clone());
            }
        }
        Ok(z)
    }

    pub fn as_cochain(&self) -> Cochain<F> {
        Cochain { degree: self.m, values: self.values.clone() }
    }

    /// A (0, 0)-cochain from an algebra element; combined with `theta` this
    /// is how degree-0 classes enter the bracket apparatus.
    pub fn from_algebra_element(tower: &Tower<F>, a: &[F::Elem]) -> Result<Self> {
        let mut z = Self::zero(tower, 0, 0)?;
        z.values.set_column(0, a);
        Ok(z)
    }
}

/// Differential of the bigraded complex on row p: the normalized cochain
/// differential scaled by the row sign (-1)^p. With this totalization
/// convention the differential coincides with bracketing against -μ and the
/// graded Leibniz rule holds in its standard form. Kernels, images and all
/// cohomology groups agree with the unsigned differential.
pub fn omega_delta<F: Field>(tower: &Tower<F>, f: &OmegaCochain<F>) -> Result<OmegaCochain<F>> {
    let syz = tower.syzygy(f.p)?;
    let out = delta_apply(tower.algebra(), &syz.module, &f.as_cochain());
    let sgn = tower.algebra().field().sign(f.p as i64);
    Ok(OmegaCochain { m: f.m + 1, p: f.p, values: out.values.scale(&sgn) })
}

fn decode_form(idx: usize, abar: usize, p: usize) -> (usize, Vec<usize>) {
    let tail = abar.pow(p as u32);
    (idx / tail, decode_index(idx % tail, p, abar))
}

/// f •_i g for 1 <= i <= f.m or -g.p <= i <= -1.
pub fn bullet_i<F: Field>(
    tower: &Tower<F>,
    f: &OmegaCochain<F>,
    g: &OmegaCochain<F>,
    i: i64,
) -> Result<OmegaCochain<F>> {
    if i >= 1 && (i as usize) <= f.m {
        bullet_pos(tower, f, g, i as usize)
    } else if i <= -1 && (-i as usize) <= g.p {
        bullet_neg(tower, f, g, (-i) as usize)
    } else {
        Err(Error::IndexOutOfRange { index: i, what: "bullet insertion position" })
    }
}

fn bullet_pos<F: Field>(
    tower: &Tower<F>,
    f: &OmegaCochain<F>,
    g: &OmegaCochain<F>,
    i: usize,
) -> Result<OmegaCochain<F>> {
    let alg = tower.algebra();
    let fld = alg.field();
    let ab = alg.abar_dim();
    let m_out = f.m + g.m - 1;
    let p_out = f.p + g.p;
    let mut out = OmegaCochain::zero(tower, m_out, p_out)?;
    let tail_out = ab.pow(p_out as u32);
    for jidx in 0..ab.pow(m_out as u32) {
        let j = decode_index(jidx, m_out, ab);
        let prefix = &j[..i - 1];
        let gargs = &j[i - 1..i - 1 + g.m];
        let suffix = &j[i - 1 + g.m..];
        let gcol = g.value_at(gargs, ab);
        for (gi, gc) in gcol.iter().enumerate() {
            if fld.is_zero(gc) {
                continue;
            }
            let (b0, bbars) = decode_form(gi, ab, g.p);
            if b0 == 0 {
                // the head of g's value feeds a normalized slot of f
                continue;
            }
            let mut stream = Vec::with_capacity(bbars.len() + suffix.len());
            stream.extend_from_slice(&bbars);
            stream.extend_from_slice(suffix);
            let take = f.m - i;
            let mut fargs = Vec::with_capacity(f.m);
            fargs.extend_from_slice(prefix);
            fargs.push(b0 - 1);
            fargs.extend_from_slice(&stream[..take]);
            let rest = &stream[take..];
            debug_assert_eq!(rest.len(), g.p);
            let fcol = f.value_at(&fargs, ab);
            for (fi, fc) in fcol.iter().enumerate() {
                if fld.is_zero(fc) {
                    continue;
                }
                let (c0, cbars) = decode_form(fi, ab, f.p);
                let mut bars = Vec::with_capacity(p_out);
                bars.extend_from_slice(&cbars);
                bars.extend_from_slice(rest);
                let row = c0 * tail_out + encode_index(&bars, ab);
                out.values.add_at(row, jidx, &fld.mul(gc, fc));
            }
        }
    }
    Ok(out)
}

fn bullet_neg<F: Field>(
    tower: &Tower<F>,
    f: &OmegaCochain<F>,
    g: &OmegaCochain<F>,
    jneg: usize,
) -> Result<OmegaCochain<F>> {
    let alg = tower.algebra();
    let fld = alg.field();
    let ab = alg.abar_dim();
    let m_out = f.m + g.m - 1;
    let p_out = f.p + g.p;
    let mut out = OmegaCochain::zero(tower, m_out, p_out)?;
    let tail_out = ab.pow(p_out as u32);
    for jidx in 0..ab.pow(m_out as u32) {
        let j = decode_index(jidx, m_out, ab);
        let gargs = &j[..g.m];
        let suffix = &j[g.m..];
        let gcol = g.value_at(gargs, ab);
        for (gi, gc) in gcol.iter().enumerate() {
            if fld.is_zero(gc) {
                continue;
            }
            let (b0, bbars) = decode_form(gi, ab, g.p);
            let mut stream = Vec::with_capacity(g.p - jneg + 1 + suffix.len());
            stream.extend_from_slice(&bbars[jneg - 1..]);
            stream.extend_from_slice(suffix);
            let fargs = &stream[..f.m];
            let rest = &stream[f.m..];
            debug_assert_eq!(rest.len(), g.p - jneg);
            let fcol = f.value_at(fargs, ab);
            for (fi, fc) in fcol.iter().enumerate() {
                if fld.is_zero(fc) {
                    continue;
                }
                let (c0, cbars) = decode_form(fi, ab, f.p);
                if c0 == 0 {
                    // the head of f's value lands in a bar position
                    continue;
                }
                let mut bars = Vec::with_capacity(p_out);
                bars.extend_from_slice(&bbars[..jneg - 1]);
                bars.push(c0 - 1);
                bars.extend_from_slice(&cbars);
                bars.extend_from_slice(rest);
                let row = b0 * tail_out + encode_index(&bars, ab);
                out.values.add_at(row, jidx, &fld.mul(gc, fc));
            }
        }
    }
    Ok(out)
}

fn sign_r(m: i64, p: i64, n: i64, q: i64, i: i64) -> i64 {
    let _ = m;
    p + q + (i - 1) * (q - n - 1)
}

fn sign_s(m: i64, p: i64, n: i64, q: i64, i: i64) -> i64 {
    let _ = n;
    p + q + i * (p - m - 1)
}

/// The weighted sum of all insertion positions.
pub fn bullet<F: Field>(tower: &Tower<F>, f: &OmegaCochain<F>, g: &OmegaCochain<F>) -> Result<OmegaCochain<F>> {
    if f.m == 0 || g.m == 0 {
        return Err(Error::DegreeMismatch(
            "bullet requires cochain degree >= 1 on both sides; route degree 0 through theta".into(),
        ));
    }
    let fld = tower.algebra().field().clone();
    let (m, p, n, q) = (f.m as i64, f.p as i64, g.m as i64, g.p as i64);
    let mut acc = OmegaCochain::zero(tower, f.m + g.m - 1, f.p + g.p)?;
    for i in 1..=f.m {
        let term = bullet_pos(tower, f, g, i)?;
        let s = fld.sign(sign_r(m, p, n, q, i as i64));
        acc = acc.add(&term.scale(&s));
    }
    for i in 1..=g.p {
        let term = bullet_neg(tower, f, g, i)?;
        let s = fld.sign(sign_s(m, p, n, q, i as i64));
        acc = acc.add(&term.scale(&s));
    }
    Ok(acc)
}

/// [f, g] = f•g - (-1)^{(m-p-1)(n-q-1)} g•f.
pub fn bracket_omega<F: Field>(
    tower: &Tower<F>,
    f: &OmegaCochain<F>,
    g: &OmegaCochain<F>,
) -> Result<OmegaCochain<F>> {
    let fld = tower.algebra().field().clone();
    let fg = bullet(tower, f, g)?;
    let gf = bullet(tower, g, f)?;
    let e = (f.m as i64 - f.p as i64 - 1) * (g.m as i64 - g.p as i64 - 1);
    Ok(fg.sub(&gf.scale(&fld.sign(e))))
}

/// Connecting map: a (m, p)-cochain to an (m+1, p+1)-cochain. In form
/// coordinates this appends the new slot as a bar factor, scaled by (-1)^p.
pub fn theta<F: Field>(tower: &Tower<F>, f: &OmegaCochain<F>) -> Result<OmegaCochain<F>> {
    let alg = tower.algebra();
    let fld = alg.field();
    let ab = alg.abar_dim();
    let mut out = OmegaCochain::zero(tower, f.m + 1, f.p + 1)?;
    let tail_out = ab.pow((f.p + 1) as u32);
    let sgn = fld.sign(f.p as i64);
    for jidx in 0..ab.pow(f.m as u32) {
        let fcol = f.values.column(jidx);
        for l in 0..ab {
            let out_col = jidx * ab + l;
            for (fi, fc) in fcol.iter().enumerate() {
                if fld.is_zero(fc) {
                    continue;
                }
                let (c0, cbars) = decode_form(fi, ab, f.p);
                let mut bars = Vec::with_capacity(f.p + 1);
                bars.extend_from_slice(&cbars);
                bars.push(l);
                out.values
                    .add_at(c0 * tail_out + encode_index(&bars, ab), out_col, &fld.mul(&sgn, fc));
            }
        }
    }
    Ok(out)
}

/// Cup product C^{m,p} x C^{n,q} -> C^{m+n, p+q}: splice the two values,
/// merging f's final factor into the head of g's value by multiplication.
pub fn cup_omega<F: Field>(
    tower: &Tower<F>,
    f: &OmegaCochain<F>,
    g: &OmegaCochain<F>,
) -> Result<OmegaCochain<F>> {
    let alg = tower.algebra();
    let fld = alg.field();
    let ab = alg.abar_dim();
    let m_out = f.m + g.m;
    let p_out = f.p + g.p;
    let mut out = OmegaCochain::zero(tower, m_out, p_out)?;
    let tail_out = ab.pow(p_out as u32);
    for jidx in 0..ab.pow(m_out as u32) {
        let j = decode_index(jidx, m_out, ab);
        let fcol = f.value_at(&j[..f.m], ab);
        let gcol = g.value_at(&j[f.m..], ab);
        for (fi, fc) in fcol.iter().enumerate() {
            if fld.is_zero(fc) {
                continue;
            }
            let (c0, cbars) = decode_form(fi, ab, f.p);
            for (gi, gc) in gcol.iter().enumerate() {
                if fld.is_zero(gc) {
                    continue;
                }
                let (b0, bbars) = decode_form(gi, ab, g.p);
                let coeff = fld.mul(fc, gc);
                if f.p == 0 {
                    // A-valued f acts on the head of g's value
                    let prod = alg.basis_product(c0, b0);
                    for (t, x) in prod.iter().enumerate() {
                        if fld.is_zero(x) {
                            continue;
                        }
                        let row = t * tail_out + encode_index(&bbars, ab);
                        out.values.add_at(row, jidx, &fld.mul(&coeff, x));
                    }
                } else {
                    // merge f's last bar with the head of g's value; the
                    // product re-enters a bar position through π
                    let last = cbars[f.p - 1];
                    let prod = alg.basis_product(last + 1, b0);
                    for t in 1..alg.dim() {
                        let x = &prod[t];
                        if fld.is_zero(x) {
                            continue;
                        }
                        let mut bars = Vec::with_capacity(p_out);
                        bars.extend_from_slice(&cbars[..f.p - 1]);
                        bars.push(t - 1);
                        bars.extend_from_slice(&bbars);
                        let row = c0 * tail_out + encode_index(&bars, ab);
                        out.values.add_at(row, jidx, &fld.mul(&coeff, x));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// [f, -μ] with μ the genuine multiplication (not normalized): equals the
/// cochain differential of f. Exposed for identity checks.
pub fn bracket_with_mu<F: Field>(tower: &Tower<F>, f: &OmegaCochain<F>) -> Result<OmegaCochain<F>> {
    let alg = tower.algebra();
    let fld = alg.field();
    let ab = alg.abar_dim();
    let (m, p) = (f.m, f.p);
    let mut acc = OmegaCochain::zero(tower, m + 1, p)?;
    let tail = ab.pow(p as u32);

    // Σ_i (-1)^{p+i} f •_i μ : μ's value enters slot i of f through π.
    for i in 1..=m {
        let sgn = fld.sign((p + i) as i64);
        let mut term = OmegaCochain::zero(tower, m + 1, p)?;
        for jidx in 0..ab.pow((m + 1) as u32) {
            let j = decode_index(jidx, m + 1, ab);
            let merged = alg.abar_product(j[i - 1], j[i]);
            let mut jj = Vec::with_capacity(m);
            jj.extend_from_slice(&j[..i - 1]);
            jj.push(0);
            jj.extend_from_slice(&j[i + 1..]);
            let mut col = vec![fld.zero(); term.values.rows()];
            for (s, c) in merged.iter().enumerate() {
                if fld.is_zero(c) {
                    continue;
                }
                jj[i - 1] = s;
                let v = f.value_at(&jj, ab);
                for (t, x) in v.iter().enumerate() {
                    fld.add_scaled(&mut col[t], c, x);
                }
            }
            term.values.set_column(jidx, &col);
        }
        acc = acc.add(&term.scale(&sgn));
    }

    // (-1)^{m-1} μ •_1 f : merge the head of f's value into its first bar
    // (or into the trailing slot when p = 0), with full multiplication.
    {
        let sgn = fld.sign((m as i64) - 1);
        let mut term = OmegaCochain::zero(tower, m + 1, p)?;
        for jidx in 0..ab.pow((m + 1) as u32) {
            let j = decode_index(jidx, m + 1, ab);
            let fcol = f.value_at(&j[..m], ab);
            let mut col = vec![fld.zero(); term.values.rows()];
            for (fi, fc) in fcol.iter().enumerate() {
                if fld.is_zero(fc) {
                    continue;
                }
                let (c0, cbars) = decode_form(fi, ab, p);
                if p == 0 {
                    let u = alg.basis_product(c0, j[m] + 1);
                    for (t, x) in u.iter().enumerate() {
                        fld.add_scaled(&mut col[t], &fld.mul(fc, x), &fld.one());
                    }
                } else {
                    let u = alg.basis_product(c0, cbars[0] + 1);
                    for (t, x) in u.iter().enumerate() {
                        if fld.is_zero(x) {
                            continue;
                        }
                        let mut bars = cbars[1..].to_vec();
                        bars.push(j[m]);
                        col[t * tail + encode_index(&bars, ab)] =
                            fld.add(&col[t * tail + encode_index(&bars, ab)], &fld.mul(fc, x));
                    }
                }
            }
            term.values.set_column(jidx, &col);
        }
        acc = acc.add(&term.scale(&sgn));
    }

    // (-1)^p μ •_2 f : genuine left action by the first slot.
    {
        let sgn = fld.sign(p as i64);
        let mut term = OmegaCochain::zero(tower, m + 1, p)?;
        for jidx in 0..ab.pow((m + 1) as u32) {
            let j = decode_index(jidx, m + 1, ab);
            let fcol = f.value_at(&j[1..], ab);
            let mut col = vec![fld.zero(); term.values.rows()];
            for (fi, fc) in fcol.iter().enumerate() {
                if fld.is_zero(fc) {
                    continue;
                }
                let (c0, cbars) = decode_form(fi, ab, p);
                let u = alg.basis_product(j[0] + 1, c0);
                for (t, x) in u.iter().enumerate() {
                    if fld.is_zero(x) {
                        continue;
                    }
                    let row = t * tail + encode_index(&cbars, ab);
                    col[row] = fld.add(&col[row], &fld.mul(fc, x));
                }
            }
            term.values.set_column(jidx, &col);
        }
        acc = acc.add(&term.scale(&sgn));
    }

    // Σ_i (-1)^{m-1+i} μ •_{-i} f : merge two adjacent bar factors of f's
    // value (or the last bar with the trailing slot), landing through π.
    for i in 1..=p {
        let sgn = fld.sign((m as i64) - 1 + i as i64);
        let mut term = OmegaCochain::zero(tower, m + 1, p)?;
        for jidx in 0..ab.pow((m + 1) as u32) {
            let j = decode_index(jidx, m + 1, ab);
            let fcol = f.value_at(&j[..m], ab);
            let mut col = vec![fld.zero(); term.values.rows()];
            for (fi, fc) in fcol.iter().enumerate() {
                if fld.is_zero(fc) {
                    continue;
                }
                let (c0, cbars) = decode_form(fi, ab, p);
                let merged = if i < p {
                    alg.abar_product(cbars[i - 1], cbars[i])
                } else {
                    alg.abar_product(cbars[p - 1], j[m])
                };
                for (s, x) in merged.iter().enumerate() {
                    if fld.is_zero(x) {
                        continue;
                    }
                    let mut bars = Vec::with_capacity(p);
                    if i < p {
                        bars.extend_from_slice(&cbars[..i - 1]);
                        bars.push(s);
                        bars.extend_from_slice(&cbars[i + 1..]);
                        bars.push(j[m]);
                    } else {
                        bars.extend_from_slice(&cbars[..p - 1]);
                        bars.push(s);
                    }
                    let row = c0 * tail + encode_index(&bars, ab);
                    col[row] = fld.add(&col[row], &fld.mul(fc, x));
                }
            }
            term.values.set_column(jidx, &col);
        }
        acc = acc.add(&term.scale(&sgn));
    }

    Ok(acc)
}
