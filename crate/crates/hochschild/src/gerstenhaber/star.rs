//! Star products on cochains with tensor-power coefficients A^{⊗p}.
//!
//! Coefficient values are tensors with all factors in A; a factor entering a
//! normalized cochain slot is coerced through π.

use crate::algebra::{decode_index, encode_index, tensor_bimodule, Algebra};
use crate::complexes::{delta_apply, Cochain};
use crate::field::Field;
use super::classical::circ;

/// f ⋆_0 g = (f ⊗ id)(id_{m-1} ⊗ g): g's value head feeds f's last slot,
/// f's value is followed by the tail of g's value.
pub fn star0<F: Field>(
    alg: &Algebra<F>,
    f: &Cochain<F>,
    p: usize,
    g: &Cochain<F>,
    q: usize,
) -> Cochain<F> {
    let fld = alg.field();
    let d = alg.dim();
    let ab = alg.abar_dim();
    let (m, n) = (f.degree, g.degree);
    let p_out = p + q - 1;
    let mut out = Cochain::zero(fld.clone(), d.pow(p_out as u32), ab, m + n - 1);
    let tail_dim = d.pow((q - 1) as u32);
    for jidx in 0..ab.pow((m + n - 1) as u32) {
        let j = decode_index(jidx, m + n - 1, ab);
        let gv = g.value_at(&j[m - 1..m - 1 + n], ab);
        let mut col = vec![fld.zero(); out.values.rows()];
        for (gi, gc) in gv.iter().enumerate() {
            if fld.is_zero(gc) {
                continue;
            }
            let b = decode_index(gi, q, d);
            if b[0] == 0 {
                continue; // unit head dies in f's normalized slot
            }
            let mut fargs = Vec::with_capacity(m);
            fargs.extend_from_slice(&j[..m - 1]);
            fargs.push(b[0] - 1);
            let fv = f.value_at(&fargs, ab);
            let tail = encode_index(&b[1..], d);
            for (fi, fc) in fv.iter().enumerate() {
                if fld.is_zero(fc) {
                    continue;
                }
                let row = fi * tail_dim + tail;
                col[row] = fld.add(&col[row], &fld.mul(gc, fc));
            }
        }
        out.values.set_column(jidx, &col);
    }
    out
}

/// f ⋆_1 g = (id_{q-1} ⊗ f)(g ⊗ id): g's value tail feeds f's first slot,
/// g's value prefix is followed by f's value.
pub fn star1<F: Field>(
    alg: &Algebra<F>,
    f: &Cochain<F>,
    p: usize,
    g: &Cochain<F>,
    q: usize,
) -> Cochain<F> {
    let fld = alg.field();
    let d = alg.dim();
    let ab = alg.abar_dim();
    let (m, n) = (f.degree, g.degree);
    let p_out = p + q - 1;
    let mut out = Cochain::zero(fld.clone(), d.pow(p_out as u32), ab, m + n - 1);
    let f_dim = d.pow(p as u32);
    for jidx in 0..ab.pow((m + n - 1) as u32) {
        let j = decode_index(jidx, m + n - 1, ab);
        let gv = g.value_at(&j[..n], ab);
        let mut col = vec![fld.zero(); out.values.rows()];
        for (gi, gc) in gv.iter().enumerate() {
            if fld.is_zero(gc) {
                continue;
            }
            let b = decode_index(gi, q, d);
            if b[q - 1] == 0 {
                continue;
            }
            let mut fargs = Vec::with_capacity(m);
            fargs.push(b[q - 1] - 1);
            fargs.extend_from_slice(&j[n..]);
            let fv = f.value_at(&fargs, ab);
            let prefix = encode_index(&b[..q - 1], d);
            for (fi, fc) in fv.iter().enumerate() {
                if fld.is_zero(fc) {
                    continue;
                }
                let row = prefix * f_dim + fi;
                col[row] = fld.add(&col[row], &fld.mul(gc, fc));
            }
        }
        out.values.set_column(jidx, &col);
    }
    out
}

/// f ⋆ g = (-1)^{(m-1)(n-1)} f ⋆_0 g + f ⋆_1 g.
pub fn star<F: Field>(
    alg: &Algebra<F>,
    f: &Cochain<F>,
    p: usize,
    g: &Cochain<F>,
    q: usize,
) -> Cochain<F> {
    let fld = alg.field();
    let s = fld.sign(((f.degree as i64) - 1) * ((g.degree as i64) - 1));
    star0(alg, f, p, g, q).scale(&s).add(&star1(alg, f, p, g, q))
}

/// The Lie bracket on Tot C^{*>0}(A, A^{⊗*>0}). For coefficient power 1 the
/// acting side substitutes through the classical circ product.
pub fn star_bracket<F: Field>(
    alg: &Algebra<F>,
    f: &Cochain<F>,
    p: usize,
    g: &Cochain<F>,
    q: usize,
) -> Cochain<F> {
    let fld = alg.field();
    let (m, n) = (f.degree, g.degree);
    let s = fld.sign(((m as i64) - 1) * ((n as i64) - 1));
    match (p, q) {
        (1, 1) => {
            let mreg = alg.regular_bimodule();
            circ(alg, &mreg, f, g).sub(&circ(alg, &mreg, g, f).scale(&s))
        }
        (1, _) => {
            // {f, g} = f ⋆ g - (-1)^{(m-1)(n-1)} g ∘ f
            let coeffs = tensor_bimodule(alg, q);
            star(alg, f, p, g, q).sub(&circ(alg, &coeffs, g, f).scale(&s))
        }
        (_, 1) => {
            // skew-extend the mixed case
            star_bracket(alg, g, q, f, p).scale(&fld.neg(&s))
        }
        _ => star(alg, f, p, g, q).sub(&star(alg, g, q, f, p).scale(&s)),
    }
}

/// Cup product on tensor-power coefficients: merge the last factor of f's
/// value with the head of g's value by multiplication.
pub fn cup_tensor<F: Field>(
    alg: &Algebra<F>,
    f: &Cochain<F>,
    p: usize,
    g: &Cochain<F>,
    q: usize,
) -> Cochain<F> {
    let fld = alg.field();
    let d = alg.dim();
    let ab = alg.abar_dim();
    let (m, n) = (f.degree, g.degree);
    let p_out = p + q - 1;
    let mut out = Cochain::zero(fld.clone(), d.pow(p_out as u32), ab, m + n);
    for jidx in 0..ab.pow((m + n) as u32) {
        let j = decode_index(jidx, m + n, ab);
        let fv = f.value_at(&j[..m], ab);
        let gv = g.value_at(&j[m..], ab);
        let mut col = vec![fld.zero(); out.values.rows()];
        for (fi, fc) in fv.iter().enumerate() {
            if fld.is_zero(fc) {
                continue;
            }
            let a = decode_index(fi, p, d);
            for (gi, gc) in gv.iter().enumerate() {
                if fld.is_zero(gc) {
                    continue;
                }
                let b = decode_index(gi, q, d);
                let merged = alg.basis_product(a[p - 1], b[0]);
                let coeff = fld.mul(fc, gc);
                for (t, x) in merged.iter().enumerate() {
                    if fld.is_zero(x) {
                        continue;
                    }
                    let mut idx = Vec::with_capacity(p_out);
                    idx.extend_from_slice(&a[..p - 1]);
                    idx.push(t);
                    idx.extend_from_slice(&b[1..]);
                    let row = encode_index(&idx, d);
                    col[row] = fld.add(&col[row], &fld.mul(&coeff, x));
                }
            }
        }
        out.values.set_column(jidx, &col);
    }
    out
}

/// (-1)^{m-1} {μ, f} with the genuine multiplication: equals δf. The star
/// side acts by honest left/right multiplication on the outer factors; the
/// circ side substitutes μ's value into f's slots.
pub fn delta_via_mu_star<F: Field>(alg: &Algebra<F>, f: &Cochain<F>, p: usize) -> Cochain<F> {
    let fld = alg.field();
    let ab = alg.abar_dim();
    let m = f.degree;
    let coeffs = tensor_bimodule(alg, p);
    let mut acc = Cochain::zero(fld.clone(), coeffs.dim, ab, m + 1);

    // μ ⋆_0 f with full multiplication: left action by the first slot.
    let mut mu_star0 = Cochain::zero(fld.clone(), coeffs.dim, ab, m + 1);
    for jidx in 0..ab.pow((m + 1) as u32) {
        let j = decode_index(jidx, m + 1, ab);
        let fv = f.value_at(&j[1..], ab);
        let a1 = alg.iota(&unit_slot(alg, j[0]));
        let col = coeffs.act_left(fld, &a1, &fv);
        mu_star0.values.set_column(jidx, &col);
    }
    // μ ⋆_1 f with full multiplication: right action by the last slot.
    let mut mu_star1 = Cochain::zero(fld.clone(), coeffs.dim, ab, m + 1);
    for jidx in 0..ab.pow((m + 1) as u32) {
        let j = decode_index(jidx, m + 1, ab);
        let fv = f.value_at(&j[..m], ab);
        let a_last = alg.iota(&unit_slot(alg, j[m]));
        let col = coeffs.act_right(fld, &fv, &a_last);
        mu_star1.values.set_column(jidx, &col);
    }
    // f ∘ μ: substitution of merged slots.
    let mut f_circ_mu = Cochain::zero(fld.clone(), coeffs.dim, ab, m + 1);
    for i in 1..=m {
        let sgn = fld.sign(i as i64 - 1);
        for jidx in 0..ab.pow((m + 1) as u32) {
            let j = decode_index(jidx, m + 1, ab);
            let merged = alg.abar_product(j[i - 1], j[i]);
            let mut jj = Vec::with_capacity(m);
            jj.extend_from_slice(&j[..i - 1]);
            jj.push(0);
            jj.extend_from_slice(&j[i + 1..]);
            for (s, c) in merged.iter().enumerate() {
                if fld.is_zero(c) {
                    continue;
                }
                jj[i - 1] = s;
                let v = f.value_at(&jj, ab);
                let k = fld.mul(&sgn, c);
                for (t, x) in v.iter().enumerate() {
                    if !fld.is_zero(x) {
                        f_circ_mu.values.add_at(t, jidx, &fld.mul(&k, x));
                    }
                }
            }
        }
    }
    let s_mn = fld.sign(m as i64 - 1);
    // {μ, f} = μ⋆f - (-1)^{(2-1)(m-1)} f∘μ, then scale by (-1)^{m-1}
    let mu_star = mu_star0.scale(&s_mn).add(&mu_star1);
    acc = acc.add(&mu_star.sub(&f_circ_mu.scale(&s_mn)).scale(&s_mn));
    acc
}

fn unit_slot<F: Field>(alg: &Algebra<F>, j: usize) -> Vec<F::Elem> {
    let mut v = vec![alg.field().zero(); alg.abar_dim()];
    v[j] = alg.field().one();
    v
}

/// Differential of a tensor-power-coefficient cochain.
pub fn delta_tensor<F: Field>(alg: &Algebra<F>, f: &Cochain<F>, p: usize) -> Cochain<F> {
    let coeffs = tensor_bimodule(alg, p);
    delta_apply(alg, &coeffs, f)
}
