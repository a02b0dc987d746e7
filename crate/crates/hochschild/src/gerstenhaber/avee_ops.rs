//! Cap and cup products against chains with coefficients in (A⊗A)^A.

use crate::algebra::{decode_index, encode_index, Algebra, AVee};
use crate::complexes::{Chain, Cochain};
use crate::error::Result;
use crate::field::Field;

/// Generalized cap: f ∩ z for f in C^m(A, A) and z in C_n(A, A^∨) with
/// n < m, landing in C^{m-n-1}(A, A). Writing the coefficient value as
/// Σ x_i ⊗ y_i, each y_i is fed (through π) into slot n+1 of f and x_i
/// multiplies the result from the left.
pub fn generalized_cap<F: Field>(
    alg: &Algebra<F>,
    avee: &AVee<F>,
    f: &Cochain<F>,
    z: &Chain<F>,
) -> Cochain<F> {
    let fld = alg.field();
    let d = alg.dim();
    let ab = alg.abar_dim();
    let (m, n) = (f.degree, z.degree);
    assert!(n < m, "generalized cap needs chain degree < cochain degree");
    let out_deg = m - n - 1;
    let mut out = Cochain::zero(fld.clone(), d, ab, out_deg);
    let in_cols = ab.pow(n as u32);
    for s in 0..avee.dim() {
        let w = avee.embed.column(s);
        for jidx in 0..in_cols {
            let zc = &z.values[s * in_cols + jidx];
            if fld.is_zero(zc) {
                continue;
            }
            let j = decode_index(jidx, n, ab);
            for (pair, c) in w.iter().enumerate() {
                if fld.is_zero(c) {
                    continue;
                }
                let (x, y) = (pair / d, pair % d);
                if y == 0 {
                    continue; // π kills the unit
                }
                let coeff = fld.mul(zc, c);
                for bidx in 0..ab.pow(out_deg as u32) {
                    let b = decode_index(bidx, out_deg, ab);
                    let mut fargs = Vec::with_capacity(m);
                    fargs.extend_from_slice(&j);
                    fargs.push(y - 1);
                    fargs.extend_from_slice(&b);
                    let fv = f.value_at(&fargs, ab);
                    let acted = alg.left_mult_matrix(x).apply(&fv);
                    for (t, v) in acted.iter().enumerate() {
                        if !fld.is_zero(v) {
                            out.values.add_at(t, bidx, &fld.mul(&coeff, v));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Cap landing in chains: f ∩ z for f in C^m(A, A) and z in C_n(A, A^∨)
/// with n >= m, giving Σ (x_i f(a_1..a_m) ⊗ y_i) ⊗ a_{m+1}..a_n in
/// C_{n-m}(A, A^∨).
pub fn cap_into_chain<F: Field>(
    alg: &Algebra<F>,
    avee: &AVee<F>,
    f: &Cochain<F>,
    z: &Chain<F>,
) -> Result<Chain<F>> {
    let fld = alg.field();
    let d = alg.dim();
    let ab = alg.abar_dim();
    let (m, n) = (f.degree, z.degree);
    assert!(n >= m, "cap_into_chain needs chain degree >= cochain degree");
    let out_deg = n - m;
    let in_cols = ab.pow(n as u32);
    let out_cols = ab.pow(out_deg as u32);
    let mut out = Chain::zero(fld, avee.dim(), ab, out_deg);
    for s in 0..avee.dim() {
        let w = avee.embed.column(s);
        for jidx in 0..in_cols {
            let zc = &z.values[s * in_cols + jidx];
            if fld.is_zero(zc) {
                continue;
            }
            let j = decode_index(jidx, n, ab);
            let fv = f.value_at(&j[..m], ab);
            // new coefficient value Σ (x_i · fv) ⊗ y_i = (rightmult_fv ⊗ id) w
            let mut new_val = vec![fld.zero(); d * d];
            for (pair, c) in w.iter().enumerate() {
                if fld.is_zero(c) {
                    continue;
                }
                let (x, y) = (pair / d, pair % d);
                // x · fv expanded over the basis
                for (u, fc) in fv.iter().enumerate() {
                    if fld.is_zero(fc) {
                        continue;
                    }
                    let prod = alg.basis_product(x, u);
                    let k = fld.mul(c, fc);
                    for (t, pv) in prod.iter().enumerate() {
                        if !fld.is_zero(pv) {
                            fld.add_scaled(&mut new_val[t * d + y], &k, pv);
                        }
                    }
                }
            }
            let coords = avee.retract(&new_val)?;
            let tail = encode_index(&j[m..], ab);
            for (t, v) in coords.iter().enumerate() {
                if !fld.is_zero(v) {
                    let idx = t * out_cols + tail;
                    out.values[idx] = fld.add(&out.values[idx], &fld.mul(zc, v));
                }
            }
        }
    }
    Ok(out)
}

/// Generalized cup on chains with coefficients in A^∨:
/// (Σ x_i⊗y_i ⊗ a_1..a_m) ∪ (Σ x'_j⊗y'_j ⊗ b_1..b_n)
///   = Σ (x_i ⊗ y'_j y_i) ⊗ a_1..a_m ⊗ x'_j ⊗ b_1..b_n.
pub fn generalized_cup<F: Field>(
    alg: &Algebra<F>,
    avee: &AVee<F>,
    u: &Chain<F>,
    v: &Chain<F>,
) -> Result<Chain<F>> {
    let fld = alg.field();
    let d = alg.dim();
    let ab = alg.abar_dim();
    let (m, n) = (u.degree, v.degree);
    let out_deg = m + n + 1;
    let u_cols = ab.pow(m as u32);
    let v_cols = ab.pow(n as u32);
    let out_cols = ab.pow(out_deg as u32);
    let mut out = Chain::zero(fld, avee.dim(), ab, out_deg);

    // precompute, per (basis s of A^∨, basis v' of A), the A^∨ coordinates of
    // (id ⊗ leftmult_{v'}) applied to the embedded s
    let mut acted: Vec<Vec<Vec<F::Elem>>> = Vec::with_capacity(avee.dim());
    for s in 0..avee.dim() {
        let w = avee.embed.column(s);
        let mut per_vp = Vec::with_capacity(d);
        for vp in 0..d {
            let mut img = vec![fld.zero(); d * d];
            for (pair, c) in w.iter().enumerate() {
                if fld.is_zero(c) {
                    continue;
                }
                let (x, y) = (pair / d, pair % d);
                let prod = alg.basis_product(vp, y);
                for (t, pv) in prod.iter().enumerate() {
                    if !fld.is_zero(pv) {
                        fld.add_scaled(&mut img[x * d + t], c, pv);
                    }
                }
            }
            per_vp.push(avee.retract(&img)?);
        }
        acted.push(per_vp);
    }

    for s in 0..avee.dim() {
        for jid in 0..u_cols {
            let uc = &u.values[s * u_cols + jid];
            if fld.is_zero(uc) {
                continue;
            }
            let j = decode_index(jid, m, ab);
            for s2 in 0..avee.dim() {
                let w2 = avee.embed.column(s2);
                for kid in 0..v_cols {
                    let vc = &v.values[s2 * v_cols + kid];
                    if fld.is_zero(vc) {
                        continue;
                    }
                    let k = decode_index(kid, n, ab);
                    let base = fld.mul(uc, vc);
                    for (pair, c2) in w2.iter().enumerate() {
                        if fld.is_zero(c2) {
                            continue;
                        }
                        let (xp, yp) = (pair / d, pair % d);
                        if xp == 0 {
                            continue; // x'_j lands in a normalized slot
                        }
                        let coords = &acted[s][yp];
                        let mut slots = Vec::with_capacity(out_deg);
                        slots.extend_from_slice(&j);
                        slots.push(xp - 1);
                        slots.extend_from_slice(&k);
                        let col = encode_index(&slots, ab);
                        let coeff = fld.mul(&base, c2);
                        for (t, x) in coords.iter().enumerate() {
                            if !fld.is_zero(x) {
                                let idx = t * out_cols + col;
                                out.values[idx] = fld.add(&out.values[idx], &fld.mul(&coeff, x));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
