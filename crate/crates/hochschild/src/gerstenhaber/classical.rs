//! Classical cup, circ, bracket and cap on normalized cochains and chains.

use crate::algebra::{decode_index, encode_index, Algebra, Bimodule};
use crate::complexes::{Chain, Cochain};
use crate::field::Field;

/// The unit 0-cochain with values in A.
pub fn unit_cochain<F: Field>(alg: &Algebra<F>) -> Cochain<F> {
    let mut c = Cochain::zero(alg.field().clone(), alg.dim(), alg.abar_dim(), 0);
    c.values.set_column(0, &alg.unit());
    c
}

/// f ∪ g for f in C^m(A, A) and g in C^n(A, M): the value of f acts on the
/// value of g from the left.
pub fn cup_left<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    f: &Cochain<F>,
    g: &Cochain<F>,
) -> Cochain<F> {
    let fld = alg.field();
    let ab = alg.abar_dim();
    let (m, n) = (f.degree, g.degree);
    let mut out = Cochain::zero(fld.clone(), module.dim, ab, m + n);
    for jidx in 0..ab.pow((m + n) as u32) {
        let j = decode_index(jidx, m + n, ab);
        let fv = f.value_at(&j[..m], ab);
        let gv = g.value_at(&j[m..], ab);
        let col = module.act_left(fld, &fv, &gv);
        out.values.set_column(jidx, &col);
    }
    out
}

/// g ∪ f for g in C^n(A, M) and f in C^m(A, A): right action on g's value.
pub fn cup_right<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    g: &Cochain<F>,
    f: &Cochain<F>,
) -> Cochain<F> {
    let fld = alg.field();
    let ab = alg.abar_dim();
    let (n, m) = (g.degree, f.degree);
    let mut out = Cochain::zero(fld.clone(), module.dim, ab, m + n);
    for jidx in 0..ab.pow((m + n) as u32) {
        let j = decode_index(jidx, m + n, ab);
        let gv = g.value_at(&j[..n], ab);
        let fv = f.value_at(&j[n..], ab);
        let col = module.act_right(fld, &gv, &fv);
        out.values.set_column(jidx, &col);
    }
    out
}

/// g ∘_i f: substitute the value of f (an element of A, coerced through π)
/// into the i-th slot of g. 1 <= i <= g.degree.
pub fn circ_i<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    g: &Cochain<F>,
    f: &Cochain<F>,
    i: usize,
) -> Cochain<F> {
    let fld = alg.field();
    let ab = alg.abar_dim();
    let (n, m) = (g.degree, f.degree);
    assert!(i >= 1 && i <= n);
    let mut out = Cochain::zero(fld.clone(), module.dim, ab, m + n - 1);
    for jidx in 0..ab.pow((m + n - 1) as u32) {
        let j = decode_index(jidx, m + n - 1, ab);
        let fv = f.value_at(&j[i - 1..i - 1 + m], ab);
        let mut col = vec![fld.zero(); module.dim];
        for t in 1..alg.dim() {
            if fld.is_zero(&fv[t]) {
                continue;
            }
            let mut gargs = Vec::with_capacity(n);
            gargs.extend_from_slice(&j[..i - 1]);
            gargs.push(t - 1);
            gargs.extend_from_slice(&j[i - 1 + m..]);
            let gv = g.value_at(&gargs, ab);
            for (s, x) in gv.iter().enumerate() {
                fld.add_scaled(&mut col[s], &fv[t], x);
            }
        }
        out.values.set_column(jidx, &col);
    }
    out
}

/// g ∘ f = Σ_i (-1)^{(m-1)(i-1)} g ∘_i f; zero when g has degree 0.
pub fn circ<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    g: &Cochain<F>,
    f: &Cochain<F>,
) -> Cochain<F> {
    let fld = alg.field();
    let (n, m) = (g.degree, f.degree);
    if n == 0 {
        return Cochain::zero(fld.clone(), module.dim, alg.abar_dim(), m.saturating_sub(1));
    }
    let mut acc = Cochain::zero(fld.clone(), module.dim, alg.abar_dim(), m + n - 1);
    for i in 1..=n {
        let term = circ_i(alg, module, g, f, i);
        let s = fld.sign(((m as i64) - 1) * ((i as i64) - 1));
        acc = acc.add(&term.scale(&s));
    }
    acc
}

/// The Gerstenhaber bracket [f, g] = f∘g - (-1)^{(m-1)(n-1)} g∘f on C^*(A, A).
pub fn classical_bracket<F: Field>(alg: &Algebra<F>, f: &Cochain<F>, g: &Cochain<F>) -> Cochain<F> {
    let fld = alg.field();
    let module = alg.regular_bimodule();
    let fg = circ(alg, &module, f, g);
    let gf = circ(alg, &module, g, f);
    let s = fld.sign(((f.degree as i64) - 1) * ((g.degree as i64) - 1));
    fg.sub(&gf.scale(&s))
}

/// Cap product z ∩ α = (-1)^{rp} (m · α(a_1..a_p)) ⊗ a_{p+1}..a_r for a
/// chain z in C_r(A, M) and α in C^p(A, A).
pub fn cap<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    z: &Chain<F>,
    alpha: &Cochain<F>,
) -> Chain<F> {
    let fld = alg.field();
    let ab = alg.abar_dim();
    let (r, p) = (z.degree, alpha.degree);
    assert!(r >= p, "cap needs chain degree >= cochain degree");
    let out_cols = ab.pow((r - p) as u32);
    let in_cols = ab.pow(r as u32);
    let mut out = Chain::zero(fld, module.dim, ab, r - p);
    let sgn = fld.sign((r * p) as i64);
    for k in 0..module.dim {
        for jidx in 0..in_cols {
            let c = &z.values[k * in_cols + jidx];
            if fld.is_zero(c) {
                continue;
            }
            let j = decode_index(jidx, r, ab);
            let av = alpha.value_at(&j[..p], ab);
            let mut e = vec![fld.zero(); module.dim];
            e[k] = fld.one();
            let acted = module.act_right(fld, &e, &av);
            let tail = encode_index(&j[p..], ab);
            let coeff = fld.mul(&sgn, c);
            for (t, x) in acted.iter().enumerate() {
                if !fld.is_zero(x) {
                    let idx = t * out_cols + tail;
                    out.values[idx] = fld.add(&out.values[idx], &fld.mul(&coeff, x));
                }
            }
        }
    }
    out
}
