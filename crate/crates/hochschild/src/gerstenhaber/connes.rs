//! The Connes boundary operator on Hochschild chains with coefficients A.

use crate::algebra::{decode_index, encode_index, Algebra};
use crate::complexes::check_guard;
use crate::error::Result;
use crate::field::Field;
use crate::matrix::Matrix;

/// Matrix of B: C_r(A, A) -> C_{r+1}(A, A).
///
/// Normalized: B(a_0 ⊗ ... ⊗ a_r) = Σ_i (-1)^{ir} 1 ⊗ a_i ⊗ ... ⊗ a_{i-1},
/// with π applied to the coefficient entry a_0 when it moves into a slot.
/// Unnormalized: includes the second family a_i ⊗ 1 ⊗ a_{i+1} ⊗ ... ⊗ a_{i-1}.
pub fn connes_b_matrix<F: Field>(alg: &Algebra<F>, r: usize, normalized: bool) -> Result<Matrix<F>> {
    if normalized {
        normalized_b(alg, r)
    } else {
        unnormalized_b(alg, r)
    }
}

fn normalized_b<F: Field>(alg: &Algebra<F>, r: usize) -> Result<Matrix<F>> {
    let f = alg.field();
    let d = alg.dim();
    let ab = alg.abar_dim();
    let in_cols = ab.pow(r as u32);
    let out_cols = ab.pow((r + 1) as u32);
    check_guard((d * out_cols).saturating_mul(d * in_cols))?;
    let mut m = Matrix::zeros(f.clone(), d * out_cols, d * in_cols);
    for k in 0..d {
        for jidx in 0..in_cols {
            let col = k * in_cols + jidx;
            let j = decode_index(jidx, r, ab);
            for i in 0..=r {
                let sign = f.sign((i * r) as i64);
                // rotation starting at word position i of (a_0, a_1, ..., a_r)
                let mut slots = Vec::with_capacity(r + 1);
                let mut dead = false;
                for t in 0..=r {
                    let w = (i + t) % (r + 1);
                    if w == 0 {
                        // the coefficient entry a_0 = b_k moves into a slot
                        if k == 0 {
                            dead = true;
                            break;
                        }
                        slots.push(k - 1);
                    } else {
                        slots.push(j[w - 1]);
                    }
                }
                if dead {
                    continue;
                }
                // output coefficient = 1 = basis 0
                m.add_at(encode_index(&slots, ab), col, &sign);
            }
        }
    }
    Ok(m)
}

fn unnormalized_b<F: Field>(alg: &Algebra<F>, r: usize) -> Result<Matrix<F>> {
    let f = alg.field();
    let d = alg.dim();
    let in_cols = d.pow(r as u32);
    let out_cols = d.pow((r + 1) as u32);
    check_guard((d * out_cols).saturating_mul(d * in_cols))?;
    let mut m = Matrix::zeros(f.clone(), d * out_cols, d * in_cols);
    for k in 0..d {
        for jidx in 0..in_cols {
            let col = k * in_cols + jidx;
            let j = decode_index(jidx, r, d);
            let word = |w: usize| if w == 0 { k } else { j[w - 1] };
            for i in 0..=r {
                let sign = f.sign((i * r) as i64);
                // 1 ⊗ a_i ⊗ ... ⊗ a_{i-1}
                let slots: Vec<usize> = (0..=r).map(|t| word((i + t) % (r + 1))).collect();
                m.add_at(encode_index(&slots, d), col, &sign);
                // a_i ⊗ 1 ⊗ a_{i+1} ⊗ ... ⊗ a_{i-1}
                let mut slots2 = Vec::with_capacity(r + 1);
                slots2.push(0); // the unit
                for t in 1..=r {
                    slots2.push(word((i + t) % (r + 1)));
                }
                m.add_at(word(i) * out_cols + encode_index(&slots2, d), col, &sign);
            }
        }
    }
    Ok(m)
}
