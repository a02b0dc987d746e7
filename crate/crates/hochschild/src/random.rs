//! Seeded random cochains, cocycles, chains and cycles for identity suites.
//!
//! Over F_p entries are uniform; over Q they are drawn from {-2, ..., 2}.
//! Every suite fixes its seed so failures are reproducible.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Bimodule};
use crate::complexes::{delta_matrix, partial_matrix, Chain, Cochain, Tower};
use crate::error::Result;
use crate::field::Field;
use crate::gerstenhaber::OmegaCochain;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_elem<F: Field>(field: &F, rng: &mut ChaCha8Rng) -> F::Elem {
    let p = field.characteristic();
    if p == 0 {
        field.from_i64(rng.gen_range(-2i64..=2))
    } else {
        field.from_i64(rng.gen_range(0..p) as i64)
    }
}

pub fn random_vec<F: Field>(field: &F, len: usize, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
    (0..len).map(|_| random_elem(field, rng)).collect()
}

/// Random element of the column span of `basis`.
pub fn random_in_span<F: Field>(basis: &Matrix<F>, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
    let coeffs = random_vec(basis.field(), basis.cols(), rng);
    basis.apply(&coeffs)
}

pub fn random_in_subspace<F: Field>(s: &Subspace<F>, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
    random_in_span(&s.as_columns(), rng)
}

pub fn random_omega_cochain<F: Field>(
    tower: &Tower<F>,
    m: usize,
    p: usize,
    rng: &mut ChaCha8Rng,
) -> Result<OmegaCochain<F>> {
    let mut z = OmegaCochain::zero(tower, m, p)?;
    let field = tower.algebra().field().clone();
    for c in 0..z.values.cols() {
        let col = random_vec(&field, z.values.rows(), rng);
        z.values.set_column(c, &col);
    }
    Ok(z)
}

/// Random cocycle in C^m(A, Ω̄^p): a random combination of a kernel basis of
/// the cochain differential.
pub fn random_omega_cocycle<F: Field>(
    tower: &Tower<F>,
    m: usize,
    p: usize,
    rng: &mut ChaCha8Rng,
) -> Result<OmegaCochain<F>> {
    let syz = tower.syzygy(p)?;
    let d = delta_matrix(tower.algebra(), &syz.module, m)?;
    let flat = random_in_span(&d.kernel(), rng);
    OmegaCochain::from_flat(tower, m, p, &flat)
}

pub fn random_cochain<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    m: usize,
    rng: &mut ChaCha8Rng,
) -> Cochain<F> {
    let ab = alg.abar_dim();
    let mut z = Cochain::zero(alg.field().clone(), module.dim, ab, m);
    for c in 0..z.values.cols() {
        let col = random_vec(alg.field(), module.dim, rng);
        z.values.set_column(c, &col);
    }
    z
}

pub fn random_cocycle<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    m: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Cochain<F>> {
    let d = delta_matrix(alg, module, m)?;
    let flat = random_in_span(&d.kernel(), rng);
    Ok(Cochain::from_flat(alg.field().clone(), module.dim, alg.abar_dim(), m, &flat))
}

pub fn random_chain<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    r: usize,
    rng: &mut ChaCha8Rng,
) -> Chain<F> {
    let ab = alg.abar_dim();
    let len = module.dim * ab.pow(r as u32);
    Chain { degree: r, values: random_vec(alg.field(), len, rng) }
}

pub fn random_cycle<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    r: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Chain<F>> {
    if r == 0 {
        return Ok(random_chain(alg, module, 0, rng));
    }
    let d = partial_matrix(alg, module, r)?;
    Ok(Chain { degree: r, values: random_in_span(&d.kernel(), rng) })
}

pub fn random_boundary<F: Field>(
    alg: &Algebra<F>,
    module: &Bimodule<F>,
    r: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Chain<F>> {
    let d = partial_matrix(alg, module, r + 1)?;
    let v = random_vec(alg.field(), d.cols(), rng);
    Ok(Chain { degree: r, values: d.apply(&v) })
}
