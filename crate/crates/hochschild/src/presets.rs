//! Built-in desk-scale algebras with their standard symmetric forms.

use crate::algebra::{Algebra, AlgebraDefinition, ScalarRepr};
use crate::error::{Error, Result};
use crate::field::{PrimeField, Rationals};
use crate::matrix::Matrix;

#[derive(Clone, Debug)]
pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    pub definition: AlgebraDefinition,
    pub symmetric: bool,
    pub self_injective: bool,
    pub finite_global_dimension: bool,
}

impl Preset {
    pub fn characteristic(&self) -> u64 {
        self.definition.field.characteristic
    }

    pub fn algebra_f2(&self) -> Result<Algebra<PrimeField>> {
        assert_eq!(self.characteristic(), 2);
        self.definition.build(PrimeField::new(2)?)
    }

    pub fn algebra_f3(&self) -> Result<Algebra<PrimeField>> {
        assert_eq!(self.characteristic(), 3);
        self.definition.build(PrimeField::new(3)?)
    }

    pub fn algebra_fp(&self) -> Result<Algebra<PrimeField>> {
        self.definition.build(PrimeField::new(self.characteristic())?)
    }

    pub fn form_fp(&self) -> Result<Option<Matrix<PrimeField>>> {
        let f = PrimeField::new(self.characteristic())?;
        self.definition.symmetric_form_matrix(&f)
    }

    /// The same structure constants over Q (handy for sign-sensitive tests).
    pub fn algebra_q(&self) -> Result<Algebra<Rationals>> {
        let mut def = self.definition.clone();
        def.field.characteristic = 0;
        def.build(Rationals)
    }
}

fn sc(entries: &[(usize, usize, usize, i64)]) -> Vec<(usize, usize, usize, ScalarRepr)> {
    entries
        .iter()
        .map(|&(i, j, k, v)| (i, j, k, ScalarRepr::Int(v)))
        .collect()
}

fn ints(v: &[i64]) -> Vec<ScalarRepr> {
    v.iter().map(|&n| ScalarRepr::Int(n)).collect()
}

fn form(rows: &[&[i64]]) -> Option<Vec<Vec<ScalarRepr>>> {
    Some(rows.iter().map(|r| ints(r)).collect())
}

/// Truncated polynomial algebra k[x]/(x^n) over F_p with the standard
/// symmetric form <x^i, x^j> = [i + j = n-1].
fn trunc_poly(p: u64, n: usize) -> AlgebraDefinition {
    let mut entries = Vec::new();
    let mut basis = Vec::new();
    for i in 0..n {
        basis.push(if i == 0 { "1".to_string() } else { format!("x^{i}") });
        for j in 0..n {
            if i + j < n {
                entries.push((i, j, i + j, ScalarRepr::Int(1)));
            }
        }
    }
    let mut gram = vec![vec![ScalarRepr::Int(0); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i + j == n - 1 {
                gram[i][j] = ScalarRepr::Int(1);
            }
        }
    }
    let mut unit = vec![0i64; n];
    unit[0] = 1;
    AlgebraDefinition {
        field: crate::field::FieldSpec { characteristic: p },
        dim: n,
        basis,
        structure_constants: entries,
        unit: ints(&unit),
        symmetric_form: Some(gram),
    }
}

pub fn all() -> Vec<Preset> {
    vec![
        Preset {
            name: "f2-dual-numbers",
            description: "F_2[x]/(x^2), the dual numbers over F_2",
            definition: trunc_poly(2, 2),
            symmetric: true,
            self_injective: true,
            finite_global_dimension: false,
        },
        Preset {
            name: "f3-trunc-poly",
            description: "F_3[x]/(x^3), truncated polynomials over F_3",
            definition: trunc_poly(3, 3),
            symmetric: true,
            self_injective: true,
            finite_global_dimension: false,
        },
        Preset {
            name: "f2-z2",
            description: "F_2[Z/2], the group algebra of the cyclic group of order 2",
            definition: AlgebraDefinition {
                field: crate::field::FieldSpec { characteristic: 2 },
                dim: 2,
                basis: vec!["e".into(), "g".into()],
                structure_constants: sc(&[
                    (0, 0, 0, 1),
                    (0, 1, 1, 1),
                    (1, 0, 1, 1),
                    (1, 1, 0, 1),
                ]),
                unit: ints(&[1, 0]),
                // group algebra form <g, h> = [gh = 1]
                symmetric_form: form(&[&[1, 0], &[0, 1]]),
            },
            symmetric: true,
            self_injective: true,
            finite_global_dimension: false,
        },
        Preset {
            name: "field",
            description: "the base field F_2 itself (semisimple, finite global dimension)",
            definition: AlgebraDefinition {
                field: crate::field::FieldSpec { characteristic: 2 },
                dim: 1,
                basis: vec!["1".into()],
                structure_constants: sc(&[(0, 0, 0, 1)]),
                unit: ints(&[1]),
                symmetric_form: form(&[&[1]]),
            },
            symmetric: true,
            self_injective: true,
            finite_global_dimension: true,
        },
    ]
}

pub fn preset(name: &str) -> Result<Preset> {
    all()
        .into_iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_build() {
        for p in all() {
            let a = p.algebra_fp().unwrap();
            assert_eq!(a.dim(), p.definition.dim);
            assert!(p.form_fp().unwrap().is_some());
        }
    }

    #[test]
    fn unknown_preset_is_an_error() {
        assert!(preset("nope").is_err());
    }
}
