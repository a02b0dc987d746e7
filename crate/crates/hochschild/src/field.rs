//! Exact scalar arithmetic: prime fields F_p and the rationals.
//!
//! Every computation in this crate is exact. A [`Field`] is a lightweight
//! context object (a prime modulus, or nothing for Q) and scalars are plain
//! data. No floating point appears anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Field operations over a runtime-chosen exact field.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn characteristic(&self) -> u64;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn render(&self, a: &Self::Elem) -> String;

    /// (-1)^k as a field element.
    fn sign(&self, k: i64) -> Self::Elem {
        if k.rem_euclid(2) == 0 {
            self.one()
        } else {
            self.neg(&self.one())
        }
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    /// a += c * b
    fn add_scaled(&self, a: &mut Self::Elem, c: &Self::Elem, b: &Self::Elem) {
        let prod = self.mul(c, b);
        *a = self.add(a, &prod);
    }
}

/// The prime field F_p with elements stored as canonical residues in `0..p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::BadField(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = ((acc as u128 * base as u128) % self.p as u128) as u64;
            }
            base = ((base as u128 * base as u128) % self.p as u128) as u64;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            let n: i64 = num.trim().parse().map_err(|_| Error::BadScalar(s.into()))?;
            let d: i64 = den.trim().parse().map_err(|_| Error::BadScalar(s.into()))?;
            let dv = self.from_i64(d);
            let inv = self.inv(&dv).ok_or_else(|| Error::BadScalar(s.into()))?;
            Ok(self.mul(&self.from_i64(n), &inv))
        } else {
            let n: i64 = t.parse().map_err(|_| Error::BadScalar(s.into()))?;
            Ok(self.from_i64(n))
        }
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// The rational numbers with arbitrary-precision arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            let n: BigInt = num.trim().parse().map_err(|_| Error::BadScalar(s.into()))?;
            let d: BigInt = den.trim().parse().map_err(|_| Error::BadScalar(s.into()))?;
            if d.is_zero() {
                return Err(Error::BadScalar(s.into()));
            }
            Ok(BigRational::new(n, d))
        } else {
            let n: BigInt = t.parse().map_err(|_| Error::BadScalar(s.into()))?;
            Ok(BigRational::from_integer(n))
        }
    }
    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else if a.denom().is_negative() {
            format!("{}/{}", -a.numer(), -a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// Serializable description of the base field: characteristic 0 means Q,
/// a prime p means F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub characteristic: u64,
}

impl FieldSpec {
    pub fn validate(&self) -> Result<()> {
        if self.characteristic == 0 || is_prime(self.characteristic) {
            Ok(())
        } else {
            Err(Error::BadField(self.characteristic))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(&5, &4), 2);
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.sign(3), 6);
        assert_eq!(f.parse("3/5").unwrap(), f.mul(&3, &f.inv(&5).unwrap()));
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(PrimeField::new(6).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(FieldSpec { characteristic: 9 }.validate().is_err());
        assert!(FieldSpec { characteristic: 0 }.validate().is_ok());
    }

    #[test]
    fn rational_arithmetic() {
        let q = Rationals;
        let a = q.parse("2/3").unwrap();
        let b = q.parse("-1/6").unwrap();
        assert_eq!(q.render(&q.add(&a, &b)), "1/2");
        assert_eq!(q.render(&q.inv(&a).unwrap()), "3/2");
        assert_eq!(q.characteristic(), 0);
    }
}
