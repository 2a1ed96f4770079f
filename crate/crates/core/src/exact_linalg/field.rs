//! Exact scalar fields: prime fields GF(p) and the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Prime(u32),
    Rationals,
}

impl FieldSpec {
    /// Builds a spec from a characteristic, `0` meaning the rationals.
    pub fn from_characteristic(p: u64) -> Result<Self, LinalgError> {
        if p == 0 {
            return Ok(FieldSpec::Rationals);
        }
        if p >= 1 << 31 || !is_prime(p) {
            return Err(LinalgError::BadCharacteristic(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => write!(f, "Q"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field whose elements are plain values and whose operations live on a
/// (cheap, cloneable) context object.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// `num / den`; fails when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem, LinalgError>;
    /// Numerator and denominator of the canonical representative.
    fn to_ratio(&self, a: &Self::Elem) -> (BigInt, BigInt);

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `dst[k] -= factor * src[k]` for every `k` in `support`.
    fn sub_scaled(&self, dst: &mut [Self::Elem], factor: &Self::Elem, src: &[Self::Elem], support: &[usize]) {
        for &k in support {
            let t = self.mul(factor, &src[k]);
            dst[k] = self.sub(&dst[k], &t);
        }
    }

    /// `dst[k] += factor * src[k]` over the whole slice.
    fn add_scaled(&self, dst: &mut [Self::Elem], factor: &Self::Elem, src: &[Self::Elem]) {
        for (d, s) in dst.iter_mut().zip(src) {
            if !self.is_zero(s) {
                let t = self.mul(factor, s);
                *d = self.add(d, &t);
            }
        }
    }

    fn format(&self, a: &Self::Elem) -> String {
        let (n, d) = self.to_ratio(a);
        if d.is_one() {
            n.to_string()
        } else {
            format!("{n}/{d}")
        }
    }
}

/// GF(p) for a prime `p < 2^31`, elements stored as canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
    // floor(2^64 / p), for Barrett reduction of products
    barrett: u64,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, LinalgError> {
        match FieldSpec::from_characteristic(p as u64)? {
            FieldSpec::Prime(p) => Ok(Self {
                p,
                barrett: ((1u128 << 64) / p as u128) as u64,
            }),
            FieldSpec::Rationals => Err(LinalgError::BadCharacteristic(0)),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    fn reduce(&self, x: u64) -> u32 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x - q * self.p as u64;
        if r >= self.p as u64 {
            r -= self.p as u64;
        }
        r as u32
    }

    fn pow(&self, mut base: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.reduce(acc as u64 * base as u64);
            }
            base = self.reduce(base as u64 * base as u64);
            e >>= 1;
        }
        acc
    }

    fn from_bigint(&self, v: &BigInt) -> u32 {
        let r = v % BigInt::from(self.p);
        let r = if r.is_negative() { r + BigInt::from(self.p) } else { r };
        r.to_u32().expect("residue fits in u32")
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(*a as u64 * *b as u64)
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        self.pow(*a, self.p as u64 - 2)
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u32, LinalgError> {
        let d = self.from_bigint(den);
        if d == 0 {
            return Err(LinalgError::DivisionByZero);
        }
        Ok(self.mul(&self.from_bigint(num), &self.inv(&d)))
    }
    fn to_ratio(&self, a: &u32) -> (BigInt, BigInt) {
        (BigInt::from(*a), BigInt::one())
    }

    #[inline]
    fn sub_scaled(&self, dst: &mut [u32], factor: &u32, src: &[u32], support: &[usize]) {
        let nf = self.neg(factor) as u64;
        for &k in support {
            dst[k] = self.reduce(dst[k] as u64 + nf * src[k] as u64);
        }
    }

    fn add_scaled(&self, dst: &mut [u32], factor: &u32, src: &[u32]) {
        let f = *factor as u64;
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = self.reduce(*d as u64 + f * s as u64);
            }
        }
    }
}

/// The rational numbers with arbitrary-precision entries. Exact but slow.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
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
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero in Q");
        a.recip()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational, LinalgError> {
        if den.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn to_ratio(&self, a: &BigRational) -> (BigInt, BigInt) {
        (a.numer().clone(), a.denom().clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characteristic_validation() {
        assert_eq!(FieldSpec::from_characteristic(0).unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::from_characteristic(101).unwrap(), FieldSpec::Prime(101));
        assert!(FieldSpec::from_characteristic(1).is_err());
        assert!(FieldSpec::from_characteristic(100).is_err());
        assert!(FieldSpec::from_characteristic(1 << 31).is_err());
        assert!(FieldSpec::from_characteristic(2147483647).is_ok());
    }

    #[test]
    fn prime_field_arithmetic_matches_naive() {
        for p in [2u32, 3, 7, 101, 2147483647] {
            let f = PrimeField::new(p).unwrap();
            let samples = [0u32, 1, 2 % p, p - 1, p / 2, (p as u64 * 2 / 3) as u32];
            for &a in &samples {
                for &b in &samples {
                    assert_eq!(f.mul(&a, &b) as u64, a as u64 * b as u64 % p as u64);
                    assert_eq!(f.add(&a, &b) as u64, (a as u64 + b as u64) % p as u64);
                    assert_eq!(f.add(&f.sub(&a, &b), &b), a);
                }
                if a != 0 {
                    assert_eq!(f.mul(&a, &f.inv(&a)), 1);
                }
            }
        }
    }

    #[test]
    fn ratio_conversion() {
        let f = PrimeField::new(7).unwrap();
        let x = f.from_ratio(&BigInt::from(3), &BigInt::from(2)).unwrap();
        assert_eq!(f.mul(&x, &2), 3);
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(14)).is_err());
        assert_eq!(f.from_i64(-1), 6);
        let q = Rationals;
        let h = q.from_ratio(&BigInt::from(-2), &BigInt::from(4)).unwrap();
        assert_eq!(q.format(&h), "-1/2");
    }
}
