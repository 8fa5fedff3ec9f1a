//! Prime field arithmetic.
//!
//! [`FieldElement`] carries its modulus so codes over different primes can
//! live side by side. The hot loops in the search engines work on raw `u32`
//! residues through [`PrimeField`] instead, which skips the per-operation
//! modulus check.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Trial-division primality test; the moduli here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Raw arithmetic context for `F_p`. Values are assumed reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
    inverses: Vec<u32>,
}

const INVERSE_TABLE_LIMIT: u32 = 1 << 16;

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p < 3 || !is_prime(p as u64) {
            return Err(Error::NotOddPrime(p as u64));
        }
        let mut field = PrimeField { p, inverses: Vec::new() };
        if p <= INVERSE_TABLE_LIMIT {
            let mut inv = vec![0u32; p as usize];
            inv[1] = 1;
            // inv[i] = -(p / i) * inv[p % i]
            for i in 2..p as usize {
                let q = (p as usize / i) as u64;
                let r = inv[p as usize % i] as u64;
                inv[i] = ((p as u64 - q) * r % p as u64) as u32;
            }
            field.inverses = inv;
        }
        Ok(field)
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }

    #[inline]
    pub fn reduce_signed(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.p as u64) as u32
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue. Panics on zero; use
    /// [`FieldElement::inv`] for the checked version.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        if self.inverses.is_empty() {
            self.pow(a, self.p as u64 - 2)
        } else {
            self.inverses[a as usize]
        }
    }
}

/// A residue modulo an odd prime, tagged with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElement {
    value: u32,
    modulus: u32,
}

// checked ops: operands may come from different fields
#[allow(clippy::should_implement_trait)]
impl FieldElement {
    /// Reduces `value` modulo `p`. `p` must be an odd prime.
    pub fn new(value: i64, p: u32) -> Result<Self> {
        if p < 3 || !is_prime(p as u64) {
            return Err(Error::NotOddPrime(p as u64));
        }
        Ok(FieldElement { value: value.rem_euclid(p as i64) as u32, modulus: p })
    }

    /// Skips the primality check; `p` is trusted to come from a validated context.
    pub(crate) fn from_raw(value: u32, p: u32) -> Self {
        debug_assert!(value < p);
        FieldElement { value, modulus: p }
    }

    pub fn zero(p: u32) -> Result<Self> {
        Self::new(0, p)
    }

    pub fn one(p: u32) -> Result<Self> {
        Self::new(1, p)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: Self) -> Result<u64> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        Ok(self.modulus as u64)
    }

    pub fn add(self, other: Self) -> Result<Self> {
        let p = self.check(other)?;
        Ok(Self::from_raw(((self.value as u64 + other.value as u64) % p) as u32, self.modulus))
    }

    pub fn sub(self, other: Self) -> Result<Self> {
        let p = self.check(other)?;
        Ok(Self::from_raw(((self.value as u64 + p - other.value as u64) % p) as u32, self.modulus))
    }

    pub fn mul(self, other: Self) -> Result<Self> {
        let p = self.check(other)?;
        Ok(Self::from_raw(((self.value as u64 * other.value as u64) % p) as u32, self.modulus))
    }

    pub fn neg(self) -> Self {
        let v = if self.value == 0 { 0 } else { self.modulus - self.value };
        Self::from_raw(v, self.modulus)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut acc = 1u64 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Self::from_raw(acc as u32, self.modulus)
    }

    pub fn inv(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero(self.modulus));
        }
        Ok(self.pow(self.modulus as u64 - 2))
    }

    /// Multiplicative order by exhaustive powering.
    pub fn order(self) -> Result<u32> {
        element_order(self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Smallest `m >= 1` with `a^m = 1`.
pub fn element_order(a: FieldElement) -> Result<u32> {
    if a.is_zero() {
        return Err(Error::DivisionByZero(a.modulus));
    }
    let p = a.modulus as u64;
    let mut acc = a.value as u64;
    let mut m = 1u32;
    while acc != 1 {
        acc = acc * a.value as u64 % p;
        m += 1;
    }
    Ok(m)
}

/// The canonical primitive `l`-th root of unity: the smallest element of
/// `[1, p-1]` whose order is exactly `l`.
pub fn primitive_root_of_unity(p: u32, l: u32) -> Result<FieldElement> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::NotOddPrime(p as u64));
    }
    if l == 0 || (p - 1) % l != 0 {
        return Err(Error::NoRootOfUnity { p, l });
    }
    (1..p)
        .map(|v| FieldElement::from_raw(v, p))
        .find(|&a| element_order(a).is_ok_and(|m| m == l))
        .ok_or(Error::NoRootOfUnity { p, l })
}

/// Accepts an explicit choice of root of unity after checking its order.
pub fn validate_root_of_unity(value: u32, p: u32, l: u32) -> Result<FieldElement> {
    let a = FieldElement::new(value as i64, p)?;
    if a.is_zero() || element_order(a)? != l {
        return Err(Error::InvalidOmega { p, l, value });
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: i64, p: u32) -> FieldElement {
        FieldElement::new(v, p).unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(fe(3, 7).add(fe(4, 7)).unwrap().value(), 0);
        assert_eq!(fe(6, 7).add(fe(6, 7)).unwrap().value(), 5);
        for x in 0..11 {
            assert_eq!(fe(0, 11).add(fe(x, 11)).unwrap(), fe(x, 11));
        }
    }

    #[test]
    fn mismatched_moduli_are_rejected() {
        assert_eq!(fe(1, 5).add(fe(1, 7)), Err(Error::ModulusMismatch { left: 5, right: 7 }));
        assert!(fe(1, 5).mul(fe(1, 7)).is_err());
        assert!(fe(1, 5).sub(fe(1, 7)).is_err());
    }

    #[test]
    fn rejects_non_odd_primes() {
        assert!(FieldElement::new(1, 2).is_err());
        assert!(FieldElement::new(1, 9).is_err());
        assert!(PrimeField::new(15).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(fe(3, 7).inv().unwrap().value(), 5);
        assert_eq!(fe(1, 13).inv().unwrap().value(), 1);
        assert_eq!(fe(4, 5).inv().unwrap().value(), 4);
        assert_eq!(fe(0, 5).inv(), Err(Error::DivisionByZero(5)));
    }

    #[test]
    fn inverse_table_matches_fermat() {
        for p in [3u32, 5, 7, 11, 13, 97] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a)), 1);
                assert_eq!(f.inv(a), f.pow(a, p as u64 - 2));
            }
        }
    }

    #[test]
    fn fermat_little_theorem_by_exhaustion() {
        for p in [3u32, 5, 7, 11, 13] {
            for a in 0..p as i64 {
                assert_eq!(fe(a, p).pow(p as u64), fe(a, p));
            }
        }
    }

    #[test]
    fn orders() {
        // 2, 4, 1
        assert_eq!(element_order(fe(2, 7)).unwrap(), 3);
        assert_eq!(element_order(fe(1, 11)).unwrap(), 1);
        for p in [5u32, 7, 13] {
            assert_eq!(element_order(fe(p as i64 - 1, p)).unwrap(), 2);
            for a in 1..p as i64 {
                assert_eq!((p - 1) % element_order(fe(a, p)).unwrap(), 0);
            }
        }
        assert!(element_order(fe(0, 7)).is_err());
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(primitive_root_of_unity(7, 3).unwrap().value(), 2);
        assert_eq!(primitive_root_of_unity(5, 4).unwrap().value(), 2);
        assert_eq!(primitive_root_of_unity(7, 1).unwrap().value(), 1);
        assert_eq!(primitive_root_of_unity(7, 6).unwrap().value(), 3);
        assert_eq!(validate_root_of_unity(3, 5, 4).unwrap().value(), 3);
        assert!(validate_root_of_unity(4, 5, 4).is_err());
        assert_eq!(primitive_root_of_unity(7, 5), Err(Error::NoRootOfUnity { p: 7, l: 5 }));
        assert_eq!(primitive_root_of_unity(5, 3), Err(Error::NoRootOfUnity { p: 5, l: 3 }));
    }

    #[test]
    fn root_of_unity_has_exact_order() {
        for p in [5u32, 7, 11, 13, 31, 37] {
            for l in (1..p).filter(|l| (p - 1) % l == 0) {
                let w = primitive_root_of_unity(p, l).unwrap();
                assert_eq!(w.pow(l as u64).value(), 1);
                for m in 1..l {
                    assert_ne!(w.pow(m as u64).value(), 1);
                }
            }
        }
    }
}
