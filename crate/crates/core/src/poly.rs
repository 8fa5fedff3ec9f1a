//! Dense univariate polynomials over `F_p`, lowest degree first.

use std::fmt;

use crate::error::{Error, Result};
use crate::gfp::{is_prime, FieldElement};

/// A polynomial in canonical form: the last stored coefficient is nonzero,
/// and the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    modulus: u32,
    coeffs: Vec<u32>,
}

impl Polynomial {
    /// Builds from signed integer coefficients, reducing each modulo `p`.
    pub fn new(p: u32, coeffs: &[i64]) -> Result<Self> {
        if p < 3 || !is_prime(p as u64) {
            return Err(Error::NotOddPrime(p as u64));
        }
        let coeffs = coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u32).collect();
        Ok(Self::from_raw(p, coeffs))
    }

    pub fn from_elements(coeffs: &[FieldElement]) -> Result<Self> {
        let p = match coeffs.first() {
            Some(c) => c.modulus(),
            None => return Err(Error::MalformedFactor("empty coefficient list".into())),
        };
        if let Some(bad) = coeffs.iter().find(|c| c.modulus() != p) {
            return Err(Error::ModulusMismatch { left: p, right: bad.modulus() });
        }
        Ok(Self::from_raw(p, coeffs.iter().map(|c| c.value()).collect()))
    }

    /// `coeffs` must already be reduced modulo `p`.
    pub(crate) fn from_raw(p: u32, mut coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < p));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { modulus: p, coeffs }
    }

    pub fn zero(p: u32) -> Self {
        Polynomial { modulus: p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Polynomial { modulus: p, coeffs: vec![1] }
    }

    /// `x - a`.
    pub fn linear_root(a: FieldElement) -> Self {
        let p = a.modulus();
        Polynomial { modulus: p, coeffs: vec![a.neg().value(), 1] }
    }

    /// `x^e - 1`.
    pub fn x_pow_minus_one(p: u32, e: usize) -> Self {
        if e == 0 {
            return Self::zero(p);
        }
        let mut coeffs = vec![0u32; e + 1];
        coeffs[0] = p - 1;
        coeffs[e] = 1;
        Polynomial { modulus: p, coeffs }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Raw residues, lowest degree first.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> FieldElement {
        FieldElement::from_raw(self.coeffs.get(i).copied().unwrap_or(0), self.modulus)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn check(&self, other: &Self) -> Result<u64> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        Ok(self.modulus as u64)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let p = self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0) as u64;
                let b = other.coeffs.get(i).copied().unwrap_or(0) as u64;
                ((a + b) % p) as u32
            })
            .collect();
        Ok(Self::from_raw(self.modulus, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let p = self.modulus;
        let coeffs = self.coeffs.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect();
        Self::from_raw(p, coeffs)
    }

    pub fn scale(&self, c: FieldElement) -> Result<Self> {
        if c.modulus() != self.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: c.modulus() });
        }
        let p = self.modulus as u64;
        let coeffs = self.coeffs.iter().map(|&a| (a as u64 * c.value() as u64 % p) as u32).collect();
        Ok(Self::from_raw(self.modulus, coeffs))
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let p = self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.modulus));
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        Ok(Self::from_raw(self.modulus, out.into_iter().map(|c| c as u32).collect()))
    }

    /// Long division: returns `(q, r)` with `self = q * divisor + r` and
    /// `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        let p = self.check(divisor)?;
        let dd = match divisor.degree() {
            Some(d) => d,
            None => return Err(Error::DivisionByZero(self.modulus)),
        };
        let lead_inv = FieldElement::from_raw(divisor.coeffs[dd], self.modulus).inv()?.value() as u64;
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        if rem.len() <= dd {
            return Ok((Self::zero(self.modulus), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let c = rem[shift + dd] * lead_inv % p;
            quot[shift] = c as u32;
            if c == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let sub = c * b as u64 % p;
                rem[shift + j] = (rem[shift + j] + p - sub) % p;
            }
        }
        rem.truncate(dd);
        Ok((
            Self::from_raw(self.modulus, quot),
            Self::from_raw(self.modulus, rem.into_iter().map(|c| c as u32).collect()),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// `self^e` by repeated multiplication; `e = 0` gives 1.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.modulus);
        for _ in 0..e {
            acc = acc.mul(self).expect("same modulus");
        }
        acc
    }

    /// The `k`-th formal derivative.
    pub fn formal_derivative(&self, k: u32) -> Self {
        let p = self.modulus as u64;
        let mut coeffs: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        for _ in 0..k {
            if coeffs.is_empty() {
                break;
            }
            coeffs = coeffs.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect();
        }
        Self::from_raw(self.modulus, coeffs.into_iter().map(|c| c as u32).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, a: FieldElement) -> Result<FieldElement> {
        if a.modulus() != self.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: a.modulus() });
        }
        let p = self.modulus as u64;
        let x = a.value() as u64;
        let v = self.coeffs.iter().rev().fold(0u64, |acc, &c| (acc * x + c as u64) % p);
        Ok(FieldElement::from_raw(v as u32, self.modulus))
    }

    /// Number of nonzero coefficients.
    pub fn hamming_weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    pub fn to_padded(&self, len: usize) -> Vec<u32> {
        let mut v = self.coeffs.clone();
        v.resize(len, 0);
        v
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(p: u32, c: &[i64]) -> Polynomial {
        Polynomial::new(p, c).unwrap()
    }

    fn x_minus(a: i64, p: u32) -> Polynomial {
        Polynomial::linear_root(FieldElement::new(a, p).unwrap())
    }

    /// Integer convolution, reduced at the end: independent of `mul`.
    fn int_product(factors: &[Vec<i64>], p: u32) -> Vec<u32> {
        let mut acc = vec![1i64];
        for f in factors {
            let mut out = vec![0i64; acc.len() + f.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in f.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            acc = out;
        }
        let mut r: Vec<u32> = acc.iter().map(|c| c.rem_euclid(p as i64) as u32).collect();
        while r.last() == Some(&0) {
            r.pop();
        }
        r
    }

    #[test]
    fn canonical_form_trims() {
        assert_eq!(poly(5, &[1, 2, 0, 5, 10]).coeffs(), &[1, 2]);
        assert!(poly(5, &[0, 5]).is_zero());
        assert_eq!(poly(5, &[0, 5]).degree(), None);
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(x_minus(1, 5).mul(&x_minus(-1, 5)).unwrap().coeffs(), &[4, 0, 1]);
        let f = poly(7, &[3, 0, 5, 1]);
        assert_eq!(f.mul(&Polynomial::one(7)).unwrap(), f);
        assert_eq!(x_minus(1, 5).pow(4).coeffs(), &[1, 1, 1, 1, 1]);
        assert!(poly(5, &[1]).mul(&poly(7, &[1])).is_err());
    }

    #[test]
    fn division_examples() {
        let (q, r) = poly(5, &[-1, 0, 1]).divmod(&x_minus(1, 5)).unwrap();
        assert_eq!(q, poly(5, &[1, 1]));
        assert!(r.is_zero());

        let f = poly(7, &[2, 3, 4]);
        let (q, r) = f.divmod(&Polynomial::one(7)).unwrap();
        assert_eq!((q, r.is_zero()), (f.clone(), true));

        assert_eq!(f.divmod(&Polynomial::zero(7)), Err(Error::DivisionByZero(7)));
    }

    #[test]
    fn x15_minus_one_over_f5() {
        // 2 and 4 are not cube roots of unity mod 5, so only (x-1)^2 divides
        let g = x_minus(1, 5).pow(2).mul(&x_minus(2, 5)).unwrap().mul(&x_minus(4, 5)).unwrap();
        let (_, r) = Polynomial::x_pow_minus_one(5, 15).divmod(&g).unwrap();
        assert!(!r.is_zero());
        assert!(x_minus(1, 5).pow(5).divides(&Polynomial::x_pow_minus_one(5, 15)).unwrap());
        let cube = Polynomial::x_pow_minus_one(5, 3).pow(5);
        assert_eq!(cube, Polynomial::x_pow_minus_one(5, 15));
        // over F_7 they are, and x^21 - 1 = (x^3 - 1)^7
        let g = x_minus(1, 7).pow(2).mul(&x_minus(2, 7)).unwrap().mul(&x_minus(4, 7)).unwrap();
        let (_, r) = Polynomial::x_pow_minus_one(7, 21).divmod(&g).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(x_minus(1, 5).pow(0), Polynomial::one(5));
        assert_eq!(x_minus(2, 5).pow(2).coeffs(), &[4, 1, 1]);

        let g = x_minus(1, 7).pow(6).mul(&x_minus(2, 7).pow(3)).unwrap().mul(&x_minus(4, 7).pow(3)).unwrap();
        let mut factors = vec![vec![-1, 1]; 6];
        factors.extend(std::iter::repeat_n(vec![-2, 1], 3));
        factors.extend(std::iter::repeat_n(vec![-4, 1], 3));
        let expected = int_product(&factors, 7);
        assert_eq!(g.degree(), Some(12));
        assert_eq!(g.coeffs(), expected.as_slice());
        // (x-1)^6 (x^2+x+1)^3 = (x-1)^3 (x^3-1)^3
        let alt = x_minus(1, 7).pow(3).mul(&Polynomial::x_pow_minus_one(7, 3).pow(3)).unwrap();
        assert_eq!(g, alt);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(poly(7, &[1, 2, 0, 1]).formal_derivative(1), poly(7, &[2, 0, 3]));
        assert!(poly(7, &[5]).formal_derivative(1).is_zero());
        // (x-1)^3 = x^3 - 3x^2 + 3x - 1 -> 6x - 6 -> x + 4 over F_5
        assert_eq!(x_minus(1, 5).pow(3).formal_derivative(2).coeffs(), &[4, 1]);
        let f = poly(11, &[3, 1, 4, 1, 5]);
        assert_eq!(f.formal_derivative(0), f);
    }

    #[test]
    fn evaluation_examples() {
        let one = FieldElement::new(1, 5).unwrap();
        assert!(poly(5, &[-1, 0, 1]).eval(one).unwrap().is_zero());
        let f = poly(7, &[6, 3, 2]);
        assert_eq!(f.eval(FieldElement::new(0, 7).unwrap()).unwrap().value(), 6);
        let g = x_minus(2, 5).pow(2).mul(&x_minus(3, 5)).unwrap();
        assert!(g.eval(FieldElement::new(2, 5).unwrap()).unwrap().is_zero());
        assert!(f.eval(one).is_err());
    }

    fn binomial_mod(t: u64, i: u64, p: u64) -> u64 {
        // Lucas: product of digit binomials
        let (mut t, mut i, mut acc) = (t, i, 1u64);
        while t > 0 || i > 0 {
            let (a, b) = (t % p, i % p);
            if b > a {
                return 0;
            }
            let mut c = 1u64;
            for j in 0..b {
                c = c * (a - j) / (j + 1);
            }
            acc = acc * (c % p) % p;
            t /= p;
            i /= p;
        }
        acc
    }

    #[test]
    fn weights_of_x_minus_one_powers() {
        assert_eq!(x_minus(1, 5).pow(3).hamming_weight(), 4);
        assert_eq!(Polynomial::zero(5).hamming_weight(), 0);
        for p in [3u32, 5, 7, 11, 13] {
            for t in 0..3 * p {
                let w = x_minus(1, p).pow(t).hamming_weight();
                let lucas = (0..=t as u64).filter(|&i| binomial_mod(t as u64, i, p as u64) != 0).count();
                assert_eq!(w, lucas, "p={p} t={t}");
                if t < p {
                    assert_eq!(w, t as usize + 1);
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(poly(5, &[4, 0, 1]).to_string(), "4 + 1*x^2");
        assert_eq!(poly(7, &[0, 3]).to_string(), "3*x");
        assert_eq!(Polynomial::zero(7).to_string(), "0");
    }

    fn arb_poly(p: u32, max_len: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(0..p as i64, 0..max_len).prop_map(move |c| Polynomial::new(p, &c).unwrap())
    }

    fn arb_prime() -> impl Strategy<Value = u32> {
        prop::sample::select(vec![3u32, 5, 7, 11, 13])
    }

    proptest! {
        #[test]
        fn divmod_round_trip((p, f, g) in arb_prime().prop_flat_map(|p| (Just(p), arb_poly(p, 30), arb_poly(p, 12)))) {
            prop_assume!(!g.is_zero());
            let (q, r) = f.divmod(&g).unwrap();
            prop_assert_eq!(q.mul(&g).unwrap().add(&r).unwrap(), f);
            prop_assert!(r.degree().is_none_or(|d| d < g.degree().unwrap()));
            let _ = p;
        }

        #[test]
        fn mul_commutes_and_associates((_p, a, b, c) in arb_prime().prop_flat_map(|p| (Just(p), arb_poly(p, 10), arb_poly(p, 10), arb_poly(p, 10)))) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        }

        #[test]
        fn derivative_is_linear_and_leibniz((p, a, b, s) in arb_prime().prop_flat_map(|p| (Just(p), arb_poly(p, 10), arb_poly(p, 10), 0..p as i64))) {
            let s = FieldElement::new(s, p).unwrap();
            let lhs = a.scale(s).unwrap().add(&b).unwrap().formal_derivative(1);
            let rhs = a.formal_derivative(1).scale(s).unwrap().add(&b.formal_derivative(1)).unwrap();
            prop_assert_eq!(lhs, rhs);
            let prod = a.mul(&b).unwrap().formal_derivative(1);
            let leibniz = a.formal_derivative(1).mul(&b).unwrap().add(&a.mul(&b.formal_derivative(1)).unwrap()).unwrap();
            prop_assert_eq!(prod, leibniz);
        }

        #[test]
        fn root_multiplicity_matches_derivatives(
            (p, f, a, r) in arb_prime().prop_flat_map(|p| (Just(p), arb_poly(p, 8), 0..p as i64, 1..p))
        ) {
            // Build something that sometimes has a high-multiplicity root at a.
            let a = FieldElement::new(a, p).unwrap();
            let lin = Polynomial::linear_root(a);
            let boosted = f.mul(&lin.pow(r / 2 + 1)).unwrap();
            for h in [&f, &boosted] {
                prop_assume!(!h.is_zero());
                let by_division = lin.pow(r).divides(h).unwrap();
                let by_derivatives = (0..r).all(|k| h.formal_derivative(k).eval(a).unwrap().is_zero());
                prop_assert_eq!(by_division, by_derivatives);
            }
        }
    }
}
