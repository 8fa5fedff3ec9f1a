//! Repeated-root cyclic codes of length `n = l·p` over `F_p`.
//!
//! A code is given by its generator in factored form: each factor is a
//! linear `x - ω^u`, a linear `x - a` for an explicit element, or a
//! quadratic, raised to a multiplicity. The distinct factors must divide
//! `x^l - 1` and be pairwise coprime; since `x^{lp} - 1 = (x^l - 1)^p`, any
//! multiplicity up to `p` then gives a divisor of `x^n - 1`.
//!
//! Membership is decided by polynomial division and parity constraints by
//! reducing `x^j` modulo the generator, so quadratic factors that are
//! irreducible over `F_p` never require extension-field arithmetic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfp::{gcd, is_prime, primitive_root_of_unity, validate_root_of_unity, FieldElement, PrimeField};
use crate::linalg::Matrix;
use crate::poly::Polynomial;

/// Hard cap on words enumerated when computing the distance of a
/// simple-root constituent code.
pub const CONSTITUENT_ENUM_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    /// `x - ω^exp`, with ω the code's primitive `l`-th root of unity.
    UnityRoot { exp: u32 },
    /// `x - value`.
    Element { value: u32 },
    /// Monic quadratic, coefficients lowest degree first.
    Quadratic { coeffs: [u32; 3] },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactorSpec {
    pub kind: FactorKind,
    pub multiplicity: u32,
}

impl FactorSpec {
    pub fn unity(exp: u32, multiplicity: u32) -> Self {
        FactorSpec { kind: FactorKind::UnityRoot { exp }, multiplicity }
    }

    pub fn element(value: u32, multiplicity: u32) -> Self {
        FactorSpec { kind: FactorKind::Element { value }, multiplicity }
    }

    pub fn quadratic(coeffs: [u32; 3], multiplicity: u32) -> Self {
        FactorSpec { kind: FactorKind::Quadratic { coeffs }, multiplicity }
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorKind::UnityRoot { exp: 0 } => write!(f, "(x - 1)"),
            FactorKind::UnityRoot { exp: 1 } => write!(f, "(x - w)"),
            FactorKind::UnityRoot { exp } => write!(f, "(x - w^{exp})"),
            FactorKind::Element { value } => write!(f, "(x - {value})"),
            FactorKind::Quadratic { coeffs: [c0, c1, _] } => {
                write!(f, "(x^2")?;
                if *c1 != 0 {
                    write!(f, " + {c1}*x")?;
                }
                if *c0 != 0 {
                    write!(f, " + {c0}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicity == 1 {
            write!(f, "{}", self.kind)
        } else {
            write!(f, "{}^{}", self.kind, self.multiplicity)
        }
    }
}

/// One factor in the JSON schema: exactly one of `unity_exp`, `elem`,
/// `poly`, plus `mult`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unity_exp: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elem: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<Vec<i64>>,
    pub mult: u32,
}

/// The on-disk code description, e.g.
/// `{"p":7,"l":3,"factors":[{"unity_exp":0,"mult":4},{"unity_exp":1,"mult":2}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpecInput {
    pub p: u32,
    pub l: u32,
    pub factors: Vec<FactorJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<u32>,
}

impl CodeSpecInput {
    pub fn new(p: u32, l: u32, factors: &[FactorSpec]) -> Self {
        CodeSpecInput { p, l, factors: factors.iter().map(FactorJson::from).collect(), omega: None }
    }

    pub fn with_omega(mut self, omega: u32) -> Self {
        self.omega = Some(omega);
        self
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl From<&FactorSpec> for FactorJson {
    fn from(f: &FactorSpec) -> Self {
        let mut j = FactorJson { unity_exp: None, elem: None, poly: None, mult: f.multiplicity };
        match f.kind {
            FactorKind::UnityRoot { exp } => j.unity_exp = Some(exp),
            FactorKind::Element { value } => j.elem = Some(value as i64),
            FactorKind::Quadratic { coeffs } => j.poly = Some(coeffs.iter().map(|&c| c as i64).collect()),
        }
        j
    }
}

impl FactorJson {
    fn to_spec(&self, p: u32) -> Result<FactorSpec> {
        let given = [self.unity_exp.is_some(), self.elem.is_some(), self.poly.is_some()];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(Error::MalformedFactor("each factor needs exactly one of unity_exp, elem, poly".into()));
        }
        let kind = if let Some(exp) = self.unity_exp {
            FactorKind::UnityRoot { exp }
        } else if let Some(v) = self.elem {
            FactorKind::Element { value: v.rem_euclid(p as i64) as u32 }
        } else {
            let c = self.poly.as_ref().expect("checked above");
            let poly = Polynomial::new(p, c)?;
            if poly.degree() != Some(2) {
                return Err(Error::MalformedFactor(format!("{c:?} is not a quadratic")));
            }
            let lead_inv = poly.coefficient(2).inv()?;
            let monic = poly.scale(lead_inv)?;
            let m = monic.coeffs();
            FactorKind::Quadratic { coeffs: [m[0], m[1], m[2]] }
        };
        Ok(FactorSpec { kind, multiplicity: self.mult })
    }
}

/// Multiplicity bound applied at build time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum BuildMode {
    /// Multiplicities up to `p`, the most that can divide `(x^l - 1)^p`.
    #[default]
    Standard,
    /// Multiplicities up to `p - 1`, the standing bound on the families.
    Catalog,
}

/// A validated repeated-root cyclic code. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    p: u32,
    l: u32,
    n: usize,
    k: usize,
    omega: Option<u32>,
    factors: Vec<FactorSpec>,
    bases: Vec<Polynomial>,
    generator: Polynomial,
    mode: BuildMode,
    field: PrimeField,
}

impl CodeSpec {
    pub fn build(input: &CodeSpecInput) -> Result<Self> {
        Self::build_with(input, BuildMode::Standard)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::build(&CodeSpecInput::from_json(text)?)
    }

    pub fn build_with(input: &CodeSpecInput, mode: BuildMode) -> Result<Self> {
        let p = input.p;
        let l = input.l;
        if p < 3 || !is_prime(p as u64) {
            return Err(Error::NotOddPrime(p as u64));
        }
        if l == 0 || gcd(l as u64, p as u64) != 1 {
            return Err(Error::LengthNotCoprime { p, l });
        }
        let field = PrimeField::new(p)?;
        let factors = input.factors.iter().map(|f| f.to_spec(p)).collect::<Result<Vec<_>>>()?;

        let needs_omega = factors.iter().any(|f| matches!(f.kind, FactorKind::UnityRoot { .. }));
        let omega = match input.omega {
            Some(w) => Some(validate_root_of_unity(w, p, l)?.value()),
            None if needs_omega => Some(primitive_root_of_unity(p, l)?.value()),
            None => None,
        };

        let bound = match mode {
            BuildMode::Standard => p,
            BuildMode::Catalog => p - 1,
        };
        let x_l_minus_one = Polynomial::x_pow_minus_one(p, l as usize);
        let mut bases = Vec::with_capacity(factors.len());
        for f in &factors {
            if f.multiplicity == 0 {
                return Err(Error::MalformedFactor(format!("{} has multiplicity 0", f.kind)));
            }
            if f.multiplicity > bound {
                return Err(Error::MultiplicityTooLarge { factor: f.kind.to_string(), mult: f.multiplicity, bound });
            }
            let base = base_polynomial(&f.kind, p, omega)?;
            if !base.divides(&x_l_minus_one)? {
                return Err(Error::FactorNotDividing { p, l, factor: f.kind.to_string() });
            }
            bases.push(base);
        }
        // x^l - 1 is squarefree, so the distinct factors are pairwise coprime
        // exactly when their product still divides it.
        let radical = bases.iter().fold(Polynomial::one(p), |acc, b| acc.mul(b).expect("same modulus"));
        if !radical.divides(&x_l_minus_one)? {
            let names: Vec<String> = factors.iter().map(|f| f.kind.to_string()).collect();
            return Err(Error::FactorsNotCoprime(names.join(" ")));
        }

        let n = l as usize * p as usize;
        let generator = bases
            .iter()
            .zip(&factors)
            .fold(Polynomial::one(p), |acc, (b, f)| acc.mul(&b.pow(f.multiplicity)).expect("same modulus"));
        if !generator.divides(&Polynomial::x_pow_minus_one(p, n))? {
            return Err(Error::GeneratorNotDivisor { n });
        }
        let deg = generator.degree().expect("product of monic factors is nonzero");
        if deg >= n {
            return Err(Error::ZeroDimensional { n, deg });
        }
        Ok(CodeSpec { p, l, n, k: n - deg, omega, factors, bases, generator, mode, field })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `n - k`, the degree of the generator.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn omega(&self) -> Option<FieldElement> {
        self.omega.map(|w| FieldElement::from_raw(w, self.p))
    }

    pub fn factors(&self) -> &[FactorSpec] {
        &self.factors
    }

    /// The distinct base factors, monic, in the order given.
    pub fn base_factors(&self) -> &[Polynomial] {
        &self.bases
    }

    pub fn generator(&self) -> &Polynomial {
        &self.generator
    }

    pub fn mode(&self) -> BuildMode {
        self.mode
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    /// The JSON form. Any resolved ω is written out so the description
    /// rebuilds to an identical spec.
    pub fn to_input(&self) -> CodeSpecInput {
        CodeSpecInput {
            p: self.p,
            l: self.l,
            factors: self.factors.iter().map(FactorJson::from).collect(),
            omega: self.omega,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_input()).expect("plain data serializes")
    }

    /// Human-readable generator, e.g. `(x - 1)^4 (x - w)^2 (x - w^2)`.
    pub fn factored_form(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ")
    }

    /// Codeword `message(x) · g(x)`; the message has exactly `k` symbols.
    pub fn encode(&self, message: &[FieldElement]) -> Result<Codeword> {
        if message.len() != self.k {
            return Err(Error::LengthMismatch { expected: self.k, actual: message.len() });
        }
        if let Some(bad) = message.iter().find(|m| m.modulus() != self.p) {
            return Err(Error::ModulusMismatch { left: self.p, right: bad.modulus() });
        }
        let m = Polynomial::from_raw(self.p, message.iter().map(|e| e.value()).collect());
        self.encode_polynomial(&m)
    }

    /// Codeword `m(x) · g(x) mod (x^n - 1)`.
    pub fn encode_polynomial(&self, message: &Polynomial) -> Result<Codeword> {
        let prod = message.mul(&self.generator)?;
        let reduced = fold_cyclic(prod.coeffs(), self.n, &self.field);
        Ok(Codeword { modulus: self.p, values: reduced })
    }

    /// Whether `g(x)` divides the word.
    pub fn contains(&self, word: &Codeword) -> bool {
        if word.values.len() != self.n || word.modulus != self.p {
            return false;
        }
        self.generator.divides(&word.to_polynomial()).unwrap_or(false)
    }

    /// `deg g × n` matrix whose column `j` holds the coefficients of
    /// `x^j mod g`; a word is a codeword iff the matrix annihilates it.
    pub fn check_matrix(&self) -> Matrix {
        let r = self.redundancy();
        let f = &self.field;
        let g = self.generator.coeffs();
        let mut m = Matrix::zeros(r, self.n);
        if r == 0 {
            return m;
        }
        let mut cur = vec![0u32; r];
        cur[0] = 1;
        for j in 0..self.n {
            for (i, &v) in cur.iter().enumerate() {
                m.set(i, j, v);
            }
            // multiply by x, then eliminate the x^r term using the monic g
            let top = cur[r - 1];
            for i in (1..r).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..r {
                    cur[i] = f.sub(cur[i], f.mul(top, g[i]));
                }
            }
        }
        m
    }

    /// The terms `(t, P_t, d_H(C̄_t))` of the Castagnoli decomposition for
    /// `t = 0..=min(max multiplicity, p-1)`. A zero constituent code reports
    /// `None` and does not take part in the minimum.
    pub fn castagnoli_terms(&self) -> Result<Vec<CastagnoliTerm>> {
        let p = self.p;
        let l = self.l as usize;
        let max_e = self.factors.iter().map(|f| f.multiplicity).max().unwrap_or(0);
        let last_t = max_e.min(p - 1);
        let x_minus_one = Polynomial::linear_root(FieldElement::from_raw(1, p));
        let mut terms = Vec::new();
        for t in 0..=last_t {
            let gen_t = self
                .bases
                .iter()
                .zip(&self.factors)
                .filter(|(_, f)| f.multiplicity > t)
                .fold(Polynomial::one(p), |acc, (b, _)| acc.mul(b).expect("same modulus"));
            let weight = x_minus_one.pow(t).hamming_weight();
            let distance =
                if gen_t.degree() == Some(l) { None } else { Some(simple_code_distance(&gen_t, l, &self.field)?) };
            terms.push(CastagnoliTerm { t, weight, constituent_distance: distance });
        }
        Ok(terms)
    }

    /// Minimum Hamming distance as `min_t P_t · d_H(C̄_t)`.
    pub fn castagnoli_dh(&self) -> Result<usize> {
        self.castagnoli_terms()?
            .iter()
            .filter_map(|t| t.constituent_distance.map(|d| d * t.weight))
            .min()
            .ok_or_else(|| Error::Internal("every constituent code is zero".into()))
    }
}

impl TryFrom<CodeSpecInput> for CodeSpec {
    type Error = Error;

    fn try_from(input: CodeSpecInput) -> Result<Self> {
        CodeSpec::build(&input)
    }
}

impl Serialize for CodeSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_input().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CodeSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let input = CodeSpecInput::deserialize(d)?;
        CodeSpec::build(&input).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CastagnoliTerm {
    pub t: u32,
    /// `ω_H((x-1)^t)`.
    pub weight: usize,
    pub constituent_distance: Option<usize>,
}

fn base_polynomial(kind: &FactorKind, p: u32, omega: Option<u32>) -> Result<Polynomial> {
    Ok(match *kind {
        FactorKind::UnityRoot { exp } => {
            let w = omega.expect("omega resolved whenever a unity factor exists");
            Polynomial::linear_root(FieldElement::from_raw(w, p).pow(exp as u64))
        }
        FactorKind::Element { value } => Polynomial::linear_root(FieldElement::from_raw(value % p, p)),
        FactorKind::Quadratic { coeffs } => Polynomial::from_raw(p, coeffs.to_vec()),
    })
}

/// Reduces a coefficient list modulo `x^n - 1` into a length-`n` vector.
fn fold_cyclic(coeffs: &[u32], n: usize, field: &PrimeField) -> Vec<u32> {
    let mut out = vec![0u32; n];
    for (i, &c) in coeffs.iter().enumerate() {
        out[i % n] = field.add(out[i % n], c);
    }
    out
}

/// Minimum Hamming weight of the length-`l` code generated by `gen`, by
/// enumerating every nonzero message.
fn simple_code_distance(gen: &Polynomial, l: usize, field: &PrimeField) -> Result<usize> {
    let deg = gen.degree().expect("nonzero generator");
    if deg == 0 {
        return Ok(1);
    }
    let dim = l - deg;
    let p = field.modulus() as u64;
    let count = (p as u128).pow(dim as u32);
    if count > CONSTITUENT_ENUM_CAP as u128 {
        return Err(Error::EnumerationTooLarge { what: "constituent codewords", count, cap: CONSTITUENT_ENUM_CAP });
    }
    let rows: Vec<Vec<u32>> = (0..dim)
        .map(|i| {
            let mut r = vec![0u32; l];
            r[i..i + deg + 1].copy_from_slice(gen.coeffs());
            r
        })
        .collect();
    Ok(min_weight_by_odometer(&rows, field, l))
}

/// Walks all `p^k` combinations of the rows, adding one row per step, and
/// returns the minimum weight of a nonzero combination.
pub(crate) fn min_weight_by_odometer(rows: &[Vec<u32>], field: &PrimeField, n: usize) -> usize {
    let p = field.modulus();
    let mut digits = vec![0u32; rows.len()];
    let mut word = vec![0u32; n];
    let mut best = usize::MAX;
    loop {
        // increment; a digit wrapping from p-1 to 0 has added its row p times,
        // which is zero, so only the carry row is added next
        let mut j = 0;
        loop {
            if j == rows.len() {
                return best;
            }
            for (w, &r) in word.iter_mut().zip(&rows[j]) {
                *w = field.add(*w, r);
            }
            digits[j] += 1;
            if digits[j] == p {
                digits[j] = 0;
                j += 1;
            } else {
                break;
            }
        }
        let wt = word.iter().filter(|&&c| c != 0).count();
        if wt > 0 && wt < best {
            best = wt;
        }
    }
}

/// A length-`n` word over `F_p`; index `i` is the coefficient of `x^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    modulus: u32,
    values: Vec<u32>,
}

impl Codeword {
    pub fn new(p: u32, values: &[i64]) -> Result<Self> {
        if p < 3 || !is_prime(p as u64) {
            return Err(Error::NotOddPrime(p as u64));
        }
        Ok(Codeword { modulus: p, values: values.iter().map(|&v| v.rem_euclid(p as i64) as u32).collect() })
    }

    pub(crate) fn from_raw(p: u32, values: Vec<u32>) -> Self {
        Codeword { modulus: p, values }
    }

    pub fn zero(p: u32, n: usize) -> Self {
        Codeword { modulus: p, values: vec![0; n] }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn elements(&self) -> Vec<FieldElement> {
        self.values.iter().map(|&v| FieldElement::from_raw(v, self.modulus)).collect()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_raw(self.modulus, self.values.clone())
    }

    pub fn hamming_weight(&self) -> usize {
        self.values.iter().filter(|&&v| v != 0).count()
    }

    pub fn support(&self) -> Vec<usize> {
        self.values.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, _)| i).collect()
    }

    /// Multiplication by `x^s` modulo `x^n - 1`.
    pub fn shift(&self, s: usize) -> Self {
        let n = self.values.len();
        let mut out = vec![0u32; n];
        for (i, &v) in self.values.iter().enumerate() {
            out[(i + s) % n] = v;
        }
        Codeword { modulus: self.modulus, values: out }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        if self.values.len() != other.values.len() {
            return Err(Error::LengthMismatch { expected: self.values.len(), actual: other.values.len() });
        }
        let p = self.modulus;
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| (a + b) % p).collect();
        Ok(Codeword { modulus: p, values })
    }
}

impl Serialize for Codeword {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn c3p(p: u32, r: [u32; 3]) -> CodeSpec {
        let factors: Vec<FactorSpec> =
            (0..3).filter(|&i| r[i] > 0).map(|i| FactorSpec::unity(i as u32, r[i])).collect();
        CodeSpec::build(&CodeSpecInput::new(p, 3, &factors)).unwrap()
    }

    fn example_31() -> CodeSpec {
        CodeSpec::build(&CodeSpecInput::new(5, 4, &[FactorSpec::element(2, 2), FactorSpec::element(3, 1)])).unwrap()
    }

    fn amds_4p8(p: u32) -> CodeSpec {
        let f = [FactorSpec::element(1, 3), FactorSpec::element(p - 1, 2), FactorSpec::quadratic([1, 0, 1], 1)];
        CodeSpec::build(&CodeSpecInput::new(p, 4, &f)).unwrap()
    }

    #[test]
    fn build_examples() {
        let s = example_31();
        assert_eq!((s.n(), s.k()), (20, 17));
        let s = c3p(7, [4, 2, 1]);
        assert_eq!((s.n(), s.k()), (21, 14));
        assert_eq!(s.omega().unwrap().value(), 2);
        let s = amds_4p8(7);
        assert_eq!((s.n(), s.k()), (28, 21));
    }

    #[test]
    fn build_errors_are_distinct() {
        let unity = [FactorSpec::unity(0, 1), FactorSpec::unity(1, 1)];
        assert_eq!(CodeSpec::build(&CodeSpecInput::new(7, 5, &unity)), Err(Error::NoRootOfUnity { p: 7, l: 5 }));
        assert!(matches!(
            CodeSpec::build(&CodeSpecInput::new(7, 3, &[FactorSpec::element(3, 1)])),
            Err(Error::FactorNotDividing { .. })
        ));
        assert!(matches!(
            CodeSpec::build(&CodeSpecInput::new(7, 3, &[FactorSpec::element(1, 1), FactorSpec::unity(0, 2)])),
            Err(Error::FactorsNotCoprime(_))
        ));
        // (x-1)^7 alone: x^7 - 1 = (x-1)^7 over F_7, so the code is zero
        assert!(matches!(
            CodeSpec::build(&CodeSpecInput::new(7, 1, &[FactorSpec::element(1, 7)])),
            Err(Error::ZeroDimensional { n: 7, deg: 7 })
        ));
        assert!(matches!(
            CodeSpec::build(&CodeSpecInput::new(7, 3, &[FactorSpec::unity(0, 8)])),
            Err(Error::MultiplicityTooLarge { bound: 7, .. })
        ));
        assert!(matches!(
            CodeSpec::build_with(&CodeSpecInput::new(7, 3, &[FactorSpec::unity(0, 7)]), BuildMode::Catalog),
            Err(Error::MultiplicityTooLarge { bound: 6, .. })
        ));
        assert_eq!(
            CodeSpec::build(&CodeSpecInput::new(7, 7, &[FactorSpec::unity(0, 1)])),
            Err(Error::LengthNotCoprime { p: 7, l: 7 })
        );
        assert_eq!(CodeSpec::build(&CodeSpecInput::new(9, 2, &[])), Err(Error::NotOddPrime(9)));
        assert!(matches!(
            CodeSpec::build(&CodeSpecInput::new(5, 4, &[FactorSpec::unity(1, 1)]).with_omega(4)),
            Err(Error::InvalidOmega { .. })
        ));
    }

    #[test]
    fn json_schema() {
        let s = CodeSpec::from_json(
            r#"{"p":7,"l":3,"factors":[{"unity_exp":0,"mult":4},{"unity_exp":1,"mult":2},{"unity_exp":2,"mult":1}]}"#,
        )
        .unwrap();
        assert_eq!(s, c3p(7, [4, 2, 1]));
        let s =
            CodeSpec::from_json(r#"{"p":7,"l":4,"factors":[{"elem":1,"mult":3},{"poly":[1,0,1],"mult":1}]}"#).unwrap();
        assert_eq!(s.k(), 23);
        let s = CodeSpec::from_json(
            r#"{"p":5,"l":4,"factors":[{"unity_exp":3,"mult":2},{"unity_exp":1,"mult":1}],"omega":3}"#,
        )
        .unwrap();
        assert_eq!(s.generator(), example_31().generator());
        assert!(CodeSpec::from_json(r#"{"p":7,"l":3,"factors":[{"unity_exp":0,"elem":1,"mult":1}]}"#).is_err());
        assert!(CodeSpec::from_json(r#"{"p":7,"l":3,"factors":[{"poly":[1,1],"mult":1}]}"#).is_err());
        assert!(CodeSpec::from_json(r#"{"p":7,"l":3,"factors":[],"extra":1}"#).is_err());
    }

    #[test]
    fn json_round_trip_is_identical() {
        for s in [example_31(), c3p(7, [4, 2, 1]), amds_4p8(5), amds_4p8(7)] {
            let again = CodeSpec::from_json(&s.to_json()).unwrap();
            assert_eq!(again, s);
            let via_serde: CodeSpec = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
            assert_eq!(via_serde, s);
        }
    }

    #[test]
    fn encoding() {
        let s = c3p(7, [4, 2, 1]);
        let zero = vec![FieldElement::new(0, 7).unwrap(); s.k()];
        assert_eq!(s.encode(&zero).unwrap(), Codeword::zero(7, 21));
        let mut unit = zero.clone();
        unit[0] = FieldElement::new(1, 7).unwrap();
        assert_eq!(s.encode(&unit).unwrap().values(), s.generator().to_padded(21).as_slice());
        assert!(matches!(s.encode(&zero[1..]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn amds_lp7_message_reproduces_the_witness() {
        for (p, l) in [(7u32, 3u32), (11, 5)] {
            let f = [FactorSpec::unity(0, 4), FactorSpec::unity(1, 1), FactorSpec::unity(2, 1)];
            let s = CodeSpec::build(&CodeSpecInput::new(p, l, &f)).unwrap();
            let target = Polynomial::x_pow_minus_one(p, p as usize)
                .mul(&Polynomial::x_pow_minus_one(p, p as usize - 1))
                .unwrap();
            let (msg, rem) = target.divmod(s.generator()).unwrap();
            assert!(rem.is_zero());
            let word = s.encode_polynomial(&msg).unwrap();
            let n = s.n() as i64;
            let mut expected = vec![0i64; n as usize];
            let pp = p as usize;
            expected[2 * pp - 1] = 1;
            expected[pp] = -1;
            expected[pp - 1] = -1;
            expected[0] = 1;
            assert_eq!(word, Codeword::new(p, &expected).unwrap());
            assert!(s.contains(&word));
        }
    }

    #[test]
    fn membership() {
        let s = c3p(7, [6, 3, 3]);
        assert!(s.contains(&Codeword::zero(7, 21)));
        assert!(s.contains(&Codeword::from_raw(7, s.generator().to_padded(21))));
        let a = Codeword::new(7, &[0, 0, 1, 0, 0, 0, 0, 0, 0, 6, 6, 3, 3, 3, 4, 4, 4, 5, 1, 1, 1]).unwrap();
        let b = Codeword::new(7, &[0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 5, 4, 4, 4, 3, 3, 3, 6, 6]).unwrap();
        let c = Codeword::new(7, &[0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 4, 1, 0, 1, 1, 0, 1, 4, 0, 0]).unwrap();
        assert!(s.contains(&a));
        assert!(s.contains(&b));
        assert!(s.contains(&c));
        assert_eq!(a.add(&b).unwrap(), c);
        assert!(!s.contains(&Codeword::zero(7, 20)));
        assert!(!s.contains(&Codeword::zero(5, 21)));
    }

    #[test]
    fn check_matrix_structure() {
        let f = PrimeField::new(7).unwrap();
        for s in [example_31(), c3p(7, [4, 2, 1]), amds_4p8(5), amds_4p8(7), c3p(7, [5, 3, 2])] {
            let h = s.check_matrix();
            let r = s.redundancy();
            assert_eq!((h.rows(), h.cols()), (r, s.n()));
            for j in 0..r {
                let mut e = vec![0u32; r];
                e[j] = 1;
                assert_eq!(h.column(j), e);
            }
            let field = s.field();
            let g = s.generator().to_padded(s.n());
            assert!(h.mul_vec(field, &g).iter().all(|&v| v == 0));
            assert_eq!(h.rank(field), r);
            let _ = &f;
        }
    }

    #[test]
    fn castagnoli_examples() {
        assert_eq!(example_31().castagnoli_dh().unwrap(), 2);
        assert_eq!(c3p(7, [4, 2, 1]).castagnoli_dh().unwrap(), 5);
        assert_eq!(c3p(7, [6, 3, 3]).castagnoli_dh().unwrap(), 7);
        let kai = CodeSpec::build(&CodeSpecInput::new(
            7,
            4,
            &[FactorSpec::element(1, 3), FactorSpec::quadratic([1, 0, 1], 1)],
        ))
        .unwrap();
        assert_eq!(kai.castagnoli_dh().unwrap(), 4);
        // l = 1: every constituent below the top multiplicity is the zero code
        let rep = CodeSpec::build(&CodeSpecInput::new(5, 1, &[FactorSpec::element(1, 4)])).unwrap();
        assert_eq!(rep.castagnoli_dh().unwrap(), 5);
    }

    #[test]
    fn castagnoli_weights_for_small_t() {
        let s = c3p(13, [9, 2, 0]);
        for term in s.castagnoli_terms().unwrap() {
            assert_eq!(term.weight, term.t as usize + 1);
        }
    }

    fn arb_spec() -> impl Strategy<Value = CodeSpec> {
        (
            prop::sample::select(vec![(5u32, 4u32), (7, 3), (7, 2), (11, 5), (3, 4)]),
            proptest::collection::vec(0u32..4, 4),
        )
            .prop_filter_map("degenerate", |((p, l), mults)| {
                let roots: Vec<u32> =
                    (1..p).filter(|&a| FieldElement::new(a as i64, p).unwrap().pow(l as u64).value() == 1).collect();
                let factors: Vec<FactorSpec> = roots
                    .iter()
                    .zip(&mults)
                    .filter(|(_, &m)| m > 0)
                    .map(|(&a, &m)| FactorSpec::element(a, m))
                    .collect();
                CodeSpec::build(&CodeSpecInput::new(p, l, &factors)).ok()
            })
    }

    proptest! {
        #[test]
        fn encoded_words_are_members((s, seed) in (arb_spec(), any::<u64>())) {
            let p = s.p();
            let mut x = seed;
            let msg: Vec<FieldElement> = (0..s.k()).map(|_| {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                FieldElement::new(((x >> 33) % p as u64) as i64, p).unwrap()
            }).collect();
            let w = s.encode(&msg).unwrap();
            prop_assert!(s.contains(&w));
            prop_assert!(s.contains(&w.shift(1)));
            let h = s.check_matrix();
            prop_assert!(h.mul_vec(s.field(), w.values()).iter().all(|&v| v == 0));
            if s.castagnoli_dh().unwrap() >= 2 {
                let pos = (x % s.n() as u64) as usize;
                let mut bumped = w.values().to_vec();
                bumped[pos] = (bumped[pos] + 1 + (x >> 40) as u32 % (p - 1)) % p;
                prop_assert!(!s.contains(&Codeword::from_raw(p, bumped)));
            }
        }
    }
}
