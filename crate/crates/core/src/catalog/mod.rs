//! Code families, the equivalence transform, and expected results.
//!
//! Every constructor validates its family's parameter constraints and
//! attaches the expected `(n - k, d_p, class)` where one is known.
//! [`registry`] collects the rows that `verify-paper` checks; [`scan`]
//! sweeps the length-`3p` family.

mod registry;
mod scan;

use std::fmt;

use serde::Serialize;

pub use registry::{
    named_codewords, registry, registry_at, verify_registry, verify_row, write_outcomes_csv, NamedCodeword, PinnedWord,
    RegistryRow, RowOutcome, RowStatus, Table,
};
pub use scan::{scan, scan_triples, write_scan_csv, ScanRow, ScanSummary};

use crate::cyclic::{BuildMode, CodeSpec, CodeSpecInput, FactorKind, FactorSpec};
use crate::distsearch::Classification;
use crate::error::{Error, Result};
use crate::gfp::{element_order, gcd, primitive_root_of_unity, FieldElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    #[serde(rename = "THM31")]
    Thm31,
    #[serde(rename = "COR36")]
    Cor36,
    #[serde(rename = "C3P")]
    C3p,
    #[serde(rename = "AMDS_LP7")]
    AmdsLp7,
    #[serde(rename = "AMDS_4P8")]
    Amds4p8,
    #[serde(rename = "NEGATIVE")]
    Negative,
    #[serde(rename = "LEGACY")]
    Legacy,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Thm31 => "THM31",
            Family::Cor36 => "COR36",
            Family::C3p => "C3P",
            Family::AmdsLp7 => "AMDS_LP7",
            Family::Amds4p8 => "AMDS_4P8",
            Family::Negative => "NEGATIVE",
            Family::Legacy => "LEGACY",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassExpectation {
    Is(Classification),
    NotMds,
    Unspecified,
}

impl ClassExpectation {
    pub fn admits(self, c: Classification) -> bool {
        match self {
            ClassExpectation::Is(e) => e == c,
            ClassExpectation::NotMds => c != Classification::Mds,
            ClassExpectation::Unspecified => true,
        }
    }
}

impl fmt::Display for ClassExpectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassExpectation::Is(c) => write!(f, "{c}"),
            ClassExpectation::NotMds => f.write_str("not MDS"),
            ClassExpectation::Unspecified => f.write_str("-"),
        }
    }
}

/// What a row claims. Missing fields are not checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub redundancy: Option<usize>,
    pub d_h: Option<usize>,
    pub d_p: Option<usize>,
    pub d_p_at_most: Option<usize>,
    pub class: ClassExpectation,
}

impl Expected {
    pub fn pair(redundancy: usize, d_p: usize, class: Classification) -> Self {
        Expected {
            redundancy: Some(redundancy),
            d_h: None,
            d_p: Some(d_p),
            d_p_at_most: None,
            class: ClassExpectation::Is(class),
        }
    }

    pub fn not_mds(d_h: usize) -> Self {
        Expected { redundancy: None, d_h: Some(d_h), d_p: None, d_p_at_most: None, class: ClassExpectation::NotMds }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(r) = self.redundancy {
            parts.push(format!("n-k={r}"));
        }
        if let Some(d) = self.d_h {
            parts.push(format!("d_H={d}"));
        }
        if let Some(d) = self.d_p {
            parts.push(format!("d_p={d}"));
        }
        if let Some(d) = self.d_p_at_most {
            parts.push(format!("d_p<={d}"));
        }
        if self.class != ClassExpectation::Unspecified {
            parts.push(self.class.to_string());
        }
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub family: Family,
    pub params: String,
    pub spec: CodeSpec,
    pub expected: Option<Expected>,
}

fn constraint(family: &'static str, reason: impl Into<String>) -> Error {
    Error::FamilyConstraint { family, reason: reason.into() }
}

const THM31_PATTERNS: [[u32; 3]; 10] =
    [[4, 0, 0], [3, 0, 1], [2, 1, 1], [2, 0, 2], [1, 2, 1], [1, 1, 2], [1, 0, 3], [0, 3, 1], [0, 1, 3], [0, 2, 2]];

/// `(x-1)^r1 (x+1)^r2 (x-ω)^r3`, total degree 4, expected MDS with `d_p = 6`.
///
/// The `(4,0,0)` pattern needs no root of unity and is accepted for any
/// `l`; the others need `l > 2`, and a `(x+1)` factor needs `l` even. Odd
/// `l` with `r2 > 0` is rejected; see [`theorem31_odd`].
pub fn theorem31(p: u32, l: u32, r: [u32; 3]) -> Result<FamilyInstance> {
    const F: &str = "theorem31";
    if !THM31_PATTERNS.contains(&r) {
        return Err(constraint(F, format!("{r:?} is not one of the listed patterns")));
    }
    if r != [4, 0, 0] && l <= 2 {
        return Err(constraint(F, format!("l={l} must exceed 2")));
    }
    if r[1] > 0 && l % 2 == 1 {
        return Err(constraint(F, format!("x+1 does not divide x^{l}-1 for odd l={l}")));
    }
    let mut factors = Vec::new();
    push_nonzero(&mut factors, FactorSpec::element(1, r[0]));
    push_nonzero(&mut factors, FactorSpec::element(p - 1, r[1]));
    push_nonzero(&mut factors, FactorSpec::unity(1, r[2]));
    let spec = CodeSpec::build_with(&CodeSpecInput::new(p, l, &factors), BuildMode::Catalog)?;
    let expected = (spec.k() > 1).then(|| Expected::pair(4, 6, Classification::Mds));
    Ok(FamilyInstance {
        family: Family::Thm31,
        params: format!("l={l} r=({},{},{})", r[0], r[1], r[2]),
        spec,
        expected,
    })
}

/// The two length-`2lp` readings of an odd-`l` pattern containing `x+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OddReading {
    /// ω keeps order `l`; the code lives in `F_p[x]/(x^{2lp}-1)`.
    OmegaOrderL,
    /// ω is taken of order `2l`.
    OmegaOrder2L,
}

impl fmt::Display for OddReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OddReading::OmegaOrderL => "length 2lp, w of order l",
            OddReading::OmegaOrder2L => "length 2lp, w of order 2l",
        })
    }
}

/// Odd-`l` pattern with `x+1`, built at length `2lp` under one reading.
/// No expectation is attached; the registry reports what each reading gives.
pub fn theorem31_odd(p: u32, l: u32, r: [u32; 3], reading: OddReading) -> Result<FamilyInstance> {
    const F: &str = "theorem31";
    if !THM31_PATTERNS.contains(&r) || r[1] == 0 || l % 2 == 0 || l < 3 {
        return Err(constraint(F, "odd readings apply to odd l > 2 with an x+1 factor"));
    }
    let omega = match reading {
        OddReading::OmegaOrderL => primitive_root_of_unity(p, l)?,
        OddReading::OmegaOrder2L => primitive_root_of_unity(p, 2 * l)?,
    };
    let mut factors = Vec::new();
    push_nonzero(&mut factors, FactorSpec::element(1, r[0]));
    push_nonzero(&mut factors, FactorSpec::element(p - 1, r[1]));
    push_nonzero(&mut factors, FactorSpec::element(omega.value(), r[2]));
    let spec = CodeSpec::build_with(&CodeSpecInput::new(p, 2 * l, &factors), BuildMode::Catalog)?;
    Ok(FamilyInstance {
        family: Family::Thm31,
        params: format!("l={l} r=({},{},{}) [{reading}, w={}]", r[0], r[1], r[2], omega.value()),
        spec,
        expected: None,
    })
}

fn push_nonzero(v: &mut Vec<FactorSpec>, f: FactorSpec) {
    if f.multiplicity > 0 {
        v.push(f);
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Parameters of the two-root family `(x - ω^t1)^r1 (x - ω^t2)^r2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoRoot {
    pub p: u32,
    pub l: u32,
    /// Defaults to the smallest primitive element of `F_p`.
    pub omega: Option<u32>,
    pub t1: u32,
    pub t2: u32,
    pub r1: u32,
    pub r2: u32,
}

fn two_root_spec(c: &TwoRoot) -> Result<(CodeSpec, u32)> {
    let w = match c.omega {
        Some(w) => FieldElement::new(w as i64, c.p)?,
        None => primitive_root_of_unity(c.p, c.p - 1)?,
    };
    let a1 = w.pow(c.t1 as u64);
    let a2 = w.pow(c.t2 as u64);
    let factors = [FactorSpec::element(a1.value(), c.r1), FactorSpec::element(a2.value(), c.r2)];
    let spec = CodeSpec::build_with(&CodeSpecInput::new(c.p, c.l, &factors), BuildMode::Catalog)?;
    Ok((spec, w.value()))
}

/// The two-root family with its coprimality condition enforced; expected
/// MDS with `d_p = 5` at total degree 3 and `d_p = 6` at total degree 4.
pub fn corollary36(c: TwoRoot) -> Result<FamilyInstance> {
    const F: &str = "corollary36";
    if let Some(w) = c.omega {
        let w = FieldElement::new(w as i64, c.p)?;
        if w.is_zero() || element_order(w)? != c.p - 1 {
            return Err(constraint(F, format!("w={} is not a primitive element of F_{}", w.value(), c.p)));
        }
    }
    let allowed = [(2, 1), (1, 2), (3, 1), (1, 3), (2, 2)];
    if !allowed.contains(&(c.r1, c.r2)) {
        return Err(constraint(F, format!("(r1,r2)=({},{}) not in {allowed:?}", c.r1, c.r2)));
    }
    let diff = (c.t1 as i64 - c.t2 as i64).unsigned_abs();
    if gcd(diff, c.l as u64) != 1 {
        return Err(constraint(F, format!("gcd(t1-t2, l) = gcd({diff}, {}) != 1", c.l)));
    }
    let (spec, w) = two_root_spec(&c)?;
    let fw = FieldElement::new(w as i64, c.p)?;
    let o1 = element_order(fw.pow(c.t1 as u64))? as u64;
    let o2 = element_order(fw.pow(c.t2 as u64))? as u64;
    if lcm(o1, o2) != c.l as u64 {
        return Err(constraint(F, format!("lcm of root orders is {} not l={}", lcm(o1, o2), c.l)));
    }
    let deg = (c.r1 + c.r2) as usize;
    let expected = Expected::pair(deg, deg + 2, Classification::Mds);
    Ok(FamilyInstance { family: Family::Cor36, params: two_root_params(&c, w), spec, expected: Some(expected) })
}

/// The same family with the coprimality check skipped, as a negative
/// control: expected `d_H = 2` and not MDS.
pub fn corollary36_negative(c: TwoRoot) -> Result<FamilyInstance> {
    let (spec, w) = two_root_spec(&c)?;
    Ok(FamilyInstance {
        family: Family::Negative,
        params: two_root_params(&c, w),
        spec,
        expected: Some(Expected::not_mds(2)),
    })
}

fn two_root_params(c: &TwoRoot, w: u32) -> String {
    format!("l={} w={w} t=({},{}) r=({},{})", c.l, c.t1, c.t2, c.r1, c.r2)
}

/// Rows of the two length-`3p` tables: `(r, n - k, d_p)`.
pub(crate) const MDS_3P_TABLE: [([u32; 3], usize, usize); 10] = [
    ([0, 2, 0], 2, 4),
    ([2, 1, 0], 3, 5),
    ([3, 1, 0], 4, 6),
    ([3, 1, 1], 5, 7),
    ([3, 2, 1], 6, 8),
    ([4, 2, 2], 8, 10),
    ([5, 3, 2], 10, 12),
    ([2, 1, 1], 4, 6),
    ([2, 2, 0], 4, 6),
    ([4, 2, 1], 7, 9),
];

pub(crate) const AMDS_3P_TABLE: [([u32; 3], usize, usize); 11] = [
    ([4, 3, 2], 9, 10),
    ([0, 3, 0], 3, 4),
    ([2, 2, 1], 5, 6),
    ([3, 2, 0], 5, 6),
    ([3, 2, 2], 7, 8),
    ([3, 3, 1], 7, 8),
    ([4, 1, 0], 5, 6),
    ([4, 1, 1], 6, 7),
    ([4, 3, 1], 8, 9),
    ([5, 2, 1], 8, 9),
    ([5, 2, 2], 9, 10),
];

/// Table expectation for an exact triple.
pub fn table_3p(r: [u32; 3]) -> Option<Expected> {
    if let Some(&(_, nk, dp)) = MDS_3P_TABLE.iter().find(|(t, _, _)| *t == r) {
        return Some(Expected::pair(nk, dp, Classification::Mds));
    }
    AMDS_3P_TABLE.iter().find(|(t, _, _)| *t == r).map(|&(_, nk, dp)| Expected::pair(nk, dp, Classification::Amds))
}

/// `d_p` predicted by the distance ladder for a normalized triple, when
/// one of its rungs applies. Each rung needs the triple to lie below the
/// code it is derived from (a subcode), which is part of the condition.
pub fn ladder_dp(r: [u32; 3]) -> Option<usize> {
    let [r1, r2, r3] = r;
    let s23 = r2 + r3;
    if r1 == 0 && r3 == 0 && r2 >= 2 {
        return Some(4);
    }
    if r == [2, 1, 0] {
        return Some(5);
    }
    if r3 == 0 && r1 >= 2 && r2 >= 1 && r1 + r2 >= 4 {
        return Some(6);
    }
    if r1 == 2 && (2..=4).contains(&s23) && r2 >= 1 {
        return Some(6);
    }
    if r2 == 1 && r3 == 1 && r1 >= 3 {
        return Some(7);
    }
    if r1 == 3 && (3..=6).contains(&s23) && r2 >= 2 && r3 >= 1 {
        return Some(8);
    }
    if r3 == 1 && r1 >= 4 && r2 >= 2 {
        return Some(9);
    }
    if r1 >= 4 && r2 == 2 && r3 == 2 {
        return Some(10);
    }
    if r1 == 4 && (4..=8).contains(&s23) && r2 >= 2 && r3 >= 2 {
        return Some(10);
    }
    None
}

/// The length-`3p` MDS condition set: `0 <= r2 - r3 <= 1` together with
/// `r1 = r2 + r3` (`r1 <= 5`) or `r1 = r2 + r3 + 1` (`r1 < 5`).
pub fn mds_3p_condition(r: [u32; 3]) -> bool {
    let [r1, r2, r3] = r;
    if r2 < r3 || r2 - r3 > 1 {
        return false;
    }
    (r1 <= 5 && r1 == r2 + r3) || (r1 < 5 && r1 == r2 + r3 + 1)
}

fn c3p_factors(r: [u32; 3]) -> Vec<FactorSpec> {
    (0..3).filter(|&i| r[i] > 0).map(|i| FactorSpec::unity(i as u32, r[i])).collect()
}

/// `(x-1)^r1 (x-ω)^r2 (x-ω²)^r3` of length `3p`, with `p-1 >= r1 >= r2 >= r3`
/// or the single-factor shape `(0, r2, 0)`.
pub fn c3p(p: u32, r: [u32; 3]) -> Result<FamilyInstance> {
    const F: &str = "c3p";
    let sorted = r[0] >= r[1] && r[1] >= r[2];
    let single = r[0] == 0 && r[2] == 0 && r[1] > 0;
    if !(sorted || single) {
        return Err(constraint(F, format!("{r:?} is not normalized (need r1 >= r2 >= r3)")));
    }
    if r.iter().all(|&x| x == 0) {
        return Err(constraint(F, "generator is 1"));
    }
    let mut inst = c3p_permuted(p, r)?;
    inst.expected = table_3p(r).or_else(|| {
        ladder_dp(r).map(|d| Expected {
            redundancy: Some(r.iter().sum::<u32>() as usize),
            d_h: None,
            d_p: Some(d),
            d_p_at_most: None,
            class: ClassExpectation::Unspecified,
        })
    });
    Ok(inst)
}

/// Any triple, no normalization and no expectation.
pub fn c3p_permuted(p: u32, r: [u32; 3]) -> Result<FamilyInstance> {
    c3p_with_omega(p, r, None)
}

/// As [`c3p_permuted`] with an explicit cube root of unity.
pub fn c3p_with_omega(p: u32, r: [u32; 3], omega: Option<u32>) -> Result<FamilyInstance> {
    if p % 3 != 1 {
        return Err(Error::NoRootOfUnity { p, l: 3 });
    }
    let mut input = CodeSpecInput::new(p, 3, &c3p_factors(r));
    input.omega = omega;
    let spec = CodeSpec::build_with(&input, BuildMode::Catalog)?;
    Ok(FamilyInstance { family: Family::C3p, params: format!("r=({},{},{})", r[0], r[1], r[2]), spec, expected: None })
}

/// `(x-1)^4 (x-ω)(x-ω²)` of length `lp`, `l` odd; expected AMDS with `d_p = 7`.
pub fn amds_lp7(p: u32, l: u32) -> Result<FamilyInstance> {
    const F: &str = "amds_lp7";
    if l < 3 || l % 2 == 0 {
        return Err(constraint(F, format!("l={l} must be odd and at least 3")));
    }
    let factors = [FactorSpec::unity(0, 4), FactorSpec::unity(1, 1), FactorSpec::unity(2, 1)];
    let spec = CodeSpec::build_with(&CodeSpecInput::new(p, l, &factors), BuildMode::Catalog)?;
    Ok(FamilyInstance {
        family: Family::AmdsLp7,
        params: format!("l={l}"),
        spec,
        expected: Some(Expected::pair(6, 7, Classification::Amds)),
    })
}

/// `x^{2p-1} - x^p - x^{p-1} + 1`, a pair-weight-7 word of [`amds_lp7`].
pub fn amds_lp7_witness(p: u32, l: u32) -> Result<crate::cyclic::Codeword> {
    let n = (p * l) as usize;
    let pu = p as usize;
    let mut v = vec![0i64; n];
    v[0] = 1;
    v[pu - 1] = -1;
    v[pu] = -1;
    v[2 * pu - 1] = 1;
    crate::cyclic::Codeword::new(p, &v)
}

/// `(x-1)^3 (x+1)^2 (x^2+1)` of length `4p`; expected AMDS with `d_p = 8`
/// for `p >= 5`. At `p = 3` the multiplicity 3 equals `p`, so it is built
/// without the catalog bound and carries no expectation.
pub fn amds_4p8(p: u32) -> Result<FamilyInstance> {
    let factors = [FactorSpec::element(1, 3), FactorSpec::element(p - 1, 2), FactorSpec::quadratic([1, 0, 1], 1)];
    let input = CodeSpecInput::new(p, 4, &factors);
    let (spec, expected) = if p > 3 {
        (CodeSpec::build_with(&input, BuildMode::Catalog)?, Some(Expected::pair(7, 8, Classification::Amds)))
    } else {
        (CodeSpec::build(&input)?, None)
    };
    Ok(FamilyInstance { family: Family::Amds4p8, params: "l=4".into(), spec, expected })
}

/// The code `{c(u·x) : c ∈ C}`. Each root `a` of the generator moves to
/// `a/u`, and coordinate `j` of a codeword is multiplied by `u^j`, so
/// supports and both weights are preserved. Needs `u^l = 1` so that
/// `x^n - 1` is fixed by the substitution.
pub fn equivalence_scale(spec: &CodeSpec, u: FieldElement) -> Result<CodeSpec> {
    const F: &str = "equivalence_scale";
    let p = spec.p();
    let l = spec.l();
    if u.modulus() != p {
        return Err(Error::ModulusMismatch { left: p, right: u.modulus() });
    }
    if u.is_zero() {
        return Err(constraint(F, "u must be nonzero"));
    }
    if u.pow(l as u64).value() != 1 {
        return Err(constraint(F, format!("u={} is not an l-th root of unity (l={l})", u.value())));
    }
    let u_inv = u.inv()?;
    // u = ω^s; a unity root ω^e maps to ω^(e - s)
    let shift = spec.omega().map(|w| (0..l).find(|&s| w.pow(s as u64) == u).expect("u^l = 1 puts u in <ω>"));
    let factors: Vec<FactorSpec> = spec
        .factors()
        .iter()
        .map(|f| {
            let kind = match f.kind {
                FactorKind::UnityRoot { exp } => {
                    let s = shift.expect("unity factor implies ω");
                    FactorKind::UnityRoot { exp: (exp % l + l - s) % l }
                }
                FactorKind::Element { value } => {
                    let a = FieldElement::new(value as i64, p).expect("valid").mul(u_inv).expect("same modulus");
                    FactorKind::Element { value: a.value() }
                }
                FactorKind::Quadratic { coeffs: [c0, c1, c2] } => {
                    // f(u x) / (c2 u²)
                    let fe = |v: u32| FieldElement::new(v as i64, p).expect("valid");
                    let lead_inv = fe(c2).mul(u.pow(2)).and_then(|x| x.inv()).expect("nonzero");
                    let n0 = fe(c0).mul(lead_inv).expect("same modulus");
                    let n1 = fe(c1).mul(u).and_then(|x| x.mul(lead_inv)).expect("same modulus");
                    FactorKind::Quadratic { coeffs: [n0.value(), n1.value(), 1] }
                }
            };
            FactorSpec { kind, multiplicity: f.multiplicity }
        })
        .collect();
    let mut input = CodeSpecInput::new(p, l, &factors);
    input.omega = spec.omega().map(|w| w.value());
    CodeSpec::build_with(&input, spec.mode())
}

/// Image of a codeword under the coordinate map `c_j ↦ u^j c_j`.
pub fn scale_codeword(word: &crate::cyclic::Codeword, u: FieldElement) -> crate::cyclic::Codeword {
    let p = word.modulus();
    let mut uj = FieldElement::new(1, p).expect("valid");
    let values: Vec<i64> = word
        .values()
        .iter()
        .map(|&c| {
            let v = FieldElement::new(c as i64, p).expect("valid").mul(uj).expect("same modulus");
            uj = uj.mul(u).expect("same modulus");
            v.value() as i64
        })
        .collect();
    crate::cyclic::Codeword::new(p, &values).expect("valid prime")
}
