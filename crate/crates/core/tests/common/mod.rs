//! Test-side oracles. Nothing here calls the library's engines: field
//! arithmetic, generators, membership and weights are recomputed from
//! plain integers.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symbolpair::{CodeSpec, CodeSpecInput, FactorSpec};

pub fn modpow(a: u64, mut e: u64, p: u64) -> u64 {
    let (mut b, mut r) = (a % p, 1);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Smallest element of multiplicative order exactly `l`.
pub fn root_of_unity(p: u64, l: u64) -> u64 {
    (1..p).find(|&a| modpow(a, l, p) == 1 && (1..l).all(|d| modpow(a, d, p) != 1)).expect("l divides p-1")
}

/// Low-first product of polynomials over `F_p`.
pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// `(x - a)^m`
pub fn linear_power(a: u64, m: u32, p: u64) -> Vec<u64> {
    (0..m).fold(vec![1], |acc, _| mul(&acc, &[(p - a % p) % p, 1], p))
}

/// Remainder of `c` modulo the monic `g`.
pub fn rem(c: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = c.to_vec();
    let dg = g.len() - 1;
    for top in (dg..r.len()).rev() {
        let q = r[top];
        if q == 0 {
            continue;
        }
        for (i, &gi) in g.iter().enumerate() {
            let idx = top - dg + i;
            r[idx] = (r[idx] + p - q * gi % p) % p;
        }
    }
    r.truncate(dg);
    r
}

pub fn is_multiple(c: &[u64], g: &[u64], p: u64) -> bool {
    rem(c, g, p).iter().all(|&x| x == 0)
}

pub fn hamming(v: &[u64]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Pair weight straight from the read vector.
pub fn pair(v: &[u64]) -> usize {
    let n = v.len();
    (0..n).filter(|&i| (v[i], v[(i + 1) % n]) != (0, 0)).count()
}

pub fn lift(values: &[u32]) -> Vec<u64> {
    values.iter().map(|&x| x as u64).collect()
}

/// Minimum Hamming and pair weights over every nonzero `m(x) g(x)`,
/// `deg m < k`.
pub fn brute_force(p: u64, n: usize, g: &[u64]) -> (usize, usize) {
    let k = n + 1 - g.len();
    let mut digits = vec![0u64; k];
    let mut word = vec![0u64; n];
    let (mut dh, mut dp) = (usize::MAX, usize::MAX);
    loop {
        let mut j = 0;
        while j < k {
            for (i, &gi) in g.iter().enumerate() {
                word[i + j] = (word[i + j] + gi) % p;
            }
            digits[j] += 1;
            if digits[j] < p {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
        if j == k {
            return (dh, dp);
        }
        dh = dh.min(hamming(&word));
        dp = dp.min(pair(&word));
    }
}

/// A generated code together with its independently computed generator.
pub struct SuiteCode {
    pub spec: CodeSpec,
    pub generator: Vec<u64>,
    pub label: String,
}

/// Seeded random codes over `p ∈ {3, 5, 7}` with `p^k <= max_words`.
/// Base factors are the linear factors `x - ω^e` when `l | p-1`, and
/// `x - 1`, `x + 1`, `x^2 + 1` for `l = 4` at `p ∈ {3, 7}`.
pub fn suite(count: usize, max_words: u64, seed: u64) -> Vec<SuiteCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shapes: [(u64, u32); 10] = [(3, 1), (3, 2), (3, 4), (5, 1), (5, 2), (5, 4), (7, 1), (7, 2), (7, 3), (7, 4)];
    let mut out: Vec<SuiteCode> = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 100_000, "suite generation stalled");
        let (p, l) = shapes[rng.gen_range(0..shapes.len())];
        let mut factors = Vec::new();
        let mut g = vec![1u64];
        if (p - 1) % l as u64 == 0 {
            let w = root_of_unity(p, l as u64);
            for e in 0..l {
                let m = rng.gen_range(0..=p as u32);
                if m > 0 {
                    factors.push(FactorSpec::unity(e, m));
                    g = mul(&g, &linear_power(modpow(w, e as u64, p), m, p), p);
                }
            }
        } else {
            for (i, base) in [vec![p - 1, 1], vec![1, 1], vec![1, 0, 1]].into_iter().enumerate() {
                let m = rng.gen_range(0..=p as u32);
                if m == 0 {
                    continue;
                }
                factors.push(match i {
                    0 => FactorSpec::element(1, m),
                    1 => FactorSpec::element(p as u32 - 1, m),
                    _ => FactorSpec::quadratic([1, 0, 1], m),
                });
                for _ in 0..m {
                    g = mul(&g, &base, p);
                }
            }
        }
        let n = l as usize * p as usize;
        let deg = g.len() - 1;
        if deg == 0 || deg >= n {
            continue;
        }
        let k = (n - deg) as u32;
        if (p as u128).pow(k) > max_words as u128 {
            continue;
        }
        if out.iter().any(|c| c.generator == g && c.spec.n() == n) {
            continue;
        }
        let spec = CodeSpec::build(&CodeSpecInput::new(p as u32, l, &factors)).expect("suite specs are valid");
        let label = format!("p={p} l={l} g={}", spec.factored_form());
        out.push(SuiteCode { spec, generator: g, label });
    }
    out
}
