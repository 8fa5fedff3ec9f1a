//! Brute-force oracle: every nonzero codeword.

use std::time::Instant;

use super::{classify, DistanceReport, Method, SearchConfig};
use crate::cyclic::{CodeSpec, Codeword};
use crate::error::{Error, Result};

/// Minimum Hamming and pair weights over all `p^k - 1` nonzero codewords,
/// with the lexicographically smallest codeword attaining each.
pub fn full_enum(spec: &CodeSpec, config: &SearchConfig) -> Result<DistanceReport> {
    let start = Instant::now();
    let n = spec.n();
    let k = spec.k();
    let p = spec.p();
    let field = spec.field();
    let count = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if count > config.enum_cap as u128 {
        return Err(Error::EnumerationTooLarge { what: "codewords", count, cap: config.enum_cap });
    }
    let g = spec.generator().to_padded(n);
    let rows: Vec<Vec<u32>> = (0..k)
        .map(|i| {
            let mut r = vec![0u32; n];
            r[i..].copy_from_slice(&g[..n - i]);
            r
        })
        .collect();

    let mut digits = vec![0u32; k];
    let mut word = vec![0u32; n];
    let mut best_h = (usize::MAX, Vec::new());
    let mut best_p = (usize::MAX, Vec::new());
    let mut visited = 0u64;
    'outer: loop {
        // a digit wrapping p-1 -> 0 has added its row p times, i.e. nothing
        let mut j = 0;
        loop {
            if j == k {
                break 'outer;
            }
            for (x, &y) in word.iter_mut().zip(&rows[j]) {
                *x = field.add(*x, y);
            }
            digits[j] += 1;
            if digits[j] == p {
                digits[j] = 0;
                j += 1;
            } else {
                break;
            }
        }
        visited += 1;
        let wh = word.iter().filter(|&&x| x != 0).count();
        let wp = (0..n).filter(|&i| word[i] != 0 || word[(i + 1) % n] != 0).count();
        if wh < best_h.0 || (wh == best_h.0 && word < best_h.1) {
            best_h = (wh, word.clone());
        }
        if wp < best_p.0 || (wp == best_p.0 && word < best_p.1) {
            best_p = (wp, word.clone());
        }
    }

    let class = classify(n, k, best_p.0)?;
    Ok(DistanceReport {
        spec: spec.clone(),
        n,
        k,
        d_h: best_h.0,
        d_p: best_p.0,
        class,
        witness_h: Codeword::from_raw(p, best_h.1),
        witness_p: Codeword::from_raw(p, best_p.1),
        method: Method::FullEnum,
        supports_examined: visited,
        elapsed: start.elapsed(),
    })
}
