//! Exact minimum distances by support search over the check matrix.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::supports::{partitions, walk};
use super::zeroset::{prefer_zero_sets, zero_set_search};
use super::{run_with_workers, SearchConfig};
use crate::cyclic::{CodeSpec, Codeword};
use crate::error::{Error, Result};
use crate::gfp::PrimeField;
use crate::linalg::{nullspace_from_rref, rref_in_place, Matrix};
use crate::pairmetric::pair_weight;

/// Result of one search pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub distance: usize,
    pub witness: Codeword,
    pub supports_examined: u64,
}

/// Columns of the check matrix, pre-split for cheap restriction.
struct Columns {
    rows: usize,
    cols: Vec<Vec<u32>>,
}

impl Columns {
    fn new(spec: &CodeSpec) -> Self {
        let h: Matrix = spec.check_matrix();
        Columns { rows: h.rows(), cols: (0..h.cols()).map(|j| h.column(j)).collect() }
    }

    /// Row-major `rows × |s|` restriction.
    fn restrict(&self, s: &[usize]) -> Vec<u32> {
        let w = s.len();
        let mut data = vec![0u32; self.rows * w];
        for (j, &c) in s.iter().enumerate() {
            for i in 0..self.rows {
                data[i * w + j] = self.cols[c][i];
            }
        }
        data
    }
}

fn place(p: u32, n: usize, s: &[usize], v: &[u32]) -> Codeword {
    let mut values = vec![0u32; n];
    for (&i, &x) in s.iter().zip(v) {
        values[i] = x;
    }
    Codeword::from_raw(p, values)
}

fn scale_to_unit_lead(field: &PrimeField, v: &mut [u32]) {
    if let Some(&lead) = v.iter().find(|&&x| x != 0) {
        let inv = field.inv(lead);
        for x in v.iter_mut() {
            *x = field.mul(*x, inv);
        }
    }
}

/// The generator as a codeword, scaled so its first nonzero entry is 1.
fn generator_word(spec: &CodeSpec) -> Codeword {
    let mut g = spec.generator().to_padded(spec.n());
    scale_to_unit_lead(spec.field(), &mut g);
    Codeword::from_raw(spec.p(), g)
}

/// Minimum Hamming distance: the first weight `w` at which some `w`
/// columns of the check matrix are dependent.
///
/// At that weight every dependency has full support and is unique up to
/// scaling, so the witness is the lexicographically first such support
/// with its dependency scaled to start with 1.
///
/// Low-rate codes, where spanning sets of zero positions are far fewer than
/// supports, are searched by zero sets instead.
pub fn min_dh_support(spec: &CodeSpec, config: &SearchConfig) -> Result<SearchOutcome> {
    if prefer_zero_sets(spec.n(), spec.k()) {
        return run_with_workers(config.workers, || zero_set_search(spec).map(|(h, _)| h))?;
    }
    run_with_workers(config.workers, || dh_search(spec))?
}

pub(super) fn dh_search(spec: &CodeSpec) -> Result<SearchOutcome> {
    let n = spec.n();
    let p = spec.p();
    let field = spec.field();
    let cols = Columns::new(spec);
    let r = cols.rows;
    let mut examined = 0u64;

    for w in 1..n {
        let found = AtomicUsize::new(usize::MAX);
        let parts: Vec<(usize, Option<Vec<usize>>, u64)> = partitions(n, w)
            .into_par_iter()
            .map(|q2| {
                let mut seen = 0u64;
                let mut hit = None;
                let _ = walk(n, w, q2, &|| usize::MAX, &mut |s: &[usize], _| {
                    if found.load(Ordering::Relaxed) < q2 {
                        return ControlFlow::Break(());
                    }
                    seen += 1;
                    let mut data = cols.restrict(s);
                    if rref_in_place(field, &mut data, r, w).len() < w {
                        hit = Some(s.to_vec());
                        found.fetch_min(q2, Ordering::Relaxed);
                        return ControlFlow::Break(());
                    }
                    ControlFlow::Continue(())
                });
                (q2, hit, seen)
            })
            .collect();

        let first = parts.iter().filter(|(_, h, _)| h.is_some()).min_by_key(|(q2, _, _)| *q2);
        let Some((q2_hit, Some(s), seen_hit)) = first else {
            examined += parts.iter().map(|(_, _, c)| c).sum::<u64>();
            continue;
        };
        // count only what any schedule must see: the partitions before the
        // hit plus the hit partition up to the hit
        examined += parts.iter().filter(|(q, _, _)| q < q2_hit).map(|(_, _, c)| c).sum::<u64>() + seen_hit;

        let mut data = cols.restrict(s);
        let pivots = rref_in_place(field, &mut data, r, w);
        let null = nullspace_from_rref(field, &data, w, &pivots);
        let [v] = null.as_slice() else {
            return Err(Error::Internal(format!("nullity {} at the minimum weight {w}", null.len())));
        };
        let mut v = v.clone();
        if v.contains(&0) {
            return Err(Error::Internal(format!("dependency on {s:?} does not have full support")));
        }
        scale_to_unit_lead(field, &mut v);
        return Ok(SearchOutcome { distance: w, witness: place(p, n, s, &v), supports_examined: examined });
    }

    // every nonzero codeword has full support, the generator included
    Ok(SearchOutcome { distance: n, witness: generator_word(spec), supports_examined: examined + 1 })
}

/// Ordering key of a candidate: pair weight, Hamming weight, support, values.
type Key = (usize, usize, Vec<usize>, Vec<u32>);

struct PartResult {
    best: Option<Key>,
    /// `histogram[pw]` = supports of pair weight `pw` that reached linear algebra.
    histogram: Vec<u64>,
}

/// Minimum symbol-pair distance, given the minimum Hamming distance.
///
/// Walks normalized supports by increasing weight, keeping only those whose
/// pair weight does not exceed the best found so far. Ties are explored so
/// the witness is the smallest key `(ω_p, ω_H, support, values)` no matter
/// how the partitions are scheduled. Low-rate codes go by zero sets, as in
/// [`min_dh_support`].
pub fn min_dp_support(spec: &CodeSpec, d_h: usize, config: &SearchConfig) -> Result<SearchOutcome> {
    if prefer_zero_sets(spec.n(), spec.k()) {
        return run_with_workers(config.workers, || zero_set_search(spec).map(|(_, d)| d))?;
    }
    run_with_workers(config.workers, || dp_search(spec, d_h, config.nullspace_cap))?
}

pub(super) fn dp_search(spec: &CodeSpec, d_h: usize, cap: u64) -> Result<SearchOutcome> {
    let n = spec.n();
    let p = spec.p();
    let field = spec.field();
    let cols = Columns::new(spec);

    let g = generator_word(spec);
    let best = AtomicUsize::new(pair_weight(g.values())?);
    let mut best_key: Option<Key> = None;
    let mut histogram = vec![0u64; n + 1];

    let mut w = d_h.max(1);
    while w < n && w < best.load(Ordering::Relaxed) {
        let parts: Vec<PartResult> = partitions(n, w)
            .into_par_iter()
            .map(|q2| {
                let mut part = PartResult { best: None, histogram: vec![0; n + 1] };
                let mut failure = None;
                let limit = || best.load(Ordering::Relaxed).saturating_sub(w);
                let _ = walk(n, w, q2, &limit, &mut |s: &[usize], runs| {
                    let pw = w + runs;
                    if pw > best.load(Ordering::Relaxed) {
                        return ControlFlow::Continue(());
                    }
                    part.histogram[pw] += 1;
                    match full_support_vector(field, &cols, s, cap) {
                        Ok(Some(v)) => {
                            let key = (pw, w, s.to_vec(), v);
                            if part.best.as_ref().is_none_or(|b| key < *b) {
                                part.best = Some(key);
                            }
                            best.fetch_min(pw, Ordering::Relaxed);
                            ControlFlow::Continue(())
                        }
                        Ok(None) => ControlFlow::Continue(()),
                        Err(e) => {
                            failure = Some(e);
                            ControlFlow::Break(())
                        }
                    }
                });
                match failure {
                    Some(e) => Err(e),
                    None => Ok(part),
                }
            })
            .collect::<Result<Vec<_>>>()?;

        for part in parts {
            for (h, c) in histogram.iter_mut().zip(&part.histogram) {
                *h += c;
            }
            if let Some(key) = part.best {
                if best_key.as_ref().is_none_or(|b| key < *b) {
                    best_key = Some(key);
                }
            }
        }
        w += 1;
    }

    let (distance, witness) = match best_key {
        Some((pw, _, s, v)) => (pw, place(p, n, &s, &v)),
        // nothing beat a full-support codeword, so d_p = n
        None => (n, g),
    };
    let d_p = best.load(Ordering::Relaxed);
    if d_p != distance {
        return Err(Error::Internal(format!("pair bound {d_p} has no witness (best witness {distance})")));
    }
    let examined = histogram[..=distance].iter().sum();
    Ok(SearchOutcome { distance, witness, supports_examined: examined })
}

/// The lexicographically smallest codeword with support exactly `s` and
/// first entry 1, if one exists.
fn full_support_vector(field: &PrimeField, cols: &Columns, s: &[usize], cap: u64) -> Result<Option<Vec<u32>>> {
    let w = s.len();
    let mut data = cols.restrict(s);
    let pivots = rref_in_place(field, &mut data, cols.rows, w);
    let basis = nullspace_from_rref(field, &data, w, &pivots);
    let m = basis.len();
    if m == 0 {
        return Ok(None);
    }
    if m == 1 {
        let mut v = basis.into_iter().next().expect("one vector");
        if v.contains(&0) {
            return Ok(None);
        }
        scale_to_unit_lead(field, &mut v);
        return Ok(Some(v));
    }
    let p = field.modulus() as u128;
    let count = (p.pow(m as u32) - 1) / (p - 1);
    if count > cap as u128 {
        return Err(Error::EnumerationTooLarge { what: "projective nullspace vectors", count, cap });
    }
    // projective representatives: leading coefficient 1 at index `lead`
    let mut best: Option<Vec<u32>> = None;
    let mut coeffs = vec![0u32; m];
    let mut v = vec![0u32; w];
    for lead in 0..m {
        coeffs.iter_mut().for_each(|c| *c = 0);
        coeffs[lead] = 1;
        loop {
            v.iter_mut().for_each(|x| *x = 0);
            for (c, b) in coeffs.iter().zip(&basis) {
                if *c != 0 {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = field.add(*x, field.mul(*c, y));
                    }
                }
            }
            if !v.contains(&0) {
                let mut cand = v.clone();
                scale_to_unit_lead(field, &mut cand);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
            // odometer over the coordinates after `lead`
            let mut j = lead + 1;
            while j < m {
                coeffs[j] += 1;
                if coeffs[j] < field.modulus() {
                    break;
                }
                coeffs[j] = 0;
                j += 1;
            }
            if j == m {
                break;
            }
        }
    }
    Ok(best)
}
