//! Zero-set search, the low-rate counterpart of the support walk.
//!
//! A nonzero codeword `m(x) g(x)` vanishes exactly on the columns of the
//! generator matrix that lie in the hyperplane `m^⊥`. Growing a zero set
//! never raises the Hamming or the pair weight, so both minima are attained
//! on hyperplanes spanned by `k - 1` columns; rotating the codeword puts
//! column 0 among them. That leaves `C(n-1, k-2)` spanning sets to try,
//! against roughly `2^(n-2)` supports for the support walk.

use rayon::prelude::*;

use super::search::SearchOutcome;
use crate::cyclic::{CodeSpec, Codeword};
use crate::error::Result;
use crate::gfp::PrimeField;
use crate::linalg::{nullspace_from_rref, rref_in_place};
use crate::pairmetric::pair_weight;

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Spanning sets the zero-set search would visit.
pub(crate) fn zero_set_cost(n: usize, k: usize) -> u128 {
    if k <= 1 {
        1
    } else {
        binomial(n - 1, k - 2)
    }
}

/// Supports the walk would visit if nothing were pruned and the distance
/// met the Singleton bound.
pub(crate) fn support_walk_cost(n: usize, k: usize) -> u128 {
    (1..=n - k + 1).map(|w| binomial(n - 2, w - 1)).fold(0u128, u128::saturating_add)
}

/// The walk usually stops far below the Singleton bound and prunes by runs,
/// so zero sets must be much cheaper on paper to win.
pub(crate) fn prefer_zero_sets(n: usize, k: usize) -> bool {
    zero_set_cost(n, k).saturating_mul(64) < support_walk_cost(n, k)
}

/// Keys are compared lexicographically; the witness is the smallest
/// codeword (first entry 1) among those of minimum weight.
type HKey = (usize, Vec<u32>);
type PKey = (usize, usize, Vec<u32>);

struct Best {
    h: Option<HKey>,
    p: Option<PKey>,
    seen: u64,
}

impl Best {
    fn empty() -> Self {
        Best { h: None, p: None, seen: 0 }
    }

    fn offer(&mut self, word: Vec<u32>) {
        let wh = word.iter().filter(|&&x| x != 0).count();
        let wp = pair_weight(&word).expect("n >= 2");
        let hk = (wh, word);
        if self.h.as_ref().is_none_or(|b| hk < *b) {
            self.h = Some(hk.clone());
        }
        let pk = (wp, wh, hk.1);
        if self.p.as_ref().is_none_or(|b| pk < *b) {
            self.p = Some(pk);
        }
    }

    fn merge(mut self, o: Best) -> Best {
        if let Some(h) = o.h {
            if self.h.as_ref().is_none_or(|b| h < *b) {
                self.h = Some(h);
            }
        }
        if let Some(p) = o.p {
            if self.p.as_ref().is_none_or(|b| p < *b) {
                self.p = Some(p);
            }
        }
        self.seen += o.seen;
        self
    }
}

/// `m(x) g(x)` for `deg m < k`, scaled to start with 1.
fn codeword(field: &PrimeField, g: &[u32], m: &[u32], n: usize) -> Vec<u32> {
    let mut c = vec![0u32; n];
    for (i, &mi) in m.iter().enumerate() {
        if mi == 0 {
            continue;
        }
        for (j, &gj) in g.iter().enumerate() {
            c[i + j] = field.add(c[i + j], field.mul(mi, gj));
        }
    }
    if let Some(&lead) = c.iter().find(|&&x| x != 0) {
        let inv = field.inv(lead);
        c.iter_mut().for_each(|x| *x = field.mul(*x, inv));
    }
    c
}

/// Column `j` of the `k × n` generator matrix with rows `x^i g(x)`.
fn column(g: &[u32], k: usize, j: usize) -> Vec<u32> {
    (0..k).map(|i| if j >= i && j - i < g.len() { g[j - i] } else { 0 }).collect()
}

/// The normal of the hyperplane spanned by `cols`, when they are independent.
fn normal(field: &PrimeField, cols: &[Vec<u32>], k: usize) -> Option<Vec<u32>> {
    // rows of the (k-1) × k system are the spanning columns
    let rows = cols.len();
    let mut data: Vec<u32> = cols.iter().flatten().copied().collect();
    let pivots = rref_in_place(field, &mut data, rows, k);
    if pivots.len() < rows {
        return None;
    }
    nullspace_from_rref(field, &data, k, &pivots).into_iter().next()
}

/// Both minima of a code at once.
pub(crate) fn zero_set_search(spec: &CodeSpec) -> Result<(SearchOutcome, SearchOutcome)> {
    let n = spec.n();
    let k = spec.k();
    let p = spec.p();
    let field = spec.field();
    let g = spec.generator().coeffs().to_vec();

    let best = if k == 1 {
        let mut b = Best::empty();
        b.offer(codeword(field, &g, &[1], n));
        b.seen = 1;
        b
    } else {
        let cols: Vec<Vec<u32>> = (0..n).map(|j| column(&g, k, j)).collect();
        // sets {0} ∪ T with |T| = k-2, split on the smallest element of T
        let firsts: Vec<Option<usize>> = if k == 2 { vec![None] } else { (1..n).map(Some).collect() };
        firsts
            .into_par_iter()
            .map(|first| {
                let mut b = Best::empty();
                let mut chosen: Vec<usize> = vec![0];
                chosen.extend(first);
                combinations(first.map_or(n, |f| f + 1), n, k - 1 - chosen.len(), &mut chosen, &mut |set| {
                    b.seen += 1;
                    let span: Vec<Vec<u32>> = set.iter().map(|&j| cols[j].clone()).collect();
                    if let Some(m) = normal(field, &span, k) {
                        b.offer(codeword(field, &g, &m, n));
                    }
                });
                b
            })
            .reduce(Best::empty, Best::merge)
    };

    let (dh, wh) = best.h.expect("column 0 alone is independent");
    let (dp, _, wp) = best.p.expect("column 0 alone is independent");
    let h = SearchOutcome { distance: dh, witness: Codeword::from_raw(p, wh), supports_examined: best.seen };
    let d = SearchOutcome { distance: dp, witness: Codeword::from_raw(p, wp), supports_examined: best.seen };
    Ok((h, d))
}

/// Calls `visit` on `chosen` extended by every `r`-subset of `from..n`.
fn combinations(from: usize, n: usize, r: usize, chosen: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if r == 0 {
        visit(chosen);
        return;
    }
    for j in from..=n.saturating_sub(r) {
        chosen.push(j);
        combinations(j + 1, n, r - 1, chosen, visit);
        chosen.pop();
    }
}
