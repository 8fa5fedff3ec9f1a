//! Normalized support enumeration.
//!
//! A support is normalized when it contains 0 and not `n - 1`, i.e. 0 opens
//! a cyclic run. Every nonzero, non-full support has a rotation of that
//! form, and rotation preserves both Hamming and pair weight. With 0 fixed
//! and `n - 1` excluded, cyclic runs equal linear runs, so the run count
//! (and with it the pair weight `w + runs`) can be tracked while extending.
//!
//! The work at one weight is split by the second position `q2`; each
//! partition is walked in lexicographic order.

use std::ops::ControlFlow;

/// Partition keys for supports of size `w < n`. Size 1 has the single
/// support `{0}`, keyed 0.
pub(crate) fn partitions(n: usize, w: usize) -> Vec<usize> {
    debug_assert!(w >= 1 && w < n);
    if w == 1 {
        vec![0]
    } else {
        (1..=n - w).collect()
    }
}

/// Visits, in lexicographic order, every normalized support of size `w`
/// in partition `q2` whose run count stays within `limit()`. The limit is
/// re-read at every extension, so a shrinking bound prunes immediately.
pub(crate) fn walk<L, V>(n: usize, w: usize, q2: usize, limit: &L, visit: &mut V) -> ControlFlow<()>
where
    L: Fn() -> usize,
    V: FnMut(&[usize], usize) -> ControlFlow<()>,
{
    let mut buf = Vec::with_capacity(w);
    buf.push(0);
    let mut runs = 1;
    if w >= 2 {
        buf.push(q2);
        if q2 > 1 {
            runs += 1;
        }
    }
    if runs > limit() {
        return ControlFlow::Continue(());
    }
    extend(n, w, &mut buf, runs, limit, visit)
}

fn extend<L, V>(n: usize, w: usize, buf: &mut Vec<usize>, runs: usize, limit: &L, visit: &mut V) -> ControlFlow<()>
where
    L: Fn() -> usize,
    V: FnMut(&[usize], usize) -> ControlFlow<()>,
{
    if buf.len() == w {
        return visit(buf, runs);
    }
    let last = *buf.last().expect("starts with 0");
    let remaining = w - buf.len();
    // the last slot is n - 2
    let max_next = n - 1 - remaining;
    for next in last + 1..=max_next {
        let r = if next == last + 1 { runs } else { runs + 1 };
        if r > limit() {
            // every later `next` also opens a run
            break;
        }
        buf.push(next);
        let flow = extend(n, w, buf, r, limit, visit);
        buf.pop();
        flow?;
    }
    ControlFlow::Continue(())
}
