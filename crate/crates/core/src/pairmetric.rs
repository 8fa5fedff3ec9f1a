//! Symbol-pair reads and the pair metric.
//!
//! The pair weight of a word depends only on its support: position `i` of
//! the pair read is nonzero iff `i ∈ S` or `i + 1 ∈ S` (indices mod `n`).
//! The distance search enumerates supports, so [`support_pair_weight`] is
//! the primitive here and the vector functions delegate to it.

use crate::error::{Error, Result};
use crate::gfp::FieldElement;

/// Anything that can tell zero from nonzero.
pub trait Symbol: Copy {
    fn is_zero(self) -> bool;
}

impl Symbol for u32 {
    fn is_zero(self) -> bool {
        self == 0
    }
}

impl Symbol for FieldElement {
    fn is_zero(self) -> bool {
        FieldElement::is_zero(self)
    }
}

/// Sorted, distinct positions in `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportSet {
    n: usize,
    positions: Vec<usize>,
}

impl SupportSet {
    /// Sorts and deduplicates; rejects out-of-range positions.
    pub fn new(n: usize, positions: &[usize]) -> Result<Self> {
        if let Some(&position) = positions.iter().find(|&&i| i >= n) {
            return Err(Error::SupportOutOfRange { n, position });
        }
        let mut positions = positions.to_vec();
        positions.sort_unstable();
        positions.dedup();
        Ok(SupportSet { n, positions })
    }

    pub fn of<T: Symbol>(x: &[T]) -> Self {
        let positions = x.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, _)| i).collect();
        SupportSet { n: x.len(), positions }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Maximal cyclic runs of consecutive positions.
    pub fn runs(&self) -> usize {
        runs_of_sorted(self.n, &self.positions)
    }
}

/// Number of maximal cyclic runs in a sorted position list.
pub(crate) fn runs_of_sorted(n: usize, positions: &[usize]) -> usize {
    let w = positions.len();
    if w == 0 || w == n {
        return usize::from(w == n && n > 0);
    }
    let mut runs = positions.windows(2).filter(|p| p[1] != p[0] + 1).count() + 1;
    if positions[0] == 0 && positions[w - 1] == n - 1 {
        runs -= 1;
    }
    runs
}

fn check_len(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    Ok(())
}

/// `[(x_0,x_1), (x_1,x_2), ..., (x_{n-1},x_0)]`.
pub fn pair_read<T: Symbol>(x: &[T]) -> Result<Vec<(T, T)>> {
    check_len(x.len())?;
    let n = x.len();
    Ok((0..n).map(|i| (x[i], x[(i + 1) % n])).collect())
}

/// Number of nonzero pairs in the pair read.
pub fn pair_weight<T: Symbol>(x: &[T]) -> Result<usize> {
    check_len(x.len())?;
    Ok(support_pair_weight(&SupportSet::of(x)))
}

/// Number of positions where the pair reads differ.
pub fn pair_distance<T: Symbol + PartialEq>(x: &[T], y: &[T]) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { expected: x.len(), actual: y.len() });
    }
    check_len(x.len())?;
    let n = x.len();
    let differs: Vec<bool> = x.iter().zip(y).map(|(a, b)| a != b).collect();
    Ok((0..n).filter(|&i| differs[i] || differs[(i + 1) % n]).count())
}

/// `|S ∪ (S - 1)|` mod `n`, i.e. `|S| + runs(S)` unless `S` is everything.
pub fn support_pair_weight(s: &SupportSet) -> usize {
    pair_weight_of_sorted(s.n, &s.positions)
}

#[inline]
pub(crate) fn pair_weight_of_sorted(n: usize, positions: &[usize]) -> usize {
    let w = positions.len();
    if w == n {
        return n;
    }
    w + runs_of_sorted(n, positions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set_formula(n: usize, s: &[usize]) -> usize {
        let mut all: Vec<usize> = s.iter().copied().chain(s.iter().map(|&i| (i + n - 1) % n)).collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    }

    #[test]
    fn pair_read_examples() {
        assert_eq!(pair_read(&[0u32, 0, 0]).unwrap(), vec![(0, 0); 3]);
        assert_eq!(pair_read(&[1u32, 0, 0, 0]).unwrap(), vec![(1, 0), (0, 0), (0, 0), (0, 1)]);
        assert_eq!(pair_read(&[1u32, 2, 3]).unwrap(), vec![(1, 2), (2, 3), (3, 1)]);
        assert_eq!(pair_read(&[1u32]), Err(Error::TooShort(1)));
    }

    #[test]
    fn pair_weight_examples() {
        assert_eq!(pair_weight(&[0u32; 9]).unwrap(), 0);
        for n in 2..12 {
            for i in 0..n {
                let mut x = vec![0u32; n];
                x[i] = 3;
                assert_eq!(pair_weight(&x).unwrap(), 2);
            }
        }
        let c = [0u32, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 4, 1, 0, 1, 1, 0, 1, 4, 0, 0];
        assert_eq!(pair_weight(&c).unwrap(), 13);
        let fe: Vec<FieldElement> = c.iter().map(|&v| FieldElement::new(v as i64, 7).unwrap()).collect();
        assert_eq!(pair_weight(&fe).unwrap(), 13);
        assert_eq!(pair_weight::<u32>(&[]), Err(Error::TooShort(0)));
    }

    #[test]
    fn pair_distance_examples() {
        let x = [1u32, 0, 5, 0];
        assert_eq!(pair_distance(&x, &x).unwrap(), 0);
        assert_eq!(pair_distance(&x, &[0; 4]).unwrap(), pair_weight(&x).unwrap());
        assert_eq!(pair_distance(&[1u32, 0, 0, 0], &[0, 1, 0, 0]).unwrap(), 3);
        assert!(matches!(pair_distance(&[1u32, 0], &[1, 0, 0]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn support_examples() {
        assert_eq!(support_pair_weight(&SupportSet::new(5, &[0]).unwrap()), 2);
        assert_eq!(support_pair_weight(&SupportSet::new(7, &[0, 1, 3]).unwrap()), 5);
        assert_eq!(support_pair_weight(&SupportSet::new(6, &[0, 1, 2, 3, 4, 5]).unwrap()), 6);
        assert_eq!(support_pair_weight(&SupportSet::new(6, &[]).unwrap()), 0);
        assert_eq!(SupportSet::new(4, &[1, 4]), Err(Error::SupportOutOfRange { n: 4, position: 4 }));
        assert_eq!(SupportSet::new(9, &[3, 1, 3]).unwrap().positions(), &[1, 3]);
    }

    fn arb_vec() -> impl Strategy<Value = (u32, Vec<u32>)> {
        (prop::sample::select(vec![3u32, 5, 7, 11]), 2usize..40).prop_flat_map(|(p, n)| {
            // bias toward zeros so sparse supports show up
            let sym = prop_oneof![3 => Just(0u32), 2 => 1..p];
            (Just(p), proptest::collection::vec(sym, n))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn hamming_bounds((_p, x) in arb_vec()) {
            let n = x.len();
            let wh = x.iter().filter(|&&v| v != 0).count();
            let wp = pair_weight(&x).unwrap();
            if wh > 0 && wh < n {
                prop_assert!(wh < wp);
                prop_assert!(wp <= 2 * wh);
            }
            prop_assert!(wp <= n);
        }

        #[test]
        fn matches_set_formula((_p, x) in arb_vec()) {
            let s = SupportSet::of(&x);
            prop_assert_eq!(pair_weight(&x).unwrap(), set_formula(x.len(), s.positions()));
            prop_assert_eq!(pair_weight(&x).unwrap(), support_pair_weight(&s));
            let by_read = pair_read(&x).unwrap().iter().filter(|(a, b)| *a != 0 || *b != 0).count();
            prop_assert_eq!(by_read, support_pair_weight(&s));
        }

        #[test]
        fn shift_and_scale_invariance((p, x) in arb_vec(), s in 0usize..40, scale_seed in any::<u64>()) {
            let n = x.len();
            let shifted: Vec<u32> = (0..n).map(|i| x[(i + n - s % n) % n]).collect();
            prop_assert_eq!(pair_weight(&shifted).unwrap(), pair_weight(&x).unwrap());
            let mut z = scale_seed;
            let scaled: Vec<u32> = x.iter().map(|&v| {
                z = z.wrapping_mul(6364136223846793005).wrapping_add(1);
                let a = 1 + ((z >> 33) % (p as u64 - 1)) as u32;
                v * a % p
            }).collect();
            prop_assert_eq!(pair_weight(&scaled).unwrap(), pair_weight(&x).unwrap());
        }

        #[test]
        fn distance_is_weight_of_difference(((p, x), seed) in (arb_vec(), any::<u64>())) {
            let mut z = seed;
            let y: Vec<u32> = x.iter().map(|_| {
                z = z.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if (z >> 60) < 8 { 0 } else { ((z >> 33) % p as u64) as u32 }
            }).collect();
            let diff: Vec<u32> = x.iter().zip(&y).map(|(&a, &b)| (a + p - b) % p).collect();
            prop_assert_eq!(pair_distance(&x, &y).unwrap(), pair_weight(&diff).unwrap());
        }
    }
}
