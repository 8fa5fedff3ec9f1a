//! Exact minimum Hamming and symbol-pair distances, and MDS/AMDS
//! classification.
//!
//! Two independent routes: [`full_enum`] walks every codeword and is the
//! oracle for small codes; [`min_dh_support`] and [`min_dp_support`] search
//! supports against the check matrix and scale to the catalog lengths.
//! [`analyze`] picks one, cross-checks the Hamming distance against the
//! Castagnoli decomposition, and re-verifies the witnesses.

mod enumerate;
mod search;
mod supports;
mod zeroset;

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

pub use enumerate::full_enum;
pub use search::{min_dh_support, min_dp_support, SearchOutcome};

use crate::cyclic::{CodeSpec, Codeword};
use crate::error::{Error, Result};
use crate::pairmetric::pair_weight;

/// Auto mode enumerates outright when the code has at most this many words.
pub const AUTO_FULL_ENUM_LIMIT: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Classification {
    #[serde(rename = "MDS")]
    Mds,
    #[serde(rename = "AMDS")]
    Amds,
    #[serde(rename = "neither")]
    Neither,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Mds => "MDS",
            Classification::Amds => "AMDS",
            Classification::Neither => "neither",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    #[serde(rename = "full-enum")]
    FullEnum,
    #[serde(rename = "support-search")]
    SupportSearch,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::FullEnum => "full-enum",
            Method::SupportSearch => "support-search",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodChoice {
    #[default]
    Auto,
    FullEnum,
    SupportSearch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest `p^k` that [`full_enum`] accepts.
    pub enum_cap: u64,
    /// Largest projective nullspace walked at one support.
    pub nullspace_cap: u64,
    /// Thread count; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    pub method: MethodChoice,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { enum_cap: 10_000_000, nullspace_cap: 1_000_000, workers: None, method: MethodChoice::Auto }
    }
}

impl SearchConfig {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    pub fn with_method(mut self, method: MethodChoice) -> Self {
        self.method = method;
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DistanceReport {
    pub spec: CodeSpec,
    pub n: usize,
    pub k: usize,
    #[serde(rename = "d_H")]
    pub d_h: usize,
    pub d_p: usize,
    pub class: Classification,
    #[serde(rename = "witness_H")]
    pub witness_h: Codeword,
    pub witness_p: Codeword,
    pub method: Method,
    pub supports_examined: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Equality ignores `elapsed`.
impl PartialEq for DistanceReport {
    fn eq(&self, o: &Self) -> bool {
        self.spec == o.spec
            && (self.n, self.k, self.d_h, self.d_p) == (o.n, o.k, o.d_h, o.d_p)
            && self.class == o.class
            && self.witness_h == o.witness_h
            && self.witness_p == o.witness_p
            && self.method == o.method
            && self.supports_examined == o.supports_examined
    }
}

impl Eq for DistanceReport {}

/// MDS iff `d_p = n - k + 2`, AMDS iff `d_p = n - k + 1`.
pub fn classify(n: usize, k: usize, d_p: usize) -> Result<Classification> {
    let bound = n - k + 2;
    if d_p > bound {
        return Err(Error::SingletonViolation { d_p, bound });
    }
    Ok(if d_p == bound {
        Classification::Mds
    } else if d_p + 1 == bound {
        Classification::Amds
    } else {
        Classification::Neither
    })
}

pub(crate) fn run_with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Full analysis with cross-checks.
pub fn analyze(spec: &CodeSpec, config: &SearchConfig) -> Result<DistanceReport> {
    let start = Instant::now();
    let castagnoli = spec.castagnoli_dh()?;
    let words = (spec.p() as u128).checked_pow(spec.k() as u32).unwrap_or(u128::MAX);
    let use_enum = match config.method {
        MethodChoice::FullEnum => true,
        MethodChoice::SupportSearch => false,
        MethodChoice::Auto => words <= AUTO_FULL_ENUM_LIMIT as u128 && words <= config.enum_cap as u128,
    };

    let mut report = if use_enum {
        full_enum(spec, config)?
    } else {
        let h = min_dh_support(spec, config)?;
        if h.distance != castagnoli {
            return Err(Error::InconsistentHammingDistance { castagnoli, support: h.distance });
        }
        let dp = min_dp_support(spec, h.distance, config)?;
        DistanceReport {
            spec: spec.clone(),
            n: spec.n(),
            k: spec.k(),
            d_h: h.distance,
            d_p: dp.distance,
            class: classify(spec.n(), spec.k(), dp.distance)?,
            witness_h: h.witness,
            witness_p: dp.witness,
            method: Method::SupportSearch,
            supports_examined: h.supports_examined + dp.supports_examined,
            elapsed: Duration::ZERO,
        }
    };
    if report.d_h != castagnoli {
        return Err(Error::InconsistentHammingDistance { castagnoli, support: report.d_h });
    }
    check_report(spec, &report)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Re-derives everything a report claims from its witnesses.
pub fn check_report(spec: &CodeSpec, r: &DistanceReport) -> Result<()> {
    let fail = |what: String| Err(Error::Internal(what));
    for (name, w, d) in [("Hamming", &r.witness_h, r.d_h), ("pair", &r.witness_p, r.d_p)] {
        if !spec.contains(w) {
            return fail(format!("{name} witness is not a codeword"));
        }
        if w.hamming_weight() == 0 {
            return fail(format!("{name} witness is zero"));
        }
        let weight = if name == "Hamming" { w.hamming_weight() } else { pair_weight(w.values())? };
        if weight != d {
            return fail(format!("{name} witness has weight {weight}, reported {d}"));
        }
    }
    let n = spec.n();
    if r.d_h > 0 && r.d_h < n && !(r.d_h < r.d_p && r.d_p <= (2 * r.d_h).min(n)) {
        return fail(format!("d_p={} outside [d_H+1, min(2d_H, n)] for d_H={}", r.d_p, r.d_h));
    }
    if classify(n, spec.k(), r.d_p)? != r.class {
        return fail("classification does not match d_p".into());
    }
    Ok(())
}
