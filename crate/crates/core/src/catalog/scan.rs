//! Exhaustive sweep of the length-`3p` family.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::{c3p, ladder_dp, mds_3p_condition, table_3p, Expected};
use crate::distsearch::{analyze, run_with_workers, Classification, SearchConfig};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub r1: u32,
    pub r2: u32,
    pub r3: u32,
    pub p: u32,
    pub n: usize,
    pub k: usize,
    #[serde(rename = "d_H")]
    pub d_h: usize,
    pub d_p: usize,
    pub class: Classification,
    /// The MDS condition set evaluated on the triple.
    pub mds_predicate: bool,
    /// Table or ladder expectation, `-` when none applies.
    pub expected: String,
    /// `None` when there is no expectation.
    pub matches: Option<bool>,
}

impl ScanRow {
    pub fn r(&self) -> [u32; 3] {
        [self.r1, self.r2, self.r3]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub p: u32,
    pub max_deg: u32,
    pub rows: Vec<ScanRow>,
    /// Triples with `d_p = 11`.
    pub dp11: Vec<[u32; 3]>,
    /// Predicate holds but the code is not MDS.
    pub predicate_violations: Vec<[u32; 3]>,
    /// MDS codes the predicate does not cover.
    pub unpredicted_mds: Vec<[u32; 3]>,
    /// Rows whose expectation did not hold.
    pub mismatches: Vec<[u32; 3]>,
}

/// Normalized triples `p-1 >= r1 >= r2 >= r3 >= 0` with `1 <= r1+r2+r3 <= max_deg`,
/// in lexicographic order.
pub fn scan_triples(p: u32, max_deg: u32) -> Vec<[u32; 3]> {
    let top = p - 1;
    let mut out = Vec::new();
    for r1 in 0..=top {
        for r2 in 0..=r1 {
            for r3 in 0..=r2 {
                let d = r1 + r2 + r3;
                if d >= 1 && d <= max_deg {
                    out.push([r1, r2, r3]);
                }
            }
        }
    }
    out
}

/// Expectation for a normalized triple. Single-factor table rows are listed
/// as `(0, r, 0)`, which is a rotation of `(r, 0, 0)`.
fn expectation(r: [u32; 3]) -> Option<Expected> {
    table_3p(r).or_else(|| if r[1] == 0 { table_3p([0, r[0], 0]) } else { None }).or_else(|| {
        ladder_dp(r).map(|d| Expected {
            redundancy: Some(r.iter().sum::<u32>() as usize),
            d_h: None,
            d_p: Some(d),
            d_p_at_most: None,
            class: super::ClassExpectation::Unspecified,
        })
    })
}

/// Analyzes every normalized triple of degree at most `max_deg` at length
/// `l·p` with `l = 3`.
pub fn scan(p: u32, l: u32, max_deg: u32, config: &SearchConfig) -> Result<ScanSummary> {
    if l != 3 {
        return Err(Error::FamilyConstraint { family: "scan", reason: format!("only l=3 is supported, got l={l}") });
    }
    let triples = scan_triples(p, max_deg);
    let results: Vec<Result<ScanRow>> =
        run_with_workers(config.workers, || triples.par_iter().map(|&r| scan_one(p, r, config)).collect())?;
    let rows = results.into_iter().collect::<Result<Vec<_>>>()?;

    let pick = |f: &dyn Fn(&ScanRow) -> bool| rows.iter().filter(|r| f(r)).map(ScanRow::r).collect::<Vec<_>>();
    Ok(ScanSummary {
        p,
        max_deg,
        dp11: pick(&|r| r.d_p == 11),
        predicate_violations: pick(&|r| r.mds_predicate && r.class != Classification::Mds),
        unpredicted_mds: pick(&|r| !r.mds_predicate && r.class == Classification::Mds),
        mismatches: pick(&|r| r.matches == Some(false)),
        rows,
    })
}

fn scan_one(p: u32, r: [u32; 3], config: &SearchConfig) -> Result<ScanRow> {
    let inst = c3p(p, r)?;
    let rep = analyze(&inst.spec, config)?;
    let exp = expectation(r);
    let matches = exp.as_ref().map(|e| {
        e.redundancy.is_none_or(|nk| nk == rep.n - rep.k)
            && e.d_p.is_none_or(|d| d == rep.d_p)
            && e.class.admits(rep.class)
    });
    Ok(ScanRow {
        r1: r[0],
        r2: r[1],
        r3: r[2],
        p,
        n: rep.n,
        k: rep.k,
        d_h: rep.d_h,
        d_p: rep.d_p,
        class: rep.class,
        mds_predicate: mds_3p_condition(r),
        expected: exp.map_or_else(|| "-".into(), |e| e.to_string()),
        matches,
    })
}

/// Columns: r1, r2, r3, p, n, k, d_H, d_p, class, mds_predicate, expected, matches.
pub fn write_scan_csv<W: Write>(w: W, summary: &ScanSummary) -> Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    for row in &summary.rows {
        wr.serialize(row).map_err(|e| Error::Export(e.to_string()))?;
    }
    wr.flush().map_err(|e| Error::Export(e.to_string()))
}
