use std::fmt::Write;

use anyhow::Result;
use symbolpair::catalog::{RowOutcome, RowStatus, ScanSummary};
use symbolpair::{CodeSpec, DistanceReport};

pub fn construct_plain(spec: &CodeSpec) -> String {
    let mut s = String::new();
    let g = spec.generator();
    let coeffs: Vec<String> = g.coeffs().iter().map(u32::to_string).collect();
    writeln!(s, "p={} l={} n={} k={}", spec.p(), spec.l(), spec.n(), spec.k()).unwrap();
    match spec.omega() {
        Some(w) => writeln!(s, "g = {}  (w = {})", spec.factored_form(), w.value()).unwrap(),
        None => writeln!(s, "g = {}", spec.factored_form()).unwrap(),
    }
    writeln!(s, "deg g = {}", spec.redundancy()).unwrap();
    writeln!(s, "g coefficients (x^0 first): {}", coeffs.join(" ")).unwrap();
    s
}

pub fn report_plain(r: &DistanceReport, timing: bool) -> String {
    let mut s = String::new();
    let spec = &r.spec;
    writeln!(s, "code: p={} l={} n={} k={} g={}", spec.p(), spec.l(), r.n, r.k, spec.factored_form()).unwrap();
    writeln!(s, "d_H={} d_p={} {}", r.d_h, r.d_p, r.class).unwrap();
    writeln!(s, "n-k+2={} (MDS bound)", r.n - r.k + 2).unwrap();
    writeln!(s, "witness_H: {}", r.witness_h).unwrap();
    writeln!(s, "witness_p: {}", r.witness_p).unwrap();
    writeln!(s, "method: {} ({} supports examined)", r.method, r.supports_examined).unwrap();
    if timing {
        writeln!(s, "elapsed: {:.3} ms", r.elapsed.as_secs_f64() * 1e3).unwrap();
    }
    s
}

pub fn report_json(r: &DistanceReport, timing: bool) -> Result<String> {
    let mut v = serde_json::to_value(r)?;
    if timing {
        v["elapsed_ms"] = serde_json::json!(r.elapsed.as_secs_f64() * 1e3);
    }
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "?".into(), |x| x.to_string())
}

pub fn outcomes_plain(outcomes: &[RowOutcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        writeln!(
            s,
            "{} {:<12} {:<9} {} p={} n={} k={} d_H={} d_p={} {} | expected {} | {}",
            o.status,
            o.id,
            o.family,
            o.params,
            o.p,
            o.n,
            o.k,
            opt(o.d_h),
            opt(o.d_p),
            opt(o.class),
            o.expected,
            o.paper_row
        )
        .unwrap();
        for line in o.problems.iter().chain(&o.notes) {
            writeln!(s, "    {line}").unwrap();
        }
    }
    let count = |st: RowStatus| outcomes.iter().filter(|o| o.status == st).count();
    let gating = count(RowStatus::Pass) + count(RowStatus::Fail);
    writeln!(
        s,
        "{}/{gating} PASS, {} FAIL, {} INFO",
        count(RowStatus::Pass),
        count(RowStatus::Fail),
        count(RowStatus::Info)
    )
    .unwrap();
    s
}

fn triples(v: &[[u32; 3]]) -> String {
    if v.is_empty() {
        return "none".into();
    }
    v.iter().map(|r| format!("({},{},{})", r[0], r[1], r[2])).collect::<Vec<_>>().join(" ")
}

pub fn scan_summary(sm: &ScanSummary) -> String {
    let mut s = String::new();
    writeln!(s, "scanned {} normalized triples at p={}, degree <= {}", sm.rows.len(), sm.p, sm.max_deg).unwrap();
    if sm.dp11.is_empty() {
        writeln!(s, "no code with d_p=11").unwrap();
    } else {
        writeln!(s, "codes with d_p=11: {}", triples(&sm.dp11)).unwrap();
    }
    writeln!(s, "MDS condition holds but not MDS: {}", triples(&sm.predicate_violations)).unwrap();
    writeln!(s, "MDS outside the condition: {}", triples(&sm.unpredicted_mds)).unwrap();
    writeln!(s, "rows differing from their expectation: {}", triples(&sm.mismatches)).unwrap();
    s
}

pub fn scan_plain(sm: &ScanSummary) -> String {
    let mut s = String::new();
    writeln!(s, "{:<10} {:>3} {:>3} {:>4} {:>4} {:<8} {:<5} expected", "r", "n", "k", "d_H", "d_p", "class", "cond")
        .unwrap();
    for r in &sm.rows {
        let mark = match r.matches {
            Some(true) => "",
            Some(false) => "  MISMATCH",
            None => "",
        };
        writeln!(
            s,
            "{:<10} {:>3} {:>3} {:>4} {:>4} {:<8} {:<5} {}{mark}",
            format!("({},{},{})", r.r1, r.r2, r.r3),
            r.n,
            r.k,
            r.d_h,
            r.d_p,
            r.class.to_string(),
            r.mds_predicate,
            r.expected
        )
        .unwrap();
    }
    s + &scan_summary(sm)
}
