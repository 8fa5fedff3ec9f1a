//! The expected-results registry and its verification.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    amds_4p8, amds_lp7, amds_lp7_witness, c3p, corollary36, corollary36_negative, theorem31, theorem31_odd,
    ClassExpectation, Expected, Family, FamilyInstance, OddReading, TwoRoot, AMDS_3P_TABLE, MDS_3P_TABLE,
};
use crate::cyclic::{BuildMode, CodeSpec, CodeSpecInput, Codeword, FactorSpec};
use crate::distsearch::{analyze, run_with_workers, Classification, DistanceReport, SearchConfig};
use crate::error::{Error, Result};
use crate::pairmetric::pair_weight;
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Table {
    Thm31,
    Cor36,
    Mds3p,
    Amds3p,
    AmdsLp7,
    Amds4p8,
    Negatives,
    Legacy,
}

impl Table {
    pub const ALL: [Table; 8] = [
        Table::Thm31,
        Table::Cor36,
        Table::Mds3p,
        Table::Amds3p,
        Table::AmdsLp7,
        Table::Amds4p8,
        Table::Negatives,
        Table::Legacy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Table::Thm31 => "thm31",
            Table::Cor36 => "cor36",
            Table::Mds3p => "mds3p",
            Table::Amds3p => "amds3p",
            Table::AmdsLp7 => "amds-lp7",
            Table::Amds4p8 => "amds-4p8",
            Table::Negatives => "negatives",
            Table::Legacy => "legacy",
        }
    }

    /// Rows whose code family depends on the length-`3p` prime.
    pub fn is_3p(self) -> bool {
        matches!(self, Table::Mds3p | Table::Amds3p)
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Table {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Table::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown table {s:?}; expected one of {}", Table::ALL.map(|t| t.name()).join(", ")))
    }
}

/// A codeword the row pins: it must be in the code, and when a pair
/// weight is given it must have exactly that weight. A non-gating pin is
/// reported in the notes without failing the row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinnedWord {
    pub label: String,
    pub word: Codeword,
    pub pair_weight: Option<usize>,
    pub gating: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegistryRow {
    pub id: String,
    pub table: Table,
    pub instance: FamilyInstance,
    pub paper_row: String,
    /// Informational rows are reported but never fail a run.
    pub gating: bool,
    pub pinned: Vec<PinnedWord>,
}

impl RegistryRow {
    fn new(id: String, table: Table, instance: FamilyInstance, paper_row: impl Into<String>) -> Self {
        RegistryRow { id, table, instance, paper_row: paper_row.into(), gating: true, pinned: Vec::new() }
    }

    fn info(mut self) -> Self {
        self.gating = false;
        self
    }

    fn pin(mut self, label: &str, word: Codeword, pair_weight: Option<usize>) -> Self {
        self.pinned.push(PinnedWord { label: label.into(), word, pair_weight, gating: true });
        self
    }

    fn pin_info(mut self, label: &str, word: Codeword, pair_weight: Option<usize>) -> Self {
        self.pinned.push(PinnedWord { label: label.into(), word, pair_weight, gating: false });
        self
    }

    pub fn p(&self) -> u32 {
        self.instance.spec.p()
    }
}

fn word(p: u32, n: usize, terms: &[(usize, i64)]) -> Codeword {
    let mut v = vec![0i64; n];
    for &(i, c) in terms {
        v[i] += c;
    }
    Codeword::new(p, &v).expect("registry primes are odd primes")
}

fn poly_word(poly: &Polynomial, n: usize) -> Codeword {
    let v: Vec<i64> = poly.to_padded(n).into_iter().map(i64::from).collect();
    Codeword::new(poly.modulus(), &v).expect("valid prime")
}

fn raw(p: u32, l: u32, factors: &[FactorSpec]) -> CodeSpec {
    CodeSpec::build_with(&CodeSpecInput::new(p, l, factors), BuildMode::Catalog).expect("registry specs are valid")
}

/// The full registry with the length-`3p` tables at `p = 7`.
pub fn registry() -> Vec<RegistryRow> {
    registry_at(7).expect("p = 7 is admissible")
}

/// The full registry with the length-`3p` tables instantiated at `p3`
/// (which must be `1 mod 3`). Rows of the other families keep their own
/// primes.
pub fn registry_at(p3: u32) -> Result<Vec<RegistryRow>> {
    let mut rows = Vec::new();
    let ok = |r: Result<FamilyInstance>| r.expect("registry rows satisfy their family constraints");

    // (x-1)^r1 (x+1)^r2 (x-w)^r3
    let mut thm = |p: u32, l: u32, r: [u32; 3], shape: &str| {
        let id = format!("thm31-{:02}", rows.len() + 1);
        let row = format!("d_p=6 MDS table: {} {} {} -> {shape}", r[0], r[1], r[2]);
        rows.push(RegistryRow::new(id, Table::Thm31, ok(theorem31(p, l, r)), row));
    };
    thm(7, 1, [4, 0, 0], "(p,6)_p");
    thm(7, 3, [3, 0, 1], "(lp,6)_p");
    thm(7, 3, [1, 0, 3], "(lp,6)_p");
    for r in [[2, 1, 1], [2, 0, 2], [1, 2, 1], [1, 1, 2], [0, 3, 1], [0, 1, 3], [0, 2, 2]] {
        let shape = if r == [2, 1, 1] { "(klp,6)_p" } else { "(lp,6)_p" };
        thm(5, 4, r, shape);
    }
    let n = rows.len();
    rows.push(
        RegistryRow::new(
            format!("thm31-{:02}", n + 1),
            Table::Thm31,
            ok(theorem31(5, 1, [4, 0, 0])),
            "d_p=6 MDS table: 4 0 0 -> (p,6)_p at p=5 (k=1)",
        )
        .info(),
    );
    for reading in [OddReading::OmegaOrderL, OddReading::OmegaOrder2L] {
        let mut inst = ok(theorem31_odd(7, 3, [2, 1, 1], reading));
        inst.expected = Some(Expected::pair(4, 6, Classification::Mds));
        let id = format!("thm31-{:02}", rows.len() + 1);
        rows.push(RegistryRow::new(id, Table::Thm31, inst, "d_p=6 MDS table: 2 1 1 -> (klp,6)_p, odd l").info());
    }

    for (r1, r2) in [(2, 1), (1, 2), (3, 1), (1, 3), (2, 2)] {
        let c = TwoRoot { p: 7, l: 6, omega: Some(3), t1: 1, t2: 0, r1, r2 };
        let dp = r1 + r2 + 2;
        let id = format!("cor36-{:02}", rows.iter().filter(|r| r.table == Table::Cor36).count() + 1);
        rows.push(RegistryRow::new(
            id,
            Table::Cor36,
            ok(corollary36(c)),
            format!("two-root family r=({r1},{r2}) -> (lp,{dp})_p"),
        ));
    }

    let w3 = crate::gfp::primitive_root_of_unity(p3, 3)?;
    let n3 = 3 * p3 as usize;
    let pu = p3 as usize;
    // (x-1)^p (x-w)^p (x-w^2)
    let nine = {
        let lin = |a: crate::gfp::FieldElement| Polynomial::linear_root(a);
        let one = crate::gfp::FieldElement::new(1, p3)?;
        let g = lin(one).pow(p3).mul(&lin(w3).pow(p3))?.mul(&lin(w3.pow(2)))?;
        poly_word(&g, n3)
    };
    let ten = word(p3, n3, &[(0, 1), (2, -1), (pu + 1, 2), (pu + 2, 1), (2 * pu, -1), (2 * pu + 1, -2)]);
    let seven = word(p3, n3, &[(0, 1), (1, -1), (pu, -1), (2 * pu + 1, 1)]);

    for (i, &(r, nk, dp)) in MDS_3P_TABLE.iter().enumerate() {
        let mut row = RegistryRow::new(
            format!("mds3p-{:02}", i + 1),
            Table::Mds3p,
            c3p(p3, r)?,
            format!("MDS 3p table: {} {} {} -> ({nk},{dp})_p", r[0], r[1], r[2]),
        );
        if r == [4, 2, 2] {
            row = row.pin("1-x^2+2x^(p+1)+x^(p+2)-x^(2p)-2x^(2p+1)", ten.clone(), Some(10));
        }
        rows.push(row);
    }
    for (i, &(r, nk, dp)) in AMDS_3P_TABLE.iter().enumerate() {
        let mut row = RegistryRow::new(
            format!("amds3p-{:02}", i + 1),
            Table::Amds3p,
            c3p(p3, r)?,
            format!("AMDS 3p table: {} {} {} -> ({nk},{dp})_p", r[0], r[1], r[2]),
        );
        match r {
            // has pair weight 7 but does not vanish at w
            [4, 1, 1] => row = row.pin_info("1-x-x^p+x^(2p+1)", seven.clone(), Some(7)),
            [4, 3, 1] | [5, 2, 1] => row = row.pin("(x-1)^p(x-w)^p(x-w^2)", nine.clone(), Some(9)),
            [5, 2, 2] => row = row.pin("1-x^2+2x^(p+1)+x^(p+2)-x^(2p)-2x^(2p+1)", ten.clone(), Some(10)),
            _ => {}
        }
        rows.push(row);
    }

    for (i, (p, l)) in [(7u32, 3u32), (11, 5)].into_iter().enumerate() {
        rows.push(
            RegistryRow::new(
                format!("amds-lp7-{:02}", i + 1),
                Table::AmdsLp7,
                ok(amds_lp7(p, l)),
                "AMDS (lp,7)_p family",
            )
            .pin("x^(2p-1)-x^p-x^(p-1)+1", amds_lp7_witness(p, l)?, Some(7)),
        );
    }

    for (i, p) in [5u32, 7].into_iter().enumerate() {
        rows.push(RegistryRow::new(
            format!("amds-4p8-{:02}", i + 1),
            Table::Amds4p8,
            ok(amds_4p8(p)),
            "AMDS (4p,8)_p family",
        ));
    }
    rows.push(
        RegistryRow::new("amds-4p8-03".into(), Table::Amds4p8, ok(amds_4p8(3)), "AMDS (4p,8)_p family at p=3").info(),
    );

    let mut neg = |inst: FamilyInstance, paper_row: String| {
        let id = format!("neg-{:02}", rows.iter().filter(|r| r.table == Table::Negatives).count() + 1);
        rows.push(RegistryRow::new(id, Table::Negatives, inst, paper_row));
    };
    for (r1, r2) in [(2, 1), (3, 1), (2, 2)] {
        let c = TwoRoot { p: 5, l: 4, omega: Some(3), t1: 3, t2: 1, r1, r2 };
        neg(ok(corollary36_negative(c)), format!("example (x-2)^{r1}(x-3)^{r2}: d_H=2, not MDS"));
    }
    let not_mds =
        Expected { redundancy: Some(4), d_h: None, d_p: None, d_p_at_most: None, class: ClassExpectation::NotMds };
    neg(
        FamilyInstance {
            family: Family::Negative,
            params: "l=2 r=(0,4,0)".into(),
            spec: raw(7, 2, &[FactorSpec::element(6, 4)]),
            expected: Some(not_mds.clone()),
        },
        "0 4 0: not MDS".into(),
    );
    neg(
        FamilyInstance {
            family: Family::Negative,
            params: "l=3 r=(0,0,4)".into(),
            spec: raw(7, 3, &[FactorSpec::unity(1, 4)]),
            expected: Some(not_mds),
        },
        "0 0 4: not MDS".into(),
    );
    let final_example = FamilyInstance {
        family: Family::Negative,
        params: "l=3 r=(6,3,3)".into(),
        spec: raw(7, 3, &[FactorSpec::unity(0, 6), FactorSpec::unity(1, 3), FactorSpec::unity(2, 3)]),
        expected: Some(Expected {
            redundancy: Some(12),
            d_h: Some(7),
            d_p: None,
            d_p_at_most: Some(13),
            class: ClassExpectation::NotMds,
        }),
    };
    let a = Codeword::new(7, &[0, 0, 1, 0, 0, 0, 0, 0, 0, 6, 6, 3, 3, 3, 4, 4, 4, 5, 1, 1, 1]).expect("valid");
    let b = Codeword::new(7, &[0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 5, 4, 4, 4, 3, 3, 3, 6, 6]).expect("valid");
    let c = Codeword::new(7, &[0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 4, 1, 0, 1, 1, 0, 1, 4, 0, 0]).expect("valid");
    let id = format!("neg-{:02}", rows.iter().filter(|r| r.table == Table::Negatives).count() + 1);
    rows.push(
        RegistryRow::new(id, Table::Negatives, final_example, "(x-1)^6(x-2)^3(x-4)^3: d_H=7, w_p(c)=13, not MDS")
            .pin("a", a, None)
            .pin("b", b, None)
            .pin("c = a+b", c, Some(13)),
    );

    let legacy = [
        (
            "(x-1)^3(x^2+1), l=4: d_H=4, d_p=7",
            7,
            4,
            vec![FactorSpec::element(1, 3), FactorSpec::quadratic([1, 0, 1], 1)],
            (5, 7),
            Some(4),
        ),
        (
            "(x-1)^3(x-w)^2(x-w^2): MDS (3p,8)_p",
            7,
            3,
            vec![FactorSpec::unity(0, 3), FactorSpec::unity(1, 2), FactorSpec::unity(2, 1)],
            (6, 8),
            None,
        ),
        ("(x-1)^3(x-w): MDS (lp,6)_p", 7, 6, vec![FactorSpec::unity(0, 3), FactorSpec::unity(1, 1)], (4, 6), None),
    ];
    for (i, (paper_row, p, l, factors, (nk, dp), d_h)) in legacy.into_iter().enumerate() {
        let spec = raw(p, l, &factors);
        let mut expected = Expected::pair(nk, dp, Classification::Mds);
        expected.d_h = d_h;
        let params = format!("l={l} g={}", spec.factored_form());
        let inst = FamilyInstance { family: Family::Legacy, params, spec, expected: Some(expected) };
        rows.push(RegistryRow::new(format!("legacy-{:02}", i + 1), Table::Legacy, inst, paper_row));
    }
    Ok(rows)
}

/// A pinned codeword together with the code it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedCodeword {
    pub row_id: String,
    pub spec: CodeSpec,
    pub pinned: PinnedWord,
}

/// Every pinned codeword of the default registry.
pub fn named_codewords() -> Vec<NamedCodeword> {
    registry()
        .into_iter()
        .flat_map(|row| {
            let spec = row.instance.spec.clone();
            let id = row.id.clone();
            row.pinned.into_iter().map(move |pinned| NamedCodeword { row_id: id.clone(), spec: spec.clone(), pinned })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RowStatus {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Pass => "PASS",
            RowStatus::Fail => "FAIL",
            RowStatus::Info => "INFO",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowOutcome {
    pub id: String,
    pub table: Table,
    pub family: Family,
    pub params: String,
    pub p: u32,
    pub n: usize,
    pub k: usize,
    #[serde(rename = "d_H")]
    pub d_h: Option<usize>,
    pub d_p: Option<usize>,
    pub class: Option<Classification>,
    pub expected: String,
    pub paper_row: String,
    pub status: RowStatus,
    /// Every check that did not hold, or the engine error.
    pub problems: Vec<String>,
    /// Outcomes of non-gating pins.
    pub notes: Vec<String>,
    #[serde(skip)]
    pub report: Option<DistanceReport>,
}

impl RowOutcome {
    /// For informational rows: whether the attached expectation held.
    pub fn matches_expectation(&self) -> bool {
        self.problems.is_empty() && self.report.is_some()
    }
}

fn check(expected: &Expected, r: &DistanceReport, problems: &mut Vec<String>) {
    let mut mismatch =
        |what: &str, want: String, got: String| problems.push(format!("{what}: expected {want}, computed {got}"));
    if let Some(nk) = expected.redundancy {
        if nk != r.n - r.k {
            mismatch("n-k", nk.to_string(), (r.n - r.k).to_string());
        }
    }
    if let Some(d) = expected.d_h {
        if d != r.d_h {
            mismatch("d_H", d.to_string(), r.d_h.to_string());
        }
    }
    if let Some(d) = expected.d_p {
        if d != r.d_p {
            mismatch("d_p", d.to_string(), r.d_p.to_string());
        }
    }
    if let Some(d) = expected.d_p_at_most {
        if r.d_p > d {
            mismatch("d_p", format!("<= {d}"), r.d_p.to_string());
        }
    }
    if !expected.class.admits(r.class) {
        mismatch("class", expected.class.to_string(), r.class.to_string());
    }
}

/// Analyzes one row and checks every claim attached to it.
pub fn verify_row(row: &RegistryRow, config: &SearchConfig) -> RowOutcome {
    let spec = &row.instance.spec;
    let mut out = RowOutcome {
        id: row.id.clone(),
        table: row.table,
        family: row.instance.family,
        params: row.instance.params.clone(),
        p: spec.p(),
        n: spec.n(),
        k: spec.k(),
        d_h: None,
        d_p: None,
        class: None,
        expected: row.instance.expected.as_ref().map_or_else(|| "-".into(), |e| e.to_string()),
        paper_row: row.paper_row.clone(),
        status: RowStatus::Info,
        problems: Vec::new(),
        notes: Vec::new(),
        report: None,
    };
    match analyze(spec, config) {
        Ok(r) => {
            out.d_h = Some(r.d_h);
            out.d_p = Some(r.d_p);
            out.class = Some(r.class);
            if let Some(e) = &row.instance.expected {
                check(e, &r, &mut out.problems);
            }
            out.report = Some(r);
        }
        Err(e) => out.problems.push(format!("analysis failed: {e}")),
    }
    for pin in &row.pinned {
        let sink = if pin.gating { &mut out.problems } else { &mut out.notes };
        if !spec.contains(&pin.word) {
            sink.push(format!("{} is not a codeword", pin.label));
        } else if let Some(want) = pin.pair_weight {
            match pair_weight(pin.word.values()) {
                Ok(got) if got == want => {}
                Ok(got) => sink.push(format!("w_p({}): expected {want}, computed {got}", pin.label)),
                Err(e) => sink.push(format!("w_p({}): {e}", pin.label)),
            }
        }
    }
    out.status = match (row.gating, out.problems.is_empty()) {
        (false, _) => RowStatus::Info,
        (true, true) => RowStatus::Pass,
        (true, false) => RowStatus::Fail,
    };
    out
}

/// Verifies rows in parallel; the output keeps the input order.
pub fn verify_registry(rows: &[RegistryRow], config: &SearchConfig) -> Result<Vec<RowOutcome>> {
    run_with_workers(config.workers, || rows.par_iter().map(|r| verify_row(r, config)).collect())
}

#[derive(Serialize)]
struct CsvRow<'a> {
    family: Family,
    params: &'a str,
    p: u32,
    n: usize,
    k: usize,
    #[serde(rename = "d_H")]
    d_h: Option<usize>,
    d_p: Option<usize>,
    class: Option<Classification>,
    paper_row: &'a str,
    status: RowStatus,
}

/// Columns: family, params, p, n, k, d_H, d_p, class, paper_row, status.
pub fn write_outcomes_csv<W: Write>(w: W, outcomes: &[RowOutcome]) -> Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    for o in outcomes {
        wr.serialize(CsvRow {
            family: o.family,
            params: &o.params,
            p: o.p,
            n: o.n,
            k: o.k,
            d_h: o.d_h,
            d_p: o.d_p,
            class: o.class,
            paper_row: &o.paper_row,
            status: o.status,
        })
        .map_err(|e| Error::Export(e.to_string()))?;
    }
    wr.flush().map_err(|e| Error::Export(e.to_string()))
}
