//! Text, CSV and JSON encodings of the library reports.
//!
//! Numbers are written as decimal strings, never JSON floats, so nothing is
//! lost to binary rounding.

use std::fmt::Write as _;

use gammamin_core::minimum::{AuditReport, ExpansionResult, TableReport};
use gammamin_core::BigReal;
use serde::Serialize;

/// Significant digits printed for table values.
pub const TABLE_SIG: usize = 10;
/// Decimal places printed for table deltas.
pub const TABLE_DELTA_DECIMALS: usize = 9;
/// Significant digits printed for audit deltas.
const DELTA_SIG: usize = 6;

#[derive(Debug, Serialize)]
pub struct ExpansionView {
    pub anchor: String,
    pub method: String,
    pub offset: String,
    pub lagrange: Vec<String>,
    pub coefficients: Vec<String>,
    pub terms: Vec<String>,
    pub partial_sums: Vec<String>,
}

impl ExpansionView {
    pub fn new(e: &ExpansionResult, sig: usize) -> Self {
        let fmt = |v: &[BigReal]| v.iter().map(|x| x.format_sig(sig)).collect();
        Self {
            anchor: e.anchor.format_sig(sig),
            method: e.method.as_str().to_string(),
            offset: e.offset.format_sig(sig),
            lagrange: fmt(&e.lagrange),
            coefficients: fmt(&e.coefficients),
            terms: fmt(&e.terms),
            partial_sums: fmt(&e.partial_sums),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ComparisonView {
    pub reversion: ExpansionView,
    pub faadibruno: ExpansionView,
    pub max_relative_deviation: String,
}

#[derive(Debug, Serialize)]
pub struct RowView {
    pub label: String,
    pub computed: String,
    pub paper_value: String,
    pub delta: String,
}

#[derive(Debug, Serialize)]
pub struct TableView {
    pub table_id: u8,
    pub rows: Vec<RowView>,
    pub method_note: String,
}

impl TableView {
    pub fn new(t: &TableReport, sig: usize) -> Self {
        Self {
            table_id: t.table_id,
            rows: t
                .rows
                .iter()
                .map(|r| RowView {
                    label: r.label.to_string(),
                    computed: r.computed.format_sig(sig),
                    paper_value: r.paper_text.to_string(),
                    delta: r.delta.format_sig(DELTA_SIG),
                })
                .collect(),
            method_note: t.method_note.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RecordView {
    pub label: String,
    pub lhs_name: String,
    pub lhs: String,
    pub rhs_name: String,
    pub rhs: String,
    pub delta: String,
}

#[derive(Debug, Serialize)]
pub struct SectionView {
    pub anchor: String,
    pub records: Vec<RecordView>,
}

#[derive(Debug, Serialize)]
pub struct AuditView {
    pub root: String,
    pub sections: Vec<SectionView>,
    pub notes: Vec<String>,
}

impl AuditView {
    pub fn new(a: &AuditReport, sig: usize) -> Self {
        Self {
            root: a.root.format_sig(sig),
            sections: a
                .sections
                .iter()
                .map(|s| SectionView {
                    anchor: s.anchor.to_string(),
                    records: s
                        .records
                        .iter()
                        .map(|r| RecordView {
                            label: r.label.clone(),
                            lhs_name: r.lhs_name.to_string(),
                            lhs: r.lhs.format_sig(sig),
                            rhs_name: r.rhs_name.to_string(),
                            rhs: r.rhs.format_sig(sig),
                            delta: r.delta.format_sig(DELTA_SIG),
                        })
                        .collect(),
                })
                .collect(),
            notes: a.notes.iter().map(|n| n.to_string()).collect(),
        }
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("views serialize");
    s.push('\n');
    s
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// Left-aligned columns separated by two spaces.
fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut l = String::new();
        for (i, (cell, w)) in cells.zip(&widths).enumerate() {
            if i > 0 {
                l.push_str("  ");
            }
            let _ = write!(l, "{cell:<w$}");
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

const EXPANSION_HEADER: [&str; 4] = ["order", "coefficient", "term", "partial_sum"];

fn expansion_rows(v: &ExpansionView) -> Vec<Vec<String>> {
    (0..v.coefficients.len())
        .map(|i| {
            vec![
                (i + 1).to_string(),
                v.coefficients[i].clone(),
                v.terms[i].clone(),
                v.partial_sums[i].clone(),
            ]
        })
        .collect()
}

pub fn expansion_text(v: &ExpansionView) -> String {
    let mut out = format!("anchor {}\nmethod {}\noffset {}\n\n", v.anchor, v.method, v.offset);
    out.push_str(&aligned(&EXPANSION_HEADER, &expansion_rows(v)));
    out
}

pub fn expansion_csv(v: &ExpansionView) -> String {
    csv_string(&EXPANSION_HEADER, expansion_rows(v))
}

pub fn comparison_text(v: &ComparisonView) -> String {
    format!(
        "{}\n{}\nmax relative deviation {}\n",
        expansion_text(&v.reversion),
        expansion_text(&v.faadibruno),
        v.max_relative_deviation
    )
}

/// Rows of both engines tagged by method, then one summary row carrying the
/// deviation in the last column.
pub fn comparison_csv(v: &ComparisonView) -> String {
    let mut rows = Vec::new();
    for e in [&v.reversion, &v.faadibruno] {
        for mut row in expansion_rows(e) {
            row.insert(0, e.method.clone());
            row.push(String::new());
            rows.push(row);
        }
    }
    let mut summary = vec![String::from("max_relative_deviation")];
    summary.extend(std::iter::repeat_n(String::new(), 4));
    summary.push(v.max_relative_deviation.clone());
    rows.push(summary);
    csv_string(
        &["method", "order", "coefficient", "term", "partial_sum", "relative_deviation"],
        rows,
    )
}

const TABLE_HEADER: [&str; 4] = ["row_label", "computed", "paper_value", "delta"];

/// The fixed published layout: 10 significant digits, deltas to 9 places.
fn table_rows(t: &TableReport) -> Vec<Vec<String>> {
    t.rows
        .iter()
        .map(|r| {
            vec![
                r.label.to_string(),
                r.computed.format_sig(TABLE_SIG),
                r.paper_text.to_string(),
                r.delta.format_fixed(TABLE_DELTA_DECIMALS),
            ]
        })
        .collect()
}

pub fn table_csv(t: &TableReport) -> String {
    csv_string(&TABLE_HEADER, table_rows(t))
}

pub fn table_text(t: &TableReport) -> String {
    let mut out = format!("table {}\n\n", t.table_id);
    out.push_str(&aligned(&TABLE_HEADER, &table_rows(t)));
    let _ = write!(out, "\nnote: {}\n", t.method_note);
    out
}

const AUDIT_HEADER: [&str; 7] = ["anchor", "label", "lhs_name", "lhs", "rhs_name", "rhs", "delta"];

fn audit_rows(v: &AuditView) -> Vec<Vec<String>> {
    v.sections
        .iter()
        .flat_map(|s| {
            s.records.iter().map(|r| {
                vec![
                    s.anchor.clone(),
                    r.label.clone(),
                    r.lhs_name.clone(),
                    r.lhs.clone(),
                    r.rhs_name.clone(),
                    r.rhs.clone(),
                    r.delta.clone(),
                ]
            })
        })
        .collect()
}

pub fn audit_csv(v: &AuditView) -> String {
    csv_string(&AUDIT_HEADER, audit_rows(v))
}

pub fn audit_text(v: &AuditView) -> String {
    let mut out = format!("root {}\n", v.root);
    for s in &v.sections {
        let _ = write!(out, "\na = {}\n", s.anchor);
        let rows: Vec<Vec<String>> = s
            .records
            .iter()
            .map(|r| vec![r.label.clone(), r.lhs.clone(), r.rhs.clone(), r.delta.clone()])
            .collect();
        out.push_str(&aligned(&["label", "lhs", "rhs", "delta"], &rows));
    }
    out.push_str("\nnotes\n");
    for n in &v.notes {
        let _ = writeln!(out, "- {n}");
    }
    out
}
