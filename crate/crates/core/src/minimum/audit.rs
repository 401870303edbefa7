use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bigreal::{BigReal, PrecisionConfig};
use crate::error::Result;

use super::expansion::{expand, Method};
use super::printed::printed_q_terms;
use super::root::psi_root;
use super::table::{TABLE1, TABLE2};

/// Known mismatches between the published coefficient formulas, the
/// published tables and the reversion series.
pub const NOTES: [&str; 4] = [
    "table 1: rows 1-2 follow from the printed r_1, r_2; rows 3-6 match neither the printed r_3..r_6 nor the reversion series about a = 1",
    "q_2/q_3: the printed q_2 re-includes q_1 while the printed q_3 is a single third-order term; table 2 is reproduced by cumulative per-order terms",
    "pi^2 vs pi^4: the printed q_3 bracket has (pi^2 - 96) where psi'''(3/2) = pi^4 - 96",
    "cube vs square: the printed q_3 bracket has (7 zeta(3) - 8)^3 where third-order inversion gives the square",
];

/// One signed comparison `lhs - rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRecord {
    pub label: String,
    pub lhs_name: &'static str,
    pub lhs: BigReal,
    pub rhs_name: &'static str,
    pub rhs: BigReal,
    pub delta: BigReal,
}

impl AuditRecord {
    fn new(label: String, lhs_name: &'static str, lhs: &BigReal, rhs_name: &'static str, rhs: &BigReal) -> Self {
        Self {
            label,
            lhs_name,
            lhs: lhs.clone(),
            rhs_name,
            rhs: rhs.clone(),
            delta: lhs - rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditSection {
    /// `"1"` or `"3/2"`.
    pub anchor: &'static str,
    pub records: Vec<AuditRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub root: BigReal,
    pub sections: Vec<AuditSection>,
    pub notes: Vec<&'static str>,
}

impl AuditReport {
    /// First record with the given label, in any section.
    pub fn find(&self, label: &str) -> Option<&AuditRecord> {
        self.sections
            .iter()
            .flat_map(|s| s.records.iter())
            .find(|r| r.label == label)
    }
}

/// Pairs reversion terms, printed-formula terms, published table values and
/// the root oracle against one another, for `a = 1` and `a = 3/2`.
pub fn discrepancy_report(cfg: &PrecisionConfig) -> Result<AuditReport> {
    let wp = cfg.working();
    let root = psi_root(cfg)?;
    let parse = |s: &str| BigReal::parse(s, wp).expect("published values are decimals");

    let one = BigReal::one(wp);
    let rev1 = expand(&one, TABLE1.len(), Method::Reversion, cfg)?;
    let pr1 = expand(&one, TABLE1.len(), Method::Printed, cfg)?;
    let mut records = Vec::new();
    for (i, &(_, text)) in TABLE1.iter().enumerate() {
        let n = i + 1;
        let published = parse(text);
        let (rev, pr) = (&rev1.partial_sums[i], &pr1.partial_sums[i]);
        records.push(AuditRecord::new(format!("a=1 order {n}: reversion vs table 1"), "reversion", rev, "table1", &published));
        records.push(AuditRecord::new(format!("a=1 order {n}: printed r vs table 1"), "printed_r", pr, "table1", &published));
        records.push(AuditRecord::new(format!("a=1 order {n}: reversion vs printed r"), "reversion", rev, "printed_r", pr));
        records.push(AuditRecord::new(
            format!("a=1 coefficient {n}: reversion vs printed r_{n}"),
            "reversion",
            &rev1.coefficients[i],
            "printed_r",
            &pr1.coefficients[i],
        ));
        records.push(AuditRecord::new(format!("a=1 order {n}: reversion vs root"), "reversion", rev, "psi_root", &root));
        records.push(AuditRecord::new(format!("a=1 order {n}: table 1 vs root"), "table1", &published, "psi_root", &root));
    }
    let mut sections = Vec::new();
    sections.push(AuditSection { anchor: "1", records });

    let three_halves = BigReal::from_ratio(3, 2, wp);
    let rev2 = expand(&three_halves, TABLE2.len(), Method::Reversion, cfg)?;
    let q = printed_q_terms(cfg)?;
    let mut literal = three_halves.clone();
    let mut records = Vec::new();
    for (i, &(_, text)) in TABLE2.iter().enumerate() {
        let n = i + 1;
        let published = parse(text);
        let rev = &rev2.partial_sums[i];
        literal = &literal + &q[i];
        records.push(AuditRecord::new(format!("a=3/2 order {n}: reversion vs table 2"), "reversion", rev, "table2", &published));
        records.push(AuditRecord::new(
            format!("a=3/2 term {n}: printed q_{n} vs reversion term"),
            "printed_q",
            &q[i],
            "reversion",
            &rev2.terms[i],
        ));
        records.push(AuditRecord::new(
            format!("a=3/2 order {n}: 3/2 + printed q_1..q_{n} vs table 2"),
            "printed_q_sum",
            &literal,
            "table2",
            &published,
        ));
        records.push(AuditRecord::new(format!("a=3/2 order {n}: reversion vs root"), "reversion", rev, "psi_root", &root));
        records.push(AuditRecord::new(format!("a=3/2 order {n}: table 2 vs root"), "table2", &published, "psi_root", &root));
    }
    sections.push(AuditSection { anchor: "3/2", records });

    Ok(AuditReport {
        root,
        sections,
        notes: NOTES.to_vec(),
    })
}
