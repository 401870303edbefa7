//! The minimum of the Gamma function: series expansions of the positive
//! root of digamma, a direct root finder, the published coefficient
//! formulas, and reproductions of the published tables.

mod audit;
mod expansion;
mod printed;
mod root;
mod table;

pub use audit::{discrepancy_report, AuditRecord, AuditReport, AuditSection};
pub use expansion::{expand, ExpansionResult, Method};
pub use printed::{printed_q_terms, printed_r_coefficients};
pub use root::psi_root;
pub use table::{table, TableReport, TableRow, TABLE1, TABLE2};
