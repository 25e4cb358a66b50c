//! Exhaustive and grid-based verification suites with structured reports.

pub mod enumerate;
pub mod family;
pub mod report;
pub mod suites;

pub use enumerate::{
    enumerate_by_vertex_addition, enumerate_graphs, totals_by_edge_count, EnumerationTask,
    Enumerator, DEFAULT_CAP,
};
pub use family::{family_members, FamilyParams};
pub use report::{Counterexample, Counts, Finding, VerificationReport, SCHEMA_VERSION};
pub use suites::{
    verify_deletion_formula, verify_ds, verify_ds_range, verify_enumeration, verify_eq1,
    verify_eq2, verify_eq3, verify_invariants, verify_lemma34_reduction, verify_prop23,
    verify_prop27, verify_recurrences, verify_within_family_distinct, Grid,
};
