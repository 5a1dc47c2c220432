//! Special-case catalog, printed forms, errata and region scans.

pub mod catalog;
pub mod errata;
pub mod printed;
pub mod scan;

pub use catalog::{case_by_sub, cases_of, catalog, find_case, ClusterCase, ClusterId, Slot};
pub use errata::{errata_notes, errata_report, ErrataEntry, Verdict as ErrataVerdict};
pub use printed::{paper_form, paper_lhs, printed_rows, Normalization, PaperForm, PrintedRow};
pub use scan::{scan_region, AxisRange, RegionCell, RegionGrid, ScanSpec, Verdict, CSV_HEADER};
