//! Oriented matroids given by chirotopes: circuits, cocircuits, order-type
//! databases and cocircuit-pattern matching.

mod catalog;
mod chirotope;
mod db;
mod pattern;
mod signed;

pub use catalog::{canonical_form, Catalog, SignConvention};
pub(crate) use chirotope::restrict_circuits;
pub use chirotope::{chirotope_of, BasisOrder, Chirotope};
pub use db::{parse_chirotope_db, parse_record, OrderTypeRecord};
pub use pattern::{match_cocircuit_pattern, relabel_match, PatternMatch};
pub(crate) use signed::mask_of;
pub use signed::SignedSet;
