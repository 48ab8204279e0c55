//! Exact computation of Kneser transversals: affine flats meeting the convex
//! hulls of all k-subsets of a point configuration.
//!
//! - [`exact`]: rational predicates, flat/hull intersection, line search.
//! - [`om`]: chirotopes, circuits, cocircuits and order-type databases.
//! - [`transversal`]: verification, search and classification.
//! - [`experiments`]: fixtures, bounds, perturbation and database scans.

pub mod combin;
pub mod config;
pub mod error;
pub mod exact;
pub mod experiments;
pub mod om;
pub mod transversal;

pub use config::PointConfig;
pub use error::{KneserError, Result};
