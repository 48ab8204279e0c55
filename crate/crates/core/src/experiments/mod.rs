//! Fixtures, the bounds calculator, perturbation experiments and
//! order-type database scans.

mod bounds;
mod fixtures;
mod scan;
mod stability;

pub use bounds::{bounds, BoundsOptions, BoundsReport};
pub use fixtures::{
    figure2_fixture, figure4_fixture, hexagon_fixture, moment_curve_config, ot742_chirotope, ot742_fixture,
    OT742_TABLE,
};
pub use scan::{
    load_catalog, path_hash, scan_db_complete, scan_db_pattern8, Checkpoint, Deletion, Pattern8Options, PatternHit,
    ScanSummary,
};
pub use stability::{perturb, stability_experiment, KindCounts, StabilityReport, StabilityTrial};
