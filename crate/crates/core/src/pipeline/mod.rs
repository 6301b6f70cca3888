//! Check-in experiment: ingest, summarize users by convex hulls, cluster the
//! raw points and the hulls, and compare the radii.

mod experiment;
mod ingest;
mod summarize;
mod svg;
mod synthetic;

pub use experiment::{
    auto_eps, hull_test_set, run_experiment, run_experiment_detailed, write_figures, AlgorithmRun, DatasetConfig,
    ExperimentConfig, ExperimentOutcome, ExperimentReport, COMPOSABLE, DEFAULT_ROW_CAP, POLYGON_GRID,
};
pub use ingest::{ingest_checkins, ingest_checkins_with, parse_checkins, CheckinRecord, IngestOptions, IngestStats};
pub use summarize::{group_by_user, summarize_hulls, UserSummary};
pub use svg::{emit_svg, render_svg, SvgScene};
pub use synthetic::{synthetic_checkins, SyntheticSpec};
