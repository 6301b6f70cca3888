//! k-center clustering of uncertain points whose locations are known only up
//! to a segment or a polygon.
//!
//! * [`geometry`]: distances, stadiums, smallest enclosing disks, hulls,
//!   triangulation and lattice sampling.
//! * [`setcover`]: multi-interval set cover and its reduction from set cover.
//! * [`segments`]: max/min k-center of segments with bicriteria guarantees.
//! * [`polygons`]: domain-restricted k-center of polygons, Gonzalez and
//!   composable point k-center.
//! * [`oracle`]: exhaustive reference solvers used to check the guarantees.
//! * [`pipeline`]: check-in ingestion, hull summarization, experiments, SVG.
//! * [`io`]: JSON input and output files.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod geometry;
pub mod io;
pub mod oracle;
pub mod pipeline;
pub mod polygons;
pub mod segments;
pub mod setcover;

pub use error::{Error, Result};
