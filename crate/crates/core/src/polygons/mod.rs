//! Domain-restricted k-center of polygons.
//!
//! Every input polygon is an uncertain point. In max mode every point of
//! every polygon must be close to a center; in min mode one point per
//! polygon suffices. Centers must lie inside the union of the polygons.
//!
//! The grid algorithms scale the input into the unit box, sample a lattice
//! over each polygon grown by one cell, pull samples that fall outside every
//! polygon back onto the nearest polygon point, and cluster the samples.
//! Reported radii are exact for the returned centers and in input units.

mod colorful;
mod coverage;
mod gonzalez;
mod max;
mod min;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{AffineNormalization, Point2D, Polygon2D};

pub use colorful::{colorful_kcenter_exact, colorful_radius, MAX_COLORS};
pub use coverage::{distance_to_union, max_coverage_radius, min_coverage_radius};
pub use gonzalez::{
    assign_to_centers, composable_kcenter, covering_radius, gonzalez_indices, gonzalez_kcenter, ComposableClustering,
};
pub use max::{
    max_1center_polygons, max_kcenter_arbitrary, max_kcenter_arbitrary_with, max_kcenter_convex,
    max_kcenter_convex_with,
};
pub use min::{min_kcenter_polygons, min_kcenter_polygons_with, MAX_POLYGONS};

#[derive(Debug, Clone, PartialEq)]
pub struct PointClustering {
    pub centers: Vec<Point2D>,
    pub radius: f64,
    /// Nearest center of every input point.
    pub assignment: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ColoredPoint {
    pub point: Point2D,
    pub color: usize,
}

/// How the grid cell length is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EpsPolicy {
    /// `eps` is measured in unit-box units and shrunk as far as the
    /// approximation guarantee requires.
    #[default]
    Guaranteed,
    /// `eps` is the cell length in input units, used as given.
    FixedCell,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridOptions {
    pub eps: f64,
    pub policy: EpsPolicy,
    /// Upper bound on lattice points scanned before any clustering.
    pub max_samples: usize,
    /// Start index for the farthest-point traversal.
    pub seed_index: usize,
}

impl GridOptions {
    pub const DEFAULT_MAX_SAMPLES: usize = 250_000;

    pub fn new(eps: f64) -> Self {
        Self {
            eps,
            policy: EpsPolicy::Guaranteed,
            max_samples: Self::DEFAULT_MAX_SAMPLES,
            seed_index: 0,
        }
    }

    pub fn fixed_cell(cell: f64) -> Self {
        Self {
            policy: EpsPolicy::FixedCell,
            ..Self::new(cell)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolygonClustering {
    pub centers: Vec<Point2D>,
    /// Exact cost of `centers` on the input polygons.
    pub radius: f64,
    /// Cost of `centers` on the sample set.
    pub sample_radius: f64,
    pub samples: Vec<Point2D>,
    /// Nearest center of every sample.
    pub assignment: Vec<usize>,
    /// Lattice cell length, in input units.
    pub cell: f64,
    /// Multiplicative guarantee against the optimum.
    pub alpha_bound: f64,
}

/// Result document: `{"centers":[[x,y]..],"radius":x,"samples":m,"alpha_bound":x}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonResultDoc {
    pub centers: Vec<Point2D>,
    pub radius: f64,
    pub samples: usize,
    pub alpha_bound: f64,
}

impl From<&PolygonClustering> for PolygonResultDoc {
    fn from(c: &PolygonClustering) -> Self {
        Self {
            centers: c.centers.clone(),
            radius: c.radius,
            samples: c.samples.len(),
            alpha_bound: c.alpha_bound,
        }
    }
}

fn validate(polygons: &[Polygon2D], k: usize) -> Result<()> {
    if polygons.is_empty() {
        return Err(Error::EmptyInput("no polygons"));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok(())
}

fn check_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::InvalidParameter(format!("eps must be positive, got {eps}")));
    }
    Ok(())
}

fn normalize(polygons: &[Polygon2D]) -> (Vec<Polygon2D>, AffineNormalization) {
    let t = AffineNormalization::fit(polygons.iter().flat_map(|p| p.vertices().iter().copied()));
    (polygons.iter().map(|p| t.apply_polygon(p)).collect(), t)
}

/// Keep the first occurrence of every exact duplicate.
fn dedup_points(points: Vec<Point2D>) -> Vec<Point2D> {
    let mut seen = std::collections::HashSet::new();
    points
        .into_iter()
        .filter(|p| seen.insert((p.x.to_bits(), p.y.to_bits())))
        .collect()
}
