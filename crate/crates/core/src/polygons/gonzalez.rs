use rayon::prelude::*;

use super::PointClustering;
use crate::error::{Error, Result};
use crate::geometry::Point2D;

/// Index of the nearest center for every point (ties to the lowest center)
/// and the largest such distance.
pub fn assign_to_centers(points: &[Point2D], centers: &[Point2D]) -> Result<(Vec<usize>, f64)> {
    if centers.is_empty() {
        return Err(Error::NoCenters);
    }
    let mut radius = 0.0f64;
    let assignment = points
        .iter()
        .map(|&p| {
            let (mut best, mut best_d) = (0, f64::INFINITY);
            for (i, c) in centers.iter().enumerate() {
                let d = p.distance_sq(*c);
                if d < best_d {
                    best = i;
                    best_d = d;
                }
            }
            radius = radius.max(best_d);
            best
        })
        .collect();
    Ok((assignment, radius.sqrt()))
}

/// Largest distance from a point to its nearest center.
pub fn covering_radius(points: &[Point2D], centers: &[Point2D]) -> Result<f64> {
    if centers.is_empty() {
        return Err(Error::NoCenters);
    }
    Ok(points
        .par_iter()
        .map(|p| centers.iter().map(|c| p.distance_sq(*c)).fold(f64::INFINITY, f64::min))
        .reduce(|| 0.0, f64::max)
        .sqrt())
}

/// Indices chosen by farthest-first traversal from `seed_index`. Ties go to
/// the lowest index; with `k ≥ n` every index is returned.
pub fn gonzalez_indices(points: &[Point2D], k: usize, seed_index: usize) -> Result<Vec<usize>> {
    if points.is_empty() {
        return Err(Error::EmptyInput("no points"));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if seed_index >= points.len() {
        return Err(Error::InvalidParameter(format!(
            "seed index {seed_index} with {} points",
            points.len()
        )));
    }
    let n = points.len();
    if k >= n {
        return Ok((0..n).collect());
    }
    let mut chosen = vec![seed_index];
    let mut is_center = vec![false; n];
    is_center[seed_index] = true;
    let mut dist: Vec<f64> = points.iter().map(|p| p.distance_sq(points[seed_index])).collect();
    while chosen.len() < k {
        let mut far = usize::MAX;
        let mut far_d = f64::NEG_INFINITY;
        for (i, &d) in dist.iter().enumerate() {
            if !is_center[i] && d > far_d {
                far = i;
                far_d = d;
            }
        }
        chosen.push(far);
        is_center[far] = true;
        let c = points[far];
        for (d, p) in dist.iter_mut().zip(points) {
            *d = d.min(p.distance_sq(c));
        }
    }
    Ok(chosen)
}

/// Greedy farthest-point k-center, a 2-approximation of discrete k-center.
pub fn gonzalez_kcenter(points: &[Point2D], k: usize, seed_index: usize) -> Result<PointClustering> {
    let idx = gonzalez_indices(points, k, seed_index)?;
    let centers: Vec<Point2D> = idx.iter().map(|&i| points[i]).collect();
    let (assignment, radius) = assign_to_centers(points, &centers)?;
    Ok(PointClustering {
        centers,
        radius,
        assignment,
    })
}

/// Two-round k-center: Gonzalez on each of `partitions` round-robin parts,
/// then Gonzalez on the union of their centers.
#[derive(Debug, Clone, PartialEq)]
pub struct ComposableClustering {
    pub clustering: PointClustering,
    /// Union of the per-part centers, in part order.
    pub summary: Vec<Point2D>,
}

pub fn composable_kcenter(points: &[Point2D], k: usize, partitions: usize, seed: u64) -> Result<ComposableClustering> {
    if points.is_empty() {
        return Err(Error::EmptyInput("no points"));
    }
    if partitions == 0 {
        return Err(Error::InvalidParameter("at least one partition".into()));
    }
    let parts: Vec<Vec<Point2D>> = (0..partitions.min(points.len()))
        .map(|l| points.iter().skip(l).step_by(partitions).copied().collect())
        .collect();
    let per_part: Vec<Vec<Point2D>> = parts
        .par_iter()
        .map(|part| {
            let seed_index = (seed % part.len() as u64) as usize;
            gonzalez_indices(part, k, seed_index).map(|idx| idx.iter().map(|&i| part[i]).collect())
        })
        .collect::<Result<_>>()?;
    let summary: Vec<Point2D> = per_part.into_iter().flatten().collect();
    let seed_index = (seed % summary.len() as u64) as usize;
    let idx = gonzalez_indices(&summary, k, seed_index)?;
    let centers: Vec<Point2D> = idx.iter().map(|&i| summary[i]).collect();
    let (assignment, radius) = assign_to_centers(points, &centers)?;
    Ok(ComposableClustering {
        clustering: PointClustering {
            centers,
            radius,
            assignment,
        },
        summary,
    })
}
