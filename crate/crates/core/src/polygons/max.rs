use log::debug;
use rayon::prelude::*;

use super::{
    check_eps, dedup_points, gonzalez::gonzalez_kcenter, max_coverage_radius, normalize, validate, EpsPolicy,
    GridOptions, PolygonClustering,
};
use crate::error::{Error, Result};
use crate::geometry::{
    nearest_point_on_polygon, smallest_enclosing_disk, triangle_area, triangulate, AffineNormalization, Lattice,
    OffsetPolygon, Point2D, Polygon2D, Region,
};

/// Single center for max-cost polygons: the point of the union closest to
/// the center of the smallest disk enclosing all vertices. Its radius is at
/// most twice that disk's radius.
pub fn max_1center_polygons(polygons: &[Polygon2D]) -> Result<(Point2D, f64)> {
    validate(polygons, 1)?;
    let vertices: Vec<Point2D> = polygons.iter().flat_map(|p| p.vertices().iter().copied()).collect();
    let sed = smallest_enclosing_disk(&vertices)?;
    let mut best = (sed.center, f64::INFINITY);
    for p in polygons {
        let q = nearest_point_on_polygon(sed.center, p);
        let d = q.distance(sed.center);
        if d < best.1 {
            best = (q, d);
        }
    }
    let center = best.0;
    let radius = vertices.iter().map(|v| v.distance(center)).fold(0.0, f64::max);
    Ok((center, radius))
}

/// Lattice points of every grown region, refused when the bounding boxes
/// alone hold more than `max_samples` points.
fn lattice_in_offsets(regions: &[Polygon2D], cell: f64, max_samples: usize) -> Result<Vec<Vec<Point2D>>> {
    let lattice = Lattice::new(Point2D::new(0.0, 0.0), cell)?;
    let offsets: Vec<OffsetPolygon> = regions
        .iter()
        .map(|p| OffsetPolygon {
            polygon: p,
            radius: cell,
        })
        .collect();
    let budget: usize = offsets.iter().map(|m| lattice.count_in(&m.bounding_box())).sum();
    if budget > max_samples {
        return Err(Error::SampleBudget(budget, max_samples));
    }
    Ok(offsets.par_iter().map(|m| lattice.points_in(m)).collect())
}

/// Vertices of the domain plus, for each region, its lattice points: kept
/// when inside the domain, otherwise pulled onto the region.
fn sample_domain(regions: &[Polygon2D], domain: &[Polygon2D], cell: f64, max_samples: usize) -> Result<Vec<Point2D>> {
    let per_region = lattice_in_offsets(regions, cell, max_samples)?;
    let mut samples: Vec<Point2D> = domain.iter().flat_map(|p| p.vertices().iter().copied()).collect();
    let snapped: Vec<Vec<Point2D>> = per_region
        .par_iter()
        .zip(regions)
        .map(|(xs, region)| {
            xs.iter()
                .map(|&x| {
                    if domain.iter().any(|p| p.contains(x)) {
                        x
                    } else {
                        nearest_point_on_polygon(x, region)
                    }
                })
                .collect()
        })
        .collect();
    samples.extend(snapped.into_iter().flatten());
    Ok(dedup_points(samples))
}

/// Cell length in unit-box units and the reported guarantee parameter.
fn grid_cell(normalized: &[Polygon2D], k: usize, opts: &GridOptions, t: &AffineNormalization) -> Result<(f64, f64)> {
    check_eps(opts.eps)?;
    match opts.policy {
        EpsPolicy::FixedCell => {
            let cell = t.length_to_normalized(opts.eps);
            Ok((cell, 4.0 * cell))
        }
        EpsPolicy::Guaranteed => {
            let mut eps = opts.eps;
            for p in normalized {
                let r = smallest_enclosing_disk(p.vertices())?.radius;
                if r > 0.0 {
                    eps = eps.min(r / k as f64);
                }
            }
            Ok((eps / 4.0, opts.eps))
        }
    }
}

fn cluster_samples(
    polygons: &[Polygon2D],
    samples_norm: Vec<Point2D>,
    t: &AffineNormalization,
    k: usize,
    seed_index: usize,
    cell: f64,
    alpha_bound: f64,
) -> Result<PolygonClustering> {
    let seed_index = seed_index % samples_norm.len();
    let pc = gonzalez_kcenter(&samples_norm, k, seed_index)?;
    let centers: Vec<Point2D> = pc
        .centers
        .iter()
        .map(|&c| {
            let c = t.invert(c);
            // back onto the domain, undoing round-off from the scaling
            polygons
                .iter()
                .map(|p| nearest_point_on_polygon(c, p))
                .min_by(|a, b| a.distance_sq(c).total_cmp(&b.distance_sq(c)))
                .expect("nonempty")
        })
        .collect();
    let radius = max_coverage_radius(polygons, &centers)?;
    Ok(PolygonClustering {
        centers,
        radius,
        sample_radius: t.length_to_input(pc.radius),
        samples: samples_norm.iter().map(|&p| t.invert(p)).collect(),
        assignment: pc.assignment,
        cell: t.length_to_input(cell),
        alpha_bound,
    })
}

/// Grid k-center of convex polygons, a `(2 + 4·eps)`-approximation.
pub fn max_kcenter_convex(polygons: &[Polygon2D], k: usize, eps: f64) -> Result<PolygonClustering> {
    max_kcenter_convex_with(polygons, k, &GridOptions::new(eps))
}

pub fn max_kcenter_convex_with(polygons: &[Polygon2D], k: usize, opts: &GridOptions) -> Result<PolygonClustering> {
    validate(polygons, k)?;
    if polygons.iter().any(|p| !p.is_convex()) {
        return Err(Error::NotConvex);
    }
    let (normalized, t) = normalize(polygons);
    let (cell, eps) = grid_cell(&normalized, k, opts, &t)?;
    let samples = sample_domain(&normalized, &normalized, cell, opts.max_samples)?;
    debug!("convex grid: cell {cell}, {} samples", samples.len());
    cluster_samples(polygons, samples, &t, k, opts.seed_index, cell, 2.0 + 4.0 * eps)
}

/// Grid k-center of simple polygons through their triangulations, a
/// `(6 + eps)`-approximation.
pub fn max_kcenter_arbitrary(polygons: &[Polygon2D], k: usize, eps: f64) -> Result<PolygonClustering> {
    max_kcenter_arbitrary_with(polygons, k, &GridOptions::new(eps))
}

pub fn max_kcenter_arbitrary_with(polygons: &[Polygon2D], k: usize, opts: &GridOptions) -> Result<PolygonClustering> {
    validate(polygons, k)?;
    if polygons.iter().any(|p| !p.is_simple()) {
        return Err(Error::NotSimple);
    }
    let (normalized, t) = normalize(polygons);
    let (cell, eps) = grid_cell(&normalized, k, opts, &t)?;
    let mut pieces = Vec::new();
    for p in &normalized {
        if p.is_degenerate() {
            pieces.push(p.clone());
            continue;
        }
        for tri in triangulate(p)? {
            if triangle_area(&tri) > 0.0 {
                pieces.push(Polygon2D::new(tri.to_vec())?);
            }
        }
    }
    let samples = sample_domain(&pieces, &normalized, cell, opts.max_samples)?;
    debug!("{} triangles, cell {cell}, {} samples", pieces.len(), samples.len());
    cluster_samples(polygons, samples, &t, k, opts.seed_index, cell, 6.0 + eps)
}
