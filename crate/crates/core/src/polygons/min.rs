use log::warn;
use rayon::prelude::*;

use super::{
    check_eps, colorful::colorful_kcenter_exact, min_coverage_radius, normalize, validate, ColoredPoint, EpsPolicy,
    GridOptions, PolygonClustering,
};
use crate::error::{Error, Result};
use crate::geometry::{nearest_point_on_polygon, polygon_distance, Lattice, OffsetPolygon, Point2D, Polygon2D, Region};

/// Largest input size for the min-cost solver; every polygon is a color.
pub const MAX_POLYGONS: usize = 8;

/// Sample cap for the exact colorful search, which is quadratic in samples.
const MAX_COLORED_SAMPLES: usize = 6_000;

/// Closest point of the union, ties to the lowest polygon index.
fn snap_to_union(x: Point2D, polygons: &[Polygon2D]) -> Point2D {
    let mut best = (x, f64::INFINITY);
    for p in polygons {
        let q = nearest_point_on_polygon(x, p);
        let d = q.distance_sq(x);
        if d < best.1 {
            best = (q, d);
        }
    }
    best.0
}

/// Cell length in unit-box units: `eps` clamped to the smallest positive gap
/// between polygons and floored at `eps / 1024`.
fn clamped_cell(normalized: &[Polygon2D], eps: f64) -> f64 {
    let mut cell = eps;
    for i in 0..normalized.len() {
        for j in i + 1..normalized.len() {
            let d = polygon_distance(&normalized[i], &normalized[j]);
            if d > 0.0 {
                cell = cell.min(d);
            }
        }
    }
    let floor = eps / 1024.0;
    if cell < floor {
        warn!("polygon gap {cell} below the grid floor, using {floor}");
        cell = floor;
    }
    cell
}

/// Min-cost k-center of a handful of polygons by exact colorful k-center on
/// colored grid samples. The radius is within an additive `2·√2·cell` of the
/// optimum; `alpha_bound` is 1.
pub fn min_kcenter_polygons(polygons: &[Polygon2D], k: usize, eps: f64) -> Result<PolygonClustering> {
    min_kcenter_polygons_with(polygons, k, &GridOptions::new(eps))
}

pub fn min_kcenter_polygons_with(polygons: &[Polygon2D], k: usize, opts: &GridOptions) -> Result<PolygonClustering> {
    validate(polygons, k)?;
    check_eps(opts.eps)?;
    if polygons.len() > MAX_POLYGONS {
        return Err(Error::ColorLimit(polygons.len(), MAX_POLYGONS));
    }
    let (normalized, t) = normalize(polygons);
    let cell = match opts.policy {
        EpsPolicy::Guaranteed => clamped_cell(&normalized, opts.eps),
        EpsPolicy::FixedCell => t.length_to_normalized(opts.eps),
    };
    let lattice = Lattice::new(Point2D::new(0.0, 0.0), cell)?;
    let offsets: Vec<OffsetPolygon> = normalized
        .iter()
        .map(|p| OffsetPolygon {
            polygon: p,
            radius: cell,
        })
        .collect();
    let budget: usize = offsets.iter().map(|m| lattice.count_in(&m.bounding_box())).sum();
    let cap = opts.max_samples.min(MAX_COLORED_SAMPLES);
    if budget > cap {
        return Err(Error::SampleBudget(budget, cap));
    }

    let mut colored: Vec<ColoredPoint> = normalized
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.vertices().iter().map(move |&v| ColoredPoint { point: v, color: i }))
        .collect();
    let grown: Vec<Vec<ColoredPoint>> = offsets
        .par_iter()
        .enumerate()
        .map(|(i, m)| {
            lattice
                .points_in(m)
                .into_iter()
                .map(|x| ColoredPoint {
                    point: snap_to_union(x, &normalized),
                    color: i,
                })
                .collect()
        })
        .collect();
    colored.extend(grown.into_iter().flatten());
    let mut seen = std::collections::HashSet::new();
    colored.retain(|c| seen.insert((c.point.x.to_bits(), c.point.y.to_bits(), c.color)));

    let pc = colorful_kcenter_exact(&colored, k)?;
    let centers: Vec<Point2D> = pc
        .centers
        .iter()
        .map(|&c| snap_to_union(t.invert(c), polygons))
        .collect();
    let radius = min_coverage_radius(polygons, &centers)?;
    Ok(PolygonClustering {
        centers,
        radius,
        sample_radius: t.length_to_input(pc.radius),
        samples: colored.iter().map(|c| t.invert(c.point)).collect(),
        assignment: pc.assignment,
        cell: t.length_to_input(cell),
        alpha_bound: 1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygons::distance_to_union;

    fn square(x0: f64, y0: f64, side: f64) -> Polygon2D {
        Polygon2D::rectangle(x0, y0, x0 + side, y0 + side).unwrap()
    }

    #[test]
    fn two_squares_one_center() {
        let ps = [square(0.0, 0.0, 1.0), square(4.0, 0.0, 1.0)];
        let c = min_kcenter_polygons(&ps, 1, 0.1).unwrap();
        assert!((c.radius - 3.0).abs() <= 0.15, "radius {}", c.radius);
        assert!(distance_to_union(&ps, c.centers[0]) <= 1e-9);
    }

    #[test]
    fn overlapping_polygons_share_a_center() {
        let ps = [square(0.0, 0.0, 2.0), square(1.0, 1.0, 2.0)];
        let c = min_kcenter_polygons(&ps, 1, 0.1).unwrap();
        // samples are colored by the grown polygon they came from, so the
        // common region is only hit up to one cell diagonal
        assert!(c.radius <= c.cell * 2f64.sqrt());
        assert_eq!(c.sample_radius, 0.0);
    }

    #[test]
    fn one_center_per_polygon() {
        let ps = [square(0.0, 0.0, 0.3), square(0.7, 0.0, 0.3), square(0.3, 0.7, 0.3)];
        let eps = 0.05;
        let c = min_kcenter_polygons(&ps, 3, eps).unwrap();
        assert!(c.radius <= eps * 2f64.sqrt());
    }

    #[test]
    fn too_many_polygons() {
        let ps: Vec<Polygon2D> = (0..9).map(|i| square(3.0 * i as f64, 0.0, 1.0)).collect();
        assert!(matches!(
            min_kcenter_polygons(&ps, 1, 0.1),
            Err(Error::ColorLimit(9, 8))
        ));
    }

    #[test]
    fn every_polygon_is_reached_by_the_samples() {
        let ps = [square(0.0, 0.0, 1.0), square(2.0, 3.0, 1.0), square(5.0, 0.0, 0.5)];
        for k in 1..=3 {
            let c = min_kcenter_polygons(&ps, k, 0.05).unwrap();
            assert!(c.radius <= c.sample_radius + 1e-9);
            assert_eq!(c.centers.len(), k);
        }
    }
}
