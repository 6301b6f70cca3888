//! Exhaustive solvers next to the approximation algorithms.

use aggucluster::geometry::{Point2D, Polygon2D, Segment2D};
use aggucluster::oracle::{brute_kcenter_points, brute_kcenter_segments, brute_polygon_kcenter};
use aggucluster::polygons::{gonzalez_kcenter, max_kcenter_convex};
use aggucluster::segments::{max_kcenter_segments, CostMode};

fn main() -> aggucluster::Result<()> {
    let segs: Vec<Segment2D> = [
        (0.0, 0.0, 1.0, 0.0),
        (0.0, 2.0, 1.0, 2.0),
        (0.0, 1.0, 1.0, 1.0),
        (3.0, 0.0, 3.0, 2.0),
    ]
    .into_iter()
    .map(|(ax, ay, bx, by)| Segment2D::new(Point2D::new(ax, ay), Point2D::new(bx, by)))
    .collect();
    let exact = brute_kcenter_segments(&segs, 2, CostMode::Max, 1e-3)?;
    let approx = max_kcenter_segments(&segs, 2, 0.1)?;
    println!(
        "segments: optimum {:.4} ± {:.4}, algorithm {:.4} with {} centers",
        exact.optimum,
        exact.error_bound,
        approx.radius,
        approx.center_indices.len()
    );

    let pts: Vec<Point2D> = (0..12)
        .map(|i| Point2D::new((i * 7 % 12) as f64, (i * 5 % 7) as f64))
        .collect();
    let exact = brute_kcenter_points(&pts, 3, &pts)?;
    println!(
        "points: optimum {:.4}, gonzalez {:.4}",
        exact.optimum,
        gonzalez_kcenter(&pts, 3, 0)?.radius
    );

    let squares = [
        Polygon2D::rectangle(0.0, 0.0, 1.0, 1.0)?,
        Polygon2D::rectangle(3.0, 0.0, 4.0, 1.0)?,
    ];
    let exact = brute_polygon_kcenter(&squares, 2, 0.1, CostMode::Max)?;
    let approx = max_kcenter_convex(&squares, 2, 0.05)?;
    println!(
        "polygons: optimum {:.4} ± {:.4}, grid algorithm {:.4}",
        exact.optimum, exact.error_bound, approx.radius
    );
    Ok(())
}
