use super::polygon::Polygon2D;
use super::primitives::{orient, Point2D};
use crate::error::{Error, Result};

/// Counterclockwise convex hull by Andrew's monotone chain. Collinear
/// boundary points are dropped; one or two distinct input points give a
/// degenerate polygon.
pub fn convex_hull(points: &[Point2D]) -> Result<Polygon2D> {
    if points.is_empty() {
        return Err(Error::EmptyInput("convex hull of no points"));
    }
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return Polygon2D::new(pts);
    }

    let mut lower: Vec<Point2D> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point2D> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Polygon2D::new(lower)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2D {
        Point2D::new(x, y)
    }

    #[test]
    fn drops_interior_point() {
        let hull = convex_hull(&[p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0), p(0.2, 0.2)]).unwrap();
        assert_eq!(hull.vertices(), &[p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)]);
    }

    #[test]
    fn single_point_is_degenerate() {
        let hull = convex_hull(&[p(3.0, 4.0)]).unwrap();
        assert_eq!(hull.vertices(), &[p(3.0, 4.0)]);
        assert!(convex_hull(&[]).is_err());
    }

    #[test]
    fn collinear_input_gives_a_segment() {
        let hull = convex_hull(&[p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0), p(1.0, 1.0)]).unwrap();
        assert_eq!(hull.vertices(), &[p(0.0, 0.0), p(2.0, 2.0)]);
    }

    #[test]
    fn points_on_a_circle_are_all_extreme() {
        let pts: Vec<Point2D> = (0..100)
            .map(|i| {
                let a = i as f64 * std::f64::consts::TAU / 100.0;
                p(a.cos(), a.sin())
            })
            .collect();
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.len(), 100);
        assert!(hull.is_convex());
    }

    #[test]
    fn drops_collinear_boundary_points() {
        let hull = convex_hull(&[p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0), p(2.0, 2.0), p(0.0, 2.0)]).unwrap();
        assert_eq!(hull.len(), 4);
    }
}
