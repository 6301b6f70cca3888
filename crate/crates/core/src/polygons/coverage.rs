use crate::error::{Error, Result};
use crate::geometry::{Point2D, Polygon2D, TOLERANCE};

fn nearest_center_distance(p: Point2D, centers: &[Point2D]) -> f64 {
    centers
        .iter()
        .map(|c| p.distance_sq(*c))
        .fold(f64::INFINITY, f64::min)
        .sqrt()
}

fn circumcenter(a: Point2D, b: Point2D, c: Point2D) -> Option<Point2D> {
    let (ab, ac) = (b - a, c - a);
    let d = 2.0 * ab.cross(ac);
    if d.abs() <= TOLERANCE * (ab.norm_sq() + ac.norm_sq()) {
        return None;
    }
    let (ab2, ac2) = (ab.norm_sq(), ac.norm_sq());
    let x = (ac.y * ab2 - ab.y * ac2) / d;
    let y = (ab.x * ac2 - ac.x * ab2) / d;
    Some(a + Point2D::new(x, y))
}

/// Largest distance from any point of the filled polygons to its nearest
/// center.
///
/// Within one Voronoi cell the distance to the cell's center is convex, so
/// the maximum over a polygon sits at a vertex, where an edge crosses a
/// bisector, or at a Voronoi vertex inside the polygon. All three candidate
/// families are evaluated.
pub fn max_coverage_radius(polygons: &[Polygon2D], centers: &[Point2D]) -> Result<f64> {
    if centers.is_empty() {
        return Err(Error::NoCenters);
    }
    let mut worst = 0.0f64;
    let mut probe = |p: Point2D| worst = worst.max(nearest_center_distance(p, centers));
    for poly in polygons {
        for &v in poly.vertices() {
            probe(v);
        }
        for e in poly.edges() {
            let dir = e.direction();
            for (i, &c) in centers.iter().enumerate() {
                for &d in &centers[i + 1..] {
                    // |x - c|² = |x - d|² is linear in the edge parameter
                    let normal = d - c;
                    let denom = 2.0 * normal.dot(dir);
                    if denom.abs() <= f64::MIN_POSITIVE {
                        continue;
                    }
                    let t = (d.norm_sq() - c.norm_sq() - 2.0 * normal.dot(e.a)) / denom;
                    if (0.0..=1.0).contains(&t) {
                        probe(e.at(t));
                    }
                }
            }
        }
    }
    let n = centers.len();
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                if let Some(v) = circumcenter(centers[i], centers[j], centers[l]) {
                    if polygons.iter().any(|p| p.contains(v)) {
                        probe(v);
                    }
                }
            }
        }
    }
    Ok(worst)
}

/// Largest distance from a polygon to its closest center; a polygon is
/// served once any of its points is near a center.
pub fn min_coverage_radius(polygons: &[Polygon2D], centers: &[Point2D]) -> Result<f64> {
    if centers.is_empty() {
        return Err(Error::NoCenters);
    }
    Ok(polygons
        .iter()
        .map(|p| centers.iter().map(|&c| p.distance_to(c)).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max))
}

/// Distance from `p` to the union of the polygons.
pub fn distance_to_union(polygons: &[Polygon2D], p: Point2D) -> f64 {
    polygons.iter().map(|q| q.distance_to(p)).fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(x0: f64, y0: f64, side: f64) -> Polygon2D {
        Polygon2D::rectangle(x0, y0, x0 + side, y0 + side).unwrap()
    }

    /// Brute force on a fine grid plus the boundary.
    fn sampled_max(polygons: &[Polygon2D], centers: &[Point2D], step: f64) -> f64 {
        let mut worst = 0.0f64;
        for poly in polygons {
            let bb = poly.bounding_box();
            let nx = (bb.width() / step).ceil() as i64;
            let ny = (bb.height() / step).ceil() as i64;
            for i in 0..=nx {
                for j in 0..=ny {
                    let p = Point2D::new(bb.min.x + i as f64 * step, bb.min.y + j as f64 * step);
                    if poly.contains(p) {
                        worst = worst.max(nearest_center_distance(p, centers));
                    }
                }
            }
        }
        worst
    }

    #[test]
    fn single_center_hits_a_corner() {
        let r = max_coverage_radius(&[square(0.0, 0.0, 1.0)], &[Point2D::new(0.5, 0.5)]).unwrap();
        assert!((r - 0.5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn bisector_crossing_is_found() {
        // centers left and right of a wide rectangle: the worst point is on
        // the bisector x = 2 at the top or bottom edge
        let rect = Polygon2D::rectangle(0.0, 0.0, 4.0, 1.0).unwrap();
        let cs = [Point2D::new(1.0, 0.5), Point2D::new(3.0, 0.5)];
        let r = max_coverage_radius(&[rect], &cs).unwrap();
        assert!((r - 1.25f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn voronoi_vertex_inside() {
        let sq = square(-2.0, -2.0, 4.0);
        let cs: Vec<Point2D> = (0..3)
            .map(|i| {
                let a = i as f64 * std::f64::consts::TAU / 3.0;
                Point2D::new(1.5 * a.cos(), 1.5 * a.sin())
            })
            .collect();
        let exact = max_coverage_radius(std::slice::from_ref(&sq), &cs).unwrap();
        let sampled = sampled_max(&[sq], &cs, 0.01);
        assert!(exact >= sampled - 1e-12);
        assert!(exact - sampled < 0.02);
    }

    #[test]
    fn agrees_with_sampling_on_an_l_shape() {
        let ell = Polygon2D::new(
            [(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)]
                .into_iter()
                .map(Point2D::from)
                .collect(),
        )
        .unwrap();
        let cs = [Point2D::new(0.3, 0.4), Point2D::new(1.7, 0.2), Point2D::new(0.5, 1.8)];
        let exact = max_coverage_radius(std::slice::from_ref(&ell), &cs).unwrap();
        let sampled = sampled_max(&[ell], &cs, 0.005);
        assert!(exact >= sampled - 1e-12);
        assert!(exact - sampled < 0.01);
    }

    #[test]
    fn min_mode_uses_closest_points() {
        let ps = [square(0.0, 0.0, 1.0), square(4.0, 0.0, 1.0)];
        let r = min_coverage_radius(&ps, &[Point2D::new(1.0, 0.5)]).unwrap();
        assert!((r - 3.0).abs() < 1e-12);
        assert_eq!(distance_to_union(&ps, Point2D::new(2.0, 0.5)), 1.0);
        assert!(min_coverage_radius(&ps, &[]).is_err());
    }
}
