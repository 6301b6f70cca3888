use serde::{Deserialize, Serialize};

use super::distance::{point_segment_distance, segment_min_distance, segments_intersect};
use super::primitives::{orient, BoundingBox, Point2D, Segment2D, TOLERANCE};
use crate::error::{Error, Result};

/// A polygon stored as a counterclockwise ring without a repeated closing
/// vertex. One- and two-vertex polygons are legal and model a point and a
/// segment respectively. Simplicity is not enforced on construction; callers
/// that need it check [`Polygon2D::is_simple`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolygonDoc", into = "PolygonDoc")]
pub struct Polygon2D {
    vertices: Vec<Point2D>,
}

#[derive(Serialize, Deserialize)]
struct PolygonDoc {
    ring: Vec<Point2D>,
}

impl TryFrom<PolygonDoc> for Polygon2D {
    type Error = Error;
    fn try_from(doc: PolygonDoc) -> Result<Self> {
        Polygon2D::new(doc.ring)
    }
}

impl From<Polygon2D> for PolygonDoc {
    fn from(p: Polygon2D) -> Self {
        PolygonDoc { ring: p.vertices }
    }
}

impl Polygon2D {
    pub fn new(mut vertices: Vec<Point2D>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidGeometry("polygon needs at least one vertex".into()));
        }
        if let Some(p) = vertices.iter().find(|p| !p.is_finite()) {
            return Err(Error::InvalidGeometry(format!("non-finite vertex {p:?}")));
        }
        let n = vertices.len();
        if n > 1 {
            for i in 0..n {
                if vertices[i] == vertices[(i + 1) % n] {
                    return Err(Error::InvalidGeometry(format!(
                        "consecutive duplicate vertex {:?}",
                        vertices[i]
                    )));
                }
            }
        }
        if signed_area(&vertices) < 0.0 {
            vertices.reverse();
        }
        Ok(Self { vertices })
    }

    pub fn point(p: Point2D) -> Self {
        Self { vertices: vec![p] }
    }

    /// Axis-aligned rectangle `[x0, x1] × [y0, y1]`.
    pub fn rectangle(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        Self::new(vec![
            Point2D::new(x0, y0),
            Point2D::new(x1, y0),
            Point2D::new(x1, y1),
            Point2D::new(x0, y1),
        ])
    }

    pub fn vertices(&self) -> &[Point2D] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices).abs()
    }

    pub fn bounding_box(&self) -> BoundingBox {
        BoundingBox::of_points(self.vertices.iter().copied()).expect("polygon is nonempty")
    }

    /// Boundary edges. A point polygon has a single degenerate edge and a
    /// two-vertex polygon a single edge.
    pub fn edges(&self) -> impl Iterator<Item = Segment2D> + '_ {
        let n = self.vertices.len();
        let count = match n {
            1 => 1,
            2 => 1,
            _ => n,
        };
        (0..count).map(move |i| Segment2D::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn is_simple(&self) -> bool {
        let n = self.vertices.len();
        if n < 3 {
            return true;
        }
        let edges: Vec<Segment2D> = self.edges().collect();
        for i in 0..n {
            // adjacent edges must not fold back onto each other
            let e = edges[i];
            let f = edges[(i + 1) % n];
            if orient(e.a, e.b, f.b) == 0.0 && e.direction().dot(f.direction()) < 0.0 {
                return false;
            }
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                if segments_intersect(&edges[i], &edges[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Convex (collinear vertices allowed) and simple.
    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        if n < 3 {
            return true;
        }
        let v = &self.vertices;
        let scale = self.bounding_box().width().max(self.bounding_box().height()).max(1.0);
        let turns_left = (0..n).all(|i| orient(v[(i + n - 1) % n], v[i], v[(i + 1) % n]) >= -TOLERANCE * scale * scale);
        turns_left && self.is_simple()
    }

    /// Membership in the closed region (boundary within tolerance).
    pub fn contains(&self, p: Point2D) -> bool {
        if self.edges().any(|e| point_segment_distance(p, &e) <= TOLERANCE) {
            return true;
        }
        if self.vertices.len() < 3 {
            return false;
        }
        // crossing number
        let n = self.vertices.len();
        let mut inside = false;
        let mut j = n - 1;
        for i in 0..n {
            let (vi, vj) = (self.vertices[i], self.vertices[j]);
            if (vi.y > p.y) != (vj.y > p.y) {
                let x = vj.x + (p.y - vj.y) * (vi.x - vj.x) / (vi.y - vj.y);
                if p.x < x {
                    inside = !inside;
                }
            }
            j = i;
        }
        inside
    }

    /// Distance from `p` to the filled polygon; zero inside.
    pub fn distance_to(&self, p: Point2D) -> f64 {
        if self.contains(p) {
            return 0.0;
        }
        self.edges()
            .map(|e| point_segment_distance(p, &e))
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest distance from `p` to any point of the polygon, attained at a vertex.
    pub fn farthest_distance(&self, p: Point2D) -> f64 {
        self.vertices.iter().map(|v| v.distance(p)).fold(0.0, f64::max)
    }

    /// Translate and scale every vertex.
    pub fn map_points(&self, f: impl Fn(Point2D) -> Point2D) -> Self {
        let mut vertices: Vec<Point2D> = self.vertices.iter().map(|&p| f(p)).collect();
        if signed_area(&vertices) < 0.0 {
            vertices.reverse();
        }
        Self { vertices }
    }
}

/// Shoelace signed area; positive for counterclockwise rings.
pub fn signed_area(ring: &[Point2D]) -> f64 {
    let n = ring.len();
    if n < 3 {
        return 0.0;
    }
    let twice: f64 = (0..n).map(|i| ring[i].cross(ring[(i + 1) % n])).sum();
    0.5 * twice
}

/// The input point itself when inside the filled polygon, otherwise the
/// closest boundary point. Ties go to the lowest edge index.
pub fn nearest_point_on_polygon(p: Point2D, poly: &Polygon2D) -> Point2D {
    if poly.contains(p) {
        return p;
    }
    let mut best = poly.vertices[0];
    let mut best_d = f64::INFINITY;
    for e in poly.edges() {
        let q = e.closest_point(p);
        let d = q.distance_sq(p);
        if d < best_d {
            best_d = d;
            best = q;
        }
    }
    best
}

/// Minimum distance between two filled polygons; zero when they overlap or touch.
pub fn polygon_distance(p: &Polygon2D, q: &Polygon2D) -> f64 {
    if p.contains(q.vertices[0]) || q.contains(p.vertices[0]) {
        return 0.0;
    }
    let mut best = f64::INFINITY;
    for e in p.edges() {
        for f in q.edges() {
            best = best.min(segment_min_distance(&e, &f));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> Polygon2D {
        Polygon2D::rectangle(0.0, 0.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn construction_orients_counterclockwise() {
        let cw = Polygon2D::new(vec![
            Point2D::new(0.0, 0.0),
            Point2D::new(0.0, 1.0),
            Point2D::new(1.0, 1.0),
            Point2D::new(1.0, 0.0),
        ])
        .unwrap();
        assert!(signed_area(cw.vertices()) > 0.0);
        assert_eq!(cw.area(), 1.0);
    }

    #[test]
    fn construction_rejects_bad_rings() {
        assert!(Polygon2D::new(vec![]).is_err());
        let p = Point2D::new(0.0, 0.0);
        assert!(Polygon2D::new(vec![p, p, Point2D::new(1.0, 0.0)]).is_err());
        assert!(Polygon2D::new(vec![Point2D::new(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn json_ring_format() {
        let sq = unit_square();
        let text = serde_json::to_string(&sq).unwrap();
        assert_eq!(text, r#"{"ring":[[0.0,0.0],[1.0,0.0],[1.0,1.0],[0.0,1.0]]}"#);
        let back: Polygon2D = serde_json::from_str(&text).unwrap();
        assert_eq!(back, sq);
    }

    #[test]
    fn nearest_point_examples() {
        let sq = unit_square();
        assert_eq!(
            nearest_point_on_polygon(Point2D::new(0.5, 0.5), &sq),
            Point2D::new(0.5, 0.5)
        );
        assert_eq!(
            nearest_point_on_polygon(Point2D::new(2.0, 0.5), &sq),
            Point2D::new(1.0, 0.5)
        );
        assert_eq!(
            nearest_point_on_polygon(Point2D::new(2.0, 2.0), &sq),
            Point2D::new(1.0, 1.0)
        );
    }

    #[test]
    fn simplicity() {
        let bowtie = Polygon2D::new(vec![
            Point2D::new(0.0, 0.0),
            Point2D::new(1.0, 1.0),
            Point2D::new(1.0, 0.0),
            Point2D::new(0.0, 1.0),
        ])
        .unwrap();
        assert!(!bowtie.is_simple());
        assert!(unit_square().is_simple());
        let flat = Polygon2D::new(vec![
            Point2D::new(0.0, 0.0),
            Point2D::new(1.0, 0.0),
            Point2D::new(2.0, 0.0),
        ])
        .unwrap();
        assert!(!flat.is_simple());
    }

    #[test]
    fn convexity() {
        assert!(unit_square().is_convex());
        let ell = Polygon2D::new(
            [(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)]
                .into_iter()
                .map(Point2D::from)
                .collect(),
        )
        .unwrap();
        assert!(!ell.is_convex());
        assert!(ell.contains(Point2D::new(0.5, 1.5)));
        assert!(!ell.contains(Point2D::new(1.5, 1.5)));
    }

    #[test]
    fn degenerate_polygons() {
        let p = Polygon2D::point(Point2D::new(1.0, 1.0));
        assert!(p.contains(Point2D::new(1.0, 1.0)));
        assert_eq!(p.distance_to(Point2D::new(4.0, 5.0)), 5.0);
        let s = Polygon2D::new(vec![Point2D::new(0.0, 0.0), Point2D::new(2.0, 0.0)]).unwrap();
        assert_eq!(s.edges().count(), 1);
        assert_eq!(s.distance_to(Point2D::new(1.0, 3.0)), 3.0);
    }

    #[test]
    fn polygon_distances() {
        let a = unit_square();
        let b = Polygon2D::rectangle(4.0, 0.0, 5.0, 1.0).unwrap();
        assert_eq!(polygon_distance(&a, &b), 3.0);
        let c = Polygon2D::rectangle(0.5, 0.5, 2.0, 2.0).unwrap();
        assert_eq!(polygon_distance(&a, &c), 0.0);
        let inner = Polygon2D::rectangle(0.2, 0.2, 0.4, 0.4).unwrap();
        assert_eq!(polygon_distance(&a, &inner), 0.0);
    }
}
