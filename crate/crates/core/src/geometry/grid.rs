use super::distance::{point_segment_distance, stadium_contains};
use super::polygon::Polygon2D;
use super::primitives::{BoundingBox, Point2D, Stadium, TOLERANCE};
use crate::error::{Error, Result};

/// A closed planar region that can be sampled on a lattice.
pub trait Region {
    fn bounding_box(&self) -> BoundingBox;
    fn contains(&self, p: Point2D) -> bool;
}

impl Region for Polygon2D {
    fn bounding_box(&self) -> BoundingBox {
        Polygon2D::bounding_box(self)
    }

    fn contains(&self, p: Point2D) -> bool {
        Polygon2D::contains(self, p)
    }
}

impl Region for Stadium {
    fn bounding_box(&self) -> BoundingBox {
        BoundingBox::of_points([self.core.a, self.core.b])
            .expect("two points")
            .expand(self.radius)
    }

    fn contains(&self, p: Point2D) -> bool {
        stadium_contains(self, p)
    }
}

/// Minkowski sum of a polygon with a closed disk, never materialized:
/// membership is `distance-to-polygon ≤ radius`.
#[derive(Debug, Clone, Copy)]
pub struct OffsetPolygon<'a> {
    pub polygon: &'a Polygon2D,
    pub radius: f64,
}

impl Region for OffsetPolygon<'_> {
    fn bounding_box(&self) -> BoundingBox {
        self.polygon.bounding_box().expand(self.radius)
    }

    fn contains(&self, p: Point2D) -> bool {
        if self.polygon.contains(p) {
            return true;
        }
        self.polygon
            .edges()
            .any(|e| point_segment_distance(p, &e) <= self.radius + TOLERANCE)
    }
}

/// Lattice `origin + (i·eps, j·eps)` restricted to an axis-aligned box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lattice {
    pub origin: Point2D,
    pub eps: f64,
}

impl Lattice {
    pub fn new(origin: Point2D, eps: f64) -> Result<Self> {
        if !(eps > 0.0) || !eps.is_finite() {
            return Err(Error::InvalidParameter(format!("grid cell length {eps}")));
        }
        Ok(Self { origin, eps })
    }

    pub fn point(&self, i: i64, j: i64) -> Point2D {
        Point2D::new(self.origin.x + i as f64 * self.eps, self.origin.y + j as f64 * self.eps)
    }

    /// Inclusive index ranges of lattice points inside `bb` (boundary included).
    pub fn index_range(&self, bb: &BoundingBox) -> ((i64, i64), (i64, i64)) {
        let lo = |v: f64, o: f64| ((v - o) / self.eps - 1e-9).ceil() as i64;
        let hi = |v: f64, o: f64| ((v - o) / self.eps + 1e-9).floor() as i64;
        (
            (lo(bb.min.x, self.origin.x), hi(bb.max.x, self.origin.x)),
            (lo(bb.min.y, self.origin.y), hi(bb.max.y, self.origin.y)),
        )
    }

    /// Number of lattice points in the bounding box.
    pub fn count_in(&self, bb: &BoundingBox) -> usize {
        let ((i0, i1), (j0, j1)) = self.index_range(bb);
        if i1 < i0 || j1 < j0 {
            return 0;
        }
        ((i1 - i0 + 1) as usize).saturating_mul((j1 - j0 + 1) as usize)
    }

    /// Lattice points inside the region in row-major order (rows by `y`).
    pub fn points_in<R: Region + ?Sized>(&self, region: &R) -> Vec<Point2D> {
        let ((i0, i1), (j0, j1)) = self.index_range(&region.bounding_box());
        let mut out = Vec::new();
        for j in j0..=j1 {
            for i in i0..=i1 {
                let p = self.point(i, j);
                if region.contains(p) {
                    out.push(p);
                }
            }
        }
        out
    }
}

/// All points of the lattice anchored at `origin` with spacing `eps` lying
/// inside or on the boundary of `region`, in row-major order.
pub fn grid_points_in_region<R: Region + ?Sized>(region: &R, eps: f64, origin: Point2D) -> Result<Vec<Point2D>> {
    Ok(Lattice::new(origin, eps)?.points_in(region))
}
