use super::polygon::Polygon2D;
use super::primitives::{BoundingBox, Point2D, Segment2D};

/// A geometry that can be carried through a normalization.
#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Point(Point2D),
    Segment(Segment2D),
    Polygon(Polygon2D),
}

impl Shape {
    fn points(&self) -> Vec<Point2D> {
        match self {
            Shape::Point(p) => vec![*p],
            Shape::Segment(s) => vec![s.a, s.b],
            Shape::Polygon(p) => p.vertices().to_vec(),
        }
    }
}

/// Uniform scale and translation: `normalized = (p - offset) * scale`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineNormalization {
    pub scale: f64,
    pub offset: Point2D,
}

impl AffineNormalization {
    pub const IDENTITY: Self = Self {
        scale: 1.0,
        offset: Point2D::new(0.0, 0.0),
    };

    /// Map the bounding box of `points` into `[0, 1]²` by its longer side.
    /// A zero-extent box keeps scale 1.
    pub fn fit<I: IntoIterator<Item = Point2D>>(points: I) -> Self {
        let Some(bb) = BoundingBox::of_points(points) else {
            return Self::IDENTITY;
        };
        let side = bb.width().max(bb.height());
        let scale = if side > 0.0 { 1.0 / side } else { 1.0 };
        Self { scale, offset: bb.min }
    }

    pub fn apply(&self, p: Point2D) -> Point2D {
        (p - self.offset) * self.scale
    }

    pub fn invert(&self, p: Point2D) -> Point2D {
        p * (1.0 / self.scale) + self.offset
    }

    pub fn apply_segment(&self, s: &Segment2D) -> Segment2D {
        Segment2D::new(self.apply(s.a), self.apply(s.b))
    }

    pub fn apply_polygon(&self, p: &Polygon2D) -> Polygon2D {
        p.map_points(|q| self.apply(q))
    }

    pub fn apply_shape(&self, shape: &Shape) -> Shape {
        match shape {
            Shape::Point(p) => Shape::Point(self.apply(*p)),
            Shape::Segment(s) => Shape::Segment(self.apply_segment(s)),
            Shape::Polygon(p) => Shape::Polygon(self.apply_polygon(p)),
        }
    }

    /// A length in normalized units expressed in input units.
    pub fn length_to_input(&self, r: f64) -> f64 {
        r / self.scale
    }

    pub fn length_to_normalized(&self, r: f64) -> f64 {
        r * self.scale
    }
}

/// Scale and translate all shapes so their joint bounding box fits `[0, 1]²`.
pub fn normalize_to_unit_box(shapes: &[Shape]) -> (Vec<Shape>, AffineNormalization) {
    let t = AffineNormalization::fit(shapes.iter().flat_map(Shape::points));
    (shapes.iter().map(|s| t.apply_shape(s)).collect(), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Shape {
        Shape::Polygon(Polygon2D::rectangle(x0, y0, x1, y1).unwrap())
    }

    #[test]
    fn unit_box_is_identity() {
        let (out, t) = normalize_to_unit_box(&[rect(0.0, 0.0, 1.0, 1.0)]);
        assert_eq!(t, AffineNormalization::IDENTITY);
        assert_eq!(out, vec![rect(0.0, 0.0, 1.0, 1.0)]);
    }

    #[test]
    fn radii_report_in_input_units() {
        let (_, t) = normalize_to_unit_box(&[rect(0.0, 0.0, 10.0, 10.0)]);
        assert_eq!(t.scale, 0.1);
        assert!((t.length_to_input(0.5) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn longer_side_sets_the_scale() {
        let (_, t) = normalize_to_unit_box(&[
            Shape::Point(Point2D::new(3.0, 1.0)),
            Shape::Segment(Segment2D::new(Point2D::new(7.0, 2.0), Point2D::new(5.0, 1.5))),
        ]);
        assert_eq!(t.scale, 0.25);
        assert_eq!(t.offset, Point2D::new(3.0, 1.0));
    }

    #[test]
    fn degenerate_box_keeps_unit_scale() {
        let (_, t) = normalize_to_unit_box(&[Shape::Point(Point2D::new(2.0, 2.0))]);
        assert_eq!(t.scale, 1.0);
    }

    proptest! {
        #[test]
        fn round_trip(x in -1e3f64..1e3, y in -1e3f64..1e3, w in 1e-2f64..1e3, h in 1e-2f64..1e3,
                      px in 0.0f64..1.0, py in 0.0f64..1.0) {
            let t = AffineNormalization::fit([Point2D::new(x, y), Point2D::new(x + w, y + h)]);
            let p = Point2D::new(x + px * w, y + py * h);
            let q = t.apply(p);
            prop_assert!(q.x >= -1e-12 && q.x <= 1.0 + 1e-12 && q.y >= -1e-12 && q.y <= 1.0 + 1e-12);
            prop_assert!(t.invert(q).distance(p) < 1e-9);
        }
    }
}
