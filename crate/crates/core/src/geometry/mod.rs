//! Planar primitives shared by every clustering algorithm.

mod distance;
mod grid;
mod hull;
mod normalize;
mod polygon;
mod primitives;
mod sed;
mod triangulate;

pub use distance::{
    clip_parameters, clip_segment_by_stadium, point_segment_distance, segment_min_distance,
    segment_to_centers_distance, segments_intersect, stadium_contains,
};
pub use grid::{grid_points_in_region, Lattice, OffsetPolygon, Region};
pub use hull::convex_hull;
pub use normalize::{normalize_to_unit_box, AffineNormalization, Shape};
pub use polygon::{nearest_point_on_polygon, polygon_distance, signed_area, Polygon2D};
pub use primitives::{orient, BoundingBox, Disk, Point2D, Segment2D, Stadium, TOLERANCE};
pub use sed::{smallest_enclosing_disk, smallest_enclosing_disk_seeded};
pub use triangulate::{triangle_area, triangulate, Triangle};
