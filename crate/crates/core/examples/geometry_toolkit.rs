//! Smallest enclosing disk, convex hull, triangulation, lattice sampling and
//! unit-box normalization.

use aggucluster::geometry::{
    convex_hull, grid_points_in_region, normalize_to_unit_box, smallest_enclosing_disk, triangle_area, triangulate,
    OffsetPolygon, Point2D, Polygon2D, Shape,
};

fn main() -> aggucluster::Result<()> {
    let pts: Vec<Point2D> = (0..12)
        .map(|i| {
            let a = i as f64 * 0.7;
            Point2D::new(3.0 * a.cos() + 0.3 * (i % 3) as f64, 2.0 * a.sin())
        })
        .collect();

    let disk = smallest_enclosing_disk(&pts)?;
    println!(
        "enclosing disk at ({:.3}, {:.3}) radius {:.3}",
        disk.center.x, disk.center.y, disk.radius
    );

    let hull = convex_hull(&pts)?;
    println!(
        "hull keeps {} of {} points, area {:.3}",
        hull.len(),
        pts.len(),
        hull.area()
    );

    let ell = Polygon2D::new(
        [(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)]
            .into_iter()
            .map(Point2D::from)
            .collect(),
    )?;
    let tris = triangulate(&ell)?;
    println!(
        "L-shape: {} triangles, total area {}",
        tris.len(),
        tris.iter().map(triangle_area).sum::<f64>()
    );

    let inside = grid_points_in_region(&ell, 0.5, Point2D::new(0.0, 0.0))?;
    let grown = grid_points_in_region(
        &OffsetPolygon {
            polygon: &ell,
            radius: 0.5,
        },
        0.5,
        Point2D::new(0.0, 0.0),
    )?;
    println!("lattice points: {} inside, {} within 0.5", inside.len(), grown.len());

    let (shapes, t) = normalize_to_unit_box(&[Shape::Polygon(ell)]);
    println!("normalized by scale {} offset {:?}: {:?}", t.scale, t.offset, shapes[0]);
    Ok(())
}
