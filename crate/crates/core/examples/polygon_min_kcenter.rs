//! Min-cost k-center of polygons through exact colorful k-center.

use aggucluster::geometry::{Point2D, Polygon2D};
use aggucluster::polygons::{colorful_kcenter_exact, min_kcenter_polygons, ColoredPoint};

fn main() -> aggucluster::Result<()> {
    let pts = [
        ColoredPoint {
            point: Point2D::new(0.0, 0.0),
            color: 0,
        },
        ColoredPoint {
            point: Point2D::new(5.0, 0.0),
            color: 0,
        },
        ColoredPoint {
            point: Point2D::new(5.0, 1.0),
            color: 1,
        },
    ];
    let c = colorful_kcenter_exact(&pts, 1)?;
    println!("colorful: center {:?} radius {}", c.centers[0], c.radius);

    let polys = [
        Polygon2D::rectangle(0.0, 0.0, 1.0, 1.0)?,
        Polygon2D::rectangle(4.0, 0.0, 5.0, 1.0)?,
        Polygon2D::rectangle(2.0, 3.0, 3.0, 3.5)?,
    ];
    for k in 1..=3 {
        let res = min_kcenter_polygons(&polys, k, 0.1)?;
        let cs: Vec<String> = res
            .centers
            .iter()
            .map(|c| format!("({:.2}, {:.2})", c.x, c.y))
            .collect();
        println!(
            "k={k}: radius {:.4} on {} colored samples, centers {}",
            res.radius,
            res.samples.len(),
            cs.join(" ")
        );
    }
    Ok(())
}
