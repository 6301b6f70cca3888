//! Max-cost k-center of polygons: the single-center rule, the convex grid
//! algorithm and the triangulation-based one.

use aggucluster::geometry::{smallest_enclosing_disk, Point2D, Polygon2D};
use aggucluster::polygons::{max_1center_polygons, max_kcenter_arbitrary, max_kcenter_convex};

fn main() -> aggucluster::Result<()> {
    let squares = [
        Polygon2D::rectangle(0.0, 0.0, 1.0, 1.0)?,
        Polygon2D::rectangle(9.0, 0.0, 10.0, 1.0)?,
    ];
    let (c, r) = max_1center_polygons(&squares)?;
    let vertices: Vec<Point2D> = squares.iter().flat_map(|p| p.vertices().to_vec()).collect();
    let sed = smallest_enclosing_disk(&vertices)?;
    println!(
        "1-center ({:.3}, {:.3}) radius {r:.5}, enclosing disk radius {:.5}",
        c.x, c.y, sed.radius
    );

    for k in 1..=3 {
        let res = max_kcenter_convex(&squares, k, 0.1)?;
        println!(
            "convex k={k}: radius {:.4} from {} samples (guarantee x{:.2})",
            res.radius,
            res.samples.len(),
            res.alpha_bound
        );
    }

    let ell = Polygon2D::new(
        [(0.0, 0.0), (4.0, 0.0), (4.0, 1.0), (1.0, 1.0), (1.0, 4.0), (0.0, 4.0)]
            .into_iter()
            .map(Point2D::from)
            .collect(),
    )?;
    for k in 1..=3 {
        let res = max_kcenter_arbitrary(std::slice::from_ref(&ell), k, 0.1)?;
        let cs: Vec<String> = res
            .centers
            .iter()
            .map(|c| format!("({:.2}, {:.2})", c.x, c.y))
            .collect();
        println!("L-shape k={k}: radius {:.4} centers {}", res.radius, cs.join(" "));
    }
    Ok(())
}
