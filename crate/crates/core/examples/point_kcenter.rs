//! Farthest-point k-center and its two-round composable version.

use aggucluster::geometry::Point2D;
use aggucluster::polygons::{composable_kcenter, gonzalez_kcenter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> aggucluster::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pts: Vec<Point2D> = (0..2000)
        .map(|_| Point2D::new(rng.random_range(0.0..100.0), rng.random_range(0.0..100.0)))
        .collect();

    let direct = gonzalez_kcenter(&pts, 10, 0)?;
    println!("gonzalez: radius {:.3}", direct.radius);
    for l in [1, 4, 16, 64] {
        let comp = composable_kcenter(&pts, 10, l, 0)?;
        println!(
            "{l:>2} parts: summary {:>3} points, radius {:.3}",
            comp.summary.len(),
            comp.clustering.radius
        );
    }
    Ok(())
}
