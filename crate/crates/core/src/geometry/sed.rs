//! Smallest enclosing disk by randomized incremental construction.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::primitives::{Disk, Point2D, TOLERANCE};
use crate::error::{Error, Result};

const DEFAULT_SEED: u64 = 0x5eed_d15c;

/// Smallest enclosing disk with a fixed default shuffle seed.
pub fn smallest_enclosing_disk(points: &[Point2D]) -> Result<Disk> {
    smallest_enclosing_disk_seeded(points, DEFAULT_SEED)
}

/// Welzl-style randomized incremental construction, expected linear time.
/// The shuffle is driven by `seed`, so results are reproducible.
pub fn smallest_enclosing_disk_seeded(points: &[Point2D], seed: u64) -> Result<Disk> {
    if points.is_empty() {
        return Err(Error::EmptyInput("smallest enclosing disk of no points"));
    }
    let mut order: Vec<Point2D> = points.to_vec();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

    let mut disk = Disk {
        center: order[0],
        radius: 0.0,
    };
    for i in 1..order.len() {
        if covers(&disk, order[i]) {
            continue;
        }
        disk = Disk {
            center: order[i],
            radius: 0.0,
        };
        for j in 0..i {
            if covers(&disk, order[j]) {
                continue;
            }
            disk = disk_from_two(order[i], order[j]);
            for k in 0..j {
                if !covers(&disk, order[k]) {
                    disk = disk_from_three(order[i], order[j], order[k]);
                }
            }
        }
    }
    Ok(disk)
}

fn covers(disk: &Disk, p: Point2D) -> bool {
    disk.center.distance(p) <= disk.radius + TOLERANCE * disk.radius.max(1.0) * 1e-3
}

fn disk_from_two(a: Point2D, b: Point2D) -> Disk {
    let center = a.midpoint(b);
    Disk {
        center,
        radius: center.distance(a).max(center.distance(b)),
    }
}

/// Circumscribed disk; collinear triples fall back to the widest pair.
fn disk_from_three(a: Point2D, b: Point2D, c: Point2D) -> Disk {
    let ab = b - a;
    let ac = c - a;
    let d = 2.0 * ab.cross(ac);
    let scale = ab.norm_sq().max(ac.norm_sq());
    if d.abs() <= 1e-14 * scale {
        let candidates = [disk_from_two(a, b), disk_from_two(a, c), disk_from_two(b, c)];
        return candidates
            .into_iter()
            .max_by(|x, y| x.radius.total_cmp(&y.radius))
            .expect("three candidates");
    }
    let ux = (ac.y * ab.norm_sq() - ab.y * ac.norm_sq()) / d;
    let uy = (ab.x * ac.norm_sq() - ac.x * ab.norm_sq()) / d;
    let center = Point2D::new(a.x + ux, a.y + uy);
    let radius = center.distance(a).max(center.distance(b)).max(center.distance(c));
    Disk { center, radius }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pair_disk(a: Point2D, b: Point2D) -> Disk {
        Disk {
            center: a.midpoint(b),
            radius: 0.5 * a.distance(b),
        }
    }

    /// Circumcircle from the two bisector equations by Cramer's rule.
    fn triple_disk(a: Point2D, b: Point2D, c: Point2D) -> Option<Disk> {
        let (a11, a12, r1) = (2.0 * (b.x - a.x), 2.0 * (b.y - a.y), b.norm_sq() - a.norm_sq());
        let (a21, a22, r2) = (2.0 * (c.x - a.x), 2.0 * (c.y - a.y), c.norm_sq() - a.norm_sq());
        let det = a11 * a22 - a12 * a21;
        if det.abs() < 1e-12 {
            return None;
        }
        let center = Point2D::new((r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det);
        Some(Disk {
            center,
            radius: center.distance(a),
        })
    }

    /// Minimum feasible disk over all pairs and triples.
    fn brute_force(points: &[Point2D]) -> f64 {
        let feasible = |d: &Disk| points.iter().all(|p| d.center.distance(*p) <= d.radius + 1e-9);
        let mut best = f64::INFINITY;
        if points.len() == 1 {
            return 0.0;
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let d = pair_disk(points[i], points[j]);
                if feasible(&d) {
                    best = best.min(d.radius);
                }
                for k in j + 1..points.len() {
                    if let Some(d) = triple_disk(points[i], points[j], points[k]) {
                        if feasible(&d) {
                            best = best.min(d.radius);
                        }
                    }
                }
            }
        }
        best
    }

    fn p(x: f64, y: f64) -> Point2D {
        Point2D::new(x, y)
    }

    #[test]
    fn examples() {
        let d = smallest_enclosing_disk(&[p(0.0, 0.0)]).unwrap();
        assert_eq!((d.center, d.radius), (p(0.0, 0.0), 0.0));

        let d = smallest_enclosing_disk(&[p(0.0, 0.0), p(2.0, 0.0)]).unwrap();
        assert_eq!((d.center, d.radius), (p(1.0, 0.0), 1.0));

        let pts = [p(0.0, 0.0), p(2.0, 0.0), p(1.0, 1.0)];
        assert_eq!(brute_force(&pts), 1.0);
        let d = smallest_enclosing_disk(&pts).unwrap();
        assert!(d.center.distance(p(1.0, 0.0)) < 1e-12);
        assert!((d.radius - 1.0).abs() < 1e-12);
    }

    #[test]
    fn empty_is_an_error() {
        assert!(smallest_enclosing_disk(&[]).is_err());
    }

    #[test]
    fn duplicates_and_collinear() {
        let pts = [p(1.0, 1.0), p(1.0, 1.0), p(3.0, 1.0), p(2.0, 1.0)];
        let d = smallest_enclosing_disk(&pts).unwrap();
        assert!((d.radius - 1.0).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn matches_brute_force(
            raw in proptest::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 1..=12),
            seed in any::<u64>(),
        ) {
            let pts: Vec<Point2D> = raw.into_iter().map(Point2D::from).collect();
            let d = smallest_enclosing_disk_seeded(&pts, seed).unwrap();
            for q in &pts {
                prop_assert!(d.center.distance(*q) <= d.radius + 1e-9);
            }
            let oracle = brute_force(&pts);
            prop_assert!((d.radius - oracle).abs() <= 1e-9 * oracle.max(1.0));
        }
    }
}
