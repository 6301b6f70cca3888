use rayon::prelude::*;

use super::{gonzalez::assign_to_centers, ColoredPoint, PointClustering};
use crate::error::{Error, Result};
use crate::geometry::Point2D;

/// Largest number of distinct colors the exact solver accepts.
pub const MAX_COLORS: usize = 8;

/// Radius needed by `centers` so that every color has a point within it.
pub fn colorful_radius(points: &[ColoredPoint], centers: &[Point2D]) -> f64 {
    let mut colors: Vec<usize> = points.iter().map(|p| p.color).collect();
    colors.sort_unstable();
    colors.dedup();
    colors
        .iter()
        .map(|&col| {
            points
                .iter()
                .filter(|p| p.color == col)
                .flat_map(|p| centers.iter().map(move |c| p.point.distance(*c)))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

/// Centers from among `masks` whose union is `full`, using at most `k`.
/// Breadth-first over reachable unions, so the witness is also a fewest-
/// centers one.
fn reach_full(masks: &[(u32, usize)], full: u32, k: usize) -> Option<Vec<usize>> {
    let states = full as usize + 1;
    // parent[s] = (previous union, candidate)
    let mut parent: Vec<Option<(u32, usize)>> = vec![None; states];
    let mut seen = vec![false; states];
    seen[0] = true;
    let mut frontier = vec![0u32];
    for _ in 0..k {
        if seen[full as usize] {
            break;
        }
        let mut next = Vec::new();
        for &s in &frontier {
            for &(m, cand) in masks {
                let t = s | m;
                if !seen[t as usize] {
                    seen[t as usize] = true;
                    parent[t as usize] = Some((s, cand));
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    if !seen[full as usize] {
        return None;
    }
    let mut out = Vec::new();
    let mut s = full;
    while s != 0 {
        let (prev, cand) = parent[s as usize].expect("reached states have parents");
        out.push(cand);
        s = prev;
    }
    out.reverse();
    Some(out)
}

/// Exact colorful k-center: the smallest radius at which `k` of the input
/// points, used as centers, reach at least one point of every color.
///
/// Candidates at a radius are grouped by the set of colors they reach; a
/// search over reachable color unions then replaces the search over
/// k-subsets. When fewer than `k` centers suffice, the remaining slots are
/// filled by farthest points so exactly `min(k, n)` centers come back.
pub fn colorful_kcenter_exact(points: &[ColoredPoint], k: usize) -> Result<PointClustering> {
    if points.is_empty() {
        return Err(Error::EmptyInput("no colored points"));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut palette: Vec<usize> = points.iter().map(|p| p.color).collect();
    palette.sort_unstable();
    palette.dedup();
    let c = palette.len();
    if c > MAX_COLORS {
        return Err(Error::ColorLimit(c, MAX_COLORS));
    }
    let slot: Vec<usize> = points
        .iter()
        .map(|p| palette.binary_search(&p.color).expect("in palette"))
        .collect();

    // nearest[i][col]: distance from candidate i to the closest point of col
    let nearest: Vec<Vec<f64>> = points
        .par_iter()
        .map(|cand| {
            let mut row = vec![f64::INFINITY; c];
            for (q, &s) in points.iter().zip(&slot) {
                row[s] = row[s].min(cand.point.distance(q.point));
            }
            row
        })
        .collect();

    let mut radii: Vec<f64> = nearest.iter().flatten().copied().collect();
    radii.sort_by(f64::total_cmp);
    radii.dedup();

    let full = (1u32 << c) - 1;
    let solve = |r: f64| {
        let mut masks: Vec<(u32, usize)> = Vec::new();
        let mut taken = vec![false; full as usize + 1];
        for (i, row) in nearest.iter().enumerate() {
            let m = row
                .iter()
                .enumerate()
                .filter(|(_, &d)| d <= r)
                .fold(0u32, |m, (s, _)| m | 1 << s);
            if m != 0 && !taken[m as usize] {
                taken[m as usize] = true;
                masks.push((m, i));
            }
        }
        reach_full(&masks, full, k)
    };

    // the largest candidate radius always works: any center reaches every color
    let (mut lo, mut hi) = (0usize, radii.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if solve(radii[mid]).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let mut chosen = solve(radii[lo]).expect("feasible at the found radius");
    let pts: Vec<Point2D> = points.iter().map(|p| p.point).collect();
    while chosen.len() < k.min(pts.len()) {
        let cs: Vec<Point2D> = chosen.iter().map(|&i| pts[i]).collect();
        let far = (0..pts.len())
            .filter(|i| !chosen.contains(i))
            .map(|i| {
                (
                    i,
                    cs.iter().map(|c| c.distance_sq(pts[i])).fold(f64::INFINITY, f64::min),
                )
            })
            .fold(
                (usize::MAX, f64::NEG_INFINITY),
                |best, cur| {
                    if cur.1 > best.1 {
                        cur
                    } else {
                        best
                    }
                },
            );
        chosen.push(far.0);
    }
    let centers: Vec<Point2D> = chosen.iter().map(|&i| pts[i]).collect();
    let (assignment, _) = assign_to_centers(&pts, &centers)?;
    Ok(PointClustering {
        radius: radii[lo],
        centers,
        assignment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cp(x: f64, y: f64, color: usize) -> ColoredPoint {
        ColoredPoint {
            point: Point2D::new(x, y),
            color,
        }
    }

    #[test]
    fn two_colors_one_center() {
        let pts = [cp(0.0, 0.0, 0), cp(5.0, 0.0, 0), cp(5.0, 1.0, 1)];
        let c = colorful_kcenter_exact(&pts, 1).unwrap();
        assert_eq!(c.radius, 1.0);
        assert!(c.centers[0] == Point2D::new(5.0, 0.0) || c.centers[0] == Point2D::new(5.0, 1.0));
    }

    #[test]
    fn shared_location_needs_no_radius() {
        let pts = [cp(1.0, 1.0, 0), cp(1.0, 1.0, 1), cp(1.0, 1.0, 2), cp(4.0, 0.0, 1)];
        assert_eq!(colorful_kcenter_exact(&pts, 1).unwrap().radius, 0.0);
    }

    #[test]
    fn one_center_per_color() {
        let pts = [cp(0.0, 0.0, 0), cp(3.0, 0.0, 1), cp(0.0, 3.0, 2)];
        let c = colorful_kcenter_exact(&pts, 3).unwrap();
        assert_eq!(c.radius, 0.0);
        assert_eq!(c.centers.len(), 3);
    }

    #[test]
    fn too_many_colors() {
        let pts: Vec<ColoredPoint> = (0..9).map(|i| cp(i as f64, 0.0, i)).collect();
        assert!(matches!(colorful_kcenter_exact(&pts, 2), Err(Error::ColorLimit(9, 8))));
    }

    fn exhaustive(points: &[ColoredPoint], k: usize) -> f64 {
        let n = points.len();
        let k = k.min(n);
        let mut best = f64::INFINITY;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let cs: Vec<Point2D> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| points[i].point).collect();
            best = best.min(colorful_radius(points, &cs));
        }
        best
    }

    proptest! {
        #[test]
        fn matches_exhaustive(
            raw in proptest::collection::vec((0.0f64..10.0, 0.0f64..10.0, 0usize..3), 1..=10),
            k in 1usize..=3,
        ) {
            let pts: Vec<ColoredPoint> = raw.iter().map(|&(x, y, c)| cp(x, y, c)).collect();
            let c = colorful_kcenter_exact(&pts, k).unwrap();
            prop_assert_eq!(c.radius, exhaustive(&pts, k));
            prop_assert!(colorful_radius(&pts, &c.centers) <= c.radius);
            prop_assert_eq!(c.centers.len(), k.min(pts.len()));
        }
    }
}
