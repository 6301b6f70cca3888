//! Exhaustive reference solvers.
//!
//! These enumerate every candidate solution and therefore only run on tiny
//! instances; each has a hard cap and errors out instead of truncating. They
//! use nothing from the rest of the crate except the point, segment and
//! polygon types: distances are recomputed here, and continuous problems are
//! solved on explicit samples with a reported error bound.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point2D, Polygon2D, Segment2D};
use crate::segments::CostMode;
use crate::setcover::{CoverInstance, MultiIntervalInstance};

pub const MAX_SETS: usize = 20;
pub const MAX_SEGMENT_SUBSETS: u128 = 100_000;
pub const MAX_POINT_SUBSETS: u128 = 1_000_000;
pub const MAX_POLYGON_CANDIDATES: usize = 1_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    Indices(Vec<usize>),
    Points(Vec<Point2D>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub optimum: f64,
    pub witness: Witness,
    pub search_space_size: u128,
    /// Sampling step; zero for discrete problems.
    pub resolution: f64,
    /// Bound on `|optimum - true optimum|`; zero for discrete problems.
    pub error_bound: f64,
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

fn check_space(size: u128, limit: u128) -> Result<()> {
    if size > limit {
        return Err(Error::SearchSpace { size, limit });
    }
    Ok(())
}

/// Advance `c` to the next k-combination of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Lowest-cost k-subset of `0..n`, ties to the lexicographically first.
/// `cost(subset, bound)` may return early with any value above `bound`.
fn best_subset<F>(n: usize, k: usize, cost: F) -> (f64, Vec<usize>)
where
    F: Fn(&[usize], f64) -> f64 + Sync,
{
    assert!(k >= 1 && k <= n);
    (0..=n - k)
        .into_par_iter()
        .map(|first| {
            let mut c: Vec<usize> = (first..first + k).collect();
            let mut best = (f64::INFINITY, c.clone());
            loop {
                if c[0] != first {
                    break;
                }
                let v = cost(&c, best.0);
                if v < best.0 {
                    best = (v, c.clone());
                }
                if !next_combination(&mut c, n) {
                    break;
                }
            }
            best
        })
        .reduce(
            || (f64::INFINITY, Vec::new()),
            |a, b| {
                if b.0 < a.0 || (b.0 == a.0 && !b.1.is_empty() && (a.1.is_empty() || b.1 < a.1)) {
                    b
                } else {
                    a
                }
            },
        )
}

/// Smallest family of sets covering every atom, by subsets of increasing size.
pub fn brute_set_cover(ci: &CoverInstance) -> Result<OracleReport> {
    let n = ci.covers.len();
    if n > MAX_SETS {
        return Err(Error::SearchSpace {
            size: 1u128 << n,
            limit: 1u128 << MAX_SETS,
        });
    }
    let m = ci.atoms.len();
    let covers = |subset: &[usize]| {
        let mut hit = vec![false; m];
        for &i in subset {
            for &a in &ci.covers[i] {
                hit[a] = true;
            }
        }
        hit.iter().all(|&h| h)
    };
    let space = 1u128 << n;
    if m == 0 {
        return Ok(OracleReport {
            optimum: 0.0,
            witness: Witness::Indices(vec![]),
            search_space_size: space,
            resolution: 0.0,
            error_bound: 0.0,
        });
    }
    for size in 1..=n {
        let mut c: Vec<usize> = (0..size).collect();
        loop {
            if covers(&c) {
                return Ok(OracleReport {
                    optimum: size as f64,
                    witness: Witness::Indices(c),
                    search_space_size: space,
                    resolution: 0.0,
                    error_bound: 0.0,
                });
            }
            if !next_combination(&mut c, n) {
                break;
            }
        }
    }
    Err(Error::Infeasible(0))
}

/// Closed-interval union as sorted disjoint pieces.
fn merged(mut ivs: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    ivs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut out: Vec<(f64, f64)> = Vec::new();
    for (lo, hi) in ivs {
        match out.last_mut() {
            Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
            _ => out.push((lo, hi)),
        }
    }
    out
}

/// Smallest number of sets whose intervals jointly cover the union of all
/// intervals, checked directly on interval unions.
pub fn brute_multi_interval_cover(inst: &MultiIntervalInstance) -> Result<OracleReport> {
    let n = inst.sets.len();
    if n > MAX_SETS {
        return Err(Error::SearchSpace {
            size: 1u128 << n,
            limit: 1u128 << MAX_SETS,
        });
    }
    let all: Vec<(f64, f64)> = inst.sets.iter().flatten().map(|iv| (iv.lo, iv.hi)).collect();
    let covers = |subset: &[usize]| {
        let pieces = merged(
            subset
                .iter()
                .flat_map(|&i| inst.sets[i].iter().map(|iv| (iv.lo, iv.hi)))
                .collect(),
        );
        all.iter()
            .all(|&(lo, hi)| pieces.iter().any(|&(a, b)| a <= lo && hi <= b))
    };
    let space = 1u128 << n;
    if all.is_empty() {
        return Ok(OracleReport {
            optimum: 0.0,
            witness: Witness::Indices(vec![]),
            search_space_size: space,
            resolution: 0.0,
            error_bound: 0.0,
        });
    }
    for size in 1..=n {
        let mut c: Vec<usize> = (0..size).collect();
        loop {
            if covers(&c) {
                return Ok(OracleReport {
                    optimum: size as f64,
                    witness: Witness::Indices(c),
                    search_space_size: space,
                    resolution: 0.0,
                    error_bound: 0.0,
                });
            }
            if !next_combination(&mut c, n) {
                break;
            }
        }
    }
    Err(Error::Infeasible(0))
}

fn point_to_segment(p: Point2D, a: Point2D, b: Point2D) -> f64 {
    let (abx, aby) = (b.x - a.x, b.y - a.y);
    let len2 = abx * abx + aby * aby;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.x - a.x) * abx + (p.y - a.y) * aby) / len2).clamp(0.0, 1.0)
    };
    let (qx, qy) = (a.x + t * abx, a.y + t * aby);
    ((p.x - qx).powi(2) + (p.y - qy).powi(2)).sqrt()
}

fn turn(a: Point2D, b: Point2D, c: Point2D) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn on_box(p: Point2D, a: Point2D, b: Point2D) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

fn closest_gap(s: &Segment2D, t: &Segment2D) -> f64 {
    let (d1, d2) = (turn(t.a, t.b, s.a), turn(t.a, t.b, s.b));
    let (d3, d4) = (turn(s.a, s.b, t.a), turn(s.a, s.b, t.b));
    let crosses =
        ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0));
    let touches = (d1 == 0.0 && on_box(s.a, t.a, t.b))
        || (d2 == 0.0 && on_box(s.b, t.a, t.b))
        || (d3 == 0.0 && on_box(t.a, s.a, s.b))
        || (d4 == 0.0 && on_box(t.b, s.a, s.b));
    if crosses || touches {
        return 0.0;
    }
    point_to_segment(s.a, t.a, t.b)
        .min(point_to_segment(s.b, t.a, t.b))
        .min(point_to_segment(t.a, s.a, s.b))
        .min(point_to_segment(t.b, s.a, s.b))
}

fn samples_along(s: &Segment2D, step: f64) -> Vec<Point2D> {
    let len = ((s.b.x - s.a.x).powi(2) + (s.b.y - s.a.y).powi(2)).sqrt();
    let m = (len / step).ceil().max(1.0) as usize;
    (0..=m)
        .map(|i| {
            let t = i as f64 / m as f64;
            Point2D::new(s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y))
        })
        .collect()
}

/// Best k input segments as centers. Max mode samples every segment every
/// `resolution`; min mode uses exact closest-point distances.
pub fn brute_kcenter_segments(
    segments: &[Segment2D],
    k: usize,
    mode: CostMode,
    resolution: f64,
) -> Result<OracleReport> {
    let n = segments.len();
    if n == 0 {
        return Err(Error::EmptyInput("no segments"));
    }
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("k = {k} with {n} segments")));
    }
    if !(resolution > 0.0) {
        return Err(Error::InvalidParameter(format!("resolution {resolution}")));
    }
    let space = binomial(n, k);
    check_space(space, MAX_SEGMENT_SUBSETS)?;

    let (optimum, subset) = match mode {
        CostMode::Max => {
            // dist[j][p][i]: sample p of segment j to candidate center i
            let dist: Vec<Vec<Vec<f64>>> = segments
                .par_iter()
                .map(|s| {
                    samples_along(s, resolution)
                        .iter()
                        .map(|&p| segments.iter().map(|c| point_to_segment(p, c.a, c.b)).collect())
                        .collect()
                })
                .collect();
            best_subset(n, k, |c, bound| {
                let mut worst = 0.0f64;
                for row in dist.iter().flatten() {
                    worst = worst.max(c.iter().map(|&i| row[i]).fold(f64::INFINITY, f64::min));
                    if worst > bound {
                        break;
                    }
                }
                worst
            })
        }
        CostMode::Min => {
            let gap: Vec<Vec<f64>> = segments
                .iter()
                .map(|s| segments.iter().map(|c| closest_gap(s, c)).collect())
                .collect();
            best_subset(n, k, |c, _| {
                gap.iter()
                    .map(|row| c.iter().map(|&i| row[i]).fold(f64::INFINITY, f64::min))
                    .fold(0.0, f64::max)
            })
        }
    };
    let (resolution, error_bound) = match mode {
        CostMode::Max => (resolution, 2.0 * resolution),
        CostMode::Min => (0.0, 0.0),
    };
    Ok(OracleReport {
        optimum,
        witness: Witness::Indices(subset),
        search_space_size: space,
        resolution,
        error_bound,
    })
}

/// Best k candidates as centers for the points.
pub fn brute_kcenter_points(points: &[Point2D], k: usize, candidates: &[Point2D]) -> Result<OracleReport> {
    if points.is_empty() || candidates.is_empty() {
        return Err(Error::EmptyInput("no points or candidates"));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let k = k.min(candidates.len());
    let space = binomial(candidates.len(), k);
    check_space(space, MAX_POINT_SUBSETS)?;
    let dist: Vec<Vec<f64>> = points
        .iter()
        .map(|p| {
            candidates
                .iter()
                .map(|c| ((p.x - c.x).powi(2) + (p.y - c.y).powi(2)).sqrt())
                .collect()
        })
        .collect();
    let (optimum, subset) = best_subset(candidates.len(), k, |c, bound| {
        let mut worst = 0.0f64;
        for row in &dist {
            worst = worst.max(c.iter().map(|&i| row[i]).fold(f64::INFINITY, f64::min));
            if worst > bound {
                break;
            }
        }
        worst
    });
    Ok(OracleReport {
        optimum,
        witness: Witness::Points(subset.iter().map(|&i| candidates[i]).collect()),
        search_space_size: space,
        resolution: 0.0,
        error_bound: 0.0,
    })
}

fn inside(p: Point2D, poly: &Polygon2D) -> bool {
    let v = poly.vertices();
    let n = v.len();
    let on_edge = (0..n).any(|i| point_to_segment(p, v[i], v[(i + 1) % n]) <= 1e-9);
    if on_edge || n < 3 {
        return on_edge;
    }
    let mut odd = false;
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        if (a.y > p.y) != (b.y > p.y) && p.x < a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y) {
            odd = !odd;
        }
    }
    odd
}

/// Grid points at `step` inside the polygon plus its boundary sampled at `step`.
fn polygon_samples(poly: &Polygon2D, step: f64) -> Vec<Point2D> {
    let v = poly.vertices();
    let n = v.len();
    let edges = if n <= 2 { n - 1 } else { n };
    let mut out: Vec<Point2D> = Vec::new();
    for i in 0..edges.max(1) {
        let s = Segment2D::new(v[i], v[(i + 1) % n]);
        out.extend(samples_along(&s, step));
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in v {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    let (nx, ny) = (((x1 - x0) / step).floor() as i64, ((y1 - y0) / step).floor() as i64);
    for j in 0..=ny {
        for i in 0..=nx {
            let p = Point2D::new(x0 + i as f64 * step, y0 + j as f64 * step);
            if inside(p, poly) {
                out.push(p);
            }
        }
    }
    out
}

/// Best k centers among grid samples of the polygons at `resolution`,
/// scored on samples at `resolution / 2`.
///
/// Max mode scores the largest distance from a sample to its nearest
/// center, min mode the largest over polygons of the distance from the
/// polygon's closest sample to a center. `error_bound` combines the
/// measured sample gaps of both sets.
pub fn brute_polygon_kcenter(
    polygons: &[Polygon2D],
    k: usize,
    resolution: f64,
    mode: CostMode,
) -> Result<OracleReport> {
    if polygons.is_empty() {
        return Err(Error::EmptyInput("no polygons"));
    }
    if k == 0 || !(resolution > 0.0) {
        return Err(Error::InvalidParameter(format!("k = {k}, resolution {resolution}")));
    }
    let dedup = |pts: Vec<Point2D>| {
        let mut seen = std::collections::HashSet::new();
        pts.into_iter()
            .filter(|p| seen.insert((p.x.to_bits(), p.y.to_bits())))
            .collect::<Vec<_>>()
    };
    let candidates = dedup(polygons.iter().flat_map(|p| polygon_samples(p, resolution)).collect());
    if candidates.len() > MAX_POLYGON_CANDIDATES {
        return Err(Error::SearchSpace {
            size: candidates.len() as u128,
            limit: MAX_POLYGON_CANDIDATES as u128,
        });
    }
    let k = k.min(candidates.len());
    let space = binomial(candidates.len(), k);
    check_space(space, MAX_POINT_SUBSETS)?;

    let eval: Vec<Vec<Point2D>> = polygons.iter().map(|p| polygon_samples(p, resolution / 2.0)).collect();
    let d = |a: Point2D, b: Point2D| ((a.x - b.x).powi(2) + (a.y - b.y).powi(2)).sqrt();

    // gaps measured against a finer check set, padded by its own spacing
    let check: Vec<Point2D> = polygons
        .iter()
        .flat_map(|p| polygon_samples(p, resolution / 4.0))
        .collect();
    let pad = resolution / 4.0 * std::f64::consts::FRAC_1_SQRT_2;
    let gap_to = |set: &[Point2D]| {
        check
            .par_iter()
            .map(|&q| set.iter().map(|&s| d(q, s)).fold(f64::INFINITY, f64::min))
            .reduce(|| 0.0, f64::max)
            + pad
    };
    let all_eval: Vec<Point2D> = eval.iter().flatten().copied().collect();
    let error_bound = gap_to(&candidates).max(gap_to(&all_eval));

    let (optimum, subset) = match mode {
        CostMode::Max => {
            let dist: Vec<Vec<f64>> = all_eval
                .par_iter()
                .map(|&q| candidates.iter().map(|&c| d(q, c)).collect())
                .collect();
            best_subset(candidates.len(), k, |c, bound| {
                let mut worst = 0.0f64;
                for row in &dist {
                    worst = worst.max(c.iter().map(|&i| row[i]).fold(f64::INFINITY, f64::min));
                    if worst > bound {
                        break;
                    }
                }
                worst
            })
        }
        CostMode::Min => {
            // reach[poly][cand]: closest sample of the polygon to the candidate
            let reach: Vec<Vec<f64>> = eval
                .iter()
                .map(|ps| {
                    candidates
                        .par_iter()
                        .map(|&c| ps.iter().map(|&q| d(q, c)).fold(f64::INFINITY, f64::min))
                        .collect()
                })
                .collect();
            best_subset(candidates.len(), k, |c, _| {
                reach
                    .iter()
                    .map(|row| c.iter().map(|&i| row[i]).fold(f64::INFINITY, f64::min))
                    .fold(0.0, f64::max)
            })
        }
    };
    Ok(OracleReport {
        optimum,
        witness: Witness::Points(subset.iter().map(|&i| candidates[i]).collect()),
        search_space_size: space,
        resolution,
        error_bound,
    })
}
