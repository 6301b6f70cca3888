//! Point/segment distances and the asymmetric segment-to-centers distance.
//!
//! Squared distance from a moving point `s(t) = a + t (b - a)` to a fixed
//! segment is a convex, piecewise-quadratic function of `t` with at most three
//! pieces (closest feature = first endpoint, interior, second endpoint). Both
//! the directed max-min distance and stadium clipping are solved exactly on
//! this representation.

use super::primitives::{orient, Point2D, Segment2D, Stadium, TOLERANCE};
use crate::error::{Error, Result};

/// `a t² + b t + c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Quadratic {
    a: f64,
    b: f64,
    c: f64,
}

impl Quadratic {
    fn eval(&self, t: f64) -> f64 {
        (self.a * t + self.b) * t + self.c
    }

    fn sub(&self, other: &Self) -> Self {
        Self {
            a: self.a - other.a,
            b: self.b - other.b,
            c: self.c - other.c,
        }
    }

    /// Real roots, ascending. A numerically zero polynomial has none.
    fn roots(&self) -> Vec<f64> {
        let scale = self.a.abs().max(self.b.abs()).max(self.c.abs());
        if scale == 0.0 {
            return Vec::new();
        }
        let (a, b, c) = (self.a / scale, self.b / scale, self.c / scale);
        if a.abs() < 1e-12 {
            if b.abs() < 1e-12 {
                return Vec::new();
            }
            return vec![-c / b];
        }
        let disc = b * b - 4.0 * a * c;
        if disc < -1e-12 {
            return Vec::new();
        }
        let sq = disc.max(0.0).sqrt();
        // Stable form: avoid cancellation between -b and sq.
        let q = -0.5 * (b + b.signum() * sq);
        let mut r = if q == 0.0 { vec![0.0] } else { vec![q / a, c / q] };
        r.sort_by(f64::total_cmp);
        r
    }
}

/// One piece of the squared-distance function, valid for `t ∈ [lo, hi]`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Piece {
    lo: f64,
    hi: f64,
    q: Quadratic,
}

fn point_quadratic(origin: Point2D, velocity: Point2D, target: Point2D) -> Quadratic {
    let w = origin - target;
    Quadratic {
        a: velocity.norm_sq(),
        b: 2.0 * w.dot(velocity),
        c: w.norm_sq(),
    }
}

/// Squared distance from `moving(t)` to `fixed`, as pieces covering `[0, 1]`.
pub(crate) fn squared_distance_pieces(moving: &Segment2D, fixed: &Segment2D) -> Vec<Piece> {
    let p0 = moving.a;
    let v = moving.direction();
    let d = fixed.direction();
    let len_sq = d.norm_sq();
    if len_sq == 0.0 {
        return vec![Piece {
            lo: 0.0,
            hi: 1.0,
            q: point_quadratic(p0, v, fixed.a),
        }];
    }
    let w = p0 - fixed.a;
    let u0 = w.dot(d) / len_sq;
    let u1 = v.dot(d) / len_sq;
    let c0 = w.cross(d);
    let c1 = v.cross(d);
    let interior = Quadratic {
        a: c1 * c1 / len_sq,
        b: 2.0 * c0 * c1 / len_sq,
        c: c0 * c0 / len_sq,
    };
    let start = point_quadratic(p0, v, fixed.a);
    let end = point_quadratic(p0, v, fixed.b);

    let mut cuts = vec![0.0, 1.0];
    if u1 != 0.0 {
        for t in [-u0 / u1, (1.0 - u0) / u1] {
            if t > 0.0 && t < 1.0 {
                cuts.push(t);
            }
        }
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    cuts.windows(2)
        .map(|w| {
            let mid = 0.5 * (w[0] + w[1]);
            let u = u0 + u1 * mid;
            let q = if u < 0.0 {
                start
            } else if u > 1.0 {
                end
            } else {
                interior
            };
            Piece { lo: w[0], hi: w[1], q }
        })
        .collect()
}

/// Euclidean distance from `p` to the closest point of `s`.
pub fn point_segment_distance(p: Point2D, s: &Segment2D) -> f64 {
    p.distance(s.closest_point(p))
}

fn on_segment(p: Point2D, s: &Segment2D) -> bool {
    p.x >= s.a.x.min(s.b.x) && p.x <= s.a.x.max(s.b.x) && p.y >= s.a.y.min(s.b.y) && p.y <= s.a.y.max(s.b.y)
}

/// Closed segment intersection test, exact up to the sign of `orient`.
pub fn segments_intersect(s: &Segment2D, c: &Segment2D) -> bool {
    let d1 = orient(c.a, c.b, s.a);
    let d2 = orient(c.a, c.b, s.b);
    let d3 = orient(s.a, s.b, c.a);
    let d4 = orient(s.a, s.b, c.b);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    (d1 == 0.0 && on_segment(s.a, c))
        || (d2 == 0.0 && on_segment(s.b, c))
        || (d3 == 0.0 && on_segment(c.a, s))
        || (d4 == 0.0 && on_segment(c.b, s))
}

/// `min_{p∈s, q∈c} |p − q|`; zero iff the segments intersect.
pub fn segment_min_distance(s: &Segment2D, c: &Segment2D) -> f64 {
    if segments_intersect(s, c) {
        return 0.0;
    }
    point_segment_distance(s.a, c)
        .min(point_segment_distance(s.b, c))
        .min(point_segment_distance(c.a, s))
        .min(point_segment_distance(c.b, s))
}

fn nearest_center_distance(p: Point2D, centers: &[Segment2D]) -> f64 {
    centers
        .iter()
        .map(|c| point_segment_distance(p, c))
        .fold(f64::INFINITY, f64::min)
}

/// Directed distance `max_{p∈s} min_{c∈C} d(p, c)`.
///
/// The envelope `min_c d(s(t), c)` is convex wherever a single center is
/// nearest, so its maximum sits at `t ∈ {0, 1}` or at a parameter where two
/// distance functions cross. All crossings are found as roots of differences
/// of the piecewise quadratics.
pub fn segment_to_centers_distance(s: &Segment2D, centers: &[Segment2D]) -> Result<f64> {
    if centers.is_empty() {
        return Err(Error::NoCenters);
    }
    if s.is_degenerate() {
        return Ok(nearest_center_distance(s.a, centers));
    }
    let mut candidates = vec![0.0, 1.0];
    if centers.len() > 1 {
        let pieces: Vec<Vec<Piece>> = centers.iter().map(|c| squared_distance_pieces(s, c)).collect();
        for (i, pi) in pieces.iter().enumerate() {
            for pj in &pieces[i + 1..] {
                for x in pi {
                    for y in pj {
                        let lo = x.lo.max(y.lo);
                        let hi = x.hi.min(y.hi);
                        if lo > hi {
                            continue;
                        }
                        candidates.extend(x.q.sub(&y.q).roots().into_iter().filter(|t| *t >= lo && *t <= hi));
                    }
                }
            }
        }
    }
    Ok(candidates
        .into_iter()
        .map(|t| nearest_center_distance(s.at(t), centers))
        .fold(0.0, f64::max))
}

/// Closed stadium membership with the crate-wide tolerance.
pub fn stadium_contains(st: &Stadium, p: Point2D) -> bool {
    point_segment_distance(p, &st.core) <= st.radius + TOLERANCE
}

/// Parameter range `[t0, t1] ⊆ [0, 1]` of the part of `s` inside `st`.
pub fn clip_parameters(s: &Segment2D, st: &Stadium) -> Option<(f64, f64)> {
    let r = st.radius + TOLERANCE;
    let r_sq = r * r;
    if s.is_degenerate() {
        return stadium_contains(st, s.a).then_some((0.0, 1.0));
    }
    let mut range: Option<(f64, f64)> = None;
    for piece in squared_distance_pieces(s, &st.core) {
        let q = Quadratic {
            c: piece.q.c - r_sq,
            ..piece.q
        };
        let lo_in = q.eval(piece.lo) <= 0.0;
        let hi_in = q.eval(piece.hi) <= 0.0;
        // q is convex, so its sublevel set within the piece is an interval.
        let roots: Vec<f64> = q
            .roots()
            .into_iter()
            .filter(|t| *t >= piece.lo - 1e-12 && *t <= piece.hi + 1e-12)
            .map(|t| t.clamp(piece.lo, piece.hi))
            .collect();
        let part = match (lo_in, hi_in) {
            (true, true) => Some((piece.lo, piece.hi)),
            (true, false) => Some((piece.lo, roots.last().copied().unwrap_or(piece.lo))),
            (false, true) => Some((roots.first().copied().unwrap_or(piece.hi), piece.hi)),
            (false, false) => match roots.as_slice() {
                [] => None,
                [t] => Some((*t, *t)),
                [first, .., last] => Some((*first, *last)),
            },
        };
        if let Some((lo, hi)) = part {
            range = Some(match range {
                None => (lo, hi),
                Some((a, b)) => (a.min(lo), b.max(hi)),
            });
        }
    }
    range
}

/// The maximal sub-segment of `s` inside the stadium (a stadium is convex,
/// so there is at most one).
pub fn clip_segment_by_stadium(s: &Segment2D, st: &Stadium) -> Option<Segment2D> {
    clip_parameters(s, st).map(|(t0, t1)| Segment2D::new(s.at(t0), s.at(t1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(ax: f64, ay: f64, bx: f64, by: f64) -> Segment2D {
        Segment2D::new(Point2D::new(ax, ay), Point2D::new(bx, by))
    }

    fn pt(x: f64, y: f64) -> Segment2D {
        Segment2D::point(Point2D::new(x, y))
    }

    /// Dense sampling of `s` at spacing ≤ h.
    fn sampled_directed(s: &Segment2D, centers: &[Segment2D], h: f64) -> f64 {
        let n = ((s.length() / h).ceil() as usize).max(1);
        (0..=n)
            .map(|i| {
                let p = s.at(i as f64 / n as f64);
                centers
                    .iter()
                    .map(|c| point_segment_distance(p, c))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn point_segment_examples() {
        let s = seg(0.0, 0.0, 1.0, 0.0);
        assert_eq!(point_segment_distance(Point2D::new(0.0, 0.0), &s), 0.0);
        let s = seg(0.0, 0.0, 4.0, 0.0);
        assert_eq!(point_segment_distance(Point2D::new(2.0, 1.0), &s), 1.0);
        assert_eq!(point_segment_distance(Point2D::new(5.0, 0.0), &s), 1.0);
    }

    #[test]
    fn directed_distance_examples() {
        let s = seg(0.0, 0.0, 1.0, 0.0);
        assert_eq!(segment_to_centers_distance(&s, &[s]).unwrap(), 0.0);

        // frozen from the sampling oracle at h = 1e-4
        let long = seg(0.0, 0.0, 4.0, 0.0);
        let p = pt(2.0, 1.0);
        let oracle = sampled_directed(&long, &[p], 1e-4);
        assert!((oracle - 5f64.sqrt()).abs() < 1e-9);
        let d = segment_to_centers_distance(&long, &[p]).unwrap();
        assert!((d - 2.23607).abs() < 1e-5);

        let back = segment_to_centers_distance(&p, &[long]).unwrap();
        assert!((back - 1.0).abs() < 1e-12);
        assert!((sampled_directed(&p, &[long], 1e-4) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn empty_centers_is_an_error() {
        let s = seg(0.0, 0.0, 1.0, 0.0);
        assert!(matches!(segment_to_centers_distance(&s, &[]), Err(Error::NoCenters)));
    }

    #[test]
    fn interior_breakpoint_between_two_centers() {
        // Two point centers at the ends; the farthest point is the midpoint.
        let s = seg(0.0, 0.0, 4.0, 0.0);
        let d = segment_to_centers_distance(&s, &[pt(0.0, 1.0), pt(4.0, 1.0)]).unwrap();
        assert!((d - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn segment_min_distance_examples() {
        assert_eq!(
            segment_min_distance(&seg(0.0, 0.0, 2.0, 2.0), &seg(0.0, 2.0, 2.0, 0.0)),
            0.0
        );
        assert_eq!(
            segment_min_distance(&seg(0.0, 0.0, 1.0, 0.0), &seg(0.0, 1.0, 1.0, 1.0)),
            1.0
        );
        let d = segment_min_distance(&seg(0.0, 0.0, 1.0, 0.0), &seg(3.0, 1.0, 4.0, 1.0));
        assert!((d - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn stadium_examples() {
        let st = Stadium::new(seg(0.0, 0.0, 1.0, 0.0), 0.5).unwrap();
        assert!(stadium_contains(&st, Point2D::new(0.0, -0.5)));
        assert!(!stadium_contains(&st, Point2D::new(2.0, 0.0)));
        assert!(stadium_contains(&st, Point2D::new(1.3, 0.4)));
        assert!(Stadium::new(seg(0.0, 0.0, 1.0, 0.0), -1.0).is_err());
    }

    #[test]
    fn clip_examples() {
        let st = Stadium::new(seg(0.0, 0.0, 1.0, 0.0), 0.5).unwrap();
        let clipped = clip_segment_by_stadium(&seg(-1.0, 0.3, 3.0, 0.3), &st).unwrap();
        assert!((clipped.a.x + 0.4).abs() < 1e-6 && (clipped.a.y - 0.3).abs() < 1e-12);
        assert!((clipped.b.x - 1.4).abs() < 1e-6 && (clipped.b.y - 0.3).abs() < 1e-12);

        let inside = seg(0.2, 0.1, 0.8, -0.1);
        assert_eq!(clip_segment_by_stadium(&inside, &st), Some(inside));

        assert_eq!(clip_segment_by_stadium(&seg(0.0, 2.0, 1.0, 2.0), &st), None);
    }

    #[test]
    fn clip_matches_sampling() {
        let st = Stadium::new(seg(0.0, 0.0, 1.0, 0.0), 0.5).unwrap();
        let s = seg(-1.0, 0.3, 3.0, 0.3);
        let (t0, t1) = clip_parameters(&s, &st).unwrap();
        let n = 40_000;
        for i in 0..=n {
            let t = i as f64 / n as f64;
            let inside = stadium_contains(&st, s.at(t));
            if t < t0 - 1e-6 || t > t1 + 1e-6 {
                assert!(!inside, "t={t}");
            } else if t > t0 + 1e-6 && t < t1 - 1e-6 {
                assert!(inside, "t={t}");
            }
        }
    }

    #[test]
    fn parallel_at_exact_radius_is_fully_inside() {
        let st = Stadium::new(seg(0.0, 0.0, 1.0, 0.0), 1.0).unwrap();
        assert_eq!(clip_parameters(&seg(0.0, 1.0, 1.0, 1.0), &st), Some((0.0, 1.0)));
    }
}
