use proptest::prelude::*;

use aggucluster::geometry::{segment_to_centers_distance, Point2D, Segment2D};
use aggucluster::segments::{
    clustering_cost, kcenter_segments, reduce_to_cover, CenterBudget, CostMode, SegmentOptions,
};

// Endpoints on a 0.1 lattice keep gaps between segments away from zero, which
// keeps the discretization step (at most half the smallest gap) coarse.
fn segment() -> impl Strategy<Value = Segment2D> {
    (0u8..=10, 0u8..=10, 0u8..=10, 0u8..=10).prop_map(|(ax, ay, bx, by)| {
        let p = |x: u8, y: u8| Point2D::new(x as f64 / 10.0, y as f64 / 10.0);
        Segment2D::new(p(ax, ay), p(bx, by))
    })
}

fn any_segment() -> impl Strategy<Value = Segment2D> {
    (0.0f64..1.0, 0.0f64..1.0, 0.0f64..1.0, 0.0f64..1.0)
        .prop_map(|(ax, ay, bx, by)| Segment2D::new(Point2D::new(ax, ay), Point2D::new(bx, by)))
}

fn mode() -> impl Strategy<Value = CostMode> {
    prop_oneof![Just(CostMode::Max), Just(CostMode::Min)]
}

fn scaled(s: &Segment2D, f: f64, dx: f64) -> Segment2D {
    Segment2D::new(
        Point2D::new(s.a.x * f + dx, s.a.y * f),
        Point2D::new(s.b.x * f + dx, s.b.y * f),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cover_at_threshold_is_feasible(segs in prop::collection::vec(segment(), 1..7), k in 1usize..3, mode in mode()) {
        let k = k.min(segs.len());
        let c = kcenter_segments(&segs, k, mode, &SegmentOptions::new(0.1)).unwrap();
        prop_assert!(c.radius <= c.threshold + 1e-6, "radius {} above threshold {}", c.radius, c.threshold);
        prop_assert!(c.frontier.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn every_cover_on_the_frontier_is_feasible(segs in prop::collection::vec(segment(), 1..6), mode in mode()) {
        let opts = SegmentOptions { full_frontier: true, ..SegmentOptions::new(0.2) };
        let c = kcenter_segments(&segs, 1, mode, &opts).unwrap();
        for &(r, size) in &c.frontier {
            let (_, sol) = reduce_to_cover(&segs, r, mode).unwrap();
            prop_assert_eq!(sol.len(), size);
            prop_assert!(clustering_cost(&segs, &sol.chosen, mode).unwrap() <= r + 1e-6);
        }
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scaling_the_input_scales_the_radius(segs in prop::collection::vec(segment(), 1..5), mode in mode(),
                                           f in 0.1f64..100.0, dx in -50.0f64..50.0) {
        let big: Vec<Segment2D> = segs.iter().map(|s| scaled(s, f, dx)).collect();
        let opts = SegmentOptions { budget: CenterBudget::AtMostK, ..SegmentOptions::new(0.3) };
        let a = kcenter_segments(&segs, 1, mode, &opts).unwrap();
        let b = kcenter_segments(&big, 1, mode, &opts).unwrap();
        prop_assert!((a.radius * f - b.radius).abs() <= 1e-6 * (1.0 + b.radius));
    }

    #[test]
    fn directed_distance_obeys_the_triangle_inequality(a in any_segment(), b in any_segment(), c in any_segment()) {
        let ab = segment_to_centers_distance(&a, &[b]).unwrap();
        let bc = segment_to_centers_distance(&b, &[c]).unwrap();
        let ac = segment_to_centers_distance(&a, &[c]).unwrap();
        prop_assert!(ac <= ab + bc + 1e-9);
    }
}

#[test]
fn all_segments_as_centers_cost_nothing() {
    let segs = [
        Segment2D::new(Point2D::new(0.0, 0.0), Point2D::new(1.0, 1.0)),
        Segment2D::new(Point2D::new(3.0, 0.0), Point2D::new(3.0, 0.0)),
    ];
    for mode in [CostMode::Max, CostMode::Min] {
        assert_eq!(clustering_cost(&segs, &[0, 1], mode).unwrap(), 0.0);
    }
}
