//! Max- and min-cost k-center of segments with the radius/cover-size frontier.

use aggucluster::geometry::{Point2D, Segment2D};
use aggucluster::segments::{
    candidate_radii, kcenter_segments, max_1center_segments, min_1center_segments, CenterBudget, CostMode,
    SegmentOptions,
};

fn main() -> aggucluster::Result<()> {
    let segs: Vec<Segment2D> = [
        ((0.0, 0.0), (1.0, 0.0)),
        ((0.0, 2.0), (1.0, 2.0)),
        ((0.0, 1.0), (1.0, 1.0)),
        ((5.0, 0.0), (5.0, 2.0)),
        ((6.0, 1.0), (6.0, 1.0)),
    ]
    .into_iter()
    .map(|(a, b)| Segment2D::new(Point2D::from(a), Point2D::from(b)))
    .collect();

    println!("max 1-center {:?}", max_1center_segments(&segs)?);
    println!("min 1-center {:?}", min_1center_segments(&segs)?);
    println!(
        "{} candidate radii at eps 0.1",
        candidate_radii(&segs, 0.1)?.radii.len()
    );

    for mode in [CostMode::Max, CostMode::Min] {
        for budget in [CenterBudget::Bicriteria, CenterBudget::AtMostK] {
            let opts = SegmentOptions {
                eps: 0.1,
                budget,
                full_frontier: false,
            };
            let c = kcenter_segments(&segs, 2, mode, &opts)?;
            println!(
                "{mode} {budget:?}: centers {:?}, radius {:.4}, tried {} radii",
                c.center_indices,
                c.radius,
                c.frontier.len()
            );
        }
    }

    let full = SegmentOptions {
        full_frontier: true,
        ..SegmentOptions::new(0.25)
    };
    let c = kcenter_segments(&segs, 2, CostMode::Max, &full)?;
    for (r, size) in c.frontier.iter().step_by(c.frontier.len().div_ceil(8)) {
        println!("r = {r:.3}: {size} centers");
    }
    Ok(())
}
