//! Directed distance between segments, stadium clipping and the failure of
//! symmetry and of the triangle inequality.

use aggucluster::geometry::{
    clip_segment_by_stadium, segment_min_distance, segment_to_centers_distance, Point2D, Segment2D, Stadium,
};

fn seg(ax: f64, ay: f64, bx: f64, by: f64) -> Segment2D {
    Segment2D::new(Point2D::new(ax, ay), Point2D::new(bx, by))
}

fn main() -> aggucluster::Result<()> {
    let long = seg(0.0, 0.0, 2.0, 0.0);
    let short = seg(0.0, 1.0, 0.0, 2.0);
    println!(
        "d(long, {{short}}) = {:.6}",
        segment_to_centers_distance(&long, &[short])?
    );
    println!(
        "d(short, {{long}}) = {:.6}",
        segment_to_centers_distance(&short, &[long])?
    );
    println!("closest-point distance = {:.6}", segment_min_distance(&long, &short));

    // closest-point distance is not a metric on segments
    let a = seg(-1.0, 0.0, 1.0, 0.0);
    let (b, c) = (seg(-1.0, 0.1, -1.0, 0.1), seg(1.0, 0.1, 1.0, 0.1));
    println!(
        "d(b,a) + d(a,c) = {:.4} < d(b,c) = {:.4}",
        segment_min_distance(&b, &a) + segment_min_distance(&a, &c),
        segment_min_distance(&b, &c)
    );

    let st = Stadium::new(seg(0.0, 1.0, 0.5, 1.0), 1.0)?;
    match clip_segment_by_stadium(&a, &st) {
        Some(piece) => println!("part of a within 1 of (0,1)-(0.5,1): {:?} -> {:?}", piece.a, piece.b),
        None => println!("a misses the stadium"),
    }
    Ok(())
}
