use super::polygon::Polygon2D;
use super::primitives::{orient, Point2D};
use crate::error::{Error, Result};

pub type Triangle = [Point2D; 3];

pub fn triangle_area(t: &Triangle) -> f64 {
    0.5 * orient(t[0], t[1], t[2]).abs()
}

fn in_closed_triangle(p: Point2D, a: Point2D, b: Point2D, c: Point2D, eps: f64) -> bool {
    orient(a, b, p) >= -eps && orient(b, c, p) >= -eps && orient(c, a, p) >= -eps
}

/// Ear-clipping triangulation of a simple polygon with at least three
/// vertices. Always yields `v - 2` triangles; a vertex lying on the line
/// through its neighbours is clipped as a zero-area triangle.
pub fn triangulate(poly: &Polygon2D) -> Result<Vec<Triangle>> {
    let v = poly.vertices();
    if v.len() < 3 {
        return Err(Error::InvalidGeometry(format!(
            "triangulation needs at least 3 vertices, got {}",
            v.len()
        )));
    }
    if !poly.is_simple() {
        return Err(Error::NotSimple);
    }
    let bb = poly.bounding_box();
    let scale = bb.width().max(bb.height());
    let eps = 1e-12 * scale * scale;

    let mut ring: Vec<usize> = (0..v.len()).collect();
    let mut out = Vec::with_capacity(v.len() - 2);
    while ring.len() > 3 {
        let m = ring.len();
        let corner = |i: usize| (ring[(i + m - 1) % m], ring[i], ring[(i + 1) % m]);
        let ear = (0..m).find(|&i| {
            let (a, b, c) = corner(i);
            if orient(v[a], v[b], v[c]) <= eps {
                return false;
            }
            ring.iter()
                .filter(|&&j| j != a && j != b && j != c)
                .all(|&j| !in_closed_triangle(v[j], v[a], v[b], v[c], eps))
        });
        let clip = match ear {
            Some(i) => i,
            None => (0..m)
                .find(|&i| {
                    let (a, b, c) = corner(i);
                    orient(v[a], v[b], v[c]).abs() <= eps
                })
                .ok_or(Error::NotSimple)?,
        };
        let (a, b, c) = corner(clip);
        out.push([v[a], v[b], v[c]]);
        ring.remove(clip);
    }
    out.push([v[ring[0]], v[ring[1]], v[ring[2]]]);
    Ok(out)
}
