use std::fmt::Write as _;
use std::path::Path;

use crate::error::Result;
use crate::geometry::{BoundingBox, Point2D};

const CANVAS: f64 = 800.0;
const MARGIN: f64 = 20.0;

/// What to draw: samples and summary points as small red dots, centers as
/// larger blue dots, and optionally the covering disks around the centers.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SvgScene {
    pub samples: Vec<Point2D>,
    pub summary: Vec<Point2D>,
    pub centers: Vec<Point2D>,
    pub radius: Option<f64>,
}

/// Standalone SVG text; identical scenes give identical bytes.
pub fn render_svg(scene: &SvgScene) -> String {
    let all = scene
        .samples
        .iter()
        .chain(&scene.summary)
        .chain(&scene.centers)
        .copied();
    let bb = BoundingBox::of_points(all).unwrap_or(BoundingBox {
        min: Point2D::new(0.0, 0.0),
        max: Point2D::new(1.0, 1.0),
    });
    let bb = bb.expand(scene.radius.unwrap_or(0.0));
    let side = bb.width().max(bb.height());
    let scale = if side > 0.0 {
        (CANVAS - 2.0 * MARGIN) / side
    } else {
        1.0
    };
    // y grows upward in the data and downward on screen
    let map = |p: Point2D| {
        (
            MARGIN + (p.x - bb.min.x) * scale,
            CANVAS - MARGIN - (p.y - bb.min.y) * scale,
        )
    };

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    if let Some(r) = scene.radius {
        for &c in &scene.centers {
            let (x, y) = map(c);
            writeln!(
                out,
                r#"<circle cx="{x:.3}" cy="{y:.3}" r="{:.3}" fill="none" stroke="steelblue" stroke-width="1"/>"#,
                r * scale
            )
            .unwrap();
        }
    }
    for &p in scene.samples.iter().chain(&scene.summary) {
        let (x, y) = map(p);
        writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="1" fill="red"/>"#).unwrap();
    }
    for &c in &scene.centers {
        let (x, y) = map(c);
        writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="4" fill="blue"/>"#).unwrap();
    }
    out.push_str("</svg>\n");
    out
}

pub fn emit_svg(scene: &SvgScene, path: &Path) -> Result<()> {
    std::fs::write(path, render_svg(scene))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scene() -> SvgScene {
        SvgScene {
            samples: vec![Point2D::new(0.0, 0.0), Point2D::new(1.0, 0.0), Point2D::new(0.0, 1.0)],
            summary: vec![],
            centers: vec![Point2D::new(0.5, 0.5)],
            radius: None,
        }
    }

    #[test]
    fn circle_counts() {
        let svg = render_svg(&scene());
        assert_eq!(svg.matches(r#"fill="red""#).count(), 3);
        assert_eq!(svg.matches(r#"fill="blue""#).count(), 1);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn no_centers() {
        let svg = render_svg(&SvgScene {
            centers: vec![],
            ..scene()
        });
        assert_eq!(svg.matches("<circle").count(), 3);
    }

    #[test]
    fn disks_and_determinism() {
        let s = SvgScene {
            radius: Some(0.5),
            ..scene()
        };
        let svg = render_svg(&s);
        assert_eq!(svg.matches(r#"fill="none""#).count(), 1);
        let dir = tempfile::tempdir().unwrap();
        let (a, b) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
        emit_svg(&s, &a).unwrap();
        emit_svg(&s, &b).unwrap();
        assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
        assert!(emit_svg(&s, Path::new("/nonexistent/dir/x.svg")).is_err());
    }
}
