//! JSON files for the command line: inputs are plain arrays of geometries.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::Result;
use crate::geometry::{Polygon2D, Segment2D};

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(serde_json::from_reader(BufReader::new(File::open(path)?))?)
}

pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, value)?;
    w.write_all(b"\n")?;
    w.flush()?;
    Ok(())
}

/// `[{"a":[x,y],"b":[x,y]}, ...]`
pub fn read_segments(path: &Path) -> Result<Vec<Segment2D>> {
    read_json(path)
}

/// `[{"ring":[[x,y], ...]}, ...]`
pub fn read_polygons(path: &Path) -> Result<Vec<Polygon2D>> {
    read_json(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point2D;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let segs = vec![Segment2D::new(Point2D::new(0.0, 0.0), Point2D::new(1.0, 2.0))];
        let path = dir.path().join("s.json");
        write_json(&path, &segs).unwrap();
        assert_eq!(read_segments(&path).unwrap(), segs);

        let polys = vec![Polygon2D::rectangle(0.0, 0.0, 1.0, 1.0).unwrap()];
        let path = dir.path().join("p.json");
        write_json(&path, &polys).unwrap();
        assert_eq!(read_polygons(&path).unwrap(), polys);
        assert!(read_polygons(&dir.path().join("missing.json")).is_err());
    }
}
