use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point2D;

/// One check-in. `x` is longitude and `y` latitude unless a projection was
/// requested at ingestion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckinRecord {
    pub user_id: u64,
    pub timestamp: String,
    pub x: f64,
    pub y: f64,
    pub location_id: String,
}

impl CheckinRecord {
    pub fn point(&self) -> Point2D {
        Point2D::new(self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct IngestOptions {
    /// Stop after this many valid records.
    pub limit: Option<usize>,
    /// Scale longitudes by `cos(reference latitude)` (degrees).
    pub equirectangular: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct IngestStats {
    pub lines: usize,
    pub records: usize,
    /// Skipped lines by reason: `fields`, `parse` or `nonfinite`.
    pub skipped: BTreeMap<String, usize>,
}

enum Skip {
    Fields,
    Parse,
    NonFinite,
}

fn parse_line(line: &str, lon_scale: f64) -> std::result::Result<CheckinRecord, Skip> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() < 5 {
        return Err(Skip::Fields);
    }
    let user_id = fields[0].trim().parse().map_err(|_| Skip::Parse)?;
    let lat: f64 = fields[2].trim().parse().map_err(|_| Skip::Parse)?;
    let lon: f64 = fields[3].trim().parse().map_err(|_| Skip::Parse)?;
    if !lat.is_finite() || !lon.is_finite() {
        return Err(Skip::NonFinite);
    }
    Ok(CheckinRecord {
        user_id,
        timestamp: fields[1].to_string(),
        x: lon * lon_scale,
        y: lat,
        location_id: fields[4].trim_end().to_string(),
    })
}

/// Parse `user<TAB>timestamp<TAB>lat<TAB>lon<TAB>location_id` lines.
/// Blank lines are ignored; other malformed lines are counted and skipped.
pub fn parse_checkins<R: BufRead>(reader: R, opts: &IngestOptions) -> Result<(Vec<CheckinRecord>, IngestStats)> {
    let lon_scale = opts.equirectangular.map_or(1.0, |lat0| lat0.to_radians().cos());
    let mut stats = IngestStats::default();
    let mut records = Vec::new();
    for line in reader.lines() {
        if opts.limit.is_some_and(|l| records.len() >= l) {
            break;
        }
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        stats.lines += 1;
        match parse_line(&line, lon_scale) {
            Ok(r) => records.push(r),
            Err(reason) => {
                let key = match reason {
                    Skip::Fields => "fields",
                    Skip::Parse => "parse",
                    Skip::NonFinite => "nonfinite",
                };
                *stats.skipped.entry(key.to_string()).or_default() += 1;
            }
        }
    }
    stats.records = records.len();
    Ok((records, stats))
}

/// Read a check-in file. Fails when nothing valid is found.
pub fn ingest_checkins_with(path: &Path, opts: &IngestOptions) -> Result<(Vec<CheckinRecord>, IngestStats)> {
    let file = File::open(path)?;
    let (records, stats) = parse_checkins(BufReader::new(file), opts)?;
    if records.is_empty() {
        return Err(Error::NoRecords(path.display().to_string()));
    }
    log::info!(
        "{}: {} records, skipped {:?}",
        path.display(),
        stats.records,
        stats.skipped
    );
    Ok((records, stats))
}

pub fn ingest_checkins(path: &Path, limit: Option<usize>) -> Result<(Vec<CheckinRecord>, IngestStats)> {
    ingest_checkins_with(
        path,
        &IngestOptions {
            limit,
            ..Default::default()
        },
    )
}
