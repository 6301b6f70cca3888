use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CheckinRecord;
use crate::error::{Error, Result};
use crate::geometry::{convex_hull, Point2D, Polygon2D};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UserSummary {
    pub user_id: u64,
    pub point_count: usize,
    pub hull: Polygon2D,
}

/// Points of every user, keyed and ordered by user id.
pub fn group_by_user(records: &[CheckinRecord]) -> BTreeMap<u64, Vec<Point2D>> {
    let mut users: BTreeMap<u64, Vec<Point2D>> = BTreeMap::new();
    for r in records {
        users.entry(r.user_id).or_default().push(r.point());
    }
    users
}

/// Convex hull of every user's check-ins, ordered by user id, and the ratio
/// of hull vertices to input points. Users with one or two distinct points
/// keep a point or segment hull.
pub fn summarize_hulls(records: &[CheckinRecord]) -> Result<(Vec<UserSummary>, f64)> {
    if records.is_empty() {
        return Err(Error::EmptyInput("no check-ins"));
    }
    let users: Vec<(u64, Vec<Point2D>)> = group_by_user(records).into_iter().collect();
    let summaries: Vec<UserSummary> = users
        .par_iter()
        .map(|(id, pts)| {
            Ok(UserSummary {
                user_id: *id,
                point_count: pts.len(),
                hull: convex_hull(pts)?,
            })
        })
        .collect::<Result<_>>()?;
    let vertices: usize = summaries.iter().map(|s| s.hull.len()).sum();
    Ok((summaries, vertices as f64 / records.len() as f64))
}
