//! MinMax k-center of segments.
//!
//! Centers are input segments. In max mode every point of every segment must
//! be close to a center; in min mode one point per segment suffices. The
//! k-center problem is solved as a family of set-cover problems, one per
//! candidate radius, and the answer is bicriteria: the radius is within
//! `1 + eps` of optimal while the number of centers may exceed `k` by the
//! greedy factor.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    clip_parameters, segment_min_distance, segment_to_centers_distance, AffineNormalization, Point2D, Segment2D,
    Stadium, TOLERANCE,
};
use crate::setcover::{
    atomic_decomposition, greedy_factor, greedy_set_cover, CoverSolution, Interval1D, MultiIntervalInstance,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CostMode {
    Max,
    Min,
}

impl std::str::FromStr for CostMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(Self::Max),
            "min" => Ok(Self::Min),
            other => Err(Error::InvalidParameter(format!("mode {other:?}, expected max or min"))),
        }
    }
}

impl std::fmt::Display for CostMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Max => "max",
            Self::Min => "min",
        })
    }
}

/// Which candidate radius wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CenterBudget {
    /// Smallest radius whose greedy cover has at most `k·⌈ln|U| + 1⌉` sets.
    #[default]
    Bicriteria,
    /// Smallest radius whose greedy cover has at most `k` sets.
    AtMostK,
}

/// Candidate radii in input units, sorted and distinct. `eps` is the
/// discretization step actually used, in normalized units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiiSet {
    pub radii: Vec<f64>,
    pub eps: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SegmentClustering {
    pub center_indices: Vec<usize>,
    /// Exact covering radius of the chosen centers.
    pub radius: f64,
    /// Candidate radius at which the cover was found.
    pub threshold: f64,
    pub mode: CostMode,
    /// `(r, cover size)` for every radius tried, ascending in `r`.
    pub frontier: Vec<(f64, usize)>,
}

/// Result document: `{"centers":[..],"radius":x,"mode":"max","frontier":[[r,size]..]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegmentResultDoc {
    pub centers: Vec<usize>,
    pub radius: f64,
    pub mode: CostMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frontier: Option<Vec<(f64, usize)>>,
}

impl SegmentClustering {
    pub fn to_doc(&self, with_frontier: bool) -> SegmentResultDoc {
        SegmentResultDoc {
            centers: self.center_indices.clone(),
            radius: self.radius,
            mode: self.mode,
            frontier: with_frontier.then(|| self.frontier.clone()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentOptions {
    pub eps: f64,
    pub budget: CenterBudget,
    /// Try every candidate radius instead of stopping at the first batch
    /// that contains a winner.
    pub full_frontier: bool,
}

impl SegmentOptions {
    pub fn new(eps: f64) -> Self {
        Self {
            eps,
            budget: CenterBudget::Bicriteria,
            full_frontier: false,
        }
    }
}

fn check_nonempty(segments: &[Segment2D]) -> Result<()> {
    if segments.is_empty() {
        return Err(Error::EmptyInput("no segments"));
    }
    if let Some(s) = segments.iter().find(|s| !s.is_finite()) {
        return Err(Error::InvalidGeometry(format!("non-finite segment {s:?}")));
    }
    Ok(())
}

/// Cost of a center set: the largest distance from a segment to its nearest
/// center, using the asymmetric distance in max mode and the closest-point
/// distance in min mode.
pub fn clustering_cost(segments: &[Segment2D], centers: &[usize], mode: CostMode) -> Result<f64> {
    if centers.is_empty() {
        return Err(Error::NoCenters);
    }
    let cs: Vec<Segment2D> = centers.iter().map(|&i| segments[i]).collect();
    let mut worst = 0.0f64;
    for s in segments {
        let d = match mode {
            CostMode::Max => segment_to_centers_distance(s, &cs)?,
            CostMode::Min => cs
                .iter()
                .map(|c| segment_min_distance(s, c))
                .fold(f64::INFINITY, f64::min),
        };
        worst = worst.max(d);
    }
    Ok(worst)
}

fn best_single_center(segments: &[Segment2D], mode: CostMode) -> Result<(usize, f64)> {
    check_nonempty(segments)?;
    let mut best = (0, f64::INFINITY);
    for i in 0..segments.len() {
        let cost = clustering_cost(segments, &[i], mode)?;
        if cost < best.1 {
            best = (i, cost);
        }
    }
    Ok(best)
}

/// Input segment minimizing the largest asymmetric distance from any segment
/// to it. Ties go to the lowest index.
pub fn max_1center_segments(segments: &[Segment2D]) -> Result<(usize, f64)> {
    best_single_center(segments, CostMode::Max)
}

/// Input segment minimizing the largest closest-point distance to any
/// segment. Ties go to the lowest index.
pub fn min_1center_segments(segments: &[Segment2D]) -> Result<(usize, f64)> {
    best_single_center(segments, CostMode::Min)
}

/// Points along `s` every `step` of arclength, both endpoints included.
pub fn discretize_segment(s: &Segment2D, step: f64) -> Vec<Point2D> {
    let len = s.length();
    if len <= TOLERANCE {
        return vec![s.a];
    }
    let mut out = Vec::new();
    let mut i = 0usize;
    loop {
        let at = i as f64 * step;
        if at >= len - TOLERANCE {
            break;
        }
        out.push(s.at(at / len));
        i += 1;
    }
    out.push(s.b);
    out
}

/// Sorted distinct positive pairwise distances, merged within the tolerance.
pub fn distinct_pairwise_distances(points: &[Point2D]) -> Vec<f64> {
    let mut ds: Vec<f64> = (0..points.len())
        .flat_map(|i| (i + 1..points.len()).map(move |j| (i, j)))
        .map(|(i, j)| points[i].distance(points[j]))
        .filter(|&d| d > TOLERANCE)
        .collect();
    ds.sort_by(f64::total_cmp);
    ds.dedup_by(|b, a| *b - *a <= TOLERANCE);
    ds
}

/// Smallest positive distance between two distinct segments, if any.
pub fn min_positive_pair_distance(segments: &[Segment2D]) -> Option<f64> {
    let mut best: Option<f64> = None;
    for i in 0..segments.len() {
        for j in i + 1..segments.len() {
            let d = segment_min_distance(&segments[i], &segments[j]);
            if d > TOLERANCE && best.is_none_or(|b| d < b) {
                best = Some(d);
            }
        }
    }
    best
}

/// Candidate radii for the k-center search.
///
/// The segments are scaled into the unit box, the step is clamped to half
/// the smallest positive segment gap, every segment is discretized at that
/// step, and every distinct pairwise distance between sample points becomes
/// a candidate, reported back in input units.
pub fn candidate_radii(segments: &[Segment2D], eps: f64) -> Result<RadiiSet> {
    check_nonempty(segments)?;
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::InvalidParameter(format!("eps must be positive, got {eps}")));
    }
    let t = AffineNormalization::fit(segments.iter().flat_map(|s| [s.a, s.b]));
    let normalized: Vec<Segment2D> = segments.iter().map(|s| t.apply_segment(s)).collect();
    let step = match min_positive_pair_distance(&normalized) {
        Some(d) => eps.min(d / 2.0),
        None => eps,
    };
    let points: Vec<Point2D> = normalized.iter().flat_map(|s| discretize_segment(s, step)).collect();
    let mut radii: Vec<f64> = distinct_pairwise_distances(&points)
        .into_iter()
        .map(|d| t.length_to_input(d))
        .collect();
    radii.dedup_by(|b, a| *b - *a <= TOLERANCE);
    log::debug!(
        "{} sample points, {} candidate radii at step {step}",
        points.len(),
        radii.len()
    );
    Ok(RadiiSet { radii, eps: step })
}

/// Offset of segment `j` on the shared parameter line.
fn lane_offsets(segments: &[Segment2D]) -> Vec<f64> {
    let longest = segments.iter().map(Segment2D::length).fold(0.0, f64::max);
    (0..segments.len()).map(|j| j as f64 * (longest + 1.0)).collect()
}

/// Max-mode reduction at radius `r`: set `i` holds, for every segment `j`,
/// the arclength interval of `s_j` inside the stadium of `s_i`.
pub fn max_cover_instance(segments: &[Segment2D], r: f64) -> Result<MultiIntervalInstance> {
    check_nonempty(segments)?;
    let lanes = lane_offsets(segments);
    let mut sets = Vec::with_capacity(segments.len());
    for (i, center) in segments.iter().enumerate() {
        let st = Stadium::new(*center, r)?;
        let mut q = Vec::new();
        for (j, s) in segments.iter().enumerate() {
            let piece = if i == j {
                Some((0.0, 1.0))
            } else {
                clip_parameters(s, &st)
            };
            if let Some((t0, t1)) = piece {
                let len = s.length();
                q.push(Interval1D {
                    lo: lanes[j] + t0 * len,
                    hi: lanes[j] + t1 * len,
                });
            }
        }
        sets.push(q);
    }
    Ok(MultiIntervalInstance::new(sets))
}

/// Min-mode reduction at radius `r`: set `i` holds the whole of every segment
/// within closest-point distance `r` of `s_i`, segment `j` being `[j, j + 1]`.
pub fn min_cover_instance(segments: &[Segment2D], r: f64) -> Result<MultiIntervalInstance> {
    check_nonempty(segments)?;
    if !(r >= 0.0) {
        return Err(Error::InvalidParameter(format!("radius {r}")));
    }
    let sets = segments
        .iter()
        .map(|c| {
            segments
                .iter()
                .enumerate()
                .filter(|(_, s)| segment_min_distance(s, c) <= r + TOLERANCE)
                .map(|(j, _)| Interval1D {
                    lo: j as f64,
                    hi: j as f64 + 1.0,
                })
                .collect()
        })
        .collect();
    Ok(MultiIntervalInstance::new(sets))
}

/// Build the reduction for `mode` at radius `r` and solve it greedily.
pub fn reduce_to_cover(
    segments: &[Segment2D],
    r: f64,
    mode: CostMode,
) -> Result<(MultiIntervalInstance, CoverSolution)> {
    let inst = match mode {
        CostMode::Max => max_cover_instance(segments, r)?,
        CostMode::Min => min_cover_instance(segments, r)?,
    };
    let sol = greedy_set_cover(&atomic_decomposition(&inst))?;
    Ok((inst, sol))
}

pub fn reduce_max_to_cover(segments: &[Segment2D], r: f64) -> Result<(MultiIntervalInstance, CoverSolution)> {
    reduce_to_cover(segments, r, CostMode::Max)
}

pub fn reduce_min_to_cover(segments: &[Segment2D], r: f64) -> Result<(MultiIntervalInstance, CoverSolution)> {
    reduce_to_cover(segments, r, CostMode::Min)
}

/// Center budget `k·⌈ln|U| + 1⌉` for a universe of `atoms` atoms.
pub fn bicriteria_budget(k: usize, atoms: usize) -> usize {
    k * greedy_factor(atoms).ceil() as usize
}

const BATCH: usize = 32;

/// Bicriteria k-center of segments in the given cost mode.
pub fn kcenter_segments(
    segments: &[Segment2D],
    k: usize,
    mode: CostMode,
    opts: &SegmentOptions,
) -> Result<SegmentClustering> {
    check_nonempty(segments)?;
    if k == 0 || k > segments.len() {
        return Err(Error::InvalidParameter(format!(
            "k = {k} with {} segments",
            segments.len()
        )));
    }
    let mut radii = vec![0.0];
    radii.extend(candidate_radii(segments, opts.eps)?.radii);

    let accepts = |size: usize, atoms: usize| match opts.budget {
        CenterBudget::Bicriteria => size <= bicriteria_budget(k, atoms),
        CenterBudget::AtMostK => size <= k,
    };

    let mut frontier = Vec::new();
    let mut winner: Option<(f64, Vec<usize>)> = None;
    for batch in radii.chunks(BATCH) {
        let solved: Vec<(f64, CoverSolution)> = batch
            .par_iter()
            .map(|&r| reduce_to_cover(segments, r, mode).map(|(_, sol)| (r, sol)))
            .collect::<Result<_>>()?;
        for (r, sol) in solved {
            frontier.push((r, sol.len()));
            if winner.is_none() && accepts(sol.len(), sol.atom_count()) {
                winner = Some((r, sol.chosen));
            }
        }
        if winner.is_some() && !opts.full_frontier {
            break;
        }
    }
    // the cover at the largest radius is always within budget for k ≥ 1 in
    // bicriteria mode; AtMostK can still fail when greedy overshoots
    let (threshold, mut centers) = match winner {
        Some(w) => w,
        None => {
            let r = *radii.last().expect("r = 0 is present");
            (r, reduce_to_cover(segments, r, mode)?.1.chosen)
        }
    };
    centers.sort_unstable();
    let radius = clustering_cost(segments, &centers, mode)?;
    Ok(SegmentClustering {
        center_indices: centers,
        radius,
        threshold,
        mode,
        frontier,
    })
}

/// Bicriteria max-cost k-center with default options.
pub fn max_kcenter_segments(segments: &[Segment2D], k: usize, eps: f64) -> Result<SegmentClustering> {
    kcenter_segments(segments, k, CostMode::Max, &SegmentOptions::new(eps))
}

/// Bicriteria min-cost k-center with default options.
pub fn min_kcenter_segments(segments: &[Segment2D], k: usize, eps: f64) -> Result<SegmentClustering> {
    kcenter_segments(segments, k, CostMode::Min, &SegmentOptions::new(eps))
}
