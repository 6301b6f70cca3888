use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{emit_svg, ingest_checkins, summarize_hulls, synthetic_checkins, CheckinRecord, SvgScene, SyntheticSpec};
use crate::error::{Error, Result};
use crate::geometry::{BoundingBox, Lattice, Point2D, Polygon2D};
use crate::polygons::{composable_kcenter, covering_radius, max_kcenter_arbitrary_with, EpsPolicy, GridOptions};

pub const COMPOSABLE: &str = "composable_points";
pub const POLYGON_GRID: &str = "polygon_grid";

/// Rows read from a TSV file unless `full` is set.
pub const DEFAULT_ROW_CAP: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DatasetConfig {
    Synthetic(SyntheticSpec),
    Tsv {
        path: PathBuf,
        #[serde(default)]
        limit: Option<usize>,
        #[serde(default)]
        full: bool,
    },
}

/// Experiment configuration. Only `dataset` and `k` are required.
///
/// ```json
/// {"dataset": {"kind": "synthetic", "users": 40, "points_per_user": 50, "seed": 42},
///  "k": 5, "eps": null, "partitions": 4,
///  "algorithms": ["composable_points", "polygon_grid"], "test_set": true}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub dataset: DatasetConfig,
    pub k: usize,
    /// Grid cell length in dataset units; `None` scales 5 per 360 units of
    /// extent.
    #[serde(default)]
    pub eps: Option<f64>,
    #[serde(default = "default_partitions")]
    pub partitions: usize,
    #[serde(default = "default_algorithms")]
    pub algorithms: Vec<String>,
    /// Also evaluate on grid points inside the hulls.
    #[serde(default = "default_true")]
    pub test_set: bool,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_max_samples")]
    pub max_samples: usize,
}

fn default_partitions() -> usize {
    4
}

fn default_algorithms() -> Vec<String> {
    vec![COMPOSABLE.to_string(), POLYGON_GRID.to_string()]
}

fn default_true() -> bool {
    true
}

fn default_max_samples() -> usize {
    GridOptions::DEFAULT_MAX_SAMPLES
}

impl ExperimentConfig {
    pub fn synthetic(users: usize, points_per_user: usize, seed: u64, k: usize) -> Self {
        Self {
            dataset: DatasetConfig::Synthetic(SyntheticSpec::new(users, points_per_user, seed)),
            k,
            eps: None,
            partitions: default_partitions(),
            algorithms: default_algorithms(),
            test_set: true,
            seed: 0,
            max_samples: default_max_samples(),
        }
    }
}

/// One row of the results table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub k: usize,
    pub eps: f64,
    /// Points the radius is measured on: `input` or `test`.
    pub dataset_tag: String,
    pub algorithm_tag: String,
    /// Points the final clustering round saw.
    pub summary_size: usize,
    pub radius: f64,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmRun {
    pub tag: String,
    pub centers: Vec<Point2D>,
    pub summary: Vec<Point2D>,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentOutcome {
    pub reports: Vec<ExperimentReport>,
    pub runs: Vec<AlgorithmRun>,
    pub points: Vec<Point2D>,
    pub hulls: Vec<Polygon2D>,
    pub compression_ratio: f64,
    pub eps: f64,
    pub test_set: Vec<Point2D>,
}

fn load(dataset: &DatasetConfig) -> Result<Vec<CheckinRecord>> {
    match dataset {
        DatasetConfig::Synthetic(spec) => {
            let recs = synthetic_checkins(spec);
            if recs.is_empty() {
                return Err(Error::EmptyInput("synthetic dataset has no points"));
            }
            Ok(recs)
        }
        DatasetConfig::Tsv { path, limit, full } => {
            let cap = if *full {
                *limit
            } else {
                Some(limit.unwrap_or(DEFAULT_ROW_CAP))
            };
            Ok(ingest_checkins(path, cap)?.0)
        }
    }
}

/// Default cell length: 5 units per 360 units of extent.
pub fn auto_eps(points: &[Point2D]) -> f64 {
    let bb = BoundingBox::of_points(points.iter().copied()).expect("nonempty");
    let side = bb.width().max(bb.height());
    if side > 0.0 {
        5.0 * side / 360.0
    } else {
        1.0
    }
}

/// Hull vertices plus lattice points with spacing `eps` inside every hull.
pub fn hull_test_set(hulls: &[Polygon2D], eps: f64, max_points: usize) -> Result<Vec<Point2D>> {
    let lattice = Lattice::new(Point2D::new(0.0, 0.0), eps)?;
    let budget: usize = hulls.iter().map(|h| lattice.count_in(&h.bounding_box())).sum();
    if budget > max_points {
        return Err(Error::SampleBudget(budget, max_points));
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for h in hulls {
        let grid = if h.is_degenerate() {
            Vec::new()
        } else {
            lattice.points_in(h)
        };
        for p in h.vertices().iter().copied().chain(grid) {
            if seen.insert((p.x.to_bits(), p.y.to_bits())) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

fn run_one(
    tag: &str,
    cfg: &ExperimentConfig,
    points: &[Point2D],
    hulls: &[Polygon2D],
    eps: f64,
) -> Result<AlgorithmRun> {
    let start = Instant::now();
    let (centers, summary) = match tag {
        COMPOSABLE => {
            let c = composable_kcenter(points, cfg.k, cfg.partitions, cfg.seed)?;
            (c.clustering.centers, c.summary)
        }
        POLYGON_GRID => {
            let opts = GridOptions {
                eps,
                policy: EpsPolicy::FixedCell,
                max_samples: cfg.max_samples,
                seed_index: cfg.seed as usize,
            };
            let c = max_kcenter_arbitrary_with(hulls, cfg.k, &opts)?;
            (c.centers, c.samples)
        }
        other => return Err(Error::UnknownAlgorithm(other.to_string())),
    };
    Ok(AlgorithmRun {
        tag: tag.to_string(),
        centers,
        summary,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// Run every configured algorithm and evaluate it on the input points and,
/// if requested, on the hull test set.
pub fn run_experiment_detailed(cfg: &ExperimentConfig) -> Result<ExperimentOutcome> {
    if let Some(bad) = cfg.algorithms.iter().find(|a| *a != COMPOSABLE && *a != POLYGON_GRID) {
        return Err(Error::UnknownAlgorithm(bad.clone()));
    }
    if cfg.k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let records = load(&cfg.dataset)?;
    let points: Vec<Point2D> = records.iter().map(CheckinRecord::point).collect();
    let (users, compression_ratio) = summarize_hulls(&records)?;
    let hulls: Vec<Polygon2D> = users.into_iter().map(|u| u.hull).collect();
    let eps = cfg.eps.unwrap_or_else(|| auto_eps(&points));
    log::info!(
        "{} points, {} users, compression {compression_ratio:.4}, eps {eps}",
        points.len(),
        hulls.len()
    );

    let runs: Vec<AlgorithmRun> = cfg
        .algorithms
        .iter()
        .map(|tag| run_one(tag, cfg, &points, &hulls, eps))
        .collect::<Result<_>>()?;
    let test_set = if cfg.test_set && !runs.is_empty() {
        hull_test_set(&hulls, eps, cfg.max_samples)?
    } else {
        Vec::new()
    };

    let mut reports = Vec::new();
    let mut evaluations: Vec<(&str, &[Point2D])> = vec![("input", &points)];
    if cfg.test_set {
        evaluations.push(("test", &test_set));
    }
    for (dataset_tag, eval) in evaluations {
        for run in &runs {
            reports.push(ExperimentReport {
                k: cfg.k,
                eps,
                dataset_tag: dataset_tag.to_string(),
                algorithm_tag: run.tag.clone(),
                summary_size: run.summary.len(),
                radius: covering_radius(eval, &run.centers)?,
                runtime_ms: run.runtime_ms,
            });
        }
    }
    Ok(ExperimentOutcome {
        reports,
        runs,
        points,
        hulls,
        compression_ratio,
        eps,
        test_set,
    })
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ExperimentReport>> {
    Ok(run_experiment_detailed(cfg)?.reports)
}

/// One figure per algorithm: its summary in red, centers in blue and the
/// disks of the input radius.
pub fn write_figures(outcome: &ExperimentOutcome, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for run in &outcome.runs {
        let radius = outcome
            .reports
            .iter()
            .find(|r| r.algorithm_tag == run.tag && r.dataset_tag == "input")
            .map(|r| r.radius);
        let scene = SvgScene {
            samples: vec![],
            summary: run.summary.clone(),
            centers: run.centers.clone(),
            radius,
        };
        let path = dir.join(format!("{}.svg", run.tag));
        emit_svg(&scene, &path)?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_rows_in_table_order() {
        let reports = run_experiment(&ExperimentConfig::synthetic(10, 20, 1, 3)).unwrap();
        let tags: Vec<(&str, &str)> = reports
            .iter()
            .map(|r| (r.dataset_tag.as_str(), r.algorithm_tag.as_str()))
            .collect();
        assert_eq!(
            tags,
            vec![
                ("input", COMPOSABLE),
                ("input", POLYGON_GRID),
                ("test", COMPOSABLE),
                ("test", POLYGON_GRID)
            ]
        );
        let back: Vec<ExperimentReport> = serde_json::from_str(&serde_json::to_string(&reports).unwrap()).unwrap();
        assert_eq!(back, reports);
    }

    #[test]
    fn empty_algorithm_list() {
        let cfg = ExperimentConfig {
            algorithms: vec![],
            ..ExperimentConfig::synthetic(5, 10, 1, 2)
        };
        assert!(run_experiment(&cfg).unwrap().is_empty());
    }

    #[test]
    fn unknown_algorithm() {
        let cfg = ExperimentConfig {
            algorithms: vec!["kmeans".into()],
            ..ExperimentConfig::synthetic(5, 10, 1, 2)
        };
        assert!(matches!(run_experiment(&cfg), Err(Error::UnknownAlgorithm(_))));
    }

    #[test]
    fn missing_dataset() {
        let cfg = ExperimentConfig {
            dataset: DatasetConfig::Tsv {
                path: "/nonexistent/x.tsv".into(),
                limit: None,
                full: false,
            },
            ..ExperimentConfig::synthetic(5, 10, 1, 2)
        };
        assert!(run_experiment(&cfg).is_err());
    }

    #[test]
    fn config_defaults() {
        let cfg: ExperimentConfig =
            serde_json::from_str(r#"{"dataset":{"kind":"synthetic","users":3,"points_per_user":4,"seed":9},"k":2}"#)
                .unwrap();
        assert_eq!(cfg.partitions, 4);
        assert_eq!(cfg.algorithms, default_algorithms());
        assert!(cfg.test_set && cfg.eps.is_none());
    }

    #[test]
    fn test_set_contains_hull_vertices() {
        let hull = Polygon2D::rectangle(0.0, 0.0, 2.0, 1.0).unwrap();
        let pts = hull_test_set(std::slice::from_ref(&hull), 0.5, 1000).unwrap();
        assert_eq!(pts.len(), 15);
        assert!(hull.vertices().iter().all(|v| pts.contains(v)));
    }
}
