use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use aggucluster::geometry::Point2D;
use aggucluster::io::{read_json, read_polygons, read_segments, write_json};
use aggucluster::oracle::{
    brute_kcenter_points, brute_kcenter_segments, brute_multi_interval_cover, brute_polygon_kcenter,
};
use aggucluster::pipeline::{
    ingest_checkins_with, run_experiment_detailed, summarize_hulls, write_figures, ExperimentConfig, IngestOptions,
    DEFAULT_ROW_CAP,
};
use aggucluster::polygons::{
    max_kcenter_arbitrary_with, max_kcenter_convex_with, min_kcenter_polygons_with, EpsPolicy, GridOptions,
    PolygonResultDoc,
};
use aggucluster::segments::{kcenter_segments, CenterBudget, CostMode, SegmentOptions};
use aggucluster::setcover::{multi_interval_set_cover, ply, MultiIntervalInstance, SolutionDoc};
use aggucluster::Result;

#[derive(Parser)]
#[command(
    name = "aggucluster",
    version,
    about = "k-center clustering of segments and polygons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bicriteria k-center of segments.
    Segments(SegmentsArgs),
    /// Domain-restricted k-center of polygons.
    Polygons(PolygonsArgs),
    /// Multi-interval set cover by atomic decomposition and greedy.
    Setcover(SetcoverArgs),
    /// Exhaustive reference solvers.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Parse a check-in file and summarize users by convex hulls.
    Ingest(IngestArgs),
    /// Run the clustering comparison on check-in data.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct SegmentsArgs {
    #[arg(long, default_value = "max")]
    mode: CostMode,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Include the (radius, cover size) frontier, trying every radius.
    #[arg(long)]
    frontier: bool,
    /// Require at most k centers instead of the bicriteria budget.
    #[arg(long)]
    at_most_k: bool,
}

#[derive(Args)]
struct PolygonsArgs {
    #[arg(long, default_value = "max")]
    mode: CostMode,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    /// Convex input (max mode).
    #[arg(long, conflicts_with = "arbitrary")]
    convex: bool,
    /// Simple polygons, triangulated first (max mode, the default).
    #[arg(long)]
    arbitrary: bool,
    /// Treat eps as the grid cell length in input units.
    #[arg(long)]
    fixed_cell: bool,
    #[arg(long, default_value_t = GridOptions::DEFAULT_MAX_SAMPLES)]
    max_samples: usize,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SetcoverArgs {
    /// `{"sets":[[[lo,hi],...],...]}`
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exact multi-interval set cover.
    Setcover {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Best k input segments as centers.
    Segments {
        #[arg(long, default_value = "max")]
        mode: CostMode,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1e-3)]
        resolution: f64,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Best k of the points themselves as centers, from `[[x,y],...]`.
    Points {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Best k grid points inside the polygons.
    Polygons {
        #[arg(long, default_value = "max")]
        mode: CostMode,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0.05)]
        resolution: f64,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct IngestArgs {
    #[arg(long)]
    input: PathBuf,
    /// Maximum number of valid records.
    #[arg(long, conflicts_with = "full")]
    limit: Option<usize>,
    /// Read the whole file instead of the default row cap.
    #[arg(long)]
    full: bool,
    /// Scale longitudes by the cosine of this latitude.
    #[arg(long)]
    equirectangular: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg_dir: Option<PathBuf>,
}

fn emit<T: Serialize>(out: Option<&Path>, value: &T) -> Result<()> {
    match out {
        Some(path) => write_json(path, value),
        None => {
            println!("{}", serde_json::to_string_pretty(value)?);
            Ok(())
        }
    }
}

fn segments(a: SegmentsArgs) -> Result<()> {
    let segs = read_segments(&a.input)?;
    let opts = SegmentOptions {
        eps: a.eps,
        budget: if a.at_most_k {
            CenterBudget::AtMostK
        } else {
            CenterBudget::Bicriteria
        },
        full_frontier: a.frontier,
    };
    let c = kcenter_segments(&segs, a.k, a.mode, &opts)?;
    emit(a.output.as_deref(), &c.to_doc(a.frontier))
}

fn polygons(a: PolygonsArgs) -> Result<()> {
    let polys = read_polygons(&a.input)?;
    let opts = GridOptions {
        eps: a.eps,
        policy: if a.fixed_cell {
            EpsPolicy::FixedCell
        } else {
            EpsPolicy::Guaranteed
        },
        max_samples: a.max_samples,
        seed_index: 0,
    };
    let c = match a.mode {
        CostMode::Max if a.convex => max_kcenter_convex_with(&polys, a.k, &opts)?,
        CostMode::Max => max_kcenter_arbitrary_with(&polys, a.k, &opts)?,
        CostMode::Min => min_kcenter_polygons_with(&polys, a.k, &opts)?,
    };
    emit(a.output.as_deref(), &PolygonResultDoc::from(&c))
}

fn setcover(a: SetcoverArgs) -> Result<()> {
    let inst: MultiIntervalInstance = read_json(&a.input)?;
    let sol = multi_interval_set_cover(&inst)?;
    #[derive(Serialize)]
    struct Doc {
        #[serde(flatten)]
        solution: SolutionDoc,
        ply: usize,
    }
    emit(
        a.output.as_deref(),
        &Doc {
            solution: SolutionDoc::from(&sol),
            ply: ply(&inst)?,
        },
    )
}

fn oracle(cmd: OracleCommand) -> Result<()> {
    match cmd {
        OracleCommand::Setcover { input, output } => {
            let inst: MultiIntervalInstance = read_json(&input)?;
            emit(output.as_deref(), &brute_multi_interval_cover(&inst)?)
        }
        OracleCommand::Segments {
            mode,
            k,
            resolution,
            input,
            output,
        } => emit(
            output.as_deref(),
            &brute_kcenter_segments(&read_segments(&input)?, k, mode, resolution)?,
        ),
        OracleCommand::Points { k, input, output } => {
            let pts: Vec<Point2D> = read_json(&input)?;
            emit(output.as_deref(), &brute_kcenter_points(&pts, k, &pts)?)
        }
        OracleCommand::Polygons {
            mode,
            k,
            resolution,
            input,
            output,
        } => emit(
            output.as_deref(),
            &brute_polygon_kcenter(&read_polygons(&input)?, k, resolution, mode)?,
        ),
    }
}

fn ingest(a: IngestArgs) -> Result<()> {
    let limit = if a.full {
        None
    } else {
        Some(a.limit.unwrap_or(DEFAULT_ROW_CAP))
    };
    let (records, stats) = ingest_checkins_with(
        &a.input,
        &IngestOptions {
            limit,
            equirectangular: a.equirectangular,
        },
    )?;
    let (users, compression_ratio) = summarize_hulls(&records)?;
    eprintln!(
        "{} records, {} users, compression ratio {compression_ratio:.4}, skipped {:?}",
        stats.records,
        users.len(),
        stats.skipped
    );
    #[derive(Serialize)]
    struct Doc<'a> {
        stats: &'a aggucluster::pipeline::IngestStats,
        compression_ratio: f64,
        users: &'a [aggucluster::pipeline::UserSummary],
    }
    emit(
        a.out.as_deref(),
        &Doc {
            stats: &stats,
            compression_ratio,
            users: &users,
        },
    )
}

fn experiment(a: ExperimentArgs) -> Result<()> {
    let cfg: ExperimentConfig = read_json(&a.config)?;
    let outcome = run_experiment_detailed(&cfg)?;
    for r in &outcome.reports {
        eprintln!(
            "k={} eps={:.4} {:5} {:18} summary={:7} radius={:.4} ({} ms)",
            r.k, r.eps, r.dataset_tag, r.algorithm_tag, r.summary_size, r.radius, r.runtime_ms
        );
    }
    eprintln!("compression ratio {:.4}", outcome.compression_ratio);
    if let Some(dir) = &a.svg_dir {
        for p in write_figures(&outcome, dir)? {
            eprintln!("wrote {}", p.display());
        }
    }
    emit(a.out.as_deref(), &outcome.reports)
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Segments(a) => segments(a),
        Command::Polygons(a) => polygons(a),
        Command::Setcover(a) => setcover(a),
        Command::Oracle(c) => oracle(c),
        Command::Ingest(a) => ingest(a),
        Command::Experiment(a) => experiment(a),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
