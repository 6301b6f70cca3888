//! End-to-end check-in experiment on synthetic data, with SVG figures.
//!
//! Pass a Brightkite-style TSV path as the first argument to use real data.

use std::path::PathBuf;

use aggucluster::pipeline::{run_experiment_detailed, write_figures, DatasetConfig, ExperimentConfig};

fn main() -> aggucluster::Result<()> {
    let mut cfg = ExperimentConfig::synthetic(40, 50, 42, 5);
    if let Some(path) = std::env::args().nth(1) {
        cfg.dataset = DatasetConfig::Tsv {
            path: path.into(),
            limit: None,
            full: false,
        };
        cfg.k = 20;
    }
    let out = run_experiment_detailed(&cfg)?;
    println!(
        "{} points, {} hulls, compression ratio {:.4}",
        out.points.len(),
        out.hulls.len(),
        out.compression_ratio
    );
    println!("{:<6} {:<18} {:>8} {:>10}", "set", "algorithm", "summary", "radius");
    for r in &out.reports {
        println!(
            "{:<6} {:<18} {:>8} {:>10.4}",
            r.dataset_tag, r.algorithm_tag, r.summary_size, r.radius
        );
    }
    let dir = PathBuf::from("target/figures");
    for p in write_figures(&out, &dir)? {
        println!("wrote {}", p.display());
    }
    Ok(())
}
