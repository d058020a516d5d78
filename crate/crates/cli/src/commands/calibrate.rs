use std::path::Path;

use lexshift_core::embedding::DomainTag;
use lexshift_core::profile::calibrate_threshold;

use crate::config::Config;
use crate::error::{contract, Result};
use crate::formats::{optional_float, read_verb_pairs};
use crate::io_util::{atomic_write, ensure_dir, tsv};
use crate::manifest::ManifestBuilder;
use crate::pipeline::load_space;

/// Sweeps the threshold grid over the judged verb pairs and writes the
/// chosen domain-similarity threshold plus the full precision table.
pub fn run(config: &Config, out_dir: &Path) -> Result<()> {
    let mut manifest = ManifestBuilder::new("calibrate");
    let target = load_space(config, &mut manifest, "target_embeddings", DomainTag::Target)?;

    let pairs_path = config.require_path("verb_pairs")?;
    manifest.input(&pairs_path);
    let pairs = read_verb_pairs(&pairs_path)?;

    let grid = config.threshold_grid()?;
    let calibration = calibrate_threshold(&pairs, &target, &grid).map_err(contract)?;
    for pair in &calibration.skipped {
        eprintln!(
            "warning: pair `{}` / `{}` skipped, a verb is missing from the space",
            pair.first, pair.second,
        );
    }

    ensure_dir(out_dir)?;
    let table = tsv(
        "threshold\tpredicted\tcorrect\tprecision",
        calibration.table.iter().map(|point| {
            format!(
                "{}\t{}\t{}\t{}",
                point.threshold,
                point.predicted,
                point.correct,
                optional_float(point.precision),
            )
        }),
    );
    atomic_write(&out_dir.join("calibration.tsv"), &table)?;
    manifest.output("calibration.tsv");

    atomic_write(&out_dir.join("threshold.txt"), &format!("{}\n", calibration.threshold))?;
    manifest.output("threshold.txt");

    manifest.write(out_dir, config)?;
    println!(
        "calibrated threshold {} over {} scored pairs ({} skipped)",
        calibration.threshold,
        pairs.len() - calibration.skipped.len(),
        calibration.skipped.len(),
    );
    Ok(())
}
