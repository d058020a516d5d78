use std::path::Path;

use crate::config::Config;
use crate::error::Result;
use crate::io_util::{atomic_write, ensure_dir, tsv};
use crate::manifest::ManifestBuilder;
use crate::pipeline::vocabulary_stage;

/// Ranks the target corpus by content-word frequency and cuts the working
/// vocabulary at the configured coverage.
pub fn run(config: &Config, out_dir: &Path) -> Result<()> {
    let mut manifest = ManifestBuilder::new("vocab");
    let stage = vocabulary_stage(config, &mut manifest)?;
    ensure_dir(out_dir)?;

    let frequency = tsv(
        "word\tcount",
        stage.table.entries().iter().map(|(word, count)| format!("{word}\t{count}")),
    );
    atomic_write(&out_dir.join("frequency.tsv"), &frequency)?;
    manifest.output("frequency.tsv");

    let selection = tsv(
        "word\tcount",
        stage.selection.selected().iter().map(|(word, count)| format!("{word}\t{count}")),
    );
    atomic_write(&out_dir.join("selection.tsv"), &selection)?;
    manifest.output("selection.tsv");

    manifest.write(out_dir, config)?;
    println!(
        "selected {} of {} words; achieved coverage {:.4} (requested {})",
        stage.selection.k(),
        stage.table.len(),
        stage.selection.achieved_coverage(),
        stage.selection.requested_coverage(),
    );
    Ok(())
}
