use std::path::Path;

use lexshift_core::adapt::{
    build_worklist, compute_deviation_deltas, deviations_from_adapted, ingest_annotations,
};

use crate::config::Config;
use crate::error::{contract, Result};
use crate::formats::{
    read_adapted_lexicon, read_completed_worklist, read_sentiment_lexicon, read_worklist,
    WORKLIST_HEADER,
};
use crate::io_util::{atomic_write, ensure_dir, tsv};
use crate::manifest::ManifestBuilder;
use crate::pipeline::seed_stage;

const LEXICON_HEADER: &str = "word\tsentiment";

/// Derives the expert worklist from an adapted lexicon: every word that
/// deviated from neutrality plus every polar seed word.
pub fn worklist(config: &Config, adapted_path: &Path, out_dir: &Path) -> Result<()> {
    let mut manifest = ManifestBuilder::new("worklist");
    let stage = seed_stage(config, &mut manifest)?;

    manifest.input(adapted_path);
    let adapted = read_adapted_lexicon(adapted_path)?;
    let deviations = deviations_from_adapted(&adapted, &stage.seed);
    let worklist = build_worklist(&deviations, &stage.seed, &adapted).map_err(contract)?;

    ensure_dir(out_dir)?;
    let body = tsv(
        WORKLIST_HEADER,
        worklist.entries().iter().map(|entry| format!("{}\t{}\t", entry.word, entry.current)),
    );
    atomic_write(&out_dir.join("worklist.tsv"), &body)?;
    manifest.output("worklist.tsv");

    manifest.write(out_dir, config)?;
    println!(
        "worklist of {} words ({} deviations, {} polar seeds)",
        worklist.len(),
        deviations.len(),
        stage.seed.positive().len() + stage.seed.negative().len(),
    );
    Ok(())
}

/// Validates a completed worklist: every word labelled exactly once, no
/// stray words, labels parseable.
pub fn ingest(
    config: &Config,
    worklist_path: &Path,
    annotations_path: &Path,
    out_dir: &Path,
) -> Result<()> {
    let mut manifest = ManifestBuilder::new("ingest");
    manifest.input(worklist_path);
    let worklist = read_worklist(worklist_path)?;
    manifest.input(annotations_path);
    let labels = read_completed_worklist(annotations_path)?;

    let sets = ingest_annotations(&worklist, &labels).map_err(contract)?;

    ensure_dir(out_dir)?;
    let body = tsv(
        LEXICON_HEADER,
        worklist.words().map(|word| {
            let sentiment = sets.sentiment_of(word).expect("ingest covers the worklist");
            format!("{word}\t{}", sentiment.as_str())
        }),
    );
    atomic_write(&out_dir.join("annotated.tsv"), &body)?;
    manifest.output("annotated.tsv");

    manifest.write(out_dir, config)?;
    println!(
        "ingested {} annotations: {} positive, {} negative, {} neutral",
        sets.len(),
        sets.positive().len(),
        sets.negative().len(),
        sets.neutral().len(),
    );
    Ok(())
}

/// Diffs expert labels against the seed classes and writes the confirmed
/// deviation lexicon.
pub fn deltas(
    config: &Config,
    worklist_path: &Path,
    annotated_path: &Path,
    out_dir: &Path,
) -> Result<()> {
    let mut manifest = ManifestBuilder::new("deltas");
    let stage = seed_stage(config, &mut manifest)?;

    manifest.input(worklist_path);
    let worklist = read_worklist(worklist_path)?;
    manifest.input(annotated_path);
    let labels = read_sentiment_lexicon(annotated_path)?;

    // Re-validating here keeps `deltas` safe to run on a hand-edited file.
    let sets = ingest_annotations(&worklist, &labels).map_err(contract)?;
    let deltas = compute_deviation_deltas(&sets, &stage.seed, &worklist);

    ensure_dir(out_dir)?;
    let body = tsv(
        LEXICON_HEADER,
        deltas
            .confirmed_sentiments()
            .iter()
            .map(|(word, sentiment)| format!("{word}\t{}", sentiment.as_str())),
    );
    atomic_write(&out_dir.join("deltas.tsv"), &body)?;
    manifest.output("deltas.tsv");

    manifest.write(out_dir, config)?;
    println!(
        "{} confirmed deviations: {} newly negative, {} newly positive, {} newly neutral",
        deltas.len(),
        deltas.newly_negative().len(),
        deltas.newly_positive().len(),
        deltas.newly_neutral().len(),
    );
    Ok(())
}
