use std::collections::BTreeSet;
use std::num::NonZeroUsize;
use std::path::Path;

use lexshift_core::transfer::{
    collapse_labels, filter_conflicting_sentences, merge_datasets, sample_sentences_for_words,
    substitute_deviated_tokens, ClassMode, LabeledDataset,
};

use crate::config::Config;
use crate::error::{contract, CliError, Result};
use crate::formats::{
    read_dataset, read_sentiment_map, read_tokenized_corpus, read_word_list, render_dataset,
    substitution_maps,
};
use crate::io_util::{atomic_write, ensure_dir, tsv};
use crate::manifest::ManifestBuilder;

/// Collapses a five-class dataset onto the three-class scheme.
pub fn map_labels(config: &Config, input: &Path, tagged: bool, out_dir: &Path) -> Result<()> {
    let mut manifest = ManifestBuilder::new("map-labels");
    manifest.input(input);
    let dataset = read_dataset(input, ClassMode::Five, tagged)?;
    let mapped = collapse_labels(&dataset).map_err(contract)?;

    ensure_dir(out_dir)?;
    atomic_write(&out_dir.join("mapped.tsv"), &render_dataset(&mapped))?;
    manifest.output("mapped.tsv");

    manifest.write(out_dir, config)?;
    let [negative, neutral, positive] = mapped.class_counts();
    println!(
        "mapped {} sentences: {} negative, {} neutral, {} positive",
        mapped.len(),
        negative,
        neutral,
        positive,
    );
    Ok(())
}

/// Drops sentences whose label contradicts the confirmed sentiment of a
/// deviated word they contain.
pub fn filter(
    config: &Config,
    input: &Path,
    deviations: &Path,
    tagged: bool,
    out_dir: &Path,
) -> Result<()> {
    let mut manifest = ManifestBuilder::new("filter");
    manifest.input(input);
    let dataset = read_dataset(input, ClassMode::Three, tagged)?;
    manifest.input(deviations);
    let confirmed = read_sentiment_map(deviations)?;

    let (kept, removals) = filter_conflicting_sentences(&dataset, &confirmed).map_err(contract)?;

    ensure_dir(out_dir)?;
    atomic_write(&out_dir.join("filtered.tsv"), &render_dataset(&kept))?;
    manifest.output("filtered.tsv");

    let body = tsv(
        "index\tlabel\tconflicts",
        removals.iter().map(|removal| {
            // Sorted for output stability; the in-sentence order is noise.
            let words: BTreeSet<&str> =
                removal.conflicts.iter().map(|(word, _)| word.as_str()).collect();
            let words: Vec<&str> = words.into_iter().collect();
            format!("{}\t{}\t{}", removal.index, removal.label.as_str(), words.join(","))
        }),
    );
    atomic_write(&out_dir.join("removals.tsv"), &body)?;
    manifest.output("removals.tsv");

    manifest.write(out_dir, config)?;
    println!("kept {} of {} sentences ({} removed)", kept.len(), dataset.len(), removals.len());
    Ok(())
}

/// Pulls example sentences for the listed words from the target corpus.
pub fn sample(config: &Config, words_path: &Path, out_dir: &Path) -> Result<()> {
    let mut manifest = ManifestBuilder::new("sample");
    let corpus_path = config.require_path("target_corpus")?;
    manifest.input(&corpus_path);
    let corpus = read_tokenized_corpus(&corpus_path)?;

    manifest.input(words_path);
    let words: BTreeSet<String> = read_word_list(words_path)?.into_iter().collect();

    let per_word = config.per_word_samples()?;
    let per_word = NonZeroUsize::new(per_word)
        .ok_or_else(|| CliError::Config(String::from("per_word_samples must be at least 1")))?;
    let seed = config.rng_seed()?;

    let (samples, shortfalls) = sample_sentences_for_words(&corpus, &words, per_word, seed);

    ensure_dir(out_dir)?;
    let body = tsv(
        "word\tindex\tsentence",
        samples.iter().map(|sample| {
            format!("{}\t{}\t{}", sample.word, sample.sentence_index, sample.tokens.join(" "))
        }),
    );
    atomic_write(&out_dir.join("samples.tsv"), &body)?;
    manifest.output("samples.tsv");

    let body = tsv(
        "word\trequested\tfound",
        shortfalls.iter().map(|s| format!("{}\t{}\t{}", s.word, s.requested, s.found)),
    );
    atomic_write(&out_dir.join("shortfalls.tsv"), &body)?;
    manifest.output("shortfalls.tsv");

    manifest.write(out_dir, config)?;
    println!(
        "sampled {} sentences for {} words ({} words fell short)",
        samples.len(),
        words.len(),
        shortfalls.len(),
    );
    Ok(())
}

/// Concatenates a source-domain and a target-domain dataset, stamping
/// provenance on rows that do not carry it already.
pub fn merge(config: &Config, source: &Path, target: &Path, out_dir: &Path) -> Result<()> {
    let mut manifest = ManifestBuilder::new("merge");
    manifest.input(source);
    let source_set = read_dataset(source, ClassMode::Three, false)?;
    manifest.input(target);
    let target_set = read_dataset(target, ClassMode::Three, false)?;

    let merged = merge_datasets(&source_set, &target_set).map_err(contract)?;

    ensure_dir(out_dir)?;
    atomic_write(&out_dir.join("merged.tsv"), &render_dataset(&merged))?;
    manifest.output("merged.tsv");

    manifest.write(out_dir, config)?;
    let [negative, neutral, positive] = merged.class_counts();
    println!(
        "merged {} source + {} target sentences: {} negative, {} neutral, {} positive",
        source_set.len(),
        target_set.len(),
        negative,
        neutral,
        positive,
    );
    Ok(())
}

/// Replaces deviated tokens with class-appropriate stand-ins chosen by
/// part-of-speech tag. The input must be tagged.
pub fn substitute(config: &Config, input: &Path, deviations: &Path, out_dir: &Path) -> Result<()> {
    let mut manifest = ManifestBuilder::new("substitute");
    manifest.input(input);
    let dataset = read_dataset(input, ClassMode::Three, true)?;
    manifest.input(deviations);
    let confirmed = read_sentiment_map(deviations)?;

    let keys = ["substitution_positive", "substitution_negative", "substitution_neutral"];
    for key in keys {
        if let Some(path) = config.path(key) {
            manifest.input(&path);
        }
    }
    let maps = substitution_maps(config)?;

    let mut sentences = Vec::with_capacity(dataset.len());
    let mut unmapped_rows = Vec::new();
    let mut replaced = 0usize;
    for (index, sentence) in dataset.sentences().iter().enumerate() {
        let outcome = substitute_deviated_tokens(sentence, &confirmed, &maps).map_err(contract)?;
        replaced += sentence
            .tokens()
            .iter()
            .zip(outcome.sentence.tokens())
            .filter(|(before, after)| before != after)
            .count();
        for (word, tag) in outcome.unmapped {
            unmapped_rows.push(format!("{index}\t{word}\t{tag}"));
        }
        sentences.push(outcome.sentence);
    }
    let substituted = LabeledDataset::new(ClassMode::Three, sentences).map_err(contract)?;

    let unmapped = unmapped_rows.len();

    ensure_dir(out_dir)?;
    atomic_write(&out_dir.join("substituted.tsv"), &render_dataset(&substituted))?;
    manifest.output("substituted.tsv");

    atomic_write(&out_dir.join("unmapped.tsv"), &tsv("index\tword\ttag", unmapped_rows))?;
    manifest.output("unmapped.tsv");

    manifest.write(out_dir, config)?;
    println!(
        "replaced {} tokens across {} sentences ({} occurrences had no mapping)",
        replaced,
        substituted.len(),
        unmapped,
    );
    Ok(())
}
