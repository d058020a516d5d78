use std::path::Path;

use crate::config::Config;
use crate::error::Result;
use crate::formats::optional_float;
use crate::io_util::{atomic_write, ensure_dir, tsv};
use crate::manifest::ManifestBuilder;
use crate::pipeline::profile_stage;

const HEADER: &str = "word\tin_vocabulary\ttarget_neighbor\tsource_neighbor\tdomain_similarity\tlexicon_affinity\tdomain_generic\tunder_represented\tlexicon_assignable\tnot_antonyms\tneighbor_seed_sentiment";

/// Computes the full evidence profile for every vocabulary word, plus any
/// target neighbours that sit outside the vocabulary.
pub fn run(config: &Config, out_dir: &Path) -> Result<()> {
    let mut manifest = ManifestBuilder::new("profile");
    let stage = profile_stage(config, &mut manifest)?;
    let vocabulary = stage.vocabulary.selection.word_set();

    ensure_dir(out_dir)?;
    let body = tsv(
        HEADER,
        stage.profiles.values().map(|profile| {
            format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                profile.word,
                vocabulary.contains(&profile.word),
                profile.target_neighbor.as_deref().unwrap_or(""),
                profile.source_neighbor.as_deref().unwrap_or(""),
                optional_float(profile.domain_similarity),
                optional_float(profile.lexicon_affinity),
                profile.domain_generic,
                profile.under_represented,
                profile.lexicon_assignable,
                profile.not_antonyms,
                profile.neighbor_seed_sentiment.map(|s| s.as_str()).unwrap_or(""),
            )
        }),
    );
    atomic_write(&out_dir.join("profiles.tsv"), &body)?;
    manifest.output("profiles.tsv");

    manifest.write(out_dir, config)?;
    println!(
        "profiled {} words ({} pulled in from outside the vocabulary) at threshold {}",
        stage.profiles.len(),
        stage.extras.len(),
        stage.params.domain_similarity_threshold,
    );
    Ok(())
}
