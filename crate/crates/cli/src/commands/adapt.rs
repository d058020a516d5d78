use std::path::Path;

use lexshift_core::adapt::{adapt_seed_partition, build_adapted_lexicon, AdaptOptions, DeviationSets};

use crate::config::Config;
use crate::error::{contract, Result};
use crate::io_util::{atomic_write, ensure_dir, tsv};
use crate::manifest::ManifestBuilder;
use crate::pipeline::profile_stage;

pub const ADAPTED_HEADER: &str = "word\tsentiment\trule";
pub const DEVIATIONS_HEADER: &str = "word\tdirection";

pub fn render_deviations(deviations: &DeviationSets) -> String {
    let negative = deviations.to_negative().iter().map(|w| format!("{w}\tto_negative"));
    let positive = deviations.to_positive().iter().map(|w| format!("{w}\tto_positive"));
    tsv(DEVIATIONS_HEADER, negative.chain(positive))
}

/// Runs the adaptation rules over the seed partition and writes the
/// adapted lexicon together with the words that left the neutral class.
pub fn run(config: &Config, out_dir: &Path) -> Result<()> {
    let mut manifest = ManifestBuilder::new("adapt");
    let stage = profile_stage(config, &mut manifest)?;
    let options = AdaptOptions {
        precedence: config.rule_precedence()?,
        neutral_scope: config.neighbor_transfer_scope()?,
    };

    let (assignments, deviations) =
        adapt_seed_partition(&stage.seed, &stage.profiles, &stage.scored, &options)
            .map_err(contract)?;
    let adapted = build_adapted_lexicon(&assignments, &stage.seed).map_err(contract)?;

    ensure_dir(out_dir)?;
    let lexicon = tsv(
        ADAPTED_HEADER,
        adapted.iter().map(|(word, sentiment, rule)| {
            format!("{word}\t{}\t{}", sentiment.as_str(), rule.as_str())
        }),
    );
    atomic_write(&out_dir.join("adapted_lexicon.tsv"), &lexicon)?;
    manifest.output("adapted_lexicon.tsv");

    atomic_write(&out_dir.join("deviations.tsv"), &render_deviations(&deviations))?;
    manifest.output("deviations.tsv");

    manifest.write(out_dir, config)?;
    println!(
        "adapted {} words; {} deviated from neutral ({} to negative, {} to positive)",
        adapted.len(),
        deviations.len(),
        deviations.to_negative().len(),
        deviations.to_positive().len(),
    );
    Ok(())
}
