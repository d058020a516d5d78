use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use lexshift_core::corpus::{
    build_frequency_table, remove_stopwords, select_vocabulary, FrequencyTable,
    VocabularySelection,
};
use lexshift_core::embedding::{DomainTag, EmbeddingSpace};
use lexshift_core::lexicon::{ScoredLexicon, SeedPartition};
use lexshift_core::profile::{profile_word, ProfileContext, ProfileParams, WordProfile};
use lexshift_core::{Error, Sentiment};

use crate::config::Config;
use crate::error::{contract, CliError, Result};
use crate::formats;
use crate::manifest::ManifestBuilder;

/// The target corpus reduced to a ranked content-word table and the
/// coverage-selected working vocabulary.
pub struct VocabularyStage {
    pub table: FrequencyTable,
    pub selection: VocabularySelection,
}

pub fn vocabulary_stage(config: &Config, manifest: &mut ManifestBuilder) -> Result<VocabularyStage> {
    let corpus_path = config.require_path("target_corpus")?;
    manifest.input(&corpus_path);
    let corpus = formats::read_tokenized_corpus(&corpus_path)?;
    if let Some(path) = config.path("stopwords") {
        manifest.input(&path);
    }
    let stopwords = formats::stopword_list(config)?;
    let content = remove_stopwords(&corpus, &stopwords);
    let table = build_frequency_table(&content);
    let selection = select_vocabulary(&table, config.coverage()?).map_err(|e| match e {
        Error::InvalidCoverage { .. } => CliError::Config(e.to_string()),
        other => contract(other),
    })?;
    Ok(VocabularyStage { table, selection })
}

/// Vocabulary plus the seed partition read off the source-domain labels.
pub struct SeedStage {
    pub vocabulary: VocabularyStage,
    pub seed: SeedPartition,
}

pub fn seed_stage(config: &Config, manifest: &mut ManifestBuilder) -> Result<SeedStage> {
    let vocabulary = vocabulary_stage(config, manifest)?;
    let labels_path = config.require_path("source_labels")?;
    manifest.input(&labels_path);
    let labels = formats::read_word_labels(&labels_path)?;
    let seed = SeedPartition::from_labels(&labels, &vocabulary.selection.word_set())
        .map_err(contract)?;
    Ok(SeedStage { vocabulary, seed })
}

pub fn load_space(
    config: &Config,
    manifest: &mut ManifestBuilder,
    key: &str,
    domain: DomainTag,
) -> Result<EmbeddingSpace> {
    let path = config.require_path(key)?;
    manifest.input(&path);
    let (space, skipped) = formats::read_embeddings(&path, domain)?;
    for word in skipped {
        eprintln!("warning: {}: `{word}` has a zero vector, skipped", path.display());
    }
    Ok(space)
}

/// Everything the rules consume: the seed partition, the scored lexicon
/// and one evidence profile per working-vocabulary word (plus profiles for
/// the out-of-vocabulary target neighbours the neighbour rule may need to
/// inspect).
pub struct ProfileStage {
    pub vocabulary: VocabularyStage,
    pub seed: SeedPartition,
    pub scored: ScoredLexicon,
    pub profiles: BTreeMap<String, WordProfile>,
    /// Profiled words that are outside the working vocabulary.
    pub extras: BTreeSet<String>,
    pub params: ProfileParams,
}

pub fn profile_stage(config: &Config, manifest: &mut ManifestBuilder) -> Result<ProfileStage> {
    let SeedStage { vocabulary, seed } = seed_stage(config, manifest)?;

    let target = load_space(config, manifest, "target_embeddings", DomainTag::Target)?;
    let source = load_space(config, manifest, "source_embeddings", DomainTag::Source)?;
    let bridge = load_space(config, manifest, "bridge_embeddings", DomainTag::Bridge)?;

    let source_corpus_path = config.require_path("source_corpus")?;
    manifest.input(&source_corpus_path);
    let source_corpus = formats::read_tokenized_corpus(&source_corpus_path)?;
    let source_counts = build_frequency_table(&source_corpus).to_counts();

    let scored_path = config.require_path("scored_lexicon")?;
    manifest.input(&scored_path);
    let (scored, multiword_skipped) = formats::read_scored_lexicon(&scored_path)?;
    for word in &multiword_skipped {
        eprintln!(
            "warning: {}: multi-word entry `{word}` cannot match a token, skipped",
            scored_path.display()
        );
    }

    let antonyms_path = config.require_path("antonyms")?;
    manifest.input(&antonyms_path);
    let antonyms = formats::read_antonyms(&antonyms_path)?;

    let aux: Option<BTreeMap<String, Sentiment>> = match config.path("aux_lexicon") {
        None => None,
        Some(path) => {
            manifest.input(&path);
            Some(formats::read_sentiment_map(&path)?)
        }
    };

    let candidates: Option<BTreeSet<String>> = config
        .neighbor_pool_is_vocabulary()?
        .then(|| vocabulary.selection.word_set());
    let params = config.profile_params()?;

    let ctx = ProfileContext {
        target: &target,
        source: &source,
        bridge: &bridge,
        seed: &seed,
        scored: &scored,
        antonyms: &antonyms,
        source_counts: &source_counts,
        aux_sentiments: aux.as_ref(),
        neighbor_candidates: candidates.as_ref(),
    };

    let words: Vec<String> = vocabulary.selection.words().map(String::from).collect();
    let mut profiles: BTreeMap<String, WordProfile> = words
        .par_iter()
        .map(|word| profile_word(&ctx, &params, word).map(|p| (word.clone(), p)))
        .collect::<lexshift_core::Result<_>>()
        .map_err(contract)?;

    // The neighbour rule inspects the profile of a word's target
    // neighbour, which may itself lie outside the vocabulary.
    let extras: BTreeSet<String> = profiles
        .values()
        .filter_map(|p| p.target_neighbor.clone())
        .filter(|neighbor| !profiles.contains_key(neighbor))
        .collect();
    for word in &extras {
        let profile = profile_word(&ctx, &params, word).map_err(contract)?;
        profiles.insert(word.clone(), profile);
    }

    Ok(ProfileStage { vocabulary, seed, scored, profiles, extras, params })
}
