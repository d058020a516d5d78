//! Per-word evidence used by the adaptation rules, and calibration of the
//! domain-similarity threshold.
//!
//! For a word `w` from the working vocabulary, three embedding spaces are
//! consulted:
//!
//! * its nearest neighbour in the target space (`target_neighbor`),
//! * its nearest neighbour in the source space (`source_neighbor`),
//! * a bridge space in which `w` is compared against both neighbours.
//!
//! The cosine between the two neighbours, measured in the target space, is
//! the *domain similarity* of `w`: when the neighbourhoods agree, the word
//! means the same thing in both domains. The threshold that separates
//! "generic" from "domain specific" is not guessed; it is calibrated on a
//! verb-pair dataset with human similarity judgements.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::embedding::EmbeddingSpace;
use crate::error::Error;
use crate::lexicon::{AntonymList, ScoredLexicon, SeedPartition};
use crate::sentiment::Sentiment;
use crate::Result;

/// Smallest precision a grid threshold must reach during calibration.
pub const MIN_CALIBRATION_PRECISION: f64 = 0.5;

/// A pair of verbs with a human judgement of whether they are similar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerbPair {
    pub first: String,
    pub second: String,
    pub similar: bool,
}

/// A verb-pair dataset without duplicate (unordered) pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerbPairDataset {
    pairs: Vec<VerbPair>,
}

impl VerbPairDataset {
    pub fn new(pairs: Vec<VerbPair>) -> Result<Self> {
        let mut seen: BTreeSet<(&str, &str)> = BTreeSet::new();
        for pair in &pairs {
            let key = if pair.first <= pair.second {
                (pair.first.as_str(), pair.second.as_str())
            } else {
                (pair.second.as_str(), pair.first.as_str())
            };
            if !seen.insert(key) {
                return Err(Error::DuplicateVerbPair {
                    first: pair.first.clone(),
                    second: pair.second.clone(),
                });
            }
        }
        Ok(VerbPairDataset { pairs })
    }

    pub fn pairs(&self) -> &[VerbPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// One row of the calibration precision table.
///
/// `predicted` counts pairs whose cosine reached the threshold, `correct`
/// the subset annotated as similar. `precision` is `None` when nothing was
/// predicted at this threshold.
#[derive(Clone, Debug, PartialEq)]
pub struct GridPoint {
    pub threshold: f64,
    pub predicted: usize,
    pub correct: usize,
    pub precision: Option<f64>,
}

impl GridPoint {
    /// Whether this threshold reaches the precision floor. Thresholds that
    /// predict nothing never qualify.
    pub fn qualifies(&self) -> bool {
        self.precision.is_some_and(|p| p >= MIN_CALIBRATION_PRECISION)
    }
}

/// Result of [`calibrate_threshold`].
#[derive(Clone, Debug, PartialEq)]
pub struct Calibration {
    /// The smallest qualifying grid threshold.
    pub threshold: f64,
    /// The full precision table, one row per grid value.
    pub table: Vec<GridPoint>,
    /// Pairs that could not be scored because a verb was missing from the
    /// space.
    pub skipped: Vec<VerbPair>,
}

/// The conventional calibration grid `0.1, 0.2, ..., 0.9`.
pub fn default_threshold_grid() -> Vec<f64> {
    (1..=9).map(|i| i as f64 / 10.0).collect()
}

/// Evaluates every grid threshold as a similarity classifier over the verb
/// pairs and returns the smallest one whose precision reaches
/// [`MIN_CALIBRATION_PRECISION`].
///
/// The grid must be non-empty, finite and strictly ascending. Pairs with a
/// verb missing from `space` are skipped and reported, not errors. If no
/// threshold qualifies the full table is returned inside the error so the
/// failure can be inspected.
pub fn calibrate_threshold(
    dataset: &VerbPairDataset,
    space: &EmbeddingSpace,
    grid: &[f64],
) -> Result<Calibration> {
    if dataset.is_empty() {
        return Err(Error::EmptyInput);
    }
    if grid.is_empty()
        || grid.iter().any(|t| !t.is_finite())
        || grid.windows(2).any(|w| w[0] >= w[1])
    {
        return Err(Error::InvalidGrid);
    }

    let mut scored: Vec<(f64, bool)> = Vec::new();
    let mut skipped = Vec::new();
    for pair in dataset.pairs() {
        match space.cosine(&pair.first, &pair.second) {
            Ok(cosine) => scored.push((cosine, pair.similar)),
            Err(Error::OutOfVocabulary { .. }) => skipped.push(pair.clone()),
            Err(other) => return Err(other),
        }
    }

    let table: Vec<GridPoint> = grid
        .iter()
        .map(|&threshold| {
            let predicted = scored.iter().filter(|(c, _)| *c >= threshold).count();
            let correct = scored.iter().filter(|(c, similar)| *c >= threshold && *similar).count();
            let precision = (predicted > 0).then(|| correct as f64 / predicted as f64);
            GridPoint { threshold, predicted, correct, precision }
        })
        .collect();

    match table.iter().find(|point| point.qualifies()) {
        Some(point) => Ok(Calibration { threshold: point.threshold, table, skipped }),
        None => Err(Error::CalibrationFailed { table }),
    }
}

/// Cosine, in the target space, between a word's target-space neighbour
/// and its source-space neighbour.
///
/// Absence (`None`) means the quantity is undefined for this word: the
/// word or a neighbour is missing from the space that has to provide it.
pub fn domain_similarity(
    target: &EmbeddingSpace,
    source: &EmbeddingSpace,
    word: &str,
) -> Option<f64> {
    let target_neighbor = target.most_similar(word).ok()?;
    if !source.contains(word) {
        return None;
    }
    let source_neighbor = source.most_similar(word).ok()?;
    target.cosine(target_neighbor, source_neighbor).ok()
}

/// How much closer `word` sits to its target-domain neighbour than to its
/// source-domain neighbour, measured in the bridge space.
///
/// Positive values mean the bridge space sides with the target-domain
/// reading of the word. `None` when any of the three words is missing from
/// the bridge space.
pub fn lexicon_affinity_gap(
    bridge: &EmbeddingSpace,
    word: &str,
    target_neighbor: &str,
    source_neighbor: &str,
) -> Option<f64> {
    let toward_target = bridge.cosine(word, target_neighbor).ok()?;
    let toward_source = bridge.cosine(word, source_neighbor).ok()?;
    Some(toward_target - toward_source)
}

/// Everything [`profile_word`] needs to look at.
#[derive(Clone, Copy)]
pub struct ProfileContext<'a> {
    pub target: &'a EmbeddingSpace,
    pub source: &'a EmbeddingSpace,
    pub bridge: &'a EmbeddingSpace,
    pub seed: &'a SeedPartition,
    pub scored: &'a ScoredLexicon,
    pub antonyms: &'a AntonymList,
    /// Word occurrence counts in the source corpus, for the
    /// under-representation test. Words not present count as zero.
    pub source_counts: &'a BTreeMap<String, u64>,
    /// Optional fallback sentiment for neighbour words that are outside
    /// the seed partition (for example an auxiliary hand-built lexicon).
    pub aux_sentiments: Option<&'a BTreeMap<String, Sentiment>>,
    /// When set, neighbour queries only consider these words instead of
    /// the full vocabulary of each space.
    pub neighbor_candidates: Option<&'a BTreeSet<String>>,
}

/// Tunable profiling parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProfileParams {
    /// Domain-similarity threshold; values at or above it make a word
    /// domain generic. Usually the output of [`calibrate_threshold`].
    pub domain_similarity_threshold: f64,
    /// Words with a source-corpus frequency strictly below this bound are
    /// under-represented.
    pub under_represented_below: u64,
}

impl Default for ProfileParams {
    fn default() -> Self {
        ProfileParams { domain_similarity_threshold: 0.2, under_represented_below: 3 }
    }
}

/// The evidence the adaptation rules consume, for one word.
#[derive(Clone, Debug, PartialEq)]
pub struct WordProfile {
    pub word: String,
    /// Nearest neighbour in the target space, if any other word exists.
    pub target_neighbor: Option<String>,
    /// Nearest neighbour in the source space; absent when the word is not
    /// in the source space.
    pub source_neighbor: Option<String>,
    /// Cosine of the two neighbours in the target space.
    pub domain_similarity: Option<f64>,
    /// Bridge-space preference for the target neighbour over the source
    /// neighbour.
    pub lexicon_affinity: Option<f64>,
    /// `domain_similarity` present and at or above the threshold.
    pub domain_generic: bool,
    /// Source-corpus frequency strictly below the configured bound.
    pub under_represented: bool,
    /// In the scored lexicon *and* the affinity gap is strictly positive.
    pub lexicon_assignable: bool,
    /// A target neighbour exists and is not a registered antonym.
    pub not_antonyms: bool,
    /// Seed sentiment of the target neighbour (with auxiliary fallback).
    pub neighbor_seed_sentiment: Option<Sentiment>,
}

impl WordProfile {
    /// A word is domain specific exactly when it is not domain generic.
    pub fn domain_specific(&self) -> bool {
        !self.domain_generic
    }
}

fn neighbor_in(
    space: &EmbeddingSpace,
    word: &str,
    candidates: Option<&BTreeSet<String>>,
) -> Result<Option<String>> {
    let found = match candidates {
        None => space.most_similar(word),
        Some(set) => space.most_similar_among(word, set),
    };
    match found {
        Ok(neighbor) => Ok(Some(String::from(neighbor))),
        Err(Error::NoCandidate { .. }) => Ok(None),
        Err(other) => Err(other),
    }
}

/// Gathers the full evidence profile for one word.
///
/// The word must be in the target space. All other absences (no source
/// vector, no bridge coverage, no neighbour) degrade gracefully into
/// `None` fields and `false` flags.
pub fn profile_word(
    ctx: &ProfileContext<'_>,
    params: &ProfileParams,
    word: &str,
) -> Result<WordProfile> {
    if !ctx.target.contains(word) {
        return Err(Error::OutOfVocabulary {
            word: String::from(word),
            domain: ctx.target.domain(),
        });
    }

    let target_neighbor = neighbor_in(ctx.target, word, ctx.neighbor_candidates)?;
    let source_neighbor = if ctx.source.contains(word) {
        neighbor_in(ctx.source, word, ctx.neighbor_candidates)?
    } else {
        None
    };

    let domain_similarity = match (&target_neighbor, &source_neighbor) {
        (Some(l), Some(m)) if ctx.target.contains(m) => Some(ctx.target.cosine(l, m)?),
        _ => None,
    };
    let lexicon_affinity = match (&target_neighbor, &source_neighbor) {
        (Some(l), Some(m)) => lexicon_affinity_gap(ctx.bridge, word, l, m),
        _ => None,
    };

    let domain_generic =
        domain_similarity.is_some_and(|d| d >= params.domain_similarity_threshold);
    let frequency = ctx.source_counts.get(word).copied().unwrap_or(0);
    let under_represented = frequency < params.under_represented_below;
    let lexicon_assignable =
        ctx.scored.contains(word) && lexicon_affinity.is_some_and(|gap| gap > 0.0);
    let not_antonyms = target_neighbor
        .as_deref()
        .is_some_and(|l| !ctx.antonyms.are_antonyms(word, l));
    let neighbor_seed_sentiment = target_neighbor.as_deref().and_then(|l| {
        ctx.seed
            .sentiment_of(l)
            .or_else(|| ctx.aux_sentiments.and_then(|aux| aux.get(l).copied()))
    });

    Ok(WordProfile {
        word: String::from(word),
        target_neighbor,
        source_neighbor,
        domain_similarity,
        lexicon_affinity,
        domain_generic,
        under_represented,
        lexicon_assignable,
        not_antonyms,
        neighbor_seed_sentiment,
    })
}

/// Profiles many words; the result is keyed (and therefore ordered) by
/// word.
pub fn profile_words<'w>(
    ctx: &ProfileContext<'_>,
    params: &ProfileParams,
    words: impl IntoIterator<Item = &'w str>,
) -> Result<BTreeMap<String, WordProfile>> {
    let mut profiles = BTreeMap::new();
    for word in words {
        let profile = profile_word(ctx, params, word)?;
        profiles.insert(String::from(word), profile);
    }
    Ok(profiles)
}
