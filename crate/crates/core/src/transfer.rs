//! Labelled-dataset preparation for training a target-domain classifier:
//! label collapsing, negative-transfer filtering, sentence sampling,
//! dataset merging and sentiment-bearing token substitution.
//!
//! The deviated words (expert-confirmed sentiment changes between domains)
//! drive two of these steps. Filtering removes source-domain sentences
//! whose label contradicts the target-domain sentiment of a contained
//! deviated word; substitution replaces deviated tokens with same-tag
//! words of the correct sentiment so that source-domain syntax can carry
//! target-domain polarity.
//!
//! Word containment is exact token match on lowercased tokens throughout;
//! there is no stemming.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use core::fmt;
use core::num::NonZeroUsize;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::corpus::TokenizedCorpus;
use crate::error::Error;
use crate::sentiment::{FiveClassLabel, Sentiment};
use crate::Result;

/// Whether a dataset carries three-way or five-way labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassMode {
    Three,
    Five,
}

impl fmt::Display for ClassMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassMode::Three => "three-class",
            ClassMode::Five => "five-class",
        })
    }
}

/// A sentence label in either class mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DatasetLabel {
    Three(Sentiment),
    Five(FiveClassLabel),
}

impl DatasetLabel {
    pub fn mode(self) -> ClassMode {
        match self {
            DatasetLabel::Three(_) => ClassMode::Three,
            DatasetLabel::Five(_) => ClassMode::Five,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DatasetLabel::Three(s) => s.as_str(),
            DatasetLabel::Five(l) => l.as_str(),
        }
    }

    /// The three-class view of the label.
    pub fn collapse(self) -> Sentiment {
        match self {
            DatasetLabel::Three(s) => s,
            DatasetLabel::Five(l) => l.collapse(),
        }
    }

    /// The label if it already is three-class.
    pub fn as_three(self) -> Option<Sentiment> {
        match self {
            DatasetLabel::Three(s) => Some(s),
            DatasetLabel::Five(_) => None,
        }
    }
}

/// Where a sentence came from when datasets are merged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Source,
    Target,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Source => "source",
            Provenance::Target => "target",
        })
    }
}

/// One labelled sentence, optionally with part-of-speech tags aligned to
/// the tokens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledSentence {
    tokens: Vec<String>,
    pos_tags: Option<Vec<String>>,
    label: DatasetLabel,
    provenance: Option<Provenance>,
}

impl LabeledSentence {
    pub fn new(
        tokens: Vec<String>,
        pos_tags: Option<Vec<String>>,
        label: DatasetLabel,
    ) -> Result<Self> {
        for token in &tokens {
            if token.is_empty() || token.chars().any(char::is_whitespace) {
                return Err(Error::InvalidToken { token: token.clone() });
            }
        }
        if let Some(tags) = &pos_tags {
            if tags.len() != tokens.len() {
                return Err(Error::LengthMismatch { expected: tokens.len(), actual: tags.len() });
            }
            for tag in tags {
                if tag.is_empty() || tag.chars().any(char::is_whitespace) {
                    return Err(Error::InvalidToken { token: tag.clone() });
                }
            }
        }
        Ok(LabeledSentence { tokens, pos_tags, label, provenance: None })
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = Some(provenance);
        self
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn pos_tags(&self) -> Option<&[String]> {
        self.pos_tags.as_deref()
    }

    pub fn label(&self) -> DatasetLabel {
        self.label
    }

    pub fn provenance(&self) -> Option<Provenance> {
        self.provenance
    }

    /// Lowercased containment check.
    pub fn contains_word(&self, word: &str) -> bool {
        self.tokens.iter().any(|t| t.to_lowercase() == word)
    }
}

/// A list of labelled sentences that all share one class mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledDataset {
    mode: ClassMode,
    sentences: Vec<LabeledSentence>,
}

impl LabeledDataset {
    pub fn new(mode: ClassMode, sentences: Vec<LabeledSentence>) -> Result<Self> {
        for sentence in &sentences {
            if sentence.label.mode() != mode {
                return Err(Error::ClassModeMismatch {
                    expected: mode,
                    actual: sentence.label.mode(),
                });
            }
        }
        Ok(LabeledDataset { mode, sentences })
    }

    pub fn mode(&self) -> ClassMode {
        self.mode
    }

    pub fn sentences(&self) -> &[LabeledSentence] {
        &self.sentences
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    /// Sentence counts per collapsed three-class label, in canonical class
    /// order.
    pub fn class_counts(&self) -> [usize; 3] {
        let mut counts = [0usize; 3];
        for sentence in &self.sentences {
            counts[sentence.label.collapse().index()] += 1;
        }
        counts
    }
}

/// Collapses a five-class dataset to three classes; tokens, tags and
/// provenance pass through unchanged.
pub fn collapse_labels(dataset: &LabeledDataset) -> Result<LabeledDataset> {
    if dataset.mode != ClassMode::Five {
        return Err(Error::ClassModeMismatch { expected: ClassMode::Five, actual: dataset.mode });
    }
    let sentences = dataset
        .sentences
        .iter()
        .map(|s| LabeledSentence {
            tokens: s.tokens.clone(),
            pos_tags: s.pos_tags.clone(),
            label: DatasetLabel::Three(s.label.collapse()),
            provenance: s.provenance,
        })
        .collect();
    Ok(LabeledDataset { mode: ClassMode::Three, sentences })
}

/// Why a sentence was removed: the deviated words in it whose confirmed
/// sentiment contradicts the sentence label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Removal {
    /// Index into the unfiltered dataset.
    pub index: usize,
    pub label: Sentiment,
    /// The conflicting words and their confirmed sentiments.
    pub conflicts: Vec<(String, Sentiment)>,
}

/// Drops every sentence containing a deviated word whose confirmed
/// target-domain sentiment differs from the sentence label.
///
/// The dataset must be three-class. Containment is lowercased exact token
/// match. Removals report each dropped sentence with its conflicts.
pub fn filter_conflicting_sentences(
    dataset: &LabeledDataset,
    confirmed: &BTreeMap<String, Sentiment>,
) -> Result<(LabeledDataset, Vec<Removal>)> {
    if dataset.mode != ClassMode::Three {
        return Err(Error::ClassModeMismatch { expected: ClassMode::Three, actual: dataset.mode });
    }
    let mut kept = Vec::new();
    let mut removals = Vec::new();
    for (index, sentence) in dataset.sentences.iter().enumerate() {
        let label = sentence.label.collapse();
        let mut conflicts: Vec<(String, Sentiment)> = Vec::new();
        let mut seen: BTreeSet<String> = BTreeSet::new();
        for token in &sentence.tokens {
            let lowered = token.to_lowercase();
            if let Some(&sentiment) = confirmed.get(&lowered) {
                if sentiment != label && seen.insert(lowered.clone()) {
                    conflicts.push((lowered, sentiment));
                }
            }
        }
        if conflicts.is_empty() {
            kept.push(sentence.clone());
        } else {
            removals.push(Removal { index, label, conflicts });
        }
    }
    Ok((LabeledDataset { mode: ClassMode::Three, sentences: kept }, removals))
}

/// A sentence picked for a word by [`sample_sentences_for_words`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledSentence {
    pub word: String,
    /// Index of the sentence in the corpus.
    pub sentence_index: usize,
    pub tokens: Vec<String>,
}

/// A word that had fewer matching sentences than requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shortfall {
    pub word: String,
    pub requested: usize,
    pub found: usize,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = FNV_OFFSET;
    for byte in bytes {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(FNV_PRIME);
    }
    hash
}

/// Per-word generator: the stream depends on the global seed and the word,
/// not on how many words were sampled before it.
fn word_rng(seed: u64, word: &str) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&fnv1a64(word.as_bytes()).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Uniform draw from `[0, bound)` by rejection, avoiding modulo bias.
fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let limit = u64::MAX - (u64::MAX % bound);
    loop {
        let draw = rng.next_u64();
        if draw < limit {
            return draw % bound;
        }
    }
}

/// Picks `k` distinct indices from `0..n` with a partial Fisher-Yates
/// shuffle, then sorts them ascending.
fn sample_indices(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    debug_assert!(k <= n);
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = i + uniform_below(rng, (n - i) as u64) as usize;
        pool.swap(i, j);
    }
    let mut chosen: Vec<usize> = pool[..k].to_vec();
    chosen.sort_unstable();
    chosen
}

/// For each word (in lexicographic order) samples up to `per_word`
/// sentences containing it.
///
/// Words with at most `per_word` matches contribute all of them; words
/// with more get a seeded uniform sample. Selected sentences are emitted
/// in ascending corpus order per word. Words with fewer matches than
/// requested (including zero) are reported as shortfalls.
pub fn sample_sentences_for_words(
    corpus: &TokenizedCorpus,
    words: &BTreeSet<String>,
    per_word: NonZeroUsize,
    seed: u64,
) -> (Vec<SampledSentence>, Vec<Shortfall>) {
    let per_word = per_word.get();
    let mut samples = Vec::new();
    let mut shortfalls = Vec::new();
    for word in words {
        let matches: Vec<usize> = corpus
            .sentences()
            .iter()
            .enumerate()
            .filter(|(_, tokens)| tokens.iter().any(|t| t == word))
            .map(|(i, _)| i)
            .collect();
        let chosen: Vec<usize> = if matches.len() <= per_word {
            if matches.len() < per_word {
                shortfalls.push(Shortfall {
                    word: word.clone(),
                    requested: per_word,
                    found: matches.len(),
                });
            }
            matches
        } else {
            let mut rng = word_rng(seed, word);
            sample_indices(&mut rng, matches.len(), per_word)
                .into_iter()
                .map(|i| matches[i])
                .collect()
        };
        for sentence_index in chosen {
            samples.push(SampledSentence {
                word: word.clone(),
                sentence_index,
                tokens: corpus.sentences()[sentence_index].clone(),
            });
        }
    }
    (samples, shortfalls)
}

/// Concatenates two three-class datasets. Sentences without provenance get
/// it here: the first dataset counts as source-domain material, the second
/// as target-domain material.
pub fn merge_datasets(
    source_side: &LabeledDataset,
    target_side: &LabeledDataset,
) -> Result<LabeledDataset> {
    for dataset in [source_side, target_side] {
        if dataset.mode != ClassMode::Three {
            return Err(Error::ClassModeMismatch {
                expected: ClassMode::Three,
                actual: dataset.mode,
            });
        }
    }
    let mut sentences = Vec::with_capacity(source_side.len() + target_side.len());
    for sentence in &source_side.sentences {
        let mut merged = sentence.clone();
        merged.provenance = merged.provenance.or(Some(Provenance::Source));
        sentences.push(merged);
    }
    for sentence in &target_side.sentences {
        let mut merged = sentence.clone();
        merged.provenance = merged.provenance.or(Some(Provenance::Target));
        sentences.push(merged);
    }
    Ok(LabeledDataset { mode: ClassMode::Three, sentences })
}

/// Tag-to-replacement table for one sentiment class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubstitutionMap {
    replacements: BTreeMap<String, String>,
}

impl SubstitutionMap {
    pub fn new(pairs: impl IntoIterator<Item = (String, String)>) -> Result<Self> {
        let mut replacements = BTreeMap::new();
        for (tag, replacement) in pairs {
            if tag.is_empty() || tag.chars().any(char::is_whitespace) {
                return Err(Error::InvalidToken { token: tag });
            }
            if replacement.is_empty() || replacement.chars().any(char::is_whitespace) {
                return Err(Error::EmptyReplacement { tag });
            }
            if replacements.insert(tag.clone(), replacement).is_some() {
                return Err(Error::DuplicateWord { word: tag });
            }
        }
        Ok(SubstitutionMap { replacements })
    }

    pub fn replacement_for(&self, tag: &str) -> Option<&str> {
        self.replacements.get(tag).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.replacements.iter().map(|(t, r)| (t.as_str(), r.as_str()))
    }

    pub fn len(&self) -> usize {
        self.replacements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.replacements.is_empty()
    }
}

/// The per-class substitution maps. A class map may be absent; it only
/// becomes an error when a deviated word of that class is encountered.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubstitutionMaps {
    pub positive: Option<SubstitutionMap>,
    pub negative: Option<SubstitutionMap>,
    pub neutral: Option<SubstitutionMap>,
}

impl SubstitutionMaps {
    pub fn for_class(&self, sentiment: Sentiment) -> Option<&SubstitutionMap> {
        match sentiment {
            Sentiment::Positive => self.positive.as_ref(),
            Sentiment::Negative => self.negative.as_ref(),
            Sentiment::Neutral => self.neutral.as_ref(),
        }
    }
}

/// Result of substituting one sentence: the rewritten sentence plus the
/// deviated `(word, tag)` occurrences that had no replacement for their
/// tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionOutcome {
    pub sentence: LabeledSentence,
    pub unmapped: Vec<(String, String)>,
}

/// Replaces every deviated token with the replacement its confirmed
/// sentiment class provides for the token's tag.
///
/// The sentence must carry part-of-speech tags. Token count, tags, label
/// and provenance are preserved. A missing class map for a needed class is
/// an error; a missing tag inside a present map just reports the token as
/// unmapped and leaves it unchanged.
pub fn substitute_deviated_tokens(
    sentence: &LabeledSentence,
    confirmed: &BTreeMap<String, Sentiment>,
    maps: &SubstitutionMaps,
) -> Result<SubstitutionOutcome> {
    let Some(tags) = sentence.pos_tags() else {
        return Err(Error::MissingPosTags);
    };
    let mut tokens = sentence.tokens.clone();
    let mut unmapped = Vec::new();
    for (token, tag) in tokens.iter_mut().zip(tags) {
        let lowered = token.to_lowercase();
        let Some(&sentiment) = confirmed.get(&lowered) else {
            continue;
        };
        let map = maps
            .for_class(sentiment)
            .ok_or(Error::MissingSubstitutionMap { sentiment })?;
        match map.replacement_for(tag) {
            Some(replacement) => *token = String::from(replacement),
            None => unmapped.push((lowered, tag.clone())),
        }
    }
    Ok(SubstitutionOutcome {
        sentence: LabeledSentence {
            tokens,
            pos_tags: sentence.pos_tags.clone(),
            label: sentence.label,
            provenance: sentence.provenance,
        },
        unmapped,
    })
}
