//! Tokenized corpora, frequency tables and the coverage-based vocabulary
//! cutoff.
//!
//! A corpus is one sentence per line. Tokenization is deliberately plain:
//! whitespace splitting, optional lowercasing and optional stripping of
//! leading/trailing punctuation. The interesting operation is
//! [`select_vocabulary`], which keeps the smallest frequency-ranked prefix
//! of the vocabulary whose occurrences cover a requested fraction of all
//! tokens.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::Result;

/// Tokenization switches. Both default to `true`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TokenizerRules {
    /// Lowercase every token.
    pub lowercase: bool,
    /// Strip leading and trailing non-alphanumeric characters.
    pub strip_punctuation: bool,
}

impl Default for TokenizerRules {
    fn default() -> Self {
        TokenizerRules { lowercase: true, strip_punctuation: true }
    }
}

/// A corpus as a list of token lists, one per sentence.
///
/// Tokens are non-empty and contain no whitespace; sentences that end up
/// with no tokens during tokenization are dropped, but stopword removal may
/// leave sentences empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TokenizedCorpus {
    sentences: Vec<Vec<String>>,
}

impl TokenizedCorpus {
    /// Wraps pre-tokenized sentences, rejecting empty tokens and tokens
    /// with embedded whitespace.
    pub fn from_sentences(sentences: Vec<Vec<String>>) -> Result<Self> {
        for sentence in &sentences {
            for token in sentence {
                if token.is_empty() || token.chars().any(char::is_whitespace) {
                    return Err(Error::InvalidToken { token: token.clone() });
                }
            }
        }
        Ok(TokenizedCorpus { sentences })
    }

    pub fn sentences(&self) -> &[Vec<String>] {
        &self.sentences
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn total_tokens(&self) -> usize {
        self.sentences.iter().map(Vec::len).sum()
    }
}

/// Splits raw text into a [`TokenizedCorpus`], one sentence per line.
///
/// Tokens that become empty after punctuation stripping are dropped, as are
/// lines without any surviving token. A lone `\r` before the line break is
/// treated as line-ending noise, not token content.
pub fn tokenize(raw: &str, rules: &TokenizerRules) -> TokenizedCorpus {
    let mut sentences = Vec::new();
    for line in raw.lines() {
        let mut tokens = Vec::new();
        for piece in line.split_whitespace() {
            let trimmed = if rules.strip_punctuation {
                piece.trim_matches(|c: char| !c.is_alphanumeric())
            } else {
                piece
            };
            if trimmed.is_empty() {
                continue;
            }
            if rules.lowercase {
                tokens.push(trimmed.to_lowercase());
            } else {
                tokens.push(String::from(trimmed));
            }
        }
        if !tokens.is_empty() {
            sentences.push(tokens);
        }
    }
    TokenizedCorpus { sentences }
}

/// A set of words to exclude from frequency counting.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StopwordList {
    words: BTreeSet<String>,
}

impl StopwordList {
    pub fn new(words: impl IntoIterator<Item = String>) -> Self {
        StopwordList { words: words.into_iter().collect() }
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Removes every stopword token from every sentence. Sentence count and
/// order are preserved even when a sentence loses all of its tokens.
pub fn remove_stopwords(corpus: &TokenizedCorpus, stopwords: &StopwordList) -> TokenizedCorpus {
    let sentences = corpus
        .sentences
        .iter()
        .map(|sentence| sentence.iter().filter(|t| !stopwords.contains(t)).cloned().collect())
        .collect();
    TokenizedCorpus { sentences }
}

/// Words ranked by descending occurrence count; ties break alphabetically.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrequencyTable {
    entries: Vec<(String, u64)>,
}

impl FrequencyTable {
    /// Builds a table from raw word counts. Zero counts are rejected,
    /// duplicate words are rejected, and the result is ranked by
    /// descending count with alphabetical tie-breaks.
    pub fn from_counts(counts: impl IntoIterator<Item = (String, u64)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut entries = Vec::new();
        for (word, count) in counts {
            if count == 0 {
                return Err(Error::ZeroCount { word });
            }
            if !seen.insert(word.clone()) {
                return Err(Error::DuplicateWord { word });
            }
            entries.push((word, count));
        }
        entries.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        Ok(FrequencyTable { entries })
    }

    /// Ranked `(word, count)` pairs.
    pub fn entries(&self) -> &[(String, u64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all counts.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|(_, c)| c).sum()
    }

    /// The counts as a lookup map.
    pub fn to_counts(&self) -> BTreeMap<String, u64> {
        self.entries.iter().cloned().collect()
    }
}

/// Counts token occurrences across the whole corpus.
pub fn build_frequency_table(corpus: &TokenizedCorpus) -> FrequencyTable {
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for sentence in &corpus.sentences {
        for token in sentence {
            *counts.entry(token.clone()).or_insert(0) += 1;
        }
    }
    let mut entries: Vec<(String, u64)> = counts.into_iter().collect();
    entries.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    FrequencyTable { entries }
}

/// Occurrences of one word in the corpus.
pub fn word_frequency(corpus: &TokenizedCorpus, word: &str) -> u64 {
    corpus
        .sentences
        .iter()
        .map(|sentence| sentence.iter().filter(|t| t.as_str() == word).count() as u64)
        .sum()
}

/// The vocabulary kept by [`select_vocabulary`]: the first `k` ranked words.
#[derive(Clone, Debug, PartialEq)]
pub struct VocabularySelection {
    k: usize,
    selected: Vec<(String, u64)>,
    coverage: f64,
    covered: u64,
    total: u64,
}

impl VocabularySelection {
    /// Number of words kept.
    pub fn k(&self) -> usize {
        self.k
    }

    /// The kept `(word, count)` pairs, still in rank order.
    pub fn selected(&self) -> &[(String, u64)] {
        &self.selected
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.selected.iter().map(|(w, _)| w.as_str())
    }

    pub fn word_set(&self) -> BTreeSet<String> {
        self.selected.iter().map(|(w, _)| w.clone()).collect()
    }

    /// The coverage fraction that was requested.
    pub fn requested_coverage(&self) -> f64 {
        self.coverage
    }

    /// The fraction of tokens actually covered by the kept words.
    pub fn achieved_coverage(&self) -> f64 {
        self.covered as f64 / self.total as f64
    }
}

/// Keeps the smallest frequency-ranked prefix whose counts sum to at least
/// `coverage` of all tokens.
///
/// `coverage` must lie in `(0, 1]` and the table must be non-empty. The
/// comparison is `prefix_sum as f64 >= coverage * total as f64`; because
/// the full prefix always satisfies it, a cutoff always exists.
pub fn select_vocabulary(table: &FrequencyTable, coverage: f64) -> Result<VocabularySelection> {
    if table.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !(coverage > 0.0 && coverage <= 1.0) {
        return Err(Error::InvalidCoverage { value: coverage });
    }
    let total = table.total();
    let needed = coverage * total as f64;
    let mut prefix_sum = 0u64;
    let mut k = table.len();
    for (i, (_, count)) in table.entries.iter().enumerate() {
        prefix_sum += count;
        if prefix_sum as f64 >= needed {
            k = i + 1;
            break;
        }
    }
    let selected: Vec<(String, u64)> = table.entries[..k].to_vec();
    let covered = selected.iter().map(|(_, c)| c).sum();
    Ok(VocabularySelection { k, selected, coverage, covered, total })
}
