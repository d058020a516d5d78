//! Seed partitions, scored lexicons and antonym lists.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;

use crate::error::Error;
use crate::sentiment::{FiveClassLabel, Sentiment};
use crate::Result;

/// The working vocabulary split into positive, negative and neutral seed
/// sets according to source-domain labels. The three sets are disjoint and
/// together cover exactly the words the partition was built from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeedPartition {
    positive: BTreeSet<String>,
    negative: BTreeSet<String>,
    neutral: BTreeSet<String>,
}

impl SeedPartition {
    /// Splits `words` by their five-class source label: the positive labels
    /// go to the positive set, the negative ones to the negative set, and
    /// neutral stays neutral. A word without a label is an error.
    pub fn from_labels(
        labels: &BTreeMap<String, FiveClassLabel>,
        words: &BTreeSet<String>,
    ) -> Result<Self> {
        let mut partition = SeedPartition::default();
        for word in words {
            let label = labels
                .get(word)
                .ok_or_else(|| Error::MissingLabel { word: word.clone() })?;
            match label.collapse() {
                Sentiment::Positive => partition.positive.insert(word.clone()),
                Sentiment::Negative => partition.negative.insert(word.clone()),
                Sentiment::Neutral => partition.neutral.insert(word.clone()),
            };
        }
        Ok(partition)
    }

    /// Builds a partition from already-split sets, rejecting overlap.
    pub fn from_sets(
        positive: BTreeSet<String>,
        negative: BTreeSet<String>,
        neutral: BTreeSet<String>,
    ) -> Result<Self> {
        for word in &positive {
            if negative.contains(word) || neutral.contains(word) {
                return Err(Error::DuplicateWord { word: word.clone() });
            }
        }
        for word in &negative {
            if neutral.contains(word) {
                return Err(Error::DuplicateWord { word: word.clone() });
            }
        }
        Ok(SeedPartition { positive, negative, neutral })
    }

    pub fn positive(&self) -> &BTreeSet<String> {
        &self.positive
    }

    pub fn negative(&self) -> &BTreeSet<String> {
        &self.negative
    }

    pub fn neutral(&self) -> &BTreeSet<String> {
        &self.neutral
    }

    /// The seed sentiment of a word, if it is covered by the partition.
    pub fn sentiment_of(&self, word: &str) -> Option<Sentiment> {
        if self.positive.contains(word) {
            Some(Sentiment::Positive)
        } else if self.negative.contains(word) {
            Some(Sentiment::Negative)
        } else if self.neutral.contains(word) {
            Some(Sentiment::Neutral)
        } else {
            None
        }
    }

    pub fn contains(&self, word: &str) -> bool {
        self.sentiment_of(word).is_some()
    }

    /// All covered words in lexicographic order.
    pub fn words(&self) -> impl Iterator<Item = &str> {
        // The sets are disjoint, so a merge of the three sorted iterators
        // would also work; chaining and sorting via collect is simpler and
        // these sets are small.
        let mut all: alloc::vec::Vec<&str> = self
            .positive
            .iter()
            .chain(&self.negative)
            .chain(&self.neutral)
            .map(String::as_str)
            .collect();
        all.sort_unstable();
        all.into_iter()
    }

    pub fn len(&self) -> usize {
        self.positive.len() + self.negative.len() + self.neutral.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A word list with integer valence scores; the sign carries the polarity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScoredLexicon {
    scores: BTreeMap<String, i8>,
}

impl ScoredLexicon {
    /// Collects `(word, score)` pairs, rejecting out-of-range scores and
    /// duplicate words.
    pub fn from_scores(pairs: impl IntoIterator<Item = (String, i8)>) -> Result<Self> {
        let mut scores = BTreeMap::new();
        for (word, score) in pairs {
            if !(-5..=5).contains(&score) {
                return Err(Error::ScoreOutOfRange { word, score: score as i64 });
            }
            if scores.insert(word.clone(), score).is_some() {
                return Err(Error::DuplicateWord { word });
            }
        }
        Ok(ScoredLexicon { scores })
    }

    pub fn contains(&self, word: &str) -> bool {
        self.scores.contains_key(word)
    }

    pub fn score(&self, word: &str) -> Option<i8> {
        self.scores.get(word).copied()
    }

    /// Sentiment by sign: positive scores are positive, negative scores
    /// negative, zero neutral.
    pub fn sentiment(&self, word: &str) -> Option<Sentiment> {
        self.score(word).map(|s| match s {
            1.. => Sentiment::Positive,
            0 => Sentiment::Neutral,
            _ => Sentiment::Negative,
        })
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }
}

/// Unordered antonym pairs. `are_antonyms(a, b)` is symmetric; self-pairs
/// are rejected at construction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AntonymList {
    pairs: BTreeSet<(String, String)>,
}

impl AntonymList {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (String, String)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if a == b {
                return Err(Error::SelfAntonym { word: a });
            }
            let pair = if a < b { (a, b) } else { (b, a) };
            set.insert(pair);
        }
        Ok(AntonymList { pairs: set })
    }

    pub fn are_antonyms(&self, a: &str, b: &str) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        // BTreeSet<(String, String)> cannot be probed with (&str, &str)
        // directly; a linear scan is fine at antonym-list sizes.
        self.pairs.iter().any(|(x, y)| (x.as_str(), y.as_str()) == key)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}
