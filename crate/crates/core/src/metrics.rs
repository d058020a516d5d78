//! Evaluation: three-class confusion matrices with per-class precision,
//! recall and F-measure, and lexicon-against-gold composition tables.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::float;
use crate::sentiment::Sentiment;
use crate::Result;

/// Counts of (gold, predicted) pairs. Rows are gold classes, columns are
/// predictions, both in canonical class order (negative, neutral,
/// positive).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfusionMatrix {
    counts: [[u64; 3]; 3],
}

impl ConfusionMatrix {
    /// Builds the matrix from aligned gold and predicted label slices.
    pub fn from_pairs(gold: &[Sentiment], predicted: &[Sentiment]) -> Result<Self> {
        if gold.len() != predicted.len() {
            return Err(Error::LengthMismatch { expected: gold.len(), actual: predicted.len() });
        }
        if gold.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut counts = [[0u64; 3]; 3];
        for (g, p) in gold.iter().zip(predicted) {
            counts[g.index()][p.index()] += 1;
        }
        Ok(ConfusionMatrix { counts })
    }

    /// Builds the matrix directly from counts (rows gold, columns
    /// predicted).
    pub fn from_counts(counts: [[u64; 3]; 3]) -> Result<Self> {
        if counts.iter().flatten().all(|&c| c == 0) {
            return Err(Error::EmptyInput);
        }
        Ok(ConfusionMatrix { counts })
    }

    pub fn counts(&self) -> &[[u64; 3]; 3] {
        &self.counts
    }

    pub fn count(&self, gold: Sentiment, predicted: Sentiment) -> u64 {
        self.counts[gold.index()][predicted.index()]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    /// Number of items whose gold class is `class` (row sum).
    pub fn gold_total(&self, class: Sentiment) -> u64 {
        self.counts[class.index()].iter().sum()
    }

    /// Number of items predicted as `class` (column sum).
    pub fn predicted_total(&self, class: Sentiment) -> u64 {
        self.counts.iter().map(|row| row[class.index()]).sum()
    }

    /// Fraction of items on the diagonal.
    pub fn accuracy(&self) -> f64 {
        let trace: u64 = Sentiment::ALL.iter().map(|&c| self.count(c, c)).sum();
        trace as f64 / self.total() as f64
    }

    pub fn class_metrics(&self, class: Sentiment) -> ClassScores {
        let tp = self.count(class, class);
        let predicted = self.predicted_total(class);
        let gold = self.gold_total(class);
        let mut degenerate = false;
        let precision = if predicted == 0 {
            degenerate = true;
            0.0
        } else {
            tp as f64 / predicted as f64
        };
        let recall = if gold == 0 {
            degenerate = true;
            0.0
        } else {
            tp as f64 / gold as f64
        };
        let f_measure = if precision + recall == 0.0 {
            degenerate = true;
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        ClassScores { precision, recall, f_measure, degenerate }
    }

    /// Metrics for all classes in canonical order.
    pub fn all_class_metrics(&self) -> [ClassScores; 3] {
        [
            self.class_metrics(Sentiment::Negative),
            self.class_metrics(Sentiment::Neutral),
            self.class_metrics(Sentiment::Positive),
        ]
    }
}

/// Per-class scores. `degenerate` marks classes where a denominator was
/// zero; the affected scores are reported as 0 and should not be averaged
/// blindly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassScores {
    pub precision: f64,
    pub recall: f64,
    pub f_measure: f64,
    pub degenerate: bool,
}

/// One word list measured against gold word sentiments.
#[derive(Clone, Debug, PartialEq)]
pub struct LexiconComparisonRow {
    pub name: String,
    pub size: usize,
    /// How many listed words are gold-negative, -neutral, -positive.
    pub counts: [u64; 3],
    /// `counts` divided by `size` (zeros for an empty list).
    pub fractions: [f64; 3],
    /// Fractions as whole percentages, rounded half away from zero.
    pub percentages: [u32; 3],
}

/// Composition of several word lists with respect to gold sentiments.
#[derive(Clone, Debug, PartialEq)]
pub struct LexiconComparison {
    pub rows: Vec<LexiconComparisonRow>,
}

/// Measures, for each named word list, what fraction of its words fall in
/// each gold class. Every listed word must have a gold label.
pub fn compare_lexicons(
    gold: &BTreeMap<String, Sentiment>,
    lists: &[(String, BTreeSet<String>)],
) -> Result<LexiconComparison> {
    let mut rows = Vec::with_capacity(lists.len());
    for (name, words) in lists {
        let mut counts = [0u64; 3];
        for word in words {
            let sentiment = gold
                .get(word)
                .ok_or_else(|| Error::MissingGoldLabel { word: word.clone() })?;
            counts[sentiment.index()] += 1;
        }
        let size = words.len();
        let mut fractions = [0.0f64; 3];
        let mut percentages = [0u32; 3];
        if size > 0 {
            for i in 0..3 {
                fractions[i] = counts[i] as f64 / size as f64;
                percentages[i] = float::round(fractions[i] * 100.0) as u32;
            }
        }
        rows.push(LexiconComparisonRow {
            name: name.clone(),
            size,
            counts,
            fractions,
            percentages,
        });
    }
    Ok(LexiconComparison { rows })
}
