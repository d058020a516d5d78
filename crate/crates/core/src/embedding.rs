//! Embedding spaces with deterministic cosine queries.
//!
//! Vectors are unit-normalized once at construction, so cosine similarity
//! reduces to a dot product. Dot products run over components in index
//! order and IEEE multiplication commutes, which makes `cosine(u, v)` and
//! `cosine(v, u)` bitwise equal. Nearest-neighbour queries scan the whole
//! vocabulary in lexicographic order and keep the first maximum, so ties
//! resolve to the alphabetically smallest word.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use core::fmt;

use crate::error::Error;
use crate::float;
use crate::Result;

/// Which of the three embedding spaces a word was looked up in. Only used
/// for error reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainTag {
    /// The domain being adapted to (unlabelled text).
    Target,
    /// The domain the seed lexicon comes from.
    Source,
    /// A general-purpose space used to compare against both domains.
    Bridge,
}

impl fmt::Display for DomainTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DomainTag::Target => "target",
            DomainTag::Source => "source",
            DomainTag::Bridge => "bridge",
        })
    }
}

/// An immutable set of unit-normalized word vectors of one dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingSpace {
    domain: DomainTag,
    dimension: usize,
    vectors: BTreeMap<String, Vec<f64>>,
}

impl EmbeddingSpace {
    /// Builds a space from raw vectors, normalizing each to unit length.
    ///
    /// Zero-norm vectors cannot be normalized; they are skipped and their
    /// words returned so callers can warn about them. Wrong dimensions,
    /// non-finite components, unnormalizable norms and duplicate words are
    /// hard errors. A space with no usable vector is also an error.
    pub fn new(
        domain: DomainTag,
        dimension: usize,
        entries: impl IntoIterator<Item = (String, Vec<f64>)>,
    ) -> Result<(Self, Vec<String>)> {
        let mut vectors = BTreeMap::new();
        let mut skipped = Vec::new();
        for (word, vector) in entries {
            if vector.len() != dimension {
                return Err(Error::DimensionMismatch {
                    word,
                    expected: dimension,
                    actual: vector.len(),
                });
            }
            if vector.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFiniteComponent { word });
            }
            let norm = float::sqrt(vector.iter().map(|x| x * x).sum());
            if norm == 0.0 {
                skipped.push(word);
                continue;
            }
            if !norm.is_finite() {
                return Err(Error::DegenerateVector { word });
            }
            let unit: Vec<f64> = vector.iter().map(|x| x / norm).collect();
            if vectors.insert(word.clone(), unit).is_some() {
                return Err(Error::DuplicateWord { word });
            }
        }
        if vectors.is_empty() {
            return Err(Error::EmptySpace);
        }
        Ok((EmbeddingSpace { domain, dimension, vectors }, skipped))
    }

    pub fn domain(&self) -> DomainTag {
        self.domain
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of usable (non-skipped) words.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.vectors.contains_key(word)
    }

    /// Words in lexicographic order.
    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.vectors.keys().map(String::as_str)
    }

    /// The stored unit vector for a word.
    pub fn vector(&self, word: &str) -> Option<&[f64]> {
        self.vectors.get(word).map(Vec::as_slice)
    }

    fn unit(&self, word: &str) -> Result<&[f64]> {
        self.vector(word).ok_or_else(|| Error::OutOfVocabulary {
            word: String::from(word),
            domain: self.domain,
        })
    }

    /// Cosine similarity between two stored words, clamped to `[-1, 1]`.
    pub fn cosine(&self, left: &str, right: &str) -> Result<f64> {
        let u = self.unit(left)?;
        let v = self.unit(right)?;
        Ok(dot(u, v).clamp(-1.0, 1.0))
    }

    /// The word (other than `word` itself) with the highest cosine
    /// similarity to `word`. Ties break to the alphabetically smaller word.
    pub fn most_similar(&self, word: &str) -> Result<&str> {
        let query = self.unit(word)?;
        let mut best: Option<(&str, f64)> = None;
        for (candidate, vector) in &self.vectors {
            if candidate == word {
                continue;
            }
            let score = dot(query, vector);
            match best {
                Some((_, top)) if score <= top => {}
                _ => best = Some((candidate, score)),
            }
        }
        best.map(|(w, _)| w).ok_or_else(|| Error::NoCandidate { word: String::from(word) })
    }

    /// Like [`most_similar`](Self::most_similar), but only words in
    /// `allowed` compete. Words missing from the space are ignored.
    pub fn most_similar_among(&self, word: &str, allowed: &BTreeSet<String>) -> Result<&str> {
        let query = self.unit(word)?;
        let mut best: Option<(&str, f64)> = None;
        for candidate in allowed {
            if candidate == word {
                continue;
            }
            // get_key_value ties the returned name to the space, not to
            // the candidate set.
            let Some((stored, vector)) = self.vectors.get_key_value(candidate) else { continue };
            let score = dot(query, vector);
            match best {
                Some((_, top)) if score <= top => {}
                _ => best = Some((stored.as_str(), score)),
            }
        }
        best.map(|(w, _)| w).ok_or_else(|| Error::NoCandidate { word: String::from(word) })
    }
}

fn dot(u: &[f64], v: &[f64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn space(entries: &[(&str, &[f64])]) -> EmbeddingSpace {
        let dim = entries[0].1.len();
        let (space, skipped) = EmbeddingSpace::new(
            DomainTag::Target,
            dim,
            entries.iter().map(|(w, v)| (w.to_string(), v.to_vec())),
        )
        .unwrap();
        assert!(skipped.is_empty());
        space
    }

    #[test]
    fn vectors_are_normalized_at_load() {
        let s = space(&[("a", &[3.0, 4.0]), ("b", &[0.0, 2.0])]);
        let v = s.vector("a").unwrap();
        assert!((v[0] - 0.6).abs() < 1e-15);
        assert!((v[1] - 0.8).abs() < 1e-15);
    }

    #[test]
    fn zero_norm_vectors_are_skipped() {
        let (s, skipped) = EmbeddingSpace::new(
            DomainTag::Source,
            2,
            vec![("ok".to_string(), vec![1.0, 0.0]), ("zero".to_string(), vec![0.0, 0.0])],
        )
        .unwrap();
        assert_eq!(skipped, vec!["zero".to_string()]);
        assert!(!s.contains("zero"));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn all_zero_vectors_leave_no_space() {
        let err = EmbeddingSpace::new(DomainTag::Bridge, 1, vec![("z".to_string(), vec![0.0])])
            .unwrap_err();
        assert_eq!(err, Error::EmptySpace);
    }

    #[test]
    fn construction_errors() {
        let dim = EmbeddingSpace::new(DomainTag::Target, 2, vec![("a".to_string(), vec![1.0])]);
        assert!(matches!(dim, Err(Error::DimensionMismatch { expected: 2, actual: 1, .. })));

        let nan = EmbeddingSpace::new(DomainTag::Target, 1, vec![("a".to_string(), vec![f64::NAN])]);
        assert!(matches!(nan, Err(Error::NonFiniteComponent { .. })));

        let dup = EmbeddingSpace::new(
            DomainTag::Target,
            1,
            vec![("a".to_string(), vec![1.0]), ("a".to_string(), vec![2.0])],
        );
        assert!(matches!(dup, Err(Error::DuplicateWord { .. })));

        // Finite components whose squared sum overflows cannot be normalized.
        let huge = EmbeddingSpace::new(DomainTag::Target, 1, vec![("a".to_string(), vec![1e300])]);
        assert!(matches!(huge, Err(Error::DegenerateVector { .. })));
    }

    #[test]
    fn cosine_matches_hand_values() {
        let s = space(&[("x", &[1.0, 0.0]), ("y", &[0.0, 1.0]), ("d", &[1.0, 1.0]), ("nx", &[-1.0, 0.0])]);
        assert!((s.cosine("x", "x").unwrap() - 1.0).abs() <= 1e-9);
        assert_eq!(s.cosine("x", "y").unwrap(), 0.0);
        assert!((s.cosine("x", "d").unwrap() - 0.7071067811865475).abs() <= 1e-9);
        assert_eq!(s.cosine("x", "nx").unwrap(), -1.0);
    }

    #[test]
    fn cosine_is_exactly_symmetric() {
        let s = space(&[("u", &[0.3, -1.7, 2.9]), ("v", &[-0.4, 0.11, 5.3])]);
        assert_eq!(s.cosine("u", "v").unwrap(), s.cosine("v", "u").unwrap());
    }

    #[test]
    fn oov_reports_the_domain() {
        let s = space(&[("a", &[1.0]), ("b", &[1.0])]);
        let err = s.cosine("a", "missing").unwrap_err();
        assert_eq!(
            err,
            Error::OutOfVocabulary { word: "missing".to_string(), domain: DomainTag::Target }
        );
    }

    #[test]
    fn most_similar_never_returns_the_query() {
        let s = space(&[("a", &[1.0, 0.0]), ("b", &[0.9, 0.1]), ("c", &[0.0, 1.0])]);
        assert_eq!(s.most_similar("a").unwrap(), "b");
        assert_eq!(s.most_similar("c").unwrap(), "b");
    }

    #[test]
    fn most_similar_breaks_ties_alphabetically() {
        // "m" and "z" are the same vector, both at equal similarity to "a".
        let s = space(&[("a", &[1.0, 0.0]), ("z", &[1.0, 1.0]), ("m", &[1.0, 1.0])]);
        assert_eq!(s.most_similar("a").unwrap(), "m");
    }

    #[test]
    fn most_similar_requires_a_candidate() {
        let s = space(&[("only", &[1.0])]);
        assert_eq!(s.most_similar("only").unwrap_err(), Error::NoCandidate { word: "only".to_string() });
    }

    #[test]
    fn rescaling_does_not_change_neighbours() {
        let base = space(&[("a", &[1.0, 0.2]), ("b", &[0.8, 0.3]), ("c", &[-0.1, 0.9])]);
        let scaled = space(&[("a", &[7.0, 1.4]), ("b", &[0.08, 0.03]), ("c", &[-30.0, 270.0])]);
        for w in ["a", "b", "c"] {
            assert_eq!(base.most_similar(w).unwrap(), scaled.most_similar(w).unwrap());
        }
    }

    #[test]
    fn restricted_query_ignores_words_outside_the_set() {
        let s = space(&[("a", &[1.0, 0.0]), ("b", &[0.99, 0.1]), ("c", &[0.5, 0.5])]);
        let allowed: BTreeSet<String> = ["a", "c"].map(String::from).into_iter().collect();
        assert_eq!(s.most_similar_among("a", &allowed).unwrap(), "c");
        let only_self: BTreeSet<String> = ["a"].map(String::from).into_iter().collect();
        assert!(matches!(s.most_similar_among("a", &only_self), Err(Error::NoCandidate { .. })));
    }
}
