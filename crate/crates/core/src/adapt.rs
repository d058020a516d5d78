//! The sentiment reassignment rules, deviation tracking, annotation
//! worklists and expert-confirmed deviation sets.
//!
//! Words enter with a seed sentiment from the source domain and leave with
//! a target-domain sentiment plus the identifier of the rule that decided
//! it. Neutral seeds and polar seeds run through different rule chains:
//!
//! Neutral seed words (`adapt_neutral_words`):
//!
//! * R1: under-represented or domain-specific words that the scored
//!   lexicon can vouch for (positive affinity gap) take the lexicon's
//!   polar sentiment.
//! * R2: otherwise, if the target neighbour is domain generic, not an
//!   antonym, and carries a polar seed sentiment, that sentiment transfers.
//! * R3: otherwise the word stays neutral.
//!
//! Polar seed words (`adapt_polar_words`):
//!
//! * R4: domain-generic words keep their seed sentiment untouched.
//! * R5: domain-specific words whose generic, non-antonym target neighbour
//!   carries the opposite polarity flip to it.
//! * R5b: the same configuration with the same polarity keeps the seed
//!   sentiment, corroborated by the neighbour.
//! * R6: otherwise a vouching scored lexicon assigns its polar sentiment.
//! * R7: otherwise the word falls back to neutral.
//!
//! R1-before-R2 is configurable (see [`RulePrecedence`]); the polar chain
//! order is fixed. Rule identifiers always name the rule that fired, not
//! its evaluation position.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::lexicon::{ScoredLexicon, SeedPartition};
use crate::profile::WordProfile;
use crate::sentiment::Sentiment;
use crate::Result;

/// Which rule of the reassignment table decided a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R5b,
    R6,
    R7,
}

impl RuleId {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R4 => "R4",
            RuleId::R5 => "R5",
            RuleId::R5b => "R5b",
            RuleId::R6 => "R6",
            RuleId::R7 => "R7",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R1" => Ok(RuleId::R1),
            "R2" => Ok(RuleId::R2),
            "R3" => Ok(RuleId::R3),
            "R4" => Ok(RuleId::R4),
            "R5" => Ok(RuleId::R5),
            "R5b" => Ok(RuleId::R5b),
            "R6" => Ok(RuleId::R6),
            "R7" => Ok(RuleId::R7),
            other => Err(Error::UnknownLabel { label: String::from(other) }),
        }
    }
}

/// Order in which the lexicon rule (R1) and the neighbour rule (R2)
/// compete for a neutral seed word that satisfies both.
///
/// The hand-curated lexicon is preferred by default; neighbour-first
/// exists so the two orders can be compared.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RulePrecedence {
    #[default]
    LexiconFirst,
    NeighborFirst,
}

/// Which neutral seed words rule R2 may touch.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NeighborTransferScope {
    /// R2 applies to every neutral seed word.
    #[default]
    AllWords,
    /// R2 only applies to words that are under-represented or domain
    /// specific, mirroring R1's eligibility.
    SpecificOrUnderRepresented,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AdaptOptions {
    pub precedence: RulePrecedence,
    pub neutral_scope: NeighborTransferScope,
}

/// A decided word: its new sentiment and the rule that fired.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub word: String,
    pub sentiment: Sentiment,
    pub rule: RuleId,
}

/// Neutral seed words that left neutrality, split by direction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeviationSets {
    to_negative: BTreeSet<String>,
    to_positive: BTreeSet<String>,
}

impl DeviationSets {
    pub fn to_negative(&self) -> &BTreeSet<String> {
        &self.to_negative
    }

    pub fn to_positive(&self) -> &BTreeSet<String> {
        &self.to_positive
    }

    pub fn len(&self) -> usize {
        self.to_negative.len() + self.to_positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_negative.is_empty() && self.to_positive.is_empty()
    }
}

fn profile_of<'a>(
    profiles: &'a BTreeMap<String, WordProfile>,
    word: &str,
) -> Result<&'a WordProfile> {
    profiles.get(word).ok_or_else(|| Error::MissingProfile { word: String::from(word) })
}

/// The polar sentiment the scored lexicon vouches for, if any (R1/R6
/// payload).
fn lexicon_rule(profile: &WordProfile, scored: &ScoredLexicon) -> Option<Sentiment> {
    if !profile.lexicon_assignable {
        return None;
    }
    scored.sentiment(&profile.word).filter(|s| s.is_polar())
}

/// The polar seed sentiment transferable from the target neighbour, if the
/// neighbour is domain generic and not an antonym (R2/R5/R5b payload).
/// Needs the neighbour's own profile, so it can fail.
fn neighbor_rule(
    profile: &WordProfile,
    profiles: &BTreeMap<String, WordProfile>,
) -> Result<Option<Sentiment>> {
    let Some(neighbor) = profile.target_neighbor.as_deref() else {
        return Ok(None);
    };
    if !profile.not_antonyms {
        return Ok(None);
    }
    let Some(sentiment) = profile.neighbor_seed_sentiment.filter(|s| s.is_polar()) else {
        return Ok(None);
    };
    let neighbor_profile = profile_of(profiles, neighbor)?;
    Ok(neighbor_profile.domain_generic.then_some(sentiment))
}

/// Runs the neutral-seed rule chain (R1, R2, R3) over `neutral` in
/// lexicographic order.
///
/// Every word, and every target neighbour a fired R2 inspects, must have a
/// profile. Alongside the assignments the deviation sets record which
/// words left neutrality in which direction.
pub fn adapt_neutral_words(
    neutral: &BTreeSet<String>,
    profiles: &BTreeMap<String, WordProfile>,
    scored: &ScoredLexicon,
    options: &AdaptOptions,
) -> Result<(Vec<Assignment>, DeviationSets)> {
    let mut assignments = Vec::with_capacity(neutral.len());
    let mut deviations = DeviationSets::default();
    for word in neutral {
        let profile = profile_of(profiles, word)?;
        let eligible = profile.under_represented || profile.domain_specific();
        let in_scope = match options.neutral_scope {
            NeighborTransferScope::AllWords => true,
            NeighborTransferScope::SpecificOrUnderRepresented => eligible,
        };

        let from_lexicon =
            |p: &WordProfile| eligible.then(|| lexicon_rule(p, scored)).flatten();
        let decided = match options.precedence {
            RulePrecedence::LexiconFirst => match from_lexicon(profile) {
                Some(s) => Some((s, RuleId::R1)),
                None if in_scope => neighbor_rule(profile, profiles)?.map(|s| (s, RuleId::R2)),
                None => None,
            },
            RulePrecedence::NeighborFirst => {
                let transferred = if in_scope { neighbor_rule(profile, profiles)? } else { None };
                match transferred {
                    Some(s) => Some((s, RuleId::R2)),
                    None => from_lexicon(profile).map(|s| (s, RuleId::R1)),
                }
            }
        };
        let (sentiment, rule) = decided.unwrap_or((Sentiment::Neutral, RuleId::R3));

        match sentiment {
            Sentiment::Negative => {
                deviations.to_negative.insert(word.clone());
            }
            Sentiment::Positive => {
                deviations.to_positive.insert(word.clone());
            }
            Sentiment::Neutral => {}
        }
        assignments.push(Assignment { word: word.clone(), sentiment, rule });
    }
    Ok((assignments, deviations))
}

/// Runs the polar-seed rule chain (R4, R5/R5b, R6, R7): first the positive
/// seed words, then the negative ones, each in lexicographic order.
pub fn adapt_polar_words(
    positive: &BTreeSet<String>,
    negative: &BTreeSet<String>,
    profiles: &BTreeMap<String, WordProfile>,
    scored: &ScoredLexicon,
) -> Result<Vec<Assignment>> {
    let mut assignments = Vec::with_capacity(positive.len() + negative.len());
    let both = positive
        .iter()
        .map(|w| (w, Sentiment::Positive))
        .chain(negative.iter().map(|w| (w, Sentiment::Negative)));
    for (word, seed_sentiment) in both {
        let profile = profile_of(profiles, word)?;
        let (sentiment, rule) = if profile.domain_generic {
            (seed_sentiment, RuleId::R4)
        } else if let Some(transferred) = neighbor_rule(profile, profiles)? {
            if transferred == seed_sentiment {
                (seed_sentiment, RuleId::R5b)
            } else {
                (transferred, RuleId::R5)
            }
        } else if let Some(vouched) = lexicon_rule(profile, scored) {
            (vouched, RuleId::R6)
        } else {
            (Sentiment::Neutral, RuleId::R7)
        };
        assignments.push(Assignment { word: word.clone(), sentiment, rule });
    }
    Ok(assignments)
}

/// Runs both rule chains over a seed partition: the neutral set first,
/// then the polar sets.
pub fn adapt_seed_partition(
    seed: &SeedPartition,
    profiles: &BTreeMap<String, WordProfile>,
    scored: &ScoredLexicon,
    options: &AdaptOptions,
) -> Result<(Vec<Assignment>, DeviationSets)> {
    let (mut assignments, deviations) =
        adapt_neutral_words(seed.neutral(), profiles, scored, options)?;
    assignments.extend(adapt_polar_words(seed.positive(), seed.negative(), profiles, scored)?);
    Ok((assignments, deviations))
}

/// The adapted lexicon: every seed word with its decided sentiment and the
/// rule that decided it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdaptedLexicon {
    entries: BTreeMap<String, (Sentiment, RuleId)>,
}

impl AdaptedLexicon {
    /// Rebuilds a lexicon from stored entries, e.g. a previous export.
    pub fn from_entries(
        entries: impl IntoIterator<Item = (String, Sentiment, RuleId)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (word, sentiment, rule) in entries {
            if map.insert(word.clone(), (sentiment, rule)).is_some() {
                return Err(Error::DuplicateWord { word });
            }
        }
        Ok(AdaptedLexicon { entries: map })
    }

    pub fn sentiment_of(&self, word: &str) -> Option<Sentiment> {
        self.entries.get(word).map(|(s, _)| *s)
    }

    pub fn rule_of(&self, word: &str) -> Option<RuleId> {
        self.entries.get(word).map(|(_, r)| *r)
    }

    /// Entries in word order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, Sentiment, RuleId)> {
        self.entries.iter().map(|(w, (s, r))| (w.as_str(), *s, *r))
    }

    /// All words assigned the given class.
    pub fn class_words(&self, sentiment: Sentiment) -> BTreeSet<String> {
        self.entries
            .iter()
            .filter(|(_, (s, _))| *s == sentiment)
            .map(|(w, _)| w.clone())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Collects assignments into an [`AdaptedLexicon`], checking that they
/// cover the seed partition exactly once.
pub fn build_adapted_lexicon(
    assignments: &[Assignment],
    seed: &SeedPartition,
) -> Result<AdaptedLexicon> {
    let mut entries = BTreeMap::new();
    for assignment in assignments {
        if !seed.contains(&assignment.word) {
            return Err(Error::UnexpectedWord { word: assignment.word.clone() });
        }
        if entries
            .insert(assignment.word.clone(), (assignment.sentiment, assignment.rule))
            .is_some()
        {
            return Err(Error::DuplicateWord { word: assignment.word.clone() });
        }
    }
    for word in seed.words() {
        if !entries.contains_key(word) {
            return Err(Error::MissingAssignment { word: String::from(word) });
        }
    }
    Ok(AdaptedLexicon { entries })
}

/// Reconstructs the deviation sets from an adapted lexicon: the words with
/// a neutral seed class but a polar adapted sentiment. Inverse of the
/// bookkeeping [`adapt_neutral_words`] does while it runs.
pub fn deviations_from_adapted(
    adapted: &AdaptedLexicon,
    seed: &SeedPartition,
) -> DeviationSets {
    let mut deviations = DeviationSets::default();
    for (word, sentiment, _) in adapted.iter() {
        if !seed.neutral().contains(word) {
            continue;
        }
        match sentiment {
            Sentiment::Negative => {
                deviations.to_negative.insert(String::from(word));
            }
            Sentiment::Positive => {
                deviations.to_positive.insert(String::from(word));
            }
            Sentiment::Neutral => {}
        }
    }
    deviations
}

/// One row of the annotation worklist handed to a domain expert.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorklistEntry {
    pub word: String,
    /// What the rules currently say; shown to the annotator as context.
    pub current: Sentiment,
    /// Optional example sentence from the target corpus.
    pub context: Option<String>,
}

/// The deduplicated, alphabetically ordered list of words that need expert
/// confirmation: every word that deviated from neutrality plus every polar
/// seed word.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnnotationWorklist {
    entries: Vec<WorklistEntry>,
}

impl AnnotationWorklist {
    /// Rebuilds a worklist from stored entries, e.g. a previous export.
    /// Entries are sorted by word; repeated words are rejected.
    pub fn from_entries(entries: impl IntoIterator<Item = WorklistEntry>) -> Result<Self> {
        let mut entries: Vec<WorklistEntry> = entries.into_iter().collect();
        entries.sort_by(|a, b| a.word.cmp(&b.word));
        for pair in entries.windows(2) {
            if pair[0].word == pair[1].word {
                return Err(Error::DuplicateWord { word: pair[0].word.clone() });
            }
        }
        Ok(AnnotationWorklist { entries })
    }

    pub fn entries(&self) -> &[WorklistEntry] {
        &self.entries
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.word.as_str())
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.binary_search_by(|e| e.word.as_str().cmp(word)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Fills the context column from a lookup, typically "first corpus
    /// sentence containing the word".
    pub fn attach_contexts(&mut self, mut lookup: impl FnMut(&str) -> Option<String>) {
        for entry in &mut self.entries {
            entry.context = lookup(&entry.word);
        }
    }
}

/// Builds the worklist for the deviation sets and the polar seed sets.
/// Every listed word must already have an adapted sentiment.
pub fn build_worklist(
    deviations: &DeviationSets,
    seed: &SeedPartition,
    adapted: &AdaptedLexicon,
) -> Result<AnnotationWorklist> {
    let mut words: BTreeSet<&String> = BTreeSet::new();
    words.extend(&deviations.to_negative);
    words.extend(&deviations.to_positive);
    words.extend(seed.positive());
    words.extend(seed.negative());

    let mut entries = Vec::with_capacity(words.len());
    for word in words {
        let current = adapted
            .sentiment_of(word)
            .ok_or_else(|| Error::MissingAssignment { word: word.clone() })?;
        entries.push(WorklistEntry { word: word.clone(), current, context: None });
    }
    Ok(AnnotationWorklist { entries })
}

/// Expert labels for the worklist, partitioned by class. Together the
/// three sets cover the worklist exactly.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnnotatedSets {
    positive: BTreeSet<String>,
    negative: BTreeSet<String>,
    neutral: BTreeSet<String>,
}

impl AnnotatedSets {
    pub fn positive(&self) -> &BTreeSet<String> {
        &self.positive
    }

    pub fn negative(&self) -> &BTreeSet<String> {
        &self.negative
    }

    pub fn neutral(&self) -> &BTreeSet<String> {
        &self.neutral
    }

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

    pub fn len(&self) -> usize {
        self.positive.len() + self.negative.len() + self.neutral.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Validates expert annotations against the worklist: every worklist word
/// needs exactly one label, and no label may name a word off the list.
pub fn ingest_annotations(
    worklist: &AnnotationWorklist,
    labels: &[(String, Sentiment)],
) -> Result<AnnotatedSets> {
    let mut by_word: BTreeMap<&str, Sentiment> = BTreeMap::new();
    for (word, sentiment) in labels {
        if by_word.insert(word.as_str(), *sentiment).is_some() {
            return Err(Error::DuplicateAnnotation { word: word.clone() });
        }
        if !worklist.contains(word) {
            return Err(Error::UnexpectedWord { word: word.clone() });
        }
    }
    let mut sets = AnnotatedSets::default();
    for word in worklist.words() {
        let sentiment = by_word
            .get(word)
            .ok_or_else(|| Error::MissingAnnotation { word: String::from(word) })?;
        match sentiment {
            Sentiment::Positive => sets.positive.insert(String::from(word)),
            Sentiment::Negative => sets.negative.insert(String::from(word)),
            Sentiment::Neutral => sets.neutral.insert(String::from(word)),
        };
    }
    Ok(sets)
}

/// Worklist words whose expert label differs from their seed class:
/// newly negative, newly positive, newly neutral.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DeviationDeltas {
    newly_negative: BTreeSet<String>,
    newly_positive: BTreeSet<String>,
    newly_neutral: BTreeSet<String>,
}

impl DeviationDeltas {
    pub fn newly_negative(&self) -> &BTreeSet<String> {
        &self.newly_negative
    }

    pub fn newly_positive(&self) -> &BTreeSet<String> {
        &self.newly_positive
    }

    pub fn newly_neutral(&self) -> &BTreeSet<String> {
        &self.newly_neutral
    }

    pub fn len(&self) -> usize {
        self.newly_negative.len() + self.newly_positive.len() + self.newly_neutral.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The deltas as a word-to-sentiment lexicon: each deviated word maps
    /// to its expert-confirmed target-domain sentiment.
    pub fn confirmed_sentiments(&self) -> BTreeMap<String, Sentiment> {
        let mut map = BTreeMap::new();
        for word in &self.newly_negative {
            map.insert(word.clone(), Sentiment::Negative);
        }
        for word in &self.newly_positive {
            map.insert(word.clone(), Sentiment::Positive);
        }
        for word in &self.newly_neutral {
            map.insert(word.clone(), Sentiment::Neutral);
        }
        map
    }
}

/// Compares expert labels with the seed partition over the worklist: a
/// word lands in a delta set when its expert class differs from its seed
/// class.
pub fn compute_deviation_deltas(
    annotated: &AnnotatedSets,
    seed: &SeedPartition,
    worklist: &AnnotationWorklist,
) -> DeviationDeltas {
    let mut deltas = DeviationDeltas::default();
    for word in worklist.words() {
        if annotated.negative.contains(word) && !seed.negative().contains(word) {
            deltas.newly_negative.insert(String::from(word));
        }
        if annotated.positive.contains(word) && !seed.positive().contains(word) {
            deltas.newly_positive.insert(String::from(word));
        }
        if annotated.neutral.contains(word) && !seed.neutral().contains(word) {
            deltas.newly_neutral.insert(String::from(word));
        }
    }
    deltas
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    /// Builds a synthetic profile. `generic`, `under`, `assignable`,
    /// `not_antonyms` set the flags directly; consistency with the float
    /// fields is approximated the way a real profiling run would produce
    /// them.
    #[allow(clippy::too_many_arguments)]
    fn profile(
        word: &str,
        neighbor: Option<&str>,
        generic: bool,
        under: bool,
        assignable: bool,
        not_antonyms: bool,
        neighbor_sentiment: Option<Sentiment>,
    ) -> WordProfile {
        WordProfile {
            word: word.to_string(),
            target_neighbor: neighbor.map(String::from),
            source_neighbor: neighbor.map(|_| "m".to_string()),
            domain_similarity: Some(if generic { 0.9 } else { 0.05 }),
            lexicon_affinity: Some(if assignable { 0.4 } else { -0.2 }),
            domain_generic: generic,
            under_represented: under,
            lexicon_assignable: assignable,
            not_antonyms,
            neighbor_seed_sentiment: neighbor_sentiment,
        }
    }

    fn set(words: &[&str]) -> BTreeSet<String> {
        words.iter().map(|w| w.to_string()).collect()
    }

    fn profiles(list: Vec<WordProfile>) -> BTreeMap<String, WordProfile> {
        list.into_iter().map(|p| (p.word.clone(), p)).collect()
    }

    fn scored(pairs: &[(&str, i8)]) -> ScoredLexicon {
        ScoredLexicon::from_scores(pairs.iter().map(|(w, s)| (w.to_string(), *s))).unwrap()
    }

    #[test]
    fn r1_assigns_the_lexicon_sentiment_to_eligible_words() {
        // Generic neighbour with no polar seed; the word itself is
        // under-represented and the lexicon scores it -3.
        let profiles = profiles(vec![
            profile("rare", Some("anchor"), false, true, true, true, None),
            profile("anchor", None, true, false, false, false, None),
        ]);
        let lex = scored(&[("rare", -3)]);
        let (assignments, deviations) =
            adapt_neutral_words(&set(&["rare"]), &profiles, &lex, &AdaptOptions::default())
                .unwrap();
        assert_eq!(
            assignments,
            vec![Assignment {
                word: "rare".to_string(),
                sentiment: Sentiment::Negative,
                rule: RuleId::R1
            }]
        );
        assert_eq!(deviations.to_negative(), &set(&["rare"]));
        assert!(deviations.to_positive().is_empty());
    }

    #[test]
    fn r1_requires_eligibility() {
        // Same lexicon evidence, but the word is generic and well
        // represented: R1 may not touch it.
        let profiles = profiles(vec![profile("common", None, true, false, true, false, None)]);
        let lex = scored(&[("common", -3)]);
        let (assignments, _) =
            adapt_neutral_words(&set(&["common"]), &profiles, &lex, &AdaptOptions::default())
                .unwrap();
        assert_eq!(assignments[0].rule, RuleId::R3);
        assert_eq!(assignments[0].sentiment, Sentiment::Neutral);
    }

    #[test]
    fn r1_ignores_neutral_lexicon_scores() {
        let profiles = profiles(vec![profile("flat", None, false, true, true, false, None)]);
        let lex = scored(&[("flat", 0)]);
        let (assignments, _) =
            adapt_neutral_words(&set(&["flat"]), &profiles, &lex, &AdaptOptions::default())
                .unwrap();
        assert_eq!(assignments[0].rule, RuleId::R3);
    }

    #[test]
    fn r2_transfers_the_neighbours_polar_seed_sentiment() {
        // The "charged" pattern: specific word, generic negative
        // neighbour, no lexicon help.
        let profiles = profiles(vec![
            profile("charged", Some("convicted"), false, false, false, true, Some(Sentiment::Negative)),
            profile("convicted", Some("charged"), true, false, false, true, Some(Sentiment::Neutral)),
        ]);
        let lex = ScoredLexicon::default();
        let (assignments, deviations) =
            adapt_neutral_words(&set(&["charged"]), &profiles, &lex, &AdaptOptions::default())
                .unwrap();
        assert_eq!(assignments[0].sentiment, Sentiment::Negative);
        assert_eq!(assignments[0].rule, RuleId::R2);
        assert_eq!(deviations.to_negative(), &set(&["charged"]));
    }

    #[test]
    fn r2_is_blocked_by_antonym_neighbours() {
        let profiles = profiles(vec![
            profile("innocent", Some("guilty"), false, false, false, false, Some(Sentiment::Negative)),
            profile("guilty", None, true, false, false, false, None),
        ]);
        let lex = ScoredLexicon::default();
        let (assignments, deviations) =
            adapt_neutral_words(&set(&["innocent"]), &profiles, &lex, &AdaptOptions::default())
                .unwrap();
        assert_eq!(assignments[0].rule, RuleId::R3);
        assert!(deviations.is_empty());
    }

    #[test]
    fn r2_requires_a_generic_neighbour() {
        let profiles = profiles(vec![
            profile("w", Some("n"), false, false, false, true, Some(Sentiment::Positive)),
            profile("n", None, false, false, false, false, None),
        ]);
        let lex = ScoredLexicon::default();
        let (assignments, _) =
            adapt_neutral_words(&set(&["w"]), &profiles, &lex, &AdaptOptions::default()).unwrap();
        assert_eq!(assignments[0].rule, RuleId::R3);
    }

    #[test]
    fn precedence_decides_between_conflicting_r1_and_r2() {
        // Lexicon says positive, neighbour says negative.
        let make = || {
            profiles(vec![
                profile("torn", Some("n"), false, true, true, true, Some(Sentiment::Negative)),
                profile("n", None, true, false, false, false, None),
            ])
        };
        let lex = scored(&[("torn", 2)]);

        let (assignments, _) =
            adapt_neutral_words(&set(&["torn"]), &make(), &lex, &AdaptOptions::default()).unwrap();
        assert_eq!((assignments[0].sentiment, assignments[0].rule), (Sentiment::Positive, RuleId::R1));

        let neighbor_first = AdaptOptions {
            precedence: RulePrecedence::NeighborFirst,
            ..AdaptOptions::default()
        };
        let (assignments, _) =
            adapt_neutral_words(&set(&["torn"]), &make(), &lex, &neighbor_first).unwrap();
        assert_eq!((assignments[0].sentiment, assignments[0].rule), (Sentiment::Negative, RuleId::R2));
    }

    #[test]
    fn scope_can_restrict_r2_to_eligible_words() {
        // Generic, well-represented word with a transferable neighbour.
        let make = || {
            profiles(vec![
                profile("steady", Some("n"), true, false, false, true, Some(Sentiment::Positive)),
                profile("n", None, true, false, false, false, None),
            ])
        };
        let lex = ScoredLexicon::default();

        let (assignments, _) =
            adapt_neutral_words(&set(&["steady"]), &make(), &lex, &AdaptOptions::default())
                .unwrap();
        assert_eq!(assignments[0].rule, RuleId::R2, "default scope covers every word");

        let restricted = AdaptOptions {
            neutral_scope: NeighborTransferScope::SpecificOrUnderRepresented,
            ..AdaptOptions::default()
        };
        let (assignments, _) =
            adapt_neutral_words(&set(&["steady"]), &make(), &lex, &restricted).unwrap();
        assert_eq!(assignments[0].rule, RuleId::R3);
    }

    #[test]
    fn missing_profiles_are_errors() {
        let lex = ScoredLexicon::default();
        let err = adapt_neutral_words(
            &set(&["ghost"]),
            &BTreeMap::new(),
            &lex,
            &AdaptOptions::default(),
        )
        .unwrap_err();
        assert_eq!(err, Error::MissingProfile { word: "ghost".to_string() });

        // The neighbour's profile is also required once R2 inspects it.
        let profiles = profiles(vec![profile(
            "w",
            Some("unprofiled"),
            false,
            false,
            false,
            true,
            Some(Sentiment::Negative),
        )]);
        let err =
            adapt_neutral_words(&set(&["w"]), &profiles, &lex, &AdaptOptions::default())
                .unwrap_err();
        assert_eq!(err, Error::MissingProfile { word: "unprofiled".to_string() });
    }

    #[test]
    fn r4_keeps_generic_polar_words() {
        let profiles = profiles(vec![
            // Even an antonym neighbour with opposite sentiment cannot
            // override R4.
            profile("guilty", Some("innocent"), true, false, true, false, Some(Sentiment::Positive)),
            profile("innocent", None, true, false, false, false, None),
        ]);
        let lex = scored(&[("guilty", 3)]);
        let assignments =
            adapt_polar_words(&BTreeSet::new(), &set(&["guilty"]), &profiles, &lex).unwrap();
        assert_eq!(
            assignments,
            vec![Assignment {
                word: "guilty".to_string(),
                sentiment: Sentiment::Negative,
                rule: RuleId::R4
            }]
        );
    }

    #[test]
    fn r5_flips_to_the_neighbours_opposite_polarity() {
        let profiles = profiles(vec![
            profile("striking", Some("dismissed"), false, false, false, true, Some(Sentiment::Negative)),
            profile("dismissed", None, true, false, false, true, None),
        ]);
        let lex = ScoredLexicon::default();
        let assignments =
            adapt_polar_words(&set(&["striking"]), &BTreeSet::new(), &profiles, &lex).unwrap();
        assert_eq!((assignments[0].sentiment, assignments[0].rule), (Sentiment::Negative, RuleId::R5));
    }

    #[test]
    fn r5b_corroborates_the_seed_polarity() {
        let profiles = profiles(vec![
            profile("winning", Some("prevailing"), false, false, false, true, Some(Sentiment::Positive)),
            profile("prevailing", None, true, false, false, true, None),
        ]);
        let lex = ScoredLexicon::default();
        let assignments =
            adapt_polar_words(&set(&["winning"]), &BTreeSet::new(), &profiles, &lex).unwrap();
        assert_eq!((assignments[0].sentiment, assignments[0].rule), (Sentiment::Positive, RuleId::R5b));
    }

    #[test]
    fn r6_falls_back_to_the_lexicon() {
        let profiles = profiles(vec![profile("awful", None, false, false, true, false, None)]);
        let lex = scored(&[("awful", -3)]);
        let assignments =
            adapt_polar_words(&BTreeSet::new(), &set(&["awful"]), &profiles, &lex).unwrap();
        assert_eq!((assignments[0].sentiment, assignments[0].rule), (Sentiment::Negative, RuleId::R6));
    }

    #[test]
    fn r7_neutralizes_everything_else() {
        let profiles = profiles(vec![profile("thrilling", None, false, false, false, false, None)]);
        let lex = ScoredLexicon::default();
        let assignments =
            adapt_polar_words(&set(&["thrilling"]), &BTreeSet::new(), &profiles, &lex).unwrap();
        assert_eq!((assignments[0].sentiment, assignments[0].rule), (Sentiment::Neutral, RuleId::R7));
    }

    #[test]
    fn polar_chain_prefers_the_neighbour_over_the_lexicon() {
        // Both R5 and R6 would fire; the listed order says R5 wins.
        let profiles = profiles(vec![
            profile("clash", Some("n"), false, false, true, true, Some(Sentiment::Negative)),
            profile("n", None, true, false, false, false, None),
        ]);
        let lex = scored(&[("clash", 4)]);
        let assignments =
            adapt_polar_words(&set(&["clash"]), &BTreeSet::new(), &profiles, &lex).unwrap();
        assert_eq!((assignments[0].sentiment, assignments[0].rule), (Sentiment::Negative, RuleId::R5));
    }

    fn small_seed() -> SeedPartition {
        SeedPartition::from_sets(set(&["good"]), set(&["bad"]), set(&["flat"])).unwrap()
    }

    fn assignment(word: &str, sentiment: Sentiment, rule: RuleId) -> Assignment {
        Assignment { word: word.to_string(), sentiment, rule }
    }

    #[test]
    fn adapted_lexicon_covers_the_seed_exactly_once() {
        let seed = small_seed();
        let ok = build_adapted_lexicon(
            &[
                assignment("good", Sentiment::Positive, RuleId::R4),
                assignment("bad", Sentiment::Neutral, RuleId::R7),
                assignment("flat", Sentiment::Negative, RuleId::R2),
            ],
            &seed,
        )
        .unwrap();
        assert_eq!(ok.sentiment_of("bad"), Some(Sentiment::Neutral));
        assert_eq!(ok.rule_of("flat"), Some(RuleId::R2));
        assert_eq!(ok.class_words(Sentiment::Negative), set(&["flat"]));

        let missing = build_adapted_lexicon(
            &[assignment("good", Sentiment::Positive, RuleId::R4)],
            &seed,
        );
        assert!(matches!(missing, Err(Error::MissingAssignment { .. })));

        let duplicate = build_adapted_lexicon(
            &[
                assignment("good", Sentiment::Positive, RuleId::R4),
                assignment("good", Sentiment::Positive, RuleId::R6),
                assignment("bad", Sentiment::Negative, RuleId::R4),
                assignment("flat", Sentiment::Neutral, RuleId::R3),
            ],
            &seed,
        );
        assert!(matches!(duplicate, Err(Error::DuplicateWord { .. })));

        let unexpected = build_adapted_lexicon(
            &[assignment("stranger", Sentiment::Neutral, RuleId::R3)],
            &seed,
        );
        assert!(matches!(unexpected, Err(Error::UnexpectedWord { .. })));
    }

    fn worklist_fixture() -> (SeedPartition, AdaptedLexicon, AnnotationWorklist) {
        // Seed: positive {good}, negative {bad}, neutral {flat, rare}.
        // The rules flipped "rare" negative, so it deviates.
        let seed = SeedPartition::from_sets(set(&["good"]), set(&["bad"]), set(&["flat", "rare"]))
            .unwrap();
        let assignments = [
            assignment("flat", Sentiment::Neutral, RuleId::R3),
            assignment("rare", Sentiment::Negative, RuleId::R1),
            assignment("good", Sentiment::Positive, RuleId::R4),
            assignment("bad", Sentiment::Neutral, RuleId::R7),
        ];
        let adapted = build_adapted_lexicon(&assignments, &seed).unwrap();
        let mut deviations = DeviationSets::default();
        deviations.to_negative.insert("rare".to_string());
        let worklist = build_worklist(&deviations, &seed, &adapted).unwrap();
        (seed, adapted, worklist)
    }

    #[test]
    fn worklist_unions_deviations_with_polar_seeds() {
        let (_, _, worklist) = worklist_fixture();
        let words: Vec<&str> = worklist.words().collect();
        // "flat" stayed neutral, so it is not on the list.
        assert_eq!(words, ["bad", "good", "rare"]);
        assert_eq!(worklist.entries()[0].current, Sentiment::Neutral);
        assert_eq!(worklist.entries()[2].current, Sentiment::Negative);
        assert!(worklist.contains("good"));
        assert!(!worklist.contains("flat"));
    }

    #[test]
    fn worklist_contexts_can_be_attached() {
        let (_, _, mut worklist) = worklist_fixture();
        worklist.attach_contexts(|w| (w == "good").then(|| "a good day".to_string()));
        assert_eq!(worklist.entries()[1].context.as_deref(), Some("a good day"));
        assert_eq!(worklist.entries()[0].context, None);
    }

    #[test]
    fn worklist_round_trips_through_its_entries() {
        let (_, _, worklist) = worklist_fixture();
        // Reload in scrambled order: from_entries restores word order.
        let mut entries: Vec<WorklistEntry> = worklist.entries().to_vec();
        entries.reverse();
        let reloaded = AnnotationWorklist::from_entries(entries.clone()).unwrap();
        assert_eq!(reloaded, worklist);

        entries.push(entries[0].clone());
        assert!(matches!(
            AnnotationWorklist::from_entries(entries),
            Err(Error::DuplicateWord { .. })
        ));
    }

    #[test]
    fn deviations_survive_an_adapted_lexicon_round_trip() {
        let (seed, adapted, _) = worklist_fixture();
        let deviations = deviations_from_adapted(&adapted, &seed);
        assert_eq!(deviations.to_negative(), &set(&["rare"]));
        assert!(deviations.to_positive().is_empty());
        // "bad" turned neutral but had a polar seed: not a deviation.
        assert_eq!(deviations.len(), 1);
    }

    #[test]
    fn ingest_requires_exact_coverage() {
        let (_, _, worklist) = worklist_fixture();
        let full = vec![
            ("bad".to_string(), Sentiment::Negative),
            ("good".to_string(), Sentiment::Positive),
            ("rare".to_string(), Sentiment::Negative),
        ];
        let sets = ingest_annotations(&worklist, &full).unwrap();
        assert_eq!(sets.negative(), &set(&["bad", "rare"]));
        assert_eq!(sets.sentiment_of("good"), Some(Sentiment::Positive));
        assert_eq!(sets.len(), 3);

        let missing = ingest_annotations(&worklist, &full[..2]).unwrap_err();
        assert_eq!(missing, Error::MissingAnnotation { word: "rare".to_string() });

        let mut extra = full.clone();
        extra.push(("stranger".to_string(), Sentiment::Neutral));
        assert_eq!(
            ingest_annotations(&worklist, &extra).unwrap_err(),
            Error::UnexpectedWord { word: "stranger".to_string() }
        );

        let mut duplicated = full.clone();
        duplicated.push(("bad".to_string(), Sentiment::Positive));
        assert_eq!(
            ingest_annotations(&worklist, &duplicated).unwrap_err(),
            Error::DuplicateAnnotation { word: "bad".to_string() }
        );
    }

    #[test]
    fn deltas_compare_expert_labels_with_seed_classes() {
        let (seed, _, worklist) = worklist_fixture();
        // Expert: bad stays negative, good becomes neutral, rare becomes
        // negative.
        let labels = vec![
            ("bad".to_string(), Sentiment::Negative),
            ("good".to_string(), Sentiment::Neutral),
            ("rare".to_string(), Sentiment::Negative),
        ];
        let annotated = ingest_annotations(&worklist, &labels).unwrap();
        let deltas = compute_deviation_deltas(&annotated, &seed, &worklist);
        // bad was already in the negative seed: no delta.
        assert_eq!(deltas.newly_negative(), &set(&["rare"]));
        assert!(deltas.newly_positive().is_empty());
        // good was seeded positive, the expert made it neutral.
        assert_eq!(deltas.newly_neutral(), &set(&["good"]));

        let confirmed = deltas.confirmed_sentiments();
        assert_eq!(confirmed.get("rare"), Some(&Sentiment::Negative));
        assert_eq!(confirmed.get("good"), Some(&Sentiment::Neutral));
        assert_eq!(confirmed.len(), 2);
    }

    #[test]
    fn adapt_seed_partition_runs_both_chains() {
        let seed = small_seed();
        let profiles = profiles(vec![
            profile("flat", None, true, false, false, false, None),
            profile("good", None, true, false, false, false, None),
            profile("bad", None, false, false, false, false, None),
        ]);
        let lex = ScoredLexicon::default();
        let (assignments, deviations) =
            adapt_seed_partition(&seed, &profiles, &lex, &AdaptOptions::default()).unwrap();
        let adapted = build_adapted_lexicon(&assignments, &seed).unwrap();
        assert_eq!(adapted.rule_of("flat"), Some(RuleId::R3));
        assert_eq!(adapted.rule_of("good"), Some(RuleId::R4));
        assert_eq!(adapted.rule_of("bad"), Some(RuleId::R7));
        assert!(deviations.is_empty());
    }
}
