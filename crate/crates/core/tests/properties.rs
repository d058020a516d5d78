//! Randomized invariant checks over the core pipeline stages. Each
//! property restates the contract in an independent form (set algebra,
//! brute-force scans) and compares outcomes.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use proptest::prelude::*;

use lexshift_core::adapt::{
    adapt_seed_partition, build_adapted_lexicon, build_worklist, compute_deviation_deltas,
    ingest_annotations, AdaptOptions, NeighborTransferScope, RuleId, RulePrecedence,
};
use lexshift_core::corpus::{select_vocabulary, FrequencyTable};
use lexshift_core::embedding::{DomainTag, EmbeddingSpace};
use lexshift_core::lexicon::{ScoredLexicon, SeedPartition};
use lexshift_core::metrics::ConfusionMatrix;
use lexshift_core::profile::WordProfile;
use lexshift_core::transfer::{
    filter_conflicting_sentences, substitute_deviated_tokens, ClassMode, DatasetLabel,
    LabeledDataset, LabeledSentence, SubstitutionMap, SubstitutionMaps,
};
use lexshift_core::Sentiment;

// ---------------------------------------------------------------- corpus

fn frequency_counts() -> impl Strategy<Value = BTreeMap<String, u64>> {
    prop::collection::btree_map("[a-z]{1,6}", 1u64..500, 1..40)
}

proptest! {
    #[test]
    fn vocabulary_prefix_is_minimal_for_the_requested_coverage(
        counts in frequency_counts(),
        coverage in 0.01f64..=1.0,
    ) {
        let table = FrequencyTable::from_counts(counts.clone()).unwrap();
        let selection = select_vocabulary(&table, coverage).unwrap();

        // Brute force: sort counts the same way, take the shortest prefix
        // whose mass reaches the requested share.
        let mut sorted: Vec<(&String, &u64)> = counts.iter().collect();
        sorted.sort_by(|a, b| b.1.cmp(a.1).then(a.0.cmp(b.0)));
        let total: u64 = counts.values().sum();
        let mut prefix = 0u64;
        let mut expected_k = 0usize;
        for (_, count) in &sorted {
            prefix += **count;
            expected_k += 1;
            if prefix as f64 >= coverage * total as f64 {
                break;
            }
        }

        prop_assert_eq!(selection.k(), expected_k);
        prop_assert!(selection.achieved_coverage() + 1e-12 >= coverage
            || (selection.k() == counts.len()));
        // The selection is exactly the first k table entries.
        let from_table: Vec<&(String, u64)> = table.entries().iter().take(expected_k).collect();
        let from_selection: Vec<&(String, u64)> = selection.selected().iter().collect();
        prop_assert_eq!(from_selection, from_table);
    }

    #[test]
    fn frequency_tables_sort_by_count_then_word(counts in frequency_counts()) {
        let table = FrequencyTable::from_counts(counts.clone()).unwrap();
        for pair in table.entries().windows(2) {
            let ordered = pair[0].1 > pair[1].1 || (pair[0].1 == pair[1].1 && pair[0].0 < pair[1].0);
            prop_assert!(ordered, "entries out of order: {:?}", pair);
        }
        prop_assert_eq!(table.total(), counts.values().sum::<u64>());
    }
}

// ------------------------------------------------------------- embedding

/// Integer-lattice vectors keep distinct cosines well separated, so
/// argmax comparisons cannot flip on rounding noise.
fn lattice_space(dim: usize) -> impl Strategy<Value = Vec<(String, Vec<f64>)>> {
    prop::collection::btree_map(
        "[a-z]{1,4}",
        prop::collection::vec((-4i8..=4).prop_map(f64::from), dim..=dim),
        2..10,
    )
    .prop_map(|m| m.into_iter().collect())
}

fn built(entries: &[(String, Vec<f64>)], dim: usize) -> Option<EmbeddingSpace> {
    EmbeddingSpace::new(DomainTag::Target, dim, entries.to_vec())
        .ok()
        .map(|(space, _)| space)
}

proptest! {
    #[test]
    fn cosine_is_symmetric_self_unit_and_clamped(
        entries in (2usize..5).prop_flat_map(|d| (Just(d), lattice_space(d))),
    ) {
        let (dim, entries) = entries;
        let Some(space) = built(&entries, dim) else { return Ok(()) };
        let words: Vec<&str> = space.words().collect();
        for a in &words {
            prop_assert!((space.cosine(a, a).unwrap() - 1.0).abs() < 1e-9);
            for b in &words {
                let ab = space.cosine(a, b).unwrap();
                let ba = space.cosine(b, a).unwrap();
                prop_assert_eq!(ab, ba, "cosine must be exactly symmetric");
                prop_assert!((-1.0..=1.0).contains(&ab));
            }
        }
    }

    #[test]
    fn nearest_neighbor_matches_exhaustive_argmax(
        entries in (2usize..5).prop_flat_map(|d| (Just(d), lattice_space(d))),
    ) {
        let (dim, entries) = entries;
        let Some(space) = built(&entries, dim) else { return Ok(()) };
        if space.len() < 2 {
            return Ok(());
        }
        let words: Vec<String> = space.words().map(String::from).collect();
        for word in &words {
            let found = space.most_similar(word).unwrap();
            // Independent oracle: collect every candidate score, find the
            // maximum, then take the alphabetically smallest argmax.
            let query = space.vector(word).unwrap();
            let scores: Vec<(&String, f64)> = words
                .iter()
                .filter(|c| *c != word)
                .map(|c| {
                    let v = space.vector(c).unwrap();
                    (c, query.iter().zip(v).map(|(a, b)| a * b).sum::<f64>())
                })
                .collect();
            let top = scores.iter().map(|(_, s)| *s).fold(f64::NEG_INFINITY, f64::max);
            let expected = scores
                .iter()
                .filter(|(_, s)| *s == top)
                .map(|(c, _)| *c)
                .min()
                .unwrap();
            prop_assert_eq!(found, expected.as_str());
        }
    }

    #[test]
    fn neighbors_are_invariant_under_power_of_two_rescaling(
        entries in (2usize..5).prop_flat_map(|d| (Just(d), lattice_space(d))),
        exponents in prop::collection::vec(-2i32..=3, 10),
    ) {
        let (dim, entries) = entries;
        let Some(space) = built(&entries, dim) else { return Ok(()) };
        if space.len() < 2 {
            return Ok(());
        }
        // Power-of-two scaling is exact in IEEE arithmetic, so the stored
        // unit vectors and every downstream choice must be bit-identical.
        let scaled: Vec<(String, Vec<f64>)> = entries
            .iter()
            .enumerate()
            .map(|(i, (w, v))| {
                let factor = 2.0f64.powi(exponents[i % exponents.len()]);
                (w.clone(), v.iter().map(|c| c * factor).collect())
            })
            .collect();
        let Some(rescaled) = built(&scaled, dim) else { return Ok(()) };
        prop_assert_eq!(space.len(), rescaled.len());
        for word in space.words() {
            prop_assert_eq!(space.vector(word), rescaled.vector(word));
            prop_assert_eq!(
                space.most_similar(word).unwrap(),
                rescaled.most_similar(word).unwrap()
            );
        }
    }
}

// ------------------------------------------------------------ rule chain

#[derive(Clone, Debug)]
struct RuleWorld {
    seed: SeedPartition,
    profiles: BTreeMap<String, WordProfile>,
    scored: ScoredLexicon,
    options: AdaptOptions,
}

fn word_name(i: usize) -> String {
    format!("w{i:02}")
}

#[derive(Clone, Debug)]
struct WordSpec {
    class: u8,
    neighbor: Option<usize>,
    generic: bool,
    under: bool,
    assignable: bool,
    not_antonyms: bool,
    neighbor_sentiment: Option<u8>,
    score: Option<i8>,
}

fn word_spec() -> impl Strategy<Value = WordSpec> {
    (
        0u8..3,
        prop::option::of(0usize..20),
        any::<bool>(),
        any::<bool>(),
        any::<bool>(),
        any::<bool>(),
        prop::option::of(0u8..3),
        prop::option::of(-5i8..=5),
    )
        .prop_map(
            |(class, neighbor, generic, under, assignable, not_antonyms, ns, score)| WordSpec {
                class,
                neighbor,
                generic,
                under,
                assignable,
                not_antonyms,
                neighbor_sentiment: ns,
                score,
            },
        )
}

fn sentiment_from(code: u8) -> Sentiment {
    match code {
        0 => Sentiment::Negative,
        1 => Sentiment::Neutral,
        _ => Sentiment::Positive,
    }
}

fn rule_world() -> impl Strategy<Value = RuleWorld> {
    (
        prop::collection::vec(word_spec(), 3..14),
        prop_oneof![Just(RulePrecedence::LexiconFirst), Just(RulePrecedence::NeighborFirst)],
        prop_oneof![
            Just(NeighborTransferScope::AllWords),
            Just(NeighborTransferScope::SpecificOrUnderRepresented)
        ],
    )
        .prop_map(|(specs, precedence, neutral_scope)| {
            let n = specs.len();
            let mut positive = BTreeSet::new();
            let mut negative = BTreeSet::new();
            let mut neutral = BTreeSet::new();
            let mut profiles = BTreeMap::new();
            let mut scores = Vec::new();
            for (i, spec) in specs.iter().enumerate() {
                let word = word_name(i);
                match spec.class {
                    0 => negative.insert(word.clone()),
                    1 => neutral.insert(word.clone()),
                    _ => positive.insert(word.clone()),
                };
                let neighbor = spec
                    .neighbor
                    .map(|j| word_name(if j % n == i { (j + 1) % n } else { j % n }));
                profiles.insert(
                    word.clone(),
                    WordProfile {
                        word: word.clone(),
                        target_neighbor: neighbor.clone(),
                        source_neighbor: neighbor.clone(),
                        domain_similarity: Some(if spec.generic { 0.9 } else { 0.05 }),
                        lexicon_affinity: Some(if spec.assignable { 0.3 } else { -0.3 }),
                        domain_generic: spec.generic,
                        under_represented: spec.under,
                        lexicon_assignable: spec.assignable,
                        not_antonyms: neighbor.is_some() && spec.not_antonyms,
                        neighbor_seed_sentiment: neighbor
                            .is_some()
                            .then(|| spec.neighbor_sentiment.map(sentiment_from))
                            .flatten(),
                    },
                );
                if let Some(score) = spec.score {
                    scores.push((word, score));
                }
            }
            RuleWorld {
                seed: SeedPartition::from_sets(positive, negative, neutral).unwrap(),
                profiles,
                scored: ScoredLexicon::from_scores(scores).unwrap(),
                options: AdaptOptions { precedence, neutral_scope },
            }
        })
}

proptest! {
    #[test]
    fn rule_chains_respect_seed_class_boundaries(world in rule_world()) {
        let (assignments, deviations) =
            adapt_seed_partition(&world.seed, &world.profiles, &world.scored, &world.options)
                .unwrap();

        let neutral_rules = [RuleId::R1, RuleId::R2, RuleId::R3];
        let polar_rules = [RuleId::R4, RuleId::R5, RuleId::R5b, RuleId::R6, RuleId::R7];
        let mut seen = BTreeSet::new();
        for assignment in &assignments {
            prop_assert!(seen.insert(assignment.word.clone()), "one assignment per word");
            let word = assignment.word.as_str();
            if world.seed.neutral().contains(word) {
                prop_assert!(neutral_rules.contains(&assignment.rule));
                // The no-change rule is exactly the neutral outcome.
                prop_assert_eq!(
                    assignment.rule == RuleId::R3,
                    assignment.sentiment == Sentiment::Neutral
                );
            } else {
                prop_assert!(polar_rules.contains(&assignment.rule));
            }
        }
        prop_assert_eq!(seen.len(), world.seed.len());

        // Domain-generic polar words always keep their seed sentiment.
        for assignment in &assignments {
            let word = assignment.word.as_str();
            if world.profiles[word].domain_generic {
                if world.seed.positive().contains(word) {
                    prop_assert_eq!(assignment.rule, RuleId::R4);
                    prop_assert_eq!(assignment.sentiment, Sentiment::Positive);
                } else if world.seed.negative().contains(word) {
                    prop_assert_eq!(assignment.rule, RuleId::R4);
                    prop_assert_eq!(assignment.sentiment, Sentiment::Negative);
                }
            }
        }

        // Deviation sets are exactly the polarized neutral-seed words.
        let expect_negative: BTreeSet<String> = assignments
            .iter()
            .filter(|a| {
                world.seed.neutral().contains(a.word.as_str())
                    && a.sentiment == Sentiment::Negative
            })
            .map(|a| a.word.clone())
            .collect();
        let expect_positive: BTreeSet<String> = assignments
            .iter()
            .filter(|a| {
                world.seed.neutral().contains(a.word.as_str())
                    && a.sentiment == Sentiment::Positive
            })
            .map(|a| a.word.clone())
            .collect();
        prop_assert_eq!(deviations.to_negative(), &expect_negative);
        prop_assert_eq!(deviations.to_positive(), &expect_positive);

        // The adapted lexicon covers the seed exactly.
        let adapted = build_adapted_lexicon(&assignments, &world.seed).unwrap();
        prop_assert_eq!(adapted.len(), world.seed.len());
    }

    #[test]
    fn narrowing_the_transfer_scope_never_invents_new_outcomes(world in rule_world()) {
        // Any word decided under the restricted scope decides identically
        // under the open scope unless the open scope found a transfer.
        let open = AdaptOptions {
            precedence: world.options.precedence,
            neutral_scope: NeighborTransferScope::AllWords,
        };
        let narrow = AdaptOptions {
            precedence: world.options.precedence,
            neutral_scope: NeighborTransferScope::SpecificOrUnderRepresented,
        };
        let (open_assignments, _) =
            adapt_seed_partition(&world.seed, &world.profiles, &world.scored, &open).unwrap();
        let (narrow_assignments, _) =
            adapt_seed_partition(&world.seed, &world.profiles, &world.scored, &narrow).unwrap();
        let open_by_word: BTreeMap<&str, _> =
            open_assignments.iter().map(|a| (a.word.as_str(), a)).collect();
        for assignment in &narrow_assignments {
            let counterpart = open_by_word[assignment.word.as_str()];
            if assignment.rule != RuleId::R3 {
                // Decisions that survive narrowing match the open run.
                prop_assert_eq!(assignment.rule, counterpart.rule);
                prop_assert_eq!(assignment.sentiment, counterpart.sentiment);
            } else {
                // A word the narrow run leaves neutral can only differ
                // because the open run applied a neighbor transfer.
                if counterpart.rule != RuleId::R3 {
                    prop_assert_eq!(counterpart.rule, RuleId::R2);
                }
            }
        }
    }

    #[test]
    fn deviation_deltas_match_their_set_algebra(
        world in rule_world(),
        annotation_codes in prop::collection::vec(0u8..3, 20),
    ) {
        let (assignments, deviations) =
            adapt_seed_partition(&world.seed, &world.profiles, &world.scored, &world.options)
                .unwrap();
        let adapted = build_adapted_lexicon(&assignments, &world.seed).unwrap();
        let worklist = build_worklist(&deviations, &world.seed, &adapted).unwrap();

        // The worklist is the union of deviations and polar seed sets.
        let mut expected_words: BTreeSet<&str> = BTreeSet::new();
        expected_words.extend(deviations.to_negative().iter().map(String::as_str));
        expected_words.extend(deviations.to_positive().iter().map(String::as_str));
        expected_words.extend(world.seed.positive().iter().map(String::as_str));
        expected_words.extend(world.seed.negative().iter().map(String::as_str));
        let listed: BTreeSet<&str> = worklist.words().collect();
        prop_assert_eq!(&listed, &expected_words);

        // Annotate each worklist word with an arbitrary expert label.
        let labels: Vec<(String, Sentiment)> = worklist
            .words()
            .enumerate()
            .map(|(i, w)| {
                (w.to_string(), sentiment_from(annotation_codes[i % annotation_codes.len()]))
            })
            .collect();
        let by_word: BTreeMap<&str, Sentiment> =
            labels.iter().map(|(w, s)| (w.as_str(), *s)).collect();
        let annotated = ingest_annotations(&worklist, &labels).unwrap();
        let deltas = compute_deviation_deltas(&annotated, &world.seed, &worklist);

        // Set-algebra oracle: expert class minus matching seed class.
        let oracle = |want: Sentiment, seed_set: &BTreeSet<String>| -> BTreeSet<String> {
            listed
                .iter()
                .filter(|w| by_word[**w] == want && !seed_set.contains(**w))
                .map(|w| w.to_string())
                .collect()
        };
        prop_assert_eq!(
            deltas.newly_negative(),
            &oracle(Sentiment::Negative, world.seed.negative())
        );
        prop_assert_eq!(
            deltas.newly_positive(),
            &oracle(Sentiment::Positive, world.seed.positive())
        );
        prop_assert_eq!(
            deltas.newly_neutral(),
            &oracle(Sentiment::Neutral, world.seed.neutral())
        );

        // The three delta sets never overlap, and the confirmed lexicon
        // has one entry per deviated word.
        let negatives = deltas.newly_negative();
        let positives = deltas.newly_positive();
        let neutrals = deltas.newly_neutral();
        prop_assert!(negatives.is_disjoint(positives));
        prop_assert!(negatives.is_disjoint(neutrals));
        prop_assert!(positives.is_disjoint(neutrals));
        prop_assert_eq!(deltas.confirmed_sentiments().len(), deltas.len());
    }
}

// --------------------------------------------------------------- dataset

fn small_sentence() -> impl Strategy<Value = (Vec<String>, u8)> {
    (
        prop::collection::vec("[a-j]", 1..8),
        0u8..3,
    )
}

proptest! {
    #[test]
    fn filtering_leaves_no_conflicting_sentence_behind(
        raw in prop::collection::vec(small_sentence(), 1..20),
        deviated_codes in prop::collection::btree_map("[a-j]", 0u8..3, 0..6),
    ) {
        let sentences: Vec<LabeledSentence> = raw
            .iter()
            .map(|(tokens, label)| {
                LabeledSentence::new(
                    tokens.clone(),
                    None,
                    DatasetLabel::Three(sentiment_from(*label)),
                )
                .unwrap()
            })
            .collect();
        let dataset = LabeledDataset::new(ClassMode::Three, sentences).unwrap();
        let confirmed: BTreeMap<String, Sentiment> = deviated_codes
            .into_iter()
            .map(|(w, c)| (w, sentiment_from(c)))
            .collect();

        let (kept, removals) = filter_conflicting_sentences(&dataset, &confirmed).unwrap();

        prop_assert_eq!(kept.len() + removals.len(), dataset.len());
        for sentence in kept.sentences() {
            let label = sentence.label().collapse();
            for token in sentence.tokens() {
                if let Some(&s) = confirmed.get(token.as_str()) {
                    prop_assert_eq!(s, label, "kept sentence still conflicts");
                }
            }
        }
        for removal in &removals {
            prop_assert!(!removal.conflicts.is_empty());
            for (word, sentiment) in &removal.conflicts {
                prop_assert_eq!(confirmed[word], *sentiment);
                prop_assert_ne!(*sentiment, removal.label);
            }
        }
    }

    #[test]
    fn substitution_preserves_shape_and_only_touches_deviated_tokens(
        raw in prop::collection::vec(("[a-j]", 0u8..3), 1..10),
        deviated_codes in prop::collection::btree_map("[a-j]", 0u8..3, 0..6),
    ) {
        let tags = ["JJ", "NN", "VB"];
        let tokens: Vec<String> = raw.iter().map(|(w, _)| w.clone()).collect();
        let pos: Vec<String> = raw.iter().map(|(_, t)| tags[*t as usize].to_string()).collect();
        let sentence = LabeledSentence::new(
            tokens.clone(),
            Some(pos.clone()),
            DatasetLabel::Three(Sentiment::Neutral),
        )
        .unwrap();
        let confirmed: BTreeMap<String, Sentiment> = deviated_codes
            .into_iter()
            .map(|(w, c)| (w, sentiment_from(c)))
            .collect();

        // Complete maps: every class covers every tag in play.
        let map_for = |suffix: &str| {
            SubstitutionMap::new(
                tags.iter().map(|t| (t.to_string(), format!("{}{suffix}", t.to_lowercase()))),
            )
            .unwrap()
        };
        let maps = SubstitutionMaps {
            positive: Some(map_for("pos")),
            negative: Some(map_for("neg")),
            neutral: Some(map_for("neu")),
        };

        let outcome = substitute_deviated_tokens(&sentence, &confirmed, &maps).unwrap();
        prop_assert!(outcome.unmapped.is_empty());
        prop_assert_eq!(outcome.sentence.tokens().len(), tokens.len());
        prop_assert_eq!(outcome.sentence.pos_tags().unwrap(), pos.as_slice());
        prop_assert_eq!(outcome.sentence.label(), sentence.label());
        for ((before, after), tag) in
            tokens.iter().zip(outcome.sentence.tokens()).zip(&pos)
        {
            match confirmed.get(before.as_str()) {
                None => prop_assert_eq!(before, after, "untouched token changed"),
                Some(&sentiment) => {
                    let expected = maps.for_class(sentiment).unwrap().replacement_for(tag);
                    prop_assert_eq!(after.as_str(), expected.unwrap());
                }
            }
        }
    }
}

// --------------------------------------------------------------- metrics

proptest! {
    #[test]
    fn confusion_matrix_marginals_and_accuracy_are_consistent(
        cells in prop::collection::vec(0u64..30, 9),
    ) {
        prop_assume!(cells.iter().any(|&c| c > 0));
        let counts = [
            [cells[0], cells[1], cells[2]],
            [cells[3], cells[4], cells[5]],
            [cells[6], cells[7], cells[8]],
        ];
        let m = ConfusionMatrix::from_counts(counts).unwrap();
        let total: u64 = cells.iter().sum();
        prop_assert_eq!(m.total(), total);

        let gold_sum: u64 = Sentiment::ALL.iter().map(|&c| m.gold_total(c)).sum();
        let predicted_sum: u64 = Sentiment::ALL.iter().map(|&c| m.predicted_total(c)).sum();
        prop_assert_eq!(gold_sum, total);
        prop_assert_eq!(predicted_sum, total);

        let trace = cells[0] + cells[4] + cells[8];
        prop_assert!((m.accuracy() - trace as f64 / total as f64).abs() < 1e-12);

        for &class in &Sentiment::ALL {
            let scores = m.class_metrics(class);
            for value in [scores.precision, scores.recall, scores.f_measure] {
                prop_assert!((0.0..=1.0).contains(&value));
            }
            let predicted = m.predicted_total(class);
            if predicted > 0 {
                let tp = m.count(class, class);
                prop_assert!((scores.precision * predicted as f64 - tp as f64).abs() < 1e-9);
            } else {
                prop_assert!(scores.degenerate);
            }
        }
    }
}
