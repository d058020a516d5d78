use std::collections::BTreeMap;
use std::path::Path;

use lexshift_core::adapt::{AdaptedLexicon, AnnotationWorklist, RuleId, WorklistEntry};
use lexshift_core::corpus::{tokenize, StopwordList, TokenizedCorpus, TokenizerRules};
use lexshift_core::embedding::{DomainTag, EmbeddingSpace};
use lexshift_core::lexicon::{AntonymList, ScoredLexicon};
use lexshift_core::profile::{VerbPair, VerbPairDataset};
use lexshift_core::transfer::{
    ClassMode, DatasetLabel, LabeledDataset, LabeledSentence, Provenance, SubstitutionMap,
    SubstitutionMaps,
};
use lexshift_core::{FiveClassLabel, Sentiment};

use crate::config::Config;
use crate::error::{parse, parse_line, Result};
use crate::io_util::read_to_string;

pub const DEFAULT_STOPWORDS: &str = include_str!("../assets/stopwords.txt");
const DEFAULT_SUBSTITUTION_POSITIVE: &str = include_str!("../assets/substitution_positive.tsv");
const DEFAULT_SUBSTITUTION_NEGATIVE: &str = include_str!("../assets/substitution_negative.tsv");
const DEFAULT_SUBSTITUTION_NEUTRAL: &str = include_str!("../assets/substitution_neutral.tsv");

/// Yields `(line_number, line)` for data lines: blank lines are skipped
/// everywhere, and a first line equal to `header` is treated as a header.
fn data_lines<'a>(
    text: &'a str,
    header: Option<&str>,
) -> impl Iterator<Item = (usize, &'a str)> {
    let skip_first = match (header, text.lines().next()) {
        (Some(h), Some(first)) => first == h,
        _ => false,
    };
    text.lines()
        .enumerate()
        .skip(usize::from(skip_first))
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| (i + 1, line))
}

fn columns<'a>(
    path: &Path,
    number: usize,
    line: &'a str,
    expected: usize,
) -> Result<Vec<&'a str>> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() == expected {
        Ok(fields)
    } else {
        Err(parse_line(
            path,
            number,
            format!("expected {expected} tab-separated columns, found {}", fields.len()),
        ))
    }
}

// ---------------------------------------------------------------------------
// Embeddings: a `count dimension` header line, then one word per line
// followed by its components, all space separated.

pub fn read_embeddings(path: &Path, domain: DomainTag) -> Result<(EmbeddingSpace, Vec<String>)> {
    let text = read_to_string(path)?;
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse(path, "empty embedding file"))?;
    let mut head = header.split_whitespace();
    let (count, dimension) = match (head.next(), head.next(), head.next()) {
        (Some(c), Some(d), None) => {
            let count: usize = c
                .parse()
                .map_err(|_| parse_line(path, 1, "header must be `count dimension`"))?;
            let dimension: usize = d
                .parse()
                .map_err(|_| parse_line(path, 1, "header must be `count dimension`"))?;
            (count, dimension)
        }
        _ => return Err(parse_line(path, 1, "header must be `count dimension`")),
    };

    let mut entries = Vec::with_capacity(count);
    for (index, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let number = index + 1;
        let mut fields = line.split_whitespace();
        let word = fields
            .next()
            .ok_or_else(|| parse_line(path, number, "missing word"))?;
        let mut vector = Vec::with_capacity(dimension);
        for field in fields {
            let component: f64 = field.parse().map_err(|_| {
                parse_line(path, number, format!("bad vector component `{field}`"))
            })?;
            vector.push(component);
        }
        entries.push((String::from(word), vector));
    }
    if entries.len() != count {
        return Err(parse(
            path,
            format!("header announces {count} words but {} rows follow", entries.len()),
        ));
    }
    EmbeddingSpace::new(domain, dimension, entries).map_err(|e| parse(path, e))
}

// ---------------------------------------------------------------------------
// Plain word-per-line lists and the lexicon family of two/three-column TSVs.

pub fn read_word_list(path: &Path) -> Result<Vec<String>> {
    let text = read_to_string(path)?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(String::from)
        .collect())
}

pub fn stopword_list(config: &Config) -> Result<StopwordList> {
    let words: Vec<String> = match config.path("stopwords") {
        Some(path) => read_word_list(&path)?,
        None => DEFAULT_STOPWORDS.lines().map(String::from).collect(),
    };
    Ok(StopwordList::new(words))
}

pub fn read_tokenized_corpus(path: &Path) -> Result<TokenizedCorpus> {
    let text = read_to_string(path)?;
    Ok(tokenize(&text, &TokenizerRules::default()))
}

pub fn read_word_labels(path: &Path) -> Result<BTreeMap<String, FiveClassLabel>> {
    let text = read_to_string(path)?;
    let mut labels = BTreeMap::new();
    for (number, line) in data_lines(&text, Some("word\tlabel")) {
        let fields = columns(path, number, line, 2)?;
        let label: FiveClassLabel = fields[1]
            .parse()
            .map_err(|e| parse_line(path, number, e))?;
        if labels.insert(String::from(fields[0]), label).is_some() {
            return Err(parse_line(path, number, format!("word `{}` repeats", fields[0])));
        }
    }
    Ok(labels)
}

/// Reads a `word<TAB>integer-score` lexicon. Multi-word entries cannot
/// take part in single-token adaptation, so they are skipped and returned
/// for reporting instead of rejected.
pub fn read_scored_lexicon(path: &Path) -> Result<(ScoredLexicon, Vec<String>)> {
    let text = read_to_string(path)?;
    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    for (number, line) in data_lines(&text, Some("word\tscore")) {
        let fields = columns(path, number, line, 2)?;
        if fields[0].contains(char::is_whitespace) {
            skipped.push(String::from(fields[0]));
            continue;
        }
        let score: i8 = fields[1]
            .parse()
            .map_err(|_| parse_line(path, number, format!("bad score `{}`", fields[1])))?;
        entries.push((String::from(fields[0]), score));
    }
    let lexicon = ScoredLexicon::from_scores(entries).map_err(|e| parse(path, e))?;
    Ok((lexicon, skipped))
}

pub fn read_antonyms(path: &Path) -> Result<AntonymList> {
    let text = read_to_string(path)?;
    let mut pairs = Vec::new();
    for (number, line) in data_lines(&text, None) {
        let fields = columns(path, number, line, 2)?;
        pairs.push((String::from(fields[0]), String::from(fields[1])));
    }
    AntonymList::from_pairs(pairs).map_err(|e| parse(path, e))
}

pub fn read_verb_pairs(path: &Path) -> Result<VerbPairDataset> {
    let text = read_to_string(path)?;
    let mut pairs = Vec::new();
    for (number, line) in data_lines(&text, None) {
        let fields = columns(path, number, line, 3)?;
        let similar = match fields[2] {
            "1" => true,
            "0" => false,
            other => {
                return Err(parse_line(path, number, format!("judgement must be 0 or 1, got `{other}`")))
            }
        };
        pairs.push(VerbPair {
            first: String::from(fields[0]),
            second: String::from(fields[1]),
            similar,
        });
    }
    VerbPairDataset::new(pairs).map_err(|e| parse(path, e))
}

/// Reads a `word<TAB>sentiment` list (expert deltas, gold labels, or an
/// auxiliary lexicon).
pub fn read_sentiment_lexicon(path: &Path) -> Result<Vec<(String, Sentiment)>> {
    let text = read_to_string(path)?;
    let mut entries = Vec::new();
    for (number, line) in data_lines(&text, Some("word\tsentiment")) {
        let fields = columns(path, number, line, 2)?;
        let sentiment: Sentiment = fields[1]
            .parse()
            .map_err(|e| parse_line(path, number, e))?;
        entries.push((String::from(fields[0]), sentiment));
    }
    Ok(entries)
}

/// Like [`read_sentiment_lexicon`], but as a lookup; repeated words are
/// rejected.
pub fn read_sentiment_map(path: &Path) -> Result<BTreeMap<String, Sentiment>> {
    let mut map = BTreeMap::new();
    for (word, sentiment) in read_sentiment_lexicon(path)? {
        if map.insert(word.clone(), sentiment).is_some() {
            return Err(parse(path, format!("duplicate word `{word}`")));
        }
    }
    Ok(map)
}

/// Reads a `gold<TAB>predicted` label file into two parallel columns.
pub fn read_prediction_pairs(path: &Path) -> Result<(Vec<Sentiment>, Vec<Sentiment>)> {
    let text = read_to_string(path)?;
    let mut gold = Vec::new();
    let mut predicted = Vec::new();
    for (number, line) in data_lines(&text, Some("gold\tpredicted")) {
        let fields = columns(path, number, line, 2)?;
        gold.push(fields[0].parse().map_err(|e| parse_line(path, number, e))?);
        predicted.push(fields[1].parse().map_err(|e| parse_line(path, number, e))?);
    }
    Ok((gold, predicted))
}

pub fn read_adapted_lexicon(path: &Path) -> Result<AdaptedLexicon> {
    let text = read_to_string(path)?;
    let mut entries = Vec::new();
    for (number, line) in data_lines(&text, Some("word\tsentiment\trule")) {
        let fields = columns(path, number, line, 3)?;
        let sentiment: Sentiment = fields[1]
            .parse()
            .map_err(|e| parse_line(path, number, e))?;
        let rule: RuleId = fields[2]
            .parse()
            .map_err(|e| parse_line(path, number, e))?;
        entries.push((String::from(fields[0]), sentiment, rule));
    }
    AdaptedLexicon::from_entries(entries).map_err(|e| parse(path, e))
}

pub const WORKLIST_HEADER: &str = "word\tcurrent\tlabel";

/// Reads the word and current-sentiment columns of a worklist file; the
/// label column is ignored here.
pub fn read_worklist(path: &Path) -> Result<AnnotationWorklist> {
    let text = read_to_string(path)?;
    let mut entries = Vec::new();
    for (number, line) in data_lines(&text, Some(WORKLIST_HEADER)) {
        let fields = columns(path, number, line, 3)?;
        let current: Sentiment = fields[1]
            .parse()
            .map_err(|e| parse_line(path, number, e))?;
        entries.push(WorklistEntry { word: String::from(fields[0]), current, context: None });
    }
    AnnotationWorklist::from_entries(entries).map_err(|e| parse(path, e))
}

/// Reads the filled-in label column of a worklist file. Rows whose label
/// column is still empty are omitted, which the ingest stage then reports
/// as missing annotations.
pub fn read_completed_worklist(path: &Path) -> Result<Vec<(String, Sentiment)>> {
    let text = read_to_string(path)?;
    let mut entries = Vec::new();
    for (number, line) in data_lines(&text, Some(WORKLIST_HEADER)) {
        let fields = columns(path, number, line, 3)?;
        if fields[2].is_empty() {
            continue;
        }
        let sentiment: Sentiment = fields[2]
            .parse()
            .map_err(|e| parse_line(path, number, e))?;
        entries.push((String::from(fields[0]), sentiment));
    }
    Ok(entries)
}

// ---------------------------------------------------------------------------
// Labelled sentence datasets: `label<TAB>sentence[<TAB>provenance]`, with
// part-of-speech tags carried inline as `token_TAG` when the file is tagged.

fn parse_label(path: &Path, number: usize, text: &str, mode: ClassMode) -> Result<DatasetLabel> {
    match mode {
        ClassMode::Three => text
            .parse::<Sentiment>()
            .map(DatasetLabel::Three)
            .map_err(|e| parse_line(path, number, e)),
        ClassMode::Five => text
            .parse::<FiveClassLabel>()
            .map(DatasetLabel::Five)
            .map_err(|e| parse_line(path, number, e)),
    }
}

fn split_tagged(path: &Path, number: usize, text: &str) -> Result<(Vec<String>, Vec<String>)> {
    let mut words = Vec::new();
    let mut tags = Vec::new();
    for token in text.split_whitespace() {
        let Some((word, tag)) = token.rsplit_once('_') else {
            return Err(parse_line(
                path,
                number,
                format!("token `{token}` lacks a part-of-speech tag"),
            ));
        };
        words.push(String::from(word));
        tags.push(String::from(tag));
    }
    Ok((words, tags))
}

pub fn read_dataset(path: &Path, mode: ClassMode, tagged: bool) -> Result<LabeledDataset> {
    let text = read_to_string(path)?;
    let mut sentences = Vec::new();
    for (number, line) in data_lines(&text, Some("label\tsentence")) {
        if number == 1 && line == "label\tsentence\tprovenance" {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 2 && fields.len() != 3 {
            return Err(parse_line(
                path,
                number,
                format!("expected 2 or 3 tab-separated columns, found {}", fields.len()),
            ));
        }
        let label = parse_label(path, number, fields[0], mode)?;
        let (tokens, tags) = if tagged {
            let (words, tags) = split_tagged(path, number, fields[1])?;
            (words, Some(tags))
        } else {
            (fields[1].split_whitespace().map(String::from).collect(), None)
        };
        let mut sentence =
            LabeledSentence::new(tokens, tags, label).map_err(|e| parse_line(path, number, e))?;
        if let Some(provenance) = fields.get(2).filter(|p| !p.is_empty()) {
            let provenance = match *provenance {
                "source" => Provenance::Source,
                "target" => Provenance::Target,
                other => {
                    return Err(parse_line(
                        path,
                        number,
                        format!("provenance must be source or target, got `{other}`"),
                    ))
                }
            };
            sentence = sentence.with_provenance(provenance);
        }
        sentences.push(sentence);
    }
    LabeledDataset::new(mode, sentences).map_err(|e| parse(path, e))
}

/// Renders a dataset back to its TSV form. Sentences that carry tags are
/// written as `token_TAG`; the provenance column appears when any sentence
/// has provenance.
pub fn render_dataset(dataset: &LabeledDataset) -> String {
    let with_provenance = dataset.sentences().iter().any(|s| s.provenance().is_some());
    let mut out = String::from(if with_provenance {
        "label\tsentence\tprovenance\n"
    } else {
        "label\tsentence\n"
    });
    for sentence in dataset.sentences() {
        out.push_str(sentence.label().as_str());
        out.push('\t');
        let rendered: Vec<String> = match sentence.pos_tags() {
            Some(tags) => sentence
                .tokens()
                .iter()
                .zip(tags)
                .map(|(token, tag)| format!("{token}_{tag}"))
                .collect(),
            None => sentence.tokens().to_vec(),
        };
        out.push_str(&rendered.join(" "));
        if with_provenance {
            out.push('\t');
            if let Some(provenance) = sentence.provenance() {
                out.push_str(&provenance.to_string());
            }
        }
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Substitution maps: `TAG<TAB>replacement`, one file per sentiment class.

fn parse_substitution_map(path: &Path, text: &str) -> Result<SubstitutionMap> {
    let mut pairs = Vec::new();
    for (number, line) in data_lines(text, Some("tag\treplacement")) {
        let fields = columns(path, number, line, 2)?;
        pairs.push((String::from(fields[0]), String::from(fields[1])));
    }
    SubstitutionMap::new(pairs).map_err(|e| parse(path, e))
}

/// Loads the three per-class substitution maps, using the built-in tables
/// unless the configuration points at replacements.
pub fn substitution_maps(config: &Config) -> Result<SubstitutionMaps> {
    let mut maps = SubstitutionMaps::default();
    let classes = [
        ("substitution_positive", DEFAULT_SUBSTITUTION_POSITIVE),
        ("substitution_negative", DEFAULT_SUBSTITUTION_NEGATIVE),
        ("substitution_neutral", DEFAULT_SUBSTITUTION_NEUTRAL),
    ];
    for (key, default_text) in classes {
        let map = match config.path(key) {
            Some(path) => parse_substitution_map(&path, &read_to_string(&path)?)?,
            None => parse_substitution_map(Path::new(key), default_text)?,
        };
        match key {
            "substitution_positive" => maps.positive = Some(map),
            "substitution_negative" => maps.negative = Some(map),
            _ => maps.neutral = Some(map),
        }
    }
    Ok(maps)
}

/// Shortest-round-trip rendering for optional floats; absence is an empty
/// cell.
pub fn optional_float(value: Option<f64>) -> String {
    value.map(|v| v.to_string()).unwrap_or_default()
}
