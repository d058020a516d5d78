use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use lexshift_core::adapt::{NeighborTransferScope, RulePrecedence};
use lexshift_core::profile::{default_threshold_grid, ProfileParams};

use crate::error::{CliError, Result};

/// Every key the configuration understands, with its default where one
/// exists. Unknown keys are rejected so typos surface immediately.
const KNOWN_KEYS: &[&str] = &[
    "target_embeddings",
    "source_embeddings",
    "bridge_embeddings",
    "source_labels",
    "aux_lexicon",
    "scored_lexicon",
    "antonyms",
    "stopwords",
    "verb_pairs",
    "target_corpus",
    "source_corpus",
    "substitution_positive",
    "substitution_negative",
    "substitution_neutral",
    "coverage",
    "domain_similarity_threshold",
    "under_represented_below",
    "rng_seed",
    "per_word_samples",
    "rule_precedence",
    "neighbor_transfer_scope",
    "neighbor_pool",
    "threshold_grid",
];

const SCALAR_DEFAULTS: &[(&str, &str)] = &[
    ("coverage", "0.95"),
    ("domain_similarity_threshold", "0.2"),
    ("under_represented_below", "3"),
    ("rng_seed", "0"),
    ("per_word_samples", "2"),
    ("rule_precedence", "lexicon_first"),
    ("neighbor_transfer_scope", "all_words"),
    ("neighbor_pool", "all"),
];

#[derive(Clone, Debug)]
struct Entry {
    value: String,
    /// Directory that relative paths in this value resolve against: the
    /// config file's directory for file entries, the working directory
    /// for --set overrides.
    base: PathBuf,
}

/// Layered key=value configuration: command-line overrides beat the config
/// file, which beats built-in defaults.
#[derive(Clone, Debug, Default)]
pub struct Config {
    values: BTreeMap<String, Entry>,
}

fn split_pair(text: &str) -> Option<(&str, &str)> {
    let (key, value) = text.split_once('=')?;
    let key = key.trim();
    let value = value.trim();
    (!key.is_empty()).then_some((key, value))
}

fn check_key(key: &str, origin: &str) -> Result<()> {
    if KNOWN_KEYS.contains(&key) {
        Ok(())
    } else {
        Err(CliError::Config(format!("unknown key `{key}` in {origin}")))
    }
}

impl Config {
    pub fn load(file: Option<&Path>, overrides: &[String]) -> Result<Self> {
        let mut values = BTreeMap::new();
        if let Some(path) = file {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::Config(format!("cannot read config {}: {e}", path.display()))
            })?;
            let base = path
                .parent()
                .filter(|p| !p.as_os_str().is_empty())
                .map(Path::to_path_buf)
                .unwrap_or_else(|| PathBuf::from("."));
            for (number, raw) in text.lines().enumerate() {
                let line = raw.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let Some((key, value)) = split_pair(line) else {
                    return Err(CliError::Config(format!(
                        "{}:{}: expected key=value, got `{line}`",
                        path.display(),
                        number + 1
                    )));
                };
                check_key(key, &format!("{}", path.display()))?;
                values.insert(
                    String::from(key),
                    Entry { value: String::from(value), base: base.clone() },
                );
            }
        }
        for raw in overrides {
            let Some((key, value)) = split_pair(raw) else {
                return Err(CliError::Config(format!("--set expects key=value, got `{raw}`")));
            };
            check_key(key, "--set")?;
            values.insert(
                String::from(key),
                Entry { value: String::from(value), base: PathBuf::from(".") },
            );
        }
        Ok(Config { values })
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.values
            .get(key)
            .map(|e| e.value.as_str())
            .or_else(|| SCALAR_DEFAULTS.iter().find(|(k, _)| *k == key).map(|(_, v)| *v))
    }

    /// The path stored under `key`, resolved against its origin, if set.
    pub fn path(&self, key: &str) -> Option<PathBuf> {
        let entry = self.values.get(key)?;
        let path = Path::new(&entry.value);
        if path.is_absolute() {
            Some(path.to_path_buf())
        } else {
            Some(entry.base.join(path))
        }
    }

    pub fn require_path(&self, key: &str) -> Result<PathBuf> {
        self.path(key)
            .ok_or_else(|| CliError::Config(format!("missing required key `{key}`")))
    }

    fn parse_with<T, E>(&self, key: &str, parse: impl Fn(&str) -> std::result::Result<T, E>) -> Result<Option<T>> {
        match self.raw(key) {
            None => Ok(None),
            Some(text) => parse(text).map(Some).map_err(|_| {
                CliError::Config(format!("invalid value `{text}` for key `{key}`"))
            }),
        }
    }

    pub fn coverage(&self) -> Result<f64> {
        Ok(self.parse_with("coverage", str::parse::<f64>)?.unwrap_or(0.95))
    }

    pub fn rng_seed(&self) -> Result<u64> {
        Ok(self.parse_with("rng_seed", str::parse::<u64>)?.unwrap_or(0))
    }

    pub fn per_word_samples(&self) -> Result<usize> {
        Ok(self.parse_with("per_word_samples", str::parse::<usize>)?.unwrap_or(2))
    }

    pub fn profile_params(&self) -> Result<ProfileParams> {
        let defaults = ProfileParams::default();
        Ok(ProfileParams {
            domain_similarity_threshold: self
                .parse_with("domain_similarity_threshold", str::parse::<f64>)?
                .unwrap_or(defaults.domain_similarity_threshold),
            under_represented_below: self
                .parse_with("under_represented_below", str::parse::<u64>)?
                .unwrap_or(defaults.under_represented_below),
        })
    }

    pub fn rule_precedence(&self) -> Result<RulePrecedence> {
        match self.raw("rule_precedence").unwrap_or("lexicon_first") {
            "lexicon_first" => Ok(RulePrecedence::LexiconFirst),
            "neighbor_first" => Ok(RulePrecedence::NeighborFirst),
            other => Err(CliError::Config(format!(
                "rule_precedence must be lexicon_first or neighbor_first, got `{other}`"
            ))),
        }
    }

    pub fn neighbor_transfer_scope(&self) -> Result<NeighborTransferScope> {
        match self.raw("neighbor_transfer_scope").unwrap_or("all_words") {
            "all_words" => Ok(NeighborTransferScope::AllWords),
            "specific_or_under_represented" => {
                Ok(NeighborTransferScope::SpecificOrUnderRepresented)
            }
            other => Err(CliError::Config(format!(
                "neighbor_transfer_scope must be all_words or \
                 specific_or_under_represented, got `{other}`"
            ))),
        }
    }

    /// Whether neighbour queries see every word in a space (`all`) or only
    /// the working vocabulary (`vocabulary`).
    pub fn neighbor_pool_is_vocabulary(&self) -> Result<bool> {
        match self.raw("neighbor_pool").unwrap_or("all") {
            "all" => Ok(false),
            "vocabulary" => Ok(true),
            other => Err(CliError::Config(format!(
                "neighbor_pool must be all or vocabulary, got `{other}`"
            ))),
        }
    }

    pub fn threshold_grid(&self) -> Result<Vec<f64>> {
        match self.raw("threshold_grid") {
            None => Ok(default_threshold_grid()),
            Some(text) => {
                let mut grid = Vec::new();
                for piece in text.split(',') {
                    let value: f64 = piece.trim().parse().map_err(|_| {
                        CliError::Config(format!(
                            "threshold_grid must be comma-separated numbers, got `{text}`"
                        ))
                    })?;
                    grid.push(value);
                }
                Ok(grid)
            }
        }
    }

    /// The full effective configuration: every set key plus the defaults
    /// for unset scalar keys. This is what the run manifest records and
    /// hashes, so setting a key to its default value is visible.
    pub fn effective(&self) -> BTreeMap<String, String> {
        let mut map: BTreeMap<String, String> = SCALAR_DEFAULTS
            .iter()
            .map(|(k, v)| (String::from(*k), String::from(*v)))
            .collect();
        for (key, entry) in &self.values {
            map.insert(key.clone(), entry.value.clone());
        }
        map
    }
}
