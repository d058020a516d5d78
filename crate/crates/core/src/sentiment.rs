//! Sentiment label types.

use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;

use crate::error::Error;

/// Three-way sentiment polarity. The canonical class order everywhere in
/// this crate is negative, neutral, positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sentiment {
    Negative,
    Neutral,
    Positive,
}

impl Sentiment {
    /// All classes in canonical order.
    pub const ALL: [Sentiment; 3] = [Sentiment::Negative, Sentiment::Neutral, Sentiment::Positive];

    pub fn as_str(self) -> &'static str {
        match self {
            Sentiment::Negative => "negative",
            Sentiment::Neutral => "neutral",
            Sentiment::Positive => "positive",
        }
    }

    /// Position in the canonical class order.
    pub fn index(self) -> usize {
        match self {
            Sentiment::Negative => 0,
            Sentiment::Neutral => 1,
            Sentiment::Positive => 2,
        }
    }

    pub fn is_polar(self) -> bool {
        !matches!(self, Sentiment::Neutral)
    }

    /// The opposite polarity; neutral has none.
    pub fn opposite(self) -> Option<Sentiment> {
        match self {
            Sentiment::Negative => Some(Sentiment::Positive),
            Sentiment::Neutral => None,
            Sentiment::Positive => Some(Sentiment::Negative),
        }
    }
}

impl fmt::Display for Sentiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Sentiment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "negative" => Ok(Sentiment::Negative),
            "neutral" => Ok(Sentiment::Neutral),
            "positive" => Ok(Sentiment::Positive),
            other => Err(Error::UnknownLabel { label: other.to_string() }),
        }
    }
}

/// Five-way label used by source-domain sentence annotations and seed
/// lexicons in the style of the Stanford Sentiment Treebank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiveClassLabel {
    VeryNegative,
    Negative,
    Neutral,
    Positive,
    VeryPositive,
}

impl FiveClassLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            FiveClassLabel::VeryNegative => "very_negative",
            FiveClassLabel::Negative => "negative",
            FiveClassLabel::Neutral => "neutral",
            FiveClassLabel::Positive => "positive",
            FiveClassLabel::VeryPositive => "very_positive",
        }
    }

    /// Collapses to three classes: the `very_*` labels fold into their
    /// plain counterparts.
    pub fn collapse(self) -> Sentiment {
        match self {
            FiveClassLabel::VeryNegative | FiveClassLabel::Negative => Sentiment::Negative,
            FiveClassLabel::Neutral => Sentiment::Neutral,
            FiveClassLabel::Positive | FiveClassLabel::VeryPositive => Sentiment::Positive,
        }
    }
}

impl fmt::Display for FiveClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FiveClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "very_negative" => Ok(FiveClassLabel::VeryNegative),
            "negative" => Ok(FiveClassLabel::Negative),
            "neutral" => Ok(FiveClassLabel::Neutral),
            "positive" => Ok(FiveClassLabel::Positive),
            "very_positive" => Ok(FiveClassLabel::VeryPositive),
            other => Err(Error::UnknownLabel { label: other.to_string() }),
        }
    }
}
