//! Building blocks for adapting a sentiment lexicon to a new domain.
//!
//! The crate assumes the following setting: a *source* domain (for example
//! movie reviews) provides sentence-level sentiment annotations and word
//! embeddings, while the *target* domain (for example legal text) provides
//! only raw text and embeddings of its own. The goal is to decide, for every
//! frequent target-domain word, whether the sentiment it carried in the
//! source domain still applies, and to repair it when it does not.
//!
//! The modules follow the stages of that pipeline:
//!
//! * [`corpus`]: tokenization, stopword removal, frequency tables and the
//!   coverage-based vocabulary cutoff.
//! * [`embedding`]: normalized embedding spaces, cosine similarity and
//!   nearest-neighbour queries.
//! * [`lexicon`]: seed sentiment partitions, scored sentiment lexicons and
//!   antonym lists.
//! * [`profile`]: per-word evidence (domain similarity, lexicon affinity,
//!   under-representation) and threshold calibration on verb pairs.
//! * [`adapt`]: the rule table that reassigns sentiment, deviation tracking,
//!   annotation worklists and expert-confirmed deviation sets.
//! * [`transfer`]: labelled-dataset surgery for downstream model training:
//!   label collapsing, negative-transfer filtering, sentence sampling,
//!   merging and token substitution.
//! * [`metrics`]: confusion matrices, per-class precision/recall/F and
//!   lexicon-against-gold comparisons.
//!
//! Everything here is deterministic: ordered maps are used throughout,
//! similarity ties break lexicographically, and randomized sampling is
//! driven by explicit seeds.
//!
//! The crate is `no_std`-compatible (with `alloc`). Disable the default
//! `std` feature and enable `libm` to build it for targets without a
//! standard library.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod adapt;
pub mod corpus;
pub mod embedding;
pub mod error;
pub mod lexicon;
pub mod metrics;
pub mod profile;
pub mod transfer;

mod float;
mod sentiment;

pub use error::Error;
pub use sentiment::{FiveClassLabel, Sentiment};

/// Convenient alias for fallible operations in this crate.
pub type Result<T> = core::result::Result<T, Error>;
