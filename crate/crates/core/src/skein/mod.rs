//! The skein module of the disk with `2n` marked points.

mod braid;
mod matching;
mod rep;

pub use braid::{reduced_words, BraidWord};
pub use matching::{catalan, enumerate_matchings, NoncrossingMatching};
pub use rep::{RingSelector, SkeinModule, SkeinParams, DEFAULT_MAX_HALF_POINTS};
