//! Versioned JSON records shared by the CLI and the browser demo.
//!
//! See `docs/json-schemas.md` for the field-by-field description.

use serde::{Deserialize, Serialize};

use crate::matrix::Matrix;
use crate::scalar::{CyclotomicScalar, Scalar};
use crate::skein::{BraidWord, NoncrossingMatching, RingSelector};

pub const MATRIX_SCHEMA: &str = "skein-mcg/matrix/v1";
pub const MATCHING_SCHEMA: &str = "skein-mcg/matching/v1";
pub const WORD_SCHEMA: &str = "skein-mcg/braid-word/v1";

/// A cyclotomic scalar: conductor plus power-basis coefficients as
/// rational strings (`"3"`, `"-1/2"`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub conductor: u64,
    pub coeffs: Vec<String>,
    pub text: String,
}

impl From<&CyclotomicScalar> for ScalarJson {
    fn from(s: &CyclotomicScalar) -> Self {
        Self {
            conductor: s.conductor(),
            coeffs: s.coeff_strings(),
            text: s.to_string(),
        }
    }
}

/// Matching as 1-based pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingJson {
    pub points: usize,
    pub pairs: Vec<[usize; 2]>,
}

impl From<&NoncrossingMatching> for MatchingJson {
    fn from(m: &NoncrossingMatching) -> Self {
        Self {
            points: m.points(),
            pairs: m.pairs().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl MatchingJson {
    pub fn to_matching(&self) -> crate::Result<NoncrossingMatching> {
        let pairs: Vec<(usize, usize)> = self.pairs.iter().map(|p| (p[0], p[1])).collect();
        NoncrossingMatching::from_pairs(self.points, &pairs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWordJson {
    pub schema: String,
    pub points: usize,
    pub letters: Vec<i32>,
}

impl From<&BraidWord> for BraidWordJson {
    fn from(w: &BraidWord) -> Self {
        Self {
            schema: WORD_SCHEMA.to_string(),
            points: 2 * w.n(),
            letters: w.letters().to_vec(),
        }
    }
}

/// A skein matrix: row-major rows of entry strings in the canonical scalar
/// rendering (Laurent polynomials in `A`, or polynomials in `z = zeta_N`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub schema: String,
    pub points: usize,
    pub dim: usize,
    pub ring: RingSelector,
    pub word: Vec<i32>,
    pub basis: Vec<MatchingJson>,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn new<R: Scalar>(
        word: &BraidWord,
        ring: RingSelector,
        basis: &[NoncrossingMatching],
        m: &Matrix<R>,
    ) -> Self {
        Self {
            schema: MATRIX_SCHEMA.to_string(),
            points: 2 * word.n(),
            dim: m.dim(),
            ring,
            word: word.letters().to_vec(),
            basis: basis.iter().map(MatchingJson::from).collect(),
            entries: m
                .rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}
