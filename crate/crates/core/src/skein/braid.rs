use std::fmt;

use crate::error::{Error, Result};

/// Word in the generators of `B_2n`: letter `i` is `sigma_i`, letter `-i`
/// is `sigma_i^-1`, with `1 <= |i| <= 2n - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        let max = (2 * n).saturating_sub(1) as i32;
        if let Some(bad) = letters.iter().find(|&&l| l == 0 || l.abs() > max) {
            return Err(Error::domain(format!(
                "braid letter {bad} outside ±1..=±{max} for {} strands",
                2 * n
            )));
        }
        Ok(Self { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            letters: Vec::new(),
        }
    }

    /// Whitespace- or comma-separated signed integers.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let letters = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad braid letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, letters)
    }

    /// Half the number of strands.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "words on different strand counts");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { n: self.n, letters }
    }

    pub fn pow(&self, k: usize) -> Self {
        Self {
            n: self.n,
            letters: self.letters.repeat(k),
        }
    }

    /// No letter is immediately followed by its inverse.
    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != -w[1])
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Freely reduced words of length `1..=max_len` in `B_2n`, shortlex order
/// with letters ordered `1, -1, 2, -2, ...`.
pub fn reduced_words(n: usize, max_len: usize) -> Vec<BraidWord> {
    let gens = (2 * n).saturating_sub(1) as i32;
    let alphabet: Vec<i32> = (1..=gens).flat_map(|i| [i, -i]).collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &alphabet {
                if w.last() == Some(&-l) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|l| BraidWord {
            n,
            letters: l.clone(),
        }));
        layer = next;
    }
    out
}
