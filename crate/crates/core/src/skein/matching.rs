use std::fmt;

use crate::error::{Error, Result};

/// A crossingless perfect matching of `2n` boundary points.
///
/// Stored 0-based; every user-facing form (`Display`, JSON, constructors
/// taking pairs) is 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingMatching {
    partner: Vec<usize>,
}

impl NoncrossingMatching {
    /// Build from a partner array (0-based), checking that it is a
    /// fixed-point-free involution without crossings.
    pub fn from_partners(partner: Vec<usize>) -> Result<Self> {
        let len = partner.len();
        if len % 2 != 0 {
            return Err(Error::domain(format!("odd number of points: {len}")));
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= len || p == i || partner[p] != i {
                return Err(Error::domain(format!(
                    "partner array is not a fixed-point-free involution at {}",
                    i + 1
                )));
            }
        }
        for a in 0..len {
            let pa = partner[a];
            if pa < a {
                continue;
            }
            for b in a + 1..pa {
                if partner[b] > pa {
                    return Err(Error::domain(format!(
                        "pairs ({}, {}) and ({}, {}) cross",
                        a + 1,
                        pa + 1,
                        b + 1,
                        partner[b] + 1
                    )));
                }
            }
        }
        Ok(Self { partner })
    }

    /// Build from 1-based pairs covering `1..=2n` exactly once.
    pub fn from_pairs(points: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; points];
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > points || b > points {
                return Err(Error::domain(format!(
                    "pair ({a}, {b}) out of range 1..={points}"
                )));
            }
            let (a, b) = (a - 1, b - 1);
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::domain("point used twice in matching".to_string()));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::domain(
                "matching does not cover every point".to_string(),
            ));
        }
        Self::from_partners(partner)
    }

    /// Side-by-side matching `(1,2), (3,4), ...` on `points` points.
    pub fn side_by_side(points: usize) -> Self {
        let partner = (0..points).map(|i| i ^ 1).collect();
        Self { partner }
    }

    pub fn points(&self) -> usize {
        self.partner.len()
    }

    /// 0-based partner of 0-based point `i`.
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// 1-based pairs `(a, b)` with `a < b`, ordered by `a`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|(i, p)| i < p)
            .map(|(i, p)| (i + 1, p + 1))
            .collect()
    }

    /// Disjoint union with `other` placed to the right.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.partner.len();
        let mut partner = self.partner.clone();
        partner.extend(other.partner.iter().map(|p| p + shift));
        Self { partner }
    }

    /// Compose the cap-cup diagram `E_i` (1-based `i`, joining points `i`
    /// and `i+1`) onto the matching. Returns the new matching and the number
    /// of closed loops created (0 or 1).
    pub fn apply_tl_generator(&self, i: usize) -> Result<(Self, u32)> {
        let len = self.partner.len();
        if i == 0 || i >= len {
            return Err(Error::domain(format!(
                "Temperley-Lieb generator index {i} outside 1..={}",
                len.saturating_sub(1)
            )));
        }
        let (a, b) = (i - 1, i);
        if self.partner[a] == b {
            return Ok((self.clone(), 1));
        }
        let (pa, pb) = (self.partner[a], self.partner[b]);
        let mut partner = self.partner.clone();
        partner[a] = b;
        partner[b] = a;
        partner[pa] = pb;
        partner[pb] = pa;
        Ok((Self { partner }, 0))
    }
}

impl fmt::Display for NoncrossingMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs()
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for NoncrossingMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All crossingless matchings of `2n` points, lexicographically increasing
/// in their partner arrays. `n = 0` gives the single empty matching.
pub fn enumerate_matchings(n: i64) -> Result<Vec<NoncrossingMatching>> {
    if n < 0 {
        return Err(Error::domain(format!("negative half point count {n}")));
    }
    let points = 2 * n as usize;
    let mut out = Vec::new();
    let mut partner = vec![0usize; points];
    fill(
        &mut partner,
        0,
        points,
        &mut |p| out.push(p.to_vec()),
        &mut Vec::new(),
    );
    let mut matchings: Vec<_> = out
        .into_iter()
        .map(|partner| NoncrossingMatching { partner })
        .collect();
    matchings.sort();
    Ok(matchings)
}

/// Pair up the intervals on `stack` (plus `[lo, hi)`) recursively.
fn fill(
    partner: &mut [usize],
    lo: usize,
    hi: usize,
    emit: &mut dyn FnMut(&[usize]),
    stack: &mut Vec<(usize, usize)>,
) {
    if lo >= hi {
        match stack.pop() {
            None => emit(partner),
            Some((l, h)) => {
                fill(partner, l, h, emit, stack);
                stack.push((l, h));
            }
        }
        return;
    }
    // lo pairs with lo + 2k + 1; the inside and the rest are independent.
    let mut mate = lo + 1;
    while mate < hi {
        partner[lo] = mate;
        partner[mate] = lo;
        stack.push((mate + 1, hi));
        fill(partner, lo + 1, mate, emit, stack);
        stack.pop();
        mate += 2;
    }
}

pub fn catalan(n: u64) -> u64 {
    // C(2n, n) / (n + 1), computed incrementally to stay in range
    (0..n).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}
