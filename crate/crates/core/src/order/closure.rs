//! Breadth-first closure of a finitely generated subgroup of `PGL_d`.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{CyclotomicScalar, Scalar};

pub const DEFAULT_CLOSURE_CAP: usize = 250_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureResult {
    Finite {
        order: usize,
    },
    /// More than `cap` distinct projective classes were found.
    CapExceeded {
        cap: usize,
    },
}

/// Scale so that the first nonzero entry (row-major) is 1.
pub fn projective_normal_form(m: &Matrix<CyclotomicScalar>) -> Matrix<CyclotomicScalar> {
    let lead = m
        .entries()
        .iter()
        .find(|e| !e.is_zero())
        .expect("nonzero matrix");
    if lead.is_one() {
        return m.clone();
    }
    m.scale(&lead.inverse().expect("nonzero"))
}

/// Order of the image in `PGL_d` of the group generated by `generators`,
/// or `CapExceeded` once more than `cap` elements are found.
pub fn group_closure(generators: &[Matrix<CyclotomicScalar>], cap: usize) -> Result<ClosureResult> {
    let first = generators
        .first()
        .ok_or_else(|| Error::domain("group closure needs at least one generator"))?;
    if generators
        .iter()
        .any(|g| g.dim() != first.dim() || g.determinant().is_zero())
    {
        return Err(Error::domain(
            "generators must be invertible and of equal size",
        ));
    }
    let gens: Vec<_> = generators.iter().map(projective_normal_form).collect();
    let id = Matrix::identity(first.dim(), first.get(0, 0));
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    // In a finite group the monoid generated by the generators is the group.
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = projective_normal_form(&x.mul(g));
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Ok(ClosureResult::CapExceeded { cap });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(ClosureResult::Finite { order: seen.len() })
}
