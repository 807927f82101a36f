//! Dense square matrices over a [`Scalar`] ring.

use std::fmt;

use crate::scalar::Scalar;

/// A `dim x dim` matrix, row-major. Column `b` holds the image of basis
/// vector `b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    dim: usize,
    entries: Vec<R>,
}

impl<R: Scalar> Matrix<R> {
    /// Every entry equal to `zero`, which is only used as a prototype.
    pub fn zeros(dim: usize, proto: &R) -> Self {
        assert!(dim > 0, "matrices are at least 1x1");
        Self {
            dim,
            entries: vec![proto.zero_like(); dim * dim],
        }
    }

    pub fn identity(dim: usize, proto: &R) -> Self {
        Self::scalar(dim, &proto.one_like())
    }

    pub fn scalar(dim: usize, c: &R) -> Self {
        let mut m = Self::zeros(dim, c);
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let dim = rows.len();
        assert!(
            dim > 0 && rows.iter().all(|r| r.len() == dim),
            "matrix must be square"
        );
        Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: R) {
        self.entries[row * self.dim + col] = value;
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        self.entries.chunks(self.dim).map(<[R]>::to_vec).collect()
    }

    pub fn column(&self, col: usize) -> Vec<R> {
        (0..self.dim).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = Self::zeros(d, &self.entries[0]);
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &rhs.entries[k * d + j];
                    if !b.is_zero() {
                        let slot = &mut out.entries[i * d + j];
                        *slot = slot.add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim, &self.entries[0]);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| {
                v.iter().enumerate().fold(v[0].zero_like(), |acc, (j, x)| {
                    acc.add(&self.get(i, j).mul(x))
                })
            })
            .collect()
    }

    pub fn trace(&self) -> R {
        (1..self.dim).fold(self.entries[0].clone(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut out = self.clone();
        for i in 0..d {
            for j in 0..d {
                out.entries[j * d + i] = self.entries[i * d + j].clone();
            }
        }
        out
    }

    /// `Some(c)` if the matrix is exactly `c * Id`.
    pub fn as_scalar(&self) -> Option<R> {
        let c = self.entries[0].clone();
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let e = &self.entries[i * d + j];
                let ok = if i == j { *e == c } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_one())
    }

    /// Coefficients of `det(x Id - self)` from constant term up to the
    /// leading 1, by Berkowitz's division-free algorithm.
    pub fn charpoly(&self) -> Vec<R> {
        let d = self.dim;
        let zero = self.entries[0].zero_like();
        let one = zero.one_like();
        // highest-degree-first during the recursion
        let mut poly = vec![one.clone()];
        for k in 0..d {
            let a = |i: usize, j: usize| &self.entries[i * d + j];
            let mut toeplitz = Vec::with_capacity(k + 2);
            toeplitz.push(one.clone());
            toeplitz.push(a(k, k).neg());
            // w = A_k^i C for i = 0..k-1, contribution -(R w)
            let mut w: Vec<R> = (0..k).map(|i| a(i, k).clone()).collect();
            for step in 0..k {
                let rw = (0..k).fold(zero.clone(), |acc, j| acc.add(&a(k, j).mul(&w[j])));
                toeplitz.push(rw.neg());
                if step + 1 < k {
                    w = (0..k)
                        .map(|i| (0..k).fold(zero.clone(), |acc, j| acc.add(&a(i, j).mul(&w[j]))))
                        .collect();
                }
            }
            let next: Vec<R> = (0..k + 2)
                .map(|i| {
                    (0..=i.min(k)).fold(zero.clone(), |acc, j| {
                        if i - j < toeplitz.len() {
                            acc.add(&toeplitz[i - j].mul(&poly[j]))
                        } else {
                            acc
                        }
                    })
                })
                .collect();
            poly = next;
        }
        poly.reverse();
        poly
    }

    pub fn determinant(&self) -> R {
        if self.dim == 2 {
            return self
                .get(0, 0)
                .mul(self.get(1, 1))
                .sub(&self.get(0, 1).mul(self.get(1, 0)));
        }
        let c0 = self.charpoly().swap_remove(0);
        if self.dim % 2 == 0 {
            c0
        } else {
            c0.neg()
        }
    }
}

impl<R: Scalar> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.dim) {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Scalar> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LaurentPolynomial as L;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> L {
        L::from_terms(terms.iter().copied())
    }

    /// Cofactor expansion, the independent determinant oracle.
    fn det_laplace(m: &Matrix<L>) -> L {
        let d = m.dim();
        if d == 1 {
            return m.get(0, 0).clone();
        }
        (0..d).fold(L::zero(), |acc, j| {
            let minor = Matrix::from_rows(
                (1..d)
                    .map(|i| {
                        (0..d)
                            .filter(|&c| c != j)
                            .map(|c| m.get(i, c).clone())
                            .collect()
                    })
                    .collect(),
            );
            let term = m.get(0, j) * &det_laplace(&minor);
            if j % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            }
        })
    }

    fn arb_matrix(d: usize) -> impl Strategy<Value = Matrix<L>> {
        prop::collection::vec(prop::collection::vec((-3i64..4, -2i64..3), 0..3), d * d).prop_map(
            move |cells| {
                let rows = cells
                    .chunks(d)
                    .map(|r| {
                        r.iter()
                            .map(|t| L::from_terms(t.iter().map(|&(e, c)| (e, c))))
                            .collect()
                    })
                    .collect();
                Matrix::from_rows(rows)
            },
        )
    }

    proptest! {
        #[test]
        fn berkowitz_determinant_matches_laplace(m in arb_matrix(3)) {
            prop_assert_eq!(m.determinant(), det_laplace(&m));
        }

        #[test]
        fn charpoly_trace_and_cayley_hamilton(m in arb_matrix(3)) {
            let c = m.charpoly();
            prop_assert_eq!(c.len(), 4);
            prop_assert_eq!(c[2].clone(), -m.trace());
            // sum c_i M^i = 0
            let mut acc = Matrix::zeros(3, &L::zero());
            for (i, ci) in c.iter().enumerate() {
                acc = acc.add(&m.pow(i as u64).scale(ci));
            }
            prop_assert!(acc.as_scalar().is_some_and(|z| z.is_zero()));
        }
    }

    #[test]
    fn scalar_detection() {
        let a = lp(&[(1, 1)]);
        let m = Matrix::scalar(3, &a);
        assert_eq!(m.as_scalar(), Some(a.clone()));
        let mut n = m.clone();
        n.set(0, 1, L::one());
        assert_eq!(n.as_scalar(), None);
        assert!(Matrix::identity(2, &a).is_identity());
    }
}
