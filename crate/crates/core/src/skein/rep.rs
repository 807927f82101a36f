//! Matrices of Temperley-Lieb generators and braid words on the skein
//! module of the disk with `2n` marked points.
//!
//! Convention: `rho(sigma_i) = A E_i + A^-1 Id` and
//! `rho(sigma_i^-1) = A^-1 E_i + A Id`, where `E_i` acts on matchings by
//! [`NoncrossingMatching::apply_tl_generator`] and each closed loop becomes
//! `delta = -A^2 - A^-2`. With the lexicographic basis order this gives,
//! for `2n = 4`,
//!
//! ```text
//! rho(sigma_1) = [[-A^3, A], [0, A^-1]]    rho(sigma_2) = [[A^-1, 0], [A, -A^3]]
//! ```
//!
//! The labelling `D1 = {(1,2),(3,4)}`, `D2 = {(1,4),(2,3)}` is forced by
//! these matrices: the first column of `rho(sigma_1)` is `(-A^3, 0)`, so
//! `E_1 D1` must close a loop, i.e. `partner(1) = 2` in `D1`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::braid::BraidWord;
use super::matching::{enumerate_matchings, NoncrossingMatching};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{
    CyclotomicField, CyclotomicScalar, LaurentPolynomial, RootOfUnityChoice, Scalar,
};

/// Default cap on `n` (half the number of points); `d = Catalan(6) = 132`.
pub const DEFAULT_MAX_HALF_POINTS: usize = 6;

/// Which scalar ring a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingSelector {
    /// `Z[A, A^-1]`
    Symbolic,
    /// `Q(zeta_N)` with `A = zeta_N^j`
    Root { conductor: u64, exponent: u64 },
}

impl RingSelector {
    pub fn root(choice: RootOfUnityChoice) -> Self {
        RingSelector::Root {
            conductor: choice.conductor(),
            exponent: choice.exponent(),
        }
    }

    pub fn choice(&self) -> Option<RootOfUnityChoice> {
        match *self {
            RingSelector::Symbolic => None,
            RingSelector::Root {
                conductor,
                exponent,
            } => RootOfUnityChoice::new(conductor, exponent).ok(),
        }
    }
}

impl fmt::Display for RingSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSelector::Symbolic => f.write_str("symbolic"),
            RingSelector::Root {
                conductor,
                exponent,
            } => write!(f, "{conductor}:{exponent}"),
        }
    }
}

/// The values of `A`, `A^-1` and `delta` in a particular ring.
#[derive(Clone, Debug)]
pub struct SkeinParams<R> {
    pub a: R,
    pub a_inv: R,
    pub delta: R,
}

impl<R: Scalar> SkeinParams<R> {
    /// `A^k` for any integer `k`.
    pub fn a_pow(&self, k: i64) -> R {
        if k >= 0 {
            self.a.pow(k as u64)
        } else {
            self.a_inv.pow(k.unsigned_abs())
        }
    }

    pub fn one(&self) -> R {
        self.a.one_like()
    }

    pub fn zero(&self) -> R {
        self.a.zero_like()
    }
}

impl SkeinParams<LaurentPolynomial> {
    pub fn symbolic() -> Self {
        Self {
            a: LaurentPolynomial::a_pow(1),
            a_inv: LaurentPolynomial::a_pow(-1),
            delta: LaurentPolynomial::delta(),
        }
    }
}

impl SkeinParams<CyclotomicScalar> {
    pub fn at_root(choice: RootOfUnityChoice) -> Self {
        Self::at_root_in(choice, &choice.field())
    }

    pub fn at_root_in(choice: RootOfUnityChoice, field: &Arc<CyclotomicField>) -> Self {
        let a = choice.a_pow(field, 1);
        let a_inv = choice.a_pow(field, -1);
        let delta = -&(&choice.a_pow(field, 2) + &choice.a_pow(field, -2));
        Self { a, a_inv, delta }
    }
}

/// The crossingless-matching basis of the skein module on `2n` points with
/// the generator action tabulated.
#[derive(Clone, Debug)]
pub struct SkeinModule {
    n: usize,
    basis: Vec<NoncrossingMatching>,
    index: HashMap<NoncrossingMatching, usize>,
    /// `action[i - 1][b] = (index of E_i b, loops)`
    action: Vec<Vec<(usize, u32)>>,
}

impl SkeinModule {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, DEFAULT_MAX_HALF_POINTS)
    }

    pub fn with_cap(n: usize, max_half_points: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("the skein module needs at least 2 points"));
        }
        if n > max_half_points {
            return Err(Error::domain(format!(
                "2n = {} exceeds the configured cap of {} points",
                2 * n,
                2 * max_half_points
            )));
        }
        let basis = enumerate_matchings(n as i64)?;
        let index: HashMap<_, _> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let action = (1..2 * n)
            .map(|i| {
                basis
                    .iter()
                    .map(|b| {
                        let (img, loops) = b.apply_tl_generator(i).expect("index in range");
                        (index[&img], loops)
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            n,
            basis,
            index,
            action,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[NoncrossingMatching] {
        &self.basis
    }

    pub fn index_of(&self, m: &NoncrossingMatching) -> Option<usize> {
        self.index.get(m).copied()
    }

    fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i >= 2 * self.n {
            return Err(Error::domain(format!(
                "generator index {i} outside 1..={}",
                2 * self.n - 1
            )));
        }
        Ok(())
    }

    fn check_word(&self, w: &BraidWord) -> Result<()> {
        if w.n() != self.n {
            return Err(Error::domain(format!(
                "word on {} strands applied to module on {} points",
                2 * w.n(),
                2 * self.n
            )));
        }
        Ok(())
    }

    /// `rho(E_i)`.
    pub fn tl_matrix<R: Scalar>(&self, params: &SkeinParams<R>, i: usize) -> Result<Matrix<R>> {
        self.check_generator(i)?;
        let mut m = Matrix::zeros(self.dim(), &params.a);
        for (b, &(t, loops)) in self.action[i - 1].iter().enumerate() {
            let c = if loops == 1 {
                params.delta.clone()
            } else {
                params.one()
            };
            m.set(t, b, m.get(t, b).add(&c));
        }
        Ok(m)
    }

    /// `rho(sigma_i^sign)`.
    pub fn generator_matrix<R: Scalar>(
        &self,
        params: &SkeinParams<R>,
        i: usize,
        sign: i32,
    ) -> Result<Matrix<R>> {
        self.check_generator(i)?;
        let id = Matrix::identity(self.dim(), &params.a);
        self.apply_letter(params, generator_letter(i, sign)?, &id)
    }

    /// `rho(sigma_|letter|^sign(letter)) * x`, in `O(d^2)`.
    pub fn apply_letter<R: Scalar>(
        &self,
        params: &SkeinParams<R>,
        letter: i32,
        x: &Matrix<R>,
    ) -> Result<Matrix<R>> {
        let i = letter.unsigned_abs() as usize;
        self.check_generator(i)?;
        let (coef_e, coef_id) = letter_coefficients(params, letter);
        let coef_e_loop = coef_e.mul(&params.delta);
        let d = self.dim();
        let mut out = Matrix::zeros(d, &params.a);
        for (b, &(t, loops)) in self.action[i - 1].iter().enumerate() {
            let ce = if loops == 1 { &coef_e_loop } else { &coef_e };
            for col in 0..d {
                let v = x.get(b, col);
                if v.is_zero() {
                    continue;
                }
                out.set(t, col, out.get(t, col).add(&ce.mul(v)));
                out.set(b, col, out.get(b, col).add(&coef_id.mul(v)));
            }
        }
        Ok(out)
    }

    fn apply_letter_to_vector<R: Scalar>(
        &self,
        params: &SkeinParams<R>,
        letter: i32,
        v: &[R],
    ) -> Vec<R> {
        let i = letter.unsigned_abs() as usize;
        let (coef_e, coef_id) = letter_coefficients(params, letter);
        let coef_e_loop = coef_e.mul(&params.delta);
        let mut out = vec![params.zero(); v.len()];
        for (b, &(t, loops)) in self.action[i - 1].iter().enumerate() {
            if v[b].is_zero() {
                continue;
            }
            let ce = if loops == 1 { &coef_e_loop } else { &coef_e };
            out[t] = out[t].add(&ce.mul(&v[b]));
            out[b] = out[b].add(&coef_id.mul(&v[b]));
        }
        out
    }

    /// `rho(w) = rho(l_1) rho(l_2) ... rho(l_k)`; the empty word gives `Id`.
    pub fn word_matrix<R: Scalar>(
        &self,
        params: &SkeinParams<R>,
        w: &BraidWord,
    ) -> Result<Matrix<R>> {
        self.check_word(w)?;
        let mut x = Matrix::identity(self.dim(), &params.a);
        for &l in w.letters().iter().rev() {
            x = self.apply_letter(params, l, &x)?;
        }
        Ok(x)
    }

    /// `rho(w) v`.
    pub fn word_apply<R: Scalar>(
        &self,
        params: &SkeinParams<R>,
        w: &BraidWord,
        v: &[R],
    ) -> Result<Vec<R>> {
        self.check_word(w)?;
        assert_eq!(v.len(), self.dim());
        let mut v = v.to_vec();
        for &l in w.letters().iter().rev() {
            v = self.apply_letter_to_vector(params, l, &v);
        }
        Ok(v)
    }

    /// Restriction of `rho(w)` to `span{D1 ⊔ filler, D2 ⊔ filler}` for a word
    /// in `sigma_1^±1, sigma_2^±1`, where `D1 = {(1,2),(3,4)}` and
    /// `D2 = {(1,4),(2,3)}` and `filler` sits on points `5..=2n`.
    pub fn two_strand_subrep<R: Scalar>(
        &self,
        params: &SkeinParams<R>,
        w: &BraidWord,
        filler: &NoncrossingMatching,
    ) -> Result<Matrix<R>> {
        if self.n < 2 {
            return Err(Error::domain("two-strand subrepresentation needs 2n >= 4"));
        }
        self.check_word(w)?;
        if let Some(l) = w.letters().iter().find(|l| l.abs() > 2) {
            return Err(Error::domain(format!(
                "letter {l}: only sigma_1 and sigma_2 preserve the two-dimensional subspace"
            )));
        }
        if filler.points() != 2 * self.n - 4 {
            return Err(Error::domain(format!(
                "filler has {} points, expected {}",
                filler.points(),
                2 * self.n - 4
            )));
        }
        let d1 = NoncrossingMatching::from_pairs(4, &[(1, 2), (3, 4)])?.disjoint_union(filler);
        let d2 = NoncrossingMatching::from_pairs(4, &[(1, 4), (2, 3)])?.disjoint_union(filler);
        let idx = [self.index[&d1], self.index[&d2]];
        let mut rows = vec![vec![params.zero(); 2]; 2];
        for (c, &col) in idx.iter().enumerate() {
            let mut e = vec![params.zero(); self.dim()];
            e[col] = params.one();
            let img = self.word_apply(params, w, &e)?;
            for (k, val) in img.iter().enumerate() {
                match idx.iter().position(|&i| i == k) {
                    Some(r) => rows[r][c] = val.clone(),
                    None if !val.is_zero() => {
                        return Err(Error::Verification(format!(
                            "image of D'{} leaves the two-dimensional subspace",
                            c + 1
                        )))
                    }
                    None => {}
                }
            }
        }
        Ok(Matrix::from_rows(rows))
    }
}

fn generator_letter(i: usize, sign: i32) -> Result<i32> {
    match sign {
        1 => Ok(i as i32),
        -1 => Ok(-(i as i32)),
        _ => Err(Error::domain(format!(
            "generator sign must be ±1, got {sign}"
        ))),
    }
}

/// `(coefficient of E_i, coefficient of Id)` for a letter.
fn letter_coefficients<R: Scalar>(params: &SkeinParams<R>, letter: i32) -> (R, R) {
    if letter > 0 {
        (params.a.clone(), params.a_inv.clone())
    } else {
        (params.a_inv.clone(), params.a.clone())
    }
}
