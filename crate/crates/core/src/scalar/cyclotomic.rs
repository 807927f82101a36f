//! Exact arithmetic in the cyclotomic field `Q(zeta_N)`.
//!
//! Elements are stored in the power basis `1, z, ..., z^(phi(N)-1)` modulo
//! the `N`-th cyclotomic polynomial, with rational coefficients. The
//! representation is canonical, so equality is coefficient equality.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::arith::{gcd, rem_euclid};
use super::intpoly::cyclotomic_polynomial;
use super::Scalar;

/// `Q(zeta_N)` together with its defining modulus. Shared by all of its
/// elements through an `Arc`.
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u64,
    degree: usize,
    /// `Phi_N` low-to-high, monic, length `degree + 1`.
    modulus: Vec<BigInt>,
    modulus_small: Option<Vec<i64>>,
}

impl CyclotomicField {
    pub fn new(conductor: u64) -> Arc<Self> {
        assert!(conductor >= 1, "cyclotomic conductor must be positive");
        let phi = cyclotomic_polynomial(conductor);
        let modulus: Vec<BigInt> = phi.coeffs().to_vec();
        let modulus_small = modulus
            .iter()
            .map(|c| c.to_i64())
            .collect::<Option<Vec<_>>>();
        Arc::new(Self {
            conductor,
            degree: modulus.len() - 1,
            modulus,
            modulus_small,
        })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// `phi(N)`, the length of every coefficient vector.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> CyclotomicScalar {
        CyclotomicScalar {
            field: Arc::clone(self),
            coeffs: vec![BigRational::zero(); self.degree],
        }
    }

    pub fn one(self: &Arc<Self>) -> CyclotomicScalar {
        self.rational(BigRational::one())
    }

    pub fn integer(self: &Arc<Self>, n: i64) -> CyclotomicScalar {
        self.rational(BigRational::from_integer(n.into()))
    }

    pub fn rational(self: &Arc<Self>, q: BigRational) -> CyclotomicScalar {
        let mut out = self.zero();
        out.coeffs[0] = q;
        out
    }

    /// `zeta_N^exp` for any integer exponent.
    pub fn zeta_pow(self: &Arc<Self>, exp: i64) -> CyclotomicScalar {
        let e = rem_euclid(exp, self.conductor) as usize;
        self.from_exponents([(e as i64, BigRational::one())])
    }

    /// Reduce `sum c_e zeta^e` (exponents taken mod `N`) to canonical form.
    pub fn from_exponents(
        self: &Arc<Self>,
        terms: impl IntoIterator<Item = (i64, BigRational)>,
    ) -> CyclotomicScalar {
        let n = self.conductor as usize;
        let mut dense = vec![BigRational::zero(); n.max(self.degree)];
        for (e, c) in terms {
            dense[rem_euclid(e, self.conductor) as usize] += c;
        }
        self.reduce_rational(dense)
    }

    /// Coefficients given directly in the power basis (shorter vectors are
    /// zero-padded, longer ones reduced).
    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<BigRational>) -> CyclotomicScalar {
        if coeffs.len() <= self.degree {
            let mut c = coeffs;
            c.resize(self.degree, BigRational::zero());
            return CyclotomicScalar {
                field: Arc::clone(self),
                coeffs: c,
            };
        }
        self.reduce_rational(coeffs)
    }

    fn reduce_rational(self: &Arc<Self>, mut dense: Vec<BigRational>) -> CyclotomicScalar {
        let d = self.degree;
        for top in (d..dense.len()).rev() {
            let c = std::mem::take(&mut dense[top]);
            if c.is_zero() {
                continue;
            }
            for (j, m) in self.modulus[..d].iter().enumerate() {
                if !m.is_zero() {
                    dense[top - d + j] -= &c * m;
                }
            }
        }
        dense.truncate(d);
        dense.resize(d, BigRational::zero());
        CyclotomicScalar {
            field: Arc::clone(self),
            coeffs: dense,
        }
    }

    fn reduce_big(&self, dense: &mut Vec<BigInt>) {
        let d = self.degree;
        for top in (d..dense.len()).rev() {
            let c = std::mem::take(&mut dense[top]);
            if c.is_zero() {
                continue;
            }
            for (j, m) in self.modulus[..d].iter().enumerate() {
                if !m.is_zero() {
                    dense[top - d + j] -= &c * m;
                }
            }
        }
        dense.truncate(d);
        dense.resize(d, BigInt::zero());
    }

    /// Product of two integer vectors mod `Phi_N` in `i128`, or `None` on
    /// overflow.
    fn mul_small(&self, a: &[i64], b: &[i64]) -> Option<Vec<i128>> {
        let modulus = self.modulus_small.as_ref()?;
        let d = self.degree;
        let mut prod = vec![0i128; (2 * d).saturating_sub(1).max(d)];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let t = (x as i128).checked_mul(y as i128)?;
                prod[i + j] = prod[i + j].checked_add(t)?;
            }
        }
        for top in (d..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (j, &m) in modulus[..d].iter().enumerate() {
                if m != 0 {
                    let t = c.checked_mul(m as i128)?;
                    prod[top - d + j] = prod[top - d + j].checked_sub(t)?;
                }
            }
        }
        prod.truncate(d);
        Some(prod)
    }
}

/// An element of `Q(zeta_N)`.
#[derive(Clone)]
pub struct CyclotomicScalar {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl CyclotomicScalar {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor
    }

    /// Power-basis coefficients, length `phi(N)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.conductor, other.field.conductor,
            "mixing cyclotomic fields Q(zeta_{}) and Q(zeta_{})",
            self.field.conductor, other.field.conductor
        );
    }

    fn small_ints(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Image under the field automorphism `zeta -> zeta^k`. Panics unless
    /// `gcd(k, N) = 1`; see [`galois_conjugate`](Self::galois_conjugate) for
    /// the checked form.
    pub fn conjugate(&self, k: i64) -> Self {
        let n = self.field.conductor;
        assert_eq!(
            gcd(rem_euclid(k, n), n),
            1,
            "conjugation exponent not a unit mod {n}"
        );
        self.field.from_exponents(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 * k, c.clone())),
        )
    }

    pub fn galois_conjugate(&self, k: i64) -> crate::Result<Self> {
        let n = self.field.conductor;
        let kk = rem_euclid(k, n);
        if gcd(kk, n) != 1 {
            return Err(crate::Error::domain(format!(
                "Galois conjugation needs gcd(k, N) = 1, got k = {k}, N = {n}"
            )));
        }
        Ok(self.conjugate(k))
    }

    /// Complex conjugation, i.e. `zeta -> zeta^-1`.
    pub fn complex_conjugate(&self) -> Self {
        self.conjugate(-1)
    }

    pub fn is_real(&self) -> bool {
        *self == self.complex_conjugate()
    }

    /// Units `k` in `1..N` with `gcd(k, N) = 1`, ascending.
    pub fn galois_exponents(&self) -> Vec<i64> {
        galois_exponents(self.field.conductor)
    }

    /// Field norm down to `Q`: the product of all Galois conjugates.
    pub fn norm(&self) -> BigRational {
        let prod = self
            .galois_exponents()
            .into_iter()
            .fold(self.field.one(), |acc, k| &acc * &self.conjugate(k));
        prod.as_rational().expect("norm lies in Q")
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(self.field.rational(q.recip()));
        }
        let others = self
            .galois_exponents()
            .into_iter()
            .skip(1)
            .fold(self.field.one(), |acc, k| &acc * &self.conjugate(k));
        let norm = (&others * self).as_rational().expect("norm lies in Q");
        Some(others.scale(&norm.recip()))
    }

    /// Lift into `Q(zeta_M)` for a multiple `M` of the conductor.
    pub fn embed(&self, target: &Arc<CyclotomicField>) -> Self {
        let n = self.field.conductor;
        let m = target.conductor;
        assert!(m % n == 0, "cannot embed Q(zeta_{n}) into Q(zeta_{m})");
        let step = (m / n) as i64;
        target.from_exponents(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 * step, c.clone())),
        )
    }

    /// Floating-point value under the embedding `zeta -> exp(2 pi i / N)`.
    /// For display only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let n = self.field.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (i, c)| {
                let v = c.to_f64().unwrap_or(f64::NAN);
                let ang = std::f64::consts::TAU * i as f64 / n;
                (re + v * ang.cos(), im + v * ang.sin())
            })
    }

    pub fn pow_i(&self, exp: i64) -> Option<Self> {
        if exp >= 0 {
            Some(Scalar::pow(self, exp as u64))
        } else {
            self.inverse()
                .map(|inv| Scalar::pow(&inv, exp.unsigned_abs()))
        }
    }

    /// Coefficients rendered as rational strings, for JSON.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

pub(crate) fn galois_exponents(n: u64) -> Vec<i64> {
    (1..n.max(2))
        .filter(|&k| gcd(k, n) == 1)
        .map(|k| k as i64)
        .collect()
}

impl PartialEq for CyclotomicScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicScalar {}

impl Hash for CyclotomicScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.conductor.hash(state);
        self.coeffs.hash(state);
    }
}

impl Add for &CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn add(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        self.assert_same_field(rhs);
        CyclotomicScalar {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| add_q(a, b))
                .collect(),
        }
    }
}

impl Sub for &CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn sub(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        self.assert_same_field(rhs);
        CyclotomicScalar {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| add_q(a, &-b))
                .collect(),
        }
    }
}

fn add_q(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_integer() && b.is_integer() {
        BigRational::from_integer(a.numer() + b.numer())
    } else {
        a + b
    }
}

impl Neg for &CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        CyclotomicScalar {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn mul(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        self.assert_same_field(rhs);
        let field = &self.field;
        if let (Some(a), Some(b)) = (self.small_ints(), rhs.small_ints()) {
            if let Some(p) = field.mul_small(&a, &b) {
                return CyclotomicScalar {
                    field: Arc::clone(field),
                    coeffs: p
                        .into_iter()
                        .map(|c| BigRational::from_integer(c.into()))
                        .collect(),
                };
            }
        }
        // Clear denominators, multiply over Z, then divide once.
        let (na, da) = common_denominator(&self.coeffs);
        let (nb, db) = common_denominator(&rhs.coeffs);
        let d = field.degree;
        let mut prod = vec![BigInt::zero(); (2 * d).saturating_sub(1).max(d)];
        for (i, x) in na.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in nb.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        field.reduce_big(&mut prod);
        let den = da * db;
        CyclotomicScalar {
            field: Arc::clone(field),
            coeffs: prod
                .into_iter()
                .map(|c| BigRational::new(c, den.clone()))
                .collect(),
        }
    }
}

fn common_denominator(coeffs: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (nums, den)
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for CyclotomicScalar {
            type Output = CyclotomicScalar;
            fn $f(self, rhs: CyclotomicScalar) -> CyclotomicScalar {
                <&Self as $tr>::$f(&self, &rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        -&self
    }
}

impl Scalar for CyclotomicScalar {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn is_zero(&self) -> bool {
        CyclotomicScalar::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Renders as a polynomial in `z = zeta_N` with decreasing exponents, e.g.
/// `z^3 - 1/2*z + 1`. The conductor is not part of the string.
impl fmt::Display for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str("z")?;
            } else {
                write!(f, "z^{e}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z{})[{self}]", self.field.conductor)
    }
}
