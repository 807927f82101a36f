//! Dense integer polynomials, cyclotomic polynomials and cyclotomic factor
//! stripping.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::arith::{divisors, factorize, mobius, phi_table};
use crate::error::{Error, Result};

/// Polynomial over `Z`, coefficients low-to-high. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// Clears denominators and returns the primitive part with positive
    /// leading coefficient.
    pub fn primitive_from_rationals(coeffs: &[BigRational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let p = Self::new(
            coeffs
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect(),
        );
        p.primitive_part()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Exact quotient by a monic divisor, `None` if the remainder is nonzero.
    pub fn div_exact_monic(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        assert!(
            divisor.leading().is_some_and(One::is_one),
            "divisor must be monic"
        );
        let Some(nd) = self.degree() else {
            return Some(Self::default());
        };
        if nd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for top in (dd..=nd).rev() {
            let c = std::mem::take(&mut rem[top]);
            if c.is_zero() {
                continue;
            }
            for (j, m) in divisor.coeffs[..dd].iter().enumerate() {
                if !m.is_zero() {
                    rem[top - dd + j] -= &c * m;
                }
            }
            quot[top - dd] = c;
        }
        if rem[..dd].iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for IntegerPolynomial {
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
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("x")?
                    } else {
                        write!(f, "x^{e}")?
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Serialize for IntegerPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntegerPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

/// The `k`-th cyclotomic polynomial `Phi_k`.
pub fn cyclotomic_polynomial(k: u64) -> IntegerPolynomial {
    assert!(k >= 1, "Phi_0 is undefined");
    match k {
        1 => return IntegerPolynomial::from_i64(&[-1, 1]),
        2 => return IntegerPolynomial::from_i64(&[1, 1]),
        _ => {}
    }
    let primes: Vec<u64> = factorize(k).into_iter().map(|(p, _)| p).collect();
    let rad: u64 = primes.iter().product();
    let stretch = (k / rad) as usize;
    // Phi_{2m}(x) = Phi_m(-x) for odd m > 1.
    let (odd, negate) = if rad % 2 == 0 {
        (rad / 2, true)
    } else {
        (rad, false)
    };
    let base = if odd == 1 {
        // rad = 2: Phi_2 = x + 1
        vec![BigInt::one(), BigInt::one()]
    } else {
        let c = squarefree_cyclotomic_i64(odd)
            .map(|v| v.into_iter().map(BigInt::from).collect())
            .unwrap_or_else(|| squarefree_cyclotomic_big(odd));
        if negate {
            c.into_iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c })
                .collect()
        } else {
            c
        }
    };
    let mut out = vec![BigInt::zero(); (base.len() - 1) * stretch + 1];
    for (i, c) in base.into_iter().enumerate() {
        out[i * stretch] = c;
    }
    IntegerPolynomial::new(out)
}

/// `prod_{d | n} (x^d - 1)^mu(n/d)` for squarefree `n`, in checked `i64`.
fn squarefree_cyclotomic_i64(n: u64) -> Option<Vec<i64>> {
    let divs = divisors(n);
    let mut poly = vec![1i64];
    for &d in &divs {
        if mobius(n / d) == 1 {
            let d = d as usize;
            let mut next = vec![0i64; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d] = next[i + d].checked_add(c)?;
                next[i] = next[i].checked_sub(c)?;
            }
            poly = next;
        }
    }
    for &d in &divs {
        if mobius(n / d) == -1 {
            let d = d as usize;
            // divide by (x^d - 1): q_i = q_{i+d}... from the top
            let m = poly.len() - 1;
            let mut q = vec![0i64; m - d + 1];
            let mut rem = poly.clone();
            for top in (d..=m).rev() {
                let c = rem[top];
                q[top - d] = c;
                rem[top - d] = rem[top - d].checked_add(c)?;
                rem[top] = 0;
            }
            debug_assert!(rem.iter().all(|&c| c == 0));
            poly = q;
        }
    }
    Some(poly)
}

fn squarefree_cyclotomic_big(n: u64) -> Vec<BigInt> {
    let divs = divisors(n);
    let mut poly = IntegerPolynomial::one();
    for &d in &divs {
        if mobius(n / d) == 1 {
            let mut b = vec![BigInt::zero(); d as usize + 1];
            b[0] = BigInt::from(-1);
            b[d as usize] = BigInt::one();
            poly = poly.mul(&IntegerPolynomial::new(b));
        }
    }
    for &d in &divs {
        if mobius(n / d) == -1 {
            let mut b = vec![BigInt::zero(); d as usize + 1];
            b[0] = BigInt::from(-1);
            b[d as usize] = BigInt::one();
            poly = poly
                .div_exact_monic(&IntegerPolynomial::new(b))
                .expect("x^d - 1 divides the Mobius product");
        }
    }
    poly.coeffs
}

/// Result of [`strip_cyclotomic_factors`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicStrip {
    /// Input divided by every cyclotomic factor found; has no root of unity
    /// among its roots.
    pub residual: IntegerPolynomial,
    /// `(k, multiplicity)` for each `Phi_k` removed, ascending in `k`.
    pub factors: Vec<(u64, u32)>,
}

impl CyclotomicStrip {
    /// `residual * prod Phi_k^mult`.
    pub fn reconstruct(&self) -> IntegerPolynomial {
        self.factors
            .iter()
            .fold(self.residual.clone(), |acc, &(k, e)| {
                acc.mul(&cyclotomic_polynomial(k).pow(e))
            })
    }
}

/// Divide out every cyclotomic factor of `p`.
///
/// Candidates are `1 <= k <= 2 deg(p)^2`, which contains every `k` with
/// `phi(k) <= deg(p)` because `phi(k) >= sqrt(k/2)`. Only `k` with
/// `phi(k)` at most the current residual degree are tried.
pub fn strip_cyclotomic_factors(p: &IntegerPolynomial) -> Result<CyclotomicStrip> {
    let deg = p
        .degree()
        .ok_or_else(|| Error::domain("cannot strip cyclotomic factors of the zero polynomial"))?;
    let bound = 2 * deg * deg;
    let phi = phi_table(bound.max(2));
    let mut residual = p.clone();
    let mut factors = Vec::new();
    for k in 1..=bound {
        let rd = residual.degree().unwrap_or(0);
        if rd == 0 {
            break;
        }
        if phi[k] as usize > rd {
            continue;
        }
        let cyc = cyclotomic_polynomial(k as u64);
        let mut mult = 0;
        while let Some(q) = residual.div_exact_monic(&cyc) {
            residual = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((k as u64, mult));
        }
    }
    Ok(CyclotomicStrip { residual, factors })
}
