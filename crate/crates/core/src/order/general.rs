//! Projective order of a `d x d` matrix over `Q(zeta_N)`.
//!
//! With eigenvalues `lambda_1..lambda_d` and `D = det g`, put
//! `mu_i = lambda_i^d / D = prod_j lambda_i / lambda_j`. All ratios
//! `lambda_i / lambda_j` are roots of unity iff all `mu_i` are (their `d`-th
//! powers are `mu_i / mu_j`). The `mu_i` are the roots of
//! `chi_{g^d}(D x) / D^d`, a degree-`d` polynomial over `Q(zeta_N)`; its norm
//! to `Q` is an integer polynomial whose cyclotomic part is stripped.
//! A non-cyclotomic residual certifies infinite order. Otherwise every
//! ratio has order dividing `d * lcm(k)`, and `g^(d lcm k)` is scalar iff
//! `g` is semisimple.

use num_rational::BigRational;

use super::certificate::{OrderCertificate, Verdict, Witness};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{
    divisors, euler_phi, gcd, strip_cyclotomic_factors, CyclotomicScalar, CyclotomicStrip,
    IntegerPolynomial, Scalar,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Refuse (Inconclusive) when `d * phi(N)` exceeds this.
    pub max_norm_degree: usize,
    /// Refuse (Inconclusive) when the candidate exponent exceeds this.
    pub max_exponent: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            max_norm_degree: 4096,
            max_exponent: 1 << 40,
        }
    }
}

pub(crate) struct EigenAnalysis {
    pub strip: CyclotomicStrip,
    /// `d * lcm` of the stripped cyclotomic orders.
    pub exponent: Option<u64>,
}

/// Polynomials over the field, low-to-high.
fn poly_mul(a: &[CyclotomicScalar], b: &[CyclotomicScalar]) -> Vec<CyclotomicScalar> {
    let zero = a[0].zero_like();
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

/// Integer polynomial whose roots are all Galois conjugates of
/// `lambda_i^d / det g`, primitive with positive leading coefficient.
pub fn normalized_eigen_polynomial(g: &Matrix<CyclotomicScalar>) -> Result<IntegerPolynomial> {
    let d = g.dim();
    let det = g.determinant();
    if det.is_zero() {
        return Err(Error::domain("matrix is singular"));
    }
    let chi = g.pow(d as u64).charpoly();
    let mut scale = det.one_like();
    let mut q = Vec::with_capacity(chi.len());
    for c in &chi {
        q.push(c * &scale);
        scale = &scale * &det;
    }
    let units = det.galois_exponents();
    let mut norm = vec![det.one_like()];
    for k in units {
        let conj: Vec<CyclotomicScalar> = q.iter().map(|c| c.conjugate(k)).collect();
        norm = poly_mul(&norm, &conj);
    }
    let rational: Vec<BigRational> = norm
        .iter()
        .map(|c| {
            c.as_rational()
                .ok_or_else(|| Error::Verification("norm left Q".into()))
        })
        .collect::<Result<_>>()?;
    Ok(IntegerPolynomial::primitive_from_rationals(&rational))
}

pub(crate) fn eigen_analysis(g: &Matrix<CyclotomicScalar>) -> Result<EigenAnalysis> {
    let poly = normalized_eigen_polynomial(g)?;
    let strip = strip_cyclotomic_factors(&poly)?;
    let exponent = strip
        .factors
        .iter()
        .try_fold(1u64, |acc, &(k, _)| (acc / gcd(acc, k)).checked_mul(k))
        .and_then(|l| l.checked_mul(g.dim() as u64));
    Ok(EigenAnalysis { strip, exponent })
}

pub(crate) fn norm_degree(g: &Matrix<CyclotomicScalar>) -> usize {
    g.dim() * euler_phi(g.get(0, 0).conductor()) as usize
}

/// Finite/infinite projective order with a re-checkable witness.
pub fn projective_order_general(
    g: &Matrix<CyclotomicScalar>,
    opts: &CertifyOptions,
) -> Result<OrderCertificate> {
    let dim = g.dim();
    let conductor = g.get(0, 0).conductor();
    let cert = |verdict| OrderCertificate {
        conductor,
        dim,
        verdict,
    };
    if g.determinant().is_zero() {
        return Err(Error::domain("projective order of a singular matrix"));
    }
    if let Some(s) = g.as_scalar() {
        return Ok(cert(Verdict::Finite {
            projective_order: 1,
            scalar: s,
        }));
    }
    let deg = norm_degree(g);
    if deg > opts.max_norm_degree {
        return Ok(cert(Verdict::Inconclusive {
            reason: format!(
                "norm polynomial degree {deg} exceeds cap {}",
                opts.max_norm_degree
            ),
        }));
    }
    let analysis = eigen_analysis(g)?;
    if analysis.strip.residual.degree().unwrap_or(0) > 0 {
        return Ok(cert(Verdict::Infinite(Witness::NonCyclotomicRatio {
            residual: analysis.strip.residual,
        })));
    }
    let exponent = match analysis.exponent {
        Some(e) if e <= opts.max_exponent => e,
        _ => {
            return Ok(cert(Verdict::Inconclusive {
                reason: "candidate exponent exceeds cap".into(),
            }))
        }
    };
    if g.pow(exponent).as_scalar().is_none() {
        return Ok(cert(Verdict::Infinite(Witness::UnipotentPower {
            exponent,
        })));
    }
    // Exponents e with g^e scalar form a subgroup of Z, so the least one
    // divides `exponent`.
    for e in divisors(exponent) {
        if let Some(scalar) = g.pow(e).as_scalar() {
            return Ok(cert(Verdict::Finite {
                projective_order: e,
                scalar,
            }));
        }
    }
    unreachable!("g^exponent is scalar")
}

/// `diag(values)` over the given field.
pub fn diagonal(values: &[CyclotomicScalar]) -> Matrix<CyclotomicScalar> {
    let mut m = Matrix::zeros(values.len(), &values[0]);
    for (i, v) in values.iter().enumerate() {
        m.set(i, i, v.clone());
    }
    m
}
