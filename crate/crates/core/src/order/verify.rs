//! Independent re-checking of order certificates against their matrix.

use std::cmp::Ordering;

use num_traits::Signed;

use super::certificate::{OrderCertificate, Verdict, Witness};
use super::general::normalized_eigen_polynomial;
use super::sign::real_sign;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{factorize, gcd, strip_cyclotomic_factors, CyclotomicScalar, Scalar};

fn fail(msg: impl Into<String>) -> Error {
    Error::Verification(msg.into())
}

/// Re-derive every claim in `cert` from `g`. Inconclusive certificates
/// carry no claim and always pass.
pub fn verify_certificate(g: &Matrix<CyclotomicScalar>, cert: &OrderCertificate) -> Result<()> {
    if cert.dim != g.dim() || cert.conductor != g.get(0, 0).conductor() {
        return Err(fail("certificate does not match matrix shape or field"));
    }
    match &cert.verdict {
        Verdict::Inconclusive { .. } => Ok(()),
        Verdict::Finite {
            projective_order,
            scalar,
        } => {
            let e = *projective_order;
            if e == 0 {
                return Err(fail("order must be positive"));
            }
            if g.pow(e) != Matrix::scalar(g.dim(), scalar) {
                return Err(fail(format!("g^{e} is not the claimed scalar")));
            }
            for (p, _) in factorize(e) {
                if g.pow(e / p).as_scalar().is_some() {
                    return Err(fail(format!("g^{} is already scalar", e / p)));
                }
            }
            Ok(())
        }
        Verdict::Infinite(w) => verify_witness(g, w),
    }
}

fn verify_witness(g: &Matrix<CyclotomicScalar>, w: &Witness) -> Result<()> {
    let det = g.determinant();
    match w {
        Witness::TraceConjugate {
            k,
            trace,
            excess,
            lower_bound,
        } => {
            if g.dim() != 2 || !det.is_one() {
                return Err(fail("trace witness needs a determinant-one 2x2 matrix"));
            }
            if g.trace().galois_conjugate(*k)? != *trace {
                return Err(fail("trace conjugate mismatch"));
            }
            let four = trace.field().integer(4);
            if &(trace * &trace.complex_conjugate()) - &four != *excess {
                return Err(fail("excess mismatch"));
            }
            if !lower_bound.is_positive() {
                return Err(fail("lower bound is not positive"));
            }
            let gap = excess - &trace.field().rational(lower_bound.clone());
            if !gap.is_zero() && real_sign(&gap)?.sign != Ordering::Greater {
                return Err(fail("excess is below its lower bound"));
            }
            Ok(())
        }
        Witness::ParabolicTrace { trace } => {
            if g.dim() != 2 || !det.is_one() {
                return Err(fail("parabolic witness needs a determinant-one 2x2 matrix"));
            }
            if g.trace() != det.field().integer(i64::from(*trace)) || trace.abs() != 2 {
                return Err(fail("trace is not the claimed ±2"));
            }
            if g.as_scalar().is_some() {
                return Err(fail("matrix is scalar"));
            }
            Ok(())
        }
        Witness::UnipotentPower { exponent } => {
            let strip = strip_cyclotomic_factors(&normalized_eigen_polynomial(g)?)?;
            if strip.residual.degree().unwrap_or(0) > 0 {
                return Err(fail("normalised eigenvalues are not all roots of unity"));
            }
            let d = g.dim() as u64;
            let mut l = 1u64;
            for &(k, _) in &strip.factors {
                l = (l / gcd(l, k))
                    .checked_mul(k)
                    .ok_or_else(|| fail("exponent overflow"))?;
            }
            if exponent % (d * l) != 0 {
                return Err(fail("eigenvalue ratio orders do not divide the exponent"));
            }
            if g.pow(*exponent).as_scalar().is_some() {
                return Err(fail("g^exponent is scalar"));
            }
            Ok(())
        }
        Witness::NonCyclotomicRatio { residual } => {
            let strip = strip_cyclotomic_factors(&normalized_eigen_polynomial(g)?)?;
            if strip.residual != *residual || residual.degree().unwrap_or(0) == 0 {
                return Err(fail("residual does not match or is constant"));
            }
            Ok(())
        }
    }
}
