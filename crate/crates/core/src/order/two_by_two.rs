//! Projective order of determinant-one 2x2 matrices from their traces.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::certificate::{OrderCertificate, Verdict, Witness};
use super::general::eigen_analysis;
use super::sign::real_sign;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{
    evaluate_laurent, CyclotomicScalar, LaurentPolynomial, RootOfUnityChoice, Scalar,
};
use crate::skein::{BraidWord, SkeinModule, SkeinParams};

/// `tr M = 2 - A^4 - A^-4 + A^8 + A^-8` for `M = rho(sigma_1^2 sigma_2^-2)`,
/// i.e. `2 - q - q^-1 + q^2 + q^-2` with `q = A^4`.
pub fn trace_of_m_symbolic() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(0, 2), (4, -1), (-4, -1), (8, 1), (-8, 1)])
}

/// The word `sigma_1^2 sigma_2^-2` on `2n` strands.
pub fn infinite_order_word(n: usize) -> BraidWord {
    BraidWord::new(n, vec![1, 1, -2, -2]).expect("n >= 2")
}

/// `M = rho(sigma_1^2 sigma_2^-2)` on the four-point skein module at `A`.
pub fn m_matrix_at(choice: RootOfUnityChoice) -> Matrix<CyclotomicScalar> {
    let module = SkeinModule::new(2).expect("n = 2 is in range");
    module
        .word_matrix(&SkeinParams::at_root(choice), &infinite_order_word(2))
        .expect("valid word")
}

/// Search the Galois conjugates of `t` (in order `k = 1, 2, ...`) for one
/// with `|t'| > 2`.
pub(crate) fn trace_conjugate_witness(t: &CyclotomicScalar) -> Result<Option<Witness>> {
    let four = t.field().integer(4);
    for k in t.galois_exponents() {
        let tk = t.conjugate(k);
        let excess = &(&tk * &tk.complex_conjugate()) - &four;
        if excess.is_zero() {
            continue;
        }
        let ev = real_sign(&excess)?;
        if ev.sign == Ordering::Greater {
            return Ok(Some(Witness::TraceConjugate {
                k,
                trace: tk,
                excess,
                lower_bound: ev.enclosure.lo,
            }));
        }
    }
    Ok(None)
}

/// `±2` if `t` is the rational number `±2`.
pub(crate) fn parabolic_trace(t: &CyclotomicScalar) -> Option<i8> {
    let f = t.field();
    if *t == f.integer(2) {
        Some(2)
    } else if *t == f.integer(-2) {
        Some(-2)
    } else {
        None
    }
}

/// Projective order of `g in SL_2(Q(zeta_N))`:
///
/// 1. a conjugate trace with `|t'| > 2` means infinite order;
/// 2. trace `±2` with `g != ±Id` is parabolic, infinite order;
/// 3. otherwise the normalised eigenvalues are checked for being roots of
///    unity and the least `k` with `g^k` scalar is found by powering.
pub fn projective_order_2x2(g: &Matrix<CyclotomicScalar>) -> Result<OrderCertificate> {
    if g.dim() != 2 {
        return Err(Error::domain(format!(
            "expected a 2x2 matrix, got {0}x{0}",
            g.dim()
        )));
    }
    let det = g.determinant();
    if !det.is_one() {
        return Err(Error::domain(format!("determinant must be 1, got {det}")));
    }
    let conductor = det.conductor();
    let cert = |verdict| OrderCertificate {
        conductor,
        dim: 2,
        verdict,
    };
    if let Some(s) = g.as_scalar() {
        return Ok(cert(Verdict::Finite {
            projective_order: 1,
            scalar: s,
        }));
    }
    let t = g.trace();
    if let Some(w) = trace_conjugate_witness(&t)? {
        return Ok(cert(Verdict::Infinite(w)));
    }
    if let Some(trace) = parabolic_trace(&t) {
        return Ok(cert(Verdict::Infinite(Witness::ParabolicTrace { trace })));
    }
    let analysis = eigen_analysis(g)?;
    if analysis.strip.residual.degree().unwrap_or(0) > 0 {
        return Ok(cert(Verdict::Infinite(Witness::NonCyclotomicRatio {
            residual: analysis.strip.residual,
        })));
    }
    let bound = analysis
        .exponent
        .ok_or_else(|| Error::Verification("exponent bound overflow".into()))?;
    let mut power = g.clone();
    for k in 1..=bound {
        if let Some(scalar) = power.as_scalar() {
            return Ok(cert(Verdict::Finite {
                projective_order: k,
                scalar,
            }));
        }
        power = power.mul(g);
    }
    Ok(cert(Verdict::Infinite(Witness::UnipotentPower {
        exponent: bound,
    })))
}

/// Orders `r` in `3..=r_max` of `q = A^4` for which `M` admits no
/// infinite-order witness: no primitive `r`-th root `q` gives `|tr M| > 2`,
/// and the parabolic case does not apply.
pub fn excluded_r_set(r_max: u64) -> Result<BTreeSet<u64>> {
    if r_max < 3 {
        return Err(Error::domain(format!(
            "r_max must be at least 3, got {r_max}"
        )));
    }
    let trace_in_q = trace_of_m_symbolic()
        .deflate(4)
        .expect("trace is a Laurent polynomial in A^4");
    let mut excluded = BTreeSet::new();
    for r in 3..=r_max {
        let t = evaluate_laurent(&trace_in_q, RootOfUnityChoice::new(r, 1)?);
        if trace_conjugate_witness(&t)?.is_some() {
            continue;
        }
        if parabolic_trace(&t).is_some() {
            // M is ±Id only if its off-diagonal -A^-2 + A^-6 vanishes, i.e. q = 1.
            let m = m_matrix_at(RootOfUnityChoice::new(4 * r, 1)?);
            if m.as_scalar().is_none() {
                continue;
            }
        }
        excluded.insert(r);
    }
    Ok(excluded)
}
