//! Checks that the skein representation descends to `M(0,2n)` and that
//! `m`-th powers of half-twists act by scalars at roots of `P_m`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{is_pm_root, CyclotomicScalar, RootOfUnityChoice, Scalar};
use crate::skein::{BraidWord, RingSelector, SkeinModule, SkeinParams};

/// Symbolic `R2` beyond this `n` needs explicit opt-in.
pub const SYMBOLIC_BIRMAN_MAX_N: usize = 3;

pub const RELATOR_SCHEMA: &str = "skein-mcg/relator/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RelatorId {
    R1,
    R2,
}

impl fmt::Display for RelatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelatorId::R1 => "R1",
            RelatorId::R2 => "R2",
        })
    }
}

/// `R1 = sigma_1 ... sigma_{2n-1} sigma_{2n-1} ... sigma_1` and
/// `R2 = (sigma_1 ... sigma_{2n-1})^{2n}`.
pub fn birman_relator_words(n: usize) -> Result<(BraidWord, BraidWord)> {
    if n == 0 {
        return Err(Error::domain("Birman relators need n >= 1"));
    }
    let up: Vec<i32> = (1..2 * n as i32).collect();
    let mut r1 = up.clone();
    r1.extend(up.iter().rev());
    let r2 = up.repeat(2 * n);
    Ok((BraidWord::new(n, r1)?, BraidWord::new(n, r2)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorReport<R> {
    pub relator: RelatorId,
    pub n: usize,
    pub ring: RingSelector,
    pub word_length: usize,
    pub dim: usize,
    /// Number of nonzero entries of the computed matrix.
    pub nonzero_entries: usize,
    pub is_scalar: bool,
    pub scalar: Option<R>,
    pub expected_scalar: R,
}

impl<R: Scalar> RelatorReport<R> {
    pub fn pass(&self) -> bool {
        self.scalar.as_ref() == Some(&self.expected_scalar)
    }

    fn from_matrix(
        relator: RelatorId,
        ring: RingSelector,
        word: &BraidWord,
        m: &Matrix<R>,
        expected_scalar: R,
    ) -> Self {
        let scalar = m.as_scalar();
        Self {
            relator,
            n: word.n(),
            ring,
            word_length: word.len(),
            dim: m.dim(),
            nonzero_entries: m.entries().iter().filter(|e| !e.is_zero()).count(),
            is_scalar: scalar.is_some(),
            scalar,
            expected_scalar,
        }
    }
}

/// `rho(R1)` and `rho(R2)` compared against `(-A^3)^2` and `(-A^3)^{2n}`.
pub fn verify_birman<R: Scalar>(
    module: &SkeinModule,
    params: &SkeinParams<R>,
    ring: RingSelector,
) -> Result<(RelatorReport<R>, RelatorReport<R>)> {
    let n = module.n();
    let (r1, r2) = birman_relator_words(n)?;
    let minus_a3 = params.a_pow(3).neg();
    let m1 = module.word_matrix(params, &r1)?;
    let m2 = module.word_matrix(params, &r2)?;
    Ok((
        RelatorReport::from_matrix(RelatorId::R1, ring, &r1, &m1, minus_a3.pow(2)),
        RelatorReport::from_matrix(RelatorId::R2, ring, &r2, &m2, minus_a3.pow(2 * n as u64)),
    ))
}

/// Ring-independent form of a [`RelatorReport`], with scalars rendered in
/// their canonical text form. This is the JSON record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorRecord {
    pub schema: String,
    pub relator: RelatorId,
    pub n: usize,
    pub ring: RingSelector,
    pub word_length: usize,
    pub dim: usize,
    pub nonzero_entries: usize,
    pub is_scalar: bool,
    pub scalar: Option<String>,
    pub expected_scalar: String,
    pub pass: bool,
}

impl<R: Scalar> RelatorReport<R> {
    pub fn record(&self) -> RelatorRecord {
        RelatorRecord {
            schema: RELATOR_SCHEMA.to_string(),
            relator: self.relator,
            n: self.n,
            ring: self.ring,
            word_length: self.word_length,
            dim: self.dim,
            nonzero_entries: self.nonzero_entries,
            is_scalar: self.is_scalar,
            scalar: self.scalar.as_ref().map(ToString::to_string),
            expected_scalar: self.expected_scalar.to_string(),
            pass: self.pass(),
        }
    }
}

/// Runs [`verify_birman`] over the ring named by `ring`. Symbolic runs with
/// `n > SYMBOLIC_BIRMAN_MAX_N` are refused unless `allow_large_symbolic`.
pub fn verify_birman_in(
    n: usize,
    ring: RingSelector,
    allow_large_symbolic: bool,
) -> Result<(RelatorRecord, RelatorRecord)> {
    let module = SkeinModule::new(n)?;
    match ring.choice() {
        None => {
            if n > SYMBOLIC_BIRMAN_MAX_N && !allow_large_symbolic {
                return Err(Error::Unsupported(format!(
                    "symbolic Birman check at n = {n} is gated; pass the large-symbolic flag"
                )));
            }
            let (a, b) = verify_birman(&module, &SkeinParams::symbolic(), ring)?;
            Ok((a.record(), b.record()))
        }
        Some(choice) => {
            let (a, b) = verify_birman(&module, &SkeinParams::at_root(choice), ring)?;
            Ok((a.record(), b.record()))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerScalarReport {
    /// `rho(sigma_i)^m == A^-m Id` for every `i`.
    pub holds: bool,
    /// `A^-m`
    pub scalar: CyclotomicScalar,
    /// Per generator `i = 1..2n-1`: the scalar `rho(sigma_i)^m` equals, if any.
    pub per_generator: Vec<Option<CyclotomicScalar>>,
}

/// `rho(sigma_i^m) = A^-m Id` at a root of `P_m`, for every generator.
pub fn verify_power_scalar(
    n: usize,
    m: u64,
    choice: RootOfUnityChoice,
) -> Result<PowerScalarReport> {
    if m == 0 {
        return Err(Error::domain("power m must be positive"));
    }
    if !is_pm_root(m as i64, choice)? {
        return Err(Error::Precondition {
            check: "is_pm_root",
            detail: format!("root {choice} is not a zero of P_{m}"),
        });
    }
    let module = SkeinModule::new(n)?;
    let params = SkeinParams::at_root(choice);
    let scalar = params.a_pow(-(m as i64));
    let per_generator = (1..2 * n)
        .map(|i| {
            let g = module.generator_matrix(&params, i, 1)?;
            Ok(g.pow(m).as_scalar())
        })
        .collect::<Result<Vec<_>>>()?;
    let holds = per_generator.iter().all(|s| s.as_ref() == Some(&scalar));
    Ok(PowerScalarReport {
        holds,
        scalar,
        per_generator,
    })
}

/// `((theta A)^-m)^{4n-2}` where `theta^{4n-2} = A^6`, computed in exponents:
/// `theta^{-m(4n-2)} A^{-m(4n-2)} = A^{-6m - m(4n-2)} = A^{-4m(n+1)}`.
/// Defined for every `m`; only odd `m` has a known closed value.
pub fn rescaled_scalar(n: usize, m: u64, choice: RootOfUnityChoice) -> CyclotomicScalar {
    let (n, m) = (n as i64, m as i64);
    let theta_part = -6 * m;
    let a_part = -m * (4 * n - 2);
    let field = choice.field();
    choice.a_pow(&field, theta_part + a_part)
}

/// For odd `m` at a root of `P_m`, returns `((theta A)^-m)^{4n-2}` as `±1`
/// (it equals `(-1)^{n+1}`).
pub fn rescaled_scalar_check(n: usize, m: u64, choice: RootOfUnityChoice) -> Result<i8> {
    if m % 2 == 0 {
        return Err(Error::domain(format!(
            "rescaling identity is stated for odd m only, got {m}"
        )));
    }
    if !is_pm_root(m as i64, choice)? {
        return Err(Error::Precondition {
            check: "is_pm_root",
            detail: format!("root {choice} is not a zero of P_{m}"),
        });
    }
    let v = rescaled_scalar(n, m, choice);
    let field = v.field().clone();
    if v == field.integer(1) {
        Ok(1)
    } else if v == field.integer(-1) {
        Ok(-1)
    } else {
        Err(Error::Verification(format!(
            "rescaled scalar {v} is not ±1"
        )))
    }
}
