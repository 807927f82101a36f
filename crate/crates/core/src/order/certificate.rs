use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::json::ScalarJson;
use crate::scalar::{CyclotomicScalar, IntegerPolynomial};

pub const CERTIFICATE_SCHEMA: &str = "skein-mcg/order-certificate/v1";

/// Why a matrix has infinite projective order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The Galois conjugate `t' = sigma_k(tr g)` of the trace of a
    /// determinant-one 2x2 matrix has `|t'|^2 - 4 = t' conj(t') - 4 > 0`, so
    /// an eigenvalue of `sigma_k(g)` is off the unit circle. For real `t'`
    /// the excess is `t'^2 - 4`.
    TraceConjugate {
        k: i64,
        trace: CyclotomicScalar,
        excess: CyclotomicScalar,
        /// A rational lower bound `> 0` for `excess`.
        lower_bound: BigRational,
    },
    /// Determinant one, trace `±2`, and not `±Id`: conjugate to a nontrivial
    /// unipotent times `±1`.
    ParabolicTrace { trace: i8 },
    /// Every normalised eigenvalue is a root of unity and their orders
    /// divide `exponent / d`, yet `g^exponent` is not scalar: `g` is not
    /// semisimple.
    UnipotentPower { exponent: u64 },
    /// The integer polynomial whose roots are the Galois conjugates of the
    /// normalised eigenvalues `lambda_i^d / det g` keeps a non-cyclotomic
    /// factor, so some eigenvalue ratio `lambda_i / lambda_j` is not a root
    /// of unity.
    NonCyclotomicRatio { residual: IntegerPolynomial },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `g^projective_order = scalar * Id`, least such exponent.
    Finite {
        projective_order: u64,
        scalar: CyclotomicScalar,
    },
    Infinite(Witness),
    Inconclusive {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderCertificate {
    pub conductor: u64,
    pub dim: usize,
    pub verdict: Verdict,
}

impl OrderCertificate {
    pub fn is_finite(&self) -> bool {
        matches!(self.verdict, Verdict::Finite { .. })
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self.verdict, Verdict::Infinite(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Verdict::Infinite(w) => Some(w),
            _ => None,
        }
    }

    pub fn verdict_name(&self) -> &'static str {
        match self.verdict {
            Verdict::Finite { .. } => "finite",
            Verdict::Infinite(_) => "infinite",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn to_json(&self) -> CertificateJson {
        let mut out = CertificateJson {
            schema: CERTIFICATE_SCHEMA.to_string(),
            verdict: self.verdict_name().to_string(),
            conductor: self.conductor,
            dim: self.dim,
            order: None,
            scalar: None,
            witness: None,
            reason: None,
        };
        match &self.verdict {
            Verdict::Finite {
                projective_order,
                scalar,
            } => {
                out.order = Some(*projective_order);
                out.scalar = Some(ScalarJson::from(scalar));
            }
            Verdict::Inconclusive { reason } => out.reason = Some(reason.clone()),
            Verdict::Infinite(w) => {
                let mut wj = WitnessJson {
                    kind: String::new(),
                    k: None,
                    trace_coeffs: None,
                    excess_coeffs: None,
                    lower_bound: None,
                    trace: None,
                    exponent: None,
                    residual_poly: None,
                };
                match w {
                    Witness::TraceConjugate {
                        k,
                        trace,
                        excess,
                        lower_bound,
                    } => {
                        wj.kind = "trace_conjugate".into();
                        wj.k = Some(*k);
                        wj.trace_coeffs = Some(trace.coeff_strings());
                        wj.excess_coeffs = Some(excess.coeff_strings());
                        wj.lower_bound = Some(lower_bound.to_string());
                    }
                    Witness::ParabolicTrace { trace } => {
                        wj.kind = "parabolic_trace".into();
                        wj.trace = Some(*trace);
                    }
                    Witness::UnipotentPower { exponent } => {
                        wj.kind = "unipotent_power".into();
                        wj.exponent = Some(*exponent);
                    }
                    Witness::NonCyclotomicRatio { residual } => {
                        wj.kind = "non_cyclotomic_ratio".into();
                        wj.residual_poly = Some(residual.coeff_strings());
                    }
                }
                out.witness = Some(wj);
            }
        }
        out
    }
}

/// JSON form of an [`OrderCertificate`]. Coefficient vectors are in the
/// power basis of `Q(zeta_conductor)`, low degree first; polynomials are
/// integer coefficient lists, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub schema: String,
    pub verdict: String,
    pub conductor: u64,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar: Option<ScalarJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace_coeffs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub excess_coeffs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<i8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_poly: Option<Vec<String>>,
}
