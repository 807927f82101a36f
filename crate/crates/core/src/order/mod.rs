//! Projective order certification over cyclotomic fields.

pub mod certificate;
pub mod closure;
pub mod general;
pub mod sign;
pub mod two_by_two;
pub mod verify;

pub use certificate::{CertificateJson, OrderCertificate, Verdict, Witness, WitnessJson};
pub use closure::{group_closure, projective_normal_form, ClosureResult, DEFAULT_CLOSURE_CAP};
pub use general::{
    diagonal, normalized_eigen_polynomial, projective_order_general, CertifyOptions,
};
pub use sign::{real_sign, SignEvidence};
pub use two_by_two::{
    excluded_r_set, infinite_order_word, m_matrix_at, projective_order_2x2, trace_of_m_symbolic,
};
pub use verify::verify_certificate;

use crate::error::Result;
use crate::matrix::Matrix;
use crate::scalar::{CyclotomicScalar, Scalar};

/// Trace-based test for determinant-one 2x2 matrices, the eigenvalue
/// test otherwise.
pub fn certify(g: &Matrix<CyclotomicScalar>, opts: &CertifyOptions) -> Result<OrderCertificate> {
    if g.dim() == 2 && g.determinant().is_one() {
        projective_order_2x2(g)
    } else {
        projective_order_general(g, opts)
    }
}
