//! Exact arithmetic for the Kauffman-bracket skein representation of the
//! braid group `B_2n` and the mapping class group `M(0,2n)` of the
//! `2n`-punctured sphere.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`]: integer Laurent polynomials in the skein variable `A`,
//!   exact cyclotomic fields `Q(zeta_N)`, integer polynomials with cyclotomic
//!   factor stripping, and the root-of-unity choices that kill `P_m(A)`.
//! * [`skein`]: crossingless matchings, Temperley-Lieb generators and the
//!   matrices of braid words acting on the skein module.
//! * [`mcg`]: checks that the representation descends to `M(0,2n)` and that
//!   powers of half-twists become scalar.
//! * [`order`]: finite/infinite projective order certificates and projective
//!   group closure.
//! * [`pipeline`]: the end-to-end `reproduce` run and the `m = 5` exploration.

pub mod error;
pub mod json;
pub mod matrix;
pub mod mcg;
pub mod order;
pub mod pipeline;
pub mod scalar;
pub mod skein;

pub use error::{Error, Result};
pub use matrix::Matrix;

pub use scalar::{
    CyclotomicField, CyclotomicScalar, IntegerPolynomial, LaurentPolynomial, RootOfUnityChoice,
    Scalar,
};

pub use skein::{BraidWord, NoncrossingMatching, RingSelector, SkeinModule, SkeinParams};
