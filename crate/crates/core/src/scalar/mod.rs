//! Exact scalar rings.

mod arith;
mod cyclotomic;
mod intpoly;
mod laurent;
mod roots;

pub use arith::{divisors, euler_phi, factorize, gcd, lcm, mobius};
pub use cyclotomic::{CyclotomicField, CyclotomicScalar};
pub use intpoly::{
    cyclotomic_polynomial, strip_cyclotomic_factors, CyclotomicStrip, IntegerPolynomial,
};
pub use laurent::LaurentPolynomial;
pub use roots::{
    canonical_root_for_m, evaluate_laurent, is_pm_root, pm_polynomial, RootOfUnityChoice,
};

use std::fmt;
use std::hash::Hash;

/// A commutative ring whose elements carry enough context to build their
/// own zero and one (a cyclotomic scalar knows its conductor).
///
/// Method names mirror `std::ops`; generic code should import only this
/// trait so that calls resolve unambiguously.
pub trait Scalar: Clone + Eq + Hash + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}
