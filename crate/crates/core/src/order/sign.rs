//! Exact sign of a real element of `Q(zeta_N)`.
//!
//! A real `v = sum c_i zeta^i` equals `sum c_i cos(2 pi i / N)`. We enclose
//! each cosine in a rational interval (dyadic endpoints, outward rounding,
//! Machin's formula for `pi`, Taylor series with a Lagrange remainder) and
//! double the precision until the enclosure of `v` excludes zero. Zero
//! itself is detected exactly from the coefficient vector, so the loop
//! terminates for every input.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::CyclotomicScalar;

const START_BITS: u32 = 64;
const MAX_BITS: u32 = 1 << 16;

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    fn point(x: BigRational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    fn around(center: BigRational, radius: &BigRational) -> Self {
        Self {
            lo: &center - radius,
            hi: center + radius,
        }
    }

    fn add(&self, o: &Self) -> Self {
        Self {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn scale(&self, q: &BigRational) -> Self {
        let (a, b) = (&self.lo * q, &self.hi * q);
        if q.is_negative() {
            Self { lo: b, hi: a }
        } else {
            Self { lo: a, hi: b }
        }
    }

    fn round_out(&self, bits: u32) -> Self {
        let scale = BigRational::from_integer(BigInt::one() << bits);
        Self {
            lo: (&self.lo * &scale).floor() / &scale,
            hi: (&self.hi * &scale).ceil() / &scale,
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    #[cfg(test)]
    fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

fn two_pow_neg(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// `arctan(1/n)` by its alternating series, truncated once the next term is
/// below `2^-bits`.
fn arctan_recip(n: u64, bits: u32) -> Interval {
    let n = BigInt::from(n);
    let n2 = &n * &n;
    let eps = two_pow_neg(bits);
    let mut sum = BigRational::zero();
    let mut power = n.clone(); // n^(2k+1)
    let mut k = 0u64;
    loop {
        let term = BigRational::new(BigInt::one(), BigInt::from(2 * k + 1) * &power);
        if term < eps {
            // the remaining tail is bounded by this first omitted term
            return Interval::around(sum, &term).round_out(bits + 2);
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &n2;
        k += 1;
    }
}

/// Enclosure of `pi` of width about `2^-bits`.
pub fn pi_enclosure(bits: u32) -> Interval {
    let a = arctan_recip(5, bits + 6);
    let b = arctan_recip(239, bits + 6);
    let sixteen = BigRational::from_integer(16.into());
    let four = BigRational::from_integer(4.into());
    Interval {
        lo: &a.lo * &sixteen - &b.hi * &four,
        hi: &a.hi * &sixteen - &b.lo * &four,
    }
    .round_out(bits + 2)
}

/// Enclosure of `cos(x)` for every `x` in the interval (`|x| <= 8`).
pub fn cos_enclosure(x: &Interval, bits: u32) -> Interval {
    let guard = bits + 16;
    let two = BigRational::from_integer(2.into());
    let center = ((&x.lo + &x.hi) / &two).round_out_point(guard);
    let radius = std::cmp::max(&x.hi - &center, &center - &x.lo);
    // cos is 1-Lipschitz, so cos([c-r, c+r]) lies in cos(c) ± r.
    let c2 = &center * &center;
    let eps = two_pow_neg(guard);
    let mut term = Interval::point(BigRational::one());
    let mut sum = term.clone();
    let mut k = 1u64;
    // integer bound |c| <= b keeps the remainder arithmetic small
    let b = BigRational::from_integer(center.abs().ceil().to_integer().max(BigInt::one()));
    let b2 = &b * &b;
    let mut rem = b2.clone() / BigRational::from_integer(2.into());
    loop {
        let factor = -(&c2) / BigRational::from_integer(BigInt::from((2 * k - 1) * (2 * k)));
        term = term.scale(&factor).round_out(guard);
        sum = sum.add(&term).round_out(guard);
        k += 1;
        // Lagrange remainder b^(2k) / (2k)! bounds everything after term k-1.
        rem = rem * &b2 / BigRational::from_integer(BigInt::from((2 * k - 1) * (2 * k)));
        if rem < eps {
            return Interval::around(BigRational::zero(), &(rem + &radius))
                .add(&sum)
                .round_out(bits + 4);
        }
    }
}

trait RoundPoint {
    fn round_out_point(&self, bits: u32) -> BigRational;
}

impl RoundPoint for BigRational {
    fn round_out_point(&self, bits: u32) -> BigRational {
        let scale = BigRational::from_integer(BigInt::one() << bits);
        (self * &scale).round() / scale
    }
}

/// Enclosure of the real part of `v` under `zeta -> exp(2 pi i / N)`.
pub fn real_part_enclosure(v: &CyclotomicScalar, bits: u32) -> Interval {
    let n = v.conductor();
    let pi = pi_enclosure(bits + 16);
    let mut acc = Interval::point(BigRational::zero());
    for (i, c) in v.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let angle = pi.scale(&BigRational::new(
            BigInt::from(2 * i as u64),
            BigInt::from(n),
        ));
        let cos = cos_enclosure(&angle, bits + 8);
        acc = acc.add(&cos.scale(c));
    }
    acc.round_out(bits + 8)
}

/// Exact sign of a real cyclotomic number, with the enclosure that decided it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignEvidence {
    pub sign: Ordering,
    pub enclosure: Interval,
    pub bits: u32,
}

pub fn real_sign(v: &CyclotomicScalar) -> Result<SignEvidence> {
    if !v.is_real() {
        return Err(Error::domain(format!("{v:?} is not real")));
    }
    if v.is_zero() {
        let z = Interval::point(BigRational::zero());
        return Ok(SignEvidence {
            sign: Ordering::Equal,
            enclosure: z,
            bits: 0,
        });
    }
    let mut bits = START_BITS;
    while bits <= MAX_BITS {
        let enc = real_part_enclosure(v, bits);
        if enc.lo.is_positive() {
            return Ok(SignEvidence {
                sign: Ordering::Greater,
                enclosure: enc,
                bits,
            });
        }
        if enc.hi.is_negative() {
            return Ok(SignEvidence {
                sign: Ordering::Less,
                enclosure: enc,
                bits,
            });
        }
        bits *= 2;
    }
    Err(Error::Verification(format!(
        "sign of nonzero {v:?} undecided at {MAX_BITS} bits"
    )))
}
