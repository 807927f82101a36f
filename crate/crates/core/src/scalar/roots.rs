//! `P_m(A)`, the specialisation `A -> zeta_N^j`, and the table of roots of
//! unity used for `m >= 6`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::arith::gcd;
use super::{CyclotomicField, CyclotomicScalar, LaurentPolynomial};
use crate::error::{Error, Result};

/// `A = zeta_N^j`, a primitive `N`-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootOfUnityChoice {
    conductor: u64,
    exponent: u64,
}

impl RootOfUnityChoice {
    pub fn new(conductor: u64, exponent: u64) -> Result<Self> {
        if conductor < 2 {
            return Err(Error::domain(format!(
                "root of unity conductor must be at least 2, got {conductor}"
            )));
        }
        if exponent == 0 || exponent >= conductor || gcd(exponent, conductor) != 1 {
            return Err(Error::domain(format!(
                "zeta_{conductor}^{exponent} is not a primitive {conductor}-th root of unity \
                 (need 1 <= j < N, gcd(j, N) = 1)"
            )));
        }
        Ok(Self {
            conductor,
            exponent,
        })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn field(&self) -> Arc<CyclotomicField> {
        CyclotomicField::new(self.conductor)
    }

    /// `A^k` as an element of `Q(zeta_N)`.
    pub fn a_pow(&self, field: &Arc<CyclotomicField>, k: i64) -> CyclotomicScalar {
        debug_assert_eq!(field.conductor(), self.conductor);
        field.zeta_pow(self.exponent as i64 * k)
    }

    /// Multiplicative order of `q = A^4`.
    pub fn q_order(&self) -> u64 {
        self.conductor / gcd(self.conductor, 4)
    }
}

impl fmt::Display for RootOfUnityChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.conductor, self.exponent)
    }
}

/// Parses `N:j`, or a bare `N` meaning `j = 1`.
impl FromStr for RootOfUnityChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected N:j, got {s:?}"));
        let (n, j) = match s.trim().split_once(':') {
            Some((n, j)) => (n.trim(), j.trim()),
            None => (s.trim(), "1"),
        };
        Self::new(n.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?)
    }
}

/// `P_m(A) = A^(2-m) (1 - A^4 + A^8 - ... + (-1)^(m-1) A^(4m-4))`, the
/// coefficient of `E_i` in `rho(sigma_i^m)`.
pub fn pm_polynomial(m: i64) -> Result<LaurentPolynomial> {
    if m < 1 {
        return Err(Error::domain(format!("P_m needs m >= 1, got {m}")));
    }
    Ok(LaurentPolynomial::from_terms(
        (0..m).map(|k| (2 - m + 4 * k, if k % 2 == 0 { 1 } else { -1 })),
    ))
}

/// Exact image of `p` under `A -> zeta_N^j`.
pub fn evaluate_laurent(p: &LaurentPolynomial, choice: RootOfUnityChoice) -> CyclotomicScalar {
    evaluate_in(p, choice, &choice.field())
}

pub(crate) fn evaluate_in(
    p: &LaurentPolynomial,
    choice: RootOfUnityChoice,
    field: &Arc<CyclotomicField>,
) -> CyclotomicScalar {
    let j = choice.exponent as i64;
    field.from_exponents(
        p.terms()
            .map(|(e, c)| (e * j, BigRational::from_integer(c.clone()))),
    )
}

/// Does `P_m` vanish at `A = zeta_N^j`?
pub fn is_pm_root(m: i64, choice: RootOfUnityChoice) -> Result<bool> {
    Ok(evaluate_laurent(&pm_polynomial(m)?, choice).is_zero())
}

/// The root of unity `A = zeta_N` (so `j = 1`) used for a given `m >= 6`:
/// `N = 12` for `m = 6`, `N = 20` for `m = 10`, `N = 8m` for odd `m`, and
/// `N = 4m` for the remaining even `m`.
///
/// Any primitive `N`-th root would do; everything downstream that depends
/// on the choice searches over Galois conjugates, so `j = 1` loses nothing.
pub fn canonical_root_for_m(m: i64) -> Result<RootOfUnityChoice> {
    if m <= 5 {
        return Err(Error::Unsupported(format!(
            "the root-of-unity table covers m >= 6, got m = {m}"
        )));
    }
    let n = match m {
        6 => 12,
        10 => 20,
        m if m % 2 == 1 => 8 * m,
        m => 4 * m,
    };
    RootOfUnityChoice::new(n as u64, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn choice(n: u64, j: u64) -> RootOfUnityChoice {
        RootOfUnityChoice::new(n, j).unwrap()
    }

    /// Closed criterion from summing the geometric series in `-A^4`.
    fn geometric_criterion(m: i64, c: RootOfUnityChoice) -> bool {
        let f = c.field();
        let minus_q = -&c.a_pow(&f, 4);
        Scalar::pow(&minus_q, m as u64).is_one() && !minus_q.is_one()
    }

    #[test]
    fn pm_small_cases() {
        assert_eq!(pm_polynomial(1).unwrap(), LaurentPolynomial::a_pow(1));
        assert_eq!(
            pm_polynomial(2).unwrap(),
            LaurentPolynomial::from_terms([(0, 1), (4, -1)])
        );
        assert!(pm_polynomial(0).is_err());
        assert!(pm_polynomial(-3).is_err());
    }

    #[test]
    fn pm_satisfies_recursion() {
        let mut p = pm_polynomial(1).unwrap();
        for m in 1..=20 {
            let next =
                &(&LaurentPolynomial::monomial(-1, 3) * &p) + &LaurentPolynomial::a_pow(1 - m);
            assert_eq!(next, pm_polynomial(m + 1).unwrap(), "m = {m}");
            p = next;
        }
    }

    #[test]
    fn pm6_vanishes_at_zeta12() {
        assert!(evaluate_laurent(&pm_polynomial(6).unwrap(), choice(12, 1)).is_zero());
        // (-A^4)^6 = 1 and -A^4 != 1 by exponent arithmetic: -A^4 = zeta_12^(4+6) = zeta_12^10,
        // which has order 12 / gcd(10, 12) = 6.
        assert_eq!(12 / gcd(10, 12), 6);
    }

    #[test]
    fn is_pm_root_examples() {
        assert!(is_pm_root(6, choice(12, 1)).unwrap());
        assert!(!is_pm_root(6, choice(8, 1)).unwrap());
        assert!(!is_pm_root(1, choice(4, 1)).unwrap());
        // q = zeta_24^4 has order 6, so -q has order 3 and (-q)^6 = 1: a root.
        assert!(is_pm_root(6, choice(24, 1)).unwrap());
        assert!(!is_pm_root(6, choice(16, 1)).unwrap());
    }

    #[test]
    fn is_pm_root_matches_geometric_criterion() {
        for n in 2..=60u64 {
            for j in (1..n).filter(|&j| gcd(j, n) == 1).take(3) {
                for m in 1..=12 {
                    let c = choice(n, j);
                    assert_eq!(
                        is_pm_root(m, c).unwrap(),
                        geometric_criterion(m, c),
                        "m={m} {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn canonical_table() {
        assert_eq!(canonical_root_for_m(6).unwrap(), choice(12, 1));
        assert_eq!(canonical_root_for_m(7).unwrap(), choice(56, 1));
        assert_eq!(canonical_root_for_m(8).unwrap(), choice(32, 1));
        assert_eq!(canonical_root_for_m(10).unwrap(), choice(20, 1));
        assert!(matches!(
            canonical_root_for_m(5),
            Err(Error::Unsupported(_))
        ));
        for m in 6..=16 {
            let c = canonical_root_for_m(m).unwrap();
            assert!(is_pm_root(m, c).unwrap());
            let r = c.q_order();
            assert!(r >= 3 && ![4, 6, 10].contains(&r), "m={m} r={r}");
        }
    }

    #[test]
    fn evaluate_examples() {
        // zeta_8^4 = zeta_8^-4 = -1
        let p = LaurentPolynomial::from_terms([(4, 1), (-4, 1)]);
        assert_eq!(
            evaluate_laurent(&p, choice(8, 1)),
            choice(8, 1).field().integer(-2)
        );
        assert!(evaluate_laurent(&p, choice(16, 1)).is_zero());
        let d = LaurentPolynomial::delta();
        let v = evaluate_laurent(&d, choice(12, 1));
        assert_eq!(v, choice(12, 1).field().integer(-1));
        let (re, im) = v.to_complex_f64();
        let z = std::f64::consts::TAU / 12.0;
        assert!((re - (-2.0 * (2.0 * z).cos())).abs() < 1e-12 && im.abs() < 1e-12);
        assert!(evaluate_laurent(&LaurentPolynomial::zero(), choice(12, 1)).is_zero());
    }

    #[test]
    fn choice_validation() {
        assert!(RootOfUnityChoice::new(12, 2).is_err());
        assert!(RootOfUnityChoice::new(12, 12).is_err());
        assert!(RootOfUnityChoice::new(12, 0).is_err());
        assert_eq!("40:3".parse::<RootOfUnityChoice>().unwrap(), choice(40, 3));
        assert_eq!("12".parse::<RootOfUnityChoice>().unwrap(), choice(12, 1));
        assert!("12:x".parse::<RootOfUnityChoice>().is_err());
    }
}
