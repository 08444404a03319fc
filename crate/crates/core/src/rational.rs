//! Arbitrary-precision rationals and the `num/den` text form used in reports.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Canonical arbitrary-precision rational (gcd 1, positive denominator).
pub type Rational = num_rational::BigRational;

/// `num/den` as a rational.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Always emits `num/den`, including a `/1` denominator.
pub fn to_fraction_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Domain(format!("malformed rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Nearest `f64`.
pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn square(q: &Rational) -> Rational {
    q * q
}

pub fn is_nonnegative(q: &Rational) -> bool {
    !q.is_negative()
}

pub fn one() -> Rational {
    Rational::one()
}
