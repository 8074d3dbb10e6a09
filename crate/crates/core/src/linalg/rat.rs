//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. The textual form is `"p/q"`, or just `"p"` when the
//! denominator is one, with the sign carried by the numerator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Integer-valued rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Parses `"p"` or `"p/q"` where `p` may carry a leading `-` and `q` is a
/// positive integer. Surrounding whitespace is not accepted.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Canonical text form; `parse_rat(&format_rat(x)) == x` always holds.
pub fn format_rat(x: &Rat) -> String {
    // `Ratio`'s Display already prints `p` for integers and `p/q` otherwise,
    // and keeps the sign on the numerator because the value is normalized.
    debug_assert!(x.denom().is_positive());
    x.to_string()
}
