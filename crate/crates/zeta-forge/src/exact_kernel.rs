//! Exact integer and rational arithmetic for the closed-form tables.
//!
//! Values are `num` bignums: `BigRational` is always stored reduced with a
//! positive denominator, which is the canonical form the string contract
//! below relies on. The canonical text form is `p/q` with ASCII minus and the
//! denominator omitted when it is 1 — `"691/638512875"`, `"2"`, `"-1/30"`.
//! That rendering is the bit-exact contract used by the CLI and the test
//! goldens; [`parse_rational`] additionally accepts a typographic minus
//! (U+2212) on input.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::ToPrimitive;

pub use num::rational::BigRational;

/// Binomial coefficient C(n, r), zero when `r > n`.
///
/// Delegates to the multiplicative formula (running product with interleaved
/// exact divisions), so no factorial-sized intermediates are formed.
pub fn binomial(n: u64, r: u64) -> BigInt {
    num::integer::binomial(BigInt::from(n), BigInt::from(r))
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).map(BigInt::from).product()
}

/// Rational `numer/denom` from machine integers. Panics if `denom == 0`.
pub fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(numer.into(), denom.into())
}

/// Rational from a single integer.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// 2^exp as an exact integer.
pub fn pow2(exp: u64) -> BigInt {
    BigInt::from(1) << exp
}

/// Canonical string form of a rational (see module docs).
pub fn format_rational(x: &BigRational) -> String {
    x.to_string()
}

/// Parse the canonical `p/q` form; `p` alone means denominator 1.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let ascii = s.trim().replace('\u{2212}', "-");
    ascii.parse::<BigRational>().map_err(|_| Error::Parse {
        what: "rational",
        input: s.to_string(),
    })
}

/// Nearest double to an exact rational.
///
/// `Ratio::to_f64` handles bignum operands; the fallback shifts both parts
/// down together so even ratios of astronomically large integers round-trip
/// to a sensible double instead of `NaN`.
pub fn to_f64(x: &BigRational) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let bits = x.numer().bits().max(x.denom().bits());
    let shift = bits.saturating_sub(512);
    let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}
