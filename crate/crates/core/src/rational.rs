//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p` or `p/q` (optional leading sign).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let syntax = |message: String| Error::Syntax {
        line: 1,
        column: 1,
        message,
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| syntax(format!("invalid rational {text:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| syntax(format!("invalid rational {text:?}")))?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Formats as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Renders `coeff * body` as a signed summand. `first` controls whether a
/// leading `+` is emitted.
pub(crate) fn write_term(out: &mut String, coeff: &Rational, body: &str, first: bool) {
    let abs = coeff.abs();
    if coeff.is_negative() {
        out.push_str(if first { "-" } else { " - " });
    } else if !first {
        out.push_str(" + ");
    }
    if !abs.is_one() {
        out.push_str(&format_rational(&abs));
        out.push('*');
    }
    out.push_str(body);
}
