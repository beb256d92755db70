//! Exact rational coefficients.
//!
//! The whole crate computes over `num_rational::BigRational`, which keeps
//! fractions fully reduced with a positive denominator (zero is `0/1`).
//! This module re-exports the type and provides the `p/q` string format
//! used by the expression grammar and the document files.

use num_traits::{Signed, Zero};

pub use num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from two machine integers.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from a machine integer.
pub fn int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Parses `p` or `p/q` with optional sign. Returns `None` on malformed
/// input or a zero denominator.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Canonical `p` / `p/q` rendering (reduced, denominator omitted when 1).
pub fn format_rational(value: &Rational) -> String {
    if value.denom() == &BigInt::from(1) {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// `n!` as a big integer. Panics on negative input.
pub fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative integer");
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Falling factorial `b·(b−1)···(b−a+1)`; equals 1 when `a = 0` and 0 when
/// `a > b`.
pub fn falling(b: u32, a: u32) -> BigInt {
    if a > b {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for k in 0..a {
        acc *= b - k;
    }
    acc
}

/// Absolute value.
pub fn rational_abs(value: &Rational) -> Rational {
    value.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["3/2", "-7", "0", "22/7", "-5/9"] {
            let r = parse_rational(text).unwrap();
            assert_eq!(format_rational(&r), text);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling(5, 2), BigInt::from(20));
        assert_eq!(falling(3, 0), BigInt::from(1));
        assert_eq!(falling(2, 3), BigInt::from(0));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
