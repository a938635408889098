//! Exact rational helpers on top of [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn is_positive(value: &Rational) -> bool {
    value.is_positive()
}

/// `1 / l` for a positive integer `l`.
pub fn reciprocal(l: &BigInt) -> Rational {
    Rational::new(BigInt::one(), l.clone())
}

/// Least common multiple of the denominators of `values` (1 for an empty input).
pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Nearest `f64`, or infinity when the value is out of range.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(if value.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Exact rational value of a finite float.
pub fn from_f64(value: f64) -> Option<Rational> {
    Rational::from_float(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_form_is_canonical() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(ratio(3, -6), ratio(-1, 2));
        assert_eq!(*ratio(3, -6).denom(), BigInt::from(2));
    }

    #[test]
    fn lcm_of_mixed_denominators() {
        let values = [ratio(5, 12), ratio(1, 2), ratio(1, 3)];
        assert_eq!(lcm_of_denominators(&values), BigInt::from(12));
        assert_eq!(lcm_of_denominators(&[]), BigInt::one());
    }

    #[test]
    fn exact_addition() {
        assert_eq!(ratio(1, 2) + ratio(1, 3), ratio(5, 6));
    }

    #[test]
    fn float_round_trip() {
        assert_eq!(to_f64(&ratio(3, 2)), 1.5);
        assert_eq!(from_f64(0.25), Some(ratio(1, 4)));
    }
}
