//! Arbitrary-precision rationals, kept normalized.

use super::{Field, FieldError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use std::fmt;

/// A rational with `gcd(|num|, den) = 1` and `den > 0`, enforced on
/// construction so the invariant holds after every operation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Rational { num, den }
    }

    pub fn from_int(n: i64) -> Self {
        Rational { num: BigInt::from(n), den: BigInt::one() }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_normalized(&self) -> bool {
        self.den.is_positive() && self.num.gcd(&self.den).is_one()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Context for the rational field.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::from_int(0)
    }

    fn one(&self) -> Rational {
        Rational::from_int(1)
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.num.is_zero()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::new(&a.num * &b.den + &b.num * &a.den, &a.den * &b.den)
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::new(&a.num * &b.den - &b.num * &a.den, &a.den * &b.den)
    }

    fn neg(&self, a: &Rational) -> Rational {
        Rational { num: -&a.num, den: a.den.clone() }
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::new(&a.num * &b.num, &a.den * &b.den)
    }

    fn inv(&self, a: &Rational) -> Result<Rational, FieldError> {
        if a.num.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(Rational::new(a.den.clone(), a.num.clone()))
    }

    fn from_bigint(&self, n: &BigInt) -> Rational {
        Rational { num: n.clone(), den: BigInt::one() }
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        Rational::from_int(rng.gen_range(-99..=99))
    }

    fn fmt_elem(&self, a: &Rational) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let q = Rational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(q, Rational::new(BigInt::from(-3), BigInt::from(2)));
        assert!(q.is_normalized());
        assert_eq!(q.to_string(), "-3/2");
    }

    #[test]
    fn arithmetic_stays_normalized() {
        let f = Rationals;
        let a = Rational::new(BigInt::from(1), BigInt::from(6));
        let b = Rational::new(BigInt::from(1), BigInt::from(3));
        let s = f.add(&a, &b);
        assert_eq!(s, Rational::new(BigInt::from(1), BigInt::from(2)));
        assert!(s.is_normalized());
        assert_eq!(f.inv(&s).unwrap(), Rational::from_int(2));
    }

    #[test]
    fn scalar_grammar() {
        let f = Rationals;
        assert_eq!(f.parse_scalar("-3/2").unwrap().to_string(), "-3/2");
        assert_eq!(f.parse_scalar("10").unwrap(), Rational::from_int(10));
    }
}
