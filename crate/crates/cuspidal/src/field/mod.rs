//! Exact coefficient arithmetic.
//!
//! Three coefficient domains share one interface: arbitrary-precision
//! rationals, prime fields `F_p` (p > 3), and extension fields `F_{p^k}`
//! represented as univariate quotient rings `F_p[t]/(m)`. A field is a
//! small context value that knows its modulus and operates on plain
//! element data, so elements stay cheap to copy and share.

mod ext;
mod prime;
mod rational;

pub use ext::{ExtElem, ExtField};
pub use prime::PrimeField;
pub use rational::{Rational, Rationals};

use num_bigint::{BigInt, BigUint};
use rand::Rng;
use std::fmt::Debug;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operands live in different fields: {0} vs {1}")]
    IncompatibleFields(String, String),
    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(u64, u64),
    #[error("modulus {0} is not a prime > 3")]
    BadPrime(u64),
    #[error("cannot interpret {0:?} as a scalar: {1}")]
    BadScalar(String, String),
}

/// A field of coefficients in context-object style.
///
/// All values are immutable after construction and safe to share across
/// threads; every operation is a pure function of its inputs.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// 0 for the rationals, p for fields of characteristic p.
    fn characteristic(&self) -> u64;

    /// Uniform sample for finite fields; small bounded scalars for the
    /// rationals (uniformity is meaningless there).
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn fmt_elem(&self, a: &Self::Elem) -> String;

    /// Parses `int` or `int/int` per the polynomial text grammar.
    fn parse_scalar(&self, s: &str) -> Result<Self::Elem, FieldError> {
        let bad = |m: &str| FieldError::BadScalar(s.to_string(), m.to_string());
        let parse_int = |t: &str| -> Result<BigInt, FieldError> {
            t.parse::<BigInt>().map_err(|e| bad(&e.to_string()))
        };
        match s.split_once('/') {
            None => Ok(self.from_bigint(&parse_int(s)?)),
            Some((num, den)) => {
                let n = self.from_bigint(&parse_int(num)?);
                let d = self.from_bigint(&parse_int(den)?);
                self.div(&n, &d)
            }
        }
    }
}

/// Finite fields additionally expose cardinality, Frobenius, and powering
/// by big exponents (needed by univariate factorization).
pub trait FiniteField: Field {
    fn char_p(&self) -> u64;
    fn ext_degree(&self) -> usize;

    fn cardinality(&self) -> BigUint {
        BigUint::from(self.char_p()).pow(self.ext_degree() as u32)
    }

    /// The arithmetic Frobenius a ↦ a^p.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem;

    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
        }
        acc
    }
}

/// Deterministic Miller-Rabin, exact for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(101));
        assert!(is_prime_u64(10007));
        assert!(is_prime_u64(2147483647));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(10006));
        assert!(!is_prime_u64(257 * 263));
    }
}
