//! The prime field `F_p` for a machine-word prime p > 3.

use super::{is_prime_u64, Field, FieldError, FiniteField};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;

/// Context for `F_p`. Elements are canonical representatives in `[0, p)`.
///
/// Characteristics 2 and 3 are rejected: the constructions involve the
/// coefficient -3 and cube structure, both of which degenerate there.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p <= 3 || p > (1 << 31) || !is_prime_u64(p) {
            return Err(FieldError::BadPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce_u64(&self, n: u64) -> u64 {
        n % self.p
    }

    /// All field elements in canonical order, for exhaustive scans.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> Result<u64, FieldError> {
        if *a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (*a as i128, self.p as i128);
        let (mut s0, mut s1) = (1i128, 0i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "p prime and a nonzero");
        let inv = s0.rem_euclid(self.p as i128) as u64;
        Ok(inv)
    }

    fn from_bigint(&self, n: &BigInt) -> u64 {
        let m = n.mod_floor_u64(self.p);
        m
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn fmt_elem(&self, a: &u64) -> String {
        // balanced representative for readability; reparses to the same value
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
}

impl FiniteField for PrimeField {
    fn char_p(&self) -> u64 {
        self.p
    }

    fn ext_degree(&self) -> usize {
        1
    }

    fn frobenius(&self, a: &u64) -> u64 {
        *a
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        let m = self % BigInt::from(p);
        let m = if m.is_negative() { m + BigInt::from(p) } else { m };
        m.to_u64().expect("reduced residue fits u64")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_moduli() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(3).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(10007).is_ok());
    }

    #[test]
    fn inverse_examples() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.inv(&3).unwrap(), 5); // 3*5 = 15 = 1 mod 7
        assert_eq!(f7.inv(&1).unwrap(), 1);
        assert_eq!(f7.inv(&0), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn signed_reduction() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.from_i64(-1), 6);
        assert_eq!(f7.from_i64(-14), 0);
        assert_eq!(f7.from_i64(15), 1);
    }

    #[test]
    fn scalar_grammar() {
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(f7.parse_scalar("13").unwrap(), 6);
        assert_eq!(f7.parse_scalar("1/2").unwrap(), 4); // 2*4 = 1 mod 7
        assert!(f7.parse_scalar("1/0").is_err());
        assert!(f7.parse_scalar("x").is_err());
    }
}
