//! Exact construction and certification of low-degree projective surfaces
//! whose only singularities are cusps forming a three-divisible set.
//!
//! The library builds the classical families in degrees 3 through 6 over a
//! prime field, computes their singular loci exactly (Groebner machinery
//! plus an independent brute-force oracle), classifies every singular point,
//! and certifies three-divisibility through the contact-surface polynomial
//! identity `s'*s'' - s^3 = phi * residual`.

pub mod certify;
pub mod cli;
pub mod families;
pub mod field;
pub mod groebner;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod singular;

pub use field::{ExtField, Field, FieldError, FiniteField, PrimeField, Rationals};
