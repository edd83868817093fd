//! Dense univariate polynomials: division, gcd, squarefree parts, and
//! factorization over finite fields (distinct-degree, then Cantor-Zassenhaus
//! equal-degree splitting with seeded randomness).

use super::linalg::Matrix;
use crate::field::{Field, FiniteField};
use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

/// Little-endian coefficients, no trailing zeros; zero is the empty vector.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<F: Field> {
    pub field: F,
    pub coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().map(|c| field.is_zero(c)).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &F) -> Self {
        UniPoly { field: field.clone(), coeffs: vec![] }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        UniPoly::new(field, vec![c])
    }

    pub fn x(field: &F) -> Self {
        UniPoly::new(field, vec![field.zero(), field.one()])
    }

    pub fn monomial(field: &F, c: F::Elem, e: usize) -> Self {
        let mut coeffs = vec![field.zero(); e + 1];
        coeffs[e] = c;
        UniPoly::new(field, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
                let b = other.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
                f.add(&a, &b)
            })
            .collect();
        UniPoly::new(f, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        UniPoly { field: self.field.clone(), coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(f);
        }
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(&coeffs[i + j], &f.mul(a, b));
            }
        }
        UniPoly::new(f, coeffs)
    }

    pub fn mul_scalar(&self, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        UniPoly::new(&self.field, coeffs)
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.mul_scalar(&self.field.inv(l).expect("nonzero lead")),
        }
    }

    /// (quotient, remainder) with deg r < deg divisor.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let f = &self.field;
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dlead = f.inv(divisor.lead().unwrap()).expect("nonzero lead");
        let dd = divisor.degree().unwrap();
        let mut rem = self.clone();
        let mut q = vec![f.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = f.mul(rem.lead().unwrap(), &dlead);
            let shift = rd - dd;
            q[shift] = f.add(&q[shift], &c);
            for (i, b) in divisor.coeffs.iter().enumerate() {
                let t = f.mul(&c, b);
                rem.coeffs[shift + i] = f.sub(&rem.coeffs[shift + i], &t);
            }
            while rem.coeffs.last().map(|c| f.is_zero(c)).unwrap_or(false) {
                rem.coeffs.pop();
            }
        }
        (UniPoly::new(f, q), rem)
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
            .collect();
        UniPoly::new(f, coeffs)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// Largest squarefree divisor. Degrees here stay below the field
    /// characteristic, so f' = 0 only for constants.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let ch = self.field.characteristic();
        assert!(
            ch == 0 || (self.degree().unwrap() as u64) < ch,
            "squarefree decomposition needs degree < characteristic"
        );
        let d = self.derivative();
        assert!(!d.is_zero());
        let g = self.gcd(&d);
        self.divrem(&g).0.monic()
    }

    pub fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Self {
        let f = &self.field;
        let mut acc = UniPoly::constant(f, f.one());
        let mut base = self.rem(modulus);
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
        }
        acc
    }
}

impl<F: FiniteField> UniPoly<F> {
    /// Full factorization into monic irreducibles with multiplicities,
    /// deterministic for a fixed rng stream. Factors are sorted by degree,
    /// then by coefficient sequence.
    pub fn factor<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<(UniPoly<F>, usize)> {
        assert!(!self.is_zero());
        let sf = self.squarefree_part();
        let mut irreducibles = vec![];
        for (d, prod) in distinct_degree(&sf) {
            equal_degree(&prod, d, rng, &mut irreducibles);
        }
        // recover multiplicities by exact division
        let mut out = vec![];
        for g in irreducibles {
            let mut m = 0;
            let mut h = self.clone();
            loop {
                let (q, r) = h.divrem(&g);
                if !r.is_zero() {
                    break;
                }
                m += 1;
                h = q;
            }
            debug_assert!(m >= 1);
            out.push((g, m));
        }
        out.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| cmp_coeff_seq(&a.0, &b.0))
        });
        out
    }
}

fn cmp_coeff_seq<F: FiniteField>(a: &UniPoly<F>, b: &UniPoly<F>) -> std::cmp::Ordering {
    format!("{:?}", a.coeffs).cmp(&format!("{:?}", b.coeffs))
}

/// Splits a monic squarefree polynomial into (degree d, product of all its
/// irreducible factors of degree d).
fn distinct_degree<F: FiniteField>(sf: &UniPoly<F>) -> Vec<(usize, UniPoly<F>)> {
    let f = &sf.field;
    let q = f.cardinality();
    let mut out = vec![];
    let mut rest = sf.monic();
    let x = UniPoly::x(f);
    let mut h = x.clone(); // x^(q^d) mod rest, maintained incrementally
    let mut d = 0;
    while rest.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > rest.degree().unwrap() {
            // the remainder itself is irreducible
            out.push((rest.degree().unwrap(), rest.clone()));
            break;
        }
        h = h.pow_mod(&q, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree().unwrap_or(0) > 0 {
            out.push((d, g.clone()));
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting (odd characteristic).
fn equal_degree<F: FiniteField, R: Rng + ?Sized>(
    prod: &UniPoly<F>,
    d: usize,
    rng: &mut R,
    out: &mut Vec<UniPoly<F>>,
) {
    let f = &prod.field;
    let n = prod.degree().unwrap();
    if n == d {
        out.push(prod.monic());
        return;
    }
    debug_assert!(n % d == 0 && n > 0);
    let exp = (f.cardinality().pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let coeffs: Vec<F::Elem> = (0..n).map(|_| f.sample(rng)).collect();
        let a = UniPoly::new(f, coeffs);
        if a.degree().unwrap_or(0) < 1 {
            continue;
        }
        let b = a.pow_mod(&exp, prod);
        let b1 = b.sub(&UniPoly::constant(f, f.one()));
        let g = prod.gcd(&b1);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            equal_degree(&g, d, rng, out);
            equal_degree(&prod.divrem(&g).0, d, rng, out);
            return;
        }
    }
}

/// Characteristic polynomial det(tI - M) of a square matrix, by evaluation
/// at deg+1 distinct scalars and Lagrange interpolation. Needs more field
/// elements than the dimension (always true at the primes used here).
pub fn charpoly<F: Field>(m: &Matrix<F>) -> UniPoly<F> {
    assert_eq!(m.rows, m.cols);
    let f = m.field.clone();
    let n = m.rows;
    if n == 0 {
        return UniPoly::constant(&f, f.one());
    }
    let ch = f.characteristic();
    assert!(ch == 0 || (n as u64) < ch, "charpoly interpolation needs dim < p");
    let xs: Vec<F::Elem> = (0..=n as i64).map(|i| f.from_i64(i)).collect();
    let ys: Vec<F::Elem> = xs
        .iter()
        .map(|c| {
            let mut a = Matrix::zero(&f, n, n);
            for i in 0..n {
                for j in 0..n {
                    let mut v = f.neg(m.at(i, j));
                    if i == j {
                        v = f.add(&v, c);
                    }
                    a.set(i, j, v);
                }
            }
            a.det()
        })
        .collect();
    lagrange(&f, &xs, &ys)
}

fn lagrange<F: Field>(f: &F, xs: &[F::Elem], ys: &[F::Elem]) -> UniPoly<F> {
    let mut acc = UniPoly::zero(f);
    for (i, xi) in xs.iter().enumerate() {
        let mut num = UniPoly::constant(f, ys[i].clone());
        let mut den = f.one();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            num = num.mul(&UniPoly::new(f, vec![f.neg(xj), f.one()]));
            den = f.mul(&den, &f.sub(xi, xj));
        }
        acc = acc.add(&num.mul_scalar(&f.inv(&den).expect("distinct nodes")));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ExtField, PrimeField};
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn f101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn divrem_gcd() {
        let f = f101();
        // (x^2 - 1) / (x - 1) = x + 1
        let a = UniPoly::new(&f, vec![100, 0, 1]);
        let b = UniPoly::new(&f, vec![100, 1]);
        let (q, r) = a.divrem(&b);
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::new(&f, vec![1, 1]));
        assert_eq!(a.gcd(&b), b.monic());
    }

    #[test]
    fn squarefree() {
        let f = f101();
        // (x-2)^2 (x-3) -> squarefree part (x-2)(x-3)
        let x2 = UniPoly::new(&f, vec![99, 1]);
        let x3 = UniPoly::new(&f, vec![98, 1]);
        let p = x2.mul(&x2).mul(&x3);
        let sf = p.squarefree_part();
        assert_eq!(sf, x2.mul(&x3).monic());
    }

    #[test]
    fn factor_with_multiplicities() {
        let f = f101();
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        let x2 = UniPoly::new(&f, vec![99, 1]);
        let x3 = UniPoly::new(&f, vec![98, 1]);
        // x^2 + 1: -1 is a QR mod 101 (101 = 1 mod 4), so it splits; use
        // x^2 - 2 instead: 2 is a non-residue mod 101? 2 is a QR iff p = ±1
        // mod 8; 101 = 5 mod 8, so x^2 - 2 is irreducible.
        let irr2 = UniPoly::new(&f, vec![99, 0, 1]);
        let p = x2.mul(&x2).mul(&x3).mul(&irr2);
        let factors = p.factor(&mut rng);
        assert_eq!(factors.len(), 3);
        let total: usize = factors.iter().map(|(g, m)| g.degree().unwrap() * m).sum();
        assert_eq!(total, 5);
        assert!(factors.iter().any(|(g, m)| *m == 2 && *g == x2.monic()));
        assert!(factors.iter().any(|(g, m)| *m == 1 && *g == irr2.monic()));
        // recombine
        let mut prod = UniPoly::constant(&f, 1);
        for (g, m) in &factors {
            for _ in 0..*m {
                prod = prod.mul(g);
            }
        }
        assert_eq!(prod, p.monic());
    }

    #[test]
    fn factor_over_extension_field() {
        let fp = f101();
        let fq = ExtField::generate(fp, 2, 0);
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        // x^2 - 2 splits over F_{101^2}
        let p = UniPoly::new(&fq, vec![fq.embed(99), fq.zero(), fq.one()]);
        let factors = p.factor(&mut rng);
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|(g, m)| g.degree() == Some(1) && *m == 1));
    }

    #[test]
    fn charpoly_small() {
        let f = f101();
        let mut m = Matrix::zero(&f, 2, 2);
        // [[0,0],[1,0]] has charpoly t^2
        m.set(1, 0, 1);
        let cp = charpoly(&m);
        assert_eq!(cp, UniPoly::new(&f, vec![0, 0, 1]));
        // companion of (t-2)(t-3) = t^2 - 5t + 6
        let mut c = Matrix::zero(&f, 2, 2);
        c.set(0, 0, 2);
        c.set(1, 1, 3);
        assert_eq!(charpoly(&c), UniPoly::new(&f, vec![6, 96, 1]));
    }
}
