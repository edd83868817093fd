//! Extension fields `F_{p^k} = F_p[t]/(m)` with m monic irreducible.
//!
//! These house singular-point coordinates that are not rational over the
//! base prime field. Elements are little-endian coefficient vectors of
//! length k over `F_p`; k = 1 degenerates to the prime field itself.

use super::{Field, FieldError, FiniteField, PrimeField};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

pub type ExtElem = Vec<u64>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtField {
    base: PrimeField,
    /// Monic modulus, little-endian, length k+1.
    modulus: Vec<u64>,
}

impl ExtField {
    /// Builds `F_p[t]/(modulus)`. The modulus must be monic of degree >= 1;
    /// irreducibility is the caller's responsibility when the modulus comes
    /// from a factorization (it is already irreducible there), and is
    /// checked by `ExtField::generate`.
    pub fn new(base: PrimeField, modulus: Vec<u64>) -> Self {
        let k = modulus.len() - 1;
        assert!(k >= 1, "modulus must have degree >= 1");
        assert_eq!(modulus[k], 1, "modulus must be monic");
        assert!(modulus.iter().all(|c| *c < base.p()), "modulus not reduced");
        ExtField { base, modulus }
    }

    /// The degree-1 extension: `F_p[t]/(t)`, canonically `F_p` itself.
    pub fn prime(base: PrimeField) -> Self {
        ExtField { base, modulus: vec![0, 1] }
    }

    /// Deterministic irreducible search: `F_{p^k}` with a modulus found by
    /// scanning a bounded lexicographic prefix of candidates, then seeded
    /// random sampling. Fixed (p, k, seed) always yields the same field.
    pub fn generate(base: PrimeField, k: usize, seed: u64) -> Self {
        ExtField::new(base, find_irreducible(base, k, seed))
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// The class of t, a root of the modulus.
    pub fn generator(&self) -> ExtElem {
        let k = self.degree();
        if k == 1 {
            // t = -c mod (t + c)
            vec![self.base.neg(&self.modulus[0])]
        } else {
            let mut v = vec![0; k];
            v[1] = 1;
            v
        }
    }

    /// Embeds a prime-field scalar as a constant.
    pub fn embed(&self, a: u64) -> ExtElem {
        let mut v = vec![0; self.degree()];
        v[0] = a % self.base.p();
        v
    }

    /// Checked embedding from a possibly different prime field.
    pub fn embed_from(&self, from: &PrimeField, a: u64) -> Result<ExtElem, FieldError> {
        if from.p() != self.base.p() {
            return Err(FieldError::CharacteristicMismatch(from.p(), self.base.p()));
        }
        Ok(self.embed(a))
    }

    /// The constant value of `a` if it lies in the prime subfield.
    pub fn to_prime(&self, a: &ExtElem) -> Option<u64> {
        if a[1..].iter().all(|c| *c == 0) {
            Some(a[0])
        } else {
            None
        }
    }

    fn reduce(&self, mut v: Vec<u64>) -> ExtElem {
        let k = self.degree();
        // divide by the monic modulus, keep remainder
        while v.len() > k {
            let top = v.len() - 1;
            let c = v[top];
            if c != 0 {
                for i in 0..k {
                    let t = self.base.mul(&c, &self.modulus[i]);
                    let idx = top - k + i;
                    v[idx] = self.base.sub(&v[idx], &t);
                }
            }
            v.pop();
        }
        v.resize(k, 0);
        v
    }
}

impl Field for ExtField {
    type Elem = ExtElem;

    fn zero(&self) -> ExtElem {
        vec![0; self.degree()]
    }

    fn one(&self) -> ExtElem {
        self.embed(1)
    }

    fn is_zero(&self, a: &ExtElem) -> bool {
        a.iter().all(|c| *c == 0)
    }

    fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }

    fn neg(&self, a: &ExtElem) -> ExtElem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let k = self.degree();
        let p128 = self.base.p() as u128;
        let mut acc = vec![0u128; 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if *y == 0 {
                    continue;
                }
                let cell = &mut acc[i + j];
                *cell = (*cell + *x as u128 * *y as u128) % p128;
            }
        }
        self.reduce(acc.into_iter().map(|c| c as u64).collect())
    }

    fn inv(&self, a: &ExtElem) -> Result<ExtElem, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::ZeroInverse);
        }
        // extended Euclid in F_p[t] on (a, modulus)
        let fp = self.base;
        let trim = |v: &mut Vec<u64>| {
            while v.last() == Some(&0) {
                v.pop();
            }
        };
        let mut r0: Vec<u64> = a.clone();
        trim(&mut r0);
        let mut r1 = self.modulus.clone();
        let mut s0: Vec<u64> = vec![1];
        let mut s1: Vec<u64> = vec![];
        while !r1.is_empty() {
            // monic division r0 = q*r1 + r
            let lead_inv = fp.inv(r1.last().unwrap())?;
            let mut rem = r0.clone();
            let mut q: Vec<u64> = vec![0; rem.len().saturating_sub(r1.len()) + 1];
            while rem.len() >= r1.len() && !rem.is_empty() {
                let shift = rem.len() - r1.len();
                let c = fp.mul(rem.last().unwrap(), &lead_inv);
                q[shift] = fp.add(&q[shift], &c);
                for (i, rc) in r1.iter().enumerate() {
                    let t = fp.mul(&c, rc);
                    rem[shift + i] = fp.sub(&rem[shift + i], &t);
                }
                trim(&mut rem);
            }
            // s_next = s0 - q*s1
            let mut s_next = s0.clone();
            let ql = q.len();
            s_next.resize(s_next.len().max(ql + s1.len()), 0);
            for (i, qc) in q.iter().enumerate() {
                if *qc == 0 {
                    continue;
                }
                for (j, sc) in s1.iter().enumerate() {
                    let t = fp.mul(qc, sc);
                    s_next[i + j] = fp.sub(&s_next[i + j], &t);
                }
            }
            trim(&mut s_next);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s_next);
        }
        // r0 is the gcd: a unit since the modulus is irreducible and a != 0
        debug_assert_eq!(r0.len(), 1, "gcd with irreducible modulus is a constant");
        let c = fp.inv(&r0[0])?;
        for x in s0.iter_mut() {
            *x = fp.mul(x, &c);
        }
        s0.resize(self.degree(), 0);
        Ok(self.reduce(s0))
    }

    fn from_bigint(&self, n: &BigInt) -> ExtElem {
        self.embed(self.base.from_bigint(n))
    }

    fn characteristic(&self) -> u64 {
        self.base.p()
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtElem {
        (0..self.degree()).map(|_| self.base.sample(rng)).collect()
    }

    fn fmt_elem(&self, a: &ExtElem) -> String {
        if self.degree() == 1 {
            return a[0].to_string();
        }
        let mut parts = vec![];
        for (i, c) in a.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let part = if var.is_empty() {
                c.to_string()
            } else if *c == 1 {
                var
            } else {
                format!("{c}*{var}")
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl FiniteField for ExtField {
    fn char_p(&self) -> u64 {
        self.base.p()
    }

    fn ext_degree(&self) -> usize {
        self.degree()
    }

    fn frobenius(&self, a: &ExtElem) -> ExtElem {
        self.pow(a, self.base.p())
    }
}

/// Rabin irreducibility test for a monic polynomial over `F_p`.
pub fn is_irreducible(base: PrimeField, poly: &[u64]) -> bool {
    let k = poly.len() - 1;
    assert!(k >= 1 && poly[k] == 1);
    if k == 1 {
        return true;
    }
    let ring = ExtField { base, modulus: poly.to_vec() };
    // x^(p^j) mod poly by iterated Frobenius of the class of t
    let t = ring.generator();
    let mut tp = vec![t.clone(); k + 1]; // tp[j] = t^(p^j)
    for j in 1..=k {
        tp[j] = ring.frobenius(&tp[j - 1]);
    }
    if tp[k] != t {
        return false;
    }
    // for each prime divisor l of k: gcd(x^(p^(k/l)) - x, poly) must be 1,
    // i.e. x^(p^(k/l)) != x in the quotient when poly is irreducible; for
    // the test on a general poly we need the actual gcd.
    let mut rem = k;
    let mut primes = vec![];
    let mut d = 2;
    while d * d <= rem {
        if rem % d == 0 {
            primes.push(d);
            while rem % d == 0 {
                rem /= d;
            }
        }
        d += 1;
    }
    if rem > 1 {
        primes.push(rem);
    }
    for l in primes {
        let h = ring.sub(&tp[k / l], &t);
        if gcd_with_modulus(base, &h, poly).len() > 1 {
            return false;
        }
    }
    true
}

/// gcd(h, m) in F_p[t] where h is given reduced mod m.
fn gcd_with_modulus(fp: PrimeField, h: &[u64], m: &[u64]) -> Vec<u64> {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    let mut a = m.to_vec();
    let mut b = h.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let lead_inv = fp.inv(b.last().unwrap()).unwrap();
        let mut rem = a.clone();
        while rem.len() >= b.len() && !rem.is_empty() {
            let shift = rem.len() - b.len();
            let c = fp.mul(rem.last().unwrap(), &lead_inv);
            for (i, bc) in b.iter().enumerate() {
                let t = fp.mul(&c, bc);
                rem[shift + i] = fp.sub(&rem[shift + i], &t);
            }
            trim(&mut rem);
        }
        a = std::mem::replace(&mut b, rem);
    }
    // normalize monic
    if let Some(l) = a.last().copied() {
        if l != 1 {
            let li = fp.inv(&l).unwrap();
            for c in a.iter_mut() {
                *c = fp.mul(c, &li);
            }
        }
    }
    a
}

/// Deterministic monic irreducible of degree k over `F_p`.
///
/// Candidates are visited in ascending lexicographic order (low coefficients
/// first) through a bounded prefix, then by seeded uniform sampling; the
/// first irreducible wins. Every degree has irreducibles, so the search
/// terminates.
pub fn find_irreducible(base: PrimeField, k: usize, seed: u64) -> Vec<u64> {
    assert!(k >= 1);
    let p = base.p();
    if k == 1 {
        // all monic linears are irreducible; pick t + seed-th constant
        let c = if seed == 0 { 0 } else { seed % p };
        return vec![c, 1];
    }
    let prefix = 1024u64;
    for idx in 0..prefix {
        let mut cand = vec![0u64; k + 1];
        cand[k] = 1;
        let mut n = idx;
        let mut i = 0;
        while n > 0 && i < k {
            cand[i] = n % p;
            n /= p;
            i += 1;
        }
        if n > 0 {
            break; // prefix exhausted the representable range
        }
        if is_irreducible(base, &cand) {
            return cand;
        }
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0x1bd1_1bda_a9fc_1a22);
    loop {
        let mut cand: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        cand.push(1);
        if is_irreducible(base, &cand) {
            return cand;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn finds_t2_plus_1_over_f7() {
        // -1 is a quadratic non-residue mod 7 (7 = 3 mod 4)
        assert_eq!(find_irreducible(f7(), 2, 0), vec![1, 0, 1]);
    }

    #[test]
    fn monic_linear_over_f7() {
        let m = find_irreducible(f7(), 1, 0);
        assert_eq!(m.len(), 2);
        assert_eq!(m[1], 1);
    }

    #[test]
    fn cubic_over_f101_has_no_root() {
        let f101 = PrimeField::new(101).unwrap();
        let m = find_irreducible(f101, 3, 0);
        assert_eq!(m.len(), 4);
        assert_eq!(m[3], 1);
        // brute-force root test: a cubic is irreducible iff it has no root
        for a in 0..101u64 {
            let mut v = 0u64;
            for c in m.iter().rev() {
                v = f101.add(&f101.mul(&v, &a), c);
            }
            assert_ne!(v, 0, "root {a} found");
        }
        assert!(is_irreducible(f101, &m));
    }

    #[test]
    fn inverse_of_t_in_f49() {
        // F_49 = F_7[t]/(t^2+1): t * (-t) = -t^2 = 1
        let f49 = ExtField::new(f7(), vec![1, 0, 1]);
        let t = f49.generator();
        let inv = f49.inv(&t).unwrap();
        assert_eq!(inv, vec![0, 6]); // -t = 6t
        assert!(f49.is_one(&f49.mul(&t, &inv)));
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        let f49 = ExtField::new(f7(), vec![1, 0, 1]);
        assert_eq!(f49.embed(0), vec![0, 0]);
        assert_eq!(f49.embed(5), vec![5, 0]);
        for a in 0..7u64 {
            for b in 0..7u64 {
                let lhs = f49.mul(&f49.embed(a), &f49.embed(b));
                let rhs = f49.embed(f7().mul(&a, &b));
                assert_eq!(lhs, rhs);
                let lhs = f49.add(&f49.embed(a), &f49.embed(b));
                let rhs = f49.embed(f7().add(&a, &b));
                assert_eq!(lhs, rhs);
            }
        }
        let f11 = PrimeField::new(11).unwrap();
        assert!(f49.embed_from(&f11, 5).is_err());
    }

    #[test]
    fn frobenius_fixes_the_field() {
        let f101 = PrimeField::new(101).unwrap();
        let fq = ExtField::generate(f101, 3, 1);
        let mut rng = ChaCha20Rng::seed_from_u64(9);
        for _ in 0..20 {
            let a = fq.sample(&mut rng);
            // a^(p^k) = a
            let mut x = a.clone();
            for _ in 0..3 {
                x = fq.frobenius(&x);
            }
            assert_eq!(x, a);
        }
    }

    #[test]
    fn degree_one_quotient_behaves_like_fp() {
        let f7 = f7();
        let ext = ExtField::new(f7, vec![3, 1]); // t + 3, so t = 4
        assert_eq!(ext.generator(), vec![4]);
        let a = ext.embed(5);
        let b = ext.embed(3);
        assert_eq!(ext.mul(&a, &b), ext.embed(1));
    }
}
