//! Sparse multivariate polynomials in up to four variables.
//!
//! Projective forms live in x0..x3, affine ones in x,y,z; nothing here is
//! generic over arity beyond that. Terms are kept strictly sorted under the
//! polynomial's monomial order with no zero coefficients, so equality is
//! plain structural equality.

mod grammar;

pub use grammar::{format_poly, parse_poly};

use crate::field::{ExtField, Field, PrimeField};
use rand::Rng;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

pub const MAX_VARS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials live over different fields or variable counts")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("projective and affine variables mixed in one polynomial")]
    MixedVariables,
    #[error("point does not lie in the requested chart")]
    PointNotInChart,
}

/// Exponent vector; unused trailing entries stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub e: [u16; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { e: [0; MAX_VARS] }
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Monomial { e }
    }

    pub fn degree(&self) -> usize {
        self.e.iter().map(|&x| x as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.e.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = self.e[i] + other.e[i];
        }
        Monomial { e }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.e.iter().zip(&other.e).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut e = [0; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = other.e[i] - self.e[i];
        }
        Monomial { e }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = [0; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = self.e[i].max(other.e[i]);
        }
        Monomial { e }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.e.iter().zip(&other.e).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u16) -> Monomial {
        let mut e = [0; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = self.e[i] * k;
        }
        Monomial { e }
    }
}

/// Total orders on monomials. Graded orders refine total degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    GrevLex,
    GrLex,
    Lex,
    /// Eliminates the variables below the split index: monomials are first
    /// compared grevlex on the leading block, then on the rest.
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex(&a.e[..nvars], &b.e[..nvars]),
            MonomialOrder::Lex => lex(&a.e[..nvars], &b.e[..nvars]),
            MonomialOrder::GrLex => {
                let (da, db): (usize, usize) = (a.degree(), b.degree());
                da.cmp(&db).then_with(|| lex(&a.e[..nvars], &b.e[..nvars]))
            }
            MonomialOrder::Block(s) => {
                let s = (*s).min(nvars);
                grevlex(&a.e[..s], &b.e[..s])
                    .then_with(|| grevlex(&a.e[s..nvars], &b.e[s..nvars]))
            }
        }
    }
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: usize = a.iter().map(|&x| x as usize).sum();
    let db: usize = b.iter().map(|&x| x as usize).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            match x.cmp(y) {
                Ordering::Equal => {}
                // smaller exponent in the last differing place wins
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    })
}

/// All monomials of exact total degree d in nvars variables, descending
/// under the given order. This fixed enumeration is also the coefficient
/// drawing order of [`Poly::random_homogeneous`].
pub fn monomials_of_degree(nvars: usize, d: usize, order: MonomialOrder) -> Vec<Monomial> {
    let mut out = vec![];
    let mut e = [0u16; MAX_VARS];
    fn rec(out: &mut Vec<Monomial>, e: &mut [u16; MAX_VARS], var: usize, nvars: usize, left: usize) {
        if var == nvars - 1 {
            e[var] = left as u16;
            out.push(Monomial { e: *e });
            e[var] = 0;
            return;
        }
        for take in 0..=left {
            e[var] = take as u16;
            rec(out, e, var + 1, nvars, left - take);
        }
        e[var] = 0;
    }
    rec(&mut out, &mut e, 0, nvars, d);
    out.sort_by(|a, b| order.cmp(b, a, nvars));
    out
}

/// A sparse polynomial over the field context `F`.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
    /// Strictly descending in `order`, no zero coefficients.
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Poly<F> {
    pub fn zero(field: &F, nvars: usize) -> Self {
        Poly { field: field.clone(), nvars, order: MonomialOrder::GrevLex, terms: vec![] }
    }

    pub fn constant(field: &F, nvars: usize, c: F::Elem) -> Self {
        Poly::from_terms(field, nvars, MonomialOrder::GrevLex, vec![(Monomial::one(), c)])
    }

    pub fn variable(field: &F, nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        Poly::from_terms(field, nvars, MonomialOrder::GrevLex, vec![(Monomial::var(i), field.one())])
    }

    pub fn from_terms(
        field: &F,
        nvars: usize,
        order: MonomialOrder,
        terms: Vec<(Monomial, F::Elem)>,
    ) -> Self {
        let mut map: HashMap<Monomial, F::Elem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert!(m.e[nvars..].iter().all(|&x| x == 0));
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut o) => {
                    let s = field.add(o.get(), &c);
                    *o.get_mut() = s;
                }
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
            }
        }
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0, nvars));
        let p = Poly { field: field.clone(), nvars, order, terms };
        p.debug_check();
        p
    }

    fn debug_check(&self) {
        debug_assert!(
            self.terms.windows(2).all(|w| self.order.cmp(&w[0].0, &w[1].0, self.nvars) == Ordering::Greater),
            "terms not strictly descending"
        );
        debug_assert!(self.terms.iter().all(|(_, c)| !self.field.is_zero(c)), "zero coefficient kept");
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Some(d) when nonzero and all terms share total degree d.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.degree()?;
        if self.terms.iter().all(|(m, _)| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(mm, _)| mm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn reorder(&self, order: MonomialOrder) -> Poly<F> {
        if order == self.order {
            return self.clone();
        }
        Poly::from_terms(&self.field, self.nvars, order, self.terms.clone())
    }

    fn compatible(&self, other: &Poly<F>) -> Result<(), PolyError> {
        if self.field != other.field || self.nvars != other.nvars || self.order != other.order {
            return Err(PolyError::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly<F>) -> Poly<F> {
        self.compatible(other).expect("incompatible polynomials");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.order.cmp(&self.terms[i].0, &other.terms[j].0, self.nvars) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(&self.terms[i].1, &other.terms[j].1);
                    if !self.field.is_zero(&c) {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        let p = Poly { field: self.field.clone(), nvars: self.nvars, order: self.order, terms: out };
        p.debug_check();
        p
    }

    pub fn neg(&self) -> Poly<F> {
        let terms = self.terms.iter().map(|(m, c)| (*m, self.field.neg(c))).collect();
        Poly { field: self.field.clone(), nvars: self.nvars, order: self.order, terms }
    }

    pub fn sub(&self, other: &Poly<F>) -> Poly<F> {
        self.add(&other.neg())
    }

    /// c * m * self.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero(&self.field, self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| (mm.mul(m), self.field.mul(cc, c)))
            .collect();
        let p = Poly { field: self.field.clone(), nvars: self.nvars, order: self.order, terms };
        p.debug_check();
        p
    }

    /// self - c * m * other, the inner step of every reduction.
    pub fn sub_scaled(&self, c: &F::Elem, m: &Monomial, other: &Poly<F>) -> Poly<F> {
        let scaled: Vec<_> = other
            .terms
            .iter()
            .map(|(mm, cc)| (mm.mul(m), self.field.neg(&self.field.mul(cc, c))))
            .collect();
        let rhs = Poly { field: self.field.clone(), nvars: self.nvars, order: self.order, terms: scaled };
        rhs.debug_check();
        self.add(&rhs)
    }

    pub fn mul_scalar(&self, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero(&self.field, self.nvars);
        }
        let terms = self.terms.iter().map(|(m, cc)| (*m, self.field.mul(cc, c))).collect();
        Poly { field: self.field.clone(), nvars: self.nvars, order: self.order, terms }
    }

    pub fn monic(&self) -> Poly<F> {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("leading coefficient nonzero");
                self.mul_scalar(&inv)
            }
        }
    }

    pub fn mul(&self, other: &Poly<F>) -> Poly<F> {
        self.compatible(other).expect("incompatible polynomials");
        let mut map: HashMap<Monomial, F::Elem> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = self.field.mul(ca, cb);
                match map.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        let s = self.field.add(o.get(), &c);
                        *o.get_mut() = s;
                    }
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !self.field.is_zero(c)).collect();
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0, self.nvars));
        let p = Poly { field: self.field.clone(), nvars: self.nvars, order: self.order, terms };
        p.debug_check();
        p
    }

    pub fn pow(&self, k: usize) -> Poly<F> {
        let mut acc = Poly::constant(&self.field, self.nvars, self.field.one());
        acc.order = self.order;
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division: `Some(q)` with `self = q * divisor` when the division
    /// leaves no remainder, `None` otherwise. Failure is an answer here, not
    /// an error: the certification path uses it as a divisibility test.
    pub fn exact_div(&self, divisor: &Poly<F>) -> Result<Option<Poly<F>>, PolyError> {
        self.compatible(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZeroPoly);
        }
        let (lm, lc) = divisor.leading().unwrap();
        let lc_inv = self.field.inv(lc).expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut q_terms = vec![];
        while let Some((m, c)) = rem.leading().cloned() {
            if !lm.divides(&m) {
                return Ok(None);
            }
            let qm = lm.div_into(&m);
            let qc = self.field.mul(&c, &lc_inv);
            rem = rem.sub_scaled(&qc, &qm, divisor);
            q_terms.push((qm, qc));
        }
        Ok(Some(Poly::from_terms(&self.field, self.nvars, self.order, q_terms)))
    }

    pub fn derivative(&self, var: usize) -> Poly<F> {
        assert!(var < self.nvars);
        let mut terms = vec![];
        for (m, c) in &self.terms {
            if m.e[var] == 0 {
                continue;
            }
            let k = self.field.from_i64(m.e[var] as i64);
            let c = self.field.mul(c, &k);
            if self.field.is_zero(&c) {
                continue;
            }
            let mut e = m.e;
            e[var] -= 1;
            terms.push((Monomial { e }, c));
        }
        Poly::from_terms(&self.field, self.nvars, self.order, terms)
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars, "point arity mismatch");
        let maxdeg = self.degree().unwrap_or(0);
        // powers[i][k] = point[i]^k
        let powers: Vec<Vec<F::Elem>> = point
            .iter()
            .map(|x| {
                let mut v = vec![self.field.one()];
                for k in 1..=maxdeg {
                    v.push(self.field.mul(&v[k - 1], x));
                }
                v
            })
            .collect();
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..self.nvars {
                if m.e[i] > 0 {
                    t = self.field.mul(&t, &powers[i][m.e[i] as usize]);
                }
            }
            acc = self.field.add(&acc, &t);
        }
        acc
    }

    /// Substitutes each variable by the given polynomial. All images must
    /// live in one common ring, which becomes the ring of the result.
    pub fn substitute(&self, images: &[Poly<F>]) -> Poly<F> {
        assert_eq!(images.len(), self.nvars);
        let target = &images[0];
        // power tables per variable
        let max_e: Vec<u16> = (0..self.nvars)
            .map(|i| self.terms.iter().map(|(m, _)| m.e[i]).max().unwrap_or(0))
            .collect();
        let pow_tables: Vec<Vec<Poly<F>>> = images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                let mut v = vec![Poly::constant(&target.field, target.nvars, target.field.one())
                    .reorder(target.order)];
                for k in 1..=max_e[i] as usize {
                    let next = v[k - 1].mul(img);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Poly::zero(&target.field, target.nvars).reorder(target.order);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target.field, target.nvars, c.clone()).reorder(target.order);
            for i in 0..self.nvars {
                if m.e[i] > 0 {
                    t = t.mul(&pow_tables[i][m.e[i] as usize]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Linear coordinate change x_i -> sum_j mat[i][j] * x_j.
    pub fn substitute_linear(&self, mat: &[Vec<F::Elem>]) -> Poly<F> {
        assert_eq!(mat.len(), self.nvars);
        let images: Vec<Poly<F>> = mat
            .iter()
            .map(|row| {
                assert_eq!(row.len(), self.nvars);
                Poly::from_terms(
                    &self.field,
                    self.nvars,
                    self.order,
                    row.iter().enumerate().map(|(j, c)| (Monomial::var(j), c.clone())).collect(),
                )
            })
            .collect();
        self.substitute(&images)
    }

    /// Translation x_i -> x_i + a_i.
    pub fn shift(&self, point: &[F::Elem]) -> Poly<F> {
        assert_eq!(point.len(), self.nvars);
        let images: Vec<Poly<F>> = point
            .iter()
            .enumerate()
            .map(|(i, a)| {
                Poly::from_terms(
                    &self.field,
                    self.nvars,
                    self.order,
                    vec![(Monomial::var(i), self.field.one()), (Monomial::one(), a.clone())],
                )
            })
            .collect();
        self.substitute(&images)
    }

    /// Sets x_chart = 1 in a projective form and renumbers the remaining
    /// variables in ascending order, yielding a 3-variable affine polynomial.
    pub fn dehomogenize(&self, chart: usize) -> Poly<F> {
        assert_eq!(self.nvars, 4);
        assert!(chart < 4);
        let mut terms = vec![];
        for (m, c) in &self.terms {
            let mut e = [0u16; MAX_VARS];
            let mut k = 0;
            for j in 0..4 {
                if j == chart {
                    continue;
                }
                e[k] = m.e[j];
                k += 1;
            }
            terms.push((Monomial { e }, c.clone()));
        }
        Poly::from_terms(&self.field, 3, self.order, terms)
    }

    /// The sum of the terms of minimal total degree.
    pub fn lowest_degree_part(&self) -> Poly<F> {
        match self.terms.iter().map(|(m, _)| m.degree()).min() {
            None => self.clone(),
            Some(d) => {
                let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
                Poly { field: self.field.clone(), nvars: self.nvars, order: self.order, terms }
            }
        }
    }

    /// Draws all C(degree + nvars - 1, nvars - 1) coefficients i.i.d.
    /// uniformly from the field, in the fixed enumeration order of
    /// [`monomials_of_degree`]; equal (field, degree, rng state) reproduce
    /// the same polynomial.
    pub fn random_homogeneous<R: Rng + ?Sized>(
        field: &F,
        nvars: usize,
        degree: usize,
        rng: &mut R,
    ) -> Poly<F> {
        let monos = monomials_of_degree(nvars, degree, MonomialOrder::GrevLex);
        let terms = monos.into_iter().map(|m| (m, field.sample(rng))).collect();
        Poly::from_terms(field, nvars, MonomialOrder::GrevLex, terms)
    }

    /// Maps coefficients through `f` into another field.
    pub fn map_coeffs<G: Field>(&self, target: &G, f: impl Fn(&F::Elem) -> G::Elem) -> Poly<G> {
        let terms = self.terms.iter().map(|(m, c)| (*m, f(c))).collect();
        Poly::from_terms(target, self.nvars, self.order, terms)
    }
}

impl Poly<PrimeField> {
    /// Coefficient-wise embedding into an extension of the same
    /// characteristic.
    pub fn embed_ext(&self, target: &ExtField) -> Poly<ExtField> {
        assert_eq!(self.field().p(), target.base().p(), "characteristic mismatch");
        self.map_coeffs(target, |c| target.embed(*c))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}

#[cfg(test)]
mod tests;
