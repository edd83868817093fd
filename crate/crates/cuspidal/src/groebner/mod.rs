//! Buchberger Groebner-basis engine.
//!
//! Pairs are pruned with the product and chain criteria (Gebauer-Moeller
//! style update) and selected by sugar degree; reductions are full normal
//! forms, and the returned basis is the unique reduced basis for the ideal
//! and order. Desk-scale systems in at most four variables do not need
//! matrix methods, and the plain algorithm keeps every step auditable.

pub mod linalg;
pub mod solve;
pub mod univar;

use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Poly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("point extraction failed after {0} retries with fresh directions")]
    DegenerateCoordinates(usize),
    #[error("field too small: need more than {0} elements")]
    FieldTooSmall(usize),
}

/// A finitely generated ideal; generators nonzero over a common ring.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    gens: Vec<Poly<F>>,
    nvars: usize,
}

impl<F: Field> Ideal<F> {
    pub fn new(gens: Vec<Poly<F>>) -> Self {
        let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        assert!(!gens.is_empty(), "ideal needs at least one nonzero generator");
        let nvars = gens[0].nvars();
        assert!(gens.iter().all(|g| g.nvars() == nvars && g.field() == gens[0].field()));
        Ideal { gens, nvars }
    }

    pub fn gens(&self) -> &[Poly<F>] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> &F {
        self.gens[0].field()
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    /// Monic, interreduced, sorted by ascending leading monomial.
    basis: Vec<Poly<F>>,
    order: MonomialOrder,
    nvars: usize,
    field: F,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn basis(&self) -> &[Poly<F>] {
        &self.basis
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.leading().unwrap().0).collect()
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: usize,
}

/// Computes the reduced Groebner basis; deterministic for fixed input and
/// order. Termination is guaranteed by Dickson's lemma.
pub fn buchberger<F: Field>(ideal: &Ideal<F>, order: MonomialOrder) -> GroebnerBasis<F> {
    let field = ideal.field().clone();
    let nvars = ideal.nvars();
    let mut basis: Vec<Poly<F>> = vec![];
    let mut sugars: Vec<usize> = vec![];
    let mut alive: Vec<bool> = vec![];
    let mut pairs: Vec<Pair> = vec![];

    let mut queue: Vec<(Poly<F>, usize)> = ideal
        .gens
        .iter()
        .map(|g| {
            let g = g.reorder(order).monic();
            let s = g.degree().unwrap();
            (g, s)
        })
        .collect();
    // feed generators smallest-leading-term first for stabler runs
    queue.sort_by(|a, b| order.cmp(&a.0.leading().unwrap().0, &b.0.leading().unwrap().0, nvars));
    queue.reverse();

    loop {
        // insert any pending polynomial, updating the pair set
        if let Some((h, sh)) = queue.pop() {
            if h.is_zero() {
                continue;
            }
            update(&mut basis, &mut sugars, &mut alive, &mut pairs, h, sh);
            continue;
        }
        // select the pair with minimal (sugar, lcm, i, j)
        let Some(best) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm, nvars))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(idx, _)| idx)
        else {
            break;
        };
        let pair = pairs.swap_remove(best);
        let s = spoly(&basis[pair.i], &basis[pair.j], &pair.lcm, &field);
        let (red, _) = reduce_full(&s, &basis, &alive, &field, order, nvars);
        if !red.is_zero() {
            queue.push((red.monic(), pair.sugar));
        }
    }

    // interreduce to the canonical reduced basis
    let kept: Vec<Poly<F>> = minimalize(&basis, &alive, order, nvars);
    let mut reduced: Vec<Poly<F>> = vec![];
    for (i, g) in kept.iter().enumerate() {
        let others: Vec<Poly<F>> =
            kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
        let allv = vec![true; others.len()];
        let (nf, _) = reduce_full(g, &others, &allv, &field, order, nvars);
        if !nf.is_zero() {
            reduced.push(nf.monic());
        }
    }
    reduced.sort_by(|a, b| order.cmp(&a.leading().unwrap().0, &b.leading().unwrap().0, nvars));
    GroebnerBasis { basis: reduced, order, nvars, field }
}

/// S(f, g) for monic f, g with the given lcm of leading monomials.
fn spoly<F: Field>(f: &Poly<F>, g: &Poly<F>, lcm: &Monomial, field: &F) -> Poly<F> {
    let (lmf, cf) = f.leading().unwrap();
    let (lmg, cg) = g.leading().unwrap();
    debug_assert!(field.is_one(cf) && field.is_one(cg), "basis kept monic");
    let one = field.one();
    f.mul_term(&lmf.div_into(lcm), &one).sub(&g.mul_term(&lmg.div_into(lcm), &one))
}

/// Full normal form of f against the alive members of `basis`; also returns
/// whether any reduction step fired.
fn reduce_full<F: Field>(
    f: &Poly<F>,
    basis: &[Poly<F>],
    alive: &[bool],
    field: &F,
    order: MonomialOrder,
    nvars: usize,
) -> (Poly<F>, bool) {
    let mut work = f.clone();
    let mut remainder: Vec<(Monomial, F::Elem)> = vec![];
    let mut touched = false;
    'outer: while let Some((m, c)) = work.leading().cloned() {
        for (g, ok) in basis.iter().zip(alive) {
            if !ok {
                continue;
            }
            let (lm, _) = g.leading().unwrap();
            if lm.divides(&m) {
                work = work.sub_scaled(&c, &lm.div_into(&m), g);
                touched = true;
                continue 'outer;
            }
        }
        // leading term irreducible: move to remainder
        remainder.push((m, c));
        work = Poly::from_terms(
            field,
            nvars,
            order,
            work.terms().iter().skip(1).cloned().collect(),
        );
    }
    (Poly::from_terms(field, nvars, order, remainder), touched)
}

/// Gebauer-Moeller pair update on arrival of h.
fn update<F: Field>(
    basis: &mut Vec<Poly<F>>,
    sugars: &mut Vec<usize>,
    alive: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: Poly<F>,
    sugar_h: usize,
) {
    let lm_h = h.leading().unwrap().0;
    let t = basis.len();

    // candidate pairs with h
    let cand: Vec<(usize, Monomial)> = (0..t)
        .filter(|&i| alive[i])
        .map(|i| (i, basis[i].leading().unwrap().0.lcm(&lm_h)))
        .collect();

    // first GM criterion: drop (i,h) when another candidate's lcm properly
    // divides its lcm; among equal lcms keep the first
    let mut keep: Vec<bool> = vec![true; cand.len()];
    for a in 0..cand.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..cand.len() {
            if a == b || !keep[a] {
                continue;
            }
            if !keep[b] {
                continue;
            }
            if cand[b].1 != cand[a].1 && cand[b].1.divides(&cand[a].1) {
                keep[a] = false;
            }
        }
    }
    // among identical lcms keep one representative
    for a in 0..cand.len() {
        if !keep[a] {
            continue;
        }
        for b in (a + 1)..cand.len() {
            if keep[b] && cand[a].1 == cand[b].1 {
                keep[b] = false;
            }
        }
    }

    // chain criterion on the old pair set
    pairs.retain(|p| {
        let lcm_ih = basis[p.i].leading().unwrap().0.lcm(&lm_h);
        let lcm_jh = basis[p.j].leading().unwrap().0.lcm(&lm_h);
        !(lm_h.divides(&p.lcm) && lcm_ih != p.lcm && lcm_jh != p.lcm)
    });

    // product criterion, then emit surviving new pairs
    for (idx, (i, lcm)) in cand.into_iter().enumerate() {
        if !keep[idx] {
            continue;
        }
        let lm_i = basis[i].leading().unwrap().0;
        if lm_i.coprime(&lm_h) {
            continue;
        }
        let sugar = (sugars[i] + lcm.degree() - lm_i.degree())
            .max(sugar_h + lcm.degree() - lm_h.degree());
        pairs.push(Pair { i, j: t, lcm, sugar });
    }

    // retire basis members whose leading term h now divides
    for i in 0..t {
        if alive[i]
            && lm_h.divides(&basis[i].leading().unwrap().0)
            && lm_h != basis[i].leading().unwrap().0
        {
            alive[i] = false;
        }
    }

    basis.push(h);
    sugars.push(sugar_h);
    alive.push(true);
}

fn minimalize<F: Field>(
    basis: &[Poly<F>],
    alive: &[bool],
    order: MonomialOrder,
    nvars: usize,
) -> Vec<Poly<F>> {
    let mut idx: Vec<usize> = (0..basis.len()).filter(|&i| alive[i]).collect();
    idx.sort_by(|&a, &b| {
        order.cmp(&basis[a].leading().unwrap().0, &basis[b].leading().unwrap().0, nvars)
    });
    let mut kept: Vec<usize> = vec![];
    for &i in &idx {
        let lm = basis[i].leading().unwrap().0;
        if !kept.iter().any(|&k| basis[k].leading().unwrap().0.divides(&lm)) {
            kept.push(i);
        }
    }
    kept.into_iter().map(|i| basis[i].clone()).collect()
}

/// The unique remainder of f modulo the basis: no term of the result is
/// divisible by any leading term. Idempotent.
pub fn normal_form<F: Field>(f: &Poly<F>, gb: &GroebnerBasis<F>) -> Poly<F> {
    let f = f.reorder(gb.order);
    let alive = vec![true; gb.basis.len()];
    reduce_full(&f, &gb.basis, &alive, &gb.field, gb.order, gb.nvars).0
}

pub fn ideal_membership<F: Field>(f: &Poly<F>, gb: &GroebnerBasis<F>) -> bool {
    normal_form(f, gb).is_zero()
}

/// Buchberger's criterion as a post-hoc assertion: every S-polynomial of
/// basis pairs reduces to zero.
pub fn verify_buchberger<F: Field>(gb: &GroebnerBasis<F>) -> bool {
    let n = gb.basis.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let lcm = gb.basis[i].leading().unwrap().0.lcm(&gb.basis[j].leading().unwrap().0);
            let s = spoly(&gb.basis[i], &gb.basis[j], &lcm, &gb.field);
            if !normal_form(&s, gb).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Monomials outside the leading-term ideal, ascending; `None` when the
/// quotient is infinite-dimensional.
pub fn standard_monomials<F: Field>(gb: &GroebnerBasis<F>) -> Option<Vec<Monomial>> {
    if gb.is_unit_ideal() {
        return Some(vec![]);
    }
    let lms = gb.leading_monomials();
    let nvars = gb.nvars;
    // zero-dimensionality: every variable needs a pure power among the LMs
    let mut bounds = vec![0u16; nvars];
    for v in 0..nvars {
        let mut best: Option<u16> = None;
        for lm in &lms {
            if lm.e[v] > 0 && (0..nvars).all(|w| w == v || lm.e[w] == 0) {
                best = Some(best.map_or(lm.e[v], |b: u16| b.min(lm.e[v])));
            }
        }
        bounds[v] = best?;
    }
    let mut out = vec![];
    let mut e = [0u16; crate::poly::MAX_VARS];
    enumerate_box(&mut e, 0, nvars, &bounds, &lms, &mut out);
    out.sort_by(|a, b| gb.order.cmp(a, b, nvars));
    Some(out)
}

fn enumerate_box(
    e: &mut [u16; crate::poly::MAX_VARS],
    v: usize,
    nvars: usize,
    bounds: &[u16],
    lms: &[Monomial],
    out: &mut Vec<Monomial>,
) {
    if v == nvars {
        let m = Monomial { e: *e };
        if !lms.iter().any(|lm| lm.divides(&m)) {
            out.push(m);
        }
        return;
    }
    for k in 0..bounds[v] {
        e[v] = k;
        enumerate_box(e, v + 1, nvars, bounds, lms, out);
    }
    e[v] = 0;
}

/// Dimension of the quotient as a vector space; `None` means infinite.
pub fn quotient_dimension<F: Field>(gb: &GroebnerBasis<F>) -> Option<usize> {
    standard_monomials(gb).map(|v| v.len())
}

#[cfg(test)]
mod tests;
