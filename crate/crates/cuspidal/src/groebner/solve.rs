//! Zero-dimensional solving: eliminants, multiplicities, and point
//! extraction over the algebraic closure.
//!
//! The eliminant of a linear form u is the characteristic polynomial of
//! multiplication-by-u on the quotient algebra; its roots are the u-values
//! of the points, with multiplicity the local length. Coordinates come from
//! the shape-lemma presentation of the radical: with u generic, every
//! coordinate is a univariate polynomial in u modulo the squarefree
//! eliminant. When the shape hypothesis fails the direction is redrawn, at
//! most eight times.

use super::linalg::Matrix;
use super::univar::{charpoly, UniPoly};
use super::{buchberger, normal_form, standard_monomials, GroebnerBasis, GroebnerError, Ideal};
use crate::field::{ExtElem, ExtField, Field, FiniteField, PrimeField};
use crate::poly::{Monomial, MonomialOrder, Poly};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use std::collections::HashMap;

pub const MAX_DIRECTION_RETRIES: usize = 8;

/// A geometric point of a zero-dimensional scheme, over the minimal
/// extension containing its coordinates.
#[derive(Clone, Debug)]
pub struct PointWithMultiplicity {
    pub field: ExtField,
    pub coords: Vec<ExtElem>,
    /// Local length of the scheme at this point.
    pub multiplicity: usize,
}

impl PointWithMultiplicity {
    pub fn ext_degree(&self) -> usize {
        self.field.degree()
    }

    /// Coordinates as base-field scalars when the point is rational.
    pub fn rational_coords(&self) -> Option<Vec<u64>> {
        self.coords.iter().map(|c| self.field.to_prime(c)).collect()
    }
}

/// Multiplication-by-g matrix on the quotient basis of standard monomials.
fn mult_matrix(
    gb: &GroebnerBasis<PrimeField>,
    std_mons: &[Monomial],
    index: &HashMap<Monomial, usize>,
    g: &Poly<PrimeField>,
) -> Matrix<PrimeField> {
    let f = *gb.field();
    let n = std_mons.len();
    let mut m = Matrix::zero(&f, n, n);
    for (j, mon) in std_mons.iter().enumerate() {
        let prod = g.mul_term(mon, &f.one());
        let nf = normal_form(&prod, gb);
        for (mm, c) in nf.terms() {
            let i = *index.get(mm).expect("normal form lies in the standard basis");
            m.set(i, j, *c);
        }
    }
    m
}

fn coords_of(
    nf: &Poly<PrimeField>,
    index: &HashMap<Monomial, usize>,
    n: usize,
) -> Vec<u64> {
    let mut v = vec![0u64; n];
    for (m, c) in nf.terms() {
        v[*index.get(m).expect("normal form lies in the standard basis")] = *c;
    }
    v
}

fn univar_in_var(up: &UniPoly<PrimeField>, var: usize, nvars: usize) -> Poly<PrimeField> {
    let f = up.field;
    let terms = up
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(e, c)| {
            let mut m = Monomial::one();
            m.e[var] = e as u16;
            (m, *c)
        })
        .collect();
    Poly::from_terms(&f, nvars, MonomialOrder::GrevLex, terms)
}

fn eval_univar_ext(up: &UniPoly<PrimeField>, ext: &ExtField, x: &ExtElem) -> ExtElem {
    let mut acc = ext.zero();
    for c in up.coeffs.iter().rev() {
        acc = ext.mul(&acc, x);
        acc = ext.add(&acc, &ext.embed(*c));
    }
    acc
}

/// The eliminant of a linear form on a zero-dimensional ideal: the monic
/// degree-D polynomial whose roots are the values of the form on the
/// variety, with multiplicities the local lengths, summing to the quotient
/// dimension D.
pub fn eliminate_to_univariate(
    ideal: &Ideal<PrimeField>,
    direction: &Poly<PrimeField>,
) -> Result<UniPoly<PrimeField>, GroebnerError> {
    let gb = buchberger(ideal, MonomialOrder::GrevLex);
    let std_mons = standard_monomials(&gb).ok_or(GroebnerError::NotZeroDimensional)?;
    eliminant_on(&gb, &std_mons, direction)
}

fn eliminant_on(
    gb: &GroebnerBasis<PrimeField>,
    std_mons: &[Monomial],
    direction: &Poly<PrimeField>,
) -> Result<UniPoly<PrimeField>, GroebnerError> {
    let f = *gb.field();
    if std_mons.len() as u64 >= f.p() {
        return Err(GroebnerError::FieldTooSmall(std_mons.len()));
    }
    if std_mons.is_empty() {
        return Ok(UniPoly::constant(&f, 1));
    }
    let index: HashMap<Monomial, usize> =
        std_mons.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let m = mult_matrix(gb, std_mons, &index, &direction.reorder(gb.order()));
    Ok(charpoly(&m))
}

/// All geometric points of a zero-dimensional ideal over `F_p`, with local
/// multiplicities. Deterministic for a fixed seed.
pub fn solve_points(
    ideal: &Ideal<PrimeField>,
    seed: u64,
) -> Result<Vec<PointWithMultiplicity>, GroebnerError> {
    let order = MonomialOrder::GrevLex;
    let fp = *ideal.field();
    let nvars = ideal.nvars();
    let gb = buchberger(ideal, order);
    let std_mons = standard_monomials(&gb).ok_or(GroebnerError::NotZeroDimensional)?;
    let dim = std_mons.len();
    if dim == 0 {
        return Ok(vec![]);
    }
    if dim as u64 >= fp.p() {
        return Err(GroebnerError::FieldTooSmall(dim));
    }
    // radical: adjoin the squarefree part of each coordinate eliminant
    let mut rad_gens = ideal.gens().to_vec();
    for var in 0..nvars {
        let chi_v = eliminant_on(&gb, &std_mons, &Poly::variable(&fp, nvars, var))?;
        rad_gens.push(univar_in_var(&chi_v.squarefree_part(), var, nvars));
    }
    let rad_gb = buchberger(&Ideal::new(rad_gens), order);
    let rad_mons = standard_monomials(&rad_gb).expect("radical of zero-dimensional is again so");
    let m = rad_mons.len();
    debug_assert!(m >= 1 && m <= dim);
    let rad_index: HashMap<Monomial, usize> =
        rad_mons.iter().enumerate().map(|(i, mm)| (*mm, i)).collect();

    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ DIRECTION_SALT);
    let mut last_err = GroebnerError::DegenerateCoordinates(MAX_DIRECTION_RETRIES);
    'retry: for _ in 0..MAX_DIRECTION_RETRIES {
        // fresh generic direction
        let u_coeffs: Vec<u64> = (0..nvars).map(|_| fp.sample(&mut rng)).collect();
        if u_coeffs.iter().all(|c| *c == 0) {
            continue;
        }
        let u = Poly::from_terms(
            &fp,
            nvars,
            order,
            u_coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(i), *c)).collect(),
        );

        // multiplicity carrier: char poly of u on R/I
        let chi = eliminant_on(&gb, &std_mons, &u)?;

        // powers of u in R/rad give the shape-lemma system
        let mut w = Matrix::zero(&fp, m, m);
        let mut pw = Poly::constant(&fp, nvars, 1).reorder(order);
        let mut pw_nf = normal_form(&pw, &rad_gb);
        for j in 0..m {
            for (i, c) in coords_of(&pw_nf, &rad_index, m).into_iter().enumerate() {
                w.set(i, j, c);
            }
            pw = pw_nf.mul(&u);
            pw_nf = normal_form(&pw, &rad_gb);
        }
        // final power u^m for the minimal polynomial
        let um_coords = coords_of(&pw_nf, &rad_index, m);
        let Some(min_coeffs) = w.solve(&um_coords) else {
            continue; // u does not generate: shape hypothesis fails
        };
        // chi_tilde = t^m - sum c_j t^j must be the squarefree part of chi
        let mut ct = min_coeffs.iter().map(|c| fp.neg(c)).collect::<Vec<_>>();
        ct.push(1);
        let chi_tilde = UniPoly::new(&fp, ct);
        if chi_tilde != chi.squarefree_part() {
            continue;
        }

        // coordinate shapes g_i with v_i = g_i(u) on the variety
        let mut shapes: Vec<UniPoly<PrimeField>> = vec![];
        for var in 0..nvars {
            let nf = normal_form(&Poly::variable(&fp, nvars, var), &rad_gb);
            let rhs = coords_of(&nf, &rad_index, m);
            let Some(sol) = w.solve(&rhs) else {
                continue 'retry;
            };
            shapes.push(UniPoly::new(&fp, sol));
        }

        // split chi over F_p and lift each factor to its extension field
        let mut factor_rng = ChaCha20Rng::seed_from_u64(seed ^ FACTOR_SALT);
        let factors = chi.factor(&mut factor_rng);
        let mut points = vec![];
        let mut total = 0usize;
        for (irr, mult) in &factors {
            let k = irr.degree().unwrap();
            total += k * mult;
            let ext = ExtField::new(fp, irr.coeffs.clone());
            let mut root = ext.generator();
            for _ in 0..k {
                let coords: Vec<ExtElem> =
                    shapes.iter().map(|g| eval_univar_ext(g, &ext, &root)).collect();
                // u(P) must reproduce the root
                let mut uval = ext.zero();
                for (i, c) in u_coeffs.iter().enumerate() {
                    uval = ext.add(&uval, &ext.mul(&ext.embed(*c), &coords[i]));
                }
                if uval != root {
                    continue 'retry;
                }
                // every generator vanishes at the point
                for g in ideal.gens() {
                    let gv = g.embed_ext(&ext).evaluate(&coords);
                    if !ext.is_zero(&gv) {
                        last_err = GroebnerError::DegenerateCoordinates(MAX_DIRECTION_RETRIES);
                        continue 'retry;
                    }
                }
                points.push(PointWithMultiplicity {
                    field: ext.clone(),
                    coords,
                    multiplicity: *mult,
                });
                root = ext.frobenius(&root);
            }
        }
        if total != dim {
            continue;
        }
        debug_assert_eq!(points.len(), m);
        return Ok(points);
    }
    Err(last_err)
}

const DIRECTION_SALT: u64 = 0x9e37_79b9_7f4a_7c15;
const FACTOR_SALT: u64 = 0x00fa_c702_517e_ed00;
