//! Singular loci of projective surfaces: exact point enumeration over the
//! algebraic closure, local invariants, and A-series classification.
//!
//! Projective space is covered by the four disjoint cells
//! `U_c = {x_0 = ... = x_{c-1} = 0, x_c = 1}`, so every singular point is
//! enumerated exactly once. Enumeration uses the cell-constrained Jacobian
//! ideal; the local invariants at each point come from the full affine
//! localization, which is what carries the honest local length.

use crate::field::{ExtElem, ExtField, Field, PrimeField};
use crate::groebner::solve::{solve_points, PointWithMultiplicity};
use crate::groebner::{buchberger, quotient_dimension, GroebnerError, Ideal};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Poly};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SingularError {
    #[error("input must be homogeneous of degree >= 2")]
    NotHomogeneous,
    #[error("singular locus is positive-dimensional (chart {0})")]
    PositiveDimensionalSingularLocus(usize),
    #[error("point is not singular on the surface")]
    NotSingular,
    #[error("local length failed to stabilize")]
    UnstableLocalLength,
    #[error(transparent)]
    Solve(#[from] GroebnerError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    A1,
    A2,
    /// A-series aggregate: tjurina = k, corank 1, not subclassified.
    Ak(usize),
    /// Corank >= 2 or an inconsistent invariant pair.
    NonAde,
}

impl Classification {
    pub fn label(&self) -> String {
        match self {
            Classification::A1 => "A1".into(),
            Classification::A2 => "A2".into(),
            Classification::Ak(k) => format!("A{k}"),
            Classification::NonAde => "non-ADE/unknown".into(),
        }
    }
}

/// `A1 <=> tau = 1`; `A2 <=> tau = 2 and corank 1`; higher tau with corank 1
/// aggregates as `A_tau`; corank >= 2 cannot be a cusp.
pub fn classify(tjurina: usize, hessian_corank: usize) -> Classification {
    match (tjurina, hessian_corank) {
        (1, 0) => Classification::A1,
        (2, 1) => Classification::A2,
        (k, 1) if k >= 3 => Classification::Ak(k),
        _ => Classification::NonAde,
    }
}

/// One singular point, held in its unique cell.
#[derive(Debug, Clone)]
pub struct SingularPoint {
    pub chart: usize,
    pub field: ExtField,
    /// Affine coordinates in the chart, ordered by [`chart_vars`].
    pub coords: Vec<ExtElem>,
    /// Local length of the cell ideal at this point (the solver's view).
    pub cell_multiplicity: usize,
    pub tjurina: usize,
    pub hessian_corank: usize,
    pub classification: Classification,
}

impl SingularPoint {
    /// Projective coordinates with x_chart = 1.
    pub fn projective(&self) -> [ExtElem; 4] {
        let one = self.field.one();
        let mut out = [
            self.field.zero(),
            self.field.zero(),
            self.field.zero(),
            self.field.zero(),
        ];
        out[self.chart] = one;
        for (slot, v) in chart_vars(self.chart).into_iter().zip(&self.coords) {
            out[slot] = v.clone();
        }
        out
    }

    pub fn is_rational(&self) -> bool {
        self.field.degree() == 1
    }
}

#[derive(Debug, Clone)]
pub struct SingularScheme {
    pub points: Vec<SingularPoint>,
    /// Sum of Tjurina numbers over all points.
    pub total_length: usize,
    /// Quotient dimension of each cell-constrained Jacobian ideal.
    pub cell_quotient_dims: [usize; 4],
}

impl SingularScheme {
    pub fn all_a2(&self) -> bool {
        self.points.iter().all(|p| p.classification == Classification::A2)
    }

    pub fn count(&self) -> usize {
        self.points.len()
    }
}

/// Affine variable indices of the chart `x_c = 1`, ascending.
pub fn chart_vars(c: usize) -> [usize; 3] {
    let mut out = [0; 3];
    let mut k = 0;
    for j in 0..4 {
        if j != c {
            out[k] = j;
            k += 1;
        }
    }
    out
}

/// The cell-constrained Jacobian ideal of chart c: the four dehomogenized
/// partials plus the cell constraints `x_j = 0 (j < c)`. By the Euler
/// relation the dehomogenized equation itself is implied whenever the
/// characteristic does not divide the degree; otherwise it is appended.
pub fn jacobian_ideal_chart(phi: &Poly<PrimeField>, chart: usize) -> Ideal<PrimeField> {
    let mut gens = jacobian_gens_affine(phi, chart);
    for (pos, j) in chart_vars(chart).into_iter().enumerate() {
        if j < chart {
            gens.push(Poly::variable(phi.field(), 3, pos));
        }
    }
    Ideal::new(gens)
}

/// The full-chart Jacobian ideal (no cell constraints); this is the ideal
/// whose local lengths are the Tjurina numbers.
pub fn jacobian_ideal_affine(phi: &Poly<PrimeField>, chart: usize) -> Ideal<PrimeField> {
    Ideal::new(jacobian_gens_affine(phi, chart))
}

fn jacobian_gens_affine(phi: &Poly<PrimeField>, chart: usize) -> Vec<Poly<PrimeField>> {
    let d = phi.homogeneous_degree().expect("homogeneous input");
    assert!(d >= 2);
    let f = phi.field();
    let mut gens: Vec<_> =
        (0..4).map(|i| phi.derivative(i).dehomogenize(chart)).filter(|g| !g.is_zero()).collect();
    if (d as u64) % f.p() == 0 {
        gens.push(phi.dehomogenize(chart));
    }
    gens
}

/// Dehomogenizes to the chart of the given projective point and translates
/// that point to the origin. The point must have x_chart = 1.
pub fn localize<F: Field>(phi: &Poly<F>, chart: usize, affine: &[F::Elem]) -> Poly<F> {
    assert_eq!(phi.nvars(), 4);
    assert_eq!(affine.len(), 3);
    phi.dehomogenize(chart).shift(affine)
}

/// Normalizes a projective point to its unique cell: the first nonzero
/// coordinate is scaled to 1 and must be preceded only by zeros.
pub fn normalize_to_cell<F: Field>(
    field: &F,
    point: &[F::Elem; 4],
) -> Result<(usize, Vec<F::Elem>), crate::poly::PolyError> {
    let c = (0..4)
        .find(|&i| !field.is_zero(&point[i]))
        .ok_or(crate::poly::PolyError::PointNotInChart)?;
    let inv = field.inv(&point[c]).expect("nonzero coordinate");
    Ok((c, chart_vars(c).into_iter().map(|j| field.mul(&point[j], &inv)).collect()))
}

/// Tjurina number and Hessian corank of an affine local equation singular
/// at the origin.
///
/// The Tjurina number is the local length at the origin of
/// `(f, df)`, computed as the stabilized dimension of the quotient by
/// `(f, df) + m^N`; stabilization of consecutive values is exact by
/// Nakayama. The corank is 3 minus the rank of the Hessian at the origin.
pub fn local_invariants<F: Field>(f_loc: &Poly<F>) -> Result<(usize, usize), SingularError> {
    let field = f_loc.field().clone();
    if f_loc.is_zero() || !field.is_zero(&f_loc.evaluate(&vec![field.zero(); 3])) {
        return Err(SingularError::NotSingular);
    }
    let mut gens = vec![f_loc.clone()];
    for v in 0..3 {
        gens.push(f_loc.derivative(v));
    }
    // smooth point: some partial has a nonzero constant term
    if gens[1..]
        .iter()
        .any(|g| !field.is_zero(&g.evaluate(&vec![field.zero(); 3])))
    {
        return Err(SingularError::NotSingular);
    }
    let tjurina = stabilized_local_dim(&gens)?;
    // Hessian from the quadratic part: H_ij = d2f/dvi dvj at 0
    let two = field.from_i64(2);
    let mut h = crate::groebner::linalg::Matrix::zero(&field, 3, 3);
    for i in 0..3 {
        for j in 0..3 {
            let mut m = Monomial::one();
            m.e[i] += 1;
            m.e[j] += 1;
            let c = f_loc.coeff(&m);
            let v = if i == j { field.mul(&two, &c) } else { c };
            h.set(i, j, v);
        }
    }
    let corank = 3 - h.rank();
    Ok((tjurina, corank))
}

const MAX_JET_ORDER: usize = 48;

fn stabilized_local_dim<F: Field>(gens: &[Poly<F>]) -> Result<usize, SingularError> {
    let mut prev = None;
    for n in 1..=MAX_JET_ORDER {
        let d = local_dim_truncated(gens, n);
        if prev == Some(d) {
            return Ok(d);
        }
        prev = Some(d);
    }
    Err(SingularError::UnstableLocalLength)
}

/// dim of R / (gens + m^N): generators are truncated below degree N and the
/// degree-N monomials are adjoined, which generates the same ideal.
fn local_dim_truncated<F: Field>(gens: &[Poly<F>], n: usize) -> usize {
    let field = gens[0].field();
    let nvars = gens[0].nvars();
    let order = MonomialOrder::GrevLex;
    let mut all: Vec<Poly<F>> = vec![];
    for g in gens {
        let truncated = Poly::from_terms(
            field,
            nvars,
            order,
            g.terms().iter().filter(|(m, _)| m.degree() < n).cloned().collect(),
        );
        if !truncated.is_zero() {
            all.push(truncated);
        }
    }
    for m in monomials_of_degree(nvars, n, order) {
        all.push(Poly::from_terms(field, nvars, order, vec![(m, field.one())]));
    }
    let gb = buchberger(&Ideal::new(all), order);
    quotient_dimension(&gb).expect("truncated ideal is zero-dimensional")
}

/// Semi-quasi-homogeneity test: true when the principal part of the local
/// equation under the given positive weights has an isolated critical point
/// at the origin (zero-dimensional Jacobian ideal).
pub fn sqh_check<F: Field>(f_loc: &Poly<F>, weights: [(i64, i64); 3]) -> bool {
    assert!(weights.iter().all(|(n, d)| *n > 0 && *d > 0), "weights must be positive");
    if f_loc.is_zero() {
        return false;
    }
    let lcm = weights.iter().fold(1i64, |acc, (_, d)| num_integer::lcm(acc, *d));
    let w: Vec<i64> = weights.iter().map(|(n, d)| n * (lcm / d)).collect();
    let wdeg = |m: &Monomial| -> i64 { (0..3).map(|i| m.e[i] as i64 * w[i]).sum() };
    let min = f_loc.terms().iter().map(|(m, _)| wdeg(m)).min().unwrap();
    let field = f_loc.field();
    let pp = Poly::from_terms(
        field,
        3,
        f_loc.order(),
        f_loc.terms().iter().filter(|(m, _)| wdeg(m) == min).cloned().collect(),
    );
    let partials: Vec<_> = (0..3).map(|v| pp.derivative(v)).filter(|g| !g.is_zero()).collect();
    if partials.is_empty() {
        return false;
    }
    let gb = buchberger(&Ideal::new(partials), MonomialOrder::GrevLex);
    quotient_dimension(&gb).is_some()
}

/// Enumerates and classifies all singular points of a homogeneous surface
/// equation over `F_p`. Chart computations are independent; results merge
/// by chart index, then by the solver's deterministic point order.
pub fn find_singular_points(
    phi: &Poly<PrimeField>,
    seed: u64,
) -> Result<SingularScheme, SingularError> {
    let Some(d) = phi.homogeneous_degree() else {
        return Err(SingularError::NotHomogeneous);
    };
    if d < 2 {
        return Err(SingularError::NotHomogeneous);
    }
    let mut points = vec![];
    let mut cell_dims = [0usize; 4];
    for chart in 0..4 {
        let cell = jacobian_ideal_chart(phi, chart);
        let gb = buchberger(&cell, MonomialOrder::GrevLex);
        let Some(dim) = quotient_dimension(&gb) else {
            return Err(SingularError::PositiveDimensionalSingularLocus(chart));
        };
        cell_dims[chart] = dim;
        if dim == 0 {
            continue;
        }
        let solved = solve_points(&cell, seed.wrapping_add(chart as u64))?;
        for pt in solved {
            points.push(classify_point(phi, chart, pt)?);
        }
    }
    let total_length = points.iter().map(|p| p.tjurina).sum();
    Ok(SingularScheme { points, total_length, cell_quotient_dims: cell_dims })
}

fn classify_point(
    phi: &Poly<PrimeField>,
    chart: usize,
    pt: PointWithMultiplicity,
) -> Result<SingularPoint, SingularError> {
    let ext = pt.field.clone();
    // cell constraints must have pinned the leading coordinates to zero
    for (pos, j) in chart_vars(chart).into_iter().enumerate() {
        if j < chart {
            debug_assert!(ext.is_zero(&pt.coords[pos]));
        }
    }
    let f_loc = localize(&phi.embed_ext(&ext), chart, &pt.coords);
    let (tjurina, corank) = local_invariants(&f_loc)?;
    // in the unconstrained cell the solver's multiplicity is the same local
    // length that tjurina measures
    if chart == 0 {
        debug_assert_eq!(pt.multiplicity, tjurina);
    }
    Ok(SingularPoint {
        chart,
        field: ext,
        coords: pt.coords,
        cell_multiplicity: pt.multiplicity,
        tjurina,
        hessian_corank: corank,
        classification: classify(tjurina, corank),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn fp() -> PrimeField {
        PrimeField::new(10007).unwrap()
    }

    fn proj(f: &PrimeField, s: &str) -> Poly<PrimeField> {
        parse_poly(f, s, 4).unwrap()
    }

    fn aff(f: &PrimeField, s: &str) -> Poly<PrimeField> {
        parse_poly(f, s, 3).unwrap()
    }

    #[test]
    fn chart_ideal_of_the_cuspidal_cubic() {
        let f = fp();
        let cubic = proj(&f, "x1*x2*x3 - x0^3");
        // full chart 1: (-3x^2, yz via renumber...) reduces to (x^2, y, z)
        let ideal = jacobian_ideal_affine(&cubic, 1);
        let gb = buchberger(&ideal, MonomialOrder::GrevLex);
        let lts: Vec<String> = gb.basis().iter().map(|g| g.to_string()).collect();
        assert_eq!(lts, vec!["z", "y", "x^2"]);
        assert_eq!(quotient_dimension(&gb), Some(2));
        // the cell version pins x0 = 0 as well
        let cell = jacobian_ideal_chart(&cubic, 1);
        let cgb = buchberger(&cell, MonomialOrder::GrevLex);
        assert_eq!(quotient_dimension(&cgb), Some(1));
    }

    #[test]
    fn smooth_quadric_has_unit_chart_ideals() {
        let f = fp();
        let q = proj(&f, "x0^2 + x1^2 + x2^2 + x3^2");
        for chart in 0..4 {
            let gb = buchberger(&jacobian_ideal_chart(&q, chart), MonomialOrder::GrevLex);
            assert_eq!(quotient_dimension(&gb), Some(0));
        }
        let scheme = find_singular_points(&q, 0).unwrap();
        assert_eq!(scheme.count(), 0);
        assert_eq!(scheme.total_length, 0);
    }

    #[test]
    fn cubic_census_three_cusps() {
        let f = fp();
        let cubic = proj(&f, "x1*x2*x3 - x0^3");
        let scheme = find_singular_points(&cubic, 0).unwrap();
        assert_eq!(scheme.count(), 3);
        assert!(scheme.all_a2());
        assert_eq!(scheme.total_length, 6);
        // the three coordinate points, one per cell 1..3
        let mut charts: Vec<usize> = scheme.points.iter().map(|p| p.chart).collect();
        charts.sort();
        assert_eq!(charts, vec![1, 2, 3]);
        for p in &scheme.points {
            assert!(p.is_rational());
            assert!(p.coords.iter().all(|c| p.field.is_zero(c)));
            assert_eq!((p.tjurina, p.hessian_corank), (2, 1));
        }
    }

    #[test]
    fn plane_pair_is_rejected() {
        let f = fp();
        let pair = proj(&f, "x0*x1");
        assert!(matches!(
            find_singular_points(&pair, 0),
            Err(SingularError::PositiveDimensionalSingularLocus(_))
        ));
    }

    #[test]
    fn local_invariants_of_model_singularities() {
        let f = fp();
        // cusp
        assert_eq!(local_invariants(&aff(&f, "x*y - z^3")).unwrap(), (2, 1));
        // node
        assert_eq!(local_invariants(&aff(&f, "x^2 + y^2 + z^2")).unwrap(), (1, 0));
        // A3
        assert_eq!(local_invariants(&aff(&f, "x*y - z^4")).unwrap(), (3, 1));
        // smooth point
        assert_eq!(local_invariants(&aff(&f, "x + y^2")), Err(SingularError::NotSingular));
        // point not on the surface
        assert_eq!(local_invariants(&aff(&f, "x + 1")), Err(SingularError::NotSingular));
    }

    #[test]
    fn classification_table() {
        assert_eq!(classify(1, 0), Classification::A1);
        assert_eq!(classify(2, 1), Classification::A2);
        assert_eq!(classify(3, 1), Classification::Ak(3));
        assert_eq!(classify(2, 2), Classification::NonAde);
        assert_eq!(classify(4, 3), Classification::NonAde);
    }

    #[test]
    fn sqh_examples() {
        let f = fp();
        // the cusp normal form with its natural weights
        assert!(sqh_check(&aff(&f, "x*y - z^3"), [(1, 2), (1, 2), (1, 3)]));
        // a cylinder singularity: z-line of critical points
        assert!(!sqh_check(&aff(&f, "x^2 + y^2"), [(1, 2), (1, 2), (1, 3)]));
        assert!(!sqh_check(&aff(&f, "x^2 + y^2"), [(1, 3), (1, 5), (1, 2)]));
    }

    #[test]
    fn localization_matches_hessian_view() {
        let f = fp();
        let cubic = proj(&f, "x1*x2*x3 - x0^3");
        let zero = vec![0u64; 3];
        let loc = localize(&cubic, 1, &zero);
        // lowest-degree part is the rank-2 quadric y*z (in chart vars x0,x2,x3)
        assert_eq!(loc.lowest_degree_part(), aff(&f, "y*z"));
        let (tj, corank) = local_invariants(&loc).unwrap();
        assert_eq!((tj, corank), (2, 1));
    }

    #[test]
    fn coordinate_change_preserves_census_multisets() {
        let f = fp();
        let cubic = proj(&f, "x1*x2*x3 - x0^3");
        let before = find_singular_points(&cubic, 0).unwrap();
        // a fixed invertible projective change
        let rows: Vec<Vec<u64>> = vec![
            vec![1, 2, 0, 5],
            vec![0, 1, 3, 0],
            vec![7, 0, 1, 1],
            vec![0, 4, 0, 1],
        ];
        let moved = cubic.substitute_linear(&rows);
        let after = find_singular_points(&moved, 0).unwrap();
        assert_eq!(before.total_length, after.total_length);
        let key = |s: &SingularScheme| {
            let mut v: Vec<(usize, usize, String)> = s
                .points
                .iter()
                .map(|p| (p.tjurina, p.hessian_corank, p.classification.label()))
                .collect();
            v.sort();
            v
        };
        assert_eq!(key(&before), key(&after));
    }
}
