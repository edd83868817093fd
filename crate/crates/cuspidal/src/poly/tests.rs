use super::*;
use crate::field::{PrimeField, Rationals};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

fn fp(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn parse(field: &PrimeField, s: &str) -> Poly<PrimeField> {
    parse_poly(field, s, 4).unwrap()
}

#[test]
fn cube_of_binomial_has_four_terms() {
    // (x1*x2 + x0*x3)^3 = x1^3x2^3 + 3x0x1^2x2^2x3 + 3x0^2x1x2x3^2 + x0^3x3^3
    let f = fp(10007);
    let s = parse(&f, "x1*x2 + x0*x3").pow(3);
    let expect = parse(&f, "x1^3*x2^3 + 3*x0*x1^2*x2^2*x3 + 3*x0^2*x1*x2*x3^2 + x0^3*x3^3");
    assert_eq!(s, expect);
    assert_eq!(s.num_terms(), 4);
}

#[test]
fn exact_div_flags() {
    let f = fp(10007);
    let x0 = Poly::variable(&f, 4, 0);
    // subcase-2a style data: s'*s'' - s^3 is divisible by x0 by construction
    let l = parse(&f, "x3");
    let q1 = parse(&f, "x2*x3 + 5*x1^2");
    let q2 = parse(&f, "x0*x1 + 3*x3^2");
    let s = parse(&f, "x1*x2").add(&x0.mul(&l));
    let s1 = parse(&f, "x1^3").add(&x0.mul(&q1));
    let s2 = parse(&f, "x2^3").add(&x0.mul(&q2));
    let r = s1.mul(&s2).sub(&s.pow(3));
    let q = r.exact_div(&x0).unwrap();
    assert!(q.is_some());
    assert_eq!(q.unwrap().mul(&x0), r);

    // affine counterexample
    let g = parse(&f, "x0*x1 + 1");
    assert!(g.exact_div(&x0).unwrap().is_none());
    assert_eq!(
        Poly::zero(&f, 4).exact_div(&Poly::zero(&f, 4)),
        Err(PolyError::DivisionByZeroPoly)
    );
}

#[test]
fn derivative_examples() {
    let f = fp(10007);
    let cubic = parse(&f, "x1*x2*x3 - x0^3");
    assert_eq!(cubic.derivative(0), parse(&f, "-3*x0^2"));
    assert_eq!(Poly::constant(&f, 4, 7).derivative(2), Poly::zero(&f, 4));
}

#[test]
fn euler_relation_on_random_forms() {
    let f = fp(10007);
    let mut rng = ChaCha20Rng::seed_from_u64(42);
    for d in 1..=6 {
        let phi = Poly::random_homogeneous(&f, 4, d, &mut rng);
        let mut acc = Poly::zero(&f, 4);
        for i in 0..4 {
            acc = acc.add(&Poly::variable(&f, 4, i).mul(&phi.derivative(i)));
        }
        assert_eq!(acc, phi.mul_scalar(&f.from_i64(d as i64)));
    }
}

#[test]
fn evaluation_examples() {
    let f = fp(10007);
    let cubic = parse(&f, "x1*x2*x3 - x0^3");
    assert_eq!(cubic.evaluate(&[0, 1, 0, 0]), 0);
    assert_eq!(cubic.evaluate(&[1, 1, 1, 1]), 0);
    let mut rng = ChaCha20Rng::seed_from_u64(5);
    for _ in 0..10 {
        let a = Poly::random_homogeneous(&f, 4, 2, &mut rng);
        let b = Poly::random_homogeneous(&f, 4, 3, &mut rng);
        let pt: Vec<u64> = (0..4).map(|_| f.sample(&mut rng)).collect();
        assert_eq!(a.mul(&b).evaluate(&pt), f.mul(&a.evaluate(&pt), &b.evaluate(&pt)));
    }
}

#[test]
fn dehomogenize_and_shift() {
    let f = fp(10007);
    let cubic = parse(&f, "x1*x2*x3 - x0^3");
    // chart x1 = 1: affine vars (x0, x2, x3) -> (x, y, z)
    let loc = cubic.dehomogenize(1);
    let expect = parse_poly(&f, "y*z - x^3", 3).unwrap();
    assert_eq!(loc, expect);
    // lowest-degree part at the origin is the rank-2 quadric y*z
    assert_eq!(loc.lowest_degree_part(), parse_poly(&f, "y*z", 3).unwrap());
    // shifting by a point on the surface kills the constant term
    let shifted = loc.shift(&[0, 0, 0]);
    assert_eq!(shifted, loc);
    let q = parse_poly(&f, "x^2 - 1", 3).unwrap();
    let sh = q.shift(&[1, 0, 0]); // x -> x+1: (x+1)^2 - 1 = x^2 + 2x
    assert_eq!(sh, parse_poly(&f, "x^2 + 2*x", 3).unwrap());
}

#[test]
fn homogeneity_bookkeeping() {
    let f = fp(101);
    let mut rng = ChaCha20Rng::seed_from_u64(1);
    let a = Poly::random_homogeneous(&f, 4, 3, &mut rng);
    let b = Poly::random_homogeneous(&f, 4, 2, &mut rng);
    assert_eq!(a.homogeneous_degree(), Some(3));
    assert_eq!(a.mul(&b).homogeneous_degree(), Some(5));
    assert_eq!(a.derivative(2).homogeneous_degree(), Some(2));
    assert_eq!(a.mul(&b).degree(), Some(5)); // deg(fg) = deg f + deg g
}

#[test]
fn random_homogeneous_is_deterministic() {
    let f = fp(101);
    let a = Poly::random_homogeneous(&f, 4, 2, &mut ChaCha20Rng::seed_from_u64(7));
    let b = Poly::random_homogeneous(&f, 4, 2, &mut ChaCha20Rng::seed_from_u64(7));
    assert_eq!(a, b);
    assert_eq!(monomials_of_degree(4, 2, MonomialOrder::GrevLex).len(), 10); // C(5,3)
    assert_eq!(monomials_of_degree(4, 0, MonomialOrder::GrevLex).len(), 1);
}

#[test]
fn parse_and_format_round_trip() {
    let f = fp(10007);
    let cubic = parse(&f, "x1*x2*x3 - x0^3");
    assert_eq!(cubic.num_terms(), 2);
    // grevlex puts x0^3 first; the text reparses to an equal polynomial
    assert_eq!(format_poly(&cubic), "-x0^3 + x1*x2*x3");
    assert_eq!(parse(&f, &format_poly(&cubic)), cubic);

    let zero = parse(&f, "0");
    assert!(zero.is_zero());
    assert_eq!(format_poly(&zero), "0");

    let q = Rationals;
    let r = parse_poly(&q, "-3/2*x*y^2 + z - 1/7", 3).unwrap();
    assert_eq!(parse_poly(&q, &format_poly(&r), 3).unwrap(), r);

    // grammar corner cases
    assert!(parse_poly(&f, "x0 + y", 4).is_err()); // mixed variables
    assert!(parse_poly(&f, "", 4).is_err());
    assert!(parse_poly(&f, "x4", 4).is_err());
    assert!(parse_poly(&f, "3 *x2 ^ 2", 4).is_ok()); // whitespace insignificant
    assert_eq!(parse(&f, "3x1"), parse(&f, "3*x1")); // implicit star after coef
}

#[test]
fn substitute_linear_permutation() {
    let f = fp(101);
    let cubic = parse(&f, "x1*x2*x3 - x0^3");
    // swap x1 <-> x2
    let mut mat = vec![vec![0u64; 4]; 4];
    mat[0][0] = 1;
    mat[1][2] = 1;
    mat[2][1] = 1;
    mat[3][3] = 1;
    let swapped = cubic.substitute_linear(&mat);
    assert_eq!(swapped, cubic); // symmetric under the swap
    // x0 -> x0 + x1 changes it
    let mut mat2 = vec![vec![0u64; 4]; 4];
    for i in 0..4 {
        mat2[i][i] = 1;
    }
    mat2[0][1] = 1;
    assert_ne!(cubic.substitute_linear(&mat2), cubic);
}

#[test]
fn grevlex_orders_standard_examples() {
    // classical: x^2 > xy > y^2 > xz > yz > z^2 in grevlex(x,y,z)
    let ord = MonomialOrder::GrevLex;
    let monos = monomials_of_degree(3, 2, ord);
    let names = ["x", "y", "z"];
    let label = |m: &Monomial| -> String {
        (0..3)
            .flat_map(|i| std::iter::repeat(names[i]).take(m.e[i] as usize))
            .collect::<Vec<_>>()
            .join("")
    };
    let got: Vec<String> = monos.iter().map(label).collect();
    assert_eq!(got, vec!["xx", "xy", "yy", "xz", "yz", "zz"]);
}
