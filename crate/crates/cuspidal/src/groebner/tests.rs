use super::*;
use crate::field::PrimeField;
use crate::poly::parse_poly;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

fn f101() -> PrimeField {
    PrimeField::new(101).unwrap()
}

fn aff(f: &PrimeField, s: &str) -> Poly<PrimeField> {
    parse_poly(f, s, 3).unwrap()
}

fn gb_of(f: &PrimeField, gens: &[&str]) -> GroebnerBasis<PrimeField> {
    let gens = gens.iter().map(|s| aff(f, s)).collect();
    buchberger(&Ideal::new(gens), MonomialOrder::GrevLex)
}

#[test]
fn principal_ideal() {
    let f = f101();
    let gb = gb_of(&f, &["x"]);
    assert_eq!(gb.basis().len(), 1);
    assert_eq!(gb.basis()[0], aff(&f, "x"));
}

#[test]
fn two_linear_forms() {
    let f = f101();
    let gb = gb_of(&f, &["x + y", "x - y"]);
    let lms: Vec<_> = gb.basis().iter().map(|g| format!("{g}")).collect();
    assert_eq!(lms, vec!["y", "x"]);
}

#[test]
fn unit_ideal() {
    let f = f101();
    // x*(xy - 1) - y*x^2 = -x, then x*y*... the ideal contains 1
    let gb = gb_of(&f, &["x*y - 1", "x^2"]);
    assert!(gb.is_unit_ideal());
    assert_eq!(quotient_dimension(&gb), Some(0));
}

#[test]
fn normal_form_contract() {
    let f = f101();
    let gb = gb_of(&f, &["y^2 - x", "x*y - 1"]);
    // membership of the generators
    assert!(ideal_membership(&aff(&f, "y^2 - x"), &gb));
    assert!(ideal_membership(&aff(&f, "x*y - 1"), &gb));
    // idempotence on random polynomials
    let mut rng = ChaCha20Rng::seed_from_u64(11);
    for _ in 0..20 {
        let p = Poly::random_homogeneous(&f, 3, 3, &mut rng)
            .add(&Poly::random_homogeneous(&f, 3, 1, &mut rng));
        let n1 = normal_form(&p, &gb);
        assert_eq!(normal_form(&n1, &gb), n1);
    }
    // explicit non-member
    let gb2 = gb_of(&f, &["y^2", "z^2"]);
    let yz = aff(&f, "y*z");
    assert!(!ideal_membership(&yz, &gb2));
    assert_eq!(normal_form(&yz, &gb2), yz);
}

#[test]
fn quotient_dimensions() {
    let f = f101();
    assert_eq!(quotient_dimension(&gb_of(&f, &["x", "y", "z"])), Some(1));
    assert_eq!(quotient_dimension(&gb_of(&f, &["x^2", "y^2", "z^2"])), Some(8));
    // local Milnor algebra of the cusp x*y - z^3: partials (y, x, -3z^2)
    assert_eq!(quotient_dimension(&gb_of(&f, &["y", "x", "-3*z^2"])), Some(2));
    // positive-dimensional
    assert_eq!(quotient_dimension(&gb_of(&f, &["x"])), None);
    assert_eq!(quotient_dimension(&gb_of(&f, &["x*y"])), None);
}

#[test]
fn buchberger_criterion_holds() {
    let f = f101();
    let mut rng = ChaCha20Rng::seed_from_u64(23);
    for _ in 0..25 {
        let gens: Vec<_> = (0..3)
            .map(|_| {
                Poly::random_homogeneous(&f, 3, 2, &mut rng)
                    .add(&Poly::random_homogeneous(&f, 3, 1, &mut rng))
            })
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let gb = buchberger(&Ideal::new(gens.clone()), MonomialOrder::GrevLex);
        assert!(verify_buchberger(&gb));
        for g in &gens {
            assert!(ideal_membership(g, &gb));
        }
    }
}

#[test]
fn quotient_dimension_is_order_invariant() {
    let f = f101();
    let mut rng = ChaCha20Rng::seed_from_u64(37);
    for _ in 0..10 {
        // bounded-shape generators force zero-dimensionality
        let gens = vec![
            aff(&f, "x^2").add(&Poly::random_homogeneous(&f, 3, 1, &mut rng)),
            aff(&f, "y^2").add(&Poly::random_homogeneous(&f, 3, 1, &mut rng)),
            aff(&f, "z^2").add(&Poly::random_homogeneous(&f, 3, 1, &mut rng)),
        ];
        let ideal = Ideal::new(gens);
        let d1 = quotient_dimension(&buchberger(&ideal, MonomialOrder::GrevLex));
        let d2 = quotient_dimension(&buchberger(&ideal, MonomialOrder::Lex));
        let d3 = quotient_dimension(&buchberger(&ideal, MonomialOrder::GrLex));
        assert_eq!(d1, d2);
        assert_eq!(d1, d3);
        assert!(d1.is_some());
    }
}

#[test]
fn reduced_basis_is_canonical() {
    let f = f101();
    // same ideal, two generator presentations
    let a = gb_of(&f, &["x + y", "y^2 - 1"]);
    let b = gb_of(&f, &["x + y", "y^2 - 1", "x*y + y^2 - x - y"]);
    assert_eq!(a.basis(), b.basis());
}
