use super::*;
use crate::poly::parse_poly;

fn fp() -> PrimeField {
    PrimeField::new(10007).unwrap()
}

#[test]
fn minimal_table_entries() {
    assert_eq!(minimal_cusps(3), Some(3));
    assert_eq!(minimal_cusps(4), Some(6));
    assert_eq!(minimal_cusps(5), Some(12));
    assert_eq!(minimal_cusps(6), Some(18));
    assert_eq!(minimal_cusps(7), None);
}

#[test]
fn family_tags_round_trip() {
    for tag in FamilyTag::all() {
        assert_eq!(FamilyTag::parse(tag.as_str()), Some(tag));
    }
    assert_eq!(FamilyTag::parse("nonsense"), None);
}

#[test]
fn cubic_constructor_is_the_cayley_style_cubic() {
    let f = fp();
    let (inst, report) = cubic_three_cusps(&f);
    assert_eq!(inst.phi, parse_poly(&f, "x1*x2*x3 - x0^3", 4).unwrap());
    assert!(report.pass());
    assert_eq!(report.census.singular_count, 3);
    assert!(report.census.all_a2);
}

#[test]
fn quintic_2a_construction() {
    let f = fp();
    let (inst, report) = quintic_2a(&f, 1).expect("generic seed verifies");
    assert!(report.pass());
    assert_eq!(report.census.singular_count, 12);
    assert!(report.census.all_a2);
    // identity residual is the plane x0
    let CertificateData::ContactCubics { residual, .. } = &inst.certificate else {
        panic!("wrong certificate kind")
    };
    assert_eq!(residual, &Poly::variable(&f, 4, 0));
    // the quotient matches the closed-form expansion
    let l = &inst.draws["l"];
    let q1 = &inst.draws["q'"];
    let q2 = &inst.draws["q''"];
    let x0 = Poly::variable(&f, 4, 0);
    let x1 = Poly::variable(&f, 4, 1);
    let x2 = Poly::variable(&f, 4, 2);
    let three = Poly::constant(&f, 4, 3);
    let expect = x1
        .pow(3)
        .mul(q2)
        .add(&x2.pow(3).mul(q1))
        .add(&x0.mul(q1).mul(q2))
        .sub(&three.mul(&x1.pow(2)).mul(&x2.pow(2)).mul(l))
        .sub(&three.mul(&x0).mul(&x1).mul(&x2).mul(&l.pow(2)))
        .sub(&x0.pow(2).mul(&l.pow(3)));
    assert_eq!(inst.phi, expect);
}

#[test]
fn constructors_are_deterministic() {
    let f = fp();
    let (a, ra) = quintic_2a(&f, 7).unwrap();
    let (b, rb) = quintic_2a(&f, 7).unwrap();
    assert_eq!(a.phi, b.phi);
    assert_eq!(a.attempts, b.attempts);
    assert_eq!(ra.canonical_json(), rb.canonical_json());
    let (c, _) = quintic_2a(&f, 8).unwrap();
    assert_ne!(a.phi, c.phi);
}

#[test]
fn degeneration_matches_case3_at_zero() {
    let f = fp();
    let (c3, _) = quintic_case3(&f, 2).unwrap();
    let (d0, _) = quintic_degeneration(&f, 2, 0).unwrap();
    assert_eq!(c3.phi, d0.phi);
    assert_eq!(d0.family, FamilyTag::QuinticCase3);
    let (dt, rt) = quintic_degeneration(&f, 2, 5).unwrap();
    assert_eq!(dt.family, FamilyTag::Quintic2a);
    assert_eq!(dt.deformation_t, Some(5));
    assert!(rt.pass());
    assert_eq!(rt.census.singular_count, 12);
    assert_eq!(rt.census.total_length, 24);
    // matched draws: same l, q', q''
    assert_eq!(c3.draws, dt.draws);
}
