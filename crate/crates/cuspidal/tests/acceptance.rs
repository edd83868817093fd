//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible under `--nocapture`) and asserting exactness and the
//! stated time budget.

use cuspidal::families::{self, CertificateData, FamilyTag};
use cuspidal::field::{Field, PrimeField};
use cuspidal::groebner::solve::solve_points;
use cuspidal::groebner::{
    buchberger, quotient_dimension, verify_buchberger, Ideal,
};
use cuspidal::oracle;
use cuspidal::poly::{MonomialOrder, Poly};
use cuspidal::singular::{find_singular_points, Classification};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::time::{Duration, Instant};

const WORKING_PRIME: u64 = 10007;
const ORACLE_PRIME: u64 = 101;
const SEEDS: [u64; 5] = [1, 2, 3, 4, 5];

fn fp() -> PrimeField {
    PrimeField::new(WORKING_PRIME).unwrap()
}

fn verdict(criterion: u32, pass: bool, detail: String) {
    println!(
        "criterion {criterion:02}: {} :: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_01_cubic_three_cusps() {
    let t = Instant::now();
    let (_, report) = families::cubic_three_cusps(&fp());
    let elapsed = t.elapsed();
    let pass = report.pass()
        && report.census.singular_count == 3
        && report.census.all_a2
        && report
            .census
            .points
            .iter()
            .all(|p| p.tjurina == 2 && p.hessian_corank == 1)
        && elapsed < Duration::from_secs(1);
    verdict(
        1,
        pass,
        format!(
            "cubic3: {} cusps, all A2 (tau=2, corank 1), in {elapsed:?}",
            report.census.singular_count
        ),
    );
}

#[test]
fn criterion_02_quintic_2a_five_seeds() {
    let field = fp();
    let mut detail = vec![];
    let mut pass = true;
    for seed in SEEDS {
        let t = Instant::now();
        let (inst, report) = families::quintic_2a(&field, seed).expect("constructor in budget");
        let elapsed = t.elapsed();
        let off_plane = report
            .checks
            .iter()
            .find(|c| c.name == "no_cusp_on_residual_plane")
            .map(|c| c.pass)
            .unwrap_or(false);
        let residual_is_x0 = match &inst.certificate {
            CertificateData::ContactCubics { residual, .. } => {
                residual.monic() == Poly::variable(&field, 4, 0)
            }
            _ => false,
        };
        let ok = report.pass()
            && report.census.singular_count == 12
            && report.census.all_a2
            && off_plane
            && residual_is_x0
            && elapsed < Duration::from_secs(60);
        pass &= ok;
        detail.push(format!("seed {seed}: 12 cusps off x0=0, residual x0, {elapsed:?}"));
    }
    verdict(2, pass, detail.join("; "));
}

#[test]
fn criterion_03_quintic_case3_five_seeds() {
    let field = fp();
    let mut pass = true;
    let mut detail = vec![];
    for seed in SEEDS {
        let (_, report) = families::quintic_case3(&field, seed).expect("constructor in budget");
        let named = |name: &str| {
            report
                .checks
                .iter()
                .find(|c| c.name == name)
                .map(|c| c.pass)
                .unwrap_or(false)
        };
        let ok = report.pass()
            && report.census.singular_count == 12
            && report.census.all_a2
            && named("line_cusp_split")
            && named("line_cusps_at_qq_roots")
            && named("line_cusps_sqh_confirmed");
        pass &= ok;
        detail.push(format!("seed {seed}: 8 + 4 split, SQH-confirmed line cusps"));
    }
    verdict(3, pass, detail.join("; "));
}

#[test]
fn criterion_04_degeneration_preserves_census() {
    let field = fp();
    let seed = 2;
    let mut rng = ChaCha20Rng::seed_from_u64(404);
    let mut ts = vec![0u64];
    while ts.len() < 5 {
        let t = rng.gen_range(1..WORKING_PRIME);
        if !ts.contains(&t) {
            ts.push(t);
        }
    }
    let (base, _) = families::quintic_case3(&field, seed).unwrap();
    let mut pass = true;
    let mut detail = vec![];
    for &t in &ts {
        let (inst, report) = families::quintic_degeneration(&field, seed, t).expect("verifies");
        let ok = report.pass()
            && report.census.singular_count == 12
            && report.census.total_length == 24;
        if t == 0 {
            pass &= inst.phi == base.phi; // matched draws reproduce case 3
        }
        pass &= ok;
        detail.push(format!(
            "t={t}: {} cusps, length {}",
            report.census.singular_count, report.census.total_length
        ));
    }
    verdict(4, pass, detail.join("; "));
}

#[test]
fn criterion_05_sextic_a_five_seeds() {
    let field = fp();
    let mut pass = true;
    let mut detail = vec![];
    for seed in SEEDS {
        let t = Instant::now();
        let (_, report) = families::sextic_a(&field, seed).expect("constructor in budget");
        let elapsed = t.elapsed();
        let incidence_all = report.certificate.incidence_ok;
        let ok = report.pass()
            && report.census.singular_count == 18
            && report.census.all_a2
            && incidence_all
            && report.census.total_length == 36
            && elapsed < Duration::from_secs(300);
        pass &= ok;
        detail.push(format!("seed {seed}: 18 cusps on s'=s''=s=0, length 36, {elapsed:?}"));
    }
    verdict(5, pass, detail.join("; "));
}

#[test]
fn criterion_06_sextic_b_five_seeds() {
    let field = fp();
    let mut pass = true;
    let mut detail = vec![];
    for seed in SEEDS {
        let (_, report) = families::sextic_b(&field, seed).expect("constructor in budget");
        let split: Vec<usize> = report
            .certificate
            .locus_counts
            .iter()
            .map(|l| l.count)
            .collect();
        let ok = report.pass()
            && report.census.singular_count == 18
            && report.census.all_a2
            && split == vec![2, 8, 8];
        pass &= ok;
        detail.push(format!("seed {seed}: 18 cusps split {split:?}"));
    }
    verdict(6, pass, detail.join("; "));
}

#[test]
fn criterion_07_quartic_search_produces_six_cusps() {
    let field = fp();
    let (inst, report) = families::quartic_six_cusps(&field, 1).expect("search in budget");
    let CertificateData::ContactCubics { s1, s2, s, residual } = &inst.certificate else {
        panic!("quartic must carry a contact certificate")
    };
    // independent re-check of the exact identity s'*s'' - s^3 = phi * rho
    let identity = s1.mul(s2).sub(&s.pow(3)) == inst.phi.mul(residual);
    let pass = report.pass()
        && report.census.singular_count == 6
        && report.census.all_a2
        && identity
        && residual.homogeneous_degree() == Some(2);
    verdict(
        7,
        pass,
        format!(
            "quartic [{}]: 6 A2 cusps, exact identity with quadric residual, {} attempt(s)",
            inst.ansatz.as_deref().unwrap_or("?"),
            inst.attempts
        ),
    );
}

#[test]
fn criterion_08_oracle_equivalence_over_f101() {
    let field = PrimeField::new(ORACLE_PRIME).unwrap();
    let mut pass = true;
    let mut detail = vec![];
    for tag in FamilyTag::all() {
        let seeds: &[u64] = if tag == FamilyTag::Cubic3 { &[0] } else { &SEEDS };
        for &seed in seeds {
            let t = Instant::now();
            let (inst, _) = families::construct(tag, &field, seed).expect("constructor in budget");
            let scheme = find_singular_points(&inst.phi, seed).expect("finite singular locus");
            let agrees = oracle::cross_check(&inst.phi, &scheme, ORACLE_PRIME).unwrap();
            let elapsed = t.elapsed();
            pass &= agrees && elapsed < Duration::from_secs(120);
            if !agrees {
                detail.push(format!("{} seed {seed}: MISMATCH", tag.as_str()));
            }
        }
        detail.push(format!("{}: scan = rational census", tag.as_str()));
    }
    verdict(8, pass, detail.join("; "));
}

#[test]
fn criterion_09_engine_property_suite() {
    let t = Instant::now();
    let field = PrimeField::new(ORACLE_PRIME).unwrap();
    let mut rng = ChaCha20Rng::seed_from_u64(909);

    // 1000 random small ideals: Buchberger criterion, order-invariant
    // quotient dimension, multiplicity totals
    let mut zero_dim_seen = 0usize;
    for i in 0..1000 {
        let bounded = i % 2 == 0;
        let gens: Vec<Poly<PrimeField>> = if bounded {
            // bounded shape forces zero-dimensionality
            (0..3)
                .map(|v| {
                    let e = rng.gen_range(1..=3usize);
                    let lead = Poly::variable(&field, 3, v).pow(e);
                    let noise = Poly::random_homogeneous(&field, 3, rng.gen_range(0..e), &mut rng);
                    lead.add(&noise)
                })
                .collect()
        } else {
            (0..rng.gen_range(2..=3usize))
                .map(|_| {
                    let d = rng.gen_range(1..=2usize);
                    Poly::random_homogeneous(&field, 3, d, &mut rng)
                        .add(&Poly::random_homogeneous(&field, 3, 0, &mut rng))
                })
                .filter(|p| !p.is_zero())
                .collect()
        };
        if gens.is_empty() {
            continue;
        }
        let ideal = Ideal::new(gens);
        let gb = buchberger(&ideal, MonomialOrder::GrevLex);
        assert!(verify_buchberger(&gb), "S-polynomial failed to reduce (ideal {i})");
        let d1 = quotient_dimension(&gb);
        let d2 = quotient_dimension(&buchberger(&ideal, MonomialOrder::Lex));
        assert_eq!(d1, d2, "quotient dimension depends on order (ideal {i})");
        if let Some(dim) = d1 {
            zero_dim_seen += 1;
            if dim > 0 {
                let pts = solve_points(&ideal, i as u64).expect("solvable");
                let total: usize = pts.iter().map(|p| p.multiplicity).sum();
                assert_eq!(total, dim, "multiplicity total mismatch (ideal {i})");
            }
        }
    }

    // Euler identity on 1000 random homogeneous forms
    for _ in 0..1000 {
        let d = rng.gen_range(1..=6usize);
        let phi = Poly::random_homogeneous(&field, 4, d, &mut rng);
        let mut acc = Poly::zero(&field, 4);
        for v in 0..4 {
            acc = acc.add(&Poly::variable(&field, 4, v).mul(&phi.derivative(v)));
        }
        assert_eq!(acc, phi.mul_scalar(&field.from_i64(d as i64)), "Euler identity failed");
    }

    let elapsed = t.elapsed();
    let pass = elapsed < Duration::from_secs(300) && zero_dim_seen >= 500;
    verdict(
        9,
        pass,
        format!(
            "1000 ideals ({zero_dim_seen} zero-dimensional) + 1000 Euler checks in {elapsed:?}"
        ),
    );
}

#[test]
fn criterion_10_sextic_counts_never_below_eighteen() {
    let field = fp();
    let mut pass = true;
    let mut counts = vec![];
    for seed in [1u64, 2] {
        for tag in [FamilyTag::SexticA, FamilyTag::SexticB] {
            let (_, report) = families::construct(tag, &field, seed).expect("constructor");
            pass &= report.pass() && report.census.singular_count >= 18;
            pass &= report.census.singular_count == 18;
            counts.push(report.census.singular_count);
        }
    }
    verdict(
        10,
        pass,
        format!("every PASS sextic report carries >= 18 cusps (got {counts:?})"),
    );
}

#[test]
fn classification_guardrails() {
    // the verifier must refuse to call a non-cusp a cusp
    assert_eq!(
        cuspidal::singular::classify(2, 2),
        Classification::NonAde
    );
    assert_eq!(cuspidal::singular::classify(1, 0), Classification::A1);
}
