//! Constructors for the surface families, each packaged with its
//! certificate polynomials and predicted cusp census.
//!
//! "Generic" means: coefficients drawn uniformly over F_p from a seeded
//! stream, accepted only after the full verifier passes. A constructor
//! reseeds at most [`MAX_RESEEDS`] times and records every rejection with
//! its reason, so only verified instances escape and the rejection rate is
//! visible in reports.

use crate::certify::{self, VerifyOptions};
use crate::field::{Field, PrimeField};
use crate::poly::{Poly, PolyError};
use crate::report::VerificationReport;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use std::collections::BTreeMap;

pub const MAX_RESEEDS: u32 = 16;

#[derive(Debug, Clone, thiserror::Error)]
pub enum FamilyError {
    #[error("no acceptable {family} instance within {attempts} attempts: {last}")]
    DegenerateInstance { family: String, attempts: u32, last: String },
    #[error("quartic search exhausted its budget ({attempts} attempts over {variants} ansatz variants): {last}")]
    ConstructionFailed { attempts: u32, variants: usize, last: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Cubic3,
    Quartic6,
    Quintic2a,
    QuinticCase3,
    SexticA,
    SexticB,
}

impl FamilyTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyTag::Cubic3 => "cubic3",
            FamilyTag::Quartic6 => "quartic6",
            FamilyTag::Quintic2a => "quintic2a",
            FamilyTag::QuinticCase3 => "quintic_case3",
            FamilyTag::SexticA => "sexticA",
            FamilyTag::SexticB => "sexticB",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyTag> {
        Some(match s {
            "cubic3" => FamilyTag::Cubic3,
            "quartic6" => FamilyTag::Quartic6,
            "quintic2a" => FamilyTag::Quintic2a,
            "quintic_case3" => FamilyTag::QuinticCase3,
            "sexticA" => FamilyTag::SexticA,
            "sexticB" => FamilyTag::SexticB,
            _ => return None,
        })
    }

    pub fn degree(&self) -> usize {
        match self {
            FamilyTag::Cubic3 => 3,
            FamilyTag::Quartic6 => 4,
            FamilyTag::Quintic2a | FamilyTag::QuinticCase3 => 5,
            FamilyTag::SexticA | FamilyTag::SexticB => 6,
        }
    }

    pub fn all() -> [FamilyTag; 6] {
        [
            FamilyTag::Cubic3,
            FamilyTag::Quartic6,
            FamilyTag::Quintic2a,
            FamilyTag::QuinticCase3,
            FamilyTag::SexticA,
            FamilyTag::SexticB,
        ]
    }

    fn salt(&self) -> u64 {
        match self {
            FamilyTag::Cubic3 => 0x0003,
            FamilyTag::Quartic6 => 0x0406,
            FamilyTag::Quintic2a => 0x052a,
            FamilyTag::QuinticCase3 => 0x0503,
            FamilyTag::SexticA => 0x060a,
            FamilyTag::SexticB => 0x060b,
        }
    }
}

/// The minimal size of a non-empty 3-divisible cusp set by degree.
pub fn minimal_table() -> [(usize, usize); 4] {
    [(3, 3), (4, 6), (5, 12), (6, 18)]
}

pub fn minimal_cusps(degree: usize) -> Option<usize> {
    minimal_table().iter().find(|(d, _)| *d == degree).map(|(_, n)| *n)
}

#[derive(Debug, Clone)]
pub enum CertificateData {
    /// Degree 3: the equation itself is the triple-cover form; there is no
    /// contact-cubic certificate in this degree.
    TripleCover,
    /// Contact cubics s', s'' and quadric s with the residual cofactor of
    /// s'*s'' - s^3 (a quadric for quartics, a plane for quintics, a
    /// constant for sextics).
    ContactCubics {
        s1: Poly<PrimeField>,
        s2: Poly<PrimeField>,
        s: Poly<PrimeField>,
        residual: Poly<PrimeField>,
    },
    /// Degree 6 alternative branch: phi = l'*l''*f - g^3.
    SexticB {
        l1: Poly<PrimeField>,
        l2: Poly<PrimeField>,
        g: Poly<PrimeField>,
        f: Poly<PrimeField>,
    },
}

#[derive(Debug, Clone)]
pub struct PredictedCensus {
    pub n: usize,
    pub loci: Vec<(String, usize)>,
    pub source: String,
}

#[derive(Debug, Clone)]
pub struct SurfaceInstance {
    pub family: FamilyTag,
    pub seed: u64,
    pub prime: u64,
    pub deformation_t: Option<u64>,
    pub phi: Poly<PrimeField>,
    pub certificate: CertificateData,
    pub predicted: PredictedCensus,
    /// Named constructor draws, kept for audit and family-specific checks.
    pub draws: BTreeMap<String, Poly<PrimeField>>,
    /// Which ansatz variant produced the instance, when a search ran.
    pub ansatz: Option<String>,
    pub attempts: u32,
    pub rejections: Vec<String>,
}

impl SurfaceInstance {
    pub fn degree(&self) -> usize {
        self.family.degree()
    }

    pub fn field(&self) -> &PrimeField {
        self.phi.field()
    }
}

fn rng_for(tag: FamilyTag, seed: u64, attempt: u32) -> ChaCha20Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&tag.salt().to_le_bytes());
    key[8..16].copy_from_slice(&seed.to_le_bytes());
    key[16..20].copy_from_slice(&attempt.to_le_bytes());
    ChaCha20Rng::from_seed(key)
}

fn var(f: &PrimeField, i: usize) -> Poly<PrimeField> {
    Poly::variable(f, 4, i)
}

/// Dispatch by family tag.
pub fn construct(
    tag: FamilyTag,
    field: &PrimeField,
    seed: u64,
) -> Result<(SurfaceInstance, VerificationReport), FamilyError> {
    match tag {
        FamilyTag::Cubic3 => Ok(cubic_three_cusps(field)),
        FamilyTag::Quartic6 => quartic_six_cusps(field, seed),
        FamilyTag::Quintic2a => quintic_2a(field, seed),
        FamilyTag::QuinticCase3 => quintic_case3(field, seed),
        FamilyTag::SexticA => sextic_a(field, seed),
        FamilyTag::SexticB => sextic_b(field, seed),
    }
}

/// The unique cuspidal cubic x1*x2*x3 - x0^3, cusps at three coordinate
/// points.
pub fn cubic_three_cusps(field: &PrimeField) -> (SurfaceInstance, VerificationReport) {
    let phi = var(field, 1)
        .mul(&var(field, 2))
        .mul(&var(field, 3))
        .sub(&var(field, 0).pow(3));
    let inst = SurfaceInstance {
        family: FamilyTag::Cubic3,
        seed: 0,
        prime: field.p(),
        deformation_t: None,
        phi,
        certificate: CertificateData::TripleCover,
        predicted: PredictedCensus {
            n: 3,
            loci: vec![("coordinate points [0:1:0:0],[0:0:1:0],[0:0:0:1]".into(), 3)],
            source: "minimal count, degree 3".into(),
        },
        draws: BTreeMap::new(),
        ansatz: None,
        attempts: 1,
        rejections: vec![],
    };
    let report = certify::verify_family(&inst, &VerifyOptions::default());
    debug_assert!(report.pass(), "the cuspidal cubic always verifies");
    (inst, report)
}

/// Runs draw -> build -> verify with the family's reseed budget.
fn search<FBuild>(
    tag: FamilyTag,
    field: &PrimeField,
    seed: u64,
    mut build: FBuild,
) -> Result<(SurfaceInstance, VerificationReport), FamilyError>
where
    FBuild: FnMut(&mut ChaCha20Rng) -> Option<(Poly<PrimeField>, CertificateData, BTreeMap<String, Poly<PrimeField>>)>,
{
    let mut rejections = vec![];
    for attempt in 0..MAX_RESEEDS {
        let mut rng = rng_for(tag, seed, attempt);
        let Some((phi, certificate, draws)) = build(&mut rng) else {
            rejections.push(format!("attempt {attempt}: degenerate draw (wrong degree)"));
            continue;
        };
        let inst = SurfaceInstance {
            family: tag,
            seed,
            prime: field.p(),
            deformation_t: None,
            phi,
            certificate,
            predicted: predicted_census(tag),
            draws,
            ansatz: None,
            attempts: attempt + 1,
            rejections: rejections.clone(),
        };
        let report = certify::verify_family(&inst, &VerifyOptions::default());
        if report.pass() {
            return Ok((inst, report));
        }
        let why = report
            .first_failure()
            .map(|c| format!("{}: {}", c.name, c.detail))
            .unwrap_or_else(|| "unknown".into());
        rejections.push(format!("attempt {attempt}: {why}"));
    }
    Err(FamilyError::DegenerateInstance {
        family: tag.as_str().into(),
        attempts: MAX_RESEEDS,
        last: rejections.last().cloned().unwrap_or_default(),
    })
}

pub fn predicted_census(tag: FamilyTag) -> PredictedCensus {
    match tag {
        FamilyTag::Cubic3 => PredictedCensus {
            n: 3,
            loci: vec![("coordinate points [0:1:0:0],[0:0:1:0],[0:0:0:1]".into(), 3)],
            source: "minimal count, degree 3".into(),
        },
        FamilyTag::Quartic6 => PredictedCensus {
            n: 6,
            loci: vec![("s'=s''=s=0 (empirical; ansatz-dependent)".into(), 6)],
            source: "minimal count, degree 4".into(),
        },
        FamilyTag::Quintic2a => PredictedCensus {
            n: 12,
            loci: vec![("s'=s''=s=0 off the plane x0=0".into(), 12)],
            source: "minimal count, degree 5; twelve cusps away from the residual plane".into(),
        },
        FamilyTag::QuinticCase3 => PredictedCensus {
            n: 12,
            loci: vec![
                ("s'=s''=s=0 off the plane x0=0".into(), 8),
                ("on the line x0=x1=0 at the roots of q'*q''".into(), 4),
            ],
            source: "minimal count, degree 5; repeated-line contact quadric".into(),
        },
        FamilyTag::SexticA => PredictedCensus {
            n: 18,
            loci: vec![("s'=s''=s=0".into(), 18)],
            source: "minimal count, degree 6; 3*3*2 contact intersection".into(),
        },
        FamilyTag::SexticB => PredictedCensus {
            n: 18,
            loci: vec![
                ("l'=l''=g=0".into(), 2),
                ("l'=f=g=0".into(), 8),
                ("l''=f=g=0".into(), 8),
            ],
            source: "minimal count, degree 6; split-plane branch 2+8+8".into(),
        },
    }
}

/// Quintic, distinct-lines contact quadric: s = x1*x2 + x0*l,
/// s' = x1^3 + x0*q', s'' = x2^3 + x0*q''; the sextic s'*s'' - s^3 is
/// divisible by x0 by construction and the quotient is the surface.
pub fn quintic_2a(
    field: &PrimeField,
    seed: u64,
) -> Result<(SurfaceInstance, VerificationReport), FamilyError> {
    let x0 = var(field, 0);
    let x1 = var(field, 1);
    let x2 = var(field, 2);
    search(FamilyTag::Quintic2a, field, seed, move |rng| {
        let l = Poly::random_homogeneous(field, 4, 1, rng);
        let q1 = Poly::random_homogeneous(field, 4, 2, rng);
        let q2 = Poly::random_homogeneous(field, 4, 2, rng);
        let s = x1.mul(&x2).add(&x0.mul(&l));
        let s1 = x1.pow(3).add(&x0.mul(&q1));
        let s2 = x2.pow(3).add(&x0.mul(&q2));
        let r = s1.mul(&s2).sub(&s.pow(3));
        let phi = r.exact_div(&x0).expect("compatible").expect("x0 divides by construction");
        if phi.homogeneous_degree() != Some(5) {
            return None;
        }
        let draws =
            BTreeMap::from([("l".into(), l), ("q'".into(), q1), ("q''".into(), q2)]);
        let cert = CertificateData::ContactCubics { s1, s2, s, residual: x0.clone() };
        Some((phi, cert, draws))
    })
}

/// Quintic, repeated-line contact quadric: the surface is
/// x1^3(q'+q'') + x0 q'q'' - 3x1^4 l - 3x0 x1^2 l^2 - x0^2 l^3, with
/// s = x1^2 + x0*l and s' = x1^3 + x0*q', s'' = x1^3 + x0*q''. Four of the
/// twelve cusps land on the line x0 = x1 = 0 at the roots of q'q''.
pub fn quintic_case3(
    field: &PrimeField,
    seed: u64,
) -> Result<(SurfaceInstance, VerificationReport), FamilyError> {
    search(FamilyTag::QuinticCase3, field, seed, move |rng| {
        build_case3_like(field, rng, 0)
    })
}

/// Shared builder: t = 0 is the repeated-line case, t != 0 a coordinate
/// image of the distinct-lines case with lines x0=x1=0 and x0=x1+t*x2=0.
fn build_case3_like(
    field: &PrimeField,
    rng: &mut ChaCha20Rng,
    t: u64,
) -> Option<(Poly<PrimeField>, CertificateData, BTreeMap<String, Poly<PrimeField>>)> {
    let x0 = var(field, 0);
    let x1 = var(field, 1);
    let x2 = var(field, 2);
    let l = Poly::random_homogeneous(field, 4, 1, rng);
    let q1 = Poly::random_homogeneous(field, 4, 2, rng);
    let q2 = Poly::random_homogeneous(field, 4, 2, rng);
    // the moving line x1 + t*x2 collapses onto x1 at t = 0
    let t = t % field.p();
    let u = x1.add(&x2.mul_scalar(&t));
    let s = x1.mul(&u).add(&x0.mul(&l));
    let s1 = x1.pow(3).add(&x0.mul(&q1));
    let s2 = u.pow(3).add(&x0.mul(&q2));
    let r = s1.mul(&s2).sub(&s.pow(3));
    let phi = r.exact_div(&x0).expect("compatible").expect("x0 divides by construction");
    if phi.homogeneous_degree() != Some(5) {
        return None;
    }
    let draws = BTreeMap::from([("l".into(), l), ("q'".into(), q1), ("q''".into(), q2)]);
    let cert = CertificateData::ContactCubics { s1, s2, s, residual: x0.clone() };
    Some((phi, cert, draws))
}

/// Deforms an accepted repeated-line quintic along the family where the two
/// contact lines move together. The draw is the one the plain constructor
/// accepted for this seed, so t = 0 reproduces that instance exactly and
/// all t share matched draws.
pub fn quintic_degeneration(
    field: &PrimeField,
    seed: u64,
    t: u64,
) -> Result<(SurfaceInstance, VerificationReport), FamilyError> {
    // locate the accepted attempt (t-independent)
    let (base, base_report) = quintic_case3(field, seed)?;
    if t % field.p() == 0 {
        return Ok((base, base_report));
    }
    let accepted_attempt = base.attempts - 1;
    let mut rng = rng_for(FamilyTag::QuinticCase3, seed, accepted_attempt);
    let (phi, certificate, draws) = build_case3_like(field, &mut rng, t % field.p())
        .expect("accepted draw stays non-degenerate");
    let inst = SurfaceInstance {
        family: FamilyTag::Quintic2a,
        seed,
        prime: field.p(),
        deformation_t: Some(t % field.p()),
        phi,
        certificate,
        predicted: predicted_census(FamilyTag::Quintic2a),
        draws,
        ansatz: None,
        attempts: base.attempts,
        rejections: base.rejections.clone(),
    };
    let report = certify::verify_family(&inst, &VerifyOptions::default());
    if report.pass() {
        Ok((inst, report))
    } else {
        let why = report
            .first_failure()
            .map(|c| format!("{}: {}", c.name, c.detail))
            .unwrap_or_default();
        Err(FamilyError::DegenerateInstance {
            family: format!("quintic degeneration at t={t}"),
            attempts: 1,
            last: why,
        })
    }
}

/// Generic sextic of the first kind: phi = s'*s'' - s^3 with eighteen cusps
/// at the 3*3*2 contact intersection.
pub fn sextic_a(
    field: &PrimeField,
    seed: u64,
) -> Result<(SurfaceInstance, VerificationReport), FamilyError> {
    search(FamilyTag::SexticA, field, seed, move |rng| {
        let s1 = Poly::random_homogeneous(field, 4, 3, rng);
        let s2 = Poly::random_homogeneous(field, 4, 3, rng);
        let s = Poly::random_homogeneous(field, 4, 2, rng);
        let phi = s1.mul(&s2).sub(&s.pow(3));
        if phi.homogeneous_degree() != Some(6) {
            return None;
        }
        let draws = BTreeMap::from([
            ("s'".into(), s1.clone()),
            ("s''".into(), s2.clone()),
            ("s".into(), s.clone()),
        ]);
        let residual = Poly::constant(field, 4, field.one());
        let cert = CertificateData::ContactCubics { s1, s2, s, residual };
        Some((phi, cert, draws))
    })
}

/// Generic sextic of the second kind: phi = l'*l''*f - g^3 with the
/// eighteen cusps split 2 + 8 + 8 across the three predicted loci.
pub fn sextic_b(
    field: &PrimeField,
    seed: u64,
) -> Result<(SurfaceInstance, VerificationReport), FamilyError> {
    search(FamilyTag::SexticB, field, seed, move |rng| {
        let l1 = Poly::random_homogeneous(field, 4, 1, rng);
        let l2 = Poly::random_homogeneous(field, 4, 1, rng);
        let g = Poly::random_homogeneous(field, 4, 2, rng);
        let f4 = Poly::random_homogeneous(field, 4, 4, rng);
        let phi = l1.mul(&l2).mul(&f4).sub(&g.pow(3));
        if phi.homogeneous_degree() != Some(6) {
            return None;
        }
        let draws = BTreeMap::from([
            ("l'".into(), l1.clone()),
            ("l''".into(), l2.clone()),
            ("g".into(), g.clone()),
            ("f".into(), f4.clone()),
        ]);
        let cert = CertificateData::SexticB { l1, l2, g, f: f4 };
        Some((phi, cert, draws))
    })
}

const QUARTIC_VARIANTS: [&str; 3] = ["product-split", "product-split-const", "symmetric-cubes"];

/// Search-based quartic constructor.
///
/// Three ansatz variants share each draw of planes a, b, linear forms
/// m', m'', quadric rho, and scalar c; all of them force the identity
/// s'*s'' - s^3 = phi * rho exactly, and the verifier decides which (if
/// any) yields the six-cusp census:
///
/// * product-split:        s = a*b,       s' = a^2*b + rho*m', s'' = a*b^2 + rho*m''
/// * product-split-const:  s = a*b + c*rho, same s', s''
/// * symmetric-cubes:      s = a*b,       s' = a^3 + rho*m',   s'' = b^3 + rho*m''
///
/// The census is never assumed: an instance is returned only after full
/// verification, and the search fails hard once the budget is exhausted.
pub fn quartic_six_cusps(
    field: &PrimeField,
    seed: u64,
) -> Result<(SurfaceInstance, VerificationReport), FamilyError> {
    let mut rejections = vec![];
    for attempt in 0..MAX_RESEEDS {
        let mut rng = rng_for(FamilyTag::Quartic6, seed, attempt);
        let a = Poly::random_homogeneous(field, 4, 1, &mut rng);
        let b = Poly::random_homogeneous(field, 4, 1, &mut rng);
        let m1 = Poly::random_homogeneous(field, 4, 1, &mut rng);
        let m2 = Poly::random_homogeneous(field, 4, 1, &mut rng);
        let rho = Poly::random_homogeneous(field, 4, 2, &mut rng);
        let c = field.sample(&mut rng);
        for variant in QUARTIC_VARIANTS {
            let (s, s1, s2) = match variant {
                "product-split" => (
                    a.mul(&b),
                    a.pow(2).mul(&b).add(&rho.mul(&m1)),
                    a.mul(&b.pow(2)).add(&rho.mul(&m2)),
                ),
                "product-split-const" => (
                    a.mul(&b).add(&rho.mul_scalar(&c)),
                    a.pow(2).mul(&b).add(&rho.mul(&m1)),
                    a.mul(&b.pow(2)).add(&rho.mul(&m2)),
                ),
                _ => (
                    a.mul(&b),
                    a.pow(3).add(&rho.mul(&m1)),
                    b.pow(3).add(&rho.mul(&m2)),
                ),
            };
            let r = s1.mul(&s2).sub(&s.pow(3));
            let Ok(Some(phi)) = r.exact_div(&rho) else {
                rejections.push(format!("attempt {attempt} [{variant}]: rho fails to divide"));
                continue;
            };
            if phi.homogeneous_degree() != Some(4) {
                rejections.push(format!("attempt {attempt} [{variant}]: wrong degree"));
                continue;
            }
            let draws = BTreeMap::from([
                ("a".into(), a.clone()),
                ("b".into(), b.clone()),
                ("m'".into(), m1.clone()),
                ("m''".into(), m2.clone()),
                ("rho".into(), rho.clone()),
            ]);
            let cert =
                CertificateData::ContactCubics { s1, s2, s, residual: rho.clone() };
            let inst = SurfaceInstance {
                family: FamilyTag::Quartic6,
                seed,
                prime: field.p(),
                deformation_t: None,
                phi,
                certificate: cert,
                predicted: predicted_census(FamilyTag::Quartic6),
                draws,
                ansatz: Some(variant.to_string()),
                attempts: attempt + 1,
                rejections: rejections.clone(),
            };
            let report = certify::verify_family(&inst, &VerifyOptions::default());
            if report.pass() {
                return Ok((inst, report));
            }
            let why = report
                .first_failure()
                .map(|c| format!("{}: {}", c.name, c.detail))
                .unwrap_or_else(|| "unknown".into());
            rejections.push(format!("attempt {attempt} [{variant}]: {why}"));
        }
    }
    Err(FamilyError::ConstructionFailed {
        attempts: MAX_RESEEDS,
        variants: QUARTIC_VARIANTS.len(),
        last: rejections.last().cloned().unwrap_or_default(),
    })
}

#[cfg(test)]
mod tests;
