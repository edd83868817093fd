//! Constructive certification of 3-divisibility.
//!
//! The hallmark of a minimal 3-divisible cusp configuration is the contact
//! identity: cubics s', s'' and a quadric s through the cusps with
//! `s'*s'' - s^3 = phi * residual` exactly (residual a quadric, plane, or
//! constant as the degree is 4, 5, 6) — or, in the degenerate sextic
//! branch, `phi = l'*l''*f - g^3`. Certification here means exact
//! polynomial identity plus exact incidence of every cusp, never a lattice
//! computation.

use crate::families::{CertificateData, FamilyTag, SurfaceInstance};
use crate::field::{ExtElem, ExtField, Field, PrimeField};
use crate::poly::{Poly, PolyError};
use crate::report::{
    tool_version, CensusBlock, CertificateBlock, CheckLine, ExpectedBlock, ExtensionCount,
    InstanceBlock, LocusCount, PointReport, Timings, VerificationReport, SCHEMA_VERSION,
};
use crate::singular::{
    chart_vars, find_singular_points, localize, sqh_check, Classification, SingularError,
    SingularScheme,
};
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CertifyError {
    #[error("certificate degrees are wrong: {0}")]
    DegreeMismatch(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Outcome of the contact-identity test `s'*s'' - s^3 = phi * residual`.
#[derive(Debug, Clone)]
pub struct IdentityOutcome {
    pub identity_ok: bool,
    pub vanishes_identically: bool,
    pub residual: Option<Poly<PrimeField>>,
}

/// Checks the exact factorization of `s'*s'' - s^3` through phi. A
/// quotient of degree `6 - deg phi` certifies the identity; an identically
/// zero difference signals the alternative sextic branch.
pub fn contact_identity_check(
    phi: &Poly<PrimeField>,
    s1: &Poly<PrimeField>,
    s2: &Poly<PrimeField>,
    s: &Poly<PrimeField>,
) -> Result<IdentityOutcome, CertifyError> {
    let d = phi
        .homogeneous_degree()
        .filter(|d| (4..=6).contains(d))
        .ok_or_else(|| CertifyError::DegreeMismatch("phi must be homogeneous of degree 4..6".into()))?;
    if s1.homogeneous_degree() != Some(3)
        || s2.homogeneous_degree() != Some(3)
        || s.homogeneous_degree() != Some(2)
    {
        return Err(CertifyError::DegreeMismatch(
            "want deg s' = deg s'' = 3 and deg s = 2".into(),
        ));
    }
    let r = s1.mul(s2).sub(&s.pow(3));
    if r.is_zero() {
        return Ok(IdentityOutcome {
            identity_ok: false,
            vanishes_identically: true,
            residual: None,
        });
    }
    let q = r.exact_div(phi)?;
    match q {
        Some(res) if res.homogeneous_degree() == Some(6 - d) || (d == 6 && res.is_constant() && !res.is_zero()) => {
            Ok(IdentityOutcome { identity_ok: true, vanishes_identically: false, residual: Some(res) })
        }
        _ => Ok(IdentityOutcome { identity_ok: false, vanishes_identically: false, residual: None }),
    }
}

/// Exact re-expansion check of the alternative sextic branch.
pub fn sextic_b_identity_check(
    phi: &Poly<PrimeField>,
    l1: &Poly<PrimeField>,
    l2: &Poly<PrimeField>,
    g: &Poly<PrimeField>,
    f: &Poly<PrimeField>,
) -> bool {
    l1.mul(l2).mul(f).sub(&g.pow(3)) == *phi
}

#[derive(Debug, Clone)]
pub struct IncidenceOutcome {
    pub per_cusp: Vec<bool>,
    pub all_ok: bool,
    pub locus_counts: Vec<(String, usize)>,
}

fn vanishes_at(p: &Poly<PrimeField>, ext: &ExtField, point: &[ExtElem; 4]) -> bool {
    ext.is_zero(&p.embed_ext(ext).evaluate(point.as_slice()))
}

/// Checks that every cusp lies on the certificate surfaces: on
/// s' = s'' = s = 0 for contact-cubic certificates, or on one of the three
/// predicted loci for the alternative sextic branch. The degree-3 surface
/// carries no contact certificate and its incidence is vacuously true.
pub fn cusp_incidence_check(
    cert: &CertificateData,
    scheme: &SingularScheme,
) -> IncidenceOutcome {
    match cert {
        CertificateData::TripleCover => IncidenceOutcome {
            per_cusp: vec![true; scheme.points.len()],
            all_ok: true,
            locus_counts: vec![],
        },
        CertificateData::ContactCubics { s1, s2, s, .. } => {
            let mut per_cusp = vec![];
            let mut on_triple = 0usize;
            for pt in &scheme.points {
                let proj = pt.projective();
                let ok = vanishes_at(s1, &pt.field, &proj)
                    && vanishes_at(s2, &pt.field, &proj)
                    && vanishes_at(s, &pt.field, &proj);
                if ok {
                    on_triple += 1;
                }
                per_cusp.push(ok);
            }
            IncidenceOutcome {
                all_ok: per_cusp.iter().all(|b| *b),
                per_cusp,
                locus_counts: vec![("s'=s''=s=0".into(), on_triple)],
            }
        }
        CertificateData::SexticB { l1, l2, g, f } => {
            let mut per_cusp = vec![];
            let mut counts = [0usize; 3];
            for pt in &scheme.points {
                let proj = pt.projective();
                let on_l1 = vanishes_at(l1, &pt.field, &proj);
                let on_l2 = vanishes_at(l2, &pt.field, &proj);
                let on_g = vanishes_at(g, &pt.field, &proj);
                let on_f = vanishes_at(f, &pt.field, &proj);
                let loci = [on_l1 && on_l2 && on_g, on_l1 && on_f && on_g, on_l2 && on_f && on_g];
                for (i, hit) in loci.iter().enumerate() {
                    if *hit {
                        counts[i] += 1;
                    }
                }
                per_cusp.push(loci.iter().any(|b| *b));
            }
            IncidenceOutcome {
                all_ok: per_cusp.iter().all(|b| *b),
                per_cusp,
                locus_counts: vec![
                    ("l'=l''=g=0".into(), counts[0]),
                    ("l'=f=g=0".into(), counts[1]),
                    ("l''=f=g=0".into(), counts[2]),
                ],
            }
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Extra salt for the solver's direction stream; reports stay
    /// reproducible because the instance seed feeds in as well.
    pub solver_seed: u64,
}

fn fmt_ext(ext: &ExtField, v: &ExtElem) -> String {
    ext.fmt_elem(v)
}

fn fmt_modulus(ext: &ExtField) -> String {
    let m = ext.modulus();
    let mut parts = vec![];
    for (i, c) in m.iter().enumerate().rev() {
        if *c == 0 {
            continue;
        }
        let var = match i {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{i}"),
        };
        parts.push(if var.is_empty() {
            c.to_string()
        } else if *c == 1 {
            var
        } else {
            format!("{c}*{var}")
        });
    }
    parts.join(" + ")
}

/// Runs the full verification pipeline on an instance: census,
/// classification, certificate identity, cusp incidence, and the
/// family-specific locus checks. Failures are report content, never errors.
pub fn verify_family(inst: &SurfaceInstance, opts: &VerifyOptions) -> VerificationReport {
    let t_start = Instant::now();
    let solver_seed = inst.seed ^ opts.solver_seed;
    let census_result = find_singular_points(&inst.phi, solver_seed);
    let census_ms = t_start.elapsed().as_millis() as u64;

    let mut checks: Vec<CheckLine> = vec![];
    fn push(checks: &mut Vec<CheckLine>, name: &str, pass: bool, detail: String) {
        checks.push(CheckLine { name: name.into(), pass, detail });
    }

    let scheme = match census_result {
        Ok(s) => s,
        Err(e) => {
            push(&mut checks, "singular_locus_finite", false, e.to_string());
            return assemble_report(inst, None, checks, empty_certificate_block(inst), census_ms, 0, t_start);
        }
    };
    push(
        &mut checks,
        "singular_locus_finite",
        true,
        format!("cell quotient dims {:?}", scheme.cell_quotient_dims),
    );

    // census vs the minimal table
    let expected_n = inst.predicted.n;
    push(
        &mut checks,
        "cusp_count",
        scheme.count() == expected_n,
        format!("found {}, expected {}", scheme.count(), expected_n),
    );
    let all_a2 = scheme.all_a2();
    let worst = scheme
        .points
        .iter()
        .find(|p| p.classification != Classification::A2)
        .map(|p| format!("found {} (tau={}, corank={})", p.classification.label(), p.tjurina, p.hessian_corank))
        .unwrap_or_else(|| "all points are A2".into());
    push(&mut checks, "all_points_a2", all_a2, worst);

    let t_cert = Instant::now();
    let cert_block = certificate_checks(inst, &scheme, &mut checks);
    family_checks(inst, &scheme, &mut checks);
    let cert_ms = t_cert.elapsed().as_millis() as u64;

    assemble_report(inst, Some(&scheme), checks, cert_block, census_ms, cert_ms, t_start)
}

fn empty_certificate_block(inst: &SurfaceInstance) -> CertificateBlock {
    CertificateBlock {
        kind: certificate_kind(&inst.certificate).into(),
        polynomials: certificate_polys(&inst.certificate),
        identity_ok: false,
        vanishes_identically: false,
        residual_degree: None,
        residual: None,
        incidence_ok: false,
        per_cusp_incidence: vec![],
        locus_counts: vec![],
        sqh_confirmed: None,
    }
}

fn certificate_kind(cert: &CertificateData) -> &'static str {
    match cert {
        CertificateData::TripleCover => "triple_cover",
        CertificateData::ContactCubics { .. } => "contact_cubics",
        CertificateData::SexticB { .. } => "sextic_b",
    }
}

fn certificate_polys(cert: &CertificateData) -> BTreeMap<String, String> {
    match cert {
        CertificateData::TripleCover => BTreeMap::new(),
        CertificateData::ContactCubics { s1, s2, s, residual } => BTreeMap::from([
            ("s'".into(), s1.to_string()),
            ("s''".into(), s2.to_string()),
            ("s".into(), s.to_string()),
            ("residual".into(), residual.to_string()),
        ]),
        CertificateData::SexticB { l1, l2, g, f } => BTreeMap::from([
            ("l'".into(), l1.to_string()),
            ("l''".into(), l2.to_string()),
            ("g".into(), g.to_string()),
            ("f".into(), f.to_string()),
        ]),
    }
}

fn certificate_checks(
    inst: &SurfaceInstance,
    scheme: &SingularScheme,
    checks: &mut Vec<CheckLine>,
) -> CertificateBlock {
    let mut block = empty_certificate_block(inst);
    match &inst.certificate {
        CertificateData::TripleCover => {
            // self-certifying triple-cover form; flagged, not computed
            block.identity_ok = true;
            block.incidence_ok = true;
            block.per_cusp_incidence = vec![true; scheme.points.len()];
            checks.push(CheckLine {
                name: "certificate_identity".into(),
                pass: true,
                detail: "degree 3 carries no contact certificate; equation is the triple-cover form".into(),
            });
            checks.push(CheckLine {
                name: "cusp_incidence".into(),
                pass: true,
                detail: "vacuous for the triple-cover form".into(),
            });
        }
        CertificateData::ContactCubics { s1, s2, s, residual } => {
            let outcome = contact_identity_check(&inst.phi, s1, s2, s);
            let (ok, detail) = match &outcome {
                Ok(o) if o.identity_ok => {
                    let res = o.residual.as_ref().unwrap();
                    let matches_declared = res.monic() == residual.monic();
                    block.residual_degree = res.homogeneous_degree();
                    block.residual = Some(res.to_string());
                    (
                        matches_declared,
                        format!(
                            "s'*s'' - s^3 = phi * ({}), declared residual {}",
                            res,
                            if matches_declared { "matches" } else { "differs" }
                        ),
                    )
                }
                Ok(o) if o.vanishes_identically => {
                    block.vanishes_identically = true;
                    (false, "s'*s'' - s^3 vanishes identically (alternative sextic branch)".into())
                }
                Ok(_) => (false, "phi does not divide s'*s'' - s^3".into()),
                Err(e) => (false, e.to_string()),
            };
            block.identity_ok = ok;
            checks.push(CheckLine { name: "certificate_identity".into(), pass: ok, detail });

            let distinct = s1.monic() != s2.monic();
            checks.push(CheckLine {
                name: "contact_cubics_distinct".into(),
                pass: distinct,
                detail: if distinct { "s' and s'' define distinct surfaces".into() } else { "s' proportional to s''".into() },
            });

            let inc = cusp_incidence_check(&inst.certificate, scheme);
            block.incidence_ok = inc.all_ok;
            block.per_cusp_incidence = inc.per_cusp.clone();
            block.locus_counts = inc
                .locus_counts
                .iter()
                .map(|(l, c)| LocusCount { locus: l.clone(), count: *c })
                .collect();
            checks.push(CheckLine {
                name: "cusp_incidence".into(),
                pass: inc.all_ok,
                detail: format!("{} of {} cusps on s'=s''=s=0", inc.per_cusp.iter().filter(|b| **b).count(), inc.per_cusp.len()),
            });

            irreducibility_checks(inst, checks, &[("s'", s1), ("s''", s2), ("s", s), ("residual", residual)]);
        }
        CertificateData::SexticB { l1, l2, g, f } => {
            let ok = sextic_b_identity_check(&inst.phi, l1, l2, g, f);
            block.identity_ok = ok;
            checks.push(CheckLine {
                name: "certificate_identity".into(),
                pass: ok,
                detail: if ok { "phi = l'*l''*f - g^3 exactly".into() } else { "identity fails".into() },
            });

            let inc = cusp_incidence_check(&inst.certificate, scheme);
            block.incidence_ok = inc.all_ok;
            block.per_cusp_incidence = inc.per_cusp.clone();
            block.locus_counts = inc
                .locus_counts
                .iter()
                .map(|(l, c)| LocusCount { locus: l.clone(), count: *c })
                .collect();
            checks.push(CheckLine {
                name: "cusp_incidence".into(),
                pass: inc.all_ok,
                detail: format!("locus counts {:?}", inc.locus_counts),
            });

            irreducibility_checks(inst, checks, &[("l'", l1), ("l''", l2), ("g", g), ("f", f)]);
        }
    }
    block
}

/// phi must not be divisible by any certificate factor.
fn irreducibility_checks(
    inst: &SurfaceInstance,
    checks: &mut Vec<CheckLine>,
    factors: &[(&str, &Poly<PrimeField>)],
) {
    let mut offender = None;
    for (name, p) in factors {
        if p.is_constant() {
            continue;
        }
        if p.homogeneous_degree().unwrap_or(0) >= inst.phi.homogeneous_degree().unwrap_or(0) {
            continue;
        }
        if let Ok(Some(_)) = inst.phi.exact_div(p) {
            offender = Some(name.to_string());
            break;
        }
    }
    checks.push(CheckLine {
        name: "phi_not_divisible_by_certificate_factors".into(),
        pass: offender.is_none(),
        detail: offender
            .map(|n| format!("{n} divides phi"))
            .unwrap_or_else(|| "no certificate factor divides phi".into()),
    });
}

/// Locus checks that depend on the family.
fn family_checks(inst: &SurfaceInstance, scheme: &SingularScheme, checks: &mut Vec<CheckLine>) {
    let fp = *inst.field();
    match inst.family {
        FamilyTag::Cubic3 => {
            let all_coordinate_points = scheme.points.iter().all(|p| {
                p.is_rational() && p.coords.iter().all(|c| p.field.is_zero(c)) && p.chart >= 1
            });
            checks.push(CheckLine {
                name: "cusps_at_coordinate_points".into(),
                pass: all_coordinate_points,
                detail: "expected [0:1:0:0], [0:0:1:0], [0:0:0:1]".into(),
            });
        }
        FamilyTag::Quintic2a => {
            // every cusp lies off the residual plane x0 = 0: chart 0 only
            let off_plane = scheme.points.iter().filter(|p| p.chart == 0).count();
            checks.push(CheckLine {
                name: "no_cusp_on_residual_plane".into(),
                pass: off_plane == scheme.count(),
                detail: format!("{off_plane} of {} cusps have x0 != 0", scheme.count()),
            });
        }
        FamilyTag::QuinticCase3 => {
            let on_line: Vec<_> = scheme
                .points
                .iter()
                .filter(|p| p.chart >= 2) // x0 = x1 = 0 cells
                .collect();
            let off_plane = scheme.points.iter().filter(|p| p.chart == 0).count();
            checks.push(CheckLine {
                name: "line_cusp_split".into(),
                pass: off_plane == 8 && on_line.len() == 4,
                detail: format!("{} off the plane, {} on the line x0=x1=0", off_plane, on_line.len()),
            });

            // the line cusps sit exactly where q'q'' vanishes on the line
            let q1 = &inst.draws["q'"];
            let q2 = &inst.draws["q''"];
            let qq = q1.mul(q2);
            let at_roots = on_line.iter().all(|p| vanishes_at(&qq, &p.field, &p.projective()));
            checks.push(CheckLine {
                name: "line_cusps_at_qq_roots".into(),
                pass: at_roots,
                detail: "line cusps are roots of q'*q'' on x0=x1=0".into(),
            });

            // independent confirmation by semi-quasi-homogeneity
            let mut sqh_all = vec![];
            for p in &on_line {
                sqh_all.push(line_cusp_sqh(inst, p, &fp));
            }
            checks.push(CheckLine {
                name: "line_cusps_sqh_confirmed".into(),
                pass: !sqh_all.is_empty() && sqh_all.iter().all(|b| *b),
                detail: format!("{:?} with weights (1/2, 1/3, 1/2) in (x0, x1, q')", sqh_all),
            });
        }
        FamilyTag::SexticA => {
            checks.push(CheckLine {
                name: "total_singular_length".into(),
                pass: scheme.total_length == 36,
                detail: format!("total length {} (want 36 = 18 * tau(A2))", scheme.total_length),
            });
        }
        FamilyTag::SexticB => {
            // the split itself is asserted via the certificate locus counts
            let want = vec![2usize, 8, 8];
            let got: Vec<usize> = match &inst.certificate {
                CertificateData::SexticB { .. } => {
                    let inc = cusp_incidence_check(&inst.certificate, scheme);
                    inc.locus_counts.iter().map(|(_, c)| *c).collect()
                }
                _ => vec![],
            };
            checks.push(CheckLine {
                name: "locus_split_2_8_8".into(),
                pass: got == want,
                detail: format!("locus counts {got:?}"),
            });
        }
        FamilyTag::Quartic6 => {
            let res_deg = match &inst.certificate {
                CertificateData::ContactCubics { residual, .. } => residual.homogeneous_degree(),
                _ => None,
            };
            checks.push(CheckLine {
                name: "residual_is_a_quadric".into(),
                pass: res_deg == Some(2),
                detail: format!("residual degree {res_deg:?}"),
            });
        }
    }

    // expected locus table from the prediction
    let predicted_total: usize = inst.predicted.loci.iter().map(|(_, c)| *c).sum();
    checks.push(CheckLine {
        name: "predicted_locus_counts_sum".into(),
        pass: predicted_total == inst.predicted.n,
        detail: format!("{predicted_total} = {}", inst.predicted.n),
    });
}

/// SQH confirmation at a line cusp of the repeated-line quintic: local
/// coordinates adapted so the third coordinate follows the vanishing one of
/// q', q''; weights 1/2, 1/3, 1/2 for (x0, x1, that coordinate).
fn line_cusp_sqh(
    inst: &SurfaceInstance,
    p: &crate::singular::SingularPoint,
    _fp: &PrimeField,
) -> bool {
    let ext = &p.field;
    let proj = p.projective();
    let q1 = &inst.draws["q'"];
    let q2 = &inst.draws["q''"];
    // exactly one of q', q'' vanishes at a generic line cusp
    let v1 = vanishes_at(q1, ext, &proj);
    let v2 = vanishes_at(q2, ext, &proj);
    let q = match (v1, v2) {
        (true, false) => q1,
        (false, true) => q2,
        _ => return false,
    };
    // local equations at the point
    let f_loc = localize(&inst.phi.embed_ext(ext), p.chart, &p.coords);
    let q_loc = localize(&q.embed_ext(ext), p.chart, &p.coords);
    // chart vars are (x0, x1, w) with w the remaining coordinate; align the
    // third axis with the linear part of q
    debug_assert_eq!(chart_vars(p.chart)[0], 0);
    debug_assert_eq!(chart_vars(p.chart)[1], 1);
    let lin: Vec<ExtElem> = (0..3)
        .map(|i| {
            let mut m = crate::poly::Monomial::one();
            m.e[i] = 1;
            q_loc.coeff(&m)
        })
        .collect();
    let c2 = lin[2].clone();
    let Ok(c2_inv) = ext.inv(&c2) else {
        return false; // q does not cut the line transversally here
    };
    // v0 = u0, v1 = u1, v2 = (u2 - c0 u0 - c1 u1) / c2
    let u0 = Poly::variable(ext, 3, 0);
    let u1 = Poly::variable(ext, 3, 1);
    let u2 = Poly::variable(ext, 3, 2);
    let v2_image = u2
        .sub(&u0.mul_scalar(&lin[0]))
        .sub(&u1.mul_scalar(&lin[1]))
        .mul_scalar(&c2_inv);
    let adapted = f_loc.substitute(&[u0, u1, v2_image]);
    sqh_check(&adapted, [(1, 2), (1, 3), (1, 2)])
}

fn assemble_report(
    inst: &SurfaceInstance,
    scheme: Option<&SingularScheme>,
    mut checks: Vec<CheckLine>,
    cert_block: CertificateBlock,
    census_ms: u64,
    cert_ms: u64,
    t_start: Instant,
) -> VerificationReport {
    let census = match scheme {
        None => CensusBlock {
            singular_count: 0,
            total_length: 0,
            all_a2: false,
            cell_quotient_dims: [0; 4],
            by_extension_degree: vec![],
            points: vec![],
        },
        Some(s) => {
            let mut by_ext: BTreeMap<usize, usize> = BTreeMap::new();
            for p in &s.points {
                *by_ext.entry(p.field.degree()).or_default() += 1;
            }
            CensusBlock {
                singular_count: s.count(),
                total_length: s.total_length,
                all_a2: s.all_a2(),
                cell_quotient_dims: s.cell_quotient_dims,
                by_extension_degree: by_ext
                    .into_iter()
                    .map(|(k, c)| ExtensionCount { extension_degree: k, count: c })
                    .collect(),
                points: s
                    .points
                    .iter()
                    .map(|p| PointReport {
                        chart: p.chart,
                        extension_degree: p.field.degree(),
                        modulus: fmt_modulus(&p.field),
                        affine_coords: p.coords.iter().map(|c| fmt_ext(&p.field, c)).collect(),
                        projective: p.projective().iter().map(|c| fmt_ext(&p.field, c)).collect(),
                        tjurina: p.tjurina,
                        hessian_corank: p.hessian_corank,
                        classification: p.classification.label(),
                        cell_multiplicity: p.cell_multiplicity,
                    })
                    .collect(),
            }
        }
    };

    let verdict = if checks.iter().all(|c| c.pass) { "PASS" } else { "FAIL" };
    checks.shrink_to_fit();
    VerificationReport {
        schema_version: SCHEMA_VERSION.into(),
        tool_version: tool_version(),
        verdict: verdict.into(),
        family: Some(inst.family.as_str().into()),
        seed: Some(inst.seed),
        prime: inst.prime,
        deformation_t: inst.deformation_t,
        instance: InstanceBlock {
            degree: inst.degree(),
            phi: inst.phi.to_string(),
            draws: inst
                .draws
                .iter()
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect(),
        },
        expected: Some(ExpectedBlock {
            cusp_count: inst.predicted.n,
            loci: inst
                .predicted
                .loci
                .iter()
                .map(|(l, c)| LocusCount { locus: l.clone(), count: *c })
                .collect(),
            source: inst.predicted.source.clone(),
        }),
        census,
        certificate: cert_block,
        checks,
        attempts: Some(inst.attempts),
        rejections: inst.rejections.clone(),
        timings_ms: Timings {
            census_ms,
            certificate_ms: cert_ms,
            total_ms: t_start.elapsed().as_millis() as u64,
        },
    }
}

/// Census-only verification of a user-supplied surface: no certificate is
/// available, so the verdict rests on the cusp count matching the minimal
/// table for the degree and on every point classifying as A2.
pub fn verify_input_surface(
    phi: &Poly<PrimeField>,
    seed: u64,
) -> Result<VerificationReport, SingularError> {
    let t_start = Instant::now();
    let mut checks = vec![];
    let census_result = find_singular_points(phi, seed);
    let census_ms = t_start.elapsed().as_millis() as u64;
    let degree = phi.homogeneous_degree().ok_or(SingularError::NotHomogeneous)?;

    let scheme = match census_result {
        Ok(s) => s,
        Err(SingularError::PositiveDimensionalSingularLocus(c)) => {
            checks.push(CheckLine {
                name: "singular_locus_finite".into(),
                pass: false,
                detail: format!("positive-dimensional singular locus (chart {c})"),
            });
            return Ok(user_report(phi, degree, None, checks, census_ms, t_start));
        }
        Err(e) => return Err(e),
    };
    checks.push(CheckLine {
        name: "singular_locus_finite".into(),
        pass: true,
        detail: format!("cell quotient dims {:?}", scheme.cell_quotient_dims),
    });
    let want = crate::families::minimal_cusps(degree);
    checks.push(CheckLine {
        name: "cusp_count".into(),
        pass: Some(scheme.count()) == want,
        detail: format!("found {}, minimal table wants {want:?} for degree {degree}", scheme.count()),
    });
    checks.push(CheckLine {
        name: "all_points_a2".into(),
        pass: scheme.all_a2(),
        detail: if scheme.all_a2() { "all points are A2".into() } else { "non-A2 point present".into() },
    });
    Ok(user_report(phi, degree, Some(&scheme), checks, census_ms, t_start))
}

fn user_report(
    phi: &Poly<PrimeField>,
    degree: usize,
    scheme: Option<&SingularScheme>,
    checks: Vec<CheckLine>,
    census_ms: u64,
    t_start: Instant,
) -> VerificationReport {
    let census = match scheme {
        None => CensusBlock {
            singular_count: 0,
            total_length: 0,
            all_a2: false,
            cell_quotient_dims: [0; 4],
            by_extension_degree: vec![],
            points: vec![],
        },
        Some(s) => {
            let mut by_ext: BTreeMap<usize, usize> = BTreeMap::new();
            for p in &s.points {
                *by_ext.entry(p.field.degree()).or_default() += 1;
            }
            CensusBlock {
                singular_count: s.count(),
                total_length: s.total_length,
                all_a2: s.all_a2(),
                cell_quotient_dims: s.cell_quotient_dims,
                by_extension_degree: by_ext
                    .into_iter()
                    .map(|(k, c)| ExtensionCount { extension_degree: k, count: c })
                    .collect(),
                points: s
                    .points
                    .iter()
                    .map(|p| PointReport {
                        chart: p.chart,
                        extension_degree: p.field.degree(),
                        modulus: fmt_modulus(&p.field),
                        affine_coords: p.coords.iter().map(|c| fmt_ext(&p.field, c)).collect(),
                        projective: p.projective().iter().map(|c| fmt_ext(&p.field, c)).collect(),
                        tjurina: p.tjurina,
                        hessian_corank: p.hessian_corank,
                        classification: p.classification.label(),
                        cell_multiplicity: p.cell_multiplicity,
                    })
                    .collect(),
            }
        }
    };
    let verdict = if checks.iter().all(|c| c.pass) { "PASS" } else { "FAIL" };
    VerificationReport {
        schema_version: SCHEMA_VERSION.into(),
        tool_version: tool_version(),
        verdict: verdict.into(),
        family: None,
        seed: None,
        prime: phi.field().p(),
        deformation_t: None,
        instance: InstanceBlock { degree, phi: phi.to_string(), draws: BTreeMap::new() },
        expected: None,
        census,
        certificate: CertificateBlock {
            kind: "none".into(),
            polynomials: BTreeMap::new(),
            identity_ok: false,
            vanishes_identically: false,
            residual_degree: None,
            residual: None,
            incidence_ok: false,
            per_cusp_incidence: vec![],
            locus_counts: vec![],
            sqh_confirmed: None,
        },
        checks,
        attempts: None,
        rejections: vec![],
        timings_ms: Timings {
            census_ms,
            certificate_ms: 0,
            total_ms: t_start.elapsed().as_millis() as u64,
        },
    }
}
