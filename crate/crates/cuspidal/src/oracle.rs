//! Independent brute-force verifier.
//!
//! Exhaustively scans all points of P3(F_q) in normalized form and keeps
//! those where all four partials vanish. This path deliberately shares
//! nothing with the Groebner engine beyond field and polynomial arithmetic,
//! so agreement between the two pipelines is a genuine cross-validation.

use crate::field::{Field, PrimeField};
use crate::poly::Poly;
use crate::singular::SingularScheme;
use rayon::prelude::*;

/// Largest oracle prime; the scan touches q^3 + q^2 + q + 1 points.
pub const MAX_ORACLE_PRIME: u64 = 257;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("oracle prime {0} too large (max {MAX_ORACLE_PRIME})")]
    FieldTooLarge(u64),
    #[error("oracle prime must match the coefficient field ({0} vs {1})")]
    FieldMismatch(u64, u64),
    #[error("input must be homogeneous of degree >= 2")]
    NotHomogeneous,
}

/// Rational singular points found by exhaustive scan, normalized so the
/// first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    pub q: u64,
    pub points_scanned: u64,
    pub points: Vec<[u64; 4]>,
}

/// Scans all of P3(F_q) for points where the four partials of phi vanish.
/// Deterministic and order-stable: points come out sorted by stratum, then
/// lexicographically.
pub fn scan_projective(phi: &Poly<PrimeField>, q: u64) -> Result<ScanResult, OracleError> {
    if q > MAX_ORACLE_PRIME {
        return Err(OracleError::FieldTooLarge(q));
    }
    let field = *phi.field();
    if field.p() != q {
        return Err(OracleError::FieldMismatch(field.p(), q));
    }
    if phi.homogeneous_degree().map_or(true, |d| d < 2) {
        return Err(OracleError::NotHomogeneous);
    }
    let partials: Vec<Poly<PrimeField>> = (0..4).map(|i| phi.derivative(i)).collect();
    let singular_at = |pt: &[u64; 4]| -> bool {
        partials.iter().all(|g| field.is_zero(&g.evaluate(pt.as_slice())))
    };

    // strata by leading 1: [1:a:b:c], [0:1:b:c], [0:0:1:c], [0:0:0:1]
    let mut points: Vec<[u64; 4]> = (0..q)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut local = vec![];
            for b in 0..q {
                for c in 0..q {
                    let pt = [1, a, b, c];
                    if singular_at(&pt) {
                        local.push(pt);
                    }
                }
            }
            local
        })
        .collect();
    for b in 0..q {
        for c in 0..q {
            let pt = [0, 1, b, c];
            if singular_at(&pt) {
                points.push(pt);
            }
        }
    }
    for c in 0..q {
        let pt = [0, 0, 1, c];
        if singular_at(&pt) {
            points.push(pt);
        }
    }
    if singular_at(&[0, 0, 0, 1]) {
        points.push([0, 0, 0, 1]);
    }
    Ok(ScanResult { q, points_scanned: q * q * q + q * q + q + 1, points })
}

/// True when the scan's point set equals the F_q-rational subset of the
/// solver census (extension-field points excluded on both sides). Also
/// insists the scan count never exceeds the geometric count.
pub fn cross_check(
    phi: &Poly<PrimeField>,
    scheme: &SingularScheme,
    q: u64,
) -> Result<bool, OracleError> {
    let scan = scan_projective(phi, q)?;
    let mut scanned = scan.points.clone();
    scanned.sort();
    let mut rational: Vec<[u64; 4]> = vec![];
    for p in &scheme.points {
        if !p.is_rational() {
            continue;
        }
        let proj = p.projective();
        let mut coords = [0u64; 4];
        for (i, c) in proj.iter().enumerate() {
            coords[i] = p.field.to_prime(c).expect("rational point");
        }
        rational.push(coords);
    }
    rational.sort();
    if scanned.len() > scheme.points.len() {
        return Ok(false);
    }
    Ok(scanned == rational)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::singular::find_singular_points;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn cubic_scan_over_f7() {
        let f = f7();
        let cubic = parse_poly(&f, "x1*x2*x3 - x0^3", 4).unwrap();
        let scan = scan_projective(&cubic, 7).unwrap();
        assert_eq!(scan.points_scanned, 400); // 7^3 + 7^2 + 7 + 1
        assert_eq!(
            scan.points,
            vec![[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        );
    }

    #[test]
    fn smooth_fermat_quartic_scan_is_empty() {
        let f = f7();
        let fermat = parse_poly(&f, "x0^4 + x1^4 + x2^4 + x3^4", 4).unwrap();
        let scan = scan_projective(&fermat, 7).unwrap();
        assert!(scan.points.is_empty());
    }

    #[test]
    fn guards() {
        let f = f7();
        let cubic = parse_poly(&f, "x1*x2*x3 - x0^3", 4).unwrap();
        assert_eq!(scan_projective(&cubic, 263), Err(OracleError::FieldTooLarge(263)));
        assert_eq!(scan_projective(&cubic, 11), Err(OracleError::FieldMismatch(7, 11)));
    }

    #[test]
    fn cross_check_cubic() {
        let f = f7();
        let cubic = parse_poly(&f, "x1*x2*x3 - x0^3", 4).unwrap();
        let scheme = find_singular_points(&cubic, 0).unwrap();
        assert!(cross_check(&cubic, &scheme, 7).unwrap());
    }
}
