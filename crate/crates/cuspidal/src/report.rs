//! Serializable verification reports.
//!
//! Reports are the artifact of record: everything needed to audit a run is
//! embedded as polynomial grammar text, and identical configurations
//! reproduce byte-identical reports apart from the timing block. The JSON
//! layout is versioned; see `schema/verification-report.v1.json`.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub schema_version: String,
    pub tool_version: String,
    pub verdict: String,
    pub family: Option<String>,
    pub seed: Option<u64>,
    pub prime: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deformation_t: Option<u64>,
    pub instance: InstanceBlock,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedBlock>,
    pub census: CensusBlock,
    pub certificate: CertificateBlock,
    pub checks: Vec<CheckLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub attempts: Option<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rejections: Vec<String>,
    pub timings_ms: Timings,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.verdict == "PASS"
    }

    /// Serialization with the timing block zeroed, for byte-for-byte
    /// reproducibility comparisons.
    pub fn canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.timings_ms = Timings::default();
        serde_json::to_string_pretty(&copy).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn first_failure(&self) -> Option<&CheckLine> {
        self.checks.iter().find(|c| !c.pass)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct InstanceBlock {
    pub degree: usize,
    pub phi: String,
    /// Named building blocks the constructor drew (audit trail).
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub draws: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ExpectedBlock {
    pub cusp_count: usize,
    pub loci: Vec<LocusCount>,
    pub source: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct LocusCount {
    pub locus: String,
    pub count: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CensusBlock {
    pub singular_count: usize,
    pub total_length: usize,
    pub all_a2: bool,
    pub cell_quotient_dims: [usize; 4],
    pub by_extension_degree: Vec<ExtensionCount>,
    pub points: Vec<PointReport>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ExtensionCount {
    pub extension_degree: usize,
    pub count: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct PointReport {
    pub chart: usize,
    pub extension_degree: usize,
    /// Modulus of the residue field as a polynomial in t over F_p.
    pub modulus: String,
    pub affine_coords: Vec<String>,
    pub projective: Vec<String>,
    pub tjurina: usize,
    pub hessian_corank: usize,
    pub classification: String,
    pub cell_multiplicity: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CertificateBlock {
    pub kind: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub polynomials: BTreeMap<String, String>,
    pub identity_ok: bool,
    pub vanishes_identically: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    pub incidence_ok: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub per_cusp_incidence: Vec<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub locus_counts: Vec<LocusCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sqh_confirmed: Option<Vec<bool>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Default)]
pub struct Timings {
    pub census_ms: u64,
    pub certificate_ms: u64,
    pub total_ms: u64,
}

pub fn tool_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_lossless() {
        let report = VerificationReport {
            schema_version: SCHEMA_VERSION.into(),
            tool_version: tool_version(),
            verdict: "PASS".into(),
            family: Some("cubic3".into()),
            seed: Some(7),
            prime: 10007,
            deformation_t: None,
            instance: InstanceBlock {
                degree: 3,
                phi: "-x0^3 + x1*x2*x3".into(),
                draws: BTreeMap::new(),
            },
            expected: Some(ExpectedBlock {
                cusp_count: 3,
                loci: vec![LocusCount { locus: "coordinate points".into(), count: 3 }],
                source: "minimal count, degree 3".into(),
            }),
            census: CensusBlock {
                singular_count: 3,
                total_length: 6,
                all_a2: true,
                cell_quotient_dims: [0, 1, 1, 1],
                by_extension_degree: vec![ExtensionCount { extension_degree: 1, count: 3 }],
                points: vec![],
            },
            certificate: CertificateBlock {
                kind: "triple_cover".into(),
                polynomials: BTreeMap::new(),
                identity_ok: true,
                vanishes_identically: false,
                residual_degree: None,
                residual: None,
                incidence_ok: true,
                per_cusp_incidence: vec![true, true, true],
                locus_counts: vec![],
                sqh_confirmed: None,
            },
            checks: vec![CheckLine { name: "census".into(), pass: true, detail: "3 = 3".into() }],
            attempts: Some(1),
            rejections: vec![],
            timings_ms: Timings { census_ms: 12, certificate_ms: 1, total_ms: 13 },
        };
        let text = report.to_json();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        // canonical form ignores timings only
        let mut t2 = report.clone();
        t2.timings_ms = Timings { census_ms: 99, certificate_ms: 99, total_ms: 198 };
        assert_eq!(report.canonical_json(), t2.canonical_json());
        assert_ne!(report.to_json(), t2.to_json());
    }
}
