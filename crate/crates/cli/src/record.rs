use std::collections::BTreeMap;

use rodrigues_core::families::{FamilyParams, FamilySpec, Framework, Route};
use rodrigues_core::verify::{CheckReport, MutationOutcome, TranslationProbe};
use rodrigues_core::Poly;
use serde::{Deserialize, Serialize};

pub const VERSION: u32 = 1;

/// One polynomial of a `gen` table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub l: u32,
    pub nu: u32,
    pub route: String,
    /// Ascending, without trailing zeros; the zero polynomial is `[]`.
    pub coeffs: Vec<String>,
}

fn poly_text(p: &Poly) -> String {
    p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

impl OutputRecord {
    pub fn new(spec: &FamilySpec, nu: u32, route: Route, p: &Poly) -> Self {
        let mut params: BTreeMap<String, String> =
            spec.named_params().into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
        if let FamilyParams::General(fw) = &spec.params {
            let (sigma, w, q) = match fw {
                Framework::Weighted { sigma, w, .. } => (sigma, w, None),
                Framework::HypergeometricType { sigma, w, exp_arg, .. } => (sigma, w, Some(exp_arg)),
            };
            params.insert("sigma".into(), poly_text(sigma));
            params.insert("w".into(), poly_text(w));
            if let Some(q) = q {
                params.insert("q".into(), poly_text(q));
            }
        }
        OutputRecord {
            family: spec.family().name().to_string(),
            params,
            l: spec.l,
            nu,
            route: route.name().to_string(),
            coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordsDoc {
    pub version: u32,
    pub records: Vec<OutputRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksDoc {
    pub version: u32,
    pub checks: Vec<CheckReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MutationsDoc {
    pub version: u32,
    pub mutations: Vec<MutationOutcome>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormRow {
    pub l: u32,
    pub m: u32,
    pub norm: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormsDoc {
    pub version: u32,
    pub norms: Vec<NormRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeDoc {
    pub version: u32,
    pub probe: TranslationProbe,
}
