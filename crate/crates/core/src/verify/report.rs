use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Where a report applies. `l` and `nu` are absent when the report spans
/// the whole range.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridPoint {
    pub family: String,
    pub params: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nu: Option<u32>,
}

impl GridPoint {
    pub fn new(family: &str) -> Self {
        GridPoint { family: family.into(), params: BTreeMap::new(), l: None, nu: None }
    }

    pub fn param(mut self, name: &str, value: impl ToString) -> Self {
        self.params.insert(name.into(), value.to_string());
        self
    }

    pub fn l(mut self, l: u32) -> Self {
        self.l = Some(l);
        self
    }

    pub fn nu(mut self, nu: u32) -> Self {
        self.nu = Some(nu);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Residual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckClass {
    Assert,
    Diagnose,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub class: CheckClass,
    pub point: GridPoint,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub details: BTreeMap<String, String>,
}
