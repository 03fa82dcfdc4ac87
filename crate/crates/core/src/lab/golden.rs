use serde::Deserialize;

use crate::error::{Error, Result};

const GOLDEN: &str = include_str!("../../fixtures/golden.toml");

#[derive(Clone, Debug, Deserialize)]
pub(crate) struct FamilySpec {
    pub base: [u32; 2],
    pub period: [u32; 2],
}

#[derive(Clone, Debug, Deserialize)]
pub(crate) struct Prefix {
    pub gens: Vec<String>,
    pub max_degree: u64,
    pub initials: Vec<[u32; 2]>,
    pub absent: Vec<[u32; 2]>,
    #[serde(default)]
    pub shapes: Vec<String>,
    #[serde(default)]
    pub families: Vec<FamilySpec>,
}

#[derive(Clone, Debug, Deserialize)]
pub(crate) struct FiniteCase {
    pub gens: Vec<String>,
    pub max_degree: u64,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub(crate) struct SquareData {
    pub h: Vec<String>,
    pub reduced: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub(crate) struct Golden {
    #[serde(rename = "E5_1")]
    pub e5_1: Prefix,
    #[serde(rename = "E5_2")]
    pub e5_2: Prefix,
    #[serde(rename = "E5_3")]
    pub e5_3: Prefix,
    #[serde(rename = "E5_4")]
    pub e5_4: Prefix,
    #[serde(rename = "E5_4_plus")]
    pub e5_4_plus: FiniteCase,
    #[serde(rename = "T4_1")]
    pub t4_1: SquareData,
}

pub(crate) fn load() -> Result<Golden> {
    toml::from_str(GOLDEN).map_err(|e| Error::Io(format!("golden fixture: {e}")))
}
