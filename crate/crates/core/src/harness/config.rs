use super::HarnessError;
use crate::serde_ext::parse_extended;
use crate::Tolerances;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const SCHEMA_VERSION: u32 = 1;

/// A parameter value as written in the config file.
///
/// Infinite exponents are written as the string `"inf"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(String),
    List(Vec<ParamValue>),
}

impl ParamValue {
    /// Parses a `--set` value: JSON when it parses, a bare string otherwise.
    pub fn from_cli(raw: &str) -> ParamValue {
        serde_json::from_str(raw).unwrap_or_else(|_| ParamValue::Str(raw.to_string()))
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            ParamValue::Int(i) => Some(*i as f64),
            ParamValue::Float(f) => Some(*f),
            ParamValue::Str(s) => parse_extended(s),
            _ => None,
        }
    }

    pub fn as_usize(&self) -> Option<usize> {
        match self {
            ParamValue::Int(i) => usize::try_from(*i).ok(),
            _ => None,
        }
    }

    pub fn as_list(&self) -> Option<&[ParamValue]> {
        match self {
            ParamValue::List(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub schema_version: u32,
    pub experiment: String,
    #[serde(default)]
    pub parameters: BTreeMap<String, ParamValue>,
    pub seed: u64,
    pub output_path: PathBuf,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance_overrides: Option<BTreeMap<String, ParamValue>>,
}

impl ExperimentConfig {
    pub fn new(experiment: &str, seed: u64, output_path: impl Into<PathBuf>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            experiment: experiment.to_string(),
            parameters: BTreeMap::new(),
            seed,
            output_path: output_path.into(),
            tolerance_overrides: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| HarnessError::Schema(e.to_string()))?;
        if cfg.schema_version != SCHEMA_VERSION {
            return Err(HarnessError::Schema(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                cfg.schema_version
            )));
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Library defaults with `tolerance_overrides` applied; unknown names are rejected.
    pub fn tolerances(&self) -> Result<Tolerances, HarnessError> {
        let Some(overrides) = &self.tolerance_overrides else {
            return Ok(Tolerances::DEFAULT);
        };
        let mut value = serde_json::to_value(Tolerances::DEFAULT).expect("tolerances serialize");
        let map = value.as_object_mut().expect("struct serializes to an object");
        for (k, v) in overrides {
            if !map.contains_key(k) {
                return Err(HarnessError::Schema(format!("unknown tolerance '{k}'")));
            }
            map.insert(k.clone(), serde_json::to_value(v).expect("param serializes"));
        }
        serde_json::from_value(value).map_err(|e| HarnessError::Schema(format!("tolerance_overrides: {e}")))
    }
}
