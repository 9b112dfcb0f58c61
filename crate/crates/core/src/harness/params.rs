use super::config::ParamValue;
use super::HarnessError;
use crate::algebra::ScalarField;
use std::collections::BTreeMap;

/// Parameters of one run, checked against the names its experiment accepts.
pub struct Params<'a> {
    map: &'a BTreeMap<String, ParamValue>,
}

fn bad(name: &str, want: &str) -> HarnessError {
    HarnessError::Schema(format!("parameter '{name}' must be {want}"))
}

impl<'a> Params<'a> {
    pub fn new(map: &'a BTreeMap<String, ParamValue>, allowed: &[&str]) -> Result<Self, HarnessError> {
        if let Some(k) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(HarnessError::Schema(format!("unknown parameter '{k}' (accepted: {})", allowed.join(", "))));
        }
        Ok(Self { map })
    }

    pub fn has(&self, name: &str) -> bool {
        self.map.contains_key(name)
    }

    pub fn f64_or(&self, name: &str, default: f64) -> Result<f64, HarnessError> {
        match self.map.get(name) {
            None => Ok(default),
            Some(v) => v.as_f64().ok_or_else(|| bad(name, "a number or \"inf\"")),
        }
    }

    pub fn opt_f64(&self, name: &str) -> Result<Option<f64>, HarnessError> {
        self.map
            .get(name)
            .map(|v| v.as_f64().ok_or_else(|| bad(name, "a number or \"inf\"")))
            .transpose()
    }

    pub fn usize_or(&self, name: &str, default: usize) -> Result<usize, HarnessError> {
        match self.map.get(name) {
            None => Ok(default),
            Some(v) => v.as_usize().ok_or_else(|| bad(name, "a non-negative integer")),
        }
    }

    pub fn str_or(&self, name: &str, default: &str) -> Result<String, HarnessError> {
        match self.map.get(name) {
            None => Ok(default.to_string()),
            Some(ParamValue::Str(s)) => Ok(s.clone()),
            Some(_) => Err(bad(name, "a string")),
        }
    }

    pub fn field_or(&self, name: &str, default: ScalarField) -> Result<ScalarField, HarnessError> {
        match self.map.get(name) {
            None => Ok(default),
            Some(ParamValue::Str(s)) => s.parse().map_err(|_| bad(name, "\"real\" or \"complex\"")),
            Some(_) => Err(bad(name, "\"real\" or \"complex\"")),
        }
    }

    pub fn f64_list_or(&self, name: &str, default: &[f64]) -> Result<Vec<f64>, HarnessError> {
        match self.map.get(name) {
            None => Ok(default.to_vec()),
            Some(v) => f64_list(v).ok_or_else(|| bad(name, "a list of numbers")),
        }
    }

    pub fn opt_f64_list(&self, name: &str) -> Result<Option<Vec<f64>>, HarnessError> {
        self.map
            .get(name)
            .map(|v| f64_list(v).ok_or_else(|| bad(name, "a list of numbers")))
            .transpose()
    }

    pub fn usize_list_or(&self, name: &str, default: &[usize]) -> Result<Vec<usize>, HarnessError> {
        match self.map.get(name) {
            None => Ok(default.to_vec()),
            Some(v) => v
                .as_list()
                .and_then(|l| l.iter().map(ParamValue::as_usize).collect())
                .ok_or_else(|| bad(name, "a list of non-negative integers")),
        }
    }

    pub fn pair_list_or(&self, name: &str, default: &[(f64, f64)]) -> Result<Vec<(f64, f64)>, HarnessError> {
        match self.map.get(name) {
            None => Ok(default.to_vec()),
            Some(v) => v
                .as_list()
                .and_then(|l| {
                    l.iter()
                        .map(|item| match f64_list(item)?.as_slice() {
                            [a, b] => Some((*a, *b)),
                            _ => None,
                        })
                        .collect()
                })
                .ok_or_else(|| bad(name, "a list of [p, q] pairs")),
        }
    }
}

fn f64_list(v: &ParamValue) -> Option<Vec<f64>> {
    v.as_list()?.iter().map(ParamValue::as_f64).collect()
}
