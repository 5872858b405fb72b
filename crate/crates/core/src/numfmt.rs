//! Lossless decimal rendering of `f64` with 17 significant digits.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// Formats `v` with 17 significant digits in scientific notation, which
/// round-trips every finite double. Non-finite values render as `null`.
pub fn sig17(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "null".to_string()
    }
}

/// Serializes through [`sig17`] when the target is JSON.
#[derive(Debug, Clone, Copy)]
pub struct Sig17(pub f64);

impl Serialize for Sig17 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(sig17(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    Sig17(*v).serialize(s)
}

pub fn serialize_opt<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    v.map(Sig17).serialize(s)
}

pub fn serialize_opt_vec<S: Serializer>(v: &Option<Vec<f64>>, s: S) -> Result<S::Ok, S::Error> {
    v.as_ref()
        .map(|xs| xs.iter().copied().map(Sig17).collect::<Vec<_>>())
        .serialize(s)
}
