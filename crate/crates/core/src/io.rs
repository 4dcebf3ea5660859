//! JSON documents describing F-matroids.
//!
//! Two shapes are accepted:
//!
//! ```json
//! {"tract": "sign", "ground": ["a", "b", "c"], "circuits": [["+", "-", "0"]]}
//! {"tract": "qi", "matrix": [["1", "0", "i"], ["0", "1", "1"]]}
//! ```
//!
//! `ground` is optional and defaults to `"1"`, `"2"`, …. A matrix document
//! describes the matroid whose covectors are the row space. Output is always
//! the circuit form with circuits in canonical order, so writing a parsed
//! document reproduces it byte for byte.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fmatroid::FMatroid;
use crate::linalg::Matrix;
use crate::tract::Tract;
use crate::vector::{FVector, GroundSet};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    tract: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ground: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    circuits: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<String>>>,
}

pub fn fmatroid_from_json(s: &str) -> Result<FMatroid> {
    let doc: Doc = serde_json::from_str(s)?;
    let tract: Tract = doc.tract.parse()?;
    let width = match (&doc.circuits, &doc.matrix) {
        (Some(_), Some(_)) => return Err(Error::Parse("give either circuits or matrix, not both".into())),
        (None, None) => return Err(Error::Parse("missing circuits or matrix".into())),
        (Some(c), None) => c.first().map(Vec::len),
        (None, Some(m)) => m.first().map(Vec::len),
    };
    let ground = match doc.ground {
        Some(labels) => GroundSet::new(labels)?,
        None => GroundSet::numbered(width.ok_or_else(|| Error::Parse("cannot infer the ground set".into()))?)?,
    };
    if let Some(rows) = doc.matrix {
        let m = Matrix::parse(tract, &rows)?;
        if m.nrows() > 0 && m.ncols() != ground.len() {
            return Err(Error::GroundMismatch);
        }
        return FMatroid::from_subspace(ground, &m);
    }
    FMatroid::parse_circuits(tract, ground, &doc.circuits.unwrap_or_default())
}

pub fn fmatroid_to_json(m: &FMatroid) -> String {
    let doc = Doc {
        tract: m.tract().to_string(),
        ground: Some(m.ground().labels().to_vec()),
        circuits: Some(m.circuits().iter().map(lits).collect()),
        matrix: None,
    };
    serde_json::to_string_pretty(&doc).expect("strings serialize") + "\n"
}

fn lits(x: &FVector) -> Vec<String> {
    x.entries().iter().map(ToString::to_string).collect()
}

/// A list of vectors as JSON arrays of literals.
pub fn vectors_to_json(xs: &[FVector]) -> String {
    let v: Vec<Vec<String>> = xs.iter().map(lits).collect();
    serde_json::to_string(&v).expect("strings serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let m = fmatroid_from_json(r#"{"tract": "qi", "matrix": [["1", "0", "i"], ["0", "1", "1"]]}"#).unwrap();
        let s = fmatroid_to_json(&m);
        let back = fmatroid_from_json(&s).unwrap();
        assert_eq!(back, m);
        assert_eq!(fmatroid_to_json(&back), s);
    }

    #[test]
    fn labels_and_errors() {
        let m = fmatroid_from_json(r#"{"tract": "sign", "ground": ["a", "b"], "circuits": [["+", "+"]]}"#).unwrap();
        assert_eq!(m.ground().labels(), ["a", "b"]);
        assert!(fmatroid_from_json(r#"{"tract": "sign"}"#).is_err());
        assert!(fmatroid_from_json(r#"{"tract": "sign", "circuits": [], "matrix": []}"#).is_err());
        assert!(fmatroid_from_json(r#"{"tract": "nope", "circuits": [["1"]]}"#).is_err());
        assert!(fmatroid_from_json(r#"{"tract": "sign", "circuits": [["+"]], "extra": 1}"#).is_err());
    }
}
