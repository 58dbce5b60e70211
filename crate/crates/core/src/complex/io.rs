//! JSON exchange format for complexes: `{"name": .., "maximal_simplices": [[..], ..]}`,
//! optionally with `"labels"` naming a parent simplex for each vertex.

use serde::{Deserialize, Serialize};

use super::{ComplexError, LabeledComplex, Simplex, SimplicialComplex, Subcomplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub maximal_simplices: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<usize>>>,
}

impl ComplexFile {
    pub fn to_complex(&self) -> Result<SimplicialComplex, ComplexError> {
        SimplicialComplex::from_maximal_simplices(&self.maximal_simplices)
    }

    /// Reads the simplices as a subcomplex of some ambient complex, keeping ids unchanged.
    pub fn to_subcomplex(&self) -> Result<Subcomplex, ComplexError> {
        Subcomplex::from_maximal_simplices(&self.maximal_simplices)
    }
}

fn raw(simplices: impl IntoIterator<Item = Simplex>) -> Vec<Vec<usize>> {
    simplices
        .into_iter()
        .map(|s| s.vertices().to_vec())
        .collect()
}

impl From<&SimplicialComplex> for ComplexFile {
    fn from(k: &SimplicialComplex) -> Self {
        ComplexFile {
            name: None,
            maximal_simplices: raw(k.maximal_simplices()),
            labels: None,
        }
    }
}

impl From<&LabeledComplex> for ComplexFile {
    fn from(k: &LabeledComplex) -> Self {
        ComplexFile {
            name: None,
            maximal_simplices: raw(k.complex.maximal_simplices()),
            labels: Some(raw(k.labels.iter().cloned())),
        }
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ComplexFile::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        ComplexFile::deserialize(d)?
            .to_complex()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let k = SimplicialComplex::from_maximal_simplices(&[[0, 1, 2], [2, 3, 4]]).unwrap();
        let text = serde_json::to_string(&k).unwrap();
        let back: SimplicialComplex = serde_json::from_str(&text).unwrap();
        assert_eq!(k, back);
    }

    #[test]
    fn negative_ids_fail_to_parse() {
        let err = serde_json::from_str::<ComplexFile>(r#"{"maximal_simplices": [[0, -1]]}"#);
        assert!(err.is_err());
    }
}
