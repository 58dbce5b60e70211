//! JSON form of covers:
//! `{"ground": [ids], "sets": [{"pieces": [{"elements": [ids], "parents_a": [..], "parents_b": [..]}]}]}`.

use serde::{Deserialize, Serialize};

use super::{Cover, CoverError, CoverSet, PointSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverFile {
    pub ground: PointSet,
    pub sets: Vec<CoverSet>,
}

impl CoverFile {
    pub fn to_cover(&self) -> Result<Cover, CoverError> {
        Cover::new(self.ground.clone(), self.sets.clone())
    }
}

impl From<&Cover> for CoverFile {
    fn from(c: &Cover) -> Self {
        CoverFile {
            ground: c.ground().clone(),
            sets: c.sets().to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_without_tags() {
        let f: CoverFile = serde_json::from_str(
            r#"{"ground": [0, 1], "sets": [{"pieces": [{"elements": [0, 1]}]}]}"#,
        )
        .unwrap();
        let c = f.to_cover().unwrap();
        assert_eq!(c.len(), 1);
        let back: CoverFile =
            serde_json::from_str(&serde_json::to_string(&CoverFile::from(&c)).unwrap()).unwrap();
        assert_eq!(back, f);
    }
}
