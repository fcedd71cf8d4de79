//! JSON monoid definitions.
//!
//! Two shapes are accepted:
//! `{"table": [[..]..], "identity": i, "labels": [..]}` (labels optional) and
//! `{"points": k, "generators": [{"map": [img|null, ..]}, ..], "kind": "partial"|"total"}`
//! where images are 1-based points.

use serde::{Deserialize, Serialize};

use crate::monoid::{transformation_closure, FiniteMonoid, PartialMap};
use crate::MonoidError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub map: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratedFile {
    pub points: usize,
    pub generators: Vec<GeneratorSpec>,
    #[serde(default = "default_kind")]
    pub kind: String,
}

fn default_kind() -> String {
    "partial".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonoidFile {
    Table(TableFile),
    Generated(GeneratedFile),
}

impl MonoidFile {
    pub fn to_monoid(&self) -> Result<FiniteMonoid, MonoidError> {
        match self {
            MonoidFile::Table(t) => FiniteMonoid::build(t.table.clone(), t.identity, t.labels.clone(), true),
            MonoidFile::Generated(g) => {
                let total = match g.kind.as_str() {
                    "partial" => false,
                    "total" => true,
                    k => return Err(MonoidError::Parse(format!("unknown kind {k:?}"))),
                };
                let mut maps: Vec<PartialMap> = Vec::new();
                for (gi, spec) in g.generators.iter().enumerate() {
                    if spec.map.len() != g.points {
                        return Err(MonoidError::Parse(format!(
                            "generators[{gi}].map has {} entries, expected {}",
                            spec.map.len(),
                            g.points
                        )));
                    }
                    let mut f = Vec::with_capacity(g.points);
                    for (i, img) in spec.map.iter().enumerate() {
                        match img {
                            None if total => {
                                return Err(MonoidError::Parse(format!(
                                    "generators[{gi}].map[{i}] is null in a total monoid"
                                )))
                            }
                            None => f.push(None),
                            Some(v) if *v >= 1 && *v <= g.points => f.push(Some(v - 1)),
                            Some(v) => {
                                return Err(MonoidError::Parse(format!(
                                    "generators[{gi}].map[{i}] = {v} is not a point"
                                )))
                            }
                        }
                    }
                    maps.push(f);
                }
                Ok(transformation_closure(g.points, &maps).0)
            }
        }
    }

    pub fn from_monoid(m: &FiniteMonoid) -> Self {
        MonoidFile::Table(TableFile {
            table: m.table(),
            identity: m.identity(),
            labels: m.labels().map(|l| l.to_vec()),
        })
    }
}

pub fn parse_monoid_json(text: &str) -> Result<FiniteMonoid, MonoidError> {
    let file: MonoidFile = serde_json::from_str(text).map_err(|e| MonoidError::Parse(e.to_string()))?;
    file.to_monoid()
}

pub fn monoid_to_json(m: &FiniteMonoid) -> String {
    serde_json::to_string(&MonoidFile::from_monoid(m)).expect("serializable")
}
