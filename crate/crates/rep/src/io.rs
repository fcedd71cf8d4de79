//! JSON representation files:
//! `{"monoid": <name or inline monoid>, "dim": d, "side": "left"|"right", "matrices": [[[entry..]..]..]}`
//! with one matrix per element in element order. An entry is an integer, a `"p/q"` string,
//! or `{"conductor": n, "coeffs": ["p/q", ..]}` in the power basis of ζ_n.

use std::sync::Arc;

use monoidrep_core::builtin::by_name;
use monoidrep_core::io::MonoidFile;
use monoidrep_core::FiniteMonoid;
use monoidrep_linalg::rational::{format_rational, parse_rational};
use monoidrep_linalg::{CycNum, ExactMatrix};
use serde::{Deserialize, Serialize};

use crate::representation::{Representation, Side};
use crate::RepError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonoidRef {
    Builtin(String),
    Inline(MonoidFile),
}

impl MonoidRef {
    pub fn resolve(&self) -> Result<FiniteMonoid, RepError> {
        match self {
            MonoidRef::Builtin(name) => by_name(name).ok_or_else(|| RepError::Parse(format!("unknown monoid {name:?}"))),
            MonoidRef::Inline(f) => f.to_monoid().map_err(|e| RepError::Parse(e.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Frac(String),
    Cyc(CycNum),
}

impl Entry {
    pub fn to_cyc(&self) -> Result<CycNum, RepError> {
        match self {
            Entry::Int(v) => Ok(CycNum::from_int(*v)),
            Entry::Frac(s) => parse_rational(s)
                .map(CycNum::from_rational)
                .ok_or_else(|| RepError::Parse(format!("bad rational {s:?}"))),
            Entry::Cyc(c) => Ok(c.clone()),
        }
    }

    pub fn from_cyc(c: &CycNum) -> Entry {
        match c.as_rational() {
            Some(r) if r.is_integer() => match i64::try_from(r.to_integer()) {
                Ok(v) => Entry::Int(v),
                Err(_) => Entry::Frac(format_rational(&r)),
            },
            Some(r) => Entry::Frac(format_rational(&r)),
            None => Entry::Cyc(c.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub monoid: MonoidRef,
    pub dim: usize,
    #[serde(default = "default_side")]
    pub side: Side,
    pub matrices: Vec<Vec<Vec<Entry>>>,
}

fn default_side() -> Side {
    Side::Left
}

impl RepFile {
    pub fn to_representation(&self) -> Result<Representation, RepError> {
        let m = Arc::new(self.monoid.resolve()?);
        self.to_representation_over(m)
    }

    /// Reads the matrices against an already resolved monoid.
    pub fn to_representation_over(&self, m: Arc<FiniteMonoid>) -> Result<Representation, RepError> {
        let d = self.dim;
        let mut mats = Vec::with_capacity(self.matrices.len());
        for (k, rows) in self.matrices.iter().enumerate() {
            if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                return Err(RepError::Dimension(format!("matrix {k} is not {d}×{d}")));
            }
            let data = rows.iter().flatten().map(Entry::to_cyc).collect::<Result<Vec<_>, _>>()?;
            mats.push(ExactMatrix::new(d, d, data));
        }
        if d == 0 && mats.is_empty() {
            return Ok(Representation::zero(m, self.side));
        }
        Representation::new(m, self.side, mats)
    }

    pub fn from_representation(v: &Representation, monoid: MonoidRef) -> RepFile {
        let matrices = v
            .matrices()
            .iter()
            .map(|a| (0..a.nrows()).map(|i| a.row(i).iter().map(Entry::from_cyc).collect()).collect())
            .collect();
        RepFile { monoid, dim: v.dim(), side: v.side(), matrices }
    }
}

pub fn parse_representation_json(text: &str) -> Result<Representation, RepError> {
    let f: RepFile = serde_json::from_str(text).map_err(|e| RepError::Parse(e.to_string()))?;
    f.to_representation()
}

pub fn representation_to_json(v: &Representation) -> String {
    let f = RepFile::from_representation(v, MonoidRef::Inline(MonoidFile::from_monoid(v.monoid())));
    serde_json::to_string(&f).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use monoidrep_core::builtin::cyclic;

    #[test]
    fn round_trip_with_roots_of_unity() {
        let c3 = Arc::new(cyclic(3));
        let chi = Representation::character(c3, (0..3).map(|j| CycNum::zeta(3, j)).collect()).unwrap();
        let text = representation_to_json(&chi);
        let back = parse_representation_json(&text).unwrap();
        assert_eq!(back.matrices(), chi.matrices());
    }

    #[test]
    fn builtin_reference_and_fractions() {
        let text = r#"{"monoid": "c2", "dim": 1, "matrices": [[[1]], [["-1"]]]}"#;
        let v = parse_representation_json(text).unwrap();
        assert_eq!(v.matrix(1).get(0, 0), &CycNum::from_int(-1));
        let bad = r#"{"monoid": "c2", "dim": 1, "matrices": [[[1]], [[2]]]}"#;
        assert!(parse_representation_json(bad).is_err());
    }
}
