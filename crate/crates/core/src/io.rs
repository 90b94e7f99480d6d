//! JSON formats for complexes, labeled complexes, characteristic pairs, fans
//! and cochains.
//!
//! Complex: `{"num_vertices": 4, "facets": [[0,1,2], ...], "labels": [[0,1,3], ...]}`
//! where `labels` (edge `u v` with label `m`) and `num_vertices` are optional and
//! a free-form `"source"` string is carried through untouched.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::dualcells::{Cochain, DualComplex};
use crate::error::{Error, Result};
use crate::homology::{FGAbelianGroup, GroupElement};
use crate::quasitoric::{CharacteristicPair, Fan};
use crate::simplicial::{LabeledComplex, Simplex, SimplicialComplex};
use crate::IntegerMatrix;

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComplex {
    #[serde(default)]
    source: Option<String>,
    #[serde(default)]
    num_vertices: Option<usize>,
    facets: Vec<Vec<i64>>,
    #[serde(default)]
    labels: Option<Vec<[i64; 3]>>,
}

/// A parsed complex file: the complex plus whatever optional data it carried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDocument {
    pub complex: SimplicialComplex,
    pub labels: Option<BTreeMap<(usize, usize), u64>>,
    pub source: Option<String>,
}

impl ComplexDocument {
    /// The labeled complex; errors when the file carried no labels.
    pub fn labeled(&self) -> Result<LabeledComplex> {
        match &self.labels {
            Some(l) => LabeledComplex::new(self.complex.clone(), l.clone()),
            None => Err(Error::Precondition("input has no edge labels".into())),
        }
    }

    /// Labeled complex, with every edge labeled `default` when no labels were given.
    pub fn labeled_or(&self, default: u64) -> Result<LabeledComplex> {
        match self.labels {
            Some(_) => self.labeled(),
            None => Ok(LabeledComplex::uniform(self.complex.clone(), default)),
        }
    }
}

fn complex_from_raw(raw: RawComplex) -> Result<ComplexDocument> {
    let complex = SimplicialComplex::build(&raw.facets)?;
    if let Some(n) = raw.num_vertices {
        if n != complex.num_vertices() {
            return Err(Error::Parse(format!(
                "num_vertices is {n} but the facets use {} vertices",
                complex.num_vertices()
            )));
        }
    }
    let labels = match raw.labels {
        None => None,
        Some(entries) => {
            let mut map = BTreeMap::new();
            for [u, v, m] in entries {
                if u < 0 || v < 0 {
                    return Err(Error::NegativeVertex(u.min(v)));
                }
                if m < 0 {
                    return Err(Error::Parse(format!("label {m} on edge ({u}, {v}) is negative")));
                }
                let key = ((u as usize).min(v as usize), (u as usize).max(v as usize));
                if map.insert(key, m as u64).is_some() {
                    return Err(Error::Parse(format!("edge {key:?} is labeled twice")));
                }
            }
            LabeledComplex::new(complex.clone(), map.clone())?;
            Some(map)
        }
    };
    Ok(ComplexDocument { complex, labels, source: raw.source })
}

pub fn parse_complex(text: &str) -> Result<ComplexDocument> {
    complex_from_raw(serde_json::from_str(text).map_err(parse_err)?)
}

pub fn complex_value(k: &SimplicialComplex) -> Value {
    serde_json::json!({ "num_vertices": k.num_vertices(), "facets": k.facets() })
}

pub fn labeled_value(lk: &LabeledComplex) -> Value {
    let mut v = complex_value(lk.complex());
    let labels: Vec<[u64; 3]> = lk.labels().iter().map(|(&(a, b), &m)| [a as u64, b as u64, m]).collect();
    v["labels"] = serde_json::json!(labels);
    v
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    #[serde(default)]
    source: Option<String>,
    n: usize,
    #[serde(with = "crate::serde_bigint::nested")]
    lambda: Vec<Vec<BigInt>>,
    nerve: RawComplex,
    #[serde(default, with = "option_nested")]
    lifts: Option<Vec<Vec<BigInt>>>,
}

mod option_nested {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer};

    #[derive(Deserialize)]
    struct Wrap(#[serde(with = "crate::serde_bigint::nested")] Vec<Vec<BigInt>>);

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Vec<BigInt>>>, D::Error> {
        Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDocument {
    pub pair: CharacteristicPair,
    /// Optional `m x m` lift matrix, rows `l_i`.
    pub lifts: Option<IntegerMatrix>,
    pub source: Option<String>,
}

fn matrix(rows: Vec<Vec<BigInt>>, cols: usize, what: &str) -> Result<IntegerMatrix> {
    if let Some(r) = rows.iter().find(|r| r.len() != cols) {
        return Err(Error::Parse(format!("{what} row has length {}, expected {cols}", r.len())));
    }
    Ok(if rows.is_empty() { IntegerMatrix::zeros(0, cols) } else { IntegerMatrix::from_rows(rows) })
}

pub fn parse_pair(text: &str) -> Result<PairDocument> {
    let raw: RawPair = serde_json::from_str(text).map_err(parse_err)?;
    let nerve = complex_from_raw(raw.nerve)?.complex;
    let m = nerve.num_vertices();
    let lambda = matrix(raw.lambda, raw.n, "lambda")?;
    let pair = CharacteristicPair::new(nerve, raw.n, lambda)?;
    let lifts = raw.lifts.map(|l| matrix(l, m, "lifts")).transpose()?;
    Ok(PairDocument { pair, lifts, source: raw.source })
}

pub fn matrix_value(m: &IntegerMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(bigint_value).collect())).collect())
}

fn bigint_value(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(i) => Value::from(i),
        Err(_) => Value::from(x.to_string()),
    }
}

pub fn pair_value(p: &CharacteristicPair) -> Value {
    serde_json::json!({ "n": p.n(), "lambda": matrix_value(p.lambda()), "nerve": complex_value(p.nerve()) })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFan {
    #[serde(default)]
    #[allow(dead_code)]
    source: Option<String>,
    #[serde(default)]
    n: Option<usize>,
    #[serde(with = "crate::serde_bigint::nested")]
    rays: Vec<Vec<BigInt>>,
    cones: Vec<Vec<usize>>,
}

/// `{"rays": [[1,0], ...], "cones": [[0,1], ...]}`; `n` defaults to the ray length.
pub fn parse_fan(text: &str) -> Result<Fan> {
    let raw: RawFan = serde_json::from_str(text).map_err(parse_err)?;
    let n = match (raw.n, raw.rays.first()) {
        (Some(n), _) => n,
        (None, Some(r)) => r.len(),
        (None, None) => return Err(Error::Parse("fan has no rays and no dimension".into())),
    };
    Fan::new(n, raw.rays, raw.cones)
}

pub fn fan_value(f: &Fan) -> Value {
    serde_json::json!({ "n": f.n(), "rays": matrix_value(f.rays()), "cones": f.cones() })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    rank: usize,
    #[serde(default, with = "crate::serde_bigint::vec")]
    torsion: Vec<BigInt>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCochain {
    degree: usize,
    group: RawGroup,
    values: BTreeMap<String, GroupElement>,
}

/// `{"degree": k, "group": {"rank": r, "torsion": [..]}, "values": {"[0,1]": [..], ...}}`.
/// Keys are the simplices of the nerve labeling the dual faces; faces that are
/// not listed take the value zero. Torsion orders may be given in any form
/// and are normalized, so coordinates refer to the normalized group.
pub fn parse_cochain(text: &str, d: &DualComplex) -> Result<Cochain> {
    let raw: RawCochain = serde_json::from_str(text).map_err(parse_err)?;
    let group = FGAbelianGroup::new(raw.group.rank, raw.group.torsion.clone());
    if group.torsion != raw.group.torsion {
        return Err(Error::Parse(format!(
            "torsion {:?} is not in invariant-factor form; use {:?}",
            raw.group.torsion.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            group.torsion.iter().map(BigInt::to_string).collect::<Vec<_>>()
        )));
    }
    let values = raw
        .values
        .into_iter()
        .map(|(k, v)| Ok((k.parse::<Simplex>()?, v)))
        .collect::<Result<Vec<_>>>()?;
    Cochain::from_values(d, raw.degree, &group, values)
}

/// Every face, zero or not, in face order.
pub fn cochain_value(c: &Cochain, d: &DualComplex) -> Value {
    let values: serde_json::Map<String, Value> = d
        .face_labels(c.degree)
        .iter()
        .zip(&c.values)
        .map(|(s, v)| (s.to_string(), Value::Array(v.0.iter().map(bigint_value).collect())))
        .collect();
    serde_json::json!({ "degree": c.degree, "group": group_value(&c.group), "values": values })
}

pub fn group_value(g: &FGAbelianGroup) -> Value {
    serde_json::to_value(RawGroup { rank: g.rank, torsion: g.torsion.clone() }).expect("serializable")
}

/// Pretty JSON in which arrays of scalars stay on one line, so facet lists
/// print one facet per line.
pub fn to_pretty_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_scalar) => {
            out.push('[');
            for (i, x) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&x.to_string());
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", "  ".repeat(indent));
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                let _ = write!(out, "{pad}{}: ", Value::String(k.clone()));
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", "  ".repeat(indent));
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
