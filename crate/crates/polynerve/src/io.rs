//! JSON and DOT formats for posets, witnesses, complexes and traces.
//!
//! Posets: `{"elements": [labels], "edges": [[a, b], ...]}` with `a < b`
//! generators given by label (or index); closure is taken on load and only
//! covers are written. Complexes: `{"dim": n, "vertices": [[[num, den], ...], ...],
//! "simplices": [[indices], ...]}` listing maximal simplices. Integers that do
//! not fit in 64 bits are written as decimal strings and accepted either way.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::construct::TraceStep;
use crate::error::{Error, Result};
use crate::geometry::{RationalComplex, RationalPoint};
use crate::morphism::PMorphism;
use crate::poset::FinitePoset;

#[derive(Deserialize)]
#[serde(untagged)]
enum Endpoint {
    Index(usize),
    Label(String),
}

#[derive(Deserialize)]
struct PosetIn {
    elements: Vec<String>,
    #[serde(default)]
    edges: Vec<(Endpoint, Endpoint)>,
}

#[derive(Serialize)]
struct PosetOut<'a> {
    elements: &'a [String],
    edges: Vec<(&'a str, &'a str)>,
}

fn bad_json(e: serde_json::Error) -> Error {
    Error::InvalidInput(format!("malformed JSON: {e}"))
}

pub fn poset_from_json(text: &str) -> Result<FinitePoset> {
    let raw: PosetIn = serde_json::from_str(text).map_err(bad_json)?;
    let f = FinitePoset::from_edges(raw.elements.clone(), &[])?;
    let resolve = |e: &Endpoint| match e {
        Endpoint::Index(i) if *i < raw.elements.len() => Ok(*i),
        Endpoint::Index(i) => Err(Error::UnknownElement(format!("#{i}"))),
        Endpoint::Label(l) => f.index_of(l),
    };
    let edges = raw.edges.iter().map(|(a, b)| Ok((resolve(a)?, resolve(b)?))).collect::<Result<Vec<_>>>()?;
    FinitePoset::from_edges(raw.elements, &edges)
}

pub fn poset_to_value(f: &FinitePoset) -> Value {
    let edges = f.cover_edges().into_iter().map(|(a, b)| (f.label(a), f.label(b))).collect();
    serde_json::to_value(PosetOut { elements: f.labels(), edges }).expect("serializable")
}

pub fn poset_to_json(f: &FinitePoset) -> String {
    serde_json::to_string_pretty(&poset_to_value(f)).expect("serializable")
}

/// Hasse diagram in DOT, one node per element and one edge per cover.
pub fn poset_to_dot(f: &FinitePoset, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for x in 0..f.len() {
        writeln!(out, "  n{x} [label={}];", quote(f.label(x))).unwrap();
    }
    for (a, b) in f.cover_edges() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// `{"domain": [labels], "map": {source label: target label}}`.
pub fn witness_to_value(w: &PMorphism) -> Value {
    let (src, dst) = (w.source(), w.target());
    let domain: Vec<&str> = w.domain().into_iter().map(|x| src.label(x)).collect();
    let map: serde_json::Map<String, Value> = w
        .domain()
        .into_iter()
        .map(|x| (src.label(x).to_string(), Value::from(dst.label(w.image(x).expect("in domain")))))
        .collect();
    json!({ "domain": domain, "map": map })
}

/// Reads a witness between known posets.
pub fn witness_from_value(v: &Value, source: &FinitePoset, target: &FinitePoset) -> Result<PMorphism> {
    let map = v
        .get("map")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::InvalidInput("witness needs a \"map\" object".into()))?;
    let mut images = vec![None; source.len()];
    for (k, t) in map {
        let t = t.as_str().ok_or_else(|| Error::InvalidInput(format!("image of {k:?} is not a label")))?;
        images[source.index_of(k)?] = Some(target.index_of(t)?);
    }
    PMorphism::new(source.clone(), target.clone(), images)
}

pub fn trace_to_value(trace: &[TraceStep]) -> Value {
    serde_json::to_value(trace).expect("serializable")
}

fn int_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

fn int_from(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| Error::InvalidInput(format!("{n} is not an integer"))),
        Value::String(s) => s.parse().map_err(|_| Error::InvalidInput(format!("{s:?} is not an integer"))),
        other => Err(Error::InvalidInput(format!("{other} is not an integer"))),
    }
}

fn rational_from(v: &Value) -> Result<BigRational> {
    match v.as_array().map(Vec::as_slice) {
        Some([p, q]) => {
            let (p, q) = (int_from(p)?, int_from(q)?);
            if q.is_zero() {
                return Err(Error::InvalidInput("zero denominator".into()));
            }
            Ok(BigRational::new(p, q))
        }
        _ => Ok(BigRational::from_integer(int_from(v)?)),
    }
}

pub fn complex_from_json(text: &str) -> Result<RationalComplex> {
    let v: Value = serde_json::from_str(text).map_err(bad_json)?;
    let field = |name: &str| v.get(name).ok_or_else(|| Error::InvalidInput(format!("complex needs {name:?}")));
    let dim = field("dim")?.as_u64().ok_or_else(|| Error::InvalidInput("\"dim\" must be a count".into()))? as usize;
    let vertices = field("vertices")?
        .as_array()
        .ok_or_else(|| Error::InvalidInput("\"vertices\" must be a list".into()))?
        .iter()
        .map(|p| {
            let coords = p.as_array().ok_or_else(|| Error::InvalidInput("vertex must be a list".into()))?;
            Ok(RationalPoint::new(coords.iter().map(rational_from).collect::<Result<_>>()?))
        })
        .collect::<Result<Vec<_>>>()?;
    let simplices: Vec<Vec<usize>> = serde_json::from_value(field("simplices")?.clone()).map_err(bad_json)?;
    RationalComplex::from_maximal(dim, vertices, simplices)
}

pub fn complex_to_value(k: &RationalComplex) -> Value {
    let vertices: Vec<Value> = k
        .vertices()
        .iter()
        .map(|p| Value::Array(p.coords().iter().map(|c| json!([int_value(c.numer()), int_value(c.denom())])).collect()))
        .collect();
    json!({ "dim": k.ambient_dim(), "vertices": vertices, "simplices": k.maximal_simplices() })
}

pub fn complex_to_json(k: &RationalComplex) -> String {
    serde_json::to_string_pretty(&complex_to_value(k)).expect("serializable")
}
