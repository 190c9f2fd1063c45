//! Reports as ordered key/value documents, rendered either as `key = value`
//! text or as JSON. Field order is fixed by construction so outputs can be
//! compared byte for byte.

use serde_json::{json, Map, Value};

use nichols_core::lie::LieSpan;
use nichols_core::nichols::{DimVerdict, FinitenessReport, GroupoidStats, Height, HilbertSeries, RootDatum};
use nichols_core::weyl::GroupoidGraph;
use nichols_core::{ArithmeticVerdict, LatticeVector, Witness};

use crate::parser::InstanceSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Field {
    Bool(bool),
    Int(u64),
    Str(String),
    Vector(LatticeVector),
    Vectors(Vec<LatticeVector>),
    Ints(Vec<u64>),
    Strs(Vec<String>),
    /// Per-degree counts, rendered `{d: n, ...}`.
    Degrees(Vec<(usize, usize)>),
    Records(Vec<Doc>),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Doc {
    pub fields: Vec<(String, Field)>,
}

impl Doc {
    pub fn new() -> Self {
        Doc::default()
    }

    pub fn push(&mut self, key: &str, value: Field) -> &mut Self {
        self.fields.push((key.to_string(), value));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn extend(&mut self, other: Doc) {
        self.fields.extend(other.fields);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("plain values serialize");
                s.push('\n');
                s
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            match v {
                Field::Records(rs) => {
                    out.push_str(&format!("{} = {}\n", k, rs.len()));
                    for r in rs {
                        let parts: Vec<String> = r.fields.iter().map(|(k, v)| format!("{} = {}", k, inline(v))).collect();
                        out.push_str(&format!("  {}\n", parts.join(", ")));
                    }
                }
                _ => out.push_str(&format!("{} = {}\n", k, inline(v))),
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (k, v) in &self.fields {
            m.insert(k.clone(), field_json(v));
        }
        Value::Object(m)
    }
}

fn vectors(vs: &[LatticeVector]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn inline(f: &Field) -> String {
    match f {
        Field::Bool(b) => b.to_string(),
        Field::Int(v) => v.to_string(),
        Field::Str(s) => s.clone(),
        Field::Vector(v) => v.to_string(),
        Field::Vectors(vs) => vectors(vs),
        Field::Ints(xs) => {
            let parts: Vec<String> = xs.iter().map(u64::to_string).collect();
            format!("[{}]", parts.join(", "))
        }
        Field::Strs(xs) => format!("[{}]", xs.join(", ")),
        Field::Degrees(ds) => {
            let parts: Vec<String> = ds.iter().map(|(d, n)| format!("{}: {}", d, n)).collect();
            format!("{{{}}}", parts.join(", "))
        }
        Field::Records(rs) => format!("<{} records>", rs.len()),
    }
}

fn field_json(f: &Field) -> Value {
    match f {
        Field::Bool(b) => json!(b),
        Field::Int(v) => json!(v),
        Field::Str(s) => json!(s),
        Field::Vector(v) => json!(v.0),
        Field::Vectors(vs) => Value::Array(vs.iter().map(|v| json!(v.0)).collect()),
        Field::Ints(xs) => json!(xs),
        Field::Strs(xs) => json!(xs),
        Field::Degrees(ds) => {
            let mut m = Map::new();
            for (d, n) in ds {
                m.insert(d.to_string(), json!(n));
            }
            Value::Object(m)
        }
        Field::Records(rs) => Value::Array(rs.iter().map(Doc::to_json).collect()),
    }
}

/// A verdict as a field: a number when the dimension is known.
pub fn verdict_field(v: &DimVerdict) -> Field {
    match v {
        DimVerdict::Finite(Some(d)) => Field::Int(*d),
        _ => Field::Str(verdict_text(v)),
    }
}

pub fn verdict_text(v: &DimVerdict) -> String {
    match v {
        DimVerdict::Finite(Some(d)) => d.to_string(),
        DimVerdict::Finite(None) => "finite".to_string(),
        DimVerdict::Infinite => "infinite".to_string(),
        DimVerdict::Unknown => "unknown".to_string(),
    }
}

pub fn arithmetic_text(v: &ArithmeticVerdict) -> &'static str {
    match v {
        ArithmeticVerdict::Yes(_) => "yes",
        ArithmeticVerdict::No => "no",
        ArithmeticVerdict::Unknown => "unknown",
    }
}

pub fn optional_int(v: Option<u64>) -> Field {
    v.map_or(Field::Str("none".to_string()), Field::Int)
}

fn height_text(h: &Height) -> String {
    match h {
        Height::Finite(k) => k.to_string(),
        Height::Infinite => "infinite".to_string(),
        Height::Unchecked => "unchecked".to_string(),
    }
}

/// Instance header: rank, conductor, params and caps.
pub fn header(spec: &InstanceSpec, max_degree: usize, cap_states: usize) -> Doc {
    let mut d = Doc::new();
    d.push("rank", Field::Int(spec.rank as u64))
        .push("conductor", Field::Int(spec.conductor as u64))
        .push("params", Field::Strs(spec.params.clone()))
        .push("max_degree", Field::Int(max_degree as u64))
        .push("cap_states", Field::Int(cap_states as u64));
    d
}

pub fn groupoid_stats(g: &GroupoidStats) -> Doc {
    let mut d = Doc::new();
    d.push("groupoid_states", Field::Int(g.states as u64))
        .push("groupoid_arrows", Field::Int(g.arrows as u64))
        .push("groupoid_full", Field::Bool(g.full))
        .push("groupoid_finite", Field::Bool(g.finite))
        .push("groupoid_truncated", Field::Bool(g.truncated));
    d
}

pub fn stats_of(g: &GroupoidGraph) -> GroupoidStats {
    GroupoidStats {
        states: g.states.len(),
        arrows: g.arrows.len(),
        full: g.full,
        finite: g.finite,
        truncated: g.truncated,
    }
}

pub fn root_records(roots: &[RootDatum]) -> Field {
    Field::Records(
        roots
            .iter()
            .map(|r| {
                let mut d = Doc::new();
                d.push("root", Field::Vector(r.root.clone()))
                    .push("word", Field::Str(r.lyndon.to_string()))
                    .push("p_uu", Field::Str(r.p_uu.to_string()))
                    .push("ord", Field::Str(r.ord_puu.to_string()))
                    .push("height", Field::Str(height_text(&r.height)));
                d
            })
            .collect(),
    )
}

pub fn hilbert_doc(h: &HilbertSeries, pbw: Option<&HilbertSeries>) -> Doc {
    let mut d = Doc::new();
    d.push("hilbert", Field::Ints(h.coefficients.clone()))
        .push("hilbert_total", Field::Int(h.total()));
    match pbw {
        Some(p) => {
            d.push("pbw", Field::Ints(p.coefficients.clone()));
            d.push("pbw_matches_hilbert", Field::Bool(p == h));
        }
        None => {
            d.push("pbw", Field::Str("unchecked".to_string()));
        }
    }
    d
}

pub fn degrees(s: &LieSpan) -> Field {
    Field::Degrees(s.dims.iter().map(|(&d, &n)| (d, n)).collect())
}

pub fn witness_field(w: &Option<Witness>) -> Field {
    match w {
        Some(w) => Field::Str(format!("({},{}) {}", w.i + 1, w.j + 1, w.reason())),
        None => Field::Str("none".to_string()),
    }
}

fn words(ws: &[nichols_core::Word]) -> Field {
    Field::Strs(ws.iter().map(|w| w.to_string()).collect())
}

/// Full analysis report.
pub fn analysis(spec: &InstanceSpec, r: &FinitenessReport) -> Doc {
    let mut d = header(spec, r.caps.max_degree, r.caps.cap_states);
    d.extend(groupoid_stats(&r.groupoid));
    d.push("arithmetic_root_system", Field::Str(arithmetic_text(&r.arithmetic).to_string()));
    let roots: Vec<LatticeVector> = match &r.arithmetic {
        ArithmeticVerdict::Yes(rs) => rs.positive_sorted(),
        _ => r.roots.iter().map(|x| x.root.clone()).collect(),
    };
    d.push("roots", Field::Vectors(roots));
    d.push("orders_finite", Field::Bool(r.orders_finite));
    d.push("root_data", root_records(&r.roots));
    d.extend(hilbert_doc(&r.hilbert, r.pbw.as_ref()));
    d.push("groupoid_dim", optional_int(r.groupoid_dim));
    d.push("dim_B", verdict_field(&r.dim_b))
        .push("dim_L", verdict_field(&r.dim_l))
        .push("dim_L_minus", verdict_field(&r.dim_l_minus))
        .push("witness", witness_field(&r.witness))
        .push("trivial_self_braiding", words(&r.trivial_self_braiding))
        .push("m_infinity", words(&r.m_infinity))
        .push("lie_dims", degrees(&r.lie))
        .push("lie_minus_dims", degrees(&r.lie_minus));
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_keep_order() {
        let mut d = Doc::new();
        d.push("b", Field::Int(2))
            .push("a", Field::Vectors(vec![LatticeVector(vec![1, 0]), LatticeVector(vec![1, 1])]))
            .push("c", Field::Degrees(vec![(1, 2), (2, 1)]));
        assert_eq!(d.to_text(), "b = 2\na = [(1,0),(1,1)]\nc = {1: 2, 2: 1}\n");
        let j = serde_json::to_string(&d.to_json()).unwrap();
        assert_eq!(j, r#"{"b":2,"a":[[1,0],[1,1]],"c":{"1":2,"2":1}}"#);
    }

    #[test]
    fn records_render_one_per_line() {
        let mut r = Doc::new();
        r.push("word", Field::Str("x1".into())).push("ord", Field::Int(3));
        let mut d = Doc::new();
        d.push("root_data", Field::Records(vec![r.clone(), r]));
        assert_eq!(d.to_text(), "root_data = 2\n  word = x1, ord = 3\n  word = x1, ord = 3\n");
    }
}
