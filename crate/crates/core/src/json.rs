//! JSON and DOT forms of algebras, modules, pairs, sequences and lattices.
//!
//! Vertices are written 1-based. Matrices are lists of rows of rational
//! strings. Sequences are written left to right as `(M_r, …, M_1)`.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::bqa::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rat};
use crate::modrep::{Catalog, Module};
use crate::tautilt::{Lattice, Pair};

fn rel_string(terms: &[(Rat, Vec<String>)]) -> String {
    let mut out = String::new();
    for (k, (c, p)) in terms.iter().enumerate() {
        if k > 0 {
            out.push_str(if c.signum() < 0 { " - " } else { " + " });
        } else if c.signum() < 0 {
            out.push('-');
        }
        let mag = c.abs();
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(&p.join(""));
    }
    out
}

pub fn algebra_json(alg: &Algebra) -> Value {
    let arrows: Vec<Value> = alg
        .arrows()
        .iter()
        .map(|a| json!({"name": a.name, "source": a.source + 1, "target": a.target + 1}))
        .collect();
    let relations: Vec<Value> = alg.relations().iter().map(|r| Value::String(rel_string(&r.terms))).collect();
    json!({
        "name": alg.name(),
        "vertices": alg.vertex_count(),
        "arrows": arrows,
        "relations": relations,
        "dim": alg.dim(),
    })
}

fn mat_json(m: &Mat) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(x.to_string())).collect())).collect())
}

pub fn module_json(m: &Module, name: Option<&str>) -> Value {
    let mut maps = Map::new();
    for (a, mat) in m.algebra().arrows().iter().zip(m.maps()) {
        maps.insert(a.name.clone(), mat_json(mat));
    }
    let mut v = json!({"dim": m.dims(), "maps": maps});
    if let Some(n) = name {
        v["name"] = Value::String(n.to_string());
    }
    v
}

/// Module JSON with the catalog label of its isomorphism class.
pub fn labelled_module_json(cat: &Catalog, id: usize) -> Value {
    module_json(&cat.module(id), Some(&cat.label(id)))
}

fn parse_mat(v: &Value, rows: usize, cols: usize, what: &str) -> Result<Mat> {
    let bad = || Error::Parse(format!("matrix for {what} must be {rows}×{cols}"));
    let rs = v.as_array().ok_or_else(bad)?;
    if rs.len() != rows {
        return Err(bad());
    }
    let mut m = Mat::zeros(rows, cols);
    for (i, r) in rs.iter().enumerate() {
        let cs = r.as_array().ok_or_else(bad)?;
        if cs.len() != cols {
            return Err(bad());
        }
        for (j, x) in cs.iter().enumerate() {
            m[(i, j)] = match x {
                Value::String(s) => s.parse().map_err(|e| Error::Parse(format!("{what}: {e}")))?,
                Value::Number(n) => n
                    .as_i64()
                    .map(Rat::from_int)
                    .ok_or_else(|| Error::Parse(format!("{what}: non-integer number {n}")))?,
                _ => return Err(bad()),
            };
        }
    }
    Ok(m)
}

/// Reads a module over `alg`. Missing arrows act by zero when one of their
/// endpoints has dimension zero.
pub fn module_from_json(alg: &Arc<Algebra>, v: &Value) -> Result<Module> {
    let dims: Vec<usize> = serde_json::from_value(v.get("dim").cloned().ok_or_else(|| Error::Parse("missing dim".into()))?)?;
    if dims.len() != alg.vertex_count() {
        return Err(Error::Parse(format!("dim has {} entries, expected {}", dims.len(), alg.vertex_count())));
    }
    let maps = v.get("maps").and_then(Value::as_object);
    let mut mats = Vec::new();
    for a in alg.arrows() {
        let (r, c) = (dims[a.target], dims[a.source]);
        match maps.and_then(|m| m.get(&a.name)) {
            Some(x) => mats.push(parse_mat(x, r, c, &a.name)?),
            None if r == 0 || c == 0 => mats.push(Mat::zeros(r, c)),
            None => return Err(Error::Parse(format!("missing map for arrow {}", a.name))),
        }
    }
    if let Some(m) = maps {
        if let Some(k) = m.keys().find(|k| alg.quiver().arrow_index(k).is_none()) {
            return Err(Error::Parse(format!("unknown arrow {k}")));
        }
    }
    Module::new(alg.clone(), dims, mats)
}

pub fn pair_json(lat: &Lattice, p: &Pair) -> Value {
    let cat = lat.catalog();
    let modules: Vec<Value> = p.modules.iter().map(|&x| labelled_module_json(cat, lat.rigid()[x].catalog_id)).collect();
    let shifted: Vec<usize> = p.shifted.iter().map(|v| v + 1).collect();
    json!({"modules": modules, "shifted": shifted, "label": pair_label(lat, p)})
}

/// `M ⊕ N ⊕ P(v)[1]` style label.
pub fn pair_label(lat: &Lattice, p: &Pair) -> String {
    let cat = lat.catalog();
    let mut parts: Vec<String> = p.modules.iter().map(|&x| cat.label(lat.rigid()[x].catalog_id)).collect();
    parts.extend(p.shifted.iter().map(|v| format!("P{}[1]", v + 1)));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ⊕ ")
    }
}

/// A sequence given in position order, written as `(M_r, …, M_1)`.
pub fn sequence_json(cat: &Catalog, terms: &[usize]) -> Value {
    let labels: Vec<String> = terms.iter().rev().map(|&c| cat.label(c)).collect();
    let mods: Vec<Value> = terms.iter().rev().map(|&c| labelled_module_json(cat, c)).collect();
    json!({"labels": labels, "terms": mods})
}

/// Reads `{"terms": [...]}` (or a bare list) written as `(M_r, …, M_1)` and
/// returns the modules in position order.
pub fn sequence_from_json(alg: &Arc<Algebra>, v: &Value) -> Result<Vec<Module>> {
    let list = match v {
        Value::Array(a) => a,
        _ => v.get("terms").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing terms".into()))?,
    };
    let mut out: Vec<Module> = list.iter().map(|m| module_from_json(alg, m)).collect::<Result<_>>()?;
    out.reverse();
    Ok(out)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The Hasse diagram of the lattice, larger class above; nodes in `flagged`
/// are filled.
pub fn lattice_dot(lat: &Lattice, flagged: &[usize]) -> String {
    let mut out = String::from("digraph lattice {\n  node [shape=box];\n");
    for (k, p) in lat.pairs().iter().enumerate() {
        let style = if flagged.contains(&k) { ", style=filled, fillcolor=plum" } else { "" };
        out.push_str(&format!("  p{k} [label={}{style}];\n", quote(&pair_label(lat, p))));
    }
    for &(a, b) in lat.hasse() {
        out.push_str(&format!("  p{a} -> p{b};\n"));
    }
    out.push_str("}\n");
    out
}
