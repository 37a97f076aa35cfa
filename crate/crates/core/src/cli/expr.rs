//! Diagram expressions in JSON.
//!
//! ```json
//! {
//!   "names": {"dom": ["x1", "x2"], "cod": ["z1", "z2"]},
//!   "defs": {"f": {"cospan": {"apex": 4, "left": [2, 2], "right": [1, 2, 3, 3]}}},
//!   "expr": {"compose": [{"gen": "f"}, {"id": 4}]}
//! }
//! ```
//!
//! Terms are `{"id": n}`, `{"frobenius": "mu", "size": n}`,
//! `{"braid": [x, y]}`, `{"compose": [...]}`, `{"tensor": [...]}`,
//! `{"gen": "name"}`, or an inline literal keyed by its kind (`cospan`,
//! `circuit`, `span`, `matrix`, `relation`).

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::Value;

use super::CliError;
use crate::cospan::Frobenius;

pub const LITERAL_KINDS: [&str; 5] = ["cospan", "circuit", "span", "matrix", "relation"];

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Id(usize),
    Frobenius(Frobenius, usize),
    Braid(usize, usize),
    Compose(Vec<Expr>),
    Tensor(Vec<Expr>),
    Gen(String),
    Literal(String, Value),
}

/// Optional display names for the outer feet.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
pub struct Names {
    #[serde(default)]
    pub dom: Vec<String>,
    #[serde(default)]
    pub cod: Vec<String>,
}

impl Names {
    pub fn dom_name(&self, i: usize) -> String {
        self.dom
            .get(i)
            .cloned()
            .unwrap_or_else(|| format!("x{}", i + 1))
    }

    pub fn cod_name(&self, i: usize) -> String {
        self.cod
            .get(i)
            .cloned()
            .unwrap_or_else(|| format!("y{}", i + 1))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExprFile {
    pub names: Names,
    pub defs: BTreeMap<String, Expr>,
    pub expr: Expr,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default)]
    names: Names,
    #[serde(default)]
    defs: BTreeMap<String, Value>,
    expr: Value,
}

pub fn parse_file(text: &str) -> Result<ExprFile, CliError> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let defs = raw
        .defs
        .iter()
        .map(|(k, v)| Ok((k.clone(), parse_expr(v, &format!("defs.{k}"))?)))
        .collect::<Result<_, CliError>>()?;
    Ok(ExprFile {
        names: raw.names,
        defs,
        expr: parse_expr(&raw.expr, "expr")?,
    })
}

fn size(v: &Value, path: &str) -> Result<usize, CliError> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| CliError::Parse(format!("{path}: expected a natural number, found {v}")))
}

pub fn parse_expr(v: &Value, path: &str) -> Result<Expr, CliError> {
    let obj = v
        .as_object()
        .ok_or_else(|| CliError::Parse(format!("{path}: expected an object, found {v}")))?;
    let key = |k: &str| obj.get(k);
    if let Some(n) = key("id") {
        return Ok(Expr::Id(size(n, &format!("{path}.id"))?));
    }
    if let Some(kind) = key("frobenius") {
        let name = kind
            .as_str()
            .ok_or_else(|| CliError::Parse(format!("{path}.frobenius: expected a string")))?;
        let which = Frobenius::parse(name).ok_or_else(|| {
            CliError::Unknown(format!("{path}.frobenius: unknown generator {name:?}"))
        })?;
        let n = key("size")
            .ok_or_else(|| CliError::Parse(format!("{path}: frobenius needs a size")))?;
        return Ok(Expr::Frobenius(which, size(n, &format!("{path}.size"))?));
    }
    if let Some(b) = key("braid") {
        let pair = b
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| CliError::Parse(format!("{path}.braid: expected [x, y]")))?;
        return Ok(Expr::Braid(
            size(&pair[0], &format!("{path}.braid[0]"))?,
            size(&pair[1], &format!("{path}.braid[1]"))?,
        ));
    }
    for (k, build) in [
        ("compose", Expr::Compose as fn(Vec<Expr>) -> Expr),
        ("tensor", Expr::Tensor),
    ] {
        if let Some(list) = key(k) {
            let items = list
                .as_array()
                .filter(|a| !a.is_empty())
                .ok_or_else(|| CliError::Parse(format!("{path}.{k}: expected a nonempty list")))?;
            let parts = items
                .iter()
                .enumerate()
                .map(|(i, t)| parse_expr(t, &format!("{path}.{k}[{i}]")))
                .collect::<Result<_, _>>()?;
            return Ok(build(parts));
        }
    }
    if let Some(name) = key("gen") {
        let name = name
            .as_str()
            .ok_or_else(|| CliError::Parse(format!("{path}.gen: expected a name")))?;
        return Ok(Expr::Gen(name.to_string()));
    }
    for kind in LITERAL_KINDS {
        if let Some(body) = key(kind) {
            return Ok(Expr::Literal(kind.to_string(), body.clone()));
        }
    }
    Err(CliError::Parse(format!(
        "{path}: unrecognised term with keys {:?}",
        obj.keys().collect::<Vec<_>>()
    )))
}
