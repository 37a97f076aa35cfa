//! How each category reads literals and renders morphisms.

use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use super::expr::Names;
use super::CliError;
use crate::base::FinSet;
use crate::circuits::{open_circuit, CircuitContract, GraphJson, LabeledGraph};
use crate::cospan::Cospan;
use crate::decorate::{restrict, DecoratedCospan};
use crate::factorisation::{e_part, Corelation};
use crate::finset::{FactorisationSystem, FinFn};
use crate::lawcheck::instances::{
    CorelInstance, CorruptedCospanInstance, CospanInstance, DecoratedCorelInstance,
    DecoratedCospanInstance, RigMatInstance,
};
use crate::lawcheck::sample::SampleRig;
use crate::lawcheck::HypergraphInstance;
use crate::linrel::{
    lincorel_from_relation, lincorel_relation, LinContract, Subspace, SubspaceJson,
};
use crate::rigmat::{
    decorated_span, matrix_to_corelation, span_entries, to_matrix, DecoratedSpan, MatrixJson,
    RigContract, RigMatrix,
};

/// A law-checkable category that the command line can read and print.
pub trait CliCategory: HypergraphInstance {
    /// Literal kinds (keys of a literal term) this category accepts.
    fn literal_kinds(&self) -> &'static [&'static str];

    /// Builds a morphism from a literal whose kind is in `literal_kinds`.
    fn literal(&self, kind: &str, body: &Value) -> Result<Self::Mor, CliError>;

    fn render(&self, f: &Self::Mor, names: &Names) -> Value;
}

fn body<T: DeserializeOwned>(kind: &str, v: &Value) -> Result<T, CliError> {
    T::deserialize(v).map_err(|e| CliError::Parse(format!("malformed {kind} literal: {e}")))
}

fn invalid(e: crate::Error) -> CliError {
    CliError::Parse(format!("invalid literal: {e}"))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CospanLit {
    apex: usize,
    left: Vec<usize>,
    right: Vec<usize>,
}

fn cospan_literal(v: &Value) -> Result<Cospan, CliError> {
    let c: CospanLit = body("cospan", v)?;
    Cospan::new(
        FinFn::new(c.apex, c.left).map_err(invalid)?,
        FinFn::new(c.apex, c.right).map_err(invalid)?,
    )
    .map_err(invalid)
}

/// Apex points as blocks of foot names, ordered by least element; isolated
/// points come last as empty blocks.
fn named_blocks(c: &Cospan, names: &Names) -> Value {
    let mut blocks: Vec<(Vec<usize>, Vec<String>)> = c
        .signatures()
        .into_iter()
        .map(|(xs, ys)| {
            let key = xs
                .iter()
                .copied()
                .chain(ys.iter().map(|y| y + c.dom()))
                .collect();
            let named = xs
                .iter()
                .map(|&x| names.dom_name(x))
                .chain(ys.iter().map(|&y| names.cod_name(y)))
                .collect();
            (key, named)
        })
        .collect();
    blocks.sort_by_key(|(key, _)| key.first().copied().unwrap_or(usize::MAX));
    json!({
        "dom": c.dom(),
        "cod": c.cod(),
        "apex": c.apex(),
        "blocks": blocks.into_iter().map(|(_, b)| b).collect::<Vec<_>>(),
    })
}

impl CliCategory for CospanInstance {
    fn literal_kinds(&self) -> &'static [&'static str] {
        &["cospan"]
    }
    fn literal(&self, _kind: &str, body: &Value) -> Result<Cospan, CliError> {
        cospan_literal(body)
    }
    fn render(&self, f: &Cospan, names: &Names) -> Value {
        named_blocks(f, names)
    }
}

impl CliCategory for CorruptedCospanInstance {
    fn literal_kinds(&self) -> &'static [&'static str] {
        &["cospan"]
    }
    fn literal(&self, _kind: &str, body: &Value) -> Result<Cospan, CliError> {
        cospan_literal(body)
    }
    fn render(&self, f: &Cospan, names: &Names) -> Value {
        named_blocks(f, names)
    }
}

impl CliCategory for CorelInstance {
    fn literal_kinds(&self) -> &'static [&'static str] {
        &["cospan"]
    }
    fn literal(&self, _kind: &str, body: &Value) -> Result<Corelation, CliError> {
        Ok(e_part(self.0, &cospan_literal(body)?))
    }
    fn render(&self, f: &Corelation, names: &Names) -> Value {
        let mut v = named_blocks(f.cospan(), names);
        v["system"] = json!(self.0.name());
        v
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CircuitLit {
    left: Vec<usize>,
    right: Vec<usize>,
    graph: GraphJson,
}

fn circuit_literal(v: &Value) -> Result<DecoratedCospan<FinSet, LabeledGraph>, CliError> {
    let c: CircuitLit = body("circuit", v)?;
    let g = LabeledGraph::from_json(&c.graph).map_err(invalid)?;
    open_circuit(&c.left, &c.right, g).map_err(invalid)
}

fn render_circuit(f: &DecoratedCospan<FinSet, LabeledGraph>) -> Value {
    let graph = LabeledGraph::new(f.dec.vertices(), f.dec.sorted_edges()).expect("same graph");
    json!({
        "dom": f.dom(),
        "cod": f.cod(),
        "apex": f.cospan.apex(),
        "left": f.cospan.left().table(),
        "right": f.cospan.right().table(),
        "graph": graph.to_json(),
    })
}

impl CliCategory for DecoratedCospanInstance<CircuitContract> {
    fn literal_kinds(&self) -> &'static [&'static str] {
        &["circuit"]
    }
    fn literal(&self, _kind: &str, body: &Value) -> Result<Self::Mor, CliError> {
        circuit_literal(body)
    }
    fn render(&self, f: &Self::Mor, _names: &Names) -> Value {
        render_circuit(f)
    }
}

impl CliCategory for DecoratedCorelInstance<CircuitContract> {
    fn literal_kinds(&self) -> &'static [&'static str] {
        &["circuit"]
    }
    fn literal(&self, _kind: &str, body: &Value) -> Result<Self::Mor, CliError> {
        restrict(&self.contract, self.sys, &circuit_literal(body)?).map_err(invalid)
    }
    fn render(&self, f: &Self::Mor, _names: &Names) -> Value {
        let mut v = render_circuit(&f.to_cospan());
        v["system"] = json!(self.sys.name());
        v
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpanLit {
    dom: usize,
    cod: usize,
    entries: Vec<(usize, usize, String)>,
}

fn rig_value<R: SampleRig>(s: &str) -> Result<R, CliError> {
    R::parse(s)
        .ok_or_else(|| CliError::Parse(format!("not an element of the {} rig: {s:?}", R::NAME)))
}

fn span_literal<R: SampleRig>(v: &Value) -> Result<DecoratedSpan<R>, CliError> {
    let s: SpanLit = body("span", v)?;
    let entries = s
        .entries
        .iter()
        .map(|(x, y, e)| Ok((*x, *y, rig_value::<R>(e)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    decorated_span(s.dom, s.cod, &entries).map_err(invalid)
}

fn matrix_literal<R: SampleRig>(v: &Value) -> Result<RigMatrix<R>, CliError> {
    let m: MatrixJson = body("matrix", v)?;
    RigMatrix::from_json(&m).map_err(invalid)
}

fn render_span<R: SampleRig>(f: &DecoratedSpan<R>) -> Value {
    let entries: Vec<_> = span_entries(f)
        .into_iter()
        .map(|(x, y, v)| json!([x, y, v.render()]))
        .collect();
    json!({
        "dom": f.dom(),
        "cod": f.cod(),
        "apex": f.cospan.apex(),
        "entries": entries,
        "matrix": to_matrix(f).to_json(),
    })
}

impl<R: SampleRig> CliCategory for RigMatInstance<R> {
    fn literal_kinds(&self) -> &'static [&'static str] {
        &["matrix", "span"]
    }
    fn literal(&self, kind: &str, body: &Value) -> Result<RigMatrix<R>, CliError> {
        match kind {
            "matrix" => matrix_literal(body),
            _ => Ok(to_matrix(&span_literal::<R>(body)?)),
        }
    }
    fn render(&self, f: &RigMatrix<R>, _names: &Names) -> Value {
        serde_json::to_value(f.to_json()).expect("matrix serialises")
    }
}

impl<R: SampleRig> CliCategory for DecoratedCospanInstance<RigContract<R>> {
    fn literal_kinds(&self) -> &'static [&'static str] {
        &["span"]
    }
    fn literal(&self, _kind: &str, body: &Value) -> Result<Self::Mor, CliError> {
        span_literal(body)
    }
    fn render(&self, f: &Self::Mor, _names: &Names) -> Value {
        render_span(f)
    }
}

impl<R: SampleRig> CliCategory for DecoratedCorelInstance<RigContract<R>> {
    fn literal_kinds(&self) -> &'static [&'static str] {
        &["span", "matrix"]
    }
    fn literal(&self, kind: &str, body: &Value) -> Result<Self::Mor, CliError> {
        let span = match kind {
            "matrix" => matrix_to_corelation(&matrix_literal::<R>(body)?).to_cospan(),
            _ => span_literal(body)?,
        };
        restrict(&self.contract, self.sys, &span).map_err(invalid)
    }
    fn render(&self, f: &Self::Mor, _names: &Names) -> Value {
        let mut v = render_span(&f.to_cospan());
        v["system"] = json!(self.sys.name());
        v
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationLit {
    dom: usize,
    ambient: usize,
    basis: Vec<Vec<String>>,
}

impl CliCategory for DecoratedCorelInstance<LinContract> {
    fn literal_kinds(&self) -> &'static [&'static str] {
        &["relation"]
    }
    fn literal(&self, _kind: &str, v: &Value) -> Result<Self::Mor, CliError> {
        let r: RelationLit = body("relation", v)?;
        let l = Subspace::from_json(&SubspaceJson {
            ambient: r.ambient,
            basis: r.basis,
        })
        .map_err(invalid)?;
        lincorel_from_relation(&l, r.dom).map_err(invalid)
    }
    fn render(&self, f: &Self::Mor, _names: &Names) -> Value {
        let rel = lincorel_relation(f).to_json();
        json!({
            "dom": f.dom(),
            "cod": f.cod(),
            "dim": rel.basis.len(),
            "basis": rel.basis,
        })
    }
}

/// Names accepted by `--category`, for help text and error messages.
pub const CATEGORY_NAMES: [&str; 11] = [
    "cospan",
    "corel",
    "epi-mono-corel",
    "corrupted-cospan",
    "circuit",
    "circuit-corel",
    "rigmat",
    "rig-cospan",
    "rig-corel",
    "lincorel",
    "rigspan",
];

/// Default system for a category's corelations when `--system` is absent.
pub fn default_system(category: &str) -> FactorisationSystem {
    match category {
        "rig-corel" | "rig-cospan" | "rigspan" | "lincorel" => FactorisationSystem::IsoAll,
        // Circuit graphs can only be pulled back when no edge leaves the
        // image, so the safe default keeps every apex point.
        "circuit" | "circuit-corel" => FactorisationSystem::AllIso,
        _ => FactorisationSystem::EpiMono,
    }
}
