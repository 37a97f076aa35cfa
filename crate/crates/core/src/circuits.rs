//! Open circuits: cospans of finite sets whose apex carries an
//! edge-labelled multigraph.
//!
//! Composition glues vertices along the pushout and keeps every edge of
//! both factors, so it accumulates structure rather than simplifying it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::base::FinSet;
use crate::cospan::Cospan;
use crate::decorate::{DecoratedCospan, DecorationContract};
use crate::error::{Error, Result};
use crate::finset::{FactorisationSystem, FinFn};
use crate::rational::{self, Q};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Value(Q),
    Symbol(String),
}

impl Label {
    /// Rationals are recognised; anything else is a symbol.
    pub fn parse(s: &str) -> Self {
        match rational::parse(s) {
            Some(q) => Self::Value(q),
            None => Self::Symbol(s.to_string()),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Self::Value(q) => rational::render(q),
            Self::Symbol(s) => s.clone(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// An undirected edge, stored with `u <= v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: Label,
}

impl Edge {
    pub fn new(a: usize, b: usize, label: Label) -> Self {
        Self {
            u: a.min(b),
            v: a.max(b),
            label,
        }
    }
}

/// A multigraph on `vertices` points; loops and parallel edges allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    vertices: usize,
    edges: Vec<Edge>,
}

impl LabeledGraph {
    pub fn new(vertices: usize, edges: Vec<Edge>) -> Result<Self> {
        if let Some(e) = edges.iter().find(|e| e.v >= vertices) {
            return Err(Error::InvalidDecoration(format!(
                "edge ({}, {}) leaves a graph on {vertices} vertices",
                e.u, e.v
            )));
        }
        Ok(Self { vertices, edges })
    }

    pub fn edgeless(vertices: usize) -> Self {
        Self {
            vertices,
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted, so equal multisets compare equal.
    pub fn sorted_edges(&self) -> Vec<Edge> {
        let mut e = self.edges.clone();
        e.sort();
        e
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.vertices,
            edges: self
                .edges
                .iter()
                .map(|e| (e.u, e.v, e.label.render()))
                .collect(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Self> {
        Self::new(
            j.vertices,
            j.edges
                .iter()
                .map(|(u, v, l)| Edge::new(*u, *v, Label::parse(l)))
                .collect(),
        )
    }
}

/// Wire format `{"vertices": n, "edges": [[u, v, "label"], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, String)>,
}

/// Graphs on the apex, relabelled forward along maps.
#[derive(Debug, Clone, Copy, Default)]
pub struct CircuitContract;

impl DecorationContract for CircuitContract {
    type Base = FinSet;
    type Dec = LabeledGraph;

    fn name(&self) -> String {
        "circuit".into()
    }

    fn carrier_contains(&self, n: usize, d: &LabeledGraph) -> bool {
        d.vertices == n && d.edges.iter().all(|e| e.u <= e.v && e.v < n)
    }

    fn push(&self, f: &FinFn, d: &LabeledGraph) -> LabeledGraph {
        LabeledGraph {
            vertices: f.cod(),
            edges: d
                .edges
                .iter()
                .map(|e| Edge::new(f.apply(e.u), f.apply(e.v), e.label.clone()))
                .collect(),
        }
    }

    /// Restriction to the image of an injection; fails if an edge touches a
    /// vertex outside it.
    fn pull(&self, m: &FinFn, d: &LabeledGraph) -> Result<LabeledGraph> {
        if !m.is_injective() {
            return Err(Error::PullUndefined(
                "circuit decorations pull back only along injections".into(),
            ));
        }
        let mut back = vec![None; m.cod()];
        for (k, &n) in m.table().iter().enumerate() {
            back[n] = Some(k);
        }
        let edges = d
            .edges
            .iter()
            .map(|e| match (back[e.u], back[e.v]) {
                (Some(a), Some(b)) => Ok(Edge::new(a, b, e.label.clone())),
                _ => Err(Error::PullUndefined(format!(
                    "edge ({}, {}) touches a vertex outside the image",
                    e.u, e.v
                ))),
            })
            .collect::<Result<_>>()?;
        Ok(LabeledGraph {
            vertices: m.dom(),
            edges,
        })
    }

    fn supports(&self, sys: FactorisationSystem) -> bool {
        matches!(
            sys,
            FactorisationSystem::AllIso | FactorisationSystem::EpiMono
        )
    }

    fn coherence(&self, dn: &LabeledGraph, dm: &LabeledGraph) -> LabeledGraph {
        let shift = dn.vertices;
        let edges = dn
            .edges
            .iter()
            .cloned()
            .chain(dm.edges.iter().map(|e| Edge {
                u: e.u + shift,
                v: e.v + shift,
                label: e.label.clone(),
            }))
            .collect();
        LabeledGraph {
            vertices: dn.vertices + dm.vertices,
            edges,
        }
    }

    fn unit(&self) -> LabeledGraph {
        LabeledGraph::edgeless(0)
    }

    fn equal(&self, a: &LabeledGraph, b: &LabeledGraph) -> bool {
        a.vertices == b.vertices && a.sorted_edges() == b.sorted_edges()
    }

    /// Labels of the incident edges, loops marked.
    fn point_key(&self, g: &LabeledGraph, i: usize) -> Option<String> {
        let mut labels: Vec<String> = g
            .edges
            .iter()
            .filter(|e| e.u == i || e.v == i)
            .map(|e| {
                if e.u == e.v {
                    format!("{}@", e.label)
                } else {
                    e.label.render()
                }
            })
            .collect();
        labels.sort();
        Some(labels.join(","))
    }
}

pub type OpenCircuit = DecoratedCospan<FinSet, LabeledGraph>;

/// An open circuit with terminals `inputs`, `outputs` on `graph`'s vertices.
pub fn open_circuit(
    inputs: &[usize],
    outputs: &[usize],
    graph: LabeledGraph,
) -> Result<OpenCircuit> {
    let n = graph.vertices();
    let cospan = Cospan::new(
        FinFn::new(n, inputs.to_vec())?,
        FinFn::new(n, outputs.to_vec())?,
    )?;
    DecoratedCospan::new(&CircuitContract, cospan, graph)
}

/// A single labelled edge between one input and one output terminal.
pub fn resistor(label: &str) -> OpenCircuit {
    let g = LabeledGraph::new(2, vec![Edge::new(0, 1, Label::parse(label))]).expect("two vertices");
    open_circuit(&[0], &[1], g).expect("valid terminals")
}
