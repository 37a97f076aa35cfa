//! Matrices over a commutative rig as decorated spans.
//!
//! A decorated span `X <-i- N -o-> Y` with weights `s : N -> R` is a
//! multivalued matrix: each apex point is an entry of value `s(n)` at
//! `(i(n), o(n))`. Spans compose by pullback with pointwise products of
//! weights. Reducing along the `iso-all` factorisation of `FinSet^op` sums
//! parallel entries and leaves an honest `|X| × |Y|` matrix.

use std::fmt::Debug;
use std::marker::PhantomData;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::base::FinSetOp;
use crate::cospan::Cospan;
use crate::decorate::{
    dcospan_compose, restrict, DecoratedCorelation, DecoratedCospan, DecorationContract,
};
use crate::error::{Error, Result};
use crate::factorisation::Corelation;
use crate::finset::{FactorisationSystem, FinFn};
use crate::rational::{self, Q};

/// A commutative rig (semiring with commutative multiplication).
pub trait Rig: Clone + Debug + PartialEq + Send + Sync + 'static {
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn rig_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn parse(s: &str) -> Option<Self>;
    fn render(&self) -> String;
}

impl Rig for Q {
    const NAME: &'static str = "rational";

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn parse(s: &str) -> Option<Self> {
        rational::parse(s)
    }
    fn render(&self) -> String {
        rational::render(self)
    }
}

impl Rig for BigUint {
    const NAME: &'static str = "nat";

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn parse(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

/// Booleans under (or, and).
impl Rig for bool {
    const NAME: &'static str = "bool";

    fn zero() -> Self {
        false
    }
    fn one() -> Self {
        true
    }
    fn add(&self, other: &Self) -> Self {
        *self || *other
    }
    fn mul(&self, other: &Self) -> Self {
        *self && *other
    }
    fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "true" | "1" => Some(true),
            "false" | "0" => Some(false),
            _ => None,
        }
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

/// The rig homomorphism `ℕ -> Bool`, `n ↦ n > 0`.
pub fn nat_support(n: &BigUint) -> bool {
    !n.is_zero()
}

pub fn rig_sum<'a, R: Rig>(xs: impl IntoIterator<Item = &'a R>) -> R {
    xs.into_iter().fold(R::zero(), |acc, x| acc.add(x))
}

/// `N ↦ R^N` on `FinSet^op`, extended to all spans by fiber sums.
#[derive(Debug, Clone, Copy, Default)]
pub struct RigContract<R: Rig>(PhantomData<R>);

impl<R: Rig> RigContract<R> {
    pub fn new() -> Self {
        Self(PhantomData)
    }
}

impl<R: Rig> DecorationContract for RigContract<R> {
    type Base = FinSetOp;
    type Dec = Vec<R>;

    fn name(&self) -> String {
        format!("rig:{}", R::NAME)
    }

    fn carrier_contains(&self, n: usize, d: &Vec<R>) -> bool {
        d.len() == n
    }

    /// Precomposition `v ↦ v ∘ f` with the underlying function.
    fn push(&self, f: &FinFn, d: &Vec<R>) -> Vec<R> {
        f.table().iter().map(|&i| d[i].clone()).collect()
    }

    /// Fiber sum along the underlying function `N -> N̄`; empty fibers give
    /// zero.
    fn pull(&self, m: &FinFn, d: &Vec<R>) -> Result<Vec<R>> {
        let mut out = vec![R::zero(); m.cod()];
        for (i, &t) in m.table().iter().enumerate() {
            out[t] = out[t].add(&d[i]);
        }
        Ok(out)
    }

    fn supports(&self, _sys: FactorisationSystem) -> bool {
        true
    }

    /// Pointwise product on `N × M`.
    fn coherence(&self, dn: &Vec<R>, dm: &Vec<R>) -> Vec<R> {
        dn.iter()
            .flat_map(|a| dm.iter().map(move |b| a.mul(b)))
            .collect()
    }

    fn unit(&self) -> Vec<R> {
        vec![R::one()]
    }

    fn equal(&self, a: &Vec<R>, b: &Vec<R>) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.rig_eq(y))
    }

    fn point_key(&self, d: &Vec<R>, i: usize) -> Option<String> {
        d.get(i).map(Rig::render)
    }

    fn pointwise(&self) -> bool {
        true
    }

    fn coherence_then_push(&self, dn: &Vec<R>, dm: &Vec<R>, f: &FinFn) -> Vec<R> {
        let m = dm.len();
        f.table()
            .iter()
            .map(|&p| dn[p / m].mul(&dm[p % m]))
            .collect()
    }
}

pub type DecoratedSpan<R> = DecoratedCospan<FinSetOp, Vec<R>>;
pub type MatrixCorelation<R> = DecoratedCorelation<FinSetOp, Vec<R>>;

/// A span from `entries`, one apex point per `(x, y, value)`.
pub fn decorated_span<R: Rig>(
    rows: usize,
    cols: usize,
    entries: &[(usize, usize, R)],
) -> Result<DecoratedSpan<R>> {
    let i = FinFn::new(rows, entries.iter().map(|e| e.0).collect())?;
    let o = FinFn::new(cols, entries.iter().map(|e| e.1).collect())?;
    Ok(DecoratedCospan {
        cospan: Cospan::from_legs(i, o)?,
        dec: entries.iter().map(|e| e.2.clone()).collect(),
    })
}

/// The `(x, y, value)` entries of a multivalued matrix, in apex order.
pub fn span_entries<R: Rig>(f: &DecoratedSpan<R>) -> Vec<(usize, usize, R)> {
    let (i, o) = (f.cospan.left(), f.cospan.right());
    (0..f.cospan.apex())
        .map(|n| (i.apply(n), o.apply(n), f.dec[n].clone()))
        .collect()
}

pub fn span_compose<R: Rig>(
    f: &DecoratedSpan<R>,
    g: &DecoratedSpan<R>,
) -> Result<DecoratedSpan<R>> {
    dcospan_compose(&RigContract::<R>::new(), f, g)
}

/// Sums the entries over each `(x, y)`.
pub fn to_matrix<R: Rig>(f: &DecoratedSpan<R>) -> RigMatrix<R> {
    let mut m = RigMatrix::zeros(f.dom(), f.cod());
    for (x, y, v) in span_entries(f) {
        let e: &mut R = &mut m.entries[x * m.cols + y];
        *e = e.add(&v);
    }
    m
}

/// Dense row-major matrix over `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct RigMatrix<R: Rig> {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<R>,
}

impl<R: Rig> RigMatrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = R::one();
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.entries[r * self.cols + c]
    }

    pub fn map<S: Rig>(&self, h: impl Fn(&R) -> S) -> RigMatrix<S> {
        RigMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(h).collect(),
        }
    }

    pub fn rig_eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.rig_eq(b))
    }
}

impl<R: Rig> RigMatrix<R> {
    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|r| (0..self.cols).map(|c| self.get(r, c).render()).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &MatrixJson) -> Result<Self> {
        if j.entries.len() != j.rows || j.entries.iter().any(|r| r.len() != j.cols) {
            return Err(Error::DimensionMismatch(format!(
                "entries do not form a {}x{} matrix",
                j.rows, j.cols
            )));
        }
        let entries = j
            .entries
            .iter()
            .flatten()
            .map(|s| {
                R::parse(s).ok_or_else(|| {
                    Error::InvalidDecoration(format!(
                        "not an element of the {} rig: {s:?}",
                        R::NAME
                    ))
                })
            })
            .collect::<Result<_>>()?;
        Self::new(j.rows, j.cols, entries)
    }
}

/// Wire format `{"rows": r, "cols": c, "entries": [["p/q", ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

/// `a · b`, with `a : X -> Y` as an `|X| × |Y|` matrix.
pub fn mat_compose<R: Rig>(a: &RigMatrix<R>, b: &RigMatrix<R>) -> Result<RigMatrix<R>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = RigMatrix::zeros(a.rows, b.cols);
    for r in 0..a.rows {
        for k in 0..a.cols {
            let x = a.get(r, k);
            for c in 0..b.cols {
                let e: &mut R = &mut out.entries[r * b.cols + c];
                *e = e.add(&x.mul(b.get(k, c)));
            }
        }
    }
    Ok(out)
}

/// Entry `((x, x'), (y, y'))` is `a(x, y) · b(x', y')`, pairs row-major.
pub fn kronecker<R: Rig>(a: &RigMatrix<R>, b: &RigMatrix<R>) -> RigMatrix<R> {
    let (rows, cols) = (a.rows * b.rows, a.cols * b.cols);
    let mut entries = Vec::with_capacity(rows * cols);
    for x in 0..a.rows {
        for xp in 0..b.rows {
            for y in 0..a.cols {
                for yp in 0..b.cols {
                    entries.push(a.get(x, y).mul(b.get(xp, yp)));
                }
            }
        }
    }
    RigMatrix {
        rows,
        cols,
        entries,
    }
}

/// The decorated corelation `X <- X × Y -> Y` carrying `m`'s entries.
pub fn matrix_to_corelation<R: Rig>(m: &RigMatrix<R>) -> MatrixCorelation<R> {
    let size = m.rows * m.cols;
    let cols = m.cols;
    let i = FinFn::new(m.rows, (0..size).map(|p| p / cols).collect()).expect("row projection");
    let o = FinFn::new(cols, (0..size).map(|p| p % cols).collect()).expect("column projection");
    let corel = Corelation::new(
        FactorisationSystem::IsoAll,
        Cospan::from_legs(i, o).expect("projections"),
    )
    .expect("projections are jointly iso");
    DecoratedCorelation {
        corel,
        dec: m.entries.clone(),
    }
}

/// Reads the matrix off an `iso-all` decorated corelation.
pub fn corelation_to_matrix<R: Rig>(f: &MatrixCorelation<R>) -> Result<RigMatrix<R>> {
    if f.system() != FactorisationSystem::IsoAll {
        return Err(Error::SystemMismatch {
            left: f.system(),
            right: FactorisationSystem::IsoAll,
        });
    }
    Ok(to_matrix(&f.to_cospan()))
}

/// Blackboxes a multivalued matrix into a matrix corelation.
pub fn reduce_span<R: Rig>(f: &DecoratedSpan<R>) -> MatrixCorelation<R> {
    restrict(&RigContract::<R>::new(), FactorisationSystem::IsoAll, f)
        .expect("rig decorations pull along every span")
}
