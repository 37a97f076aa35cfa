//! Hypergraph categories to check: cospans, corelations, their decorated
//! versions, rig matrices, and a deliberately broken fixture.

use std::fmt::Debug;

use rand::rngs::StdRng;

use crate::base::{Base, FinSet};
use crate::cospan::{Cospan, Frobenius};
use crate::decorate::{
    dcorel_compose, dcorel_iso_eq, dcorel_tensor, dcospan_braid, dcospan_compose,
    dcospan_frobenius, dcospan_identity, dcospan_iso_eq, dcospan_tensor, empty_decoration,
    restrict, DecoratedCorelation, DecoratedCospan,
};
use crate::error::Result;
use crate::factorisation::{e_part, Corelation};
use crate::finset::{FactorisationSystem, FinFn};
use crate::rigmat::{kronecker, mat_compose, RigMatrix};

use super::sample::{random_cospan, random_matrix, SampleDecoration, SampleRig};
use super::HypergraphInstance;

/// `Cospan(FinSet)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct CospanInstance;

impl HypergraphInstance for CospanInstance {
    type Mor = Cospan;

    fn name(&self) -> String {
        "cospan".into()
    }
    fn obj_tensor(&self, x: usize, y: usize) -> usize {
        x + y
    }
    fn unit_obj(&self) -> usize {
        0
    }
    fn dom(&self, f: &Cospan) -> usize {
        f.dom()
    }
    fn cod(&self, f: &Cospan) -> usize {
        f.cod()
    }
    fn identity(&self, x: usize) -> Cospan {
        Cospan::identity(x)
    }
    fn generator(&self, x: usize, which: Frobenius) -> Cospan {
        Cospan::frobenius(x, which)
    }
    fn braid(&self, x: usize, y: usize) -> Cospan {
        Cospan::braid(x, y)
    }
    fn compose(&self, f: &Cospan, g: &Cospan) -> Result<Cospan> {
        f.compose(g)
    }
    fn tensor(&self, f: &Cospan, g: &Cospan) -> Result<Cospan> {
        Ok(f.tensor(g))
    }
    fn equal(&self, f: &Cospan, g: &Cospan) -> Result<bool> {
        Ok(f.iso_eq(g))
    }
    fn sample(&self, x: usize, y: usize, budget: usize, rng: &mut StdRng) -> Cospan {
        random_cospan(x, y, budget, rng)
    }
    fn describe(&self, f: &Cospan) -> String {
        format!("{f:?}")
    }
}

/// `Cospan(FinSet)` with the multiplication on size 2 twisted by the swap
/// of its output: `μ'` sends both copies of point `i` to `1 - i`. The twist
/// is invisible to commutativity but breaks the unit and Frobenius laws.
#[derive(Debug, Clone, Copy, Default)]
pub struct CorruptedCospanInstance;

impl HypergraphInstance for CorruptedCospanInstance {
    type Mor = Cospan;

    fn name(&self) -> String {
        "corrupted-cospan".into()
    }
    fn obj_tensor(&self, x: usize, y: usize) -> usize {
        x + y
    }
    fn unit_obj(&self) -> usize {
        0
    }
    fn dom(&self, f: &Cospan) -> usize {
        f.dom()
    }
    fn cod(&self, f: &Cospan) -> usize {
        f.cod()
    }
    fn identity(&self, x: usize) -> Cospan {
        Cospan::identity(x)
    }
    fn generator(&self, x: usize, which: Frobenius) -> Cospan {
        if x == 2 && which == Frobenius::Mu {
            let left = FinFn::new(2, vec![1, 0, 1, 0]).expect("twisted fold");
            return Cospan::new(left, FinFn::identity(2)).expect("apex 2");
        }
        Cospan::frobenius(x, which)
    }
    fn braid(&self, x: usize, y: usize) -> Cospan {
        Cospan::braid(x, y)
    }
    fn compose(&self, f: &Cospan, g: &Cospan) -> Result<Cospan> {
        f.compose(g)
    }
    fn tensor(&self, f: &Cospan, g: &Cospan) -> Result<Cospan> {
        Ok(f.tensor(g))
    }
    fn equal(&self, f: &Cospan, g: &Cospan) -> Result<bool> {
        Ok(f.iso_eq(g))
    }
    fn sample(&self, x: usize, y: usize, budget: usize, rng: &mut StdRng) -> Cospan {
        random_cospan(x, y, budget, rng)
    }
    fn describe(&self, f: &Cospan) -> String {
        format!("{f:?}")
    }
}

/// `Corel(FinSet)` for a chosen factorisation system.
#[derive(Debug, Clone, Copy)]
pub struct CorelInstance(pub FactorisationSystem);

impl HypergraphInstance for CorelInstance {
    type Mor = Corelation;

    fn name(&self) -> String {
        format!("corel:{}", self.0.name())
    }
    fn obj_tensor(&self, x: usize, y: usize) -> usize {
        x + y
    }
    fn unit_obj(&self) -> usize {
        0
    }
    fn dom(&self, f: &Corelation) -> usize {
        f.dom()
    }
    fn cod(&self, f: &Corelation) -> usize {
        f.cod()
    }
    fn identity(&self, x: usize) -> Corelation {
        Corelation::identity(self.0, x)
    }
    fn generator(&self, x: usize, which: Frobenius) -> Corelation {
        Corelation::frobenius(self.0, x, which)
    }
    fn braid(&self, x: usize, y: usize) -> Corelation {
        Corelation::braid(self.0, x, y)
    }
    fn compose(&self, f: &Corelation, g: &Corelation) -> Result<Corelation> {
        f.compose(g)
    }
    fn tensor(&self, f: &Corelation, g: &Corelation) -> Result<Corelation> {
        f.tensor(g)
    }
    fn equal(&self, f: &Corelation, g: &Corelation) -> Result<bool> {
        Ok(f.iso_eq(g))
    }
    fn sample(&self, x: usize, y: usize, budget: usize, rng: &mut StdRng) -> Corelation {
        e_part(self.0, &random_cospan::<FinSet>(x, y, budget, rng))
    }
    fn describe(&self, f: &Corelation) -> String {
        format!("{:?}", f.cospan())
    }
}

/// Decorated cospans for a decoration contract, over its base.
#[derive(Debug, Clone, Copy, Default)]
pub struct DecoratedCospanInstance<F>(pub F);

impl<F> HypergraphInstance for DecoratedCospanInstance<F>
where
    F: SampleDecoration,
    F::Dec: Debug,
{
    type Mor = DecoratedCospan<F::Base, F::Dec>;

    fn name(&self) -> String {
        format!("decorated-cospan:{}", self.0.name())
    }
    fn obj_tensor(&self, x: usize, y: usize) -> usize {
        <F::Base as Base>::coproduct(x, y).size
    }
    fn unit_obj(&self) -> usize {
        <F::Base as Base>::initial()
    }
    fn dom(&self, f: &Self::Mor) -> usize {
        f.dom()
    }
    fn cod(&self, f: &Self::Mor) -> usize {
        f.cod()
    }
    fn identity(&self, x: usize) -> Self::Mor {
        dcospan_identity(&self.0, x)
    }
    fn generator(&self, x: usize, which: Frobenius) -> Self::Mor {
        dcospan_frobenius(&self.0, x, which)
    }
    fn braid(&self, x: usize, y: usize) -> Self::Mor {
        dcospan_braid(&self.0, x, y)
    }
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        dcospan_compose(&self.0, f, g)
    }
    fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        Ok(dcospan_tensor(&self.0, f, g))
    }
    fn equal(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool> {
        dcospan_iso_eq(&self.0, f, g)
    }
    fn sample(&self, x: usize, y: usize, budget: usize, rng: &mut StdRng) -> Self::Mor {
        let cospan = random_cospan::<F::Base>(x, y, budget, rng);
        let dec = self.0.sample_dec(cospan.apex(), rng);
        DecoratedCospan { cospan, dec }
    }
    fn describe(&self, f: &Self::Mor) -> String {
        format!("{:?} decorated {:?}", f.cospan, f.dec)
    }
}

/// Decorated corelations for a contract and factorisation system.
#[derive(Debug, Clone, Copy)]
pub struct DecoratedCorelInstance<F> {
    pub contract: F,
    pub sys: FactorisationSystem,
}

impl<F> HypergraphInstance for DecoratedCorelInstance<F>
where
    F: SampleDecoration,
    F::Dec: Debug,
{
    type Mor = DecoratedCorelation<F::Base, F::Dec>;

    fn name(&self) -> String {
        format!(
            "decorated-corel:{}:{}",
            self.contract.name(),
            self.sys.name()
        )
    }
    fn obj_tensor(&self, x: usize, y: usize) -> usize {
        <F::Base as Base>::coproduct(x, y).size
    }
    fn unit_obj(&self) -> usize {
        <F::Base as Base>::initial()
    }
    fn dom(&self, f: &Self::Mor) -> usize {
        f.dom()
    }
    fn cod(&self, f: &Self::Mor) -> usize {
        f.cod()
    }
    fn identity(&self, x: usize) -> Self::Mor {
        restrict(
            &self.contract,
            self.sys,
            &dcospan_identity(&self.contract, x),
        )
        .expect("empty decorations restrict")
    }
    fn generator(&self, x: usize, which: Frobenius) -> Self::Mor {
        restrict(
            &self.contract,
            self.sys,
            &dcospan_frobenius(&self.contract, x, which),
        )
        .expect("empty decorations restrict")
    }
    fn braid(&self, x: usize, y: usize) -> Self::Mor {
        restrict(
            &self.contract,
            self.sys,
            &dcospan_braid(&self.contract, x, y),
        )
        .expect("empty decorations restrict")
    }
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        dcorel_compose(&self.contract, self.sys, f, g)
    }
    fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        dcorel_tensor(&self.contract, f, g)
    }
    fn equal(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool> {
        dcorel_iso_eq(&self.contract, f, g)
    }
    /// Restricts a random decorated cospan; if the decoration cannot be
    /// pulled back, the empty decoration is used instead.
    fn sample(&self, x: usize, y: usize, budget: usize, rng: &mut StdRng) -> Self::Mor {
        let cospan = random_cospan::<F::Base>(x, y, budget, rng);
        let dec = self.contract.sample_dec(cospan.apex(), rng);
        let decorated = DecoratedCospan { cospan, dec };
        restrict(&self.contract, self.sys, &decorated).unwrap_or_else(|_| {
            let empty = DecoratedCospan {
                dec: empty_decoration(&self.contract, decorated.cospan.apex()),
                cospan: decorated.cospan,
            };
            restrict(&self.contract, self.sys, &empty).expect("empty decorations restrict")
        })
    }
    fn describe(&self, f: &Self::Mor) -> String {
        format!("{:?} decorated {:?}", f.corel.cospan(), f.dec)
    }
}

/// Matrices over a rig with the Kronecker product: objects are finite sets,
/// `X ⊗ Y = X × Y`, and the Frobenius structure is the diagonal one.
#[derive(Debug, Clone, Copy, Default)]
pub struct RigMatInstance<R>(std::marker::PhantomData<R>);

impl<R> RigMatInstance<R> {
    pub fn new() -> Self {
        Self(std::marker::PhantomData)
    }
}

/// The 0/1 matrix with ones at `pairs`.
fn graph_matrix<R: SampleRig>(
    rows: usize,
    cols: usize,
    pairs: impl Iterator<Item = (usize, usize)>,
) -> RigMatrix<R> {
    let mut m = RigMatrix::zeros(rows, cols);
    for (r, c) in pairs {
        m.entries[r * cols + c] = R::one();
    }
    m
}

impl<R: SampleRig> HypergraphInstance for RigMatInstance<R> {
    type Mor = RigMatrix<R>;

    fn name(&self) -> String {
        format!("rigmat:{}", R::NAME)
    }
    fn obj_tensor(&self, x: usize, y: usize) -> usize {
        x * y
    }
    fn unit_obj(&self) -> usize {
        1
    }
    fn dom(&self, f: &Self::Mor) -> usize {
        f.rows
    }
    fn cod(&self, f: &Self::Mor) -> usize {
        f.cols
    }
    fn identity(&self, x: usize) -> Self::Mor {
        RigMatrix::identity(x)
    }
    fn generator(&self, x: usize, which: Frobenius) -> Self::Mor {
        let diag = (0..x).map(|i| (i * x + i, i));
        match which {
            Frobenius::Mu => graph_matrix(x * x, x, diag),
            Frobenius::Delta => graph_matrix(x, x * x, diag.map(|(a, b)| (b, a))),
            Frobenius::Eta => graph_matrix(1, x, (0..x).map(|i| (0, i))),
            Frobenius::Epsilon => graph_matrix(x, 1, (0..x).map(|i| (i, 0))),
        }
    }
    fn braid(&self, x: usize, y: usize) -> Self::Mor {
        graph_matrix(
            x * y,
            y * x,
            (0..x).flat_map(|a| (0..y).map(move |b| (a * y + b, b * x + a))),
        )
    }
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        mat_compose(f, g)
    }
    fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        Ok(kronecker(f, g))
    }
    fn equal(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool> {
        Ok(f.rig_eq(g))
    }
    fn sample(&self, x: usize, y: usize, _budget: usize, rng: &mut StdRng) -> Self::Mor {
        random_matrix(x, y, rng)
    }
    fn describe(&self, f: &Self::Mor) -> String {
        let rows: Vec<Vec<String>> = f
            .entries
            .chunks(f.cols.max(1))
            .take(f.rows)
            .map(|r| r.iter().map(|v| v.render()).collect())
            .collect();
        format!("{}x{} {:?}", f.rows, f.cols, rows)
    }
}

/// Rig-decorated spans, i.e. multivalued matrices.
pub type RigSpanInstance<R> = DecoratedCospanInstance<crate::rigmat::RigContract<R>>;

pub fn rig_span_instance<R: SampleRig>() -> RigSpanInstance<R> {
    DecoratedCospanInstance(crate::rigmat::RigContract::new())
}

/// Rig-decorated corelations under `sys` on `FinSet^op`.
pub fn rig_corel_instance<R: SampleRig>(
    sys: FactorisationSystem,
) -> DecoratedCorelInstance<crate::rigmat::RigContract<R>> {
    DecoratedCorelInstance {
        contract: crate::rigmat::RigContract::new(),
        sys,
    }
}

/// `LinCorel`: decorated corelations over [`crate::linrel::LinContract`]
/// with the `iso-all` system.
pub fn lincorel_instance() -> DecoratedCorelInstance<crate::linrel::LinContract> {
    DecoratedCorelInstance {
        contract: crate::linrel::LinContract,
        sys: FactorisationSystem::IsoAll,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lawcheck::{check_frobenius, evaluate, terms::catalogue, Status};
    use crate::rational::Q;
    use crate::rigmat::to_matrix;

    #[test]
    fn cospan_and_corel_pass() {
        assert!(check_frobenius(&CospanInstance, 2).all_pass());
        for sys in FactorisationSystem::ALL {
            let r = check_frobenius(&CorelInstance(sys), 2);
            assert!(r.all_pass(), "{sys:?}: {:?}", r.failures().next());
        }
    }

    #[test]
    fn corrupted_fixture() {
        let r = check_frobenius(&CorruptedCospanInstance, 2);
        assert!(r
            .status_of("commutativity")
            .iter()
            .all(|s| *s == Status::Pass));
        assert!(r.status_of("frobenius left").contains(&Status::Fail));
        assert!(!r.all_pass());
    }

    #[test]
    fn rig_matrices_match_rig_spans() {
        let spans = rig_span_instance::<Q>();
        let mats = RigMatInstance::<Q>::new();
        for ax in catalogue() {
            for x in 0..=2 {
                for y in 0..=1 {
                    let s = evaluate(&spans, &ax.lhs, x, y).unwrap();
                    let m = evaluate(&mats, &ax.lhs, x, y).unwrap();
                    assert_eq!(to_matrix(&s), m, "{} at {x},{y}", ax.name);
                }
            }
        }
    }
}
