//! Decorated cospans and decorated corelations.
//!
//! A decoration contract is a lax symmetric monoidal functor from
//! `C;M^op` into sets: it says how decorations move forward along maps of
//! the base ([`DecorationContract::push`]), backward along `M`-maps
//! ([`DecorationContract::pull`]), and how two decorations combine on a
//! coproduct ([`DecorationContract::coherence`]).
//!
//! Decorated cospans compose by pushing the combined decoration along the
//! copairing of the pushout injections. Decorated corelations additionally
//! pull the result back along the `M`-factor of the composite copairing.

use std::fmt::Debug;
use std::marker::PhantomData;

use itertools::Itertools;

use crate::base::{Base, Signature};
use crate::cospan::{Cospan, Frobenius};
use crate::error::{Error, Result};
use crate::factorisation::{reduce, Corelation};
use crate::finset::{FactorisationSystem, FinFn};

/// Interchangeable apex points allowed in one signature class during
/// isomorphism search.
pub const MAX_INTERCHANGEABLE: usize = 8;

pub trait DecorationContract {
    type Base: Base;
    type Dec: Clone + Debug + PartialEq;

    fn name(&self) -> String;

    /// Membership in the carrier set over an apex of size `n`.
    fn carrier_contains(&self, n: usize, d: &Self::Dec) -> bool;

    /// Covariant action along a base morphism `f : N -> M`.
    fn push(&self, f: &FinFn, d: &Self::Dec) -> Self::Dec;

    /// Action of `m^op` for `m : N̄ -> N` in `M`, taking a decoration on `N`
    /// to one on `N̄`.
    fn pull(&self, m: &FinFn, d: &Self::Dec) -> Result<Self::Dec>;

    /// Whether `pull` is available for every `M`-map of `sys`.
    fn supports(&self, sys: FactorisationSystem) -> bool;

    /// The lax structure map `F N × F M -> F(N + M)`.
    fn coherence(&self, dn: &Self::Dec, dm: &Self::Dec) -> Self::Dec;

    /// The decoration on the monoidal unit.
    fn unit(&self) -> Self::Dec;

    fn equal(&self, a: &Self::Dec, b: &Self::Dec) -> bool;

    /// `push(f, coherence(dn, dm))`. Contracts may fuse the two steps when
    /// the coherence apex is much larger than the target.
    fn coherence_then_push(&self, dn: &Self::Dec, dm: &Self::Dec, f: &FinFn) -> Self::Dec {
        self.push(f, &self.coherence(dn, dm))
    }

    /// An invariant of apex point `i` under relabelling, used to split
    /// interchangeable points before searching for an isomorphism.
    fn point_key(&self, _d: &Self::Dec, _i: usize) -> Option<String> {
        None
    }

    /// True when a decoration is exactly the family of its point keys, so
    /// points with equal keys are interchangeable and no search is needed.
    fn pointwise(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecoratedCospan<B: Base, D> {
    pub cospan: Cospan<B>,
    pub dec: D,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecoratedCorelation<B: Base, D> {
    pub corel: Corelation<B>,
    pub dec: D,
}

impl<B: Base, D> DecoratedCospan<B, D> {
    pub fn new<F>(contract: &F, cospan: Cospan<B>, dec: D) -> Result<Self>
    where
        F: DecorationContract<Base = B, Dec = D>,
    {
        if !contract.carrier_contains(cospan.apex(), &dec) {
            return Err(Error::InvalidDecoration(format!(
                "{} decoration does not live on an apex of size {}",
                contract.name(),
                cospan.apex()
            )));
        }
        Ok(Self { cospan, dec })
    }

    pub fn dom(&self) -> usize {
        self.cospan.dom()
    }

    pub fn cod(&self) -> usize {
        self.cospan.cod()
    }
}

impl<B: Base, D> DecoratedCorelation<B, D> {
    pub fn new<F>(contract: &F, corel: Corelation<B>, dec: D) -> Result<Self>
    where
        F: DecorationContract<Base = B, Dec = D>,
    {
        if !contract.carrier_contains(corel.apex(), &dec) {
            return Err(Error::InvalidDecoration(format!(
                "{} decoration does not live on an apex of size {}",
                contract.name(),
                corel.apex()
            )));
        }
        Ok(Self { corel, dec })
    }

    pub fn dom(&self) -> usize {
        self.corel.dom()
    }

    pub fn cod(&self) -> usize {
        self.corel.cod()
    }

    pub fn system(&self) -> FactorisationSystem {
        self.corel.system()
    }

    pub fn to_cospan(&self) -> DecoratedCospan<B, D>
    where
        D: Clone,
    {
        DecoratedCospan {
            cospan: self.corel.cospan().clone(),
            dec: self.dec.clone(),
        }
    }
}

/// `F(!) ∘ unit`: the decoration carrying no information.
pub fn empty_decoration<F: DecorationContract>(contract: &F, n: usize) -> F::Dec {
    contract.push(&<F::Base as Base>::bang(n), &contract.unit())
}

/// A cospan with the empty decoration.
pub fn with_empty<F: DecorationContract>(
    contract: &F,
    cospan: Cospan<F::Base>,
) -> DecoratedCospan<F::Base, F::Dec> {
    let dec = empty_decoration(contract, cospan.apex());
    DecoratedCospan { cospan, dec }
}

pub fn dcospan_identity<F: DecorationContract>(
    contract: &F,
    x: usize,
) -> DecoratedCospan<F::Base, F::Dec> {
    with_empty(contract, Cospan::identity(x))
}

pub fn dcospan_frobenius<F: DecorationContract>(
    contract: &F,
    x: usize,
    which: Frobenius,
) -> DecoratedCospan<F::Base, F::Dec> {
    with_empty(contract, Cospan::frobenius(x, which))
}

pub fn dcospan_braid<F: DecorationContract>(
    contract: &F,
    x: usize,
    y: usize,
) -> DecoratedCospan<F::Base, F::Dec> {
    with_empty(contract, Cospan::braid(x, y))
}

/// Composite decorated with `F[j_N, j_M](φ(s, t))`.
pub fn dcospan_compose<F: DecorationContract>(
    contract: &F,
    f: &DecoratedCospan<F::Base, F::Dec>,
    g: &DecoratedCospan<F::Base, F::Dec>,
) -> Result<DecoratedCospan<F::Base, F::Dec>> {
    let (cospan, jn, jm) = f.cospan.compose_with_legs(&g.cospan)?;
    let legs = <F::Base as Base>::copair(&jn, &jm)?;
    let dec = contract.coherence_then_push(&f.dec, &g.dec, &legs);
    Ok(DecoratedCospan { cospan, dec })
}

pub fn dcospan_tensor<F: DecorationContract>(
    contract: &F,
    f: &DecoratedCospan<F::Base, F::Dec>,
    g: &DecoratedCospan<F::Base, F::Dec>,
) -> DecoratedCospan<F::Base, F::Dec> {
    DecoratedCospan {
        cospan: f.cospan.tensor(&g.cospan),
        dec: contract.coherence(&f.dec, &g.dec),
    }
}

fn ensure_supported<F: DecorationContract>(contract: &F, sys: FactorisationSystem) -> Result<()> {
    if contract.supports(sys) {
        Ok(())
    } else {
        Err(Error::UnsupportedSystem {
            contract: contract.name(),
            system: sys,
        })
    }
}

/// Reduces a decorated cospan to a decorated corelation, pulling the
/// decoration back along the `M`-factor of the copairing.
pub fn restrict<F: DecorationContract>(
    contract: &F,
    sys: FactorisationSystem,
    f: &DecoratedCospan<F::Base, F::Dec>,
) -> Result<DecoratedCorelation<F::Base, F::Dec>> {
    ensure_supported(contract, sys)?;
    let r = reduce(sys, &f.cospan);
    let dec = contract.pull(&r.m, &f.dec)?;
    Ok(DecoratedCorelation {
        corel: r.corelation,
        dec,
    })
}

/// The functor `FCospan -> FCorel`.
pub fn blackbox<F: DecorationContract>(
    contract: &F,
    sys: FactorisationSystem,
    f: &DecoratedCospan<F::Base, F::Dec>,
) -> Result<DecoratedCorelation<F::Base, F::Dec>> {
    restrict(contract, sys, f)
}

pub fn dcorel_compose<F: DecorationContract>(
    contract: &F,
    sys: FactorisationSystem,
    f: &DecoratedCorelation<F::Base, F::Dec>,
    g: &DecoratedCorelation<F::Base, F::Dec>,
) -> Result<DecoratedCorelation<F::Base, F::Dec>> {
    for s in [f.system(), g.system()] {
        if s != sys {
            return Err(Error::SystemMismatch {
                left: s,
                right: sys,
            });
        }
    }
    let composite = dcospan_compose(contract, &f.to_cospan(), &g.to_cospan())?;
    restrict(contract, sys, &composite)
}

pub fn dcorel_tensor<F: DecorationContract>(
    contract: &F,
    f: &DecoratedCorelation<F::Base, F::Dec>,
    g: &DecoratedCorelation<F::Base, F::Dec>,
) -> Result<DecoratedCorelation<F::Base, F::Dec>> {
    Ok(DecoratedCorelation {
        corel: f.corel.tensor(&g.corel)?,
        dec: contract.coherence(&f.dec, &g.dec),
    })
}

pub fn dcorel_identity<F: DecorationContract>(
    contract: &F,
    sys: FactorisationSystem,
    x: usize,
) -> Result<DecoratedCorelation<F::Base, F::Dec>> {
    restrict(contract, sys, &dcospan_identity(contract, x))
}

pub fn dcorel_frobenius<F: DecorationContract>(
    contract: &F,
    sys: FactorisationSystem,
    x: usize,
    which: Frobenius,
) -> Result<DecoratedCorelation<F::Base, F::Dec>> {
    restrict(contract, sys, &dcospan_frobenius(contract, x, which))
}

pub fn dcorel_braid<F: DecorationContract>(
    contract: &F,
    sys: FactorisationSystem,
    x: usize,
    y: usize,
) -> Result<DecoratedCorelation<F::Base, F::Dec>> {
    restrict(contract, sys, &dcospan_braid(contract, x, y))
}

/// Functor between decorated corelation categories induced by a
/// factorisation-system arrow `from -> to` and a monoidal natural
/// transformation `theta : F => G`.
pub fn transform_functor<F, G, T>(
    from: FactorisationSystem,
    to: FactorisationSystem,
    theta: T,
    target: &G,
    f: &DecoratedCorelation<F::Base, F::Dec>,
) -> Result<DecoratedCorelation<G::Base, G::Dec>>
where
    F: DecorationContract,
    G: DecorationContract<Base = F::Base>,
    T: Fn(&F::Dec) -> G::Dec,
{
    if f.system() != from {
        return Err(Error::SystemMismatch {
            left: f.system(),
            right: from,
        });
    }
    if !from.m_included_in(to) {
        return Err(Error::IncomparableSystems { from, to });
    }
    let translated = DecoratedCospan {
        cospan: f.corel.cospan().clone(),
        dec: theta(&f.dec),
    };
    restrict(target, to, &translated)
}

/// Searches for an apex bijection commuting with both legs that carries
/// `a`'s decoration to `b`'s.
pub fn find_iso<F: DecorationContract>(
    contract: &F,
    a: &DecoratedCospan<F::Base, F::Dec>,
    b: &DecoratedCospan<F::Base, F::Dec>,
) -> Result<Option<Vec<usize>>> {
    if a.cospan.canonicalize() != b.cospan.canonicalize() {
        return Ok(None);
    }
    let keyed = |d: &DecoratedCospan<F::Base, F::Dec>| -> Vec<(Signature, Option<String>)> {
        d.cospan
            .signatures()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, contract.point_key(&d.dec, i)))
            .collect()
    };
    let (sa, sb) = (keyed(a), keyed(b));
    let groups = signature_groups(&sa, &sb);
    if groups.iter().any(|(pa, pb)| pa.len() != pb.len()) {
        return Ok(None);
    }
    if contract.pointwise() {
        let mut perm = vec![usize::MAX; sa.len()];
        for (pa, pb) in &groups {
            for (&i, &j) in pa.iter().zip(pb) {
                perm[i] = j;
            }
        }
        let phi = <F::Base as Base>::relabel(&perm);
        let ok = contract.equal(&contract.push(&phi, &a.dec), &b.dec);
        return Ok(ok.then_some(perm));
    }
    let mut budget: usize = 1;
    for (pa, _) in &groups {
        if pa.len() > MAX_INTERCHANGEABLE {
            return Err(Error::IsoSearchTooLarge(format!(
                "{} interchangeable apex points (limit {MAX_INTERCHANGEABLE})",
                pa.len()
            )));
        }
        budget = budget.saturating_mul((1..=pa.len()).product());
    }
    if budget > 5_000_000 {
        return Err(Error::IsoSearchTooLarge(format!(
            "{budget} candidate bijections"
        )));
    }
    let mut perm = vec![usize::MAX; sa.len()];
    let found = search(contract, a, b, &groups, 0, &mut perm);
    Ok(found.then_some(perm))
}

fn signature_groups<K: Ord + std::hash::Hash>(sa: &[K], sb: &[K]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let ga = sa.iter().enumerate().map(|(i, s)| (s, i)).into_group_map();
    let mut gb = sb.iter().enumerate().map(|(i, s)| (s, i)).into_group_map();
    let mut out: Vec<_> = ga
        .into_iter()
        .map(|(s, pa)| (pa, gb.remove(s).unwrap_or_default()))
        .collect();
    // deterministic order, singletons first
    out.sort_by(|x, y| (x.0.len(), &x.0).cmp(&(y.0.len(), &y.0)));
    out
}

fn search<F: DecorationContract>(
    contract: &F,
    a: &DecoratedCospan<F::Base, F::Dec>,
    b: &DecoratedCospan<F::Base, F::Dec>,
    groups: &[(Vec<usize>, Vec<usize>)],
    at: usize,
    perm: &mut Vec<usize>,
) -> bool {
    let Some((pa, pb)) = groups.get(at) else {
        let phi = <F::Base as Base>::relabel(perm);
        return contract.equal(&contract.push(&phi, &a.dec), &b.dec);
    };
    for order in pb.iter().permutations(pb.len()) {
        for (&i, &&j) in pa.iter().zip(&order) {
            perm[i] = j;
        }
        if search(contract, a, b, groups, at + 1, perm) {
            return true;
        }
    }
    false
}

/// Equality of isomorphism classes of decorated cospans.
pub fn dcospan_iso_eq<F: DecorationContract>(
    contract: &F,
    a: &DecoratedCospan<F::Base, F::Dec>,
    b: &DecoratedCospan<F::Base, F::Dec>,
) -> Result<bool> {
    Ok(find_iso(contract, a, b)?.is_some())
}

pub fn dcorel_iso_eq<F: DecorationContract>(
    contract: &F,
    a: &DecoratedCorelation<F::Base, F::Dec>,
    b: &DecoratedCorelation<F::Base, F::Dec>,
) -> Result<bool> {
    if a.system() != b.system() {
        return Ok(false);
    }
    dcospan_iso_eq(contract, &a.to_cospan(), &b.to_cospan())
}

/// The constant functor at a one-point set. Decorated (co)relations over it
/// are plain (co)relations.
#[derive(Debug, Clone, Copy, Default)]
pub struct TrivialContract<B: Base>(PhantomData<B>);

impl<B: Base> TrivialContract<B> {
    pub fn new() -> Self {
        Self(PhantomData)
    }
}

impl<B: Base> DecorationContract for TrivialContract<B> {
    type Base = B;
    type Dec = ();

    fn name(&self) -> String {
        "trivial".into()
    }

    fn carrier_contains(&self, _n: usize, _d: &()) -> bool {
        true
    }

    fn push(&self, _f: &FinFn, _d: &()) {}

    fn pull(&self, _m: &FinFn, _d: &()) -> Result<()> {
        Ok(())
    }

    fn supports(&self, _sys: FactorisationSystem) -> bool {
        true
    }

    fn coherence(&self, _dn: &(), _dm: &()) {}

    fn unit(&self) {}

    fn equal(&self, _a: &(), _b: &()) -> bool {
        true
    }
}
