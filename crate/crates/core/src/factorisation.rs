//! `(E, M)`-corelations: cospans whose copairing `X + Y -> N` lies in `E`.
//!
//! A cospan is reduced to a corelation by factoring its copairing and
//! keeping the `E` half (the E-part). Corelations compose as cospans and
//! are then reduced again.

use crate::base::{Base, FinSet};
use crate::cospan::{CanonicalCospan, Cospan, Frobenius};
use crate::error::{Error, Result};
use crate::finset::{FactorisationSystem, FinFn};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corelation<B: Base = FinSet> {
    sys: FactorisationSystem,
    cospan: Cospan<B>,
}

/// Result of reducing a cospan: the corelation plus the `M`-factor
/// `m : N̄ -> N` that was discarded.
#[derive(Debug, Clone)]
pub struct Reduction<B: Base> {
    pub corelation: Corelation<B>,
    pub m: FinFn,
}

/// Factors the copairing of `f` and keeps the `E`-part.
pub fn reduce<B: Base>(sys: FactorisationSystem, f: &Cospan<B>) -> Reduction<B> {
    let (e, m) = B::factor(sys, &f.copairing());
    let feet = B::coproduct(f.dom(), f.cod());
    let left = B::then(&feet.inl, &e).expect("injection into X + Y");
    let right = B::then(&feet.inr, &e).expect("injection into X + Y");
    Reduction {
        corelation: Corelation {
            sys,
            cospan: Cospan::from_legs(left, right).expect("legs share codomain"),
        },
        m,
    }
}

pub fn e_part<B: Base>(sys: FactorisationSystem, f: &Cospan<B>) -> Corelation<B> {
    reduce(sys, f).corelation
}

impl<B: Base> Corelation<B> {
    /// Accepts a cospan that is already jointly `E`-like.
    pub fn new(sys: FactorisationSystem, cospan: Cospan<B>) -> Result<Self> {
        if !B::in_e(sys, &cospan.copairing()) {
            return Err(Error::InvalidFunction(format!(
                "cospan is not jointly {}-like",
                sys.name()
            )));
        }
        Ok(Self { sys, cospan })
    }

    pub fn identity(sys: FactorisationSystem, x: usize) -> Self {
        e_part(sys, &Cospan::identity(x))
    }

    pub fn frobenius(sys: FactorisationSystem, x: usize, which: Frobenius) -> Self {
        e_part(sys, &Cospan::frobenius(x, which))
    }

    pub fn braid(sys: FactorisationSystem, x: usize, y: usize) -> Self {
        e_part(sys, &Cospan::braid(x, y))
    }

    pub fn system(&self) -> FactorisationSystem {
        self.sys
    }

    pub fn cospan(&self) -> &Cospan<B> {
        &self.cospan
    }

    pub fn into_cospan(self) -> Cospan<B> {
        self.cospan
    }

    pub fn dom(&self) -> usize {
        self.cospan.dom()
    }

    pub fn cod(&self) -> usize {
        self.cospan.cod()
    }

    pub fn apex(&self) -> usize {
        self.cospan.apex()
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.sys != other.sys {
            return Err(Error::SystemMismatch {
                left: self.sys,
                right: other.sys,
            });
        }
        Ok(e_part(self.sys, &self.cospan.compose(&other.cospan)?))
    }

    /// Monoidal product. `E` is closed under `+`, so no reduction is needed.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.sys != other.sys {
            return Err(Error::SystemMismatch {
                left: self.sys,
                right: other.sys,
            });
        }
        let cospan = self.cospan.tensor(&other.cospan);
        debug_assert!(B::in_e(self.sys, &cospan.copairing()));
        Ok(Self {
            sys: self.sys,
            cospan,
        })
    }

    pub fn canonicalize(&self) -> CanonicalCospan {
        self.cospan.canonicalize()
    }

    pub fn iso_eq(&self, other: &Self) -> bool {
        self.sys == other.sys && self.canonicalize() == other.canonicalize()
    }
}

impl Corelation<FinSet> {
    /// Blocks of the induced equivalence relation on `X + Y` (left foot
    /// indices first, right foot shifted by `|X|`), each sorted, listed in
    /// order of least element. Isolated apex points give empty blocks.
    pub fn partition(&self) -> Vec<Vec<usize>> {
        let n = self.dom();
        let mut blocks: Vec<Vec<usize>> = self
            .cospan
            .signatures()
            .into_iter()
            .map(|(xs, ys)| {
                xs.into_iter()
                    .chain(ys.into_iter().map(|y| y + n))
                    .collect()
            })
            .collect();
        blocks.sort_by_key(|b: &Vec<usize>| b.first().copied().unwrap_or(usize::MAX));
        blocks
    }

    /// The epi-mono corelation whose classes are `blocks` of `X + Y`.
    pub fn from_partition(dom: usize, cod: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut label = vec![usize::MAX; dom + cod];
        for (b, block) in blocks.iter().enumerate() {
            for &i in block {
                if i >= dom + cod || label[i] != usize::MAX {
                    return Err(Error::InvalidFunction(format!(
                        "blocks do not partition {}",
                        dom + cod
                    )));
                }
                label[i] = b;
            }
        }
        if label.contains(&usize::MAX) {
            return Err(Error::InvalidFunction("blocks do not cover X + Y".into()));
        }
        let k = blocks.len();
        let cospan = Cospan::new(
            FinFn::new(k, label[..dom].to_vec())?,
            FinFn::new(k, label[dom..].to_vec())?,
        )?;
        Self::new(FactorisationSystem::EpiMono, cospan)
    }
}

/// The functor `Cospan -> Corel` sending each cospan to its E-part.
pub fn box_functor<B: Base>(sys: FactorisationSystem, f: &Cospan<B>) -> Corelation<B> {
    e_part(sys, f)
}

/// The identity-on-objects functor between corelation categories induced
/// by `M(from) ⊆ M(to)`.
pub fn poset_functor<B: Base>(
    from: FactorisationSystem,
    to: FactorisationSystem,
    f: &Corelation<B>,
) -> Result<Corelation<B>> {
    if f.sys != from {
        return Err(Error::SystemMismatch {
            left: f.sys,
            right: from,
        });
    }
    if !from.m_included_in(to) {
        return Err(Error::IncomparableSystems { from, to });
    }
    Ok(e_part(to, &f.cospan))
}
