//! Base categories with finite colimits whose objects are finite ordinals.
//!
//! Two instances are provided: [`FinSet`] itself, where cospans compose by
//! pushout, and its opposite [`FinSetOp`], where a cospan is a span of
//! functions and composition is by pullback. Both use [`FinFn`] for their
//! morphisms. In `FinSetOp` a morphism `a -> b` is stored as the function
//! `b -> a` it comes from, so its [`Base::dom`] is the table's codomain.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::finset::{self, Coproduct, FactorisationSystem, FinFn, Pushout};

/// Preimage data of one apex point: which left-foot and right-foot points
/// it is attached to. Two cospans are isomorphic iff the multisets of
/// their apex signatures agree.
pub type Signature = (Vec<usize>, Vec<usize>);

pub trait Base: Debug + Clone + Copy + Default + PartialEq + Eq + Send + Sync + 'static {
    const NAME: &'static str;

    fn dom(f: &FinFn) -> usize;
    fn cod(f: &FinFn) -> usize;

    fn id(n: usize) -> FinFn;

    /// Diagrammatic composite `f ; g`.
    fn then(f: &FinFn, g: &FinFn) -> Result<FinFn>;

    /// The initial object, the monoidal unit.
    fn initial() -> usize;

    /// The unique map out of the initial object.
    fn bang(n: usize) -> FinFn;

    fn coproduct(n: usize, m: usize) -> Coproduct;

    fn copair(f: &FinFn, g: &FinFn) -> Result<FinFn>;

    /// Pushout of `n <-f- y -g-> m`.
    fn pushout(f: &FinFn, g: &FinFn) -> Result<Pushout>;

    /// Factors `f = e ; m` with `e ∈ E`, `m ∈ M`.
    fn factor(sys: FactorisationSystem, f: &FinFn) -> (FinFn, FinFn);

    fn in_e(sys: FactorisationSystem, f: &FinFn) -> bool;
    fn in_m(sys: FactorisationSystem, f: &FinFn) -> bool;

    /// Per-apex-point signatures of the cospan `left ; apex ; right`.
    fn signatures(left: &FinFn, right: &FinFn) -> Vec<Signature>;

    /// The apex isomorphism sending point `i` to point `perm[i]`.
    fn relabel(perm: &[usize]) -> FinFn;

    /// `(table length, value range)` of the stored function for a morphism
    /// `from -> to`.
    fn hom_shape(from: usize, to: usize) -> (usize, usize);

    /// `f + g`, using the chosen coproducts on both sides.
    fn sum(f: &FinFn, g: &FinFn) -> FinFn {
        let cod = Self::coproduct(Self::cod(f), Self::cod(g));
        let l = Self::then(f, &cod.inl).expect("coproduct injection");
        let r = Self::then(g, &cod.inr).expect("coproduct injection");
        Self::copair(&l, &r).expect("copair of injections")
    }

    /// The symmetry `x + y -> y + x`.
    fn swap(x: usize, y: usize) -> FinFn {
        let c = Self::coproduct(y, x);
        Self::copair(&c.inr, &c.inl).expect("symmetry")
    }

    /// The codiagonal `[1, 1] : x + x -> x`.
    fn fold(x: usize) -> FinFn {
        Self::copair(&Self::id(x), &Self::id(x)).expect("codiagonal")
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct FinSet;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct FinSetOp;

impl Base for FinSet {
    const NAME: &'static str = "FinSet";

    fn hom_shape(from: usize, to: usize) -> (usize, usize) {
        (from, to)
    }

    fn dom(f: &FinFn) -> usize {
        f.dom()
    }

    fn cod(f: &FinFn) -> usize {
        f.cod()
    }

    fn id(n: usize) -> FinFn {
        FinFn::identity(n)
    }

    fn then(f: &FinFn, g: &FinFn) -> Result<FinFn> {
        f.then(g)
    }

    fn initial() -> usize {
        0
    }

    fn bang(n: usize) -> FinFn {
        FinFn::initial(n)
    }

    fn coproduct(n: usize, m: usize) -> Coproduct {
        finset::coproduct(n, m)
    }

    fn copair(f: &FinFn, g: &FinFn) -> Result<FinFn> {
        finset::copair(f, g)
    }

    fn pushout(f: &FinFn, g: &FinFn) -> Result<Pushout> {
        finset::pushout(f, g)
    }

    fn factor(sys: FactorisationSystem, f: &FinFn) -> (FinFn, FinFn) {
        sys.factor(f)
    }

    fn in_e(sys: FactorisationSystem, f: &FinFn) -> bool {
        sys.in_e(f)
    }

    fn in_m(sys: FactorisationSystem, f: &FinFn) -> bool {
        sys.in_m(f)
    }

    fn signatures(left: &FinFn, right: &FinFn) -> Vec<Signature> {
        left.fibers().into_iter().zip(right.fibers()).collect()
    }

    fn relabel(perm: &[usize]) -> FinFn {
        FinFn::new(perm.len(), perm.to_vec()).expect("permutation")
    }

    fn sum(f: &FinFn, g: &FinFn) -> FinFn {
        f.sum(g)
    }
}

/// `FinSet^op`: coproducts are cartesian products (row-major), the initial
/// object is `1`, and pushouts are pullbacks of the underlying functions.
impl Base for FinSetOp {
    const NAME: &'static str = "FinSet^op";

    fn hom_shape(from: usize, to: usize) -> (usize, usize) {
        (to, from)
    }

    fn dom(f: &FinFn) -> usize {
        f.cod()
    }

    fn cod(f: &FinFn) -> usize {
        f.dom()
    }

    fn id(n: usize) -> FinFn {
        FinFn::identity(n)
    }

    fn then(f: &FinFn, g: &FinFn) -> Result<FinFn> {
        g.then(f).map_err(|_| Error::FootMismatch {
            left: Self::cod(f),
            right: Self::dom(g),
        })
    }

    fn initial() -> usize {
        1
    }

    fn bang(n: usize) -> FinFn {
        FinFn::terminal(n)
    }

    fn coproduct(n: usize, m: usize) -> Coproduct {
        let size = n * m;
        Coproduct {
            size,
            inl: FinFn::from_table_unchecked(n, (0..size).map(|p| p / m).collect()),
            inr: FinFn::from_table_unchecked(m, (0..size).map(|p| p % m).collect()),
        }
    }

    fn copair(f: &FinFn, g: &FinFn) -> Result<FinFn> {
        if f.dom() != g.dom() {
            return Err(Error::CodomainMismatch {
                left: f.dom(),
                right: g.dom(),
            });
        }
        let m = g.cod();
        let table = (0..f.dom()).map(|c| f.apply(c) * m + g.apply(c)).collect();
        Ok(FinFn::from_table_unchecked(f.cod() * m, table))
    }

    fn pushout(f: &FinFn, g: &FinFn) -> Result<Pushout> {
        finset::pullback(f, g).map_err(|_| Error::DomainMismatch {
            left: f.cod(),
            right: g.cod(),
        })
    }

    /// Epi-mono here is (injections, surjections) of the underlying
    /// functions: the underlying `g = inj ∘ sur` gives `e = inj`, `m = sur`.
    fn factor(sys: FactorisationSystem, f: &FinFn) -> (FinFn, FinFn) {
        match sys {
            FactorisationSystem::AllIso => (f.clone(), FinFn::identity(f.dom())),
            FactorisationSystem::IsoAll => (FinFn::identity(f.cod()), f.clone()),
            FactorisationSystem::EpiMono => {
                let (sur, inj) = FactorisationSystem::EpiMono.factor(f);
                (inj, sur)
            }
        }
    }

    fn in_e(sys: FactorisationSystem, f: &FinFn) -> bool {
        match sys {
            FactorisationSystem::EpiMono => f.is_injective(),
            _ => sys.in_e(f),
        }
    }

    fn in_m(sys: FactorisationSystem, f: &FinFn) -> bool {
        match sys {
            FactorisationSystem::EpiMono => f.is_surjective(),
            _ => sys.in_m(f),
        }
    }

    fn signatures(left: &FinFn, right: &FinFn) -> Vec<Signature> {
        left.table()
            .iter()
            .zip(right.table())
            .map(|(&x, &y)| (vec![x], vec![y]))
            .collect()
    }

    fn relabel(perm: &[usize]) -> FinFn {
        FinFn::new(perm.len(), perm.to_vec())
            .ok()
            .and_then(|p| p.inverse())
            .expect("permutation")
    }

    fn sum(f: &FinFn, g: &FinFn) -> FinFn {
        f.product(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_factor<B: Base>(f: &FinFn) {
        for sys in FactorisationSystem::ALL {
            let (e, m) = B::factor(sys, f);
            assert!(B::in_e(sys, &e), "{sys:?} {f:?}");
            assert!(B::in_m(sys, &m), "{sys:?} {f:?}");
            assert_eq!(&B::then(&e, &m).unwrap(), f);
        }
    }

    #[test]
    fn factorisations_compose_back() {
        for t in [vec![0, 0, 2], vec![1, 0], vec![], vec![2, 2, 2, 0]] {
            let f = FinFn::new(3, t).unwrap();
            check_factor::<FinSet>(&f);
            check_factor::<FinSetOp>(&f);
        }
    }

    #[test]
    fn opposite_coproduct_is_product() {
        let c = FinSetOp::coproduct(2, 3);
        assert_eq!(c.size, 6);
        assert_eq!(FinSetOp::dom(&c.inl), 2);
        assert_eq!(FinSetOp::cod(&c.inl), 6);
        let f = FinFn::new(2, vec![1, 0, 1]).unwrap();
        let g = FinFn::new(3, vec![2, 2, 0]).unwrap();
        let cp = FinSetOp::copair(&f, &g).unwrap();
        assert_eq!(FinSetOp::then(&c.inl, &cp).unwrap(), f);
        assert_eq!(FinSetOp::then(&c.inr, &cp).unwrap(), g);
    }

    #[test]
    fn opposite_sum_is_product_of_functions() {
        let f = FinFn::new(2, vec![1, 0, 1]).unwrap();
        let g = FinFn::new(3, vec![2, 0]).unwrap();
        let s = <FinSetOp as Base>::sum(&f, &g);
        let generic = {
            let cod = FinSetOp::coproduct(FinSetOp::cod(&f), FinSetOp::cod(&g));
            let l = FinSetOp::then(&f, &cod.inl).unwrap();
            let r = FinSetOp::then(&g, &cod.inr).unwrap();
            FinSetOp::copair(&l, &r).unwrap()
        };
        assert_eq!(s, generic);
    }

    #[test]
    fn relabel_moves_points() {
        let perm = [2, 0, 1];
        let sig_left = FinFn::new(3, vec![0]).unwrap();
        // in FinSet, the leg 1 -> 3 hitting point 0 is moved to point 2
        let moved = FinSet::then(&sig_left, &FinSet::relabel(&perm)).unwrap();
        assert_eq!(moved.table(), &[2]);
        // in FinSet^op, a span leg 3 -> 1 is reindexed the same way
        let leg = FinFn::new(2, vec![0, 1, 1]).unwrap();
        let moved = FinSetOp::then(&leg, &FinSetOp::relabel(&perm)).unwrap();
        assert_eq!(moved.table(), &[1, 1, 0]);
    }
}
