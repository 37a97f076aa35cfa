//! Cospans `X -> N <- Y` over a [`Base`] category, composed by pushout and
//! tensored by coproduct. Morphisms of the hypergraph category are
//! isomorphism classes, so equality goes through [`CanonicalCospan`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::base::{Base, FinSet, Signature};
use crate::error::{Error, Result};
use crate::finset::FinFn;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cospan<B: Base = FinSet> {
    left: FinFn,
    right: FinFn,
    base: B,
}

/// The four Frobenius generators carried by every object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Frobenius {
    Mu,
    Eta,
    Delta,
    Epsilon,
}

impl Frobenius {
    pub const ALL: [Frobenius; 4] = [Self::Mu, Self::Eta, Self::Delta, Self::Epsilon];

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "mu" => Some(Self::Mu),
            "eta" => Some(Self::Eta),
            "delta" => Some(Self::Delta),
            "epsilon" | "eps" => Some(Self::Epsilon),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Mu => "mu",
            Self::Eta => "eta",
            Self::Delta => "delta",
            Self::Epsilon => "epsilon",
        }
    }
}

impl Cospan<FinSet> {
    /// A cospan of finite sets `left : X -> N`, `right : Y -> N`.
    pub fn new(left: FinFn, right: FinFn) -> Result<Self> {
        Self::from_legs(left, right)
    }
}

impl<B: Base> Cospan<B> {
    pub fn from_legs(left: FinFn, right: FinFn) -> Result<Self> {
        if B::cod(&left) != B::cod(&right) {
            return Err(Error::CodomainMismatch {
                left: B::cod(&left),
                right: B::cod(&right),
            });
        }
        Ok(Self {
            left,
            right,
            base: B::default(),
        })
    }

    pub fn identity(x: usize) -> Self {
        Self::from_map(B::id(x))
    }

    /// `f` viewed as the cospan `X -f-> Y <-1- Y`.
    pub fn from_map(f: FinFn) -> Self {
        let right = B::id(B::cod(&f));
        Self::from_legs(f, right).expect("legs share codomain")
    }

    /// `f^op`: the cospan `Y -1-> Y <-f- X`.
    pub fn from_map_op(f: FinFn) -> Self {
        let left = B::id(B::cod(&f));
        Self::from_legs(left, f).expect("legs share codomain")
    }

    pub fn left(&self) -> &FinFn {
        &self.left
    }

    pub fn right(&self) -> &FinFn {
        &self.right
    }

    pub fn dom(&self) -> usize {
        B::dom(&self.left)
    }

    pub fn cod(&self) -> usize {
        B::dom(&self.right)
    }

    pub fn apex(&self) -> usize {
        B::cod(&self.left)
    }

    /// `[left, right] : X + Y -> N`.
    pub fn copairing(&self) -> FinFn {
        B::copair(&self.left, &self.right).expect("legs share codomain")
    }

    /// Swaps the feet.
    pub fn mirror(&self) -> Self {
        Self::from_legs(self.right.clone(), self.left.clone()).expect("legs share codomain")
    }

    /// Diagrammatic composite: `self` first, then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(self.compose_with_legs(other)?.0)
    }

    /// Composite together with the pushout injections `j_N`, `j_M`.
    pub fn compose_with_legs(&self, other: &Self) -> Result<(Self, FinFn, FinFn)> {
        if self.cod() != other.dom() {
            return Err(Error::FootMismatch {
                left: self.cod(),
                right: other.dom(),
            });
        }
        let p = B::pushout(&self.right, &other.left)?;
        let left = B::then(&self.left, &p.jn)?;
        let right = B::then(&other.right, &p.jm)?;
        Ok((Self::from_legs(left, right)?, p.jn, p.jm))
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self::from_legs(
            B::sum(&self.left, &other.left),
            B::sum(&self.right, &other.right),
        )
        .expect("sum of legs")
    }

    pub fn frobenius(x: usize, which: Frobenius) -> Self {
        match which {
            Frobenius::Mu => Self::from_map(B::fold(x)),
            Frobenius::Eta => Self::from_map(B::bang(x)),
            Frobenius::Delta => Self::from_map_op(B::fold(x)),
            Frobenius::Epsilon => Self::from_map_op(B::bang(x)),
        }
    }

    /// The symmetry `x + y -> y + x`.
    pub fn braid(x: usize, y: usize) -> Self {
        Self::from_map(B::swap(x, y))
    }

    /// Moves the apex along the bijection `perm`.
    pub fn relabel_apex(&self, perm: &[usize]) -> Result<Self> {
        let phi = B::relabel(perm);
        Self::from_legs(B::then(&self.left, &phi)?, B::then(&self.right, &phi)?)
    }

    pub fn signatures(&self) -> Vec<Signature> {
        B::signatures(&self.left, &self.right)
    }

    pub fn canonicalize(&self) -> CanonicalCospan {
        let mut fibers = self.signatures();
        fibers.sort();
        CanonicalCospan {
            feet: (self.dom(), self.cod()),
            fibers,
        }
    }

    /// Equality of isomorphism classes.
    pub fn iso_eq(&self, other: &Self) -> bool {
        self.canonicalize() == other.canonicalize()
    }
}

impl<B: Base> fmt::Debug for Cospan<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Cospan<{}>({} -> {} <- {}; {:?}, {:?})",
            B::NAME,
            self.dom(),
            self.apex(),
            self.cod(),
            self.left.table(),
            self.right.table()
        )
    }
}

/// Isomorphism-invariant form of a cospan: feet sizes plus the sorted
/// multiset of apex-point signatures. Isolated apex points appear as
/// `(∅, ∅)` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCospan {
    pub feet: (usize, usize),
    pub fibers: Vec<Signature>,
}

impl CanonicalCospan {
    pub fn apex(&self) -> usize {
        self.fibers.len()
    }
}

pub fn compose<B: Base>(f: &Cospan<B>, g: &Cospan<B>) -> Result<Cospan<B>> {
    f.compose(g)
}

pub fn tensor<B: Base>(f: &Cospan<B>, g: &Cospan<B>) -> Cospan<B> {
    f.tensor(g)
}

pub fn frobenius<B: Base>(x: usize, which: Frobenius) -> Cospan<B> {
    Cospan::frobenius(x, which)
}

pub fn canonicalize<B: Base>(f: &Cospan<B>) -> CanonicalCospan {
    f.canonicalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::FinSetOp;

    fn ff(cod: usize, t: &[usize]) -> FinFn {
        FinFn::new(cod, t.to_vec()).unwrap()
    }

    fn intro_pair() -> (Cospan, Cospan) {
        (
            Cospan::new(ff(4, &[2, 2]), ff(4, &[1, 2, 3, 3])).unwrap(),
            Cospan::new(ff(5, &[0, 1, 2, 3]), ff(5, &[1, 4])).unwrap(),
        )
    }

    #[test]
    fn intro_composite() {
        let (f, g) = intro_pair();
        let h = f.compose(&g).unwrap();
        assert_eq!(h.apex(), 5);
        // apex classes: A, B~A', C~B', D~C'~D', E' numbered by first appearance
        assert_eq!(h.left().table(), &[2, 2]);
        assert_eq!(h.right().table(), &[2, 4]);
        // z1 lands with x1, x2 (class of C ~ B'), z2 alone (class of E')
        assert_eq!(h.left().apply(0), h.right().apply(0));
        assert_ne!(h.right().apply(1), h.left().apply(0));
    }

    #[test]
    fn identity_is_neutral() {
        let (f, _) = intro_pair();
        assert!(Cospan::identity(2).compose(&f).unwrap().iso_eq(&f));
        assert!(f.compose(&Cospan::identity(4)).unwrap().iso_eq(&f));
        let one = Cospan::<FinSet>::identity(1);
        assert!(one.compose(&one).unwrap().iso_eq(&one));
    }

    #[test]
    fn rejects_foot_mismatch() {
        let (f, _) = intro_pair();
        assert!(matches!(
            f.compose(&Cospan::identity(3)),
            Err(Error::FootMismatch { left: 4, right: 3 })
        ));
    }

    #[test]
    fn tensor_examples() {
        let one = Cospan::<FinSet>::identity(1);
        assert!(one.tensor(&one).iso_eq(&Cospan::identity(2)));

        let mu = Cospan::<FinSet>::frobenius(1, Frobenius::Mu);
        let eta = Cospan::<FinSet>::frobenius(1, Frobenius::Eta);
        let t = mu.tensor(&eta);
        assert_eq!((t.dom(), t.cod(), t.apex()), (2, 2, 2));
        assert_eq!(t.left().table(), &[0, 0]);
        assert_eq!(t.right().table(), &[0, 1]);

        let empty = Cospan::<FinSet>::identity(0);
        let (f, _) = intro_pair();
        assert!(f.tensor(&empty).iso_eq(&f));
        assert!(empty.tensor(&f).iso_eq(&f));
    }

    #[test]
    fn generators() {
        let mu = Cospan::<FinSet>::frobenius(1, Frobenius::Mu);
        assert_eq!(
            (mu.left().table(), mu.right().table()),
            (&[0, 0][..], &[0][..])
        );
        let eta = Cospan::<FinSet>::frobenius(2, Frobenius::Eta);
        assert_eq!(
            (eta.left().table(), eta.right().table()),
            (&[][..], &[0, 1][..])
        );
        let delta = Cospan::<FinSet>::frobenius(1, Frobenius::Delta);
        assert_eq!(delta, mu.mirror());
        let eps = Cospan::<FinSet>::frobenius(2, Frobenius::Epsilon);
        assert_eq!(eps, eta.mirror());
    }

    #[test]
    fn canonical_forms() {
        let (f, _) = intro_pair();
        let g = f.relabel_apex(&[3, 1, 0, 2]).unwrap();
        assert_ne!(f, g);
        assert_eq!(f.canonicalize(), g.canonicalize());

        let extra = Cospan::new(ff(2, &[0]), ff(2, &[0])).unwrap();
        assert_ne!(
            extra.canonicalize(),
            Cospan::<FinSet>::identity(1).canonicalize()
        );

        let special = Cospan::<FinSet>::frobenius(1, Frobenius::Delta)
            .compose(&Cospan::frobenius(1, Frobenius::Mu))
            .unwrap();
        assert_eq!(
            special.canonicalize(),
            Cospan::<FinSet>::identity(1).canonicalize()
        );
    }

    #[test]
    fn span_composition_is_pullback() {
        // spans 2 <- 3 -> 2 and 2 <- 2 -> 1 in FinSet^op
        let f = Cospan::<FinSetOp>::from_legs(ff(2, &[0, 0, 1]), ff(2, &[0, 1, 1])).unwrap();
        let g = Cospan::<FinSetOp>::from_legs(ff(2, &[1, 1]), ff(1, &[0, 0])).unwrap();
        assert_eq!((f.dom(), f.cod(), f.apex()), (2, 2, 3));
        let h = f.compose(&g).unwrap();
        // pairs (n, m) with o(n) = i(m): (1,0),(1,1),(2,0),(2,1)
        assert_eq!(h.apex(), 4);
        assert_eq!(h.left().table(), &[0, 0, 1, 1]);
    }
}
