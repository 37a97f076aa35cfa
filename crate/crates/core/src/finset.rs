//! Finite sets as ordinals `{0, .., n-1}` and the functions between them.
//!
//! Everything in the crate is built from [`FinFn`]: cospan legs, pushout
//! injections, factorisation halves and the apex bijections used to compare
//! morphisms up to isomorphism.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A total function `dom -> cod` between finite ordinals, stored as its table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinFn {
    dom: usize,
    cod: usize,
    table: Vec<usize>,
}

impl FinFn {
    pub fn new(cod: usize, table: Vec<usize>) -> Result<Self> {
        if let Some(bad) = table.iter().find(|&&t| t >= cod) {
            return Err(Error::InvalidFunction(format!(
                "entry {bad} out of range for codomain {cod}"
            )));
        }
        Ok(Self {
            dom: table.len(),
            cod,
            table,
        })
    }

    /// Builds a function whose table is known to be in range.
    pub(crate) fn from_table_unchecked(cod: usize, table: Vec<usize>) -> Self {
        debug_assert!(table.iter().all(|&t| t < cod));
        Self {
            dom: table.len(),
            cod,
            table,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_table_unchecked(n, (0..n).collect())
    }

    /// The unique map `0 -> n`.
    pub fn initial(n: usize) -> Self {
        Self::from_table_unchecked(n, Vec::new())
    }

    /// The unique map `n -> 1`.
    pub fn terminal(n: usize) -> Self {
        Self::from_table_unchecked(1, vec![0; n])
    }

    /// The map `i -> i + offset` into an ordinal of size `cod`.
    pub fn shift(n: usize, offset: usize, cod: usize) -> Self {
        assert!(n + offset <= cod, "shift out of range");
        Self::from_table_unchecked(cod, (offset..offset + n).collect())
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &FinFn) -> Result<FinFn> {
        if self.cod != other.dom {
            return Err(Error::FootMismatch {
                left: self.cod,
                right: other.dom,
            });
        }
        Ok(Self::from_table_unchecked(
            other.cod,
            self.table.iter().map(|&i| other.table[i]).collect(),
        ))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.table
            .iter()
            .all(|&t| !std::mem::replace(&mut seen[t], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod];
        for &t in &self.table {
            hit[t] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom == self.cod && self.is_injective()
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.table.iter().enumerate().all(|(i, &t)| i == t)
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<FinFn> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.dom];
        for (i, &t) in self.table.iter().enumerate() {
            inv[t] = i;
        }
        Some(Self::from_table_unchecked(self.dom, inv))
    }

    /// Preimage of each codomain point, in increasing order.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.cod];
        for (i, &t) in self.table.iter().enumerate() {
            out[t].push(i);
        }
        out
    }

    /// `f + g : A + C -> B + D`.
    pub fn sum(&self, other: &FinFn) -> FinFn {
        let mut table = self.table.clone();
        table.extend(other.table.iter().map(|&t| t + self.cod));
        Self::from_table_unchecked(self.cod + other.cod, table)
    }

    /// `f × g : A × C -> B × D`, pairs indexed row-major.
    pub fn product(&self, other: &FinFn) -> FinFn {
        let mut table = Vec::with_capacity(self.dom * other.dom);
        for &a in &self.table {
            for &c in &other.table {
                table.push(a * other.cod + c);
            }
        }
        Self::from_table_unchecked(self.cod * other.cod, table)
    }
}

impl fmt::Debug for FinFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:{}->{}", self.table, self.dom, self.cod)
    }
}

/// A coproduct `n + m` together with its injections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coproduct {
    pub size: usize,
    pub inl: FinFn,
    pub inr: FinFn,
}

/// A pushout (or, in the opposite category, pullback) apex with its legs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pushout {
    pub size: usize,
    pub jn: FinFn,
    pub jm: FinFn,
}

pub fn coproduct(n: usize, m: usize) -> Coproduct {
    Coproduct {
        size: n + m,
        inl: FinFn::shift(n, 0, n + m),
        inr: FinFn::shift(m, n, n + m),
    }
}

/// `[f, g] : A + B -> C`.
pub fn copair(f: &FinFn, g: &FinFn) -> Result<FinFn> {
    if f.cod != g.cod {
        return Err(Error::CodomainMismatch {
            left: f.cod,
            right: g.cod,
        });
    }
    let mut table = f.table.clone();
    table.extend_from_slice(&g.table);
    Ok(FinFn::from_table_unchecked(f.cod, table))
}

/// Pushout of `N <-f- Y -g-> M`.
///
/// The apex is `N ⊔ M` modulo the equivalence generated by `f(y) ~ g(y)`.
/// Classes are numbered in order of first appearance when scanning `N`
/// then `M`.
pub fn pushout(f: &FinFn, g: &FinFn) -> Result<Pushout> {
    if f.dom != g.dom {
        return Err(Error::DomainMismatch {
            left: f.dom,
            right: g.dom,
        });
    }
    let (n, m) = (f.cod, g.cod);
    let mut uf = UnionFind::new(n + m);
    for (&a, &b) in f.table.iter().zip(&g.table) {
        uf.union(a, n + b);
    }
    let (size, labels) = uf.labels();
    Ok(Pushout {
        size,
        jn: FinFn::from_table_unchecked(size, labels[..n].to_vec()),
        jm: FinFn::from_table_unchecked(size, labels[n..].to_vec()),
    })
}

/// Pullback `{(n, m) : f(n) = g(m)}` of `N -f-> Y <-g- M`, in lexicographic
/// order, with its two projections.
pub fn pullback(f: &FinFn, g: &FinFn) -> Result<Pushout> {
    if f.cod != g.cod {
        return Err(Error::CodomainMismatch {
            left: f.cod,
            right: g.cod,
        });
    }
    let g_fibers = g.fibers();
    let (mut pn, mut pm) = (Vec::new(), Vec::new());
    for (a, &y) in f.table.iter().enumerate() {
        for &b in &g_fibers[y] {
            pn.push(a);
            pm.push(b);
        }
    }
    Ok(Pushout {
        size: pn.len(),
        jn: FinFn::from_table_unchecked(f.dom, pn),
        jm: FinFn::from_table_unchecked(g.dom, pm),
    })
}

/// The three factorisation systems on finite sets, named `E`-class first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FactorisationSystem {
    /// `E` = surjections, `M` = injections.
    EpiMono,
    /// `E` = all maps, `M` = isomorphisms: corelations are cospans.
    AllIso,
    /// `E` = isomorphisms, `M` = all maps: one corelation per hom-set.
    IsoAll,
}

impl FactorisationSystem {
    pub const ALL: [FactorisationSystem; 3] = [Self::AllIso, Self::EpiMono, Self::IsoAll];

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "epi-mono" | "epimono" | "epi_mono" => Some(Self::EpiMono),
            "all-iso" | "alliso" | "all_iso" => Some(Self::AllIso),
            "iso-all" | "isoall" | "iso_all" => Some(Self::IsoAll),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::EpiMono => "epi-mono",
            Self::AllIso => "all-iso",
            Self::IsoAll => "iso-all",
        }
    }

    /// Position in the order by inclusion of `M`-classes.
    fn rank(self) -> u8 {
        match self {
            Self::AllIso => 0,
            Self::EpiMono => 1,
            Self::IsoAll => 2,
        }
    }

    /// `M(self) ⊆ M(other)`.
    pub fn m_included_in(self, other: Self) -> bool {
        self.rank() <= other.rank()
    }

    pub fn in_e(self, f: &FinFn) -> bool {
        match self {
            Self::EpiMono => f.is_surjective(),
            Self::AllIso => true,
            Self::IsoAll => f.is_bijective(),
        }
    }

    pub fn in_m(self, f: &FinFn) -> bool {
        match self {
            Self::EpiMono => f.is_injective(),
            Self::AllIso => f.is_bijective(),
            Self::IsoAll => true,
        }
    }

    /// Factors `f` as `m ∘ e`. For epi-mono the image is ordered by least
    /// preimage index.
    pub fn factor(self, f: &FinFn) -> (FinFn, FinFn) {
        match self {
            Self::AllIso => (f.clone(), FinFn::identity(f.cod)),
            Self::IsoAll => (FinFn::identity(f.dom), f.clone()),
            Self::EpiMono => {
                let mut slot = vec![usize::MAX; f.cod];
                let mut image = Vec::new();
                let e = f
                    .table
                    .iter()
                    .map(|&t| {
                        if slot[t] == usize::MAX {
                            slot[t] = image.len();
                            image.push(t);
                        }
                        slot[t]
                    })
                    .collect();
                let k = image.len();
                (
                    FinFn::from_table_unchecked(k, e),
                    FinFn::from_table_unchecked(f.cod, image),
                )
            }
        }
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }

    /// Class labels numbered by first appearance, and the number of classes.
    pub(crate) fn labels(&mut self) -> (usize, Vec<usize>) {
        let n = self.parent.len();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let out = (0..n)
            .map(|i| {
                let r = self.find(i);
                if label[r] == usize::MAX {
                    label[r] = next;
                    next += 1;
                }
                label[r]
            })
            .collect();
        (next, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(cod: usize, t: &[usize]) -> FinFn {
        FinFn::new(cod, t.to_vec()).unwrap()
    }

    /// All functions `dom -> cod`.
    pub(crate) fn all_fns(dom: usize, cod: usize) -> Vec<FinFn> {
        if dom == 0 {
            return vec![FinFn::initial(cod)];
        }
        if cod == 0 {
            return vec![];
        }
        let mut out = Vec::new();
        let mut t = vec![0; dom];
        loop {
            out.push(FinFn::new(cod, t.clone()).unwrap());
            let mut i = 0;
            while i < dom {
                t[i] += 1;
                if t[i] < cod {
                    break;
                }
                t[i] = 0;
                i += 1;
            }
            if i == dom {
                return out;
            }
        }
    }

    #[test]
    fn rejects_out_of_range_entries() {
        assert!(FinFn::new(2, vec![0, 2]).is_err());
    }

    #[test]
    fn coproduct_layout() {
        let c = coproduct(2, 3);
        assert_eq!(c.size, 5);
        assert_eq!(c.inl.table(), &[0, 1]);
        assert_eq!(c.inr.table(), &[2, 3, 4]);

        let c = coproduct(0, 4);
        assert_eq!(c.size, 4);
        assert!(c.inr.is_identity());

        let c = coproduct(1, 1);
        assert_eq!((c.inl.table(), c.inr.table()), (&[0][..], &[1][..]));
    }

    #[test]
    fn copair_examples() {
        let id2 = FinFn::identity(2);
        assert_eq!(copair(&id2, &id2).unwrap().table(), &[0, 1, 0, 1]);
        let legs = copair(&f(4, &[2, 2]), &f(4, &[1, 2, 3, 3])).unwrap();
        assert_eq!(legs.table(), &[2, 2, 1, 2, 3, 3]);
        let g = f(3, &[2, 0]);
        assert_eq!(copair(&FinFn::initial(3), &g).unwrap(), g);
        assert!(copair(&f(2, &[0]), &f(3, &[0])).is_err());
    }

    #[test]
    fn copair_restricts_to_legs() {
        let (a, b) = (f(3, &[2, 0]), f(3, &[1, 1, 2]));
        let c = copair(&a, &b).unwrap();
        let cp = coproduct(a.dom(), b.dom());
        assert_eq!(cp.inl.then(&c).unwrap(), a);
        assert_eq!(cp.inr.then(&c).unwrap(), b);
    }

    #[test]
    fn pushout_examples() {
        let p = pushout(&f(4, &[1, 2, 3, 3]), &f(5, &[0, 1, 2, 3])).unwrap();
        assert_eq!(p.size, 5);

        let g = f(3, &[2, 2]);
        let p = pushout(&FinFn::identity(2), &g).unwrap();
        assert_eq!(p.size, 3);

        let p = pushout(&f(2, &[0]), &f(2, &[0])).unwrap();
        assert_eq!(p.size, 3);
        assert!(pushout(&f(2, &[0]), &f(2, &[0, 1])).is_err());
    }

    /// Quotient of `N ⊔ M` computed by closing a relation matrix, no
    /// union-find involved.
    fn quotient_oracle(f: &FinFn, g: &FinFn) -> Vec<Vec<bool>> {
        let n = f.cod() + g.cod();
        let mut rel = vec![vec![false; n]; n];
        for i in 0..n {
            rel[i][i] = true;
        }
        for y in 0..f.dom() {
            let (a, b) = (f.apply(y), f.cod() + g.apply(y));
            rel[a][b] = true;
            rel[b][a] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if rel[i][k] && rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
        rel
    }

    #[test]
    fn pushout_matches_quotient_oracle() {
        for y in 0..=3 {
            for n in 0..=3 {
                for m in 0..=3 {
                    for f in all_fns(y, n) {
                        for g in all_fns(y, m) {
                            let p = pushout(&f, &g).unwrap();
                            let rel = quotient_oracle(&f, &g);
                            let label = |i: usize| {
                                if i < n {
                                    p.jn.apply(i)
                                } else {
                                    p.jm.apply(i - n)
                                }
                            };
                            for i in 0..n + m {
                                for j in 0..n + m {
                                    assert_eq!(rel[i][j], label(i) == label(j));
                                }
                            }
                            // commuting square, jointly surjective legs
                            assert_eq!(f.then(&p.jn).unwrap(), g.then(&p.jm).unwrap());
                            assert!(copair(&p.jn, &p.jm).unwrap().is_surjective());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn injections_are_stable_under_pushout() {
        for y in 0..=3 {
            for n in 0..=3 {
                for m in 0..=3 {
                    for f in all_fns(y, n) {
                        for g in all_fns(y, m) {
                            let p = pushout(&f, &g).unwrap();
                            if f.is_injective() {
                                assert!(p.jm.is_injective(), "{f:?} {g:?}");
                            }
                            if g.is_injective() {
                                assert!(p.jn.is_injective(), "{f:?} {g:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn composition_is_associative_and_unital() {
        for a in 0..=3 {
            for b in 1..=3 {
                for c in 1..=3 {
                    for f in all_fns(a, b) {
                        assert_eq!(FinFn::identity(a).then(&f).unwrap(), f);
                        assert_eq!(f.then(&FinFn::identity(b)).unwrap(), f);
                        for g in all_fns(b, c) {
                            for h in all_fns(c, 2) {
                                let l = f.then(&g).unwrap().then(&h).unwrap();
                                let r = f.then(&g.then(&h).unwrap()).unwrap();
                                assert_eq!(l, r);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn epi_mono_factorisation() {
        let (e, m) = FactorisationSystem::EpiMono.factor(&f(4, &[2, 2, 1, 2, 3, 3]));
        assert_eq!(e.cod(), 3);
        assert_eq!(m.table(), &[2, 1, 3]);
        assert_eq!(e.table(), &[0, 0, 1, 0, 2, 2]);

        for dom in 0..=5 {
            for cod in 0..=5 {
                if (cod as u64).pow(dom as u32) > 4000 {
                    continue;
                }
                for g in all_fns(dom, cod) {
                    let (e, m) = FactorisationSystem::EpiMono.factor(&g);
                    assert!(e.is_surjective() && m.is_injective());
                    assert_eq!(e.then(&m).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn trivial_factorisations() {
        let g = f(3, &[0, 0, 2]);
        let (e, m) = FactorisationSystem::AllIso.factor(&g);
        assert_eq!((e, m.is_identity()), (g.clone(), true));
        let (e, m) = FactorisationSystem::IsoAll.factor(&g);
        assert_eq!((e.is_identity(), m), (true, g));
    }

    #[test]
    fn classes_are_closed_under_sum() {
        for a in 0..=2 {
            for b in 0..=2 {
                for c in 0..=2 {
                    for d in 0..=2 {
                        for f in all_fns(a, b) {
                            for g in all_fns(c, d) {
                                let s = f.sum(&g);
                                if f.is_surjective() && g.is_surjective() {
                                    assert!(s.is_surjective());
                                }
                                if f.is_injective() && g.is_injective() {
                                    assert!(s.is_injective());
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pullback_pairs_are_lexicographic() {
        let p = pullback(&f(2, &[0, 1, 0]), &f(2, &[0, 0, 1])).unwrap();
        let pairs: Vec<_> = (0..p.size)
            .map(|i| (p.jn.apply(i), p.jm.apply(i)))
            .collect();
        assert_eq!(pairs, vec![(0, 0), (0, 1), (1, 2), (2, 0), (2, 1)]);
    }
}
