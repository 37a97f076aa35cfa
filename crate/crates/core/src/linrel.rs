//! Linear relations over ℚ.
//!
//! Subspaces are stored by their RREF basis, so equal subspaces compare
//! equal structurally. A corelation in finite-dimensional vector spaces is a
//! jointly epic cospan `U -f-> A <-g- V`; its kernel `ker[f -g]` is a linear
//! relation `U ⇝ V`, and composing corelations through the pushout computes
//! relational composition. The same relations arise as decorated
//! corelations over [`LinContract`] with the `iso-all` system.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::base::FinSet;
use crate::decorate::{dcorel_compose, DecoratedCorelation, DecorationContract};
use crate::error::{Error, Result};
use crate::factorisation::Corelation;
use crate::finset::{FactorisationSystem, FinFn};
use crate::linalg::{kernel_basis, rref, QMatrix};
use crate::rational::{self, Q};

/// A subspace of `k^ambient`, basis rows in RREF.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: QMatrix,
}

impl Subspace {
    /// The span of `rows`, normalised.
    pub fn span(ambient: usize, rows: &[Vec<Q>]) -> Result<Self> {
        let m = QMatrix::from_rows(ambient, rows)?;
        Ok(Self::from_matrix_rows(&m))
    }

    /// The span of the rows of `m`.
    pub fn from_matrix_rows(m: &QMatrix) -> Self {
        Self {
            ambient: m.cols(),
            basis: rref(m).0,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: QMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: QMatrix::identity(ambient),
        }
    }

    /// `{v : m v = 0}`.
    pub fn kernel(m: &QMatrix) -> Self {
        Self {
            ambient: m.cols(),
            basis: kernel_basis(m),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        v.len() == self.ambient
            && self
                .annihilator()
                .apply(v)
                .expect("matching length")
                .iter()
                .all(Zero::is_zero)
    }

    /// Rows spanning `{w : <w, v> = 0 for all v in self}`.
    pub fn annihilator(&self) -> QMatrix {
        kernel_basis(&self.basis)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        Ok(Self::from_matrix_rows(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let constraints = self.annihilator().vstack(&other.annihilator())?;
        Ok(Self::kernel(&constraints))
    }

    /// `{m v : v ∈ self}` for `m : k^ambient -> k^r`.
    pub fn image(&self, m: &QMatrix) -> Result<Self> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "image under a map from k^{} of a subspace of k^{}",
                m.cols(),
                self.ambient
            )));
        }
        let rows = self.basis.mul(&m.transpose())?;
        Ok(Self {
            ambient: m.rows(),
            basis: rref(&rows).0,
        })
    }

    /// `{v : m v ∈ self}` for `m : k^n -> k^ambient`.
    pub fn preimage(&self, m: &QMatrix) -> Result<Self> {
        if m.rows() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "preimage under a map into k^{} of a subspace of k^{}",
                m.rows(),
                self.ambient
            )));
        }
        Ok(Self::kernel(&self.annihilator().mul(m)?))
    }

    /// `self ⊕ other ⊆ k^(a + b)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let left = self
            .basis
            .hstack(&QMatrix::zeros(self.dim(), other.ambient))
            .expect("rows");
        let right = QMatrix::zeros(other.dim(), self.ambient)
            .hstack(&other.basis)
            .expect("rows");
        Self {
            ambient: self.ambient + other.ambient,
            basis: left.vstack(&right).expect("columns"),
        }
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of k^{} and k^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> SubspaceJson {
        SubspaceJson {
            ambient: self.ambient,
            basis: self
                .basis
                .to_rows()
                .iter()
                .map(|r| r.iter().map(rational::render).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &SubspaceJson) -> Result<Self> {
        let rows = parse_rows(&j.basis)?;
        Self::span(j.ambient, &rows)
    }
}

/// Wire format `{"ambient": n, "basis": [["p/q", ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub ambient: usize,
    pub basis: Vec<Vec<String>>,
}

pub(crate) fn parse_rows(rows: &[Vec<String>]) -> Result<Vec<Vec<Q>>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|s| {
                    rational::parse(s)
                        .ok_or_else(|| Error::InvalidDecoration(format!("not a rational: {s:?}")))
                })
                .collect()
        })
        .collect()
}

/// The coordinate projection `k^n -> k^|keep|`.
pub fn projection(n: usize, keep: &[usize]) -> QMatrix {
    let mut p = QMatrix::zeros(keep.len(), n);
    for (r, &c) in keep.iter().enumerate() {
        p.set(r, c, Q::one());
    }
    p
}

/// A cospan of linear maps `U -f-> A <-g- V`, as `dim A × dim U` and
/// `dim A × dim V` matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct LinMapCospan {
    pub f: QMatrix,
    pub g: QMatrix,
}

impl LinMapCospan {
    pub fn new(f: QMatrix, g: QMatrix) -> Result<Self> {
        if f.rows() != g.rows() {
            return Err(Error::CodomainMismatch {
                left: f.rows(),
                right: g.rows(),
            });
        }
        Ok(Self { f, g })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            f: QMatrix::identity(n),
            g: QMatrix::identity(n),
        }
    }

    pub fn dom(&self) -> usize {
        self.f.cols()
    }

    pub fn cod(&self) -> usize {
        self.g.cols()
    }

    pub fn apex(&self) -> usize {
        self.f.rows()
    }

    /// `[f | g] : U ⊕ V -> A`.
    pub fn copairing(&self) -> QMatrix {
        self.f.hstack(&self.g).expect("equal codomains")
    }

    pub fn is_jointly_epic(&self) -> bool {
        self.copairing().rank() == self.apex()
    }

    /// The corelation whose kernel is `l`: the quotient `U ⊕ V -> (U ⊕ V)/l`.
    pub fn from_relation(l: &Subspace, dom: usize) -> Result<Self> {
        if dom > l.ambient() {
            return Err(Error::DimensionMismatch(format!(
                "domain {dom} exceeds ambient {}",
                l.ambient()
            )));
        }
        let q = l.annihilator();
        let g = q.columns(dom..l.ambient()).neg();
        Self::new(q.columns(0..dom), g)
    }
}

/// Pushout of `f : Y -> A` and `g : Y -> B`: `P = (A ⊕ B) / Im[f; -g]`. The
/// quotient map's rows are the RREF basis of the annihilator of the image.
pub fn vect_pushout(f: &QMatrix, g: &QMatrix) -> Result<(QMatrix, QMatrix)> {
    if f.cols() != g.cols() {
        return Err(Error::DomainMismatch {
            left: f.cols(),
            right: g.cols(),
        });
    }
    let w = f.vstack(&g.neg())?;
    let image = Subspace::from_matrix_rows(&w.transpose());
    let q = image.annihilator();
    let a = f.rows();
    Ok((q.columns(0..a), q.columns(a..a + g.rows())))
}

/// `ker[f -g] ⊆ U ⊕ V`.
pub fn corel_to_relation(c: &LinMapCospan) -> Subspace {
    Subspace::kernel(&c.f.hstack(&c.g.neg()).expect("equal codomains"))
}

/// Composite through the pushout of the middle legs, reduced to its
/// jointly epic part.
pub fn corel_compose(c1: &LinMapCospan, c2: &LinMapCospan) -> Result<LinMapCospan> {
    if c1.cod() != c2.dom() {
        return Err(Error::FootMismatch {
            left: c1.cod(),
            right: c2.dom(),
        });
    }
    let (ja, jb) = vect_pushout(&c1.g, &c2.f)?;
    let left = ja.mul(&c1.f)?;
    let right = jb.mul(&c2.g)?;
    Ok(e_part(&LinMapCospan::new(left, right)?))
}

/// Image factorisation of the copairing: keeps the surjection onto its
/// image, whose rows are the nonzero rows of `RREF[f | g]`.
pub fn e_part(c: &LinMapCospan) -> LinMapCospan {
    let (e, _) = rref(&c.copairing());
    let u = c.dom();
    LinMapCospan {
        f: e.columns(0..u),
        g: e.columns(u..u + c.cod()),
    }
}

/// `{(u, w) : ∃v. (u, v) ∈ l1 ∧ (v, w) ∈ l2}` with `dim V = mid`, by
/// intersecting `l1 ⊕ W` with `U ⊕ l2` and projecting away `V`.
pub fn relation_compose_oracle(l1: &Subspace, l2: &Subspace, mid: usize) -> Result<Subspace> {
    if l1.ambient() < mid || l2.ambient() < mid {
        return Err(Error::DimensionMismatch(format!(
            "middle dimension {mid} exceeds an ambient ({}, {})",
            l1.ambient(),
            l2.ambient()
        )));
    }
    let u = l1.ambient() - mid;
    let w = l2.ambient() - mid;
    let a = l1.direct_sum(&Subspace::full(w));
    let b = Subspace::full(u).direct_sum(l2);
    let meet = a.intersect(&b)?;
    let keep: Vec<usize> = (0..u).chain(u + mid..u + mid + w).collect();
    meet.image(&projection(u + mid + w, &keep))
}

/// `N ↦ {subspaces of k^N}` on `FinSet`.
#[derive(Debug, Clone, Copy, Default)]
pub struct LinContract;

/// `(P_f v)(n) = v(f(n))`: precomposition with `f : N -> M` as a matrix
/// `k^M -> k^N`.
pub fn precomposition(f: &FinFn) -> QMatrix {
    let mut p = QMatrix::zeros(f.dom(), f.cod());
    for (n, &m) in f.table().iter().enumerate() {
        p.set(n, m, Q::one());
    }
    p
}

impl DecorationContract for LinContract {
    type Base = FinSet;
    type Dec = Subspace;

    fn name(&self) -> String {
        "lin".into()
    }

    fn carrier_contains(&self, n: usize, d: &Subspace) -> bool {
        d.ambient() == n
    }

    /// `{v ∈ k^M : v ∘ f ∈ L}`: the kernel of the annihilator composed
    /// with precomposition, whose columns are fiber sums.
    fn push(&self, f: &FinFn, d: &Subspace) -> Subspace {
        let a = d.annihilator();
        let mut constraints = QMatrix::zeros(a.rows(), f.cod());
        for r in 0..a.rows() {
            for (n, &m) in f.table().iter().enumerate() {
                let x = a.get(r, n);
                if !x.is_zero() {
                    let sum = constraints.get(r, m) + x;
                    constraints.set(r, m, sum);
                }
            }
        }
        Subspace::kernel(&constraints)
    }

    /// `{u ∘ m : u ∈ L}`, by reindexing basis rows.
    fn pull(&self, m: &FinFn, d: &Subspace) -> Result<Subspace> {
        if m.cod() != d.ambient() {
            return Err(Error::DimensionMismatch(format!(
                "pull along a map into {} of a subspace of k^{}",
                m.cod(),
                d.ambient()
            )));
        }
        let rows: Vec<Vec<Q>> = d
            .basis()
            .to_rows()
            .iter()
            .map(|u| m.table().iter().map(|&j| u[j].clone()).collect())
            .collect();
        Subspace::span(m.dom(), &rows)
    }

    fn supports(&self, _sys: FactorisationSystem) -> bool {
        true
    }

    fn coherence(&self, dn: &Subspace, dm: &Subspace) -> Subspace {
        dn.direct_sum(dm)
    }

    fn unit(&self) -> Subspace {
        Subspace::zero(0)
    }

    fn equal(&self, a: &Subspace, b: &Subspace) -> bool {
        a == b
    }
}

pub type LinCorelation = DecoratedCorelation<FinSet, Subspace>;

/// The relation `l ⊆ k^(X + Y)` as a morphism `X -> Y` of `LinCorel`.
pub fn lincorel_from_relation(l: &Subspace, dom: usize) -> Result<LinCorelation> {
    if dom > l.ambient() {
        return Err(Error::DimensionMismatch(format!(
            "domain {dom} exceeds ambient {}",
            l.ambient()
        )));
    }
    let cod = l.ambient() - dom;
    let n = dom + cod;
    let cospan = crate::cospan::Cospan::new(
        FinFn::new(n, (0..dom).collect())?,
        FinFn::new(n, (dom..n).collect())?,
    )?;
    DecoratedCorelation::new(
        &LinContract,
        Corelation::new(FactorisationSystem::IsoAll, cospan)?,
        l.clone(),
    )
}

/// The relation carried by a `LinCorel` morphism, in foot coordinates.
pub fn lincorel_relation(f: &LinCorelation) -> Subspace {
    let legs = f.corel.cospan().copairing();
    LinContract
        .pull(&legs, &f.dec)
        .expect("precomposition is total")
}

pub fn lincorel_compose(f: &LinCorelation, g: &LinCorelation) -> Result<LinCorelation> {
    dcorel_compose(&LinContract, FactorisationSystem::IsoAll, f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decorate::{dcorel_identity, empty_decoration};
    use crate::rational::{int, ratio};

    fn graph(k: i64) -> Subspace {
        Subspace::span(2, &[vec![int(1), int(k)]]).unwrap()
    }

    fn scalar(k: i64) -> QMatrix {
        QMatrix::from_ints(1, &[&[k]])
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(
            Subspace::kernel(&QMatrix::from_ints(2, &[&[1, -1]])),
            graph(1)
        );
        assert_eq!(Subspace::kernel(&QMatrix::identity(3)), Subspace::zero(3));
        assert_eq!(
            Subspace::kernel(&QMatrix::from_ints(2, &[&[2, -1]])),
            graph(2)
        );
    }

    #[test]
    fn equal_spans_are_identical() {
        let a = Subspace::span(
            3,
            &[vec![int(1), int(1), int(0)], vec![int(0), int(1), int(1)]],
        )
        .unwrap();
        let b = Subspace::span(
            3,
            &[vec![int(1), int(2), int(1)], vec![int(2), int(3), int(1)]],
        )
        .unwrap();
        assert_eq!(a, b);
        assert!(a.contains(&[int(1), int(0), int(-1)]));
        assert!(!a.contains(&[int(1), int(0), int(0)]));
    }

    #[test]
    fn intersections_and_images() {
        let x = Subspace::span(2, &[vec![int(1), int(0)]]).unwrap();
        let d = graph(1);
        assert_eq!(x.intersect(&d).unwrap(), Subspace::zero(2));
        assert_eq!(x.sum(&d).unwrap(), Subspace::full(2));
        let swap = QMatrix::from_ints(2, &[&[0, 1], &[1, 0]]);
        assert_eq!(
            graph(2).image(&swap).unwrap(),
            Subspace::span(2, &[vec![int(2), int(1)]]).unwrap()
        );
        assert_eq!(
            graph(2).preimage(&swap).unwrap(),
            graph(2).image(&swap).unwrap()
        );
    }

    #[test]
    fn pushout_examples() {
        let (ja, jb) = vect_pushout(&scalar(1), &scalar(2)).unwrap();
        assert_eq!(ja, scalar(1));
        assert_eq!(jb.to_rows(), vec![vec![ratio(1, 2)]]);

        let (ja, jb) = vect_pushout(&QMatrix::zeros(2, 0), &QMatrix::zeros(1, 0)).unwrap();
        assert_eq!(ja.hstack(&jb).unwrap().rank(), 3);

        // pushing out along an identity leaves the other leg's codomain
        let h = QMatrix::from_ints(2, &[&[1, 2]]);
        let (ja, _) = vect_pushout(&h, &QMatrix::identity(2)).unwrap();
        assert_eq!((ja.rows(), ja.rank()), (1, 1));
        let (_, jb) = vect_pushout(&QMatrix::identity(2), &h).unwrap();
        assert_eq!((jb.rows(), jb.rank()), (1, 1));
    }

    #[test]
    fn relations_of_cospans() {
        assert_eq!(corel_to_relation(&LinMapCospan::identity(1)), graph(1));
        let c = LinMapCospan::new(scalar(2), scalar(1)).unwrap();
        assert_eq!(corel_to_relation(&c), graph(2));
        assert!(c.is_jointly_epic());
        assert!(
            !LinMapCospan::new(QMatrix::zeros(1, 1), QMatrix::zeros(1, 1))
                .unwrap()
                .is_jointly_epic()
        );
    }

    #[test]
    fn composition_examples() {
        let c2 = LinMapCospan::new(scalar(2), scalar(1)).unwrap();
        let c3 = LinMapCospan::new(scalar(3), scalar(1)).unwrap();
        let c6 = corel_compose(&c2, &c3).unwrap();
        assert_eq!(corel_to_relation(&c6), graph(6));
        assert!(c6.is_jointly_epic());
        assert_eq!(
            relation_compose_oracle(&graph(2), &graph(3), 1).unwrap(),
            graph(6)
        );

        let id = corel_compose(&c2, &LinMapCospan::identity(1)).unwrap();
        assert_eq!(corel_to_relation(&id), graph(2));

        // {(u, v) : v = 0} then {(v, w) : v = 0}
        let v0 = Subspace::span(2, &[vec![int(1), int(0)]]).unwrap();
        let v0r = Subspace::span(2, &[vec![int(0), int(1)]]).unwrap();
        let a = LinMapCospan::from_relation(&v0, 1).unwrap();
        let b = LinMapCospan::from_relation(&v0r, 1).unwrap();
        assert_eq!(corel_to_relation(&a), v0);
        assert_eq!(
            corel_to_relation(&corel_compose(&a, &b).unwrap()),
            Subspace::full(2)
        );
        assert_eq!(
            relation_compose_oracle(&v0, &v0r, 1).unwrap(),
            Subspace::full(2)
        );
        assert_eq!(
            relation_compose_oracle(&Subspace::zero(2), &graph(3), 1).unwrap(),
            Subspace::zero(2)
        );
    }

    #[test]
    fn contract_examples() {
        let f = FinFn::new(2, vec![0]).unwrap();
        let pushed = LinContract.push(&f, &Subspace::zero(1));
        assert_eq!(pushed, Subspace::span(2, &[vec![int(0), int(1)]]).unwrap());
        let g = FinFn::new(1, vec![0, 0]).unwrap();
        assert_eq!(LinContract.pull(&g, &Subspace::full(1)).unwrap(), graph(1));
        assert_eq!(LinContract.push(&FinFn::identity(2), &graph(5)), graph(5));
        assert_eq!(empty_decoration(&LinContract, 3), Subspace::full(3));
    }

    #[test]
    fn lincorel_examples() {
        let g2 = lincorel_from_relation(&graph(2), 1).unwrap();
        let g3 = lincorel_from_relation(&graph(3), 1).unwrap();
        let g6 = lincorel_compose(&g2, &g3).unwrap();
        assert_eq!(lincorel_relation(&g6), graph(6));

        let id = dcorel_identity(&LinContract, FactorisationSystem::IsoAll, 1).unwrap();
        assert_eq!(lincorel_relation(&id), graph(1));
        assert_eq!(
            lincorel_relation(&lincorel_compose(&id, &g2).unwrap()),
            graph(2)
        );
    }

    #[test]
    fn json_round_trip() {
        let j = SubspaceJson {
            ambient: 2,
            basis: vec![vec!["2".into(), "4".into()], vec!["1".into(), "2".into()]],
        };
        let s = Subspace::from_json(&j).unwrap();
        assert_eq!(s, graph(2));
        assert_eq!(
            s.to_json().basis,
            vec![vec!["1/1".to_string(), "2/1".to_string()]]
        );
    }

    #[test]
    fn push_and_pull_match_precomposition_matrices() {
        use crate::lawcheck::sample::{random_fn, random_subspace};
        use rand::{rngs::StdRng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(12);
        for _ in 0..200 {
            let (n, m) = (
                rand::Rng::gen_range(&mut rng, 0..4),
                rand::Rng::gen_range(&mut rng, 1..4),
            );
            let f = random_fn(n, m, &mut rng);
            let l = random_subspace(n, 2, &mut rng);
            let via_matrix = l.preimage(&precomposition(&f)).unwrap();
            assert_eq!(LinContract.push(&f, &l), via_matrix);
            let k = random_subspace(m, 2, &mut rng);
            assert_eq!(
                LinContract.pull(&f, &k).unwrap(),
                k.image(&precomposition(&f)).unwrap()
            );
        }
    }
}
