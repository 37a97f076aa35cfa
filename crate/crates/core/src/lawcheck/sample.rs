//! Seeded random morphisms and decorations.

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::Rng;

use crate::base::Base;
use crate::circuits::{CircuitContract, Edge, Label, LabeledGraph};
use crate::cospan::Cospan;
use crate::decorate::DecorationContract;
use crate::finset::FinFn;
use crate::linalg::QMatrix;
use crate::linrel::{LinContract, Subspace};
use crate::rational::{self, Q};
use crate::rigmat::{Rig, RigContract, RigMatrix};

/// A uniformly random function `dom -> cod`; `cod` must be nonzero unless
/// `dom` is zero.
pub fn random_fn(dom: usize, cod: usize, rng: &mut StdRng) -> FinFn {
    let table = (0..dom).map(|_| rng.gen_range(0..cod)).collect();
    FinFn::new(cod, table).expect("values in range")
}

/// A random base morphism `from -> to`.
pub fn random_hom<B: Base>(from: usize, to: usize, rng: &mut StdRng) -> FinFn {
    let (len, range) = B::hom_shape(from, to);
    random_fn(len, range, rng)
}

/// A random cospan `x -> N <- y` with `|N| <= max_apex`, drawn among the
/// apex sizes that admit legs at all.
pub fn random_cospan<B: Base>(x: usize, y: usize, max_apex: usize, rng: &mut StdRng) -> Cospan<B> {
    let admits = |foot: usize, n: usize| {
        let (len, range) = B::hom_shape(foot, n);
        len == 0 || range > 0
    };
    let sizes: Vec<usize> = (0..=max_apex.max(1))
        .filter(|&n| admits(x, n) && admits(y, n))
        .collect();
    let n = sizes[rng.gen_range(0..sizes.len())];
    let left = random_hom::<B>(x, n, rng);
    let right = random_hom::<B>(y, n, rng);
    Cospan::from_legs(left, right).expect("legs share the apex")
}

/// Contracts that can produce random decorations.
pub trait SampleDecoration: DecorationContract {
    fn sample_dec(&self, n: usize, rng: &mut StdRng) -> Self::Dec;
}

/// Small rig elements, biased towards interesting values.
pub trait SampleRig: Rig {
    fn sample(rng: &mut StdRng) -> Self;
}

impl SampleRig for Q {
    fn sample(rng: &mut StdRng) -> Self {
        let p = rng.gen_range(-4i64..=4);
        let q = rng.gen_range(1i64..=3);
        rational::ratio(p, q)
    }
}

impl SampleRig for BigUint {
    fn sample(rng: &mut StdRng) -> Self {
        BigUint::from(rng.gen_range(0u32..=4))
    }
}

impl SampleRig for bool {
    fn sample(rng: &mut StdRng) -> Self {
        rng.gen_bool(0.6)
    }
}

impl<R: SampleRig> SampleDecoration for RigContract<R> {
    fn sample_dec(&self, n: usize, rng: &mut StdRng) -> Vec<R> {
        (0..n).map(|_| R::sample(rng)).collect()
    }
}

pub fn random_matrix<R: SampleRig>(rows: usize, cols: usize, rng: &mut StdRng) -> RigMatrix<R> {
    RigMatrix::new(
        rows,
        cols,
        (0..rows * cols).map(|_| R::sample(rng)).collect(),
    )
    .expect("sized")
}

impl SampleDecoration for CircuitContract {
    fn sample_dec(&self, n: usize, rng: &mut StdRng) -> LabeledGraph {
        if n == 0 {
            return LabeledGraph::edgeless(0);
        }
        let labels = ["R", "C", "1", "2", "1/2"];
        let edges = (0..rng.gen_range(0..=3))
            .map(|_| {
                let l = labels[rng.gen_range(0..labels.len())];
                Edge::new(rng.gen_range(0..n), rng.gen_range(0..n), Label::parse(l))
            })
            .collect();
        LabeledGraph::new(n, edges).expect("endpoints in range")
    }
}

/// A random subspace of `k^n` of dimension at most `max_dim`.
pub fn random_subspace(n: usize, max_dim: usize, rng: &mut StdRng) -> Subspace {
    let d = rng.gen_range(0..=max_dim.min(n));
    let rows: Vec<Vec<Q>> = (0..d)
        .map(|_| {
            (0..n)
                .map(|_| rational::int(rng.gen_range(-2i64..=2)))
                .collect()
        })
        .collect();
    Subspace::span(n, &rows).expect("row width")
}

/// A random `rows × cols` rational matrix with small integer entries.
pub fn random_qmatrix(rows: usize, cols: usize, rng: &mut StdRng) -> QMatrix {
    let data = (0..rows * cols)
        .map(|_| rational::int(rng.gen_range(-2i64..=2)))
        .collect();
    QMatrix::new(rows, cols, data).expect("sized")
}

impl SampleDecoration for LinContract {
    fn sample_dec(&self, n: usize, rng: &mut StdRng) -> Subspace {
        random_subspace(n, n, rng)
    }
}
