//! Property tests for the algebraic invariants that cut across modules.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use decorel::base::{FinSet, FinSetOp};
use decorel::circuits::CircuitContract;
use decorel::decorate::{
    dcospan_compose, dcospan_identity, dcospan_iso_eq, transform_functor, DecoratedCospan,
};
use decorel::factorisation::{box_functor, e_part, Corelation};
use decorel::finset::pushout;
use decorel::lawcheck::sample::{
    random_cospan, random_qmatrix, random_subspace, SampleDecoration, SampleRig,
};
use decorel::linrel::{corel_to_relation, vect_pushout, LinMapCospan};
use decorel::rational::Q;
use decorel::rigmat::{
    mat_compose, nat_support, reduce_span, to_matrix, DecoratedSpan, RigContract, RigMatrix,
};
use decorel::{Cospan, FactorisationSystem, FinFn};

fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn decorated<F: SampleDecoration>(
    c: &F,
    x: usize,
    y: usize,
    r: &mut StdRng,
) -> DecoratedCospan<F::Base, F::Dec> {
    let cospan = random_cospan::<F::Base>(x, y, 3, r);
    let dec = c.sample_dec(cospan.apex(), r);
    DecoratedCospan { cospan, dec }
}

fn decorated_laws<F: SampleDecoration>(c: &F, seed: u64) -> Result<(), TestCaseError> {
    let mut r = rng(seed);
    let (w, x, y, z) = (
        r.gen_range(0..=2),
        r.gen_range(0..=2),
        r.gen_range(0..=2),
        r.gen_range(0..=2),
    );
    let f = decorated(c, w, x, &mut r);
    let g = decorated(c, x, y, &mut r);
    let h = decorated(c, y, z, &mut r);
    let left = dcospan_compose(c, &dcospan_compose(c, &f, &g).unwrap(), &h).unwrap();
    let right = dcospan_compose(c, &f, &dcospan_compose(c, &g, &h).unwrap()).unwrap();
    prop_assert!(dcospan_iso_eq(c, &left, &right).unwrap());
    let unit_l = dcospan_compose(c, &dcospan_identity(c, w), &f).unwrap();
    let unit_r = dcospan_compose(c, &f, &dcospan_identity(c, x)).unwrap();
    prop_assert!(dcospan_iso_eq(c, &unit_l, &f).unwrap());
    prop_assert!(dcospan_iso_eq(c, &unit_r, &f).unwrap());
    Ok(())
}

/// Partition of `X + Z` obtained by gluing partitions of `X + Y` and
/// `Y + Z` along `Y` and forgetting the `Y` points.
fn partition_compose(
    x: usize,
    y: usize,
    z: usize,
    p: &[Vec<usize>],
    q: &[Vec<usize>],
) -> Vec<Vec<usize>> {
    // points: X = 0..x, Y = x..x+y, Z = x+y..x+y+z
    let n = x + y + z;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    let mut join = |blocks: &[Vec<usize>], offset: usize| {
        for b in blocks {
            for w in b.windows(2) {
                let (a, c) = (
                    find(&mut parent, w[0] + offset),
                    find(&mut parent, w[1] + offset),
                );
                parent[a] = c;
            }
        }
    };
    join(p, 0);
    join(q, x);
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in (0..x).chain(x + y..n) {
        let root = find(&mut parent, i);
        let label = if i < x { i } else { i - y };
        classes.entry(root).or_default().push(label);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort();
    out
}

/// Every set partition of `0..n`, blocks sorted by least element.
fn partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![vec![]];
    for i in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for b in 0..p.len() {
                let mut q: Vec<Vec<usize>> = p.clone();
                q[b].push(i);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![i]);
            next.push(q);
        }
        out = next;
    }
    out
}

#[test]
fn epi_mono_composition_matches_partition_oracle() {
    let mut cases = 0;
    for x in 0..=3 {
        for y in 0..=3 {
            for z in 0..=3 {
                if x + y + z > 7 {
                    continue;
                }
                for p in partitions(x + y) {
                    let f = Corelation::from_partition(x, y, &p).unwrap();
                    for q in partitions(y + z) {
                        let g = Corelation::from_partition(y, z, &q).unwrap();
                        let mut got = f.compose(&g).unwrap().partition();
                        got.retain(|b| !b.is_empty());
                        got.sort();
                        assert_eq!(got, partition_compose(x, y, z, &p, &q), "{p:?} ; {q:?}");
                        cases += 1;
                    }
                }
            }
        }
    }
    assert!(cases > 10_000, "only {cases} cases");
}

/// Every cospan `x -> n <- y` with `n <= 2`.
fn all_cospans(x: usize, y: usize) -> Vec<Cospan> {
    let mut out = Vec::new();
    for n in 0..=2usize {
        let fns = |d: usize| -> Vec<FinFn> {
            (0..n.pow(d as u32))
                .map(|mut k| {
                    let t = (0..d)
                        .map(|_| {
                            let v = k % n;
                            k /= n;
                            v
                        })
                        .collect();
                    FinFn::new(n, t).unwrap()
                })
                .collect()
        };
        let (ls, rs) = if n == 0 && (x > 0 || y > 0) {
            (vec![], vec![])
        } else if n == 0 {
            (vec![FinFn::initial(0)], vec![FinFn::initial(0)])
        } else {
            (fns(x), fns(y))
        };
        for l in &ls {
            for r in &rs {
                out.push(Cospan::new(l.clone(), r.clone()).unwrap());
            }
        }
    }
    out
}

#[test]
fn cospan_classes_compose_associatively_and_unitally() {
    for (x, y, z) in [
        (1, 1, 1),
        (2, 1, 1),
        (1, 2, 1),
        (1, 1, 2),
        (2, 2, 1),
        (0, 1, 2),
    ] {
        let (fs, gs) = (all_cospans(x, y), all_cospans(y, z));
        for f in &fs {
            assert!(Cospan::identity(x).compose(f).unwrap().iso_eq(f));
            assert!(f.compose(&Cospan::identity(y)).unwrap().iso_eq(f));
            for g in &gs {
                for h in all_cospans(z, 1).iter().take(6) {
                    let l = f.compose(g).unwrap().compose(h).unwrap();
                    let r = f.compose(&g.compose(h).unwrap()).unwrap();
                    assert!(l.iso_eq(&r));
                }
            }
        }
    }
}

#[test]
fn cospan_canonical_forms_ignore_representatives() {
    // the composite class only depends on the classes of the factors
    let mut r = rng(5);
    for _ in 0..200 {
        let f = random_cospan::<FinSet>(2, 2, 3, &mut r);
        let g = random_cospan::<FinSet>(2, 1, 3, &mut r);
        let perm: Vec<usize> = {
            let mut p: Vec<usize> = (0..f.apex()).collect();
            p.reverse();
            p
        };
        let f2 = f.relabel_apex(&perm).unwrap();
        assert_eq!(
            f.compose(&g).unwrap().canonicalize(),
            f2.compose(&g).unwrap().canonicalize()
        );
    }
}

#[test]
fn linear_corelations_biject_with_subspaces() {
    let mut r = rng(9);
    for _ in 0..300 {
        let (u, v) = (r.gen_range(0..=3), r.gen_range(0..=3));
        let l = random_subspace(u + v, 3, &mut r);
        let c = LinMapCospan::from_relation(&l, u).unwrap();
        assert!(c.is_jointly_epic());
        assert_eq!(corel_to_relation(&c), l);
    }
}

#[test]
fn pushout_leg_opposite_an_injection_is_injective() {
    let mut r = rng(10);
    let mut checked = 0;
    while checked < 200 {
        let (y, a, b) = (r.gen_range(0..=3), r.gen_range(0..=3), r.gen_range(0..=3));
        let f = random_qmatrix(a, y, &mut r);
        let g = random_qmatrix(b, y, &mut r);
        if g.rank() != y {
            continue;
        }
        let (ja, _) = vect_pushout(&f, &g).unwrap();
        assert_eq!(ja.rank(), a, "jA not injective for f = {f:?}, g = {g:?}");
        checked += 1;
    }
}

fn relabel_span<R: SampleRig>(f: &DecoratedSpan<R>, r: &mut StdRng) -> DecoratedSpan<R> {
    let n = f.cospan.apex();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, r.gen_range(0..=i));
    }
    let cospan = f.cospan.relabel_apex(&perm).unwrap();
    let mut dec = f.dec.clone();
    for (i, &p) in perm.iter().enumerate() {
        dec[p] = f.dec[i].clone();
    }
    DecoratedCospan { cospan, dec }
}

fn random_span<R: SampleRig>(x: usize, y: usize, r: &mut StdRng) -> DecoratedSpan<R> {
    let cospan = random_cospan::<FinSetOp>(x, y, 6, r);
    let dec = (0..cospan.apex()).map(|_| R::sample(r)).collect();
    DecoratedCospan { cospan, dec }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn circuit_composition_is_associative_and_unital(seed in any::<u64>()) {
        decorated_laws(&CircuitContract, seed)?;
    }

    #[test]
    fn rig_composition_is_associative_and_unital(seed in any::<u64>()) {
        decorated_laws(&RigContract::<Q>::new(), seed)?;
        decorated_laws(&RigContract::<BigUint>::new(), seed)?;
    }

    #[test]
    fn box_functor_preserves_composition(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (x, y, z) = (r.gen_range(0..=3), r.gen_range(0..=3), r.gen_range(0..=3));
        let f = random_cospan::<FinSet>(x, y, 4, &mut r);
        let g = random_cospan::<FinSet>(y, z, 4, &mut r);
        for sys in FactorisationSystem::ALL {
            let whole = box_functor(sys, &f.compose(&g).unwrap());
            let parts = box_functor(sys, &f).compose(&box_functor(sys, &g)).unwrap();
            prop_assert!(whole.iso_eq(&parts));
        }
    }

    #[test]
    fn e_parts_commute_with_coproducts(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_cospan::<FinSet>(r.gen_range(0..=3), r.gen_range(0..=3), 4, &mut r);
        let g = random_cospan::<FinSet>(r.gen_range(0..=3), r.gen_range(0..=3), 4, &mut r);
        for sys in FactorisationSystem::ALL {
            let whole = e_part(sys, &f.tensor(&g));
            let parts = e_part(sys, &f).tensor(&e_part(sys, &g)).unwrap();
            prop_assert!(whole.iso_eq(&parts));
        }
    }

    #[test]
    fn tensor_interchanges_with_composition(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = |r: &mut StdRng| r.gen_range(0..=2);
        let (a, b, c, d, e, g) = (s(&mut r), s(&mut r), s(&mut r), s(&mut r), s(&mut r), s(&mut r));
        let f1 = random_cospan::<FinSet>(a, b, 3, &mut r);
        let g1 = random_cospan::<FinSet>(b, c, 3, &mut r);
        let f2 = random_cospan::<FinSet>(d, e, 3, &mut r);
        let g2 = random_cospan::<FinSet>(e, g, 3, &mut r);
        let l = f1.compose(&g1).unwrap().tensor(&f2.compose(&g2).unwrap());
        let rr = f1.tensor(&f2).compose(&g1.tensor(&g2)).unwrap();
        prop_assert_eq!(l.canonicalize(), rr.canonicalize());
    }

    #[test]
    fn circuit_composites_keep_edges_and_pushout_vertices(seed in any::<u64>()) {
        let c = CircuitContract;
        let mut r = rng(seed);
        let (x, y, z) = (r.gen_range(0..=2), r.gen_range(0..=2), r.gen_range(0..=2));
        let f = decorated(&c, x, y, &mut r);
        let g = decorated(&c, y, z, &mut r);
        let h = dcospan_compose(&c, &f, &g).unwrap();
        prop_assert_eq!(h.dec.edge_count(), f.dec.edge_count() + g.dec.edge_count());
        let p = pushout(f.cospan.right(), g.cospan.left()).unwrap();
        prop_assert_eq!(h.dec.vertices(), p.size);
        prop_assert_eq!(h.cospan.apex(), p.size);
    }

    #[test]
    fn matrices_ignore_apex_labels(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_span::<Q>(r.gen_range(0..=4), r.gen_range(0..=4), &mut r);
        let g = relabel_span(&f, &mut r);
        prop_assert_eq!(to_matrix(&f), to_matrix(&g));
    }

    #[test]
    fn rig_homomorphisms_commute_with_matrices(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (x, y, z) = (r.gen_range(0..=3), r.gen_range(0..=3), r.gen_range(0..=3));
        let a: RigMatrix<BigUint> = decorel::lawcheck::sample::random_matrix(x, y, &mut r);
        let b: RigMatrix<BigUint> = decorel::lawcheck::sample::random_matrix(y, z, &mut r);
        let h = |m: &RigMatrix<BigUint>| m.map(nat_support);
        prop_assert_eq!(h(&mat_compose(&a, &b).unwrap()), mat_compose(&h(&a), &h(&b)).unwrap());

        // matrix-of(T(f)) = h(matrix-of(f)) for the induced functor
        let f = random_span::<BigUint>(x, y, &mut r);
        let sys = FactorisationSystem::IsoAll;
        let boxed = reduce_span(&f);
        let image = transform_functor::<RigContract<BigUint>, _, _>(
            sys,
            sys,
            |d: &Vec<BigUint>| d.iter().map(nat_support).collect(),
            &RigContract::<bool>::new(),
            &boxed,
        )
        .unwrap();
        prop_assert_eq!(decorel::rigmat::corelation_to_matrix(&image).unwrap(), h(&to_matrix(&f)));
    }
}
