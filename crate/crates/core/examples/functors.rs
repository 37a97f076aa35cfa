//! Functors between the categories: cospans to corelations, between
//! factorisation systems, black-boxing, and a change of rig.
//!
//! Run with `cargo run --example functors`.

use num_bigint::BigUint;

use decorel::decorate::{blackbox, transform_functor};
use decorel::factorisation::{box_functor, poset_functor};
use decorel::lawcheck::instances::{
    rig_corel_instance, rig_span_instance, CorelInstance, CospanInstance,
};
use decorel::lawcheck::{check_functor, FunctorCheck, Report};
use decorel::rational::Q;
use decorel::rigmat::{nat_support, RigContract};
use decorel::FactorisationSystem::{EpiMono, IsoAll};

fn report(name: &str, r: &Report) {
    let verdict = if r.all_pass() { "all pass" } else { "FAILURES" };
    println!("{name:<28} {} checks, {verdict}", r.results.len());
    for f in r.failures() {
        println!("  {} at {}: {:?}", f.axiom, f.object, f.counterexample);
    }
}

fn main() {
    let opts = FunctorCheck::default();

    let r = check_functor(
        &CospanInstance,
        &CorelInstance(EpiMono),
        |f| Ok(box_functor(EpiMono, f)),
        opts,
    );
    report("cospan -> epi-mono corel", &r);

    let r = check_functor(
        &CorelInstance(EpiMono),
        &CorelInstance(IsoAll),
        |f| poset_functor(EpiMono, IsoAll, f),
        opts,
    );
    report("epi-mono -> iso-all", &r);

    let rig = RigContract::<Q>::new();
    let r = check_functor(
        &rig_span_instance::<Q>(),
        &rig_corel_instance::<Q>(IsoAll),
        |f| blackbox(&rig, IsoAll, f),
        opts,
    );
    report("black box over Q", &r);

    let to_bool = RigContract::<bool>::new();
    let r = check_functor(
        &rig_corel_instance::<BigUint>(IsoAll),
        &rig_corel_instance::<bool>(IsoAll),
        |f| {
            transform_functor::<RigContract<BigUint>, _, _>(
                IsoAll,
                IsoAll,
                |d: &Vec<BigUint>| d.iter().map(nat_support).collect(),
                &to_bool,
                f,
            )
        },
        opts,
    );
    report("support map N -> Bool", &r);
}
