//! Checks the special commutative Frobenius axioms and their coherence
//! conditions in several hypergraph categories, and shows what a failure
//! looks like.
//!
//! Run with `cargo run --example law_check`.

use decorel::lawcheck::instances::{
    lincorel_instance, rig_corel_instance, rig_span_instance, CorelInstance,
    CorruptedCospanInstance, CospanInstance, RigMatInstance,
};
use decorel::lawcheck::{check_frobenius, HypergraphInstance, Report};
use decorel::rational::Q;
use decorel::FactorisationSystem;

fn summary<I: HypergraphInstance>(inst: &I, max_size: usize) -> Report {
    let r = check_frobenius(inst, max_size);
    let passed = r.results.len() - r.failures().count();
    println!("{:<32} {passed:>3}/{} pass", inst.name(), r.results.len());
    r
}

fn main() {
    summary(&CospanInstance, 3);
    for sys in FactorisationSystem::ALL {
        summary(&CorelInstance(sys), 3);
    }
    summary(&rig_span_instance::<Q>(), 3);
    summary(&rig_corel_instance::<Q>(FactorisationSystem::IsoAll), 3);
    summary(&RigMatInstance::<Q>::new(), 3);
    summary(&lincorel_instance(), 2);

    let broken = summary(&CorruptedCospanInstance, 2);
    if let Some(f) = broken.failures().next() {
        println!("\nfirst failure: {} at {}", f.axiom, f.object);
        println!("  {}", f.counterexample.as_deref().unwrap_or(""));
    };
}
