//! Open circuits: labelled graphs with input and output terminals, glued in
//! series and in parallel.
//!
//! Run with `cargo run --example open_circuits`.

use decorel::circuits::{resistor, CircuitContract};
use decorel::cospan::Frobenius;
use decorel::decorate::{dcospan_compose, dcospan_frobenius, dcospan_tensor, restrict};
use decorel::FactorisationSystem;

fn main() -> decorel::Result<()> {
    let c = CircuitContract;
    let series = dcospan_compose(&c, &resistor("R1"), &resistor("2"))?;
    println!(
        "series: {:?}\n  edges {:?}",
        series.cospan,
        series.dec.sorted_edges()
    );

    // split one wire, run through two resistors side by side, merge again
    let split = dcospan_frobenius(&c, 1, Frobenius::Delta);
    let merge = dcospan_frobenius(&c, 1, Frobenius::Mu);
    let both = dcospan_tensor(&c, &resistor("R"), &resistor("C"));
    let parallel = dcospan_compose(&c, &dcospan_compose(&c, &split, &both)?, &merge)?;
    println!(
        "parallel: {:?}\n  edges {:?}",
        parallel.cospan,
        parallel.dec.sorted_edges()
    );

    // all-iso corelations keep every vertex, so the graph survives intact
    let boxed = restrict(&c, FactorisationSystem::AllIso, &series)?;
    println!("as a corelation: apex {}", boxed.corel.apex());

    // epi-mono would drop the interior vertex, which an edge still touches
    match restrict(&c, FactorisationSystem::EpiMono, &series) {
        Ok(_) => println!("epi-mono restriction succeeded"),
        Err(e) => println!("epi-mono restriction refused: {e}"),
    }
    Ok(())
}
