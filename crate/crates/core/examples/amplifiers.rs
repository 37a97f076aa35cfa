//! Signal-flow networks as rig-decorated spans: each apex point is a
//! wire carrying a gain. Composition multiplies gains along paths, and the
//! black box sums parallel paths into a matrix.
//!
//! Run with `cargo run --example amplifiers`.

use decorel::decorate::blackbox;
use decorel::rational::{self, Q};
use decorel::rigmat::{
    corelation_to_matrix, decorated_span, span_compose, span_entries, to_matrix, RigContract,
    RigMatrix,
};
use decorel::FactorisationSystem;

fn q(s: &str) -> Q {
    rational::parse(s).unwrap()
}

fn show(m: &RigMatrix<Q>) {
    for r in 0..m.rows {
        let row: Vec<String> = (0..m.cols).map(|c| rational::render(m.get(r, c))).collect();
        println!("  [{}]", row.join(", "));
    }
}

fn main() -> decorel::Result<()> {
    let first = decorated_span(
        3,
        4,
        &[
            (0, 0, q("5")),
            (0, 0, q("1")),
            (1, 1, q("2.1")),
            (1, 2, q("-0.4")),
            (2, 2, q("-2")),
        ],
    )?;
    let second = decorated_span(
        4,
        4,
        &[
            (0, 0, q("1")),
            (0, 0, q("3")),
            (1, 2, q("3")),
            (2, 2, q("-1")),
            (3, 3, q("-2.3")),
        ],
    )?;

    let composite = span_compose(&first, &second)?;
    let parallel: Vec<String> = span_entries(&composite)
        .into_iter()
        .filter(|(x, y, _)| (*x, *y) == (0, 0))
        .map(|(_, _, v)| rational::render(&v))
        .collect();
    println!("parallel gains from x1 to z1: {parallel:?}");

    println!("matrix of the composite:");
    show(&to_matrix(&composite));

    // Black-boxing forgets the wiring but keeps the matrix.
    let rig = RigContract::<Q>::new();
    let boxed = blackbox(&rig, FactorisationSystem::IsoAll, &composite)?;
    println!("black box of the composite:");
    show(&corelation_to_matrix(&boxed)?);
    Ok(())
}
