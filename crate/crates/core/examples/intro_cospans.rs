//! Two open diagrams glued along their shared boundary, first as cospans
//! (which remember every interior point) and then as corelations (which
//! keep only what the boundary can see).
//!
//! Run with `cargo run --example intro_cospans`.

use decorel::factorisation::e_part;
use decorel::{Cospan, FactorisationSystem, FinFn};

fn cospan(apex: usize, left: &[usize], right: &[usize]) -> Cospan {
    Cospan::new(
        FinFn::new(apex, left.to_vec()).unwrap(),
        FinFn::new(apex, right.to_vec()).unwrap(),
    )
    .unwrap()
}

fn main() -> decorel::Result<()> {
    // x1, x2 -> N <- y1..y4, then y1..y4 -> M <- z1, z2
    let f = cospan(4, &[2, 2], &[1, 2, 3, 3]);
    let g = cospan(5, &[0, 1, 2, 3], &[1, 4]);

    let fg = f.compose(&g)?;
    println!("cospan composite:     {fg:?}");
    println!("  apex size {}", fg.apex());

    let sys = FactorisationSystem::EpiMono;
    let (fc, gc) = (e_part(sys, &f), e_part(sys, &g));
    println!("E-part of f has apex {} (f has {})", fc.apex(), f.apex());
    println!("E-part of g is g itself: {}", gc.cospan().iso_eq(&g));

    let h = fc.compose(&gc)?;
    let names = ["x1", "x2", "z1", "z2"];
    let blocks: Vec<Vec<&str>> = h
        .partition()
        .iter()
        .map(|b| b.iter().map(|&i| names[i]).collect())
        .collect();
    println!(
        "corelation composite: apex {}, partition {blocks:?}",
        h.apex()
    );
    Ok(())
}
