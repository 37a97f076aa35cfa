//! Linear relations as jointly epic cospans of linear maps and as
//! subspace-decorated corelations; both compose like relations.
//!
//! Run with `cargo run --example linear_relations`.

use decorel::linalg::QMatrix;
use decorel::linrel::{
    corel_compose, corel_to_relation, lincorel_compose, lincorel_from_relation, lincorel_relation,
    relation_compose_oracle, vect_pushout, LinMapCospan, Subspace,
};
use decorel::rational::{int, render};

fn show(label: &str, s: &Subspace) {
    let rows: Vec<Vec<String>> = s
        .basis()
        .to_rows()
        .iter()
        .map(|r| r.iter().map(render).collect())
        .collect();
    println!(
        "{label}: dim {} in k^{}, basis {rows:?}",
        s.dim(),
        s.ambient()
    );
}

fn main() -> decorel::Result<()> {
    let (ja, jb) = vect_pushout(
        &QMatrix::from_ints(1, &[&[1]]),
        &QMatrix::from_ints(1, &[&[2]]),
    )?;
    let entries = |m: &QMatrix| -> Vec<Vec<String>> {
        m.to_rows()
            .iter()
            .map(|r| r.iter().map(render).collect())
            .collect()
    };
    println!(
        "pushout of [1] and [2]: jA = {:?}, jB = {:?}",
        entries(&ja),
        entries(&jb)
    );

    // y = 2x as the cospan k --[1]--> k <--[1/2]-- k, then z = 3y.
    let double = LinMapCospan::from_relation(&Subspace::span(2, &[vec![int(1), int(2)]])?, 1)?;
    let triple = LinMapCospan::from_relation(&Subspace::span(2, &[vec![int(1), int(3)]])?, 1)?;
    let six = corel_compose(&double, &triple)?;
    show("cospan composite", &corel_to_relation(&six));

    let oracle =
        relation_compose_oracle(&corel_to_relation(&double), &corel_to_relation(&triple), 1)?;
    show("intersect-and-project", &oracle);

    let d = lincorel_from_relation(&corel_to_relation(&double), 1)?;
    let t = lincorel_from_relation(&corel_to_relation(&triple), 1)?;
    show(
        "decorated corelation composite",
        &lincorel_relation(&lincorel_compose(&d, &t)?),
    );
    Ok(())
}
