//! Evaluates the JSON diagram expressions under `examples/data` the same
//! way `decorel eval` does, in-process.
//!
//! Run with `cargo run --example expression_files`.

use std::path::Path;

use decorel::cli::categories::CliCategory;
use decorel::cli::{read_expr_file, CliError, Evaluator};
use decorel::lawcheck::instances::{lincorel_instance, CorelInstance, RigMatInstance};
use decorel::rational::Q;
use decorel::FactorisationSystem;

fn eval_in<C: CliCategory>(cat: &C, file: &str) -> Result<(), CliError> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(file);
    let expr = read_expr_file(&path)?;
    let f = Evaluator::new(cat, &expr).eval_main()?;
    println!(
        "{file} in {}:\n{}\n",
        cat.name(),
        cat.render(&f, &expr.names)
    );
    Ok(())
}

fn main() -> Result<(), CliError> {
    eval_in(
        &CorelInstance(FactorisationSystem::EpiMono),
        "intro_cospans.json",
    )?;
    eval_in(&RigMatInstance::<Q>::new(), "amplifiers.json")?;
    eval_in(&lincorel_instance(), "scalings.json")?;
    match eval_in(
        &CorelInstance(FactorisationSystem::EpiMono),
        "ill_typed.json",
    ) {
        Err(e) => println!("ill_typed.json: {e} (exit code {})", e.exit_code()),
        Ok(()) => unreachable!("the file does not typecheck"),
    }
    Ok(())
}
