//! Theories generated by a finite rig: left modules (one unary action per
//! scalar) and affine-combination theories (one symbol per row-sum-one
//! vector), instantiated here over the two-element Boolean rig.
//!
//! Run with `cargo run --example rig_theories`.

use monpres::algebra::FiniteAlgebra;
use monpres::catalog::{
    boolean_rig, instantiate_rig_theory, rig_signature, RigTheory,
};
use monpres::presentation::enumerate_models;

fn main() -> monpres::Result<()> {
    let b = boolean_rig();

    // modules over B
    let module = instantiate_rig_theory(&b, RigTheory::Module)?;
    println!(
        "module-over-B: {} symbols, {} equations",
        module.signature().len(),
        module.equations().len()
    );
    let models = enumerate_models(&module, 2)?;
    println!("models on carriers <= 2: {}", models.len());
    for m in models.iter().filter(|m| m.carrier_size() == 2) {
        println!(
            "  add {:?}, zero {}, r0 {:?}, r1 {:?}",
            m.tables()[0],
            m.tables()[1][0],
            m.tables()[2],
            m.tables()[3]
        );
    }

    // affine combinations over B: at arity 2 the row-sum-one vectors are
    // (0,1), (1,0), (1,1)
    let affine = instantiate_rig_theory(&b, RigTheory::Affine { max_arity: 2 })?;
    let binary: Vec<String> = affine
        .signature()
        .ops_with_arity(2)
        .map(|o| o.name().to_string())
        .collect();
    println!("\naffine-over-B binary symbols: {}", binary.join(", "));
    println!(
        "affine-over-B: {} equations including basis projections",
        affine.equations().len()
    );

    // a non-rig is rejected with the violated axiom and assignment
    let broken = FiniteAlgebra::new(
        rig_signature(),
        2,
        vec![vec![0, 1, 1, 1], vec![0], vec![1, 1, 1, 0], vec![1]],
    )?;
    match instantiate_rig_theory(&broken, RigTheory::Module) {
        Err(e) => println!("\nnand-as-multiplication rejected: {e}"),
        Ok(_) => unreachable!("nand is not associative"),
    }
    Ok(())
}
