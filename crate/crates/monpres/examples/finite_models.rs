//! Finite models of a presentation: satisfaction checks, exhaustive model
//! enumeration, and Eilenberg-Moore law verification for the evaluation
//! structure map.
//!
//! Run with `cargo run --example finite_models`.

use monpres::algebra::{em_laws_hold, enumerate_algebras, is_homomorphism, FiniteAlgebra};
use monpres::catalog;
use monpres::presentation::{enumerate_models, satisfies};

fn main() -> monpres::Result<()> {
    let monoid = catalog::get("monoid")?;
    let p = monoid.presentation().unwrap();

    // the two-element monoids
    let models = enumerate_models(p, 2)?;
    println!("monoid models on carriers <= 2: {}", models.len());
    for (i, m) in models.iter().enumerate() {
        println!(
            "  model {i}: carrier {} unit {} table {:?}",
            m.carrier_size(),
            m.tables()[0][0],
            m.tables()[1]
        );
    }

    // satisfaction is a per-assignment check
    let sig = p.signature().clone();
    let xor = FiniteAlgebra::new(sig.clone(), 2, vec![vec![0], vec![0, 1, 1, 0]])?;
    let proj = FiniteAlgebra::new(sig, 2, vec![vec![0], vec![0, 0, 1, 1]])?;
    println!("\nxor with unit 0 satisfies: {}", satisfies(&xor, p)?);
    println!("left projection satisfies: {}", satisfies(&proj, p)?);

    // constant maps are homomorphisms onto idempotents
    println!(
        "constant-0 self-map of xor is a homomorphism: {}",
        is_homomorphism(&xor, &xor, &[0, 0])?
    );

    // evaluation satisfies the algebra laws for every table
    let binary = monpres::signature::Signature::from_ops(&[("f", 2)])?;
    let all_pass = enumerate_algebras(&binary, 2)?.all(|a| em_laws_hold(&a, 2));
    println!("\nEM laws hold for all 16 binary tables on two elements: {all_pass}");
    Ok(())
}
