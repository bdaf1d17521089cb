//! The canonical presentation: rebuilding a theory from its own bounded
//! terms. Every term of depth at most d becomes a fresh operation symbol,
//! a collapse equation defines it over the generator symbols, and the
//! original axioms are transported. Model classes are preserved.
//!
//! Run with `cargo run --example canonical`.

use monpres::catalog;
use monpres::colimit::{canonical_models, canonical_presentation, models_of_size};

fn main() -> monpres::Result<()> {
    let monoid = catalog::get("monoid")?;
    let p = monoid.presentation().unwrap();

    let cp = canonical_presentation(p, 2)?;
    println!(
        "canonical presentation of the monoid at depth 2: {} symbols, {} equations",
        cp.presentation.signature().len(),
        cp.presentation.equations().len()
    );
    println!("sample denotations:");
    for (op, term) in cp.denotations.iter().take(6) {
        println!("  {} denotes {}", op.name(), term);
    }
    println!(
        "every non-generator symbol is forced by a collapse equation: {}",
        cp.structurally_forced()
    );

    for m in 1..=2 {
        let canonical = canonical_models(&cp, m)?.len();
        let original = models_of_size(p, m)?.len();
        println!("carrier {m}: canonical models {canonical}, original models {original}");
    }

    // a degenerate case: one constant, no equations
    let sig = monpres::signature::Signature::from_ops(&[("c", 0)])?;
    let pointed = monpres::presentation::Presentation::new(sig, vec![])?;
    let cp = canonical_presentation(&pointed, 1)?;
    println!(
        "\none constant at depth 1 gives symbols: {}",
        cp.presentation
            .signature()
            .ops()
            .iter()
            .map(|o| format!("{o}"))
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(())
}
