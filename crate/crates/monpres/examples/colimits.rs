//! Colimits of presented theories: coproducts, coequalizers, pushouts,
//! and verification that models of the colimit correspond to compatible
//! families of models of the diagram.
//!
//! Run with `cargo run --example colimits`.

use monpres::catalog;
use monpres::colimit::{
    coequalizer, coproduct, models_of_size, pushout, split_model, verify_algebraic,
    MonadDiagram, PresentationMorphism,
};
use monpres::presentation::EqualityBudget;
use monpres::signature::{Signature, SignatureMorphism, Term};

fn main() -> monpres::Result<()> {
    let budget = EqualityBudget::default();
    let monoid = catalog::get("monoid")?;
    let p = monoid.presentation().unwrap().clone();

    // coproduct: models multiply
    let cop = coproduct(&p, &p)?;
    let models = models_of_size(&cop.presentation, 2)?;
    println!(
        "coproduct(monoid, monoid) has {} models on carrier 2 (4 x 4)",
        models.len()
    );
    let (l, r) = split_model(&cop, &models[3])?;
    println!(
        "  model 3 splits into unit-{} and unit-{} monoids",
        l.tables()[0][0],
        r.tables()[0][0]
    );

    // the coproduct is an algebraic colimit of the discrete diagram
    let diagram = MonadDiagram::discrete(vec![p.clone(), p.clone()]);
    let report = verify_algebraic(
        &diagram,
        &cop.presentation,
        &[cop.left.clone(), cop.right.clone()],
        2,
        &budget,
    )?;
    print!("{report}");
    println!("coproduct verified algebraic: {}", report.verified());

    // coequalizer: imposing commutativity
    let sig = p.signature().clone();
    let mul = sig.op("mul", 2).unwrap().clone();
    let gamma = Signature::from_ops(&[("c", 2)])?;
    let t = SignatureMorphism::new(
        gamma.clone(),
        sig.clone(),
        vec![Term::App(mul.clone(), vec![Term::Var(0), Term::Var(1)])],
    )?;
    let u = SignatureMorphism::new(
        gamma.clone(),
        sig,
        vec![Term::App(mul, vec![Term::Var(1), Term::Var(0)])],
    )?;
    let commutative = coequalizer(&gamma, &t, &u, &p)?;
    for m in 1..=3 {
        println!(
            "commutative monoids on carrier {m}: {} of {} monoids",
            models_of_size(&commutative, m)?.len(),
            models_of_size(&p, m)?.len()
        );
    }

    // pushout gluing two copies of the multiplication
    let magma = catalog::get("magma")?.presentation().unwrap().clone();
    let mul_image = Term::App(
        p.signature().op("mul", 2).unwrap().clone(),
        vec![Term::Var(0), Term::Var(1)],
    );
    let arm = PresentationMorphism::new(
        magma.clone(),
        p.clone(),
        SignatureMorphism::new(
            magma.signature().clone(),
            p.signature().clone(),
            vec![mul_image],
        )?,
        &budget,
    )?;
    let po = pushout(&magma, &arm, &arm)?;
    println!(
        "pushout of monoid <- magma -> monoid has {} models on carrier 2",
        models_of_size(&po.presentation, 2)?.len()
    );
    Ok(())
}
