//! Free term monads over a finitary signature: enumeration by depth,
//! the stage-size recurrence, substitution, and chain stabilization.
//!
//! Run with `cargo run --example free_terms`.

use monpres::signature::{
    chain_stabilization, enumerate_terms, polynomial_size, stage_sizes, Context, Signature, Term,
};

fn main() -> monpres::Result<()> {
    // one binary operation
    let magma = Signature::from_ops(&[("mul", 2)])?;
    let ctx = Context::new(1);

    println!("terms over one binary operation, one variable:");
    for depth in 0..=3 {
        let terms = enumerate_terms(&magma, ctx, depth);
        println!("  depth <= {depth}: {} terms", terms.len());
    }
    println!("  recurrence check: {:?}", stage_sizes(&magma, ctx, 3));

    // the stage law: |X_{d+1}| = |ctx| + |H_sigma(X_d)|
    let x2 = enumerate_terms(&magma, ctx, 2);
    let predicted = ctx.size() as u128 + polynomial_size(&magma, x2.len() as u128);
    let x3 = enumerate_terms(&magma, ctx, 3);
    println!(
        "  stage law: |X_3| = {} = {} + H(|X_2|) = {predicted}",
        x3.len(),
        ctx.size()
    );

    // substitution is the monad multiplication
    let mul = magma.op("mul", 2).unwrap().clone();
    let t = Term::App(mul.clone(), vec![Term::Var(0), Term::Var(1)]);
    let env = [
        Term::App(mul.clone(), vec![Term::Var(0), Term::Var(0)]),
        Term::Var(0),
    ];
    println!("\nsubstitution: {t} with [x0 := mul(x0,x0), x1 := x0]");
    println!("  gives {}", t.substitute(&env)?);

    // chains stabilize exactly when no operation has positive arity
    let constants = Signature::from_ops(&[("a", 0), ("b", 0)])?;
    println!(
        "\nchain over constants only stabilizes at stage {:?}",
        chain_stabilization(&constants, Context::new(2), 10)
    );
    println!(
        "chain over the magma never stabilizes: {:?}",
        chain_stabilization(&magma, ctx, 10)
    );
    Ok(())
}
