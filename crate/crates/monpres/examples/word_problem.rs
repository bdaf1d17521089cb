//! Deciding term equality modulo equations with three cooperating
//! engines: completion, congruence closure, and model search. Every
//! verdict carries replayable evidence.
//!
//! Run with `cargo run --example word_problem`.

use monpres::catalog;
use monpres::dsl::parse_term;
use monpres::presentation::{decide_equal, replay, EqualityBudget, Verdict};
use monpres::signature::Context;

fn main() -> monpres::Result<()> {
    let budget = EqualityBudget::default();

    let monoid = catalog::get("monoid")?;
    let p = monoid.presentation().unwrap();
    let sig = p.signature();

    let queries = [
        ("mul(x0,mul(x1,x2))", "mul(mul(x0,x1),x2)", 3),
        ("mul(e,mul(x0,e))", "x0", 1),
        ("mul(x0,x1)", "mul(x1,x0)", 2),
    ];
    println!("monoid queries:");
    for (lhs, rhs, ctx_size) in queries {
        let ctx = Context::new(ctx_size);
        let t = parse_term(lhs, sig, ctx).expect("parse");
        let u = parse_term(rhs, sig, ctx).expect("parse");
        let verdict = decide_equal(p, &t, &u, ctx, &budget)?;
        let kind = match &verdict {
            Verdict::Equal(_) => "Equal",
            Verdict::Distinct(_) => "Distinct",
            Verdict::Unknown(_) => "Unknown",
        };
        let replayed = replay(p, &t, &u, &verdict)?;
        println!("  {lhs} = {rhs} ?  {kind} (evidence replays: {replayed})");
        if let Verdict::Distinct(monpres::presentation::DistinctEvidence::Model {
            algebra,
            assignment,
            ..
        }) = &verdict
        {
            println!(
                "    separated by a monoid of size {} at assignment {assignment:?}",
                algebra.carrier_size()
            );
        }
    }

    // groups: the completion engine gives up (inverse laws resist the
    // size order), but closure over instantiated axioms still proves
    // ground facts
    let group = catalog::get("group")?;
    let g = group.presentation().unwrap();
    let ctx = Context::new(1);
    let t = parse_term("inv(inv(x0))", g.signature(), ctx).expect("parse");
    let u = parse_term("x0", g.signature(), ctx).expect("parse");
    let verdict = decide_equal(g, &t, &u, ctx, &budget)?;
    println!("\ngroup query: inv(inv(x0)) = x0 ?");
    match &verdict {
        Verdict::Equal(evidence) => {
            println!("  Equal via {evidence:?}")
        }
        other => println!("  {other:?}"),
    }

    // an all-zero budget disables every engine
    let zero = EqualityBudget::zero();
    let v = decide_equal(p, &t.clone(), &u, Context::new(1), &zero);
    // inv is not a monoid symbol, so this is a contract violation, not Unknown
    println!("\nquerying a monoid with group terms: {v:?}");
    Ok(())
}
