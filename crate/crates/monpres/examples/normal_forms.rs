//! Knuth-Bendix completion and canonical normal forms: the monoid axioms
//! complete to a convergent system whose normal forms are right-combed
//! words over the generators.
//!
//! Run with `cargo run --example normal_forms`.

use std::collections::BTreeSet;

use monpres::presentation::{
    complete, normal_form, CompletionResult, Equation, NormalFormOutcome, Presentation,
};
use monpres::signature::{enumerate_terms, Context, Signature, Term};

/// Monoid with two generator constants a, b.
fn monoid_on_two_generators() -> monpres::Result<Presentation> {
    let sig = Signature::from_ops(&[("e", 0), ("mul", 2), ("a", 0), ("b", 0)])?;
    let mul = sig.op("mul", 2).unwrap().clone();
    let m = |x: Term, y: Term| Term::App(mul.clone(), vec![x, y]);
    let e = Term::App(sig.op("e", 0).unwrap().clone(), vec![]);
    let equations = vec![
        Equation::new(
            Context::new(3),
            m(m(Term::Var(0), Term::Var(1)), Term::Var(2)),
            m(Term::Var(0), m(Term::Var(1), Term::Var(2))),
            Some("assoc"),
        ),
        Equation::new(Context::new(1), m(e.clone(), Term::Var(0)), Term::Var(0), Some("unitl")),
        Equation::new(Context::new(1), m(Term::Var(0), e), Term::Var(0), Some("unitr")),
    ];
    Presentation::new(sig, equations)
}

fn word_of(term: &Term) -> Option<String> {
    // flatten a ground normal form into the word it spells
    match term {
        Term::Var(_) => None,
        Term::App(op, args) => match (op.name(), args.len()) {
            ("e", 0) => Some(String::new()),
            ("a", 0) => Some("a".into()),
            ("b", 0) => Some("b".into()),
            ("mul", 2) => {
                let l = word_of(&args[0])?;
                let r = word_of(&args[1])?;
                Some(format!("{l}{r}"))
            }
            _ => None,
        },
    }
}

fn main() -> monpres::Result<()> {
    let p = monoid_on_two_generators()?;

    match complete(p.signature(), &[], 0) {
        CompletionResult::Convergent(_) => println!("empty system trivially converges"),
        CompletionResult::GaveUp { .. } => {}
    }

    let result = complete(
        p.signature(),
        &p.equations()
            .iter()
            .map(|e| (e.lhs().clone(), e.rhs().clone()))
            .collect::<Vec<_>>(),
        200,
    );
    match &result {
        CompletionResult::Convergent(system) => {
            println!("monoid completion converged with rules:");
            for rule in system.rules() {
                println!("  {rule}");
            }
        }
        CompletionResult::GaveUp { reason, .. } => println!("gave up: {reason}"),
    }

    // normal forms are right-combed and unit-free
    let sig = p.signature().clone();
    let mul = sig.op("mul", 2).unwrap().clone();
    let term = Term::App(
        mul.clone(),
        vec![
            Term::App(sig.op("a", 0).unwrap().clone(), vec![]),
            Term::App(
                mul,
                vec![
                    Term::App(sig.op("e", 0).unwrap().clone(), vec![]),
                    Term::App(sig.op("b", 0).unwrap().clone(), vec![]),
                ],
            ),
        ],
    );
    if let NormalFormOutcome::Normal(nf) = normal_form(&p, &term, Context::new(0), 200)? {
        println!("\nnf({term}) = {nf}");
    }

    // distinct normal forms among closed terms spelling words of length <= 3
    let mut words = BTreeSet::new();
    for t in enumerate_terms(p.signature(), Context::new(0), 3) {
        if let NormalFormOutcome::Normal(nf) = normal_form(&p, &t, Context::new(0), 200)? {
            if let Some(word) = word_of(&nf) {
                if word.len() <= 3 {
                    words.insert(nf.to_string());
                }
            }
        }
    }
    println!(
        "\ndistinct normal forms spelling words of length <= 3: {} (1 + 2 + 4 + 8)",
        words.len()
    );
    Ok(())
}
