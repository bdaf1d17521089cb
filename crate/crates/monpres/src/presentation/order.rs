//! The reduction order used to orient equations into rewrite rules.
//!
//! `s > t` holds when `t`'s variables occur no more often than in `s` and
//! either `s` has strictly more nodes, or the sizes tie and `s` wins the
//! tie-break: later symbol declaration beats earlier, and for the same head
//! the first differing argument decides recursively. The variable-count
//! guard makes the order stable under substitution and context, so every
//! oriented rule strictly decreases a well-founded measure.

use std::cmp::Ordering;

use crate::signature::{Signature, Term};

/// Strict partial order suitable for rewriting: `Some(Greater)` means any
/// instance of the left term rewrites to the corresponding instance of the
/// right one without risking nontermination.
pub fn compare(sig: &Signature, a: &Term, b: &Term) -> Option<Ordering> {
    if a == b {
        return Some(Ordering::Equal);
    }
    if strictly_greater(sig, a, b) {
        Some(Ordering::Greater)
    } else if strictly_greater(sig, b, a) {
        Some(Ordering::Less)
    } else {
        None
    }
}

fn strictly_greater(sig: &Signature, a: &Term, b: &Term) -> bool {
    if !dominates_vars(a, b) {
        return false;
    }
    match a.size().cmp(&b.size()) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => match (a, b) {
            (Term::App(f, fargs), Term::App(g, gargs)) => {
                if f != g {
                    // unknown symbols sort before declared ones
                    let fi = sig.declaration_index(f);
                    let gi = sig.declaration_index(g);
                    return fi > gi;
                }
                for (x, y) in fargs.iter().zip(gargs) {
                    if x != y {
                        return strictly_greater(sig, x, y);
                    }
                }
                false
            }
            // a variable never dominates a distinct term of its own size
            _ => false,
        },
    }
}

/// Every variable occurs in `b` at most as often as in `a`.
fn dominates_vars(a: &Term, b: &Term) -> bool {
    let span = a.min_context().max(b.min_context());
    let ctx = crate::signature::Context::new(span);
    let ca = a.var_counts(ctx);
    let cb = b.var_counts(ctx);
    ca.iter().zip(&cb).all(|(x, y)| y <= x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::Signature;

    fn monoid_sig() -> Signature {
        Signature::from_ops(&[("e", 0), ("mul", 2)]).unwrap()
    }

    fn mul(sig: &Signature, a: Term, b: Term) -> Term {
        Term::App(sig.op("mul", 2).unwrap().clone(), vec![a, b])
    }

    fn e(sig: &Signature) -> Term {
        Term::App(sig.op("e", 0).unwrap().clone(), vec![])
    }

    #[test]
    fn orients_unit_law() {
        let sig = monoid_sig();
        let lhs = mul(&sig, e(&sig), Term::Var(0));
        assert_eq!(compare(&sig, &lhs, &Term::Var(0)), Some(Ordering::Greater));
    }

    #[test]
    fn orients_associativity_left_to_right() {
        let sig = monoid_sig();
        let lhs = mul(
            &sig,
            mul(&sig, Term::Var(0), Term::Var(1)),
            Term::Var(2),
        );
        let rhs = mul(
            &sig,
            Term::Var(0),
            mul(&sig, Term::Var(1), Term::Var(2)),
        );
        assert_eq!(compare(&sig, &lhs, &rhs), Some(Ordering::Greater));
    }

    #[test]
    fn commutativity_incomparable() {
        let sig = monoid_sig();
        let lhs = mul(&sig, Term::Var(0), Term::Var(1));
        let rhs = mul(&sig, Term::Var(1), Term::Var(0));
        assert_eq!(compare(&sig, &lhs, &rhs), None);
    }

    #[test]
    fn distinct_variables_incomparable() {
        let sig = monoid_sig();
        assert_eq!(compare(&sig, &Term::Var(0), &Term::Var(1)), None);
    }

    #[test]
    fn constant_vs_variable_of_equal_size_incomparable() {
        // orienting f(c, x) -> f(x, c) would loop on x := c
        let sig = monoid_sig();
        assert_eq!(compare(&sig, &e(&sig), &Term::Var(0)), None);
    }

    #[test]
    fn variable_count_guard_blocks_unstable_orientation() {
        // mul(x0, x0) vs mul(x1, e): each side has a variable the other
        // lacks, so neither direction survives substitution.
        let sig = monoid_sig();
        let l = mul(&sig, Term::Var(0), Term::Var(0));
        let r = mul(&sig, Term::Var(1), e(&sig));
        assert_eq!(compare(&sig, &l, &r), None);
    }
}
