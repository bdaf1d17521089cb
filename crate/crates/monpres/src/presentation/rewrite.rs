//! Rewrite rules and bounded Knuth-Bendix completion.
//!
//! Equations are oriented by the order in [`super::order`]; critical pairs
//! are resolved until either the system is closed (every critical pair of
//! the final rules joins), an equation cannot be oriented, or the overlap
//! budget runs out. Only a system that passed the final joinability sweep
//! is reported as convergent, so normal forms computed from it are
//! canonical representatives.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::order;
use crate::signature::{Signature, Term};

/// An oriented rewrite rule; the left side is strictly greater in the
/// reduction order, so applying it always terminates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Term,
    pub rhs: Term,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

/// A terminating rewrite system over one signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteSystem {
    signature: Signature,
    rules: Vec<Rule>,
}

impl RewriteSystem {
    pub fn new(signature: Signature, rules: Vec<Rule>) -> Self {
        RewriteSystem { signature, rules }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    /// Innermost normalization: arguments first, then root rules in
    /// declaration order, repeated to a fixpoint.
    pub fn normalize(&self, term: &Term) -> Term {
        match term {
            Term::Var(_) => term.clone(),
            Term::App(op, args) => {
                let reduced = Term::App(
                    op.clone(),
                    args.iter().map(|a| self.normalize(a)).collect(),
                );
                for rule in &self.rules {
                    if let Some(bindings) = match_pattern(&rule.lhs, &reduced) {
                        let contractum = apply_bindings(&rule.rhs, &bindings);
                        return self.normalize(&contractum);
                    }
                }
                reduced
            }
        }
    }
}

/// Pattern match `pattern` against `term` at the root; bindings are the
/// pattern's variables.
fn match_pattern(pattern: &Term, term: &Term) -> Option<Vec<Option<Term>>> {
    let mut bindings: Vec<Option<Term>> = vec![None; pattern.min_context()];
    if match_into(pattern, term, &mut bindings) {
        Some(bindings)
    } else {
        None
    }
}

fn match_into(pattern: &Term, term: &Term, bindings: &mut [Option<Term>]) -> bool {
    match pattern {
        Term::Var(i) => match &bindings[*i] {
            Some(bound) => bound == term,
            None => {
                bindings[*i] = Some(term.clone());
                true
            }
        },
        Term::App(op, pargs) => match term {
            Term::App(top, targs) if top == op => pargs
                .iter()
                .zip(targs)
                .all(|(p, t)| match_into(p, t, bindings)),
            _ => false,
        },
    }
}

fn apply_bindings(term: &Term, bindings: &[Option<Term>]) -> Term {
    match term {
        Term::Var(i) => bindings[*i].clone().expect("rule variables bound by lhs"),
        Term::App(op, args) => Term::App(
            op.clone(),
            args.iter().map(|a| apply_bindings(a, bindings)).collect(),
        ),
    }
}

type Subst = HashMap<usize, Term>;

fn walk(term: &Term, subst: &Subst) -> Term {
    match term {
        Term::Var(i) => match subst.get(i) {
            Some(t) => walk(t, subst),
            None => term.clone(),
        },
        Term::App(op, args) => Term::App(
            op.clone(),
            args.iter().map(|a| walk(a, subst)).collect(),
        ),
    }
}

fn occurs(var: usize, term: &Term, subst: &Subst) -> bool {
    match term {
        Term::Var(i) => {
            if *i == var {
                return true;
            }
            match subst.get(i) {
                Some(t) => occurs(var, t, subst),
                None => false,
            }
        }
        Term::App(_, args) => args.iter().any(|a| occurs(var, a, subst)),
    }
}

fn unify(a: &Term, b: &Term, subst: &mut Subst) -> bool {
    match (a, b) {
        (Term::Var(i), _) => {
            if let Some(bound) = subst.get(i).cloned() {
                return unify(&bound, b, subst);
            }
            let b_res = walk(b, subst);
            if b_res == Term::Var(*i) {
                return true;
            }
            if occurs(*i, &b_res, subst) {
                return false;
            }
            subst.insert(*i, b_res);
            true
        }
        (_, Term::Var(_)) => unify(b, a, subst),
        (Term::App(f, fargs), Term::App(g, gargs)) => {
            f == g && fargs.iter().zip(gargs).all(|(x, y)| unify(x, y, subst))
        }
    }
}

fn shift_vars(term: &Term, offset: usize) -> Term {
    match term {
        Term::Var(i) => Term::Var(i + offset),
        Term::App(op, args) => Term::App(
            op.clone(),
            args.iter().map(|a| shift_vars(a, offset)).collect(),
        ),
    }
}

fn replace_at(term: &Term, path: &[usize], with: &Term) -> Term {
    match path.split_first() {
        None => with.clone(),
        Some((&head, rest)) => match term {
            Term::App(op, args) => {
                let mut args = args.clone();
                args[head] = replace_at(&args[head], rest, with);
                Term::App(op.clone(), args)
            }
            Term::Var(_) => unreachable!("path leads through an application"),
        },
    }
}

fn non_var_positions(term: &Term) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(t: &Term, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if let Term::App(_, args) = t {
            out.push(path.clone());
            for (i, a) in args.iter().enumerate() {
                path.push(i);
                go(a, path, out);
                path.pop();
            }
        }
    }
    go(term, &mut Vec::new(), &mut out);
    out
}

/// Critical pairs from overlapping `inner` into the non-variable positions
/// of `outer`'s left side. `same_rule` suppresses the trivial root overlap
/// of a rule with itself.
fn critical_pairs(outer: &Rule, inner: &Rule, same_rule: bool) -> Vec<(Term, Term)> {
    let offset = outer
        .lhs
        .min_context()
        .max(outer.rhs.min_context());
    let inner_lhs = shift_vars(&inner.lhs, offset);
    let inner_rhs = shift_vars(&inner.rhs, offset);

    let mut pairs = Vec::new();
    for path in non_var_positions(&outer.lhs) {
        if same_rule && path.is_empty() {
            continue;
        }
        let sub = subterm_at(&outer.lhs, &path);
        let mut subst = Subst::new();
        if unify(sub, &inner_lhs, &mut subst) {
            let left = walk(&outer.rhs, &subst);
            let overlapped = replace_at(&outer.lhs, &path, &inner_rhs);
            let right = walk(&overlapped, &subst);
            if left != right {
                pairs.push((left, right));
            }
        }
    }
    pairs
}

fn subterm_at<'a>(term: &'a Term, path: &[usize]) -> &'a Term {
    match path.split_first() {
        None => term,
        Some((&head, rest)) => match term {
            Term::App(_, args) => subterm_at(&args[head], rest),
            Term::Var(_) => unreachable!("path leads through an application"),
        },
    }
}

/// Outcome of bounded completion.
#[derive(Debug, Clone)]
pub enum CompletionResult {
    /// Terminating and locally confluent: normal forms are canonical.
    Convergent(RewriteSystem),
    /// Completion stopped early; the partial rules are still sound
    /// rewrites but normal forms are not canonical.
    GaveUp {
        reason: String,
        oriented: Vec<Rule>,
        pending: Vec<(Term, Term)>,
    },
}

impl CompletionResult {
    pub fn as_convergent(&self) -> Option<&RewriteSystem> {
        match self {
            CompletionResult::Convergent(rs) => Some(rs),
            CompletionResult::GaveUp { .. } => None,
        }
    }
}

/// Bounded Knuth-Bendix completion of a set of equations. `max_rounds`
/// limits the number of rule-pair overlap computations.
pub fn complete(
    signature: &Signature,
    equations: &[(Term, Term)],
    max_rounds: usize,
) -> CompletionResult {
    let mut rules: Vec<Rule> = Vec::new();
    let mut queue: VecDeque<(Term, Term)> = equations.iter().cloned().collect();
    let mut rounds = 0usize;

    let give_up = |reason: String, rules: &[Rule], queue: &VecDeque<(Term, Term)>| {
        CompletionResult::GaveUp {
            reason,
            oriented: rules.to_vec(),
            pending: queue.iter().cloned().collect(),
        }
    };

    loop {
        let Some((a, b)) = queue.pop_front() else {
            // final sweep: certify local confluence of the surviving rules
            let system = RewriteSystem::new(signature.clone(), rules.clone());
            let mut joined = true;
            'sweep: for (i, r1) in rules.iter().enumerate() {
                for (j, r2) in rules.iter().enumerate() {
                    rounds += 1;
                    if rounds > max_rounds {
                        return give_up(
                            format!("overlap budget of {max_rounds} exhausted in final sweep"),
                            &rules,
                            &queue,
                        );
                    }
                    for (l, r) in critical_pairs(r1, r2, i == j) {
                        if system.normalize(&l) != system.normalize(&r) {
                            queue.push_back((l, r));
                            joined = false;
                            break 'sweep;
                        }
                    }
                }
            }
            if joined {
                return CompletionResult::Convergent(system);
            }
            continue;
        };

        let system = RewriteSystem::new(signature.clone(), rules.clone());
        let a = system.normalize(&a);
        let b = system.normalize(&b);
        if a == b {
            continue;
        }
        let rule = match order::compare(signature, &a, &b) {
            Some(std::cmp::Ordering::Greater) => Rule { lhs: a, rhs: b },
            Some(std::cmp::Ordering::Less) => Rule { lhs: b, rhs: a },
            _ => {
                return give_up(format!("cannot orient {a} = {b}"), &rules, &queue);
            }
        };

        // interreduce: rules whose left side the new rule rewrites go back
        // into the queue; right sides are renormalized in place
        let single = RewriteSystem::new(signature.clone(), vec![rule.clone()]);
        let mut kept: Vec<Rule> = Vec::new();
        for old in rules.drain(..) {
            if single.normalize(&old.lhs) != old.lhs {
                queue.push_back((old.lhs, old.rhs));
            } else {
                kept.push(old);
            }
        }
        rules = kept;
        let mut with_new = rules.clone();
        with_new.push(rule.clone());
        let refreshed = RewriteSystem::new(signature.clone(), with_new);
        for r in rules.iter_mut() {
            r.rhs = refreshed.normalize(&r.rhs);
        }

        // overlap the new rule against everything (including itself)
        for existing in rules.iter().chain(std::iter::once(&rule)) {
            rounds += 1;
            if rounds > max_rounds {
                rules.push(rule);
                return give_up(
                    format!("overlap budget of {max_rounds} exhausted"),
                    &rules,
                    &queue,
                );
            }
            let same = existing == &rule;
            for pair in critical_pairs(&rule, existing, same) {
                queue.push_back(pair);
            }
            if !same {
                for pair in critical_pairs(existing, &rule, false) {
                    queue.push_back(pair);
                }
            }
        }
        rules.push(rule);
    }
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

    fn monoid_equations(sig: &Signature) -> Vec<(Term, Term)> {
        vec![
            (
                mul(sig, mul(sig, Term::Var(0), Term::Var(1)), Term::Var(2)),
                mul(sig, Term::Var(0), mul(sig, Term::Var(1), Term::Var(2))),
            ),
            (mul(sig, e(sig), Term::Var(0)), Term::Var(0)),
            (mul(sig, Term::Var(0), e(sig)), Term::Var(0)),
        ]
    }

    #[test]
    fn monoid_completes() {
        let sig = monoid_sig();
        let result = complete(&sig, &monoid_equations(&sig), 200);
        let system = result.as_convergent().expect("monoid should complete");
        assert_eq!(system.rules().len(), 3);
    }

    #[test]
    fn monoid_normal_forms_flatten_right() {
        let sig = monoid_sig();
        let result = complete(&sig, &monoid_equations(&sig), 200);
        let system = result.as_convergent().unwrap();
        // ((x0 x1) x2) e -> x0 (x1 x2)
        let t = mul(
            &sig,
            mul(
                &sig,
                mul(&sig, Term::Var(0), Term::Var(1)),
                Term::Var(2),
            ),
            e(&sig),
        );
        let expected = mul(
            &sig,
            Term::Var(0),
            mul(&sig, Term::Var(1), Term::Var(2)),
        );
        assert_eq!(system.normalize(&t), expected);
    }

    #[test]
    fn commutativity_fails_to_orient() {
        let sig = monoid_sig();
        let eqs = vec![(
            mul(&sig, Term::Var(0), Term::Var(1)),
            mul(&sig, Term::Var(1), Term::Var(0)),
        )];
        match complete(&sig, &eqs, 200) {
            CompletionResult::GaveUp { reason, .. } => {
                assert!(reason.contains("cannot orient"), "{reason}");
            }
            CompletionResult::Convergent(_) => panic!("commutativity is unorientable"),
        }
    }

    #[test]
    fn idempotent_semigroup_band_axioms() {
        // x*x = x together with associativity: completion may or may not
        // close this within budget, but the result must stay sound.
        let sig = Signature::from_ops(&[("mul", 2)]).unwrap();
        let mulb = |a: Term, b: Term| Term::App(sig.op("mul", 2).unwrap().clone(), vec![a, b]);
        let eqs = vec![
            (
                mulb(mulb(Term::Var(0), Term::Var(1)), Term::Var(2)),
                mulb(Term::Var(0), mulb(Term::Var(1), Term::Var(2))),
            ),
            (mulb(Term::Var(0), Term::Var(0)), Term::Var(0)),
        ];
        match complete(&sig, &eqs, 400) {
            CompletionResult::Convergent(system) => {
                let t = mulb(Term::Var(0), mulb(Term::Var(0), Term::Var(0)));
                assert_eq!(system.normalize(&t), Term::Var(0));
            }
            CompletionResult::GaveUp { .. } => {}
        }
    }
}
