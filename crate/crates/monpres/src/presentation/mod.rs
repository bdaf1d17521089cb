//! Presentations of algebraic theories: a signature together with a
//! finite system of equations, and the computational content of the
//! quotient theory — satisfaction, finite model enumeration, and term
//! equality modulo the equations.
//!
//! The quotient is never materialized as a set of congruence classes; it
//! is represented behaviorally. [`decide_equal`] runs three cooperating
//! engines under an explicit budget: bounded Knuth-Bendix completion
//! (exact when it converges), ground congruence closure over instantiated
//! equations (sound for `Equal`), and finite model search (sound for
//! `Distinct`). When none concludes, the verdict is `Unknown` — the word
//! problem is only semidecidable, so an honest "don't know" is part of
//! the interface.

pub mod closure;
pub mod order;
pub mod rewrite;

use std::fmt;

use crate::algebra::{
    algebra_count, assignments, enumerate_algebras, index_tuple, FiniteAlgebra,
};
use crate::error::{Error, Result};
use crate::signature::{enumerate_terms, Context, Signature, Term};

pub use rewrite::{complete, CompletionResult, RewriteSystem, Rule};

/// A formal equation `lhs ≐ rhs` between two terms in a shared context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    context: Context,
    lhs: Term,
    rhs: Term,
    label: Option<String>,
}

impl Equation {
    pub fn new(
        context: Context,
        lhs: Term,
        rhs: Term,
        label: Option<impl Into<String>>,
    ) -> Self {
        Equation {
            context,
            lhs,
            rhs,
            label: label.map(Into::into),
        }
    }

    pub fn context(&self) -> Context {
        self.context
    }

    pub fn lhs(&self) -> &Term {
        &self.lhs
    }

    pub fn rhs(&self) -> &Term {
        &self.rhs
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn depth(&self) -> usize {
        self.lhs.depth().max(self.rhs.depth())
    }

    pub fn validate(&self, sig: &Signature) -> Result<()> {
        self.lhs.validate(sig, self.context)?;
        self.rhs.validate(sig, self.context)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = self.label.as_deref().unwrap_or("eq");
        write!(
            f,
            "{} ({}) : {} = {}",
            label,
            self.context.size(),
            self.lhs,
            self.rhs
        )
    }
}

/// A presentation: signature plus equations. Well-formedness of every
/// equation against the signature is checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    signature: Signature,
    equations: Vec<Equation>,
}

impl Presentation {
    pub fn new(signature: Signature, equations: Vec<Equation>) -> Result<Self> {
        for eq in &equations {
            eq.validate(&signature)?;
        }
        Ok(Presentation {
            signature,
            equations,
        })
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn max_equation_depth(&self) -> usize {
        self.equations.iter().map(Equation::depth).max().unwrap_or(0)
    }

    pub fn max_equation_context(&self) -> usize {
        self.equations
            .iter()
            .map(|e| e.context().size())
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn equation_pairs(&self) -> Vec<(Term, Term)> {
        self.equations
            .iter()
            .map(|e| (e.lhs.clone(), e.rhs.clone()))
            .collect()
    }
}

/// Does the algebra satisfy every equation under every assignment?
pub fn satisfies(algebra: &FiniteAlgebra, presentation: &Presentation) -> Result<bool> {
    if algebra.signature() != presentation.signature() {
        return Err(Error::SignatureMismatch);
    }
    Ok(satisfies_unchecked(algebra, presentation))
}

pub(crate) fn satisfies_unchecked(algebra: &FiniteAlgebra, presentation: &Presentation) -> bool {
    violating_assignment(algebra, presentation).is_none()
}

/// First equation and assignment violated by the algebra, if any, in
/// declaration order then assignment order.
pub fn violating_assignment(
    algebra: &FiniteAlgebra,
    presentation: &Presentation,
) -> Option<(usize, Vec<usize>)> {
    let m = algebra.carrier_size();
    for (idx, eq) in presentation.equations().iter().enumerate() {
        for x in assignments(m, eq.context().size()) {
            let lhs = algebra.eval_unchecked(eq.lhs(), &x);
            let rhs = algebra.eval_unchecked(eq.rhs(), &x);
            if lhs != rhs {
                return Some((idx, x));
            }
        }
    }
    None
}

/// All models of the presentation with carrier size up to `max_size`
/// (including the empty carrier when the signature has no constants),
/// in enumeration order.
pub fn enumerate_models(
    presentation: &Presentation,
    max_size: usize,
) -> Result<Vec<FiniteAlgebra>> {
    enumerate_models_capped(presentation, max_size, usize::MAX)
}

/// Like [`enumerate_models`] with a cap on the number of candidate
/// algebras scanned; exceeding it is a budget error.
pub fn enumerate_models_capped(
    presentation: &Presentation,
    max_size: usize,
    scan_cap: usize,
) -> Result<Vec<FiniteAlgebra>> {
    let sig = presentation.signature();
    let mut scanned: u128 = 0;
    let mut models = Vec::new();
    for m in 0..=max_size {
        if m == 0 && sig.has_constants() {
            continue;
        }
        scanned = scanned.saturating_add(algebra_count(sig, m));
        if scanned > scan_cap as u128 {
            return Err(Error::BudgetExceeded {
                what: format!("model search at carrier size {m}"),
                limit: scan_cap,
            });
        }
        for a in enumerate_algebras(sig, m)? {
            if satisfies_unchecked(&a, presentation) {
                models.push(a);
            }
        }
    }
    Ok(models)
}

/// Count of models per carrier size `0..=max_size`; sizes that are not
/// legal (empty carrier with constants) report zero.
pub fn model_counts(presentation: &Presentation, max_size: usize) -> Result<Vec<usize>> {
    let sig = presentation.signature();
    let mut counts = Vec::with_capacity(max_size + 1);
    for m in 0..=max_size {
        if m == 0 && sig.has_constants() {
            counts.push(0);
            continue;
        }
        let mut n = 0usize;
        for a in enumerate_algebras(sig, m)? {
            if satisfies_unchecked(&a, presentation) {
                n += 1;
            }
        }
        counts.push(n);
    }
    Ok(counts)
}

/// Resource limits for [`decide_equal`]. A zero field disables the
/// corresponding engine entirely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityBudget {
    /// Rule-pair overlap computations allowed during completion.
    pub completion_rounds: usize,
    /// Depth of the terms substituted into equations for the closure
    /// engine's ground instances.
    pub inst_depth: usize,
    /// Largest carrier size tried by model search.
    pub model_size: usize,
    /// Ground equation instances seeded into the closure.
    pub max_instances: usize,
    /// Interned node cap for the closure universe.
    pub max_closure_nodes: usize,
    /// Candidate algebras scanned by model search.
    pub max_models: usize,
}

impl Default for EqualityBudget {
    fn default() -> Self {
        EqualityBudget {
            completion_rounds: 200,
            inst_depth: 2,
            model_size: 3,
            max_instances: 20_000,
            max_closure_nodes: 200_000,
            max_models: 200_000,
        }
    }
}

impl EqualityBudget {
    /// All engines disabled; every non-trivial query answers `Unknown`.
    pub fn zero() -> Self {
        EqualityBudget {
            completion_rounds: 0,
            inst_depth: 0,
            model_size: 0,
            max_instances: 0,
            max_closure_nodes: 0,
            max_models: 0,
        }
    }
}

/// Evidence that two terms are equal modulo the equations.
#[derive(Debug, Clone)]
pub enum EqualEvidence {
    /// The terms are syntactically identical.
    Syntactic,
    /// A convergent rewrite system normalized both to the same term.
    Rewrite { rules: Vec<Rule>, normal_form: Term },
    /// Congruence closure over the recorded ground instances merged them.
    Closure {
        instances: Vec<(usize, Vec<Term>)>,
        truncated: bool,
    },
}

/// Evidence that two terms are distinct modulo the equations.
#[derive(Debug, Clone)]
pub enum DistinctEvidence {
    /// A finite model of the presentation separates the sides.
    Model {
        algebra: FiniteAlgebra,
        assignment: Vec<usize>,
        lhs_value: usize,
        rhs_value: usize,
    },
    /// A convergent rewrite system produced different normal forms.
    NormalForms {
        rules: Vec<Rule>,
        lhs_normal: Term,
        rhs_normal: Term,
    },
}

/// Why no engine reached a verdict.
#[derive(Debug, Clone, Default)]
pub struct BudgetReport {
    pub notes: Vec<String>,
}

/// The three-valued answer of [`decide_equal`], with replayable evidence.
#[derive(Debug, Clone)]
pub enum Verdict {
    Equal(EqualEvidence),
    Distinct(DistinctEvidence),
    Unknown(BudgetReport),
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal(_))
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, Verdict::Distinct(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }
}

/// Decides `t ≐ u` in context `ctx` modulo the presentation's equations,
/// within the budget. `Equal` and `Distinct` are sound; `Unknown` only
/// reports exhaustion.
pub fn decide_equal(
    presentation: &Presentation,
    t: &Term,
    u: &Term,
    ctx: Context,
    budget: &EqualityBudget,
) -> Result<Verdict> {
    let sig = presentation.signature();
    t.validate(sig, ctx)?;
    u.validate(sig, ctx)?;

    if t == u {
        return Ok(Verdict::Equal(EqualEvidence::Syntactic));
    }

    let mut report = BudgetReport::default();

    // engine 1: completion — exact when the system converges
    if budget.completion_rounds > 0 {
        match complete(sig, &presentation.equation_pairs(), budget.completion_rounds) {
            CompletionResult::Convergent(system) => {
                let nt = system.normalize(t);
                let nu = system.normalize(u);
                if nt == nu {
                    return Ok(Verdict::Equal(EqualEvidence::Rewrite {
                        rules: system.rules().to_vec(),
                        normal_form: nt,
                    }));
                }
                // distinct for sure; prefer a finite-model witness when
                // one exists within budget, else certify by normal forms
                if budget.model_size > 0 {
                    if let (Some(found), _) = search_separating_model(
                        presentation,
                        t,
                        u,
                        ctx,
                        budget.model_size,
                        budget.max_models,
                    ) {
                        return Ok(Verdict::Distinct(found));
                    }
                }
                return Ok(Verdict::Distinct(DistinctEvidence::NormalForms {
                    rules: system.rules().to_vec(),
                    lhs_normal: nt,
                    rhs_normal: nu,
                }));
            }
            CompletionResult::GaveUp { reason, .. } => {
                report.notes.push(format!("completion: {reason}"));
            }
        }
    } else {
        report.notes.push("completion: disabled (0 rounds)".into());
    }

    // engine 2: congruence closure over instantiated equations
    if budget.inst_depth > 0 {
        let instances = build_instances(presentation, t, u, ctx, budget);
        let outcome = closure::close_over_instances(
            &presentation.equation_pairs(),
            &instances.0,
            t,
            u,
            budget.max_closure_nodes,
        );
        if outcome.equal {
            return Ok(Verdict::Equal(EqualEvidence::Closure {
                instances: outcome.instances,
                truncated: outcome.truncated || instances.1,
            }));
        }
        report.notes.push(format!(
            "closure: no merge over {} instances{}",
            outcome.instances.len(),
            if outcome.truncated || instances.1 {
                " (truncated)"
            } else {
                ""
            }
        ));
    } else {
        report.notes.push("closure: disabled (depth 0)".into());
    }

    // engine 3: model search — a separating model settles Distinct
    if budget.model_size > 0 {
        let (found, truncated) = search_separating_model(
            presentation,
            t,
            u,
            ctx,
            budget.model_size,
            budget.max_models,
        );
        if let Some(evidence) = found {
            return Ok(Verdict::Distinct(evidence));
        }
        report.notes.push(format!(
            "model search: no separating model up to carrier {}{}",
            budget.model_size,
            if truncated { " (truncated)" } else { "" }
        ));
    } else {
        report.notes.push("model search: disabled (size 0)".into());
    }

    Ok(Verdict::Unknown(report))
}

/// The closure's ground instance set: equations instantiated with every
/// tuple of universe terms, round-robin across equations by env rank so a
/// tight cap still spreads over all equations. The universe is the
/// enumerated terms of the budgeted depth plus all subterms of the query.
fn build_instances(
    presentation: &Presentation,
    t: &Term,
    u: &Term,
    ctx: Context,
    budget: &EqualityBudget,
) -> (Vec<(usize, Vec<Term>)>, bool) {
    let sig = presentation.signature();
    let mut universe = enumerate_terms(sig, ctx, budget.inst_depth);
    let mut seen: std::collections::HashSet<Term> = universe.iter().cloned().collect();
    for sub in t.subterms().into_iter().chain(u.subterms()) {
        if seen.insert(sub.clone()) {
            universe.push(sub.clone());
        }
    }
    let base = universe.len();

    let mut out = Vec::new();
    let mut truncated = false;
    let env_counts: Vec<u128> = presentation
        .equations()
        .iter()
        .map(|e| (base as u128).pow(e.context().size() as u32))
        .collect();
    let max_rank = env_counts.iter().copied().max().unwrap_or(0);

    'ranks: for rank in 0..max_rank {
        for (eq_idx, eq) in presentation.equations().iter().enumerate() {
            if rank >= env_counts[eq_idx] {
                continue;
            }
            if out.len() >= budget.max_instances {
                truncated = true;
                break 'ranks;
            }
            let n = eq.context().size();
            let tuple = index_tuple(rank as usize, n, base);
            let env: Vec<Term> = tuple.iter().map(|&i| universe[i].clone()).collect();
            out.push((eq_idx, env));
        }
    }
    (out, truncated)
}

/// First model of the presentation (by carrier size, then enumeration
/// order) together with the first assignment on which the two terms
/// evaluate differently.
fn search_separating_model(
    presentation: &Presentation,
    t: &Term,
    u: &Term,
    ctx: Context,
    max_size: usize,
    max_models: usize,
) -> (Option<DistinctEvidence>, bool) {
    let sig = presentation.signature();
    let mut scanned = 0usize;
    for m in 1..=max_size {
        let Ok(iter) = enumerate_algebras(sig, m) else {
            continue;
        };
        for algebra in iter {
            scanned += 1;
            if scanned > max_models {
                return (None, true);
            }
            if !satisfies_unchecked(&algebra, presentation) {
                continue;
            }
            for x in assignments(m, ctx.size()) {
                let lv = algebra.eval_unchecked(t, &x);
                let rv = algebra.eval_unchecked(u, &x);
                if lv != rv {
                    return (
                        Some(DistinctEvidence::Model {
                            algebra,
                            assignment: x,
                            lhs_value: lv,
                            rhs_value: rv,
                        }),
                        false,
                    );
                }
            }
        }
    }
    (None, false)
}

/// Result of asking for a canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalFormOutcome {
    Normal(Term),
    /// Completion did not produce a convergent system.
    Unavailable { reason: String },
}

/// Canonical representative of `t` modulo the equations, when bounded
/// completion yields a convergent system; idempotent by construction.
pub fn normal_form(
    presentation: &Presentation,
    t: &Term,
    ctx: Context,
    completion_rounds: usize,
) -> Result<NormalFormOutcome> {
    t.validate(presentation.signature(), ctx)?;
    match complete(
        presentation.signature(),
        &presentation.equation_pairs(),
        completion_rounds,
    ) {
        CompletionResult::Convergent(system) => Ok(NormalFormOutcome::Normal(system.normalize(t))),
        CompletionResult::GaveUp { reason, .. } => {
            Ok(NormalFormOutcome::Unavailable { reason })
        }
    }
}

/// Re-derives a verdict from its stored evidence. Returns `true` iff the
/// evidence still reproduces the claimed verdict against `presentation`.
pub fn replay(
    presentation: &Presentation,
    t: &Term,
    u: &Term,
    verdict: &Verdict,
) -> Result<bool> {
    match verdict {
        Verdict::Equal(EqualEvidence::Syntactic) => Ok(t == u),
        Verdict::Equal(EqualEvidence::Rewrite { rules, normal_form }) => {
            let system = RewriteSystem::new(presentation.signature().clone(), rules.clone());
            Ok(system.normalize(t) == *normal_form && system.normalize(u) == *normal_form)
        }
        Verdict::Equal(EqualEvidence::Closure { instances, .. }) => {
            let outcome = closure::close_over_instances(
                &presentation.equation_pairs(),
                instances,
                t,
                u,
                usize::MAX,
            );
            Ok(outcome.equal)
        }
        Verdict::Distinct(DistinctEvidence::Model {
            algebra,
            assignment,
            lhs_value,
            rhs_value,
        }) => {
            let model_ok = satisfies(algebra, presentation)?;
            let lv = algebra.eval(t, assignment)?;
            let rv = algebra.eval(u, assignment)?;
            Ok(model_ok && lv != rv && lv == *lhs_value && rv == *rhs_value)
        }
        Verdict::Distinct(DistinctEvidence::NormalForms {
            rules,
            lhs_normal,
            rhs_normal,
        }) => {
            let system = RewriteSystem::new(presentation.signature().clone(), rules.clone());
            Ok(system.normalize(t) == *lhs_normal
                && system.normalize(u) == *rhs_normal
                && lhs_normal != rhs_normal)
        }
        Verdict::Unknown(_) => Ok(true),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::Signature;

    fn monoid() -> Presentation {
        let sig = Signature::from_ops(&[("e", 0), ("mul", 2)]).unwrap();
        let mul = |a: Term, b: Term| Term::App(sig.op("mul", 2).unwrap().clone(), vec![a, b]);
        let e = Term::App(sig.op("e", 0).unwrap().clone(), vec![]);
        let eqs = vec![
            Equation::new(
                Context::new(3),
                mul(mul(Term::Var(0), Term::Var(1)), Term::Var(2)),
                mul(Term::Var(0), mul(Term::Var(1), Term::Var(2))),
                Some("assoc"),
            ),
            Equation::new(
                Context::new(1),
                mul(e.clone(), Term::Var(0)),
                Term::Var(0),
                Some("unitl"),
            ),
            Equation::new(Context::new(1), mul(Term::Var(0), e), Term::Var(0), Some("unitr")),
        ];
        Presentation::new(sig, eqs).unwrap()
    }

    fn mul_term(p: &Presentation, a: Term, b: Term) -> Term {
        Term::App(p.signature().op("mul", 2).unwrap().clone(), vec![a, b])
    }

    #[test]
    fn monoid_model_counts() {
        let p = monoid();
        assert_eq!(model_counts(&p, 2).unwrap(), vec![0, 1, 4]);
    }

    #[test]
    fn commutative_magma_count() {
        let sig = Signature::from_ops(&[("mul", 2)]).unwrap();
        let mul = |a: Term, b: Term| Term::App(sig.op("mul", 2).unwrap().clone(), vec![a, b]);
        let p = Presentation::new(
            sig.clone(),
            vec![Equation::new(
                Context::new(2),
                mul(Term::Var(0), Term::Var(1)),
                mul(Term::Var(1), Term::Var(0)),
                Some("comm"),
            )],
        )
        .unwrap();
        let models = enumerate_models(&p, 2).unwrap();
        let size2 = models.iter().filter(|a| a.carrier_size() == 2).count();
        assert_eq!(size2, 8); // symmetric 2x2 tables
    }

    #[test]
    fn satisfies_is_vacuous_on_empty_equations() {
        let sig = Signature::from_ops(&[("f", 1)]).unwrap();
        let p = Presentation::new(sig.clone(), vec![]).unwrap();
        let a = crate::algebra::FiniteAlgebra::new(sig, 2, vec![vec![1, 0]]).unwrap();
        assert!(satisfies(&a, &p).unwrap());
    }

    #[test]
    fn fixed_point_free_table_excluded() {
        // equation x0 = f(x0) excludes tables without fixpoints
        let sig = Signature::from_ops(&[("f", 1)]).unwrap();
        let f = |a: Term| Term::App(sig.op("f", 1).unwrap().clone(), vec![a]);
        let p = Presentation::new(
            sig.clone(),
            vec![Equation::new(Context::new(1), Term::Var(0), f(Term::Var(0)), Some("fix"))],
        )
        .unwrap();
        let models = enumerate_models(&p, 2).unwrap();
        // only the identity table on each carrier satisfies x = f(x)
        assert!(models
            .iter()
            .all(|a| a.tables()[0].iter().enumerate().all(|(i, &v)| i == v)));
    }

    #[test]
    fn axiom_instance_is_equal() {
        let p = monoid();
        let t = mul_term(
            &p,
            Term::Var(0),
            mul_term(&p, Term::Var(1), Term::Var(2)),
        );
        let u = mul_term(
            &p,
            mul_term(&p, Term::Var(0), Term::Var(1)),
            Term::Var(2),
        );
        let v = decide_equal(&p, &t, &u, Context::new(3), &EqualityBudget::default()).unwrap();
        assert!(v.is_equal());
        assert!(replay(&p, &t, &u, &v).unwrap());
    }

    #[test]
    fn commutativity_distinct_with_size_3_witness() {
        let p = monoid();
        let t = mul_term(&p, Term::Var(0), Term::Var(1));
        let u = mul_term(&p, Term::Var(1), Term::Var(0));
        let v = decide_equal(&p, &t, &u, Context::new(2), &EqualityBudget::default()).unwrap();
        match &v {
            Verdict::Distinct(DistinctEvidence::Model { algebra, .. }) => {
                assert_eq!(algebra.carrier_size(), 3);
                assert!(satisfies(algebra, &p).unwrap());
            }
            other => panic!("expected model-separated distinct, got {other:?}"),
        }
        assert!(replay(&p, &t, &u, &v).unwrap());
    }

    #[test]
    fn zero_budget_is_unknown() {
        let p = monoid();
        let t = mul_term(&p, Term::Var(0), Term::Var(1));
        let u = mul_term(&p, Term::Var(1), Term::Var(0));
        let v = decide_equal(&p, &t, &u, Context::new(2), &EqualityBudget::zero()).unwrap();
        assert!(v.is_unknown());
    }

    #[test]
    fn normal_form_of_variable_is_itself() {
        let p = monoid();
        match normal_form(&p, &Term::Var(0), Context::new(1), 200).unwrap() {
            NormalFormOutcome::Normal(t) => assert_eq!(t, Term::Var(0)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn normal_form_idempotent() {
        let p = monoid();
        let e = Term::App(p.signature().op("e", 0).unwrap().clone(), vec![]);
        let t = mul_term(&p, e.clone(), mul_term(&p, Term::Var(0), e));
        let NormalFormOutcome::Normal(nf) =
            normal_form(&p, &t, Context::new(1), 200).unwrap()
        else {
            panic!("monoid completes");
        };
        assert_eq!(nf, Term::Var(0));
        let NormalFormOutcome::Normal(nf2) =
            normal_form(&p, &nf, Context::new(1), 200).unwrap()
        else {
            panic!("monoid completes");
        };
        assert_eq!(nf, nf2);
    }
}
