//! Colimits of presented theories, computed at the level of presentations
//! and verified at the level of finite models.
//!
//! The coproduct is disjoint union of signatures and equations, the
//! coequalizer extends the equation system by one formal equation per
//! symbol of the equation signature, and the pushout is the coequalizer of
//! the two composites into the coproduct. [`verify_algebraic`] checks the
//! defining property on finite carriers: models of the claimed colimit
//! correspond bijectively to compatible families of models of the diagram.
//!
//! [`canonical_presentation`] rebuilds a presentation from its own terms:
//! every term of bounded depth becomes an operation symbol, a collapse
//! equation identifies its formal application with the term it denotes,
//! and the original equations are transported. Model classes are preserved,
//! which [`canonical_models`] makes checkable by exhaustive enumeration.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;

use crate::algebra::{enumerate_algebras, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::presentation::{
    decide_equal, satisfies_unchecked, Equation, EqualityBudget, Presentation, Verdict,
};
use crate::signature::{
    enumerate_terms, Context, OpSymbol, Signature, SignatureMorphism, Term,
};

/// Reinterprets a model along a signature morphism: each source symbol's
/// table is the evaluation table of its assigned term.
pub fn transport(algebra: &FiniteAlgebra, morphism: &SignatureMorphism) -> Result<FiniteAlgebra> {
    if algebra.signature() != morphism.target() {
        return Err(Error::SignatureMismatch);
    }
    let tables = morphism
        .source()
        .ops()
        .iter()
        .map(|op| {
            let image = morphism.assignment(op).expect("morphism is total");
            algebra.term_table(image, op.arity())
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteAlgebra::new(morphism.source().clone(), algebra.carrier_size(), tables)
}

/// An arrow of presented theories: a signature morphism that sends every
/// source equation to a provably equal pair in the target. Construction
/// fails loudly when preservation is refuted or undecided.
#[derive(Debug, Clone)]
pub struct PresentationMorphism {
    source: Presentation,
    target: Presentation,
    morphism: SignatureMorphism,
}

impl PresentationMorphism {
    pub fn new(
        source: Presentation,
        target: Presentation,
        morphism: SignatureMorphism,
        budget: &EqualityBudget,
    ) -> Result<Self> {
        if morphism.source() != source.signature() || morphism.target() != target.signature() {
            return Err(Error::SignatureMismatch);
        }
        for (idx, eq) in source.equations().iter().enumerate() {
            let label = eq
                .label()
                .map(str::to_owned)
                .unwrap_or_else(|| format!("#{idx}"));
            let lhs = morphism.extend(eq.lhs())?;
            let rhs = morphism.extend(eq.rhs())?;
            match decide_equal(&target, &lhs, &rhs, eq.context(), budget)? {
                Verdict::Equal(_) => {}
                Verdict::Distinct(_) => {
                    return Err(Error::EquationNotPreserved {
                        label,
                        detail: format!("{lhs} and {rhs} are distinct in the target"),
                    });
                }
                Verdict::Unknown(report) => {
                    return Err(Error::EquationPreservationUnknown {
                        label,
                        detail: report.notes.join("; "),
                    });
                }
            }
        }
        Ok(PresentationMorphism {
            source,
            target,
            morphism,
        })
    }

    pub fn identity(p: &Presentation) -> Self {
        PresentationMorphism {
            source: p.clone(),
            target: p.clone(),
            morphism: SignatureMorphism::identity(p.signature()),
        }
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn morphism(&self) -> &SignatureMorphism {
        &self.morphism
    }
}

/// A coproduct presentation together with its two injections.
#[derive(Debug, Clone)]
pub struct Coproduct {
    pub presentation: Presentation,
    pub left: SignatureMorphism,
    pub right: SignatureMorphism,
}

fn rename_map(
    ops: &[OpSymbol],
    clashes: &HashSet<String>,
    prefix: &str,
    taken: &mut HashSet<String>,
) -> Vec<(String, String)> {
    let mut renames = Vec::new();
    for op in ops {
        let base = op.name().to_string();
        if !clashes.contains(&base) || renames.iter().any(|(b, _)| *b == base) {
            continue;
        }
        let mut fresh = format!("{prefix}{base}");
        while taken.contains(&fresh) {
            fresh = format!("{prefix}{fresh}");
        }
        taken.insert(fresh.clone());
        renames.push((base, fresh));
    }
    renames
}

fn renamed(name: &str, renames: &[(String, String)]) -> String {
    renames
        .iter()
        .find(|(base, _)| base == name)
        .map(|(_, fresh)| fresh.clone())
        .unwrap_or_else(|| name.to_string())
}

/// Disjoint union of two presentations. Symbol names shared by both sides
/// get stable `l_`/`r_` prefixes; equation labels are always prefixed.
/// Models of the result are exactly pairs of models of the parts sharing a
/// carrier, via [`split_model`] and [`merge_models`].
pub fn coproduct(p1: &Presentation, p2: &Presentation) -> Result<Coproduct> {
    let names1: HashSet<String> = p1.signature().ops().iter().map(|o| o.name().into()).collect();
    let names2: HashSet<String> = p2.signature().ops().iter().map(|o| o.name().into()).collect();
    let clashes: HashSet<String> = names1.intersection(&names2).cloned().collect();

    let mut taken: HashSet<String> = names1.union(&names2).cloned().collect();
    let left_renames = rename_map(p1.signature().ops(), &clashes, "l_", &mut taken);
    let right_renames = rename_map(p2.signature().ops(), &clashes, "r_", &mut taken);

    let mut sig = Signature::new();
    for op in p1.signature().ops() {
        sig.add_op(renamed(op.name(), &left_renames), op.arity())?;
    }
    for op in p2.signature().ops() {
        sig.add_op(renamed(op.name(), &right_renames), op.arity())?;
    }

    let inject = |side: &Presentation, renames: &[(String, String)]| -> Result<SignatureMorphism> {
        let assignments = side
            .signature()
            .ops()
            .iter()
            .map(|op| {
                let target_op = sig
                    .op(&renamed(op.name(), renames), op.arity())
                    .expect("renamed symbol present")
                    .clone();
                Term::app(target_op, (0..op.arity()).map(Term::Var).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        SignatureMorphism::new(side.signature().clone(), sig.clone(), assignments)
    };
    let left = inject(p1, &left_renames)?;
    let right = inject(p2, &right_renames)?;

    let mut equations = Vec::new();
    for (side, morphism, tag) in [(p1, &left, "l_"), (p2, &right, "r_")] {
        for (idx, eq) in side.equations().iter().enumerate() {
            let label = format!(
                "{tag}{}",
                eq.label().map(str::to_owned).unwrap_or_else(|| idx.to_string())
            );
            equations.push(Equation::new(
                eq.context(),
                morphism.extend(eq.lhs())?,
                morphism.extend(eq.rhs())?,
                Some(label),
            ));
        }
    }

    Ok(Coproduct {
        presentation: Presentation::new(sig, equations)?,
        left,
        right,
    })
}

/// Restricts a coproduct model to its two components.
pub fn split_model(
    cop: &Coproduct,
    model: &FiniteAlgebra,
) -> Result<(FiniteAlgebra, FiniteAlgebra)> {
    Ok((transport(model, &cop.left)?, transport(model, &cop.right)?))
}

/// Rebuilds a coproduct model from models of the parts on one carrier.
pub fn merge_models(
    cop: &Coproduct,
    left: &FiniteAlgebra,
    right: &FiniteAlgebra,
) -> Result<FiniteAlgebra> {
    if left.signature() != cop.left.source() || right.signature() != cop.right.source() {
        return Err(Error::SignatureMismatch);
    }
    if left.carrier_size() != right.carrier_size() {
        return Err(Error::AssignmentLength {
            expected: left.carrier_size(),
            found: right.carrier_size(),
        });
    }
    let tables = left
        .tables()
        .iter()
        .chain(right.tables())
        .cloned()
        .collect();
    FiniteAlgebra::new(
        cop.presentation.signature().clone(),
        left.carrier_size(),
        tables,
    )
}

/// Quotient by a parallel pair of signature morphisms `t, u : Γ ⇉ Σ`:
/// the presentation gains one equation `t(γ) ≐ u(γ)` per symbol of `Γ`.
/// Models of the result are exactly the models of `p` on which the two
/// induced interpretations agree.
pub fn coequalizer(
    gamma: &Signature,
    t: &SignatureMorphism,
    u: &SignatureMorphism,
    p: &Presentation,
) -> Result<Presentation> {
    if t.source() != gamma || u.source() != gamma {
        return Err(Error::ParallelSourceMismatch);
    }
    if t.target() != p.signature() || u.target() != p.signature() {
        return Err(Error::SignatureMismatch);
    }
    let mut equations = p.equations().to_vec();
    for op in gamma.ops() {
        equations.push(Equation::new(
            Context::new(op.arity()),
            t.assignment(op).expect("morphism is total").clone(),
            u.assignment(op).expect("morphism is total").clone(),
            Some(format!("coeq_{}", op.name())),
        ));
    }
    Presentation::new(p.signature().clone(), equations)
}

/// Pushout of a span: the coequalizer of the two composites into the
/// coproduct of the legs.
pub fn pushout(
    apex: &Presentation,
    left: &PresentationMorphism,
    right: &PresentationMorphism,
) -> Result<Pushout> {
    if left.source().signature() != apex.signature()
        || right.source().signature() != apex.signature()
    {
        return Err(Error::SignatureMismatch);
    }
    let cop = coproduct(left.target(), right.target())?;
    let t = left.morphism().then(&cop.left)?;
    let u = right.morphism().then(&cop.right)?;
    let presentation = coequalizer(apex.signature(), &t, &u, &cop.presentation)?;
    Ok(Pushout {
        presentation,
        coproduct: cop,
    })
}

/// A pushout presentation together with the underlying coproduct.
#[derive(Debug, Clone)]
pub struct Pushout {
    pub presentation: Presentation,
    pub coproduct: Coproduct,
}

/// A finite diagram of presentations with equation-preserving arrows.
#[derive(Debug, Clone)]
pub struct MonadDiagram {
    objects: Vec<Presentation>,
    arrows: Vec<DiagramArrow>,
}

#[derive(Debug, Clone)]
pub struct DiagramArrow {
    pub source: usize,
    pub target: usize,
    pub morphism: SignatureMorphism,
}

impl MonadDiagram {
    /// Arrow legality (equation preservation) is checked at construction
    /// with the supplied budget; an undecided check refuses construction.
    pub fn new(
        objects: Vec<Presentation>,
        arrows: Vec<(usize, usize, SignatureMorphism)>,
        budget: &EqualityBudget,
    ) -> Result<Self> {
        let mut checked = Vec::new();
        for (source, target, morphism) in arrows {
            let src = objects.get(source).ok_or(Error::SignatureMismatch)?;
            let tgt = objects.get(target).ok_or(Error::SignatureMismatch)?;
            PresentationMorphism::new(src.clone(), tgt.clone(), morphism.clone(), budget)?;
            checked.push(DiagramArrow {
                source,
                target,
                morphism,
            });
        }
        Ok(MonadDiagram {
            objects,
            arrows: checked,
        })
    }

    pub fn discrete(objects: Vec<Presentation>) -> Self {
        MonadDiagram {
            objects,
            arrows: Vec::new(),
        }
    }

    pub fn objects(&self) -> &[Presentation] {
        &self.objects
    }

    pub fn arrows(&self) -> &[DiagramArrow] {
        &self.arrows
    }
}

/// One model of each diagram object on a shared carrier, compatible with
/// every arrow: transporting the target model along the arrow recovers the
/// source model, table by table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibleFamily {
    pub carrier_size: usize,
    pub algebras: Vec<FiniteAlgebra>,
}

/// Checks membership of a family in the limit of model categories.
pub fn is_compatible_family(diagram: &MonadDiagram, family: &[FiniteAlgebra]) -> Result<bool> {
    if family.len() != diagram.objects().len() {
        return Err(Error::AssignmentLength {
            expected: diagram.objects().len(),
            found: family.len(),
        });
    }
    let carrier = family.first().map(|a| a.carrier_size()).unwrap_or(0);
    for (algebra, object) in family.iter().zip(diagram.objects()) {
        if algebra.signature() != object.signature() {
            return Err(Error::SignatureMismatch);
        }
        if algebra.carrier_size() != carrier {
            return Ok(false);
        }
        if !satisfies_unchecked(algebra, object) {
            return Ok(false);
        }
    }
    for arrow in diagram.arrows() {
        let transported = transport(&family[arrow.target], &arrow.morphism)?;
        if transported != family[arrow.source] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Models of one presentation on an exact carrier size.
pub fn models_of_size(p: &Presentation, m: usize) -> Result<Vec<FiniteAlgebra>> {
    if m == 0 && p.signature().has_constants() {
        return Ok(Vec::new());
    }
    Ok(enumerate_algebras(p.signature(), m)?
        .filter(|a| satisfies_unchecked(a, p))
        .collect())
}

/// All compatible families on an exact carrier size, in the lexicographic
/// order of per-object model indices.
pub fn enumerate_families(diagram: &MonadDiagram, m: usize) -> Result<Vec<CompatibleFamily>> {
    let per_object: Vec<Vec<FiniteAlgebra>> = diagram
        .objects()
        .iter()
        .map(|p| models_of_size(p, m))
        .collect::<Result<Vec<_>>>()?;
    if per_object.iter().any(Vec::is_empty) && !per_object.is_empty() {
        // a cartesian product with an empty factor is empty
        if per_object.iter().any(|v| v.is_empty()) {
            return Ok(Vec::new());
        }
    }
    let mut out = Vec::new();
    for combo in per_object
        .iter()
        .map(|models| 0..models.len())
        .multi_cartesian_product()
    {
        let family: Vec<FiniteAlgebra> = combo
            .iter()
            .zip(&per_object)
            .map(|(&i, models)| models[i].clone())
            .collect();
        if is_compatible_family(diagram, &family)? {
            out.push(CompatibleFamily {
                carrier_size: m,
                algebras: family,
            });
        }
    }
    Ok(out)
}

/// Status of one cocone-arrow sanity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrowStatus {
    Ok,
    Failed(String),
    Inconclusive(String),
}

#[derive(Debug, Clone)]
pub struct ArrowCheck {
    pub description: String,
    pub status: ArrowStatus,
}

#[derive(Debug, Clone)]
pub struct SizeReport {
    pub size: usize,
    pub colimit_models: usize,
    pub families: usize,
    /// model index -> family index under transport along the cocone
    pub pairing: Vec<(usize, usize)>,
    pub unmatched_models: Vec<usize>,
    pub uncovered_families: Vec<usize>,
}

impl SizeReport {
    pub fn bijective(&self) -> bool {
        self.unmatched_models.is_empty()
            && self.uncovered_families.is_empty()
            && self.colimit_models == self.families
    }
}

#[derive(Debug, Clone)]
pub struct ColimitReport {
    pub arrow_checks: Vec<ArrowCheck>,
    pub sizes: Vec<SizeReport>,
}

impl ColimitReport {
    /// All arrow checks passed decisively.
    pub fn conclusive(&self) -> bool {
        self.arrow_checks
            .iter()
            .all(|c| c.status == ArrowStatus::Ok)
    }

    pub fn inconclusive(&self) -> bool {
        self.arrow_checks
            .iter()
            .any(|c| matches!(c.status, ArrowStatus::Inconclusive(_)))
    }

    /// Conclusive arrows and a model/family bijection at every size.
    pub fn verified(&self) -> bool {
        self.conclusive() && self.sizes.iter().all(SizeReport::bijective)
    }
}

impl fmt::Display for ColimitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.arrow_checks {
            match &check.status {
                ArrowStatus::Ok => writeln!(f, "arrow {}: ok", check.description)?,
                ArrowStatus::Failed(d) => {
                    writeln!(f, "arrow {}: FAILED ({d})", check.description)?
                }
                ArrowStatus::Inconclusive(d) => {
                    writeln!(f, "arrow {}: inconclusive ({d})", check.description)?
                }
            }
        }
        for s in &self.sizes {
            writeln!(
                f,
                "size {}: colimit models {}, compatible families {}, {}",
                s.size,
                s.colimit_models,
                s.families,
                if s.bijective() { "matched" } else { "MISMATCH" }
            )?;
        }
        Ok(())
    }
}

/// Verifies that `claimed` is an algebraic colimit of the diagram on every
/// carrier up to `max_size`: the cocone arrows must commute with the
/// diagram (checked equationally, inconclusive verdicts are reported, not
/// swallowed), and transport along the cocone must biject models of
/// `claimed` with compatible families.
pub fn verify_algebraic(
    diagram: &MonadDiagram,
    claimed: &Presentation,
    cocone: &[SignatureMorphism],
    max_size: usize,
    budget: &EqualityBudget,
) -> Result<ColimitReport> {
    if cocone.len() != diagram.objects().len() {
        return Err(Error::MorphismLength {
            expected: diagram.objects().len(),
            found: cocone.len(),
        });
    }
    let mut arrow_checks = Vec::new();
    for (i, (object, arrow)) in diagram.objects().iter().zip(cocone).enumerate() {
        if arrow.source() != object.signature() || arrow.target() != claimed.signature() {
            return Err(Error::SignatureMismatch);
        }
        // cocone arrows must preserve each object's equations
        for (idx, eq) in object.equations().iter().enumerate() {
            let label = eq.label().map(str::to_owned).unwrap_or_else(|| idx.to_string());
            let description = format!("cocone[{i}] preserves {label}");
            let lhs = arrow.extend(eq.lhs())?;
            let rhs = arrow.extend(eq.rhs())?;
            let status = match decide_equal(claimed, &lhs, &rhs, eq.context(), budget)? {
                Verdict::Equal(_) => ArrowStatus::Ok,
                Verdict::Distinct(_) => ArrowStatus::Failed(format!("{lhs} ≠ {rhs}")),
                Verdict::Unknown(r) => ArrowStatus::Inconclusive(r.notes.join("; ")),
            };
            arrow_checks.push(ArrowCheck {
                description,
                status,
            });
        }
    }
    // cocone must commute with the diagram arrows
    for (k, arrow) in diagram.arrows().iter().enumerate() {
        let composite = arrow.morphism.then(&cocone[arrow.target])?;
        let direct = &cocone[arrow.source];
        for op in arrow.morphism.source().ops() {
            let description = format!("cocone commutes with arrow {k} at {op}");
            let lhs = direct.assignment(op).expect("total").clone();
            let rhs = composite.assignment(op).expect("total").clone();
            let status = match decide_equal(
                claimed,
                &lhs,
                &rhs,
                Context::new(op.arity()),
                budget,
            )? {
                Verdict::Equal(_) => ArrowStatus::Ok,
                Verdict::Distinct(_) => ArrowStatus::Failed(format!("{lhs} ≠ {rhs}")),
                Verdict::Unknown(r) => ArrowStatus::Inconclusive(r.notes.join("; ")),
            };
            arrow_checks.push(ArrowCheck {
                description,
                status,
            });
        }
    }

    let all_constants_free = !claimed.signature().has_constants()
        && diagram
            .objects()
            .iter()
            .all(|p| !p.signature().has_constants());
    let mut sizes = Vec::new();
    for m in 0..=max_size {
        if m == 0 && !all_constants_free {
            continue;
        }
        let models = models_of_size(claimed, m)?;
        let families = enumerate_families(diagram, m)?;
        let mut pairing = Vec::new();
        let mut unmatched_models = Vec::new();
        let mut covered = vec![false; families.len()];
        for (mi, model) in models.iter().enumerate() {
            let transported: Vec<FiniteAlgebra> = cocone
                .iter()
                .map(|arrow| transport(model, arrow))
                .collect::<Result<Vec<_>>>()?;
            match families.iter().position(|f| f.algebras == transported) {
                Some(fi) => {
                    pairing.push((mi, fi));
                    covered[fi] = true;
                }
                None => unmatched_models.push(mi),
            }
        }
        // distinct models must transport to distinct families
        let mut seen = HashSet::new();
        for &(mi, fi) in &pairing {
            if !seen.insert(fi) {
                unmatched_models.push(mi);
            }
        }
        let uncovered_families = covered
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| i)
            .collect();
        sizes.push(SizeReport {
            size: m,
            colimit_models: models.len(),
            families: families.len(),
            pairing,
            unmatched_models,
            uncovered_families,
        });
    }

    Ok(ColimitReport {
        arrow_checks,
        sizes,
    })
}

/// A presentation rebuilt from its own bounded terms, with the map from
/// fresh symbols back to the terms they denote.
#[derive(Debug, Clone)]
pub struct CanonicalPresentation {
    pub presentation: Presentation,
    /// fresh symbol -> the original-signature term it denotes
    pub denotations: Vec<(OpSymbol, Term)>,
    /// for each original symbol, the fresh symbol denoting its identity
    /// application `ω(x0, ..., x{n-1})`
    pub generators: Vec<OpSymbol>,
    pub base: Presentation,
}

impl CanonicalPresentation {
    pub fn denotation(&self, op: &OpSymbol) -> Option<&Term> {
        self.denotations
            .iter()
            .find(|(o, _)| o == op)
            .map(|(_, t)| t)
    }

    fn generator_for(&self, op: &OpSymbol) -> Option<&OpSymbol> {
        self.base
            .signature()
            .declaration_index(op)
            .map(|i| &self.generators[i])
    }

    /// Rewrites an original-signature term over the fresh symbols, using
    /// only generator symbols.
    pub fn expand(&self, term: &Term) -> Term {
        match term {
            Term::Var(i) => Term::Var(*i),
            Term::App(op, args) => {
                let fresh = self.generator_for(op).expect("generator exists").clone();
                Term::App(fresh, args.iter().map(|a| self.expand(a)).collect())
            }
        }
    }

    /// Structural guarantee behind model preservation: every non-generator
    /// symbol has a defining equation whose right side mentions only
    /// generator symbols, so its table is forced pointwise by the
    /// generator tables.
    pub fn structurally_forced(&self) -> bool {
        let generator_set: HashSet<&OpSymbol> = self.generators.iter().collect();
        for (op, _) in &self.denotations {
            if generator_set.contains(op) {
                continue;
            }
            let mut has_def = false;
            for eq in self.presentation.equations() {
                if let Term::App(head, args) = eq.lhs() {
                    let is_formal_app = head == op
                        && args
                            .iter()
                            .enumerate()
                            .all(|(i, a)| *a == Term::Var(i));
                    if is_formal_app && rhs_uses_only(eq.rhs(), &generator_set) {
                        has_def = true;
                        break;
                    }
                }
            }
            if !has_def {
                return false;
            }
        }
        true
    }
}

fn rhs_uses_only(term: &Term, allowed: &HashSet<&OpSymbol>) -> bool {
    match term {
        Term::Var(_) => true,
        Term::App(op, args) => {
            allowed.contains(op) && args.iter().all(|a| rhs_uses_only(a, allowed))
        }
    }
}

/// The depth-truncated canonical presentation: one fresh symbol per term
/// of depth at most `depth` (variables capped at `max(1, max arity)`), a
/// collapse equation identifying each formal application with the term it
/// denotes, and the original equations transported through the generators.
///
/// `depth` must dominate the deepest original equation so the transported
/// axioms carry full strength.
pub fn canonical_presentation(p: &Presentation, depth: usize) -> Result<CanonicalPresentation> {
    let sig = p.signature();
    let required = p
        .max_equation_depth()
        .max(if sig.is_empty() { 0 } else { 1 });
    if depth < required {
        return Err(Error::DepthBelowEquations {
            required,
            given: depth,
        });
    }
    let var_span = sig.max_arity().max(1);
    let terms = enumerate_terms(sig, Context::new(var_span), depth);

    let mut fresh_sig = Signature::new();
    let mut denotations = Vec::new();
    for (idx, term) in terms.iter().enumerate() {
        let op = fresh_sig.add_op(format!("t{idx}"), term.min_context())?;
        denotations.push((op, term.clone()));
    }

    let generators = sig
        .ops()
        .iter()
        .map(|op| {
            let identity_app = Term::App(op.clone(), (0..op.arity()).map(Term::Var).collect());
            denotations
                .iter()
                .find(|(_, t)| *t == identity_app)
                .map(|(o, _)| o.clone())
                .expect("identity application enumerated at depth >= 1")
        })
        .collect::<Vec<_>>();

    let scaffold = CanonicalPresentation {
        presentation: Presentation::new(fresh_sig.clone(), Vec::new())?,
        denotations: denotations.clone(),
        generators: generators.clone(),
        base: p.clone(),
    };

    let mut equations = Vec::new();
    for (idx, (op, term)) in denotations.iter().enumerate() {
        let formal = Term::App(op.clone(), (0..op.arity()).map(Term::Var).collect());
        let expanded = scaffold.expand(term);
        if formal != expanded {
            equations.push(Equation::new(
                Context::new(op.arity()),
                formal,
                expanded,
                Some(format!("def{idx}")),
            ));
        }
    }
    for (idx, eq) in p.equations().iter().enumerate() {
        let label = eq
            .label()
            .map(str::to_owned)
            .unwrap_or_else(|| format!("ax{idx}"));
        equations.push(Equation::new(
            eq.context(),
            scaffold.expand(eq.lhs()),
            scaffold.expand(eq.rhs()),
            Some(label),
        ));
    }

    Ok(CanonicalPresentation {
        presentation: Presentation::new(fresh_sig, equations)?,
        denotations,
        generators,
        base: p.clone(),
    })
}

/// The model of the canonical presentation induced by a model of the base:
/// each fresh symbol's table is the evaluation table of its denotation.
pub fn canonical_model(
    cp: &CanonicalPresentation,
    base_model: &FiniteAlgebra,
) -> Result<FiniteAlgebra> {
    if base_model.signature() != cp.base.signature() {
        return Err(Error::SignatureMismatch);
    }
    let tables = cp
        .denotations
        .iter()
        .map(|(op, term)| base_model.term_table(term, op.arity()))
        .collect::<Result<Vec<_>>>()?;
    FiniteAlgebra::new(
        cp.presentation.signature().clone(),
        base_model.carrier_size(),
        tables,
    )
}

/// Exhaustively enumerates models of the canonical presentation on one
/// carrier size. The raw table space of the fresh signature is far too
/// large to scan, but the collapse equations force every non-generator
/// table pointwise from the generator tables (see
/// [`CanonicalPresentation::structurally_forced`]), and generator tables
/// correspond to raw base-signature structures. So scanning all base
/// structures and keeping those whose induced canonical algebra satisfies
/// the canonical presentation visits every canonical model exactly once.
pub fn canonical_models(cp: &CanonicalPresentation, m: usize) -> Result<Vec<FiniteAlgebra>> {
    if m == 0 && cp.base.signature().has_constants() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for candidate in enumerate_algebras(cp.base.signature(), m)? {
        let induced = canonical_model(cp, &candidate)?;
        if satisfies_unchecked(&induced, &cp.presentation) {
            out.push(induced);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn monoid() -> Presentation {
        catalog::get("monoid").unwrap().presentation().unwrap().clone()
    }

    #[test]
    fn coproduct_of_monoids_counts_multiply() {
        let p = monoid();
        let cop = coproduct(&p, &p).unwrap();
        assert_eq!(cop.presentation.signature().len(), 4);
        let models = models_of_size(&cop.presentation, 2).unwrap();
        assert_eq!(models.len(), 16);
    }

    #[test]
    fn coproduct_split_merge_round_trip() {
        let p = monoid();
        let cop = coproduct(&p, &p).unwrap();
        for model in models_of_size(&cop.presentation, 2).unwrap() {
            let (l, r) = split_model(&cop, &model).unwrap();
            assert!(crate::presentation::satisfies(&l, &p).unwrap());
            assert!(crate::presentation::satisfies(&r, &p).unwrap());
            let merged = merge_models(&cop, &l, &r).unwrap();
            assert_eq!(merged, model);
        }
    }

    #[test]
    fn coproduct_with_empty_presentation_is_identity_on_models() {
        let p = monoid();
        let empty = Presentation::new(Signature::new(), vec![]).unwrap();
        let cop = coproduct(&p, &empty).unwrap();
        for m in 0..=3usize {
            assert_eq!(
                models_of_size(&cop.presentation, m).unwrap().len(),
                models_of_size(&p, m).unwrap().len(),
            );
        }
    }

    #[test]
    fn coequalizer_imposes_commutativity() {
        let p = monoid();
        let sig = p.signature().clone();
        let mul = sig.op("mul", 2).unwrap().clone();
        let gamma = Signature::from_ops(&[("c", 2)]).unwrap();
        let t = SignatureMorphism::new(
            gamma.clone(),
            sig.clone(),
            vec![Term::App(mul.clone(), vec![Term::Var(0), Term::Var(1)])],
        )
        .unwrap();
        let u = SignatureMorphism::new(
            gamma.clone(),
            sig.clone(),
            vec![Term::App(mul, vec![Term::Var(1), Term::Var(0)])],
        )
        .unwrap();
        let q = coequalizer(&gamma, &t, &u, &p).unwrap();
        assert_eq!(q.equations().len(), p.equations().len() + 1);
        // all monoids of size 2 are commutative
        assert_eq!(models_of_size(&q, 2).unwrap().len(), 4);
        // coequalizer models = models of p satisfying the induced equations
        for m in 1..=3usize {
            let direct = models_of_size(&q, m).unwrap();
            let filtered: Vec<_> = models_of_size(&p, m)
                .unwrap()
                .into_iter()
                .filter(|a| {
                    let lhs = a.term_table(t.assignments().first().unwrap(), 2).unwrap();
                    let rhs = a.term_table(u.assignments().first().unwrap(), 2).unwrap();
                    lhs == rhs
                })
                .collect();
            assert_eq!(direct, filtered);
        }
    }

    #[test]
    fn empty_coequalizer_is_identity() {
        let p = monoid();
        let gamma = Signature::new();
        let t = SignatureMorphism::new(gamma.clone(), p.signature().clone(), vec![]).unwrap();
        let q = coequalizer(&gamma, &t, &t, &p).unwrap();
        assert_eq!(q.equations(), p.equations());
    }

    #[test]
    fn verify_discrete_coproduct_diagram() {
        let p = monoid();
        let cop = coproduct(&p, &p).unwrap();
        let diagram = MonadDiagram::discrete(vec![p.clone(), p.clone()]);
        let report = verify_algebraic(
            &diagram,
            &cop.presentation,
            &[cop.left.clone(), cop.right.clone()],
            2,
            &EqualityBudget::default(),
        )
        .unwrap();
        assert!(report.verified(), "{report}");
        let size2 = report.sizes.iter().find(|s| s.size == 2).unwrap();
        assert_eq!(size2.colimit_models, 16);
        assert_eq!(size2.families, 16);
    }

    #[test]
    fn verify_single_object_identity_diagram() {
        let p = monoid();
        let diagram = MonadDiagram::discrete(vec![p.clone()]);
        let report = verify_algebraic(
            &diagram,
            &p,
            &[SignatureMorphism::identity(p.signature())],
            2,
            &EqualityBudget::default(),
        )
        .unwrap();
        assert!(report.verified(), "{report}");
    }

    #[test]
    fn pushout_over_empty_apex_is_coproduct() {
        let p = monoid();
        let empty = Presentation::new(Signature::new(), vec![]).unwrap();
        let budget = EqualityBudget::default();
        let left = PresentationMorphism::new(
            empty.clone(),
            p.clone(),
            SignatureMorphism::new(Signature::new(), p.signature().clone(), vec![]).unwrap(),
            &budget,
        )
        .unwrap();
        let po = pushout(&empty, &left, &left).unwrap();
        let cop = coproduct(&p, &p).unwrap();
        assert_eq!(
            models_of_size(&po.presentation, 2).unwrap().len(),
            models_of_size(&cop.presentation, 2).unwrap().len(),
        );
    }

    #[test]
    fn pushout_identifying_two_multiplications() {
        // monoid <- magma -> monoid, gluing the two multiplications
        let budget = EqualityBudget::default();
        let p = monoid();
        let magma = catalog::get("magma").unwrap().presentation().unwrap().clone();
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
            )
            .unwrap(),
            &budget,
        )
        .unwrap();
        let po = pushout(&magma, &arm, &arm).unwrap();
        // models: pairs of monoids sharing one multiplication table; the
        // units may still differ, but a monoid's unit is determined by its
        // multiplication, so this is just one monoid
        assert_eq!(models_of_size(&po.presentation, 2).unwrap().len(), 4);
    }

    #[test]
    fn canonical_presentation_round_trip_small() {
        // one constant, no equations, depth 1: symbols for x0 and c
        let sig = Signature::from_ops(&[("c", 0)]).unwrap();
        let p = Presentation::new(sig, vec![]).unwrap();
        let cp = canonical_presentation(&p, 1).unwrap();
        assert_eq!(cp.presentation.signature().len(), 2);
        assert!(cp.structurally_forced());
        for m in 1..=3usize {
            assert_eq!(
                canonical_models(&cp, m).unwrap().len(),
                models_of_size(&p, m).unwrap().len(),
            );
        }
    }

    #[test]
    fn canonical_presentation_empty_signature() {
        let p = Presentation::new(Signature::new(), vec![]).unwrap();
        let cp = canonical_presentation(&p, 2).unwrap();
        // only variable-terms become symbols
        assert!(cp
            .denotations
            .iter()
            .all(|(_, t)| matches!(t, Term::Var(_))));
        for m in 0..=3usize {
            assert_eq!(
                canonical_models(&cp, m).unwrap().len(),
                models_of_size(&p, m).unwrap().len(),
            );
        }
    }

    #[test]
    fn canonical_presentation_depth_precondition() {
        let p = monoid();
        assert!(matches!(
            canonical_presentation(&p, 1),
            Err(Error::DepthBelowEquations { required: 2, given: 1 })
        ));
    }
}
