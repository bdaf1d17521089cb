//! Finitary signatures, terms, and substitution.
//!
//! A [`Signature`] is a finite family of operation symbols graded by arity.
//! [`Term`]s over a signature are variable-or-application trees whose
//! variables are positional indices into a finite [`Context`]. Substitution
//! gives the set of terms the structure of a monad: variables are the unit
//! and [`Term::substitute`] is Kleisli extension.
//!
//! Terms of bounded depth are enumerated stage-wise: the stage of depth
//! `d + 1` consists of the variables together with one application per
//! symbol and per argument tuple drawn from the depth-`d` stage, so stage
//! sizes obey the recurrence `|X_{d+1}| = |ctx| + sum_n |X_d|^n * |Σ(n)|`
//! computed by [`polynomial_size`].

use std::fmt;

use crate::error::{Error, Result};

/// An operation symbol: a name together with a fixed arity.
///
/// Two symbols are the same operation iff both name and arity agree; the
/// same name may appear at several arities within one signature.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpSymbol {
    name: String,
    arity: usize,
}

impl OpSymbol {
    /// Creates a symbol, validating that the name is a plain identifier
    /// and does not collide with the variable spelling `x<digits>`.
    pub fn new(name: impl Into<String>, arity: usize) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::BadSymbolName {
                name,
                reason: "empty".into(),
            });
        }
        let mut chars = name.chars();
        let first = chars.next().unwrap();
        if !(first.is_ascii_alphabetic() || first == '_') {
            return Err(Error::BadSymbolName {
                name,
                reason: "must start with a letter or underscore".into(),
            });
        }
        if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::BadSymbolName {
                name,
                reason: "only letters, digits and underscores allowed".into(),
            });
        }
        if is_variable_spelling(&name) {
            return Err(Error::BadSymbolName {
                name,
                reason: "x<digits> is reserved for variables".into(),
            });
        }
        Ok(OpSymbol { name, arity })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }
}

impl fmt::Display for OpSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.name, self.arity)
    }
}

/// True when `name` would parse as a variable token (`x0`, `x1`, ...).
pub fn is_variable_spelling(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next() == Some('x') && {
        let rest = &name[1..];
        !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit())
    }
}

/// A finite, arity-graded family of operation symbols.
///
/// Symbols are kept in declaration order; that order is what breaks ties
/// in term enumeration and in the completion engine's reduction order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    ops: Vec<OpSymbol>,
}

impl Signature {
    pub fn new() -> Self {
        Signature { ops: Vec::new() }
    }

    /// Builds a signature from `(name, arity)` pairs in declaration order.
    pub fn from_ops(ops: &[(&str, usize)]) -> Result<Self> {
        let mut sig = Signature::new();
        for &(name, arity) in ops {
            sig.add_op(name, arity)?;
        }
        Ok(sig)
    }

    /// Declares a new symbol. Duplicate `(name, arity)` pairs are rejected.
    pub fn add_op(&mut self, name: impl Into<String>, arity: usize) -> Result<OpSymbol> {
        let op = OpSymbol::new(name, arity)?;
        if self.ops.contains(&op) {
            return Err(Error::DuplicateSymbol {
                name: op.name,
                arity: op.arity,
            });
        }
        self.ops.push(op.clone());
        Ok(op)
    }

    /// All symbols in declaration order.
    pub fn ops(&self) -> &[OpSymbol] {
        &self.ops
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn op(&self, name: &str, arity: usize) -> Option<&OpSymbol> {
        self.ops
            .iter()
            .find(|o| o.name == name && o.arity == arity)
    }

    /// Symbols sharing a name, in declaration order (DSL arity resolution).
    pub fn ops_named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a OpSymbol> + 'a {
        self.ops.iter().filter(move |o| o.name == name)
    }

    pub fn contains(&self, op: &OpSymbol) -> bool {
        self.ops.contains(op)
    }

    /// Position of `op` in declaration order.
    pub fn declaration_index(&self, op: &OpSymbol) -> Option<usize> {
        self.ops.iter().position(|o| o == op)
    }

    pub fn max_arity(&self) -> usize {
        self.ops.iter().map(|o| o.arity).max().unwrap_or(0)
    }

    pub fn has_constants(&self) -> bool {
        self.ops.iter().any(|o| o.arity == 0)
    }

    /// Symbols of one arity, in declaration order.
    pub fn ops_with_arity(&self, arity: usize) -> impl Iterator<Item = &OpSymbol> {
        self.ops.iter().filter(move |o| o.arity == arity)
    }
}

/// A finite variable context: variables are the indices `0..size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Context(usize);

impl Context {
    pub fn new(size: usize) -> Self {
        Context(size)
    }

    pub fn size(&self) -> usize {
        self.0
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.0
    }
}

impl From<usize> for Context {
    fn from(size: usize) -> Self {
        Context(size)
    }
}

/// A term over a signature: a variable index or an application of a
/// symbol to exactly `arity` argument terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(usize),
    App(OpSymbol, Vec<Term>),
}

impl Term {
    /// The monad unit: variable `i` checked against the context.
    pub fn var(index: usize, ctx: Context) -> Result<Term> {
        if !ctx.contains(index) {
            return Err(Error::VarOutOfContext {
                index,
                context: ctx.size(),
            });
        }
        Ok(Term::Var(index))
    }

    /// An application, checked against the symbol's arity.
    pub fn app(op: OpSymbol, args: Vec<Term>) -> Result<Term> {
        if args.len() != op.arity() {
            return Err(Error::ArityMismatch {
                name: op.name().to_string(),
                arity: op.arity(),
                found: args.len(),
            });
        }
        Ok(Term::App(op, args))
    }

    /// Variables are depth 0; applications are one more than their deepest
    /// argument (constants have depth 1).
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    /// Total number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }

    /// Smallest context the term fits in: one past the largest variable.
    pub fn min_context(&self) -> usize {
        match self {
            Term::Var(i) => i + 1,
            Term::App(_, args) => args.iter().map(Term::min_context).max().unwrap_or(0),
        }
    }

    /// Occurrence count of each variable, indexed by variable.
    pub fn var_counts(&self, ctx: Context) -> Vec<usize> {
        let mut counts = vec![0; ctx.size()];
        self.count_vars(&mut counts);
        counts
    }

    fn count_vars(&self, counts: &mut Vec<usize>) {
        match self {
            Term::Var(i) => {
                if *i >= counts.len() {
                    counts.resize(i + 1, 0);
                }
                counts[*i] += 1;
            }
            Term::App(_, args) => {
                for a in args {
                    a.count_vars(counts);
                }
            }
        }
    }

    /// Checks variables against `ctx` and symbols against `sig`.
    pub fn validate(&self, sig: &Signature, ctx: Context) -> Result<()> {
        match self {
            Term::Var(i) => {
                if ctx.contains(*i) {
                    Ok(())
                } else {
                    Err(Error::VarOutOfContext {
                        index: *i,
                        context: ctx.size(),
                    })
                }
            }
            Term::App(op, args) => {
                if !sig.contains(op) {
                    return Err(Error::UnknownSymbol {
                        name: op.name().to_string(),
                        arity: op.arity(),
                    });
                }
                if args.len() != op.arity() {
                    return Err(Error::ArityMismatch {
                        name: op.name().to_string(),
                        arity: op.arity(),
                        found: args.len(),
                    });
                }
                args.iter().try_for_each(|a| a.validate(sig, ctx))
            }
        }
    }

    /// Kleisli extension: replaces variable `i` by `env[i]` throughout.
    ///
    /// The environment must cover every variable of the term; images may
    /// live in any target context.
    pub fn substitute(&self, env: &[Term]) -> Result<Term> {
        match self {
            Term::Var(i) => env.get(*i).cloned().ok_or(Error::EnvTooShort {
                required: i + 1,
                found: env.len(),
            }),
            Term::App(op, args) => {
                let args = args
                    .iter()
                    .map(|a| a.substitute(env))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Term::App(op.clone(), args))
            }
        }
    }

    /// All subterms including the term itself, in preorder.
    pub fn subterms(&self) -> Vec<&Term> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            out.push(t);
            if let Term::App(_, args) = t {
                for a in args.iter().rev() {
                    stack.push(a);
                }
            }
        }
        out
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{i}"),
            Term::App(op, args) => {
                if args.is_empty() {
                    return write!(f, "{}", op.name());
                }
                write!(f, "{}(", op.name())?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// The identity substitution environment for a context.
pub fn identity_env(ctx: Context) -> Vec<Term> {
    (0..ctx.size()).map(Term::Var).collect()
}

/// Cardinality of the polynomial endofunctor of `sig` applied to a carrier
/// of the given size: `sum_n size^n * |Σ(n)|`.
pub fn polynomial_size(sig: &Signature, carrier_size: u128) -> u128 {
    sig.ops()
        .iter()
        .map(|op| carrier_size.checked_pow(op.arity() as u32).expect("overflow"))
        .fold(0u128, |acc, v| acc.checked_add(v).expect("overflow"))
}

/// Element-level version of [`polynomial_size`]: every `(symbol, tuple)`
/// pair with tuple entries indexing a carrier of the given size, ordered by
/// symbol declaration and then row-major over tuples.
pub fn polynomial_elements<'a>(
    sig: &'a Signature,
    carrier_size: usize,
) -> impl Iterator<Item = (&'a OpSymbol, Vec<usize>)> + 'a {
    sig.ops().iter().flat_map(move |op| {
        Tuples::new(carrier_size, op.arity()).map(move |tuple| (op, tuple))
    })
}

/// Row-major odometer over `base^len` tuples.
pub(crate) struct Tuples {
    base: usize,
    current: Option<Vec<usize>>,
}

impl Tuples {
    pub(crate) fn new(base: usize, len: usize) -> Self {
        let current = if len == 0 {
            Some(Vec::new())
        } else if base == 0 {
            None
        } else {
            Some(vec![0; len])
        };
        Tuples { base, current }
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        // advance, last position fastest
        let mut pos = cur.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < self.base {
                break;
            }
            cur[pos] = 0;
        }
        Some(out)
    }
}

/// Stage sizes `|X_0|, ..., |X_max_depth|` of the term chain, computed by
/// the recurrence rather than by enumeration.
pub fn stage_sizes(sig: &Signature, ctx: Context, max_depth: usize) -> Vec<u128> {
    let mut sizes = Vec::with_capacity(max_depth + 1);
    let mut current = ctx.size() as u128;
    sizes.push(current);
    for _ in 0..max_depth {
        current = ctx.size() as u128 + polynomial_size(sig, current);
        sizes.push(current);
    }
    sizes
}

/// First stage index `d >= 1` at which the chain stops growing, probing up
/// to `max_probe`. The chain stabilizes iff the signature has no symbol of
/// positive arity reachable from the stage, which at finite depth shows up
/// as two consecutive equal stage sizes.
pub fn chain_stabilization(sig: &Signature, ctx: Context, max_probe: usize) -> Option<usize> {
    let sizes = stage_sizes(sig, ctx, max_probe);
    (1..sizes.len()).find(|&d| sizes[d] == sizes[d - 1])
}

/// Enumerates every term of depth `<= max_depth` exactly once, graded by
/// depth, then by symbol declaration order, then lexicographically in the
/// argument tuple (arguments ordered by their own enumeration position).
pub fn enumerate_terms(sig: &Signature, ctx: Context, max_depth: usize) -> Vec<Term> {
    enumerate_terms_capped(sig, ctx, max_depth, usize::MAX).expect("uncapped")
}

/// Like [`enumerate_terms`] but aborts with a budget error once more than
/// `cap` terms would be produced.
pub fn enumerate_terms_capped(
    sig: &Signature,
    ctx: Context,
    max_depth: usize,
    cap: usize,
) -> Result<Vec<Term>> {
    let budget = |len: usize| -> Result<()> {
        if len > cap {
            Err(Error::BudgetExceeded {
                what: "term enumeration".into(),
                limit: cap,
            })
        } else {
            Ok(())
        }
    };

    let mut all: Vec<Term> = Vec::new();
    for i in 0..ctx.size() {
        all.push(Term::Var(i));
    }
    budget(all.len())?;

    // band_start marks where the previous depth band begins in `all`.
    let mut band_start = 0usize;
    for depth in 1..=max_depth {
        let band_end = all.len();
        let mut fresh: Vec<Term> = Vec::new();
        for op in sig.ops() {
            if op.arity() == 0 {
                if depth == 1 {
                    fresh.push(Term::App(op.clone(), Vec::new()));
                    budget(band_end + fresh.len())?;
                }
                continue;
            }
            for tuple in Tuples::new(band_end, op.arity()) {
                // at least one argument from the newest band, else the
                // application was already emitted at a smaller depth
                if tuple.iter().all(|&i| i < band_start) {
                    continue;
                }
                let args: Vec<Term> = tuple.iter().map(|&i| all[i].clone()).collect();
                fresh.push(Term::App(op.clone(), args));
                budget(band_end + fresh.len())?;
            }
        }
        if fresh.is_empty() {
            break; // chain stabilized
        }
        band_start = band_end;
        all.extend(fresh);
    }
    Ok(all)
}

/// A morphism of signatures `Γ → Σ` valued in terms: each `n`-ary source
/// symbol is assigned a `Σ`-term in context `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureMorphism {
    source: Signature,
    target: Signature,
    assignments: Vec<Term>,
}

impl SignatureMorphism {
    /// `assignments` are parallel to `source.ops()`; each must be a valid
    /// target term whose variables fit in the source symbol's arity.
    pub fn new(source: Signature, target: Signature, assignments: Vec<Term>) -> Result<Self> {
        if assignments.len() != source.len() {
            return Err(Error::MorphismLength {
                expected: source.len(),
                found: assignments.len(),
            });
        }
        for (op, term) in source.ops().iter().zip(&assignments) {
            term.validate(&target, Context::new(op.arity()))
                .map_err(|e| Error::MorphismImage {
                    symbol: op.to_string(),
                    reason: e.to_string(),
                })?;
        }
        Ok(SignatureMorphism {
            source,
            target,
            assignments,
        })
    }

    /// The identity-shaped morphism `Σ → Σ`, `ω ↦ ω(x0, ..., x{n-1})`.
    pub fn identity(sig: &Signature) -> Self {
        let assignments = sig
            .ops()
            .iter()
            .map(|op| Term::App(op.clone(), (0..op.arity()).map(Term::Var).collect()))
            .collect();
        SignatureMorphism {
            source: sig.clone(),
            target: sig.clone(),
            assignments,
        }
    }

    pub fn source(&self) -> &Signature {
        &self.source
    }

    pub fn target(&self) -> &Signature {
        &self.target
    }

    pub fn assignment(&self, op: &OpSymbol) -> Option<&Term> {
        self.source
            .declaration_index(op)
            .map(|i| &self.assignments[i])
    }

    pub fn assignments(&self) -> &[Term] {
        &self.assignments
    }

    /// The induced map on terms: variables are fixed and each source
    /// application is replaced by the assigned term with the (recursively
    /// extended) arguments substituted in.
    pub fn extend(&self, term: &Term) -> Result<Term> {
        match term {
            Term::Var(i) => Ok(Term::Var(*i)),
            Term::App(op, args) => {
                let image = self
                    .assignment(op)
                    .ok_or_else(|| Error::UnknownSymbol {
                        name: op.name().to_string(),
                        arity: op.arity(),
                    })?
                    .clone();
                let extended_args = args
                    .iter()
                    .map(|a| self.extend(a))
                    .collect::<Result<Vec<_>>>()?;
                image.substitute(&extended_args)
            }
        }
    }

    /// Composition `other ∘ self` is undefined; this is `self` then `g`:
    /// `(g ∘ f)(γ) = extend_g(f(γ))`.
    pub fn then(&self, g: &SignatureMorphism) -> Result<SignatureMorphism> {
        let assignments = self
            .assignments
            .iter()
            .map(|t| g.extend(t))
            .collect::<Result<Vec<_>>>()?;
        SignatureMorphism::new(self.source.clone(), g.target.clone(), assignments)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn magma() -> Signature {
        Signature::from_ops(&[("mul", 2)]).unwrap()
    }

    fn monoid_sig() -> Signature {
        Signature::from_ops(&[("e", 0), ("mul", 2)]).unwrap()
    }

    #[test]
    fn unit_var_respects_context() {
        assert_eq!(Term::var(0, Context::new(1)).unwrap(), Term::Var(0));
        assert_eq!(Term::var(2, Context::new(3)).unwrap(), Term::Var(2));
        assert!(matches!(
            Term::var(1, Context::new(1)),
            Err(Error::VarOutOfContext { index: 1, context: 1 })
        ));
    }

    #[test]
    fn substitute_left_unit() {
        let sig = magma();
        let mul = sig.op("mul", 2).unwrap().clone();
        let t = Term::App(mul, vec![Term::Var(0), Term::Var(1)]);
        assert_eq!(Term::Var(0).substitute(&[t.clone()]).unwrap(), t);
    }

    #[test]
    fn substitute_structural() {
        let sig = magma();
        let mul = sig.op("mul", 2).unwrap().clone();
        let t = Term::App(mul.clone(), vec![Term::Var(0), Term::Var(1)]);
        let u = Term::App(mul.clone(), vec![Term::Var(1), Term::Var(1)]);
        let v = Term::Var(0);
        let result = t.substitute(&[u.clone(), v.clone()]).unwrap();
        assert_eq!(result, Term::App(mul, vec![u, v]));
    }

    #[test]
    fn substitute_env_too_short() {
        assert!(matches!(
            Term::Var(2).substitute(&[Term::Var(0)]),
            Err(Error::EnvTooShort { required: 3, found: 1 })
        ));
    }

    #[test]
    fn polynomial_size_examples() {
        let sig = monoid_sig();
        assert_eq!(polynomial_size(&sig, 3), 10); // 1 + 9
        assert_eq!(polynomial_size(&Signature::new(), 5), 0);
        let unary = Signature::from_ops(&[("u", 1)]).unwrap();
        assert_eq!(polynomial_size(&unary, 4), 4);
    }

    #[test]
    fn polynomial_elements_match_size() {
        let sig = monoid_sig();
        for size in 0..4usize {
            let count = polynomial_elements(&sig, size).count();
            assert_eq!(count as u128, polynomial_size(&sig, size as u128));
        }
    }

    #[test]
    fn enumeration_counts_follow_recurrence() {
        // one binary op, one variable: 1, 2, 5, 26
        let sig = magma();
        let ctx = Context::new(1);
        let expected = [1usize, 2, 5, 26];
        for (d, want) in expected.iter().enumerate() {
            assert_eq!(enumerate_terms(&sig, ctx, d).len(), *want, "depth {d}");
        }
        assert_eq!(
            stage_sizes(&sig, ctx, 3),
            vec![1, 2, 5, 26],
        );
    }

    #[test]
    fn enumeration_empty_signature_is_variables() {
        let terms = enumerate_terms(&Signature::new(), Context::new(3), 5);
        assert_eq!(terms, vec![Term::Var(0), Term::Var(1), Term::Var(2)]);
    }

    #[test]
    fn enumeration_single_constant() {
        let sig = Signature::from_ops(&[("e", 0)]).unwrap();
        let e = sig.op("e", 0).unwrap().clone();
        let terms = enumerate_terms(&sig, Context::new(0), 1);
        assert_eq!(terms, vec![Term::App(e, vec![])]);
    }

    #[test]
    fn enumeration_is_duplicate_free_and_depth_monotone() {
        let sig = monoid_sig();
        let ctx = Context::new(2);
        let deep = enumerate_terms(&sig, ctx, 3);
        let mut seen = std::collections::HashSet::new();
        for t in &deep {
            assert!(seen.insert(t.clone()), "duplicate {t}");
        }
        let shallow = enumerate_terms(&sig, ctx, 2);
        assert_eq!(&deep[..shallow.len()], &shallow[..]);
        let mut last_depth = 0;
        for t in &deep {
            assert!(t.depth() >= last_depth);
            last_depth = t.depth();
        }
    }

    #[test]
    fn enumeration_cap_signals_budget() {
        let sig = magma();
        let err = enumerate_terms_capped(&sig, Context::new(1), 3, 10).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn stabilization_detected() {
        let sig = Signature::from_ops(&[("c", 0)]).unwrap();
        assert_eq!(chain_stabilization(&sig, Context::new(2), 5), Some(2));
        assert_eq!(chain_stabilization(&Signature::new(), Context::new(2), 5), Some(1));
        assert_eq!(chain_stabilization(&magma(), Context::new(1), 5), None);
    }

    #[test]
    fn morphism_extension_replaces_symbols() {
        // Γ has p/2, sent to mul with swapped arguments.
        let gamma = Signature::from_ops(&[("p", 2)]).unwrap();
        let sigma = magma();
        let mul = sigma.op("mul", 2).unwrap().clone();
        let swap = Term::App(mul.clone(), vec![Term::Var(1), Term::Var(0)]);
        let m = SignatureMorphism::new(gamma.clone(), sigma, vec![swap.clone()]).unwrap();

        let p = gamma.op("p", 2).unwrap().clone();
        let term = Term::App(p, vec![Term::Var(0), Term::Var(1)]);
        assert_eq!(m.extend(&term).unwrap(), swap);
        assert_eq!(m.extend(&Term::Var(2)).unwrap(), Term::Var(2));
    }

    #[test]
    fn morphism_rejects_bad_image() {
        let gamma = Signature::from_ops(&[("p", 1)]).unwrap();
        let sigma = magma();
        // image uses x1 which is out of the 1-variable context
        let mul = sigma.op("mul", 2).unwrap().clone();
        let bad = Term::App(mul, vec![Term::Var(0), Term::Var(1)]);
        assert!(SignatureMorphism::new(gamma, sigma, vec![bad]).is_err());
    }

    #[test]
    fn reserved_variable_names_rejected() {
        assert!(OpSymbol::new("x0", 1).is_err());
        assert!(OpSymbol::new("x12", 0).is_err());
        assert!(OpSymbol::new("xy", 1).is_ok());
        assert!(OpSymbol::new("x", 1).is_ok());
    }
}
