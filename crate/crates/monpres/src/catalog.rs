//! Built-in presentations: classical equational theories, the module and
//! affine-combination theories generated by a finite rig, and a sample
//! category presentation. Every entry ships a known model and, when the
//! theory has equations at all, a known non-model; [`CatalogEntry::self_test`]
//! replays both.

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::presentation::{satisfies, violating_assignment, Equation, Presentation};
use crate::quiver::{
    check_functor, CategoryPresentation, Path, PathRelation, Quiver, SetFunctorData,
};
use crate::signature::{Context, Signature, Term, Tuples};

/// What a catalog entry contains.
#[derive(Debug, Clone)]
pub enum EntryContent {
    Algebraic {
        presentation: Presentation,
        known_model: FiniteAlgebra,
        /// `None` for equation-free theories, where every algebra is a model.
        known_non_model: Option<FiniteAlgebra>,
    },
    Quiver {
        presentation: CategoryPresentation,
        known_functor: SetFunctorData,
        known_non_functor: SetFunctorData,
    },
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub doc: &'static str,
    pub content: EntryContent,
}

impl CatalogEntry {
    pub fn presentation(&self) -> Option<&Presentation> {
        match &self.content {
            EntryContent::Algebraic { presentation, .. } => Some(presentation),
            EntryContent::Quiver { .. } => None,
        }
    }

    pub fn category_presentation(&self) -> Option<&CategoryPresentation> {
        match &self.content {
            EntryContent::Quiver { presentation, .. } => Some(presentation),
            EntryContent::Algebraic { .. } => None,
        }
    }

    /// The shipped model must satisfy the entry and the shipped non-model
    /// must fail it.
    pub fn self_test(&self) -> Result<bool> {
        match &self.content {
            EntryContent::Algebraic {
                presentation,
                known_model,
                known_non_model,
            } => {
                if !satisfies(known_model, presentation)? {
                    return Ok(false);
                }
                if let Some(non_model) = known_non_model {
                    if satisfies(non_model, presentation)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            EntryContent::Quiver {
                presentation,
                known_functor,
                known_non_functor,
            } => {
                Ok(check_functor(presentation, known_functor, 2)?
                    && !check_functor(presentation, known_non_functor, 2)?)
            }
        }
    }
}

/// Names of all entries, in catalog order.
pub fn names() -> Vec<&'static str> {
    vec![
        "magma",
        "semigroup",
        "monoid",
        "commutative-monoid",
        "group",
        "pointed-set",
        "semilattice-with-zero",
        "rig",
        "module-over-B",
        "affine-over-B",
        "commuting-square",
    ]
}

/// Looks up an entry; unknown names list what is available.
pub fn get(name: &str) -> Result<CatalogEntry> {
    let entry = match name {
        "magma" => magma(),
        "semigroup" => semigroup(),
        "monoid" => monoid(),
        "commutative-monoid" => commutative_monoid(),
        "group" => group(),
        "pointed-set" => pointed_set(),
        "semilattice-with-zero" => semilattice_with_zero(),
        "rig" => rig(),
        "module-over-B" => module_over_boolean(),
        "affine-over-B" => affine_over_boolean(),
        "commuting-square" => commuting_square(),
        _ => {
            return Err(Error::UnknownCatalogEntry {
                name: name.to_string(),
                available: names().join(", "),
            })
        }
    };
    Ok(entry)
}

fn mul_of(sig: &Signature) -> impl Fn(Term, Term) -> Term {
    let op = sig.op("mul", 2).unwrap().clone();
    move |a, b| Term::App(op.clone(), vec![a, b])
}

fn const_of(sig: &Signature, name: &str) -> Term {
    Term::App(sig.op(name, 0).unwrap().clone(), vec![])
}

fn assoc_equation(sig: &Signature, op_name: &str, label: &str) -> Equation {
    let op = sig.op(op_name, 2).unwrap().clone();
    let app = |a: Term, b: Term| Term::App(op.clone(), vec![a, b]);
    Equation::new(
        Context::new(3),
        app(app(Term::Var(0), Term::Var(1)), Term::Var(2)),
        app(Term::Var(0), app(Term::Var(1), Term::Var(2))),
        Some(label),
    )
}

fn magma() -> CatalogEntry {
    let sig = Signature::from_ops(&[("mul", 2)]).unwrap();
    let presentation = Presentation::new(sig.clone(), vec![]).unwrap();
    CatalogEntry {
        name: "magma",
        doc: "One binary operation, no laws; every table is a model.",
        content: EntryContent::Algebraic {
            known_model: FiniteAlgebra::new(sig, 2, vec![vec![0, 0, 1, 1]]).unwrap(),
            known_non_model: None,
            presentation,
        },
    }
}

fn semigroup() -> CatalogEntry {
    let sig = Signature::from_ops(&[("mul", 2)]).unwrap();
    let presentation =
        Presentation::new(sig.clone(), vec![assoc_equation(&sig, "mul", "assoc")]).unwrap();
    CatalogEntry {
        name: "semigroup",
        doc: "Associative binary operation.",
        content: EntryContent::Algebraic {
            known_model: FiniteAlgebra::new(sig.clone(), 2, vec![vec![0, 0, 0, 1]]).unwrap(),
            known_non_model: Some(FiniteAlgebra::new(sig, 2, vec![vec![1, 1, 1, 0]]).unwrap()),
            presentation,
        },
    }
}

fn monoid_presentation() -> Presentation {
    let sig = Signature::from_ops(&[("e", 0), ("mul", 2)]).unwrap();
    let mul = mul_of(&sig);
    let e = const_of(&sig, "e");
    let equations = vec![
        assoc_equation(&sig, "mul", "assoc"),
        Equation::new(
            Context::new(1),
            mul(e.clone(), Term::Var(0)),
            Term::Var(0),
            Some("unitl"),
        ),
        Equation::new(
            Context::new(1),
            mul(Term::Var(0), e),
            Term::Var(0),
            Some("unitr"),
        ),
    ];
    Presentation::new(sig, equations).unwrap()
}

fn monoid() -> CatalogEntry {
    let presentation = monoid_presentation();
    let sig = presentation.signature().clone();
    CatalogEntry {
        name: "monoid",
        doc: "Associative binary operation with a two-sided unit.",
        content: EntryContent::Algebraic {
            known_model: FiniteAlgebra::new(sig.clone(), 2, vec![vec![0], vec![0, 1, 1, 0]])
                .unwrap(),
            known_non_model: Some(
                FiniteAlgebra::new(sig, 2, vec![vec![0], vec![0, 0, 1, 1]]).unwrap(),
            ),
            presentation,
        },
    }
}

fn commutative_monoid() -> CatalogEntry {
    let base = monoid_presentation();
    let sig = base.signature().clone();
    let mul = mul_of(&sig);
    let mut equations = base.equations().to_vec();
    equations.push(Equation::new(
        Context::new(2),
        mul(Term::Var(0), Term::Var(1)),
        mul(Term::Var(1), Term::Var(0)),
        Some("comm"),
    ));
    let presentation = Presentation::new(sig.clone(), equations).unwrap();
    CatalogEntry {
        name: "commutative-monoid",
        doc: "Monoid whose operation commutes.",
        content: EntryContent::Algebraic {
            known_model: FiniteAlgebra::new(sig.clone(), 2, vec![vec![0], vec![0, 1, 1, 0]])
                .unwrap(),
            known_non_model: Some(
                FiniteAlgebra::new(sig, 2, vec![vec![0], vec![0, 0, 1, 1]]).unwrap(),
            ),
            presentation,
        },
    }
}

fn group() -> CatalogEntry {
    let sig = Signature::from_ops(&[("e", 0), ("mul", 2), ("inv", 1)]).unwrap();
    let mul = mul_of(&sig);
    let e = const_of(&sig, "e");
    let inv = sig.op("inv", 1).unwrap().clone();
    let inv_t = |a: Term| Term::App(inv.clone(), vec![a]);
    let equations = vec![
        assoc_equation(&sig, "mul", "assoc"),
        Equation::new(
            Context::new(1),
            mul(e.clone(), Term::Var(0)),
            Term::Var(0),
            Some("unitl"),
        ),
        Equation::new(
            Context::new(1),
            mul(Term::Var(0), e.clone()),
            Term::Var(0),
            Some("unitr"),
        ),
        Equation::new(
            Context::new(1),
            mul(inv_t(Term::Var(0)), Term::Var(0)),
            e.clone(),
            Some("invl"),
        ),
        Equation::new(
            Context::new(1),
            mul(Term::Var(0), inv_t(Term::Var(0))),
            e,
            Some("invr"),
        ),
    ];
    let presentation = Presentation::new(sig.clone(), equations).unwrap();
    CatalogEntry {
        name: "group",
        doc: "Monoid with two-sided inverses.",
        content: EntryContent::Algebraic {
            known_model: FiniteAlgebra::new(
                sig.clone(),
                2,
                vec![vec![0], vec![0, 1, 1, 0], vec![0, 1]],
            )
            .unwrap(),
            known_non_model: Some(
                FiniteAlgebra::new(sig, 2, vec![vec![1], vec![0, 0, 0, 1], vec![0, 1]]).unwrap(),
            ),
            presentation,
        },
    }
}

fn pointed_set() -> CatalogEntry {
    let sig = Signature::from_ops(&[("pt", 0)]).unwrap();
    let presentation = Presentation::new(sig.clone(), vec![]).unwrap();
    CatalogEntry {
        name: "pointed-set",
        doc: "A single chosen constant, no laws.",
        content: EntryContent::Algebraic {
            known_model: FiniteAlgebra::new(sig, 1, vec![vec![0]]).unwrap(),
            known_non_model: None,
            presentation,
        },
    }
}

fn semilattice_with_zero() -> CatalogEntry {
    let sig = Signature::from_ops(&[("join", 2), ("zero", 0)]).unwrap();
    let join = sig.op("join", 2).unwrap().clone();
    let j = |a: Term, b: Term| Term::App(join.clone(), vec![a, b]);
    let zero = const_of(&sig, "zero");
    let equations = vec![
        assoc_equation(&sig, "join", "assoc"),
        Equation::new(
            Context::new(2),
            j(Term::Var(0), Term::Var(1)),
            j(Term::Var(1), Term::Var(0)),
            Some("comm"),
        ),
        Equation::new(
            Context::new(1),
            j(Term::Var(0), Term::Var(0)),
            Term::Var(0),
            Some("idem"),
        ),
        Equation::new(
            Context::new(1),
            j(zero, Term::Var(0)),
            Term::Var(0),
            Some("zero"),
        ),
    ];
    let presentation = Presentation::new(sig.clone(), equations).unwrap();
    CatalogEntry {
        name: "semilattice-with-zero",
        doc: "Idempotent commutative monoid, written as a join with least element.",
        content: EntryContent::Algebraic {
            known_model: FiniteAlgebra::new(sig.clone(), 2, vec![vec![0, 1, 1, 1], vec![0]])
                .unwrap(),
            known_non_model: Some(
                FiniteAlgebra::new(sig, 2, vec![vec![0, 1, 1, 0], vec![0]]).unwrap(),
            ),
            presentation,
        },
    }
}

/// The signature shared by rigs supplied to [`instantiate_rig_theory`].
pub fn rig_signature() -> Signature {
    Signature::from_ops(&[("add", 2), ("zero", 0), ("mul", 2), ("one", 0)]).unwrap()
}

fn rig_presentation() -> Presentation {
    let sig = rig_signature();
    let add = sig.op("add", 2).unwrap().clone();
    let a = |x: Term, y: Term| Term::App(add.clone(), vec![x, y]);
    let mul = mul_of(&sig);
    let zero = const_of(&sig, "zero");
    let one = const_of(&sig, "one");
    let equations = vec![
        assoc_equation(&sig, "add", "add_assoc"),
        Equation::new(
            Context::new(2),
            a(Term::Var(0), Term::Var(1)),
            a(Term::Var(1), Term::Var(0)),
            Some("add_comm"),
        ),
        Equation::new(
            Context::new(1),
            a(Term::Var(0), zero.clone()),
            Term::Var(0),
            Some("add_unit"),
        ),
        assoc_equation(&sig, "mul", "mul_assoc"),
        Equation::new(
            Context::new(1),
            mul(one.clone(), Term::Var(0)),
            Term::Var(0),
            Some("mul_unitl"),
        ),
        Equation::new(
            Context::new(1),
            mul(Term::Var(0), one),
            Term::Var(0),
            Some("mul_unitr"),
        ),
        Equation::new(
            Context::new(3),
            mul(Term::Var(0), a(Term::Var(1), Term::Var(2))),
            a(
                mul(Term::Var(0), Term::Var(1)),
                mul(Term::Var(0), Term::Var(2)),
            ),
            Some("distl"),
        ),
        Equation::new(
            Context::new(3),
            mul(a(Term::Var(0), Term::Var(1)), Term::Var(2)),
            a(
                mul(Term::Var(0), Term::Var(2)),
                mul(Term::Var(1), Term::Var(2)),
            ),
            Some("distr"),
        ),
        Equation::new(
            Context::new(1),
            mul(zero.clone(), Term::Var(0)),
            zero.clone(),
            Some("annl"),
        ),
        Equation::new(
            Context::new(1),
            mul(Term::Var(0), zero.clone()),
            zero,
            Some("annr"),
        ),
    ];
    Presentation::new(sig, equations).unwrap()
}

fn rig() -> CatalogEntry {
    let presentation = rig_presentation();
    let sig = presentation.signature().clone();
    CatalogEntry {
        name: "rig",
        doc: "Unital semiring: commutative additive monoid, multiplicative \
              monoid, distributivity, and zero annihilation.",
        content: EntryContent::Algebraic {
            known_model: boolean_rig(),
            known_non_model: Some(
                // or as both operations: annihilation fails
                FiniteAlgebra::new(
                    sig,
                    2,
                    vec![vec![0, 1, 1, 1], vec![0], vec![0, 1, 1, 1], vec![0]],
                )
                .unwrap(),
            ),
            presentation,
        },
    }
}

/// The two-element Boolean rig: join as addition, meet as multiplication.
pub fn boolean_rig() -> FiniteAlgebra {
    FiniteAlgebra::new(
        rig_signature(),
        2,
        vec![vec![0, 1, 1, 1], vec![0], vec![0, 0, 0, 1], vec![1]],
    )
    .unwrap()
}

/// Which theory to generate from a rig.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RigTheory {
    /// Left modules: commutative monoid with one unary action per scalar.
    Module,
    /// Affine combinations: one `n`-ary symbol per row-sum-one vector of
    /// scalars, for `n` up to the cap.
    Affine { max_arity: usize },
}

/// Default arity cap for affine theories; the symbol count grows like
/// `|R|^n`, so the cap keeps instantiations finite and small.
pub const DEFAULT_AFFINE_ARITY_CAP: usize = 3;

/// Checks that `rig` really is a rig, then generates the requested theory.
/// The rejection carries the violated rig axiom and a witnessing
/// assignment.
pub fn instantiate_rig_theory(rig: &FiniteAlgebra, kind: RigTheory) -> Result<Presentation> {
    let rig_pres = rig_presentation();
    if rig.signature() != rig_pres.signature() {
        return Err(Error::SignatureMismatch);
    }
    if let Some((eq_idx, assignment)) = violating_assignment(rig, &rig_pres) {
        let label = rig_pres.equations()[eq_idx]
            .label()
            .unwrap_or("<unnamed>")
            .to_string();
        return Err(Error::NotARig { label, assignment });
    }
    match kind {
        RigTheory::Module => Ok(module_theory(rig)),
        RigTheory::Affine { max_arity } => affine_theory(rig, max_arity),
    }
}

fn rig_ops(rig: &FiniteAlgebra) -> (usize, usize, impl Fn(usize, usize) -> usize + '_, impl Fn(usize, usize) -> usize + '_) {
    let sig = rig.signature().clone();
    let zero = rig
        .apply(sig.op("zero", 0).unwrap(), &[])
        .expect("rig has zero");
    let one = rig
        .apply(sig.op("one", 0).unwrap(), &[])
        .expect("rig has one");
    let add_op = sig.op("add", 2).unwrap().clone();
    let mul_op = sig.op("mul", 2).unwrap().clone();
    let add = {
        let rig = rig;
        let op = add_op;
        move |a: usize, b: usize| rig.apply(&op, &[a, b]).expect("total table")
    };
    let mul = {
        let rig = rig;
        let op = mul_op;
        move |a: usize, b: usize| rig.apply(&op, &[a, b]).expect("total table")
    };
    (zero, one, add, mul)
}

/// The left-module theory of a rig: signature `add/2`, `zero/0`, and one
/// unary scalar action `r<k>` per element, with the commutative-monoid
/// laws and the usual action laws instantiated over all scalars.
fn module_theory(rig: &FiniteAlgebra) -> Presentation {
    let size = rig.carrier_size();
    let (rig_zero, rig_one, radd, rmul) = rig_ops(rig);

    let mut sig = Signature::new();
    sig.add_op("add", 2).unwrap();
    sig.add_op("zero", 0).unwrap();
    for k in 0..size {
        sig.add_op(format!("r{k}"), 1).unwrap();
    }

    let add_op = sig.op("add", 2).unwrap().clone();
    let a = |x: Term, y: Term| Term::App(add_op.clone(), vec![x, y]);
    let zero = const_of(&sig, "zero");
    let scalar: Vec<_> = (0..size)
        .map(|k| sig.op(&format!("r{k}"), 1).unwrap().clone())
        .collect();
    let act = |k: usize, x: Term| Term::App(scalar[k].clone(), vec![x]);

    let mut equations = vec![
        Equation::new(
            Context::new(1),
            a(zero.clone(), Term::Var(0)),
            Term::Var(0),
            Some("add_unitl"),
        ),
        Equation::new(
            Context::new(1),
            a(Term::Var(0), zero.clone()),
            Term::Var(0),
            Some("add_unitr"),
        ),
        Equation::new(
            Context::new(2),
            a(Term::Var(0), Term::Var(1)),
            a(Term::Var(1), Term::Var(0)),
            Some("add_comm"),
        ),
        Equation::new(
            Context::new(3),
            a(Term::Var(0), a(Term::Var(1), Term::Var(2))),
            a(a(Term::Var(0), Term::Var(1)), Term::Var(2)),
            Some("add_assoc"),
        ),
        Equation::new(
            Context::new(1),
            act(rig_one, Term::Var(0)),
            Term::Var(0),
            Some("act_one"),
        ),
        Equation::new(
            Context::new(1),
            act(rig_zero, Term::Var(0)),
            zero.clone(),
            Some("act_zero"),
        ),
    ];
    for r in 0..size {
        equations.push(Equation::new(
            Context::new(0),
            act(r, zero.clone()),
            zero.clone(),
            Some(format!("zero_abs_{r}")),
        ));
        equations.push(Equation::new(
            Context::new(2),
            act(r, a(Term::Var(0), Term::Var(1))),
            a(act(r, Term::Var(0)), act(r, Term::Var(1))),
            Some(format!("act_add_{r}")),
        ));
        for s in 0..size {
            equations.push(Equation::new(
                Context::new(1),
                act(r, act(s, Term::Var(0))),
                act(rmul(r, s), Term::Var(0)),
                Some(format!("act_mul_{r}_{s}")),
            ));
            equations.push(Equation::new(
                Context::new(1),
                act(radd(r, s), Term::Var(0)),
                a(act(r, Term::Var(0)), act(s, Term::Var(0))),
                Some(format!("scal_add_{r}_{s}")),
            ));
        }
    }
    Presentation::new(sig, equations).unwrap()
}

/// Row-sum-one vectors over the rig's carrier, arity `n`, in row-major
/// order.
pub fn affine_vectors(rig: &FiniteAlgebra, n: usize) -> Vec<Vec<usize>> {
    let (zero, one, add, _) = rig_ops(rig);
    Tuples::new(rig.carrier_size(), n)
        .filter(|v| v.iter().fold(zero, |acc, &x| add(acc, x)) == one)
        .collect()
}

fn affine_symbol_name(n: usize, vector: &[usize]) -> String {
    let digits: Vec<String> = vector.iter().map(|d| d.to_string()).collect();
    format!("a{n}_{}", digits.join("_"))
}

/// The affine-combination theory of a rig, arity-capped: one `n`-ary
/// symbol per row-sum-one vector (`1 <= n <= max_arity`), standard-basis
/// projections, and the matrix-collapse equations for all row-sum-one
/// matrices within the cap.
fn affine_theory(rig: &FiniteAlgebra, max_arity: usize) -> Result<Presentation> {
    let (zero_r, one_r, radd, rmul) = rig_ops(rig);

    let mut sig = Signature::new();
    let mut vectors_by_arity: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for n in 1..=max_arity {
        let vectors = affine_vectors(rig, n);
        for v in &vectors {
            sig.add_op(affine_symbol_name(n, v), n)?;
        }
        vectors_by_arity.push(vectors);
    }

    let symbol = |n: usize, v: &[usize]| -> Term {
        let op = sig
            .op(&affine_symbol_name(n, v), n)
            .expect("vector symbol declared")
            .clone();
        Term::App(op, (0..n).map(Term::Var).collect())
    };
    let apply_vec = |n: usize, v: &[usize], args: Vec<Term>| -> Term {
        let op = sig
            .op(&affine_symbol_name(n, v), n)
            .expect("vector symbol declared")
            .clone();
        Term::App(op, args)
    };

    let mut equations = Vec::new();

    // basis projections: the i-th standard basis vector acts as the
    // i-th projection
    for n in 1..=max_arity {
        for i in 0..n {
            let mut basis = vec![zero_r; n];
            basis[i] = one_r;
            // the basis vector is row-sum-one by construction
            equations.push(Equation::new(
                Context::new(n),
                symbol(n, &basis),
                Term::Var(i),
                Some(format!("basis{n}_{i}")),
            ));
        }
    }

    // matrix collapse: r(s_1(x̄), ..., s_m(x̄)) = (r·s)(x̄) for every
    // row-sum-one m×n matrix s and row-sum-one m-vector r
    for n in 1..=max_arity {
        for m in 1..=max_arity {
            let rows = &vectors_by_arity[n];
            let rs = &vectors_by_arity[m];
            // enumerate matrices as m-tuples of row indices
            for matrix_ranks in Tuples::new(rows.len(), m) {
                let matrix: Vec<&Vec<usize>> =
                    matrix_ranks.iter().map(|&ri| &rows[ri]).collect();
                for r in rs {
                    // (r·s)_j = sum_i r_i * s_ij
                    let product: Vec<usize> = (0..n)
                        .map(|j| {
                            (0..m).fold(zero_r, |acc, i| {
                                radd(acc, rmul(r[i], matrix[i][j]))
                            })
                        })
                        .collect();
                    let lhs = apply_vec(
                        m,
                        r,
                        matrix.iter().map(|row| symbol(n, row)).collect(),
                    );
                    let rhs = symbol(n, &product);
                    if lhs != rhs {
                        let label = format!(
                            "collapse{n}x{m}_{}_{}",
                            matrix_ranks
                                .iter()
                                .map(|i| i.to_string())
                                .collect::<Vec<_>>()
                                .join("_"),
                            rs.iter().position(|v| v == r).unwrap()
                        );
                        equations.push(Equation::new(Context::new(n), lhs, rhs, Some(label)));
                    }
                }
            }
        }
    }

    Presentation::new(sig, equations)
}

fn module_over_boolean() -> CatalogEntry {
    let presentation = instantiate_rig_theory(&boolean_rig(), RigTheory::Module).unwrap();
    let sig = presentation.signature().clone();
    // join-semilattice: add = max, zero = 0, r0 constant-0, r1 identity
    let known_model = FiniteAlgebra::new(
        sig.clone(),
        2,
        vec![vec![0, 1, 1, 1], vec![0], vec![0, 0], vec![0, 1]],
    )
    .unwrap();
    // left projection for add fails the left unit law
    let known_non_model = FiniteAlgebra::new(
        sig,
        2,
        vec![vec![0, 0, 1, 1], vec![0], vec![0, 0], vec![0, 1]],
    )
    .unwrap();
    CatalogEntry {
        name: "module-over-B",
        doc: "Left modules over the Boolean rig: commutative monoids with \
              a constant-zero and an identity scalar action.",
        content: EntryContent::Algebraic {
            presentation,
            known_model,
            known_non_model: Some(known_non_model),
        },
    }
}

fn affine_over_boolean() -> CatalogEntry {
    let presentation =
        instantiate_rig_theory(&boolean_rig(), RigTheory::Affine { max_arity: 2 }).unwrap();
    let sig = presentation.signature().clone();
    // affine combinations of a join-semilattice: each vector ORs its
    // selected coordinates
    let mut tables = Vec::new();
    for op in sig.ops() {
        let name = op.name();
        let n = op.arity();
        // recover the vector from the symbol name
        let vector: Vec<usize> = name
            .split('_')
            .skip(1)
            .map(|d| d.parse::<usize>().unwrap())
            .collect();
        let table = Tuples::new(2, n)
            .map(|args| {
                args.iter()
                    .zip(&vector)
                    .map(|(&a, &v)| a * v)
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        tables.push(table);
    }
    let known_model = FiniteAlgebra::new(sig.clone(), 2, tables).unwrap();
    let zero_tables = sig
        .ops()
        .iter()
        .map(|op| vec![0; 2usize.pow(op.arity() as u32)])
        .collect();
    let known_non_model = FiniteAlgebra::new(sig, 2, zero_tables).unwrap();
    CatalogEntry {
        name: "affine-over-B",
        doc: "Affine combinations over the Boolean rig, arity-capped at 2: \
              nonempty joins of selected arguments.",
        content: EntryContent::Algebraic {
            presentation,
            known_model,
            known_non_model: Some(known_non_model),
        },
    }
}

fn commuting_square() -> CatalogEntry {
    let mut q = Quiver::new();
    for name in ["a", "b", "c", "d"] {
        q.add_object(name).unwrap();
    }
    q.add_edge("f", "a", "b").unwrap();
    q.add_edge("g", "b", "d").unwrap();
    q.add_edge("h", "a", "c").unwrap();
    q.add_edge("k", "c", "d").unwrap();
    let fg = Path::from_edges(&q, vec![0, 1], 0).unwrap();
    let hk = Path::from_edges(&q, vec![2, 3], 0).unwrap();
    let presentation = CategoryPresentation::new(
        q,
        vec![PathRelation {
            label: Some("square".into()),
            lhs: fg,
            rhs: hk,
        }],
    )
    .unwrap();
    CatalogEntry {
        name: "commuting-square",
        doc: "Four objects, four generating edges, one relation making the \
              square commute.",
        content: EntryContent::Quiver {
            known_functor: SetFunctorData {
                object_sets: vec![2, 2, 2, 2],
                edge_maps: vec![vec![0, 1]; 4],
            },
            known_non_functor: SetFunctorData {
                object_sets: vec![2, 2, 2, 2],
                edge_maps: vec![vec![0, 1], vec![0, 1], vec![0, 1], vec![1, 0]],
            },
            presentation,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::enumerate_models;

    #[test]
    fn all_entries_self_test() {
        for name in names() {
            let entry = get(name).unwrap();
            assert!(entry.self_test().unwrap(), "self-test failed for {name}");
        }
    }

    #[test]
    fn unknown_entry_lists_names() {
        match get("nope") {
            Err(Error::UnknownCatalogEntry { available, .. }) => {
                assert!(available.contains("monoid"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn monoid_has_three_equations() {
        let entry = get("monoid").unwrap();
        let p = entry.presentation().unwrap();
        assert_eq!(p.signature().len(), 2);
        assert_eq!(p.equations().len(), 3);
    }

    #[test]
    fn boolean_rig_is_a_rig() {
        assert!(satisfies(&boolean_rig(), &rig_presentation()).unwrap());
    }

    #[test]
    fn module_theory_contains_unit_action() {
        let p = instantiate_rig_theory(&boolean_rig(), RigTheory::Module).unwrap();
        // 1^R acts as the identity: act_one is the equation r1(x0) = x0
        let found = p.equations().iter().any(|eq| {
            eq.label() == Some("act_one")
                && format!("{}", eq.lhs()) == "r1(x0)"
                && format!("{}", eq.rhs()) == "x0"
        });
        assert!(found);
    }

    #[test]
    fn affine_delta2_has_three_symbols() {
        let p = instantiate_rig_theory(&boolean_rig(), RigTheory::Affine { max_arity: 2 })
            .unwrap();
        let binary = p.signature().ops_with_arity(2).count();
        assert_eq!(binary, 3); // (0,1), (1,0), (1,1)
    }

    #[test]
    fn affine_basis_equations_at_two() {
        let p = instantiate_rig_theory(&boolean_rig(), RigTheory::Affine { max_arity: 2 })
            .unwrap();
        let texts: Vec<String> = p
            .equations()
            .iter()
            .filter(|e| e.label().map(|l| l.starts_with("basis2")).unwrap_or(false))
            .map(|e| format!("{} = {}", e.lhs(), e.rhs()))
            .collect();
        assert_eq!(
            texts,
            vec!["a2_1_0(x0,x1) = x0", "a2_0_1(x0,x1) = x1"]
        );
    }

    #[test]
    fn non_rig_rejected_with_witness() {
        // break associativity of mul: mul = NAND
        let bad = FiniteAlgebra::new(
            rig_signature(),
            2,
            vec![vec![0, 1, 1, 1], vec![0], vec![1, 1, 1, 0], vec![1]],
        )
        .unwrap();
        match instantiate_rig_theory(&bad, RigTheory::Module) {
            Err(Error::NotARig { label, assignment }) => {
                assert_eq!(label, "mul_assoc");
                assert_eq!(assignment.len(), 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn module_models_on_two_include_semilattice_exclude_projection() {
        let entry = get("module-over-B").unwrap();
        let p = entry.presentation().unwrap();
        let models = enumerate_models(p, 2).unwrap();
        let EntryContent::Algebraic {
            known_model,
            known_non_model,
            ..
        } = &entry.content
        else {
            panic!()
        };
        assert!(models.contains(known_model));
        assert!(!models.contains(known_non_model.as_ref().unwrap()));
    }
}
