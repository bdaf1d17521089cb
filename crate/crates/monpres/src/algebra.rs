//! Finite algebras for a signature: a carrier `{0, ..., m-1}` with one
//! dense operation table per symbol.
//!
//! Tables are row-major over argument tuples with the first coordinate
//! most significant, so the entry for tuple `(a_0, ..., a_{n-1})` sits at
//! index `sum_k a_k * m^(n-1-k)`. This encoding is shared bit-exactly with
//! the `.alg` file format.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::signature::{enumerate_terms, OpSymbol, Signature, Term, Tuples};

/// A finite algebra: carrier `{0, ..., carrier_size-1}` plus one total
/// table per operation symbol of the signature.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteAlgebra {
    signature: Signature,
    carrier_size: usize,
    tables: Vec<Vec<usize>>,
}

/// Row-major index of an argument tuple into a table over carrier size `m`.
pub fn tuple_index(tuple: &[usize], m: usize) -> usize {
    tuple.iter().fold(0, |acc, &a| acc * m + a)
}

/// Inverse of [`tuple_index`].
pub fn index_tuple(mut index: usize, arity: usize, m: usize) -> Vec<usize> {
    let mut tuple = vec![0; arity];
    for slot in tuple.iter_mut().rev() {
        *slot = index % m;
        index /= m;
    }
    tuple
}

impl FiniteAlgebra {
    /// Validates table shapes and entries. An empty carrier is permitted
    /// only when the signature has no constants.
    pub fn new(signature: Signature, carrier_size: usize, tables: Vec<Vec<usize>>) -> Result<Self> {
        if carrier_size == 0 {
            if let Some(c) = signature.ops_with_arity(0).next() {
                return Err(Error::EmptyCarrierWithConstant {
                    name: c.name().to_string(),
                });
            }
        }
        if tables.len() != signature.len() {
            return Err(Error::BadTableLength {
                symbol: "<table count>".into(),
                expected: signature.len(),
                found: tables.len(),
            });
        }
        for (op, table) in signature.ops().iter().zip(&tables) {
            let expected = carrier_size.pow(op.arity() as u32);
            if table.len() != expected {
                return Err(Error::BadTableLength {
                    symbol: op.to_string(),
                    expected,
                    found: table.len(),
                });
            }
            if let Some(&v) = table.iter().find(|&&v| v >= carrier_size) {
                return Err(Error::BadTableEntry {
                    symbol: op.to_string(),
                    value: v,
                    carrier: carrier_size,
                });
            }
        }
        Ok(FiniteAlgebra {
            signature,
            carrier_size,
            tables,
        })
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier_size
    }

    pub fn tables(&self) -> &[Vec<usize>] {
        &self.tables
    }

    pub fn table(&self, op: &OpSymbol) -> Option<&[usize]> {
        self.signature
            .declaration_index(op)
            .map(|i| self.tables[i].as_slice())
    }

    /// Applies a symbol's table to a tuple of carrier elements.
    pub fn apply(&self, op: &OpSymbol, args: &[usize]) -> Result<usize> {
        let table = self.table(op).ok_or_else(|| Error::UnknownSymbol {
            name: op.name().to_string(),
            arity: op.arity(),
        })?;
        if args.len() != op.arity() {
            return Err(Error::ArityMismatch {
                name: op.name().to_string(),
                arity: op.arity(),
                found: args.len(),
            });
        }
        Ok(table[tuple_index(args, self.carrier_size)])
    }

    /// Interprets a term under an assignment of carrier elements to the
    /// variables: `x_i` evaluates to `assignment[i]` and applications go
    /// through the tables.
    pub fn eval(&self, term: &Term, assignment: &[usize]) -> Result<usize> {
        if let Some(&v) = assignment.iter().find(|&&v| v >= self.carrier_size) {
            return Err(Error::AssignmentValue {
                value: v,
                carrier: self.carrier_size,
            });
        }
        term.validate(&self.signature, crate::signature::Context::new(assignment.len()))?;
        Ok(self.eval_unchecked(term, assignment))
    }

    /// Evaluation without contract checks; callers validate up front.
    pub(crate) fn eval_unchecked(&self, term: &Term, assignment: &[usize]) -> usize {
        match term {
            Term::Var(i) => assignment[*i],
            Term::App(op, args) => {
                let idx = self.signature.declaration_index(op).expect("symbol in signature");
                let table = &self.tables[idx];
                let mut key = 0usize;
                for a in args {
                    key = key * self.carrier_size + self.eval_unchecked(a, assignment);
                }
                table[key]
            }
        }
    }

    /// The full graph of a term as a table over `carrier^n` assignments.
    pub fn term_table(&self, term: &Term, context_size: usize) -> Result<Vec<usize>> {
        term.validate(&self.signature, crate::signature::Context::new(context_size))?;
        Ok(Tuples::new(self.carrier_size, context_size)
            .map(|x| self.eval_unchecked(term, &x))
            .collect())
    }
}

/// Checks the homomorphism condition `f(ω_A(ā)) = ω_B(f ∘ ā)` for every
/// symbol and every argument tuple.
pub fn is_homomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[usize]) -> Result<bool> {
    if a.signature() != b.signature() {
        return Err(Error::SignatureMismatch);
    }
    if map.len() != a.carrier_size() {
        return Err(Error::AssignmentLength {
            expected: a.carrier_size(),
            found: map.len(),
        });
    }
    if let Some(&v) = map.iter().find(|&&v| v >= b.carrier_size()) {
        return Err(Error::AssignmentValue {
            value: v,
            carrier: b.carrier_size(),
        });
    }
    for op in a.signature().ops() {
        for tuple in Tuples::new(a.carrier_size(), op.arity()) {
            let lhs = map[a.apply(op, &tuple)?];
            let mapped: Vec<usize> = tuple.iter().map(|&x| map[x]).collect();
            let rhs = b.apply(op, &mapped)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of distinct algebras on a carrier of size `m`:
/// the product over symbols of `m^(m^arity)`.
pub fn algebra_count(sig: &Signature, m: usize) -> u128 {
    sig.ops().iter().fold(1u128, |acc, op| {
        let table_len = (m as u128).checked_pow(op.arity() as u32).expect("overflow");
        let choices = (m as u128).checked_pow(table_len as u32).expect("overflow");
        acc.checked_mul(choices).expect("overflow")
    })
}

/// Enumerates every algebra of the signature on a fixed carrier size,
/// exactly once, in increasing order of the concatenated tables read as a
/// base-`m` number (first table entry most significant).
pub fn enumerate_algebras(sig: &Signature, m: usize) -> Result<AlgebraIter> {
    if m == 0 {
        if let Some(c) = sig.ops_with_arity(0).next() {
            return Err(Error::EmptyCarrierWithConstant {
                name: c.name().to_string(),
            });
        }
    }
    let shapes: Vec<usize> = sig
        .ops()
        .iter()
        .map(|op| m.pow(op.arity() as u32))
        .collect();
    let tables: Vec<Vec<usize>> = shapes.iter().map(|&len| vec![0; len]).collect();
    Ok(AlgebraIter {
        signature: sig.clone(),
        carrier_size: m,
        tables: Some(tables),
    })
}

/// Collects at most `cap` algebras, signalling budget exhaustion if the
/// space is larger.
pub fn enumerate_algebras_capped(
    sig: &Signature,
    m: usize,
    cap: usize,
) -> Result<Vec<FiniteAlgebra>> {
    if algebra_count(sig, m) > cap as u128 {
        return Err(Error::BudgetExceeded {
            what: format!("algebra enumeration on carrier {m}"),
            limit: cap,
        });
    }
    Ok(enumerate_algebras(sig, m)?.collect())
}

pub struct AlgebraIter {
    signature: Signature,
    carrier_size: usize,
    tables: Option<Vec<Vec<usize>>>,
}

impl Iterator for AlgebraIter {
    type Item = FiniteAlgebra;

    fn next(&mut self) -> Option<FiniteAlgebra> {
        let tables = self.tables.clone()?;
        let out = FiniteAlgebra {
            signature: self.signature.clone(),
            carrier_size: self.carrier_size,
            tables,
        };
        // advance the odometer, last entry of the last table fastest
        let m = self.carrier_size;
        let tables = self.tables.as_mut().unwrap();
        let mut done = true;
        'outer: for table in tables.iter_mut().rev() {
            for entry in table.iter_mut().rev() {
                *entry += 1;
                if *entry < m {
                    done = false;
                    break 'outer;
                }
                *entry = 0;
            }
        }
        if done {
            self.tables = None;
        }
        Some(out)
    }
}

/// Checks the Eilenberg-Moore laws for the structure map induced by
/// evaluation: writing `α(t)` for evaluation of `t` under the identity
/// assignment, the unit law `α(x_i) = i` and, for every split of
/// `max_depth` into inner and outer depth, the multiplication law
/// `α(outer with variables replaced by α(inner)) = α(substituted term)`.
///
/// Returns `true` on every correct algebra; a `false` signals a fault in
/// either the evaluation or the substitution path.
pub fn em_laws_hold(algebra: &FiniteAlgebra, max_depth: usize) -> bool {
    let m = algebra.carrier_size();
    let tautological: Vec<usize> = (0..m).collect();
    let mut alpha = |t: &Term| algebra.eval_unchecked(t, &tautological);
    em_laws_hold_with(algebra, &mut alpha, max_depth)
}

/// [`em_laws_hold`] with an injectable structure map, so tests can verify
/// that a corrupted map is caught.
pub fn em_laws_hold_with(
    algebra: &FiniteAlgebra,
    alpha: &mut dyn FnMut(&Term) -> usize,
    max_depth: usize,
) -> bool {
    let sig = algebra.signature().clone();
    let m = algebra.carrier_size();

    // unit law
    for i in 0..m {
        if alpha(&Term::Var(i)) != i {
            return false;
        }
    }

    // multiplication law over all inner/outer depth splits
    for inner_depth in 0..=max_depth {
        let inner = enumerate_terms(&sig, crate::signature::Context::new(m), inner_depth);
        let inner_values: Vec<usize> = inner.iter().map(|t| alpha(t)).collect();
        for outer_depth in 0..=(max_depth - inner_depth) {
            let outer = enumerate_terms(
                &sig,
                crate::signature::Context::new(inner.len()),
                outer_depth,
            );
            for tau in &outer {
                let collapsed = tau
                    .substitute(
                        &inner_values
                            .iter()
                            .map(|&v| Term::Var(v))
                            .collect::<Vec<_>>(),
                    )
                    .expect("environment covers outer context");
                let lhs = alpha(&collapsed);
                let flattened = tau.substitute(&inner).expect("environment covers outer context");
                let rhs = alpha(&flattened);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Compatibility of evaluation with substitution:
/// `eval(subst(t, env), x) = eval(t, i ↦ eval(env[i], x))`.
pub fn eval_subst_compatible(
    algebra: &FiniteAlgebra,
    term: &Term,
    env: &[Term],
    assignment: &[usize],
) -> Result<bool> {
    let substituted = term.substitute(env)?;
    let direct = algebra.eval(&substituted, assignment)?;
    let staged_env: Vec<usize> = env
        .iter()
        .map(|e| algebra.eval(e, assignment))
        .collect::<Result<Vec<_>>>()?;
    let staged = algebra.eval(term, &staged_env)?;
    Ok(direct == staged)
}

/// Bijection search built on [`is_homomorphism`]: two algebras are
/// isomorphic iff some carrier bijection is a homomorphism (its inverse
/// then is one automatically).
pub fn are_isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<bool> {
    if a.signature() != b.signature() {
        return Err(Error::SignatureMismatch);
    }
    if a.carrier_size() != b.carrier_size() {
        return Ok(false);
    }
    let m = a.carrier_size();
    for perm in (0..m).permutations(m) {
        if is_homomorphism(a, b, &perm)? {
            return Ok(true);
        }
    }
    Ok(m == 0)
}

/// Number of isomorphism classes among the given algebras.
pub fn count_up_to_iso(algebras: &[FiniteAlgebra]) -> Result<usize> {
    let mut representatives: Vec<&FiniteAlgebra> = Vec::new();
    for a in algebras {
        let mut fresh = true;
        for r in &representatives {
            if are_isomorphic(a, r)? {
                fresh = false;
                break;
            }
        }
        if fresh {
            representatives.push(a);
        }
    }
    Ok(representatives.len())
}

/// The identity assignment `[0, 1, ..., m-1]`.
pub fn tautological_assignment(carrier_size: usize) -> Vec<usize> {
    (0..carrier_size).collect()
}

/// All assignments of `n` variables into a carrier, row-major.
pub fn assignments(carrier_size: usize, context_size: usize) -> impl Iterator<Item = Vec<usize>> {
    Tuples::new(carrier_size, context_size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::Context;

    fn xor_algebra() -> FiniteAlgebra {
        let sig = Signature::from_ops(&[("xor", 2)]).unwrap();
        FiniteAlgebra::new(sig, 2, vec![vec![0, 1, 1, 0]]).unwrap()
    }

    #[test]
    fn eval_table_lookup() {
        let a = xor_algebra();
        let xor = a.signature().op("xor", 2).unwrap().clone();
        let t = Term::App(xor, vec![Term::Var(0), Term::Var(1)]);
        assert_eq!(a.eval(&t, &[1, 1]).unwrap(), 0);
        assert_eq!(a.eval(&t, &[1, 0]).unwrap(), 1);
        assert_eq!(a.eval(&Term::Var(0), &[1, 0]).unwrap(), 1);
    }

    #[test]
    fn tuple_index_round_trip() {
        for m in 1..4usize {
            for arity in 0..3usize {
                for (i, tuple) in Tuples::new(m, arity).enumerate() {
                    assert_eq!(tuple_index(&tuple, m), i);
                    assert_eq!(index_tuple(i, arity, m), tuple);
                }
            }
        }
    }

    #[test]
    fn homomorphism_checks() {
        let a = xor_algebra();
        // identity
        assert!(is_homomorphism(&a, &a, &[0, 1]).unwrap());
        // constant 0 (xor is a group under 0)
        assert!(is_homomorphism(&a, &a, &[0, 0]).unwrap());
        // swap is not: f(0 xor 0) = 1 but f(0) xor f(0) = 0
        assert!(!is_homomorphism(&a, &a, &[1, 0]).unwrap());
    }

    #[test]
    fn enumerate_counts() {
        let binary = Signature::from_ops(&[("f", 2)]).unwrap();
        assert_eq!(algebra_count(&binary, 2), 16);
        assert_eq!(enumerate_algebras(&binary, 2).unwrap().count(), 16);

        let constant = Signature::from_ops(&[("c", 0)]).unwrap();
        assert_eq!(enumerate_algebras(&constant, 3).unwrap().count(), 3);

        let empty = Signature::new();
        assert_eq!(enumerate_algebras(&empty, 5).unwrap().count(), 1);
    }

    #[test]
    fn enumerate_rejects_empty_carrier_with_constant() {
        let constant = Signature::from_ops(&[("c", 0)]).unwrap();
        assert!(enumerate_algebras(&constant, 0).is_err());
    }

    #[test]
    fn enumerate_is_duplicate_free_and_deterministic() {
        let binary = Signature::from_ops(&[("f", 2)]).unwrap();
        let first: Vec<_> = enumerate_algebras(&binary, 2).unwrap().collect();
        let second: Vec<_> = enumerate_algebras(&binary, 2).unwrap().collect();
        assert_eq!(first, second);
        let mut seen = std::collections::HashSet::new();
        for a in &first {
            assert!(seen.insert(a.tables().to_vec()));
        }
    }

    #[test]
    fn em_laws_on_xor() {
        assert!(em_laws_hold(&xor_algebra(), 2));
    }

    #[test]
    fn em_laws_all_binary_algebras() {
        let binary = Signature::from_ops(&[("f", 2)]).unwrap();
        for a in enumerate_algebras(&binary, 2).unwrap() {
            assert!(em_laws_hold(&a, 2));
        }
    }

    #[test]
    fn em_laws_catch_corrupted_alpha() {
        let a = xor_algebra();
        let taut = tautological_assignment(2);
        let mut bad_alpha = |t: &Term| {
            let v = a.eval_unchecked(t, &taut);
            if t.depth() == 1 {
                1 - v // corrupt depth-1 results
            } else {
                v
            }
        };
        assert!(!em_laws_hold_with(&a, &mut bad_alpha, 2));
    }

    #[test]
    fn eval_subst_compat_small_sweep() {
        let a = xor_algebra();
        let terms = enumerate_terms(a.signature(), Context::new(2), 2);
        for t in &terms {
            for env_pair in [
                [Term::Var(1), Term::Var(0)],
                [terms[2].clone(), Term::Var(0)],
            ] {
                for x in assignments(2, 2) {
                    assert!(eval_subst_compatible(&a, t, &env_pair, &x).unwrap());
                }
            }
        }
    }

    #[test]
    fn isomorphism_invariance() {
        let sig = Signature::from_ops(&[("f", 2)]).unwrap();
        // and/or tables on {0,1} are isomorphic by swapping
        let and = FiniteAlgebra::new(sig.clone(), 2, vec![vec![0, 0, 0, 1]]).unwrap();
        let or = FiniteAlgebra::new(sig.clone(), 2, vec![vec![0, 1, 1, 1]]).unwrap();
        assert!(are_isomorphic(&and, &or).unwrap());
        let xor = xor_algebra();
        let xor_as_f = FiniteAlgebra::new(sig, 2, vec![vec![0, 1, 1, 0]]).unwrap();
        assert!(!are_isomorphic(&and, &xor_as_f).unwrap());
        let _ = xor;
    }
}
