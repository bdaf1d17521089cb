//! Ground congruence closure over a bounded term universe.
//!
//! Variables are treated as opaque constants, so the closure decides
//! equality of two terms under a finite set of ground equation instances:
//! the smallest equivalence containing the instances and closed under the
//! operations. A merge of the two query terms is a sound `Equal` witness;
//! failure to merge says nothing.

use std::collections::HashMap;

use crate::signature::{OpSymbol, Term};

type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum NodeKey {
    Var(usize),
    App(OpSymbol, Vec<NodeId>),
}

/// Union-find with congruence propagation.
pub struct CongruenceClosure {
    keys: Vec<NodeKey>,
    intern: HashMap<NodeKey, NodeId>,
    parent: Vec<NodeId>,
    // per class representative: nodes with a child in that class
    uses: Vec<Vec<NodeId>>,
    // canonical signature -> representative node
    lookup: HashMap<NodeKey, NodeId>,
    node_cap: usize,
}

impl CongruenceClosure {
    pub fn new(node_cap: usize) -> Self {
        CongruenceClosure {
            keys: Vec::new(),
            intern: HashMap::new(),
            parent: Vec::new(),
            uses: Vec::new(),
            lookup: HashMap::new(),
            node_cap,
        }
    }

    pub fn node_count(&self) -> usize {
        self.keys.len()
    }

    /// Interns a term as a DAG node; `None` once the node cap is reached.
    pub fn add_term(&mut self, term: &Term) -> Option<NodeId> {
        let key = match term {
            Term::Var(i) => NodeKey::Var(*i),
            Term::App(op, args) => {
                let mut ids = Vec::with_capacity(args.len());
                for a in args {
                    ids.push(self.add_term(a)?);
                }
                NodeKey::App(op.clone(), ids)
            }
        };
        if let Some(&id) = self.intern.get(&key) {
            return Some(id);
        }
        if self.keys.len() >= self.node_cap {
            return None;
        }
        let id = self.keys.len();
        self.keys.push(key.clone());
        self.intern.insert(key.clone(), id);
        self.parent.push(id);
        self.uses.push(Vec::new());
        if let NodeKey::App(_, children) = key.clone() {
            // use-lists live on class representatives
            for c in children {
                let rc = self.find(c);
                self.uses[rc].push(id);
            }
        }
        // congruence bookkeeping for the new node
        let canon = self.canonical_key(id);
        if let Some(&other) = self.lookup.get(&canon) {
            self.merge(id, other);
        } else {
            self.lookup.insert(canon, id);
        }
        Some(id)
    }

    fn find(&mut self, mut id: NodeId) -> NodeId {
        while self.parent[id] != id {
            let grand = self.parent[self.parent[id]];
            self.parent[id] = grand;
            id = grand;
        }
        id
    }

    fn canonical_key(&mut self, id: NodeId) -> NodeKey {
        match self.keys[id].clone() {
            NodeKey::Var(i) => NodeKey::Var(i),
            NodeKey::App(op, children) => {
                let canon = children.iter().map(|&c| self.find(c)).collect();
                NodeKey::App(op, canon)
            }
        }
    }

    /// Merges two classes and propagates congruences.
    pub fn merge(&mut self, a: NodeId, b: NodeId) {
        let mut pending = vec![(a, b)];
        while let Some((a, b)) = pending.pop() {
            let ra = self.find(a);
            let rb = self.find(b);
            if ra == rb {
                continue;
            }
            // union by use-list size
            let (small, big) = if self.uses[ra].len() <= self.uses[rb].len() {
                (ra, rb)
            } else {
                (rb, ra)
            };
            self.parent[small] = big;
            let moved = std::mem::take(&mut self.uses[small]);
            for &user in &moved {
                let canon = self.canonical_key(user);
                if let Some(&other) = self.lookup.get(&canon) {
                    if self.find(other) != self.find(user) {
                        pending.push((user, other));
                    }
                } else {
                    self.lookup.insert(canon, user);
                }
            }
            self.uses[big].extend(moved);
        }
    }

    pub fn same_class(&mut self, a: NodeId, b: NodeId) -> bool {
        self.find(a) == self.find(b)
    }
}

/// Outcome of running the closure over a set of ground equation instances.
#[derive(Debug, Clone)]
pub struct ClosureOutcome {
    /// The query terms ended up in one class.
    pub equal: bool,
    /// Equation instances that were seeded, as `(equation index, env)`.
    pub instances: Vec<(usize, Vec<Term>)>,
    /// The instance or node budget cut the universe short.
    pub truncated: bool,
}

/// Seeds the closure with the given ground instances of the presentation's
/// equations and asks whether `t` and `u` merge.
pub fn close_over_instances(
    equations: &[(Term, Term)],
    instances: &[(usize, Vec<Term>)],
    t: &Term,
    u: &Term,
    node_cap: usize,
) -> ClosureOutcome {
    let mut cc = CongruenceClosure::new(node_cap);
    let mut truncated = false;
    let mut seeded = Vec::new();

    let t_id = cc.add_term(t);
    let u_id = cc.add_term(u);
    let (Some(t_id), Some(u_id)) = (t_id, u_id) else {
        return ClosureOutcome {
            equal: false,
            instances: Vec::new(),
            truncated: true,
        };
    };

    for (eq_idx, env) in instances {
        let (lhs, rhs) = &equations[*eq_idx];
        let l = lhs.substitute(env).expect("instance env covers equation context");
        let r = rhs.substitute(env).expect("instance env covers equation context");
        match (cc.add_term(&l), cc.add_term(&r)) {
            (Some(li), Some(ri)) => {
                cc.merge(li, ri);
                seeded.push((*eq_idx, env.clone()));
            }
            _ => {
                truncated = true;
                break;
            }
        }
        if cc.same_class(t_id, u_id) {
            break; // already decided
        }
    }

    ClosureOutcome {
        equal: cc.same_class(t_id, u_id),
        instances: seeded,
        truncated,
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

    #[test]
    fn merges_by_direct_instance() {
        let sig = monoid_sig();
        // equation: mul(e, x0) = x0
        let eqs = vec![(mul(&sig, e(&sig), Term::Var(0)), Term::Var(0))];
        let t = mul(&sig, e(&sig), Term::Var(1));
        let u = Term::Var(1);
        let instances = vec![(0usize, vec![Term::Var(1)])];
        let out = close_over_instances(&eqs, &instances, &t, &u, 1000);
        assert!(out.equal);
        assert!(!out.truncated);
    }

    #[test]
    fn congruence_propagates_through_contexts() {
        let sig = monoid_sig();
        // if a = b then mul(a, c) = mul(b, c) without an explicit instance
        let eqs = vec![(e(&sig), Term::Var(0))]; // e = x0 (degenerate but legal here)
        let t = mul(&sig, e(&sig), Term::Var(2));
        let u = mul(&sig, Term::Var(0), Term::Var(2));
        let instances = vec![(0usize, vec![Term::Var(0)])];
        let out = close_over_instances(&eqs, &instances, &t, &u, 1000);
        assert!(out.equal);
    }

    #[test]
    fn unrelated_terms_stay_distinct() {
        let sig = monoid_sig();
        let eqs = vec![(mul(&sig, e(&sig), Term::Var(0)), Term::Var(0))];
        let t = Term::Var(0);
        let u = Term::Var(1);
        let out = close_over_instances(&eqs, &[], &t, &u, 1000);
        assert!(!out.equal);
    }

    #[test]
    fn node_cap_reports_truncation() {
        let sig = monoid_sig();
        let eqs = vec![(mul(&sig, e(&sig), Term::Var(0)), Term::Var(0))];
        let t = mul(&sig, Term::Var(0), Term::Var(1));
        let u = Term::Var(0);
        let instances = vec![(0usize, vec![t.clone()])];
        let out = close_over_instances(&eqs, &instances, &t, &u, 3);
        assert!(out.truncated);
        assert!(!out.equal);
    }
}
