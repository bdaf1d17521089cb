//! Categories presented by generators and relations: a quiver of
//! generating edges plus parallel-path relations.
//!
//! Hom-sets of the free category on a quiver are path sets, infinite as
//! soon as the quiver has a cycle, so every operation takes an explicit
//! length bound. The quotient by the relations is computed as a congruence
//! on the bounded path universe, closed under pre- and post-composition
//! with generating edges inside the bound; merges blocked by the bound are
//! reported, never guessed.
//!
//! Functors into finite sets play the role of models: [`check_functor`]
//! accepts exactly the assignments under which both sides of every
//! relation compose to the same function.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::signature::Tuples;

/// A directed multigraph on a finite ordered set of named objects.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Quiver {
    objects: Vec<String>,
    edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

impl Quiver {
    pub fn new() -> Self {
        Quiver::default()
    }

    pub fn add_object(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        if self.objects.contains(&name) {
            return Err(Error::DuplicateSymbol {
                name,
                arity: 0,
            });
        }
        self.objects.push(name);
        Ok(self.objects.len() - 1)
    }

    pub fn add_edge(
        &mut self,
        name: impl Into<String>,
        source: &str,
        target: &str,
    ) -> Result<usize> {
        let name = name.into();
        if self.edges.iter().any(|e| e.name == name) {
            return Err(Error::DuplicateSymbol { name, arity: 1 });
        }
        let source = self.object_index(source)?;
        let target = self.object_index(target)?;
        self.edges.push(Edge {
            name,
            source,
            target,
        });
        Ok(self.edges.len() - 1)
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| Error::UnknownObject {
                name: name.to_string(),
            })
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

/// A composable chain of edges; the empty chain is the identity at its
/// source object.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: usize,
    target: usize,
    edges: Vec<usize>,
}

impl Path {
    pub fn identity(object: usize) -> Self {
        Path {
            source: object,
            target: object,
            edges: Vec::new(),
        }
    }

    /// A path from explicit edges, checked for composability.
    pub fn from_edges(quiver: &Quiver, edges: Vec<usize>, start: usize) -> Result<Self> {
        let mut at = start;
        for &e in &edges {
            let edge = &quiver.edges()[e];
            if edge.source != at {
                return Err(Error::PathMismatch {
                    detail: format!(
                        "edge {} starts at {} but the path is at {}",
                        edge.name,
                        quiver.objects()[edge.source],
                        quiver.objects()[at]
                    ),
                });
            }
            at = edge.target;
        }
        Ok(Path {
            source: start,
            target: at,
            edges,
        })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Path) -> Result<Path> {
        if self.target != other.source {
            return Err(Error::PathMismatch {
                detail: "paths do not compose".into(),
            });
        }
        let mut edges = self.edges.clone();
        edges.extend(&other.edges);
        Ok(Path {
            source: self.source,
            target: other.target,
            edges,
        })
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.edges.is_empty() {
            format!("id({})", quiver.objects()[self.source])
        } else {
            self.edges
                .iter()
                .map(|&e| quiver.edges()[e].name.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

/// A relation between two parallel paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathRelation {
    pub label: Option<String>,
    pub lhs: Path,
    pub rhs: Path,
}

/// A quiver together with parallel-path relations: a presentation of a
/// category by generators and relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryPresentation {
    quiver: Quiver,
    relations: Vec<PathRelation>,
}

impl CategoryPresentation {
    pub fn new(quiver: Quiver, relations: Vec<PathRelation>) -> Result<Self> {
        for rel in &relations {
            if rel.lhs.source() != rel.rhs.source() || rel.lhs.target() != rel.rhs.target() {
                return Err(Error::PathMismatch {
                    detail: format!(
                        "relation {} does not relate parallel paths",
                        rel.label.as_deref().unwrap_or("<unnamed>")
                    ),
                });
            }
        }
        Ok(CategoryPresentation { quiver, relations })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[PathRelation] {
        &self.relations
    }
}

/// All paths `x → y` of length at most `max_len`, ordered by length and
/// then lexicographically in edge indices. Includes the identity when
/// `x == y`.
pub fn free_hom(quiver: &Quiver, x: usize, y: usize, max_len: usize) -> Vec<Path> {
    all_paths(quiver, max_len)
        .into_iter()
        .filter(|p| p.source() == x && p.target() == y)
        .collect()
}

/// Every path of length at most `max_len`, by length then lexicographic.
pub fn all_paths(quiver: &Quiver, max_len: usize) -> Vec<Path> {
    let mut all: Vec<Path> = (0..quiver.objects().len()).map(Path::identity).collect();
    let mut level: Vec<Path> = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for path in &level {
            for (ei, edge) in quiver.edges().iter().enumerate() {
                if edge.source == path.target() {
                    let mut edges = path.edges().to_vec();
                    edges.push(ei);
                    next.push(Path {
                        source: path.source(),
                        target: edge.target,
                        edges,
                    });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

/// The quotient of a bounded hom-set by the relation congruence.
#[derive(Debug, Clone)]
pub struct QuotientHom {
    /// Path classes, each sorted shortest-then-lexicographic; classes
    /// ordered by their representative.
    pub classes: Vec<Vec<Path>>,
    /// Some merge was blocked by the length bound, so distinct classes
    /// are not certified distinct.
    pub length_bound_hit: bool,
    /// Pairs of class indices left unresolved by the bound.
    pub unresolved: Vec<(usize, usize)>,
}

impl QuotientHom {
    pub fn representatives(&self) -> Vec<&Path> {
        self.classes.iter().map(|c| &c[0]).collect()
    }
}

struct PathUnionFind {
    parent: Vec<usize>,
}

impl PathUnionFind {
    fn new(n: usize) -> Self {
        PathUnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            let grand = self.parent[self.parent[i]];
            self.parent[i] = grand;
            i = grand;
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Path-class representatives for hom(x, y) under the relation congruence
/// restricted to paths of length `<= max_len`, with a budget on the size
/// of the path universe.
pub fn quotient_hom(
    cp: &CategoryPresentation,
    x: usize,
    y: usize,
    max_len: usize,
    universe_cap: usize,
) -> Result<QuotientHom> {
    let quiver = cp.quiver();
    let universe = all_paths(quiver, max_len);
    if universe.len() > universe_cap {
        return Err(Error::BudgetExceeded {
            what: "path universe".into(),
            limit: universe_cap,
        });
    }
    let index: HashMap<&Path, usize> = universe.iter().zip(0..).collect();
    let mut uf = PathUnionFind::new(universe.len());
    let mut bound_hit = false;

    // seed with the relations
    let mut worklist: Vec<(usize, usize)> = Vec::new();
    for rel in cp.relations() {
        match (index.get(&rel.lhs), index.get(&rel.rhs)) {
            (Some(&a), Some(&b)) => {
                if uf.union(a, b) {
                    worklist.push((a, b));
                }
            }
            _ => bound_hit = true,
        }
    }

    // close under pre/post-composition with generating edges
    while let Some((a, b)) = worklist.pop() {
        let pa = universe[a].clone();
        let pb = universe[b].clone();
        for (ei, edge) in quiver.edges().iter().enumerate() {
            // pre-compose: e . p
            if edge.target == pa.source() {
                let ea = Path::from_edges(
                    quiver,
                    std::iter::once(ei).chain(pa.edges().iter().copied()).collect(),
                    edge.source,
                )
                .expect("composable by construction");
                let eb = Path::from_edges(
                    quiver,
                    std::iter::once(ei).chain(pb.edges().iter().copied()).collect(),
                    edge.source,
                )
                .expect("composable by construction");
                match (index.get(&ea), index.get(&eb)) {
                    (Some(&ia), Some(&ib)) => {
                        if uf.union(ia, ib) {
                            worklist.push((ia, ib));
                        }
                    }
                    _ => bound_hit = true,
                }
            }
            // post-compose: p . e
            if edge.source == pa.target() {
                let ae = Path::from_edges(
                    quiver,
                    pa.edges().iter().copied().chain(std::iter::once(ei)).collect(),
                    pa.source(),
                )
                .expect("composable by construction");
                let be = Path::from_edges(
                    quiver,
                    pb.edges().iter().copied().chain(std::iter::once(ei)).collect(),
                    pb.source(),
                )
                .expect("composable by construction");
                match (index.get(&ae), index.get(&be)) {
                    (Some(&ia), Some(&ib)) => {
                        if uf.union(ia, ib) {
                            worklist.push((ia, ib));
                        }
                    }
                    _ => bound_hit = true,
                }
            }
        }
    }

    // collect classes restricted to hom(x, y)
    let mut class_of: HashMap<usize, usize> = HashMap::new();
    let mut classes: Vec<Vec<Path>> = Vec::new();
    for (i, path) in universe.iter().enumerate() {
        if path.source() != x || path.target() != y {
            continue;
        }
        let root = uf.find(i);
        match class_of.get(&root) {
            Some(&c) => classes[c].push(path.clone()),
            None => {
                class_of.insert(root, classes.len());
                classes.push(vec![path.clone()]);
            }
        }
    }
    for class in &mut classes {
        class.sort_by_key(|p| (p.len(), p.edges().to_vec()));
    }
    classes.sort_by_key(|c| (c[0].len(), c[0].edges().to_vec()));

    let unresolved = if bound_hit {
        (0..classes.len())
            .tuple_combinations()
            .map(|(i, j)| (i, j))
            .collect()
    } else {
        Vec::new()
    };

    Ok(QuotientHom {
        classes,
        length_bound_hit: bound_hit,
        unresolved,
    })
}

/// A functor from the free category into finite sets, given on generators:
/// a finite set per object (by size) and a function table per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFunctorData {
    /// size of the set assigned to each object
    pub object_sets: Vec<usize>,
    /// per edge, a table mapping each element of the source set
    pub edge_maps: Vec<Vec<usize>>,
}

impl SetFunctorData {
    pub fn validate(&self, quiver: &Quiver) -> Result<()> {
        if self.object_sets.len() != quiver.objects().len() {
            return Err(Error::FunctorMismatch {
                detail: format!(
                    "{} object sets for {} objects",
                    self.object_sets.len(),
                    quiver.objects().len()
                ),
            });
        }
        if self.edge_maps.len() != quiver.edges().len() {
            return Err(Error::FunctorMismatch {
                detail: format!(
                    "{} edge maps for {} edges",
                    self.edge_maps.len(),
                    quiver.edges().len()
                ),
            });
        }
        for (edge, map) in quiver.edges().iter().zip(&self.edge_maps) {
            let src = self.object_sets[edge.source];
            let tgt = self.object_sets[edge.target];
            if map.len() != src {
                return Err(Error::FunctorMismatch {
                    detail: format!("map for edge {} has {} entries, need {src}", edge.name, map.len()),
                });
            }
            if let Some(&v) = map.iter().find(|&&v| v >= tgt) {
                return Err(Error::FunctorMismatch {
                    detail: format!("map for edge {} hits {v} outside a set of size {tgt}", edge.name),
                });
            }
        }
        Ok(())
    }

    /// The function a path composes to, as a table over the source set.
    pub fn eval_path(&self, path: &Path) -> Vec<usize> {
        let mut table: Vec<usize> = (0..self.object_sets[path.source()]).collect();
        for &e in path.edges() {
            let map = &self.edge_maps[e];
            table = table.into_iter().map(|v| map[v]).collect();
        }
        table
    }
}

/// Does the functor data satisfy every relation pointwise? This is model
/// satisfaction in the generators-and-relations regime. `max_len` drives
/// an extra consistency sweep: on the already-resolved quotient classes up
/// to that length, evaluation must be constant on each class (it always
/// is when the relations hold; a violation would signal an engine fault).
pub fn check_functor(
    cp: &CategoryPresentation,
    data: &SetFunctorData,
    max_len: usize,
) -> Result<bool> {
    data.validate(cp.quiver())?;
    for rel in cp.relations() {
        if data.eval_path(&rel.lhs) != data.eval_path(&rel.rhs) {
            return Ok(false);
        }
    }
    // sanity sweep: evaluation is constant on resolved congruence classes
    let objects = cp.quiver().objects().len();
    for x in 0..objects {
        for y in 0..objects {
            let quotient = quotient_hom(cp, x, y, max_len, 100_000)?;
            for class in &quotient.classes {
                let reference = data.eval_path(&class[0]);
                debug_assert!(
                    class.iter().all(|p| data.eval_path(p) == reference),
                    "evaluation must be constant on congruence classes"
                );
            }
        }
    }
    Ok(true)
}

/// Every functor-data assignment with object sets of size `<= max_size`,
/// in lexicographic order (object sizes outermost, then edge tables).
pub fn enumerate_functor_data(quiver: &Quiver, max_size: usize) -> Vec<SetFunctorData> {
    let mut out = Vec::new();
    for sizes in Tuples::new(max_size + 1, quiver.objects().len()) {
        let tables_per_edge: Vec<Vec<Vec<usize>>> = quiver
            .edges()
            .iter()
            .map(|e| {
                let src = sizes[e.source];
                let tgt = sizes[e.target];
                Tuples::new(tgt, src).collect::<Vec<_>>()
            })
            .collect();
        if tables_per_edge.iter().any(Vec::is_empty) {
            continue; // no function into an empty set from a nonempty one
        }
        if quiver.edges().is_empty() {
            out.push(SetFunctorData {
                object_sets: sizes.clone(),
                edge_maps: Vec::new(),
            });
            continue;
        }
        for combo in tables_per_edge.iter().multi_cartesian_product() {
            out.push(SetFunctorData {
                object_sets: sizes.clone(),
                edge_maps: combo.into_iter().cloned().collect(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow_quiver() -> Quiver {
        let mut q = Quiver::new();
        q.add_object("a").unwrap();
        q.add_object("b").unwrap();
        q.add_edge("f", "a", "b").unwrap();
        q
    }

    fn loop_quiver() -> Quiver {
        let mut q = Quiver::new();
        q.add_object("a").unwrap();
        q.add_edge("e", "a", "a").unwrap();
        q
    }

    pub(crate) fn commuting_square() -> CategoryPresentation {
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
        CategoryPresentation::new(
            q,
            vec![PathRelation {
                label: Some("square".into()),
                lhs: fg,
                rhs: hk,
            }],
        )
        .unwrap()
    }

    #[test]
    fn free_hom_single_edge() {
        let q = arrow_quiver();
        let hom01 = free_hom(&q, 0, 1, 3);
        assert_eq!(hom01.len(), 1);
        assert_eq!(hom01[0].display(&q), "f");
        let hom00 = free_hom(&q, 0, 0, 3);
        assert_eq!(hom00.len(), 1);
        assert_eq!(hom00[0].display(&q), "id(a)");
    }

    #[test]
    fn free_hom_loop_powers() {
        let q = loop_quiver();
        let hom = free_hom(&q, 0, 0, 3);
        assert_eq!(hom.len(), 4); // id, e, ee, eee
        assert_eq!(hom[3].len(), 3);
    }

    #[test]
    fn free_hom_commuting_square() {
        let cp = commuting_square();
        let hom = free_hom(cp.quiver(), 0, 3, 2);
        assert_eq!(hom.len(), 2); // f.g and h.k
    }

    #[test]
    fn quotient_square_merges_diagonal() {
        let cp = commuting_square();
        let q = quotient_hom(&cp, 0, 3, 2, 10_000).unwrap();
        assert_eq!(q.classes.len(), 1);
        assert!(!q.length_bound_hit);
        assert!(q.unresolved.is_empty());
    }

    #[test]
    fn quotient_involution_has_two_classes() {
        let q = loop_quiver();
        let ee = Path::from_edges(&q, vec![0, 0], 0).unwrap();
        let cp = CategoryPresentation::new(
            q,
            vec![PathRelation {
                label: Some("inv".into()),
                lhs: ee,
                rhs: Path::identity(0),
            }],
        )
        .unwrap();
        let quotient = quotient_hom(&cp, 0, 0, 3, 10_000).unwrap();
        assert_eq!(quotient.classes.len(), 2);
        let reps: Vec<String> = quotient
            .representatives()
            .iter()
            .map(|p| p.display(cp.quiver()))
            .collect();
        assert_eq!(reps, vec!["id(a)", "e"]);
    }

    #[test]
    fn quotient_no_relations_is_free() {
        let q = commuting_square();
        let free = free_hom(q.quiver(), 0, 3, 2);
        let cp = CategoryPresentation::new(q.quiver().clone(), vec![]).unwrap();
        let quotient = quotient_hom(&cp, 0, 3, 2, 10_000).unwrap();
        assert_eq!(quotient.classes.len(), free.len());
    }

    #[test]
    fn functor_checks_on_square() {
        let cp = commuting_square();
        let identity_all = SetFunctorData {
            object_sets: vec![2, 2, 2, 2],
            edge_maps: vec![vec![0, 1]; 4],
        };
        assert!(check_functor(&cp, &identity_all, 2).unwrap());
        let k_swap = SetFunctorData {
            object_sets: vec![2, 2, 2, 2],
            edge_maps: vec![vec![0, 1], vec![0, 1], vec![0, 1], vec![1, 0]],
        };
        assert!(!check_functor(&cp, &k_swap, 2).unwrap());
    }

    #[test]
    fn functor_swap_is_involution() {
        let q = loop_quiver();
        let ee = Path::from_edges(&q, vec![0, 0], 0).unwrap();
        let cp = CategoryPresentation::new(
            q,
            vec![PathRelation {
                label: Some("inv".into()),
                lhs: ee,
                rhs: Path::identity(0),
            }],
        )
        .unwrap();
        let swap = SetFunctorData {
            object_sets: vec![2],
            edge_maps: vec![vec![1, 0]],
        };
        assert!(check_functor(&cp, &swap, 3).unwrap());
        let collapse = SetFunctorData {
            object_sets: vec![2],
            edge_maps: vec![vec![0, 0]],
        };
        assert!(!check_functor(&cp, &collapse, 3).unwrap());
    }

    #[test]
    fn quotient_count_invariant_under_renaming() {
        let cp = commuting_square();
        // same shape with different names
        let mut q = Quiver::new();
        for name in ["w", "x", "y", "z"] {
            q.add_object(name).unwrap();
        }
        q.add_edge("p", "w", "x").unwrap();
        q.add_edge("q", "x", "z").unwrap();
        q.add_edge("r", "w", "y").unwrap();
        q.add_edge("s", "y", "z").unwrap();
        let pq = Path::from_edges(&q, vec![0, 1], 0).unwrap();
        let rs = Path::from_edges(&q, vec![2, 3], 0).unwrap();
        let renamed = CategoryPresentation::new(
            q,
            vec![PathRelation {
                label: None,
                lhs: pq,
                rhs: rs,
            }],
        )
        .unwrap();
        let a = quotient_hom(&cp, 0, 3, 2, 10_000).unwrap();
        let b = quotient_hom(&renamed, 0, 3, 2, 10_000).unwrap();
        assert_eq!(a.classes.len(), b.classes.len());
    }
}
