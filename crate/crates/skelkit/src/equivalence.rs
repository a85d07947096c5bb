//! Structural equivalence of vertex pairs and the canonical partition of the
//! vertex set into equivalence classes.
//!
//! Two vertices are structurally equivalent when swapping just the two of
//! them is an automorphism. [`is_transposition_automorphism`] tests that
//! directly on the edge set and serves as the brute-force oracle;
//! [`are_structurally_equivalent`] is the fast twin test (equal closed
//! neighborhoods for adjacent pairs, equal open neighborhoods otherwise).
//! The two agree on every simple graph, which the test suite checks rather
//! than assumes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// What a class of size >= 2 induces in the graph: every such class is either
/// a clique (adjacent "true twins") or an independent set (non-adjacent
/// "false twins"), never a mix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassKind {
    #[serde(rename = "clique")]
    ConnectedClique,
    #[serde(rename = "independent")]
    DisconnectedIndependent,
    #[serde(rename = "singleton")]
    Singleton,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivClass {
    members: Vec<usize>,
    kind: ClassKind,
}

impl EquivClass {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }
}

/// The structural-equivalence classes of a graph, ordered by descending size
/// with ties broken by smallest member id. The ordering fixes a deterministic
/// choice of largest and second-largest class downstream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    classes: Vec<EquivClass>,
}

impl Partition {
    pub fn classes(&self) -> &[EquivClass] {
        &self.classes
    }

    /// Number of classes.
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    /// Class sizes in the canonical (descending) order.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(EquivClass::size).collect()
    }

    /// Index of the class containing `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.members.binary_search(&v).is_ok())
            .expect("vertex not covered by partition")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&serde_json::json!({ "classes": self.classes }))
            .expect("partition serializes")
    }
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    if u == v {
        return Err(Error::Argument(format!(
            "structural equivalence needs two distinct vertices, got {u} twice"
        )));
    }
    let n = g.n();
    if u >= n || v >= n {
        return Err(Error::Argument(format!(
            "vertex pair ({u}, {v}) out of range for {n} vertices"
        )));
    }
    Ok(())
}

/// True iff applying the swap `u <-> v` to every edge maps the edge set onto
/// itself exactly. This is the definition, checked by brute force.
pub fn is_transposition_automorphism(g: &Graph, u: usize, v: usize) -> Result<bool> {
    check_pair(g, u, v)?;
    let swap = |x: usize| {
        if x == u {
            v
        } else if x == v {
            u
        } else {
            x
        }
    };
    Ok(g.edges().iter().all(|&(a, b)| g.has_edge(swap(a), swap(b))))
}

/// The twin test: adjacent pairs compare closed neighborhoods, non-adjacent
/// pairs compare open neighborhoods. Distances between equivalent vertices
/// never exceed 2, so the first neighborhood decides everything.
pub fn are_structurally_equivalent(g: &Graph, u: usize, v: usize) -> Result<bool> {
    check_pair(g, u, v)?;
    Ok(twins_unchecked(g, u, v))
}

fn twins_unchecked(g: &Graph, u: usize, v: usize) -> bool {
    let nu = g.neighbors(u);
    let nv = g.neighbors(v);
    if g.has_edge(u, v) {
        nu.iter()
            .filter(|&&x| x != v)
            .eq(nv.iter().filter(|&&x| x != u))
    } else {
        nu == nv
    }
}

/// Partitions the vertex set into structural-equivalence classes.
///
/// Classes are grown by pairwise union; the builder then re-verifies every
/// within-class pair against the pairwise predicate and panics if the
/// relation ever failed to be transitive (it cannot, for the twin relation
/// on a simple graph). Class kinds are likewise verified: a class of size
/// >= 2 must induce a clique or an independent set.
pub fn equivalence_classes(g: &Graph) -> Partition {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();

    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }

    for u in 0..n {
        for v in (u + 1)..n {
            if twins_unchecked(g, u, v) {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru] = rv;
                }
            }
        }
    }

    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        let root = find(&mut parent, v);
        groups.entry(root).or_default().push(v);
    }

    let mut classes: Vec<EquivClass> = groups
        .into_values()
        .map(|members| {
            let kind = classify(g, &members);
            EquivClass { members, kind }
        })
        .collect();
    classes.sort_by_key(|c| (std::cmp::Reverse(c.size()), c.members[0]));
    Partition { classes }
}

fn classify(g: &Graph, members: &[usize]) -> ClassKind {
    if members.len() == 1 {
        return ClassKind::Singleton;
    }
    let adjacent = g.has_edge(members[0], members[1]);
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            assert!(
                twins_unchecked(g, u, v),
                "twin relation failed transitivity on pair ({u}, {v})"
            );
            assert_eq!(
                g.has_edge(u, v),
                adjacent,
                "equivalence class mixes adjacent and non-adjacent pairs"
            );
        }
    }
    if adjacent {
        ClassKind::ConnectedClique
    } else {
        ClassKind::DisconnectedIndependent
    }
}
