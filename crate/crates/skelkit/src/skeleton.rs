//! Complete skeletons: the minimal super-node reconfiguration of a graph in
//! which every node is a complete induced subgraph and every edge is a
//! complete join, plus the conflation operation, the structure graph, and
//! reconstruction back to an ordinary graph.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::equivalence::{equivalence_classes, ClassKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A super-node: `size` vertices of the original graph forming a clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkeletonNode {
    size: usize,
    members: Vec<usize>,
}

impl SkeletonNode {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }
}

/// A super-node graph. Node identity is positional after the canonical sort
/// by (descending size, smallest member); member lists keep the original
/// vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skeleton {
    nodes: Vec<SkeletonNode>,
    edges: BTreeSet<(usize, usize)>,
}

impl Skeleton {
    fn canonicalize(mut nodes: Vec<SkeletonNode>, edges: BTreeSet<(usize, usize)>) -> Skeleton {
        let mut order: Vec<usize> = (0..nodes.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(nodes[i].size), nodes[i].members[0]));
        let mut rank = vec![0; nodes.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let edges = edges
            .into_iter()
            .map(|(a, b)| {
                let (a, b) = (rank[a], rank[b]);
                (a.min(b), a.max(b))
            })
            .collect();
        let mut sorted = Vec::with_capacity(nodes.len());
        for &old in &order {
            sorted.push(std::mem::replace(
                &mut nodes[old],
                SkeletonNode {
                    size: 0,
                    members: Vec::new(),
                },
            ));
        }
        Skeleton {
            nodes: sorted,
            edges,
        }
    }

    pub fn nodes(&self) -> &[SkeletonNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Node sizes in canonical order.
    pub fn sizes(&self) -> Vec<usize> {
        self.nodes.iter().map(SkeletonNode::size).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    fn node_neighbors(&self, a: usize) -> BTreeSet<usize> {
        self.edges
            .iter()
            .filter_map(|&(x, y)| {
                if x == a {
                    Some(y)
                } else if y == a {
                    Some(x)
                } else {
                    None
                }
            })
            .collect()
    }

    /// The skeleton read as a plain graph: one vertex per node.
    pub fn structure(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        Graph::from_edges(self.nodes.len(), &edges).expect("skeleton edges are simple")
    }

    /// Adjacent node pairs with identical neighborhoods apart from each
    /// other, i.e. the pairs [`conflate`] accepts.
    pub fn conflatable_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            let mut na = self.node_neighbors(a);
            na.remove(&b);
            let mut nb = self.node_neighbors(b);
            nb.remove(&a);
            if na == nb {
                out.push((a, b));
            }
        }
        out
    }

    /// Builds a skeleton with the given structure and node sizes: structure
    /// vertex `i` becomes a node of `sizes[i]` vertices, with member ids
    /// assigned consecutively node by node, exactly the ids [`reconstruct`]
    /// expands to. The structure must not admit any conflation, i.e. it must
    /// pass [`is_skeleton_structure`].
    pub fn from_structure(structure: &Graph, sizes: &[usize]) -> Result<Skeleton> {
        if sizes.len() != structure.n() {
            return Err(Error::Argument(format!(
                "{} sizes given for a structure on {} vertices",
                sizes.len(),
                structure.n()
            )));
        }
        if sizes.contains(&0) {
            return Err(Error::Argument("node sizes must be positive".into()));
        }
        if !is_skeleton_structure(structure) {
            return Err(Error::Argument(
                "structure has an adjacent twin pair, so the skeleton would not be minimal".into(),
            ));
        }
        let mut nodes = Vec::with_capacity(sizes.len());
        let mut next = 0;
        for &size in sizes {
            nodes.push(SkeletonNode {
                size,
                members: (next..next + size).collect(),
            });
            next += size;
        }
        let edges = structure.edges().into_iter().collect();
        Ok(Skeleton::canonicalize(nodes, edges))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("skeleton serializes")
    }

    pub fn to_dot(&self) -> String {
        let labels: Vec<String> = self.nodes.iter().map(|n| format!("K_{}", n.size)).collect();
        crate::format::dot_labelled("skeleton", &labels, &self.edges)
    }
}

/// Builds the complete skeleton directly from the equivalence classes: one
/// node per clique class and per singleton, while each member of an
/// independent class of false twins stays a node of its own (non-adjacent
/// nodes can never merge, since conflation requires an edge).
pub fn complete_skeleton(g: &Graph) -> Skeleton {
    let partition = equivalence_classes(g);
    let mut nodes: Vec<SkeletonNode> = Vec::new();
    for class in partition.classes() {
        match class.kind() {
            ClassKind::ConnectedClique | ClassKind::Singleton => nodes.push(SkeletonNode {
                size: class.size(),
                members: class.members().to_vec(),
            }),
            ClassKind::DisconnectedIndependent => {
                for &v in class.members() {
                    nodes.push(SkeletonNode {
                        size: 1,
                        members: vec![v],
                    });
                }
            }
        }
    }

    let mut edges = BTreeSet::new();
    for a in 0..nodes.len() {
        for b in (a + 1)..nodes.len() {
            let cross = nodes[a]
                .members
                .iter()
                .flat_map(|&u| nodes[b].members.iter().map(move |&v| (u, v)))
                .filter(|&(u, v)| g.has_edge(u, v))
                .count();
            let full = nodes[a].size * nodes[b].size;
            if cross == full {
                edges.insert((a, b));
            } else {
                assert_eq!(
                    cross, 0,
                    "two skeleton nodes are neither completely joined nor disjoint"
                );
            }
        }
    }
    Skeleton::canonicalize(nodes, edges)
}

/// Merges two adjacent nodes whose neighborhoods agree apart from each
/// other. The merged node takes the shared neighborhood; the edge between
/// the two disappears.
pub fn conflate(skel: &Skeleton, a: usize, b: usize) -> Result<Skeleton> {
    let count = skel.node_count();
    if a >= count || b >= count || a == b {
        return Err(Error::Argument(format!(
            "conflation needs two distinct node indices below {count}"
        )));
    }
    if !skel.has_edge(a, b) {
        return Err(Error::Conflation {
            a,
            b,
            reason: "the nodes are not adjacent".into(),
        });
    }
    let mut na = skel.node_neighbors(a);
    na.remove(&b);
    let mut nb = skel.node_neighbors(b);
    nb.remove(&a);
    if na != nb {
        let differing = na.symmetric_difference(&nb).next().copied().unwrap();
        return Err(Error::Conflation {
            a,
            b,
            reason: format!("node {differing} neighbors exactly one of them"),
        });
    }

    let (lo, hi) = (a.min(b), a.max(b));
    let mut members = skel.nodes[lo].members.clone();
    members.extend_from_slice(&skel.nodes[hi].members);
    members.sort_unstable();
    let merged = SkeletonNode {
        size: members.len(),
        members,
    };

    // Rebuild with `hi` removed and `lo` replaced by the merged node.
    let remap = |i: usize| if i > hi { i - 1 } else { i };
    let mut nodes: Vec<SkeletonNode> = Vec::with_capacity(count - 1);
    for (i, node) in skel.nodes.iter().enumerate() {
        if i == hi {
            continue;
        }
        nodes.push(if i == lo {
            merged.clone()
        } else {
            node.clone()
        });
    }
    let mut edges = BTreeSet::new();
    for &(x, y) in &skel.edges {
        if (x, y) == (lo, hi) {
            continue;
        }
        let x = remap(if x == hi { lo } else { x });
        let y = remap(if y == hi { lo } else { y });
        if x != y {
            edges.insert((x.min(y), x.max(y)));
        }
    }
    Ok(Skeleton::canonicalize(nodes, edges))
}

/// The trivial reconfiguration: every vertex its own size-1 node.
pub fn trivial_reconfiguration(g: &Graph) -> Skeleton {
    let nodes = g
        .vertices()
        .map(|v| SkeletonNode {
            size: 1,
            members: vec![v],
        })
        .collect();
    let edges = g.edges().into_iter().collect();
    Skeleton::canonicalize(nodes, edges)
}

/// Alternative construction of the complete skeleton: start from the trivial
/// reconfiguration and conflate until no pair qualifies. Agrees with
/// [`complete_skeleton`] regardless of conflation order; the test suite
/// exercises random orders rather than assuming confluence.
pub fn skeleton_by_fixed_point(g: &Graph) -> Skeleton {
    let mut skel = trivial_reconfiguration(g);
    while let Some(&(a, b)) = skel.conflatable_pairs().first() {
        skel = conflate(&skel, a, b).expect("pair came from conflatable_pairs");
    }
    skel
}

/// True iff the graph can be the structure of a complete skeleton: no
/// adjacent pair may have equal neighborhoods apart from each other.
pub fn is_skeleton_structure(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| {
        let nu: BTreeSet<usize> = g.neighbors(u).iter().copied().filter(|&x| x != v).collect();
        let nv: BTreeSet<usize> = g.neighbors(v).iter().copied().filter(|&x| x != u).collect();
        nu != nv
    })
}

/// The structure graph of the complete skeleton.
pub fn skeleton_structure(g: &Graph) -> Graph {
    complete_skeleton(g).structure()
}

/// Expands a skeleton back to an ordinary graph: each node becomes a clique
/// of its size and each super-edge a complete join. Vertex ids are assigned
/// consecutively node by node, so the result reproduces the original graph
/// up to relabeling.
pub fn reconstruct(skel: &Skeleton) -> Graph {
    let n: usize = skel.nodes.iter().map(SkeletonNode::size).sum();
    let mut ranges = Vec::with_capacity(skel.node_count());
    let mut next = 0;
    for node in &skel.nodes {
        ranges.push(next..next + node.size);
        next += node.size;
    }
    let mut edges = Vec::new();
    for (i, range) in ranges.iter().enumerate() {
        let vs: Vec<usize> = range.clone().collect();
        for (k, &u) in vs.iter().enumerate() {
            for &v in &vs[k + 1..] {
                edges.push((u, v));
            }
        }
        for &(a, b) in &skel.edges {
            if a == i {
                for u in range.clone() {
                    for v in ranges[b].clone() {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    Graph::from_edges(n, &edges).expect("expansion of a valid skeleton is simple")
}
