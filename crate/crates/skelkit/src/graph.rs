//! Simple undirected graphs with contiguous 0-based vertex ids, plus BFS
//! distances, i-th neighborhoods, and the named generators used throughout
//! the crate and its test fixtures.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A simple undirected graph.
///
/// Invariants, enforced at construction: no self-loops, adjacency is
/// symmetric, and every neighbor id lies in `[0, n)`. Graphs are immutable
/// once built; every operation on them is a pure read.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::Argument(format!("self-loop at vertex {u}")));
        }
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::Argument(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Open neighborhood of `v`, sorted.
    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Vertices at BFS distance exactly `i` from `v`; `i = 0` gives `{v}`,
    /// and any `i` past the reachable set gives the empty set.
    pub fn ith_neighborhood(&self, v: usize, i: usize) -> BTreeSet<usize> {
        assert!(v < self.n(), "vertex {v} out of range");
        let dist = self.bfs(v);
        self.vertices().filter(|&u| dist[u] == Some(i)).collect()
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs BFS distances.
    pub fn distance_table(&self) -> DistanceTable {
        DistanceTable {
            d: self.vertices().map(|v| self.bfs(v)).collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut g = Graph::empty(self.n());
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        g
    }
}

/// All-pairs distances; `None` marks an unreachable pair so disconnected
/// graphs need no sentinel values.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    d: Vec<Vec<Option<usize>>>,
}

impl DistanceTable {
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.d[u][v]
    }

    /// Largest finite distance (0 for an empty or edgeless graph).
    pub fn diameter(&self) -> usize {
        self.d
            .iter()
            .flatten()
            .filter_map(|d| *d)
            .max()
            .unwrap_or(0)
    }
}

/// The complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
    }
    g
}

/// The path 0 - 1 - ... - (n-1).
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 1..n {
        g.adj[u - 1].insert(u);
        g.adj[u].insert(u - 1);
    }
    g
}

/// The cycle on `n` vertices. For `n <= 2` there is no simple cycle; `n = 2`
/// degenerates to a single edge and smaller values to edgeless graphs.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.adj[0].insert(n - 1);
        g.adj[n - 1].insert(0);
    }
    g
}

/// The star with center 0 and `k` leaves.
pub fn star(k: usize) -> Graph {
    let mut g = Graph::empty(k + 1);
    for leaf in 1..=k {
        g.adj[0].insert(leaf);
        g.adj[leaf].insert(0);
    }
    g
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..(a + b) {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
    }
    g
}

/// Disjoint union; vertex ids of later parts are shifted up.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::n).sum();
    let mut g = Graph::empty(n);
    let mut offset = 0;
    for part in parts {
        for (u, v) in part.edges() {
            g.adj[offset + u].insert(offset + v);
            g.adj[offset + v].insert(offset + u);
        }
        offset += part.n();
    }
    g
}

/// The pineapple graph: `complete(n)` with `q` pendant vertices, all attached
/// to the single distinguished vertex 0. `pineapple(4, 2)` has three mutually
/// interchangeable clique vertices, two interchangeable pendants, and the
/// apex on its own.
pub fn pineapple(n: usize, q: usize) -> Graph {
    let mut g = disjoint_union(&[complete(n), Graph::empty(q)]);
    if n > 0 {
        for pendant in n..(n + q) {
            g.adj[0].insert(pendant);
            g.adj[pendant].insert(0);
        }
    }
    g
}

/// Six-vertex fixture whose only nontrivial transposition swaps vertices
/// 2 and 3: a near-complete core {1, 2, 3, 4} with pendant-ish vertices 0
/// and 5 attached at opposite ends.
pub fn figure2_graph() -> Graph {
    Graph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 5),
        ],
    )
    .expect("fixture edges are valid")
}

/// Eight-vertex fixture: two disjoint triangles {0,1,2} and {3,4,5}, plus two
/// non-adjacent hubs 6 and 7 each joined to all six triangle vertices. Its
/// complete skeleton is a 4-cycle with node sizes 3, 3, 1, 1.
pub fn figure3_graph() -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)];
    for hub in [6, 7] {
        for t in 0..6 {
            edges.push((t, hub));
        }
    }
    Graph::from_edges(8, &edges).expect("fixture edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_self_loops_and_range() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2); // duplicate collapsed
    }

    #[test]
    fn adjacency_is_symmetric_and_loop_free() {
        for g in [pineapple(4, 2), figure2_graph(), figure3_graph(), cycle(5)] {
            for u in g.vertices() {
                assert!(!g.has_edge(u, u));
                for &v in g.neighbors(u) {
                    assert!(g.has_edge(v, u));
                }
            }
        }
    }

    #[test]
    fn ith_neighborhood_on_paths_and_cliques() {
        let p3 = path(3);
        assert_eq!(p3.ith_neighborhood(1, 1), BTreeSet::from([0, 2]));
        assert_eq!(p3.ith_neighborhood(0, 2), BTreeSet::from([2]));
        assert_eq!(p3.ith_neighborhood(0, 0), BTreeSet::from([0]));
        let k4 = complete(4);
        assert!(k4.ith_neighborhood(0, 2).is_empty());
    }

    #[test]
    fn neighborhoods_partition_reachable_set() {
        for g in [figure2_graph(), disjoint_union(&[path(3), complete(3)])] {
            let dt = g.distance_table();
            for v in g.vertices() {
                let mut seen = BTreeSet::new();
                for i in 0..=dt.diameter() {
                    for u in g.ith_neighborhood(v, i) {
                        assert!(seen.insert(u), "vertex in two neighborhoods");
                    }
                }
                let reachable: BTreeSet<usize> = g
                    .vertices()
                    .filter(|&u| dt.distance(v, u).is_some())
                    .collect();
                assert_eq!(seen, reachable);
            }
        }
    }

    #[test]
    fn distance_table_laws() {
        let g = disjoint_union(&[cycle(5), path(2)]);
        let dt = g.distance_table();
        for u in g.vertices() {
            assert_eq!(dt.distance(u, u), Some(0));
            for v in g.vertices() {
                assert_eq!(dt.distance(u, v), dt.distance(v, u));
                for w in g.vertices() {
                    if let (Some(a), Some(b), Some(c)) =
                        (dt.distance(u, w), dt.distance(u, v), dt.distance(v, w))
                    {
                        assert!(a <= b + c);
                    }
                }
            }
        }
        assert_eq!(dt.distance(0, 5), None);
        assert_eq!(dt.diameter(), 2);
    }

    #[test]
    fn generator_shapes() {
        let pa = pineapple(4, 2);
        assert_eq!((pa.n(), pa.m()), (6, 8));
        let f2 = figure2_graph();
        assert_eq!((f2.n(), f2.m()), (6, 8));
        let f3 = figure3_graph();
        assert_eq!((f3.n(), f3.m()), (8, 18));
        assert!(!f3.has_edge(6, 7));
        assert_eq!(complete_bipartite(2, 3).m(), 6);
        assert_eq!(star(4).m(), 4);
        assert_eq!(cycle(2).m(), 1);
        assert_eq!(cycle(1).m(), 0);
    }
}
