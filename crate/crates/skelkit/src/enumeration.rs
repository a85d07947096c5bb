//! Exhaustive small-graph enumeration up to isomorphism, skeleton-structure
//! filtering, and the rank/lambda catalog.
//!
//! Canonical forms are the lexicographic minimum of the upper-triangular
//! adjacency bitstring over all vertex permutations, found by a
//! branch-and-bound walk of the assignment tree that prunes any branch whose
//! bit prefix already exceeds the best known form; the result is exactly the
//! exhaustive minimum. Graphs on `n` vertices are enumerated by extending
//! every (n-1)-vertex graph with one new vertex in all possible ways and
//! deduplicating by canonical form, which reaches every isomorphism class.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::{complete, complete_bipartite, cycle, disjoint_union, path, star, Graph};
use crate::skeleton::is_skeleton_structure;
use crate::spectral::{lambda, rank_i_plus_a};
use crate::Int;

/// Largest `n` for canonical forms.
pub const CANONICAL_MAX_N: usize = 8;
/// Largest `n` for whole-catalog enumeration.
pub const ENUMERATE_MAX_N: usize = 7;

/// An isomorphism-invariant fingerprint: two graphs on at most
/// [`CANONICAL_MAX_N`] vertices have equal forms iff they are isomorphic.
///
/// `bits` packs the upper triangle in column order (0,1), (0,2), (1,2),
/// (0,3), ... with the first pair in the most significant position, so the
/// numeric order of `bits` is the lexicographic order of the bitstring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Unpacks the canonical representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.n;
        let m = n * n.saturating_sub(1) / 2;
        let mut edges = Vec::new();
        let mut k = 0;
        for col in 1..n {
            for row in 0..col {
                if self.bits >> (m - 1 - k) & 1 == 1 {
                    edges.push((row, col));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("canonical bits decode to a simple graph")
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(&self.to_graph()).expect("canonical forms stay below the graph6 limit")
    }
}

/// Computes the canonical form of a graph with at most 8 vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(Error::Capacity(format!(
            "canonical forms are limited to n <= {CANONICAL_MAX_N}, got {n}"
        )));
    }
    let adj: Vec<u16> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u16, |mask, &w| mask | 1 << w))
        .collect();
    let mut search = MinSearch {
        n,
        m: n * n.saturating_sub(1) / 2,
        adj,
        chosen: Vec::with_capacity(n),
        used: vec![false; n],
        best: u64::MAX,
    };
    search.descend(0, 0);
    Ok(CanonicalForm {
        n,
        bits: search.best,
    })
}

struct MinSearch {
    n: usize,
    m: usize,
    adj: Vec<u16>,
    chosen: Vec<usize>,
    used: Vec<bool>,
    best: u64,
}

impl MinSearch {
    fn descend(&mut self, partial: u64, bits_done: usize) {
        let depth = self.chosen.len();
        if depth == self.n {
            self.best = partial;
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let mut col = 0u64;
            for &earlier in &self.chosen {
                col = col << 1 | u64::from(self.adj[v] >> earlier & 1);
            }
            let next_partial = partial << depth | col;
            let next_done = bits_done + depth;
            // Lex comparison against the prefix of the best complete form.
            if next_partial > self.best >> (self.m - next_done) {
                continue;
            }
            self.chosen.push(v);
            self.used[v] = true;
            self.descend(next_partial, next_done);
            self.chosen.pop();
            self.used[v] = false;
        }
    }
}

/// All non-isomorphic simple graphs on `n <= 7` vertices, sorted by
/// canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<CanonicalForm>> {
    enumerate_graphs_with_threads(n, default_threads())
}

fn default_threads() -> usize {
    std::thread::available_parallelism()
        .map_or(1, usize::from)
        .min(8)
}

/// As [`enumerate_graphs`], with the extension sweep capped at `threads`
/// worker threads. The output is identical for any thread count.
pub fn enumerate_graphs_with_threads(n: usize, threads: usize) -> Result<Vec<CanonicalForm>> {
    if n > ENUMERATE_MAX_N {
        return Err(Error::Capacity(format!(
            "enumeration is limited to n <= {ENUMERATE_MAX_N}, got {n}"
        )));
    }
    let mut level: Vec<CanonicalForm> = vec![CanonicalForm { n: 0, bits: 0 }];
    for k in 1..=n {
        let parents: Vec<Graph> = level.iter().map(CanonicalForm::to_graph).collect();
        let forms = extend_level(&parents, k, threads.max(1));
        level = forms
            .into_iter()
            .map(|bits| CanonicalForm { n: k, bits })
            .collect();
    }
    Ok(level)
}

/// Extends every parent by one vertex attached to each subset of the old
/// vertices, canonicalizing and deduplicating. Every isomorphism class on
/// `k` vertices contains such an extension of some class on `k - 1`.
fn extend_level(parents: &[Graph], k: usize, threads: usize) -> BTreeSet<u64> {
    let canonize_extensions = |chunk: &[Graph]| -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for parent in chunk {
            let base = parent.edges();
            for mask in 0u32..1 << (k - 1) {
                let mut edges = base.clone();
                for i in 0..(k - 1) {
                    if mask >> i & 1 == 1 {
                        edges.push((i, k - 1));
                    }
                }
                let g = Graph::from_edges(k, &edges).expect("extension stays simple");
                out.insert(canonical_form(&g).expect("k <= 7").bits);
            }
        }
        out
    };

    let workers = threads.min(parents.len().max(1));
    if workers <= 1 {
        return canonize_extensions(parents);
    }
    let chunk_size = parents.len().div_ceil(workers);
    std::thread::scope(|scope| {
        let handles: Vec<_> = parents
            .chunks(chunk_size)
            .map(|chunk| scope.spawn(move || canonize_extensions(chunk)))
            .collect();
        let mut merged = BTreeSet::new();
        for handle in handles {
            merged.extend(handle.join().expect("enumeration worker panicked"));
        }
        merged
    })
}

/// One catalog row: a skeleton structure with its rank and lambda. A
/// structure class with several conventional names (the 4-cycle is also the
/// complete bipartite `K_{2,2}`) appears once per name.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    #[serde(skip)]
    form: CanonicalForm,
    pub graph6: String,
    pub name: Option<String>,
    pub rank: usize,
    pub lambda: usize,
}

impl CatalogEntry {
    pub fn form(&self) -> CanonicalForm {
        self.form
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.graph6,
            self.name.as_deref().unwrap_or(""),
            self.rank,
            self.lambda
        )
    }
}

/// The skeleton structures on `n` vertices: graphs with no adjacent twin
/// pair, each annotated with `rank(I + A)` and lambda.
pub fn enumerate_skeleton_structures(n: usize) -> Result<Vec<CatalogEntry>> {
    let names = name_table(n);
    let mut entries = Vec::new();
    for form in enumerate_graphs(n)? {
        let g = form.to_graph();
        if !is_skeleton_structure(&g) {
            continue;
        }
        let rank = rank_i_plus_a::<Int>(&g);
        let lam = lambda::<Int>(&g);
        let graph6 = form.to_graph6();
        match names.get(&form) {
            Some(known) => {
                for name in known {
                    entries.push(CatalogEntry {
                        form,
                        graph6: graph6.clone(),
                        name: Some((*name).to_string()),
                        rank,
                        lambda: lam,
                    });
                }
            }
            None => entries.push(CatalogEntry {
                form,
                graph6,
                name: None,
                rank,
                lambda: lam,
            }),
        }
    }
    Ok(entries)
}

/// Groups every skeleton structure on `1..=n` vertices by its rank.
pub fn rank_catalog(n: usize) -> Result<BTreeMap<usize, Vec<CatalogEntry>>> {
    let mut by_rank: BTreeMap<usize, Vec<CatalogEntry>> = BTreeMap::new();
    for k in 1..=n {
        for entry in enumerate_skeleton_structures(k)? {
            by_rank.entry(entry.rank).or_default().push(entry);
        }
    }
    Ok(by_rank)
}

/// Conventional names for small graphs, keyed by canonical form. The
/// 4-cycle carries both of its usual names.
fn name_table(n: usize) -> BTreeMap<CanonicalForm, Vec<&'static str>> {
    let named: Vec<(&'static str, Graph)> = match n {
        1 => vec![("K_1", complete(1))],
        2 => vec![("2K_1", Graph::empty(2)), ("K_2", complete(2))],
        3 => vec![
            ("3K_1", Graph::empty(3)),
            ("K_1+K_2", disjoint_union(&[complete(1), complete(2)])),
            ("P_3", path(3)),
            ("K_3", complete(3)),
        ],
        4 => vec![
            ("4K_1", Graph::empty(4)),
            ("2K_2", disjoint_union(&[complete(2), complete(2)])),
            ("K_1+P_3", disjoint_union(&[complete(1), path(3)])),
            ("K_1+K_3", disjoint_union(&[complete(1), complete(3)])),
            ("P_4", path(4)),
            ("C_4", cycle(4)),
            ("K_{2,2}", complete_bipartite(2, 2)),
            ("K_{1,3}", star(3)),
            ("K_4", complete(4)),
        ],
        5 => vec![
            ("5K_1", Graph::empty(5)),
            ("2K_1+P_3", disjoint_union(&[Graph::empty(2), path(3)])),
            ("K_1+P_4", disjoint_union(&[complete(1), path(4)])),
            ("K_1+K_{1,3}", disjoint_union(&[complete(1), star(3)])),
            ("K_1+C_4", disjoint_union(&[complete(1), cycle(4)])),
            ("P_5", path(5)),
            ("C_5", cycle(5)),
            ("K_{1,4}", star(4)),
            ("K_{2,3}", complete_bipartite(2, 3)),
            ("K_5", complete(5)),
        ],
        6 => vec![
            ("6K_1", Graph::empty(6)),
            ("P_6", path(6)),
            ("C_6", cycle(6)),
            ("K_{1,5}", star(5)),
            ("K_{2,4}", complete_bipartite(2, 4)),
            ("K_{3,3}", complete_bipartite(3, 3)),
            ("K_6", complete(6)),
        ],
        7 => vec![
            ("7K_1", Graph::empty(7)),
            ("P_7", path(7)),
            ("C_7", cycle(7)),
            ("K_{1,6}", star(6)),
            ("K_7", complete(7)),
        ],
        _ => Vec::new(),
    };
    let mut table: BTreeMap<CanonicalForm, Vec<&'static str>> = BTreeMap::new();
    for (name, g) in named {
        let form = canonical_form(&g).expect("named graphs are small");
        table.entry(form).or_default().push(name);
    }
    table
}

/// First conventional name of the class, if any.
pub fn name_of(form: CanonicalForm) -> Option<&'static str> {
    name_table(form.n())
        .get(&form)
        .and_then(|names| names.first().copied())
}
