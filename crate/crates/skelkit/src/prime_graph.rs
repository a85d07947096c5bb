//! Prime graphs of the transposition-generated automorphism groups, the
//! closed-form edge rule, an element-order oracle for it, and the iterated
//! series that always descends to the empty graph.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::lcm;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::equivalence::equivalence_classes;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sep_group::{sep_order, sep_signature, SepSignature};

/// A graph whose vertices are prime numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeGraph {
    vertices: BTreeSet<u64>,
    edges: BTreeSet<(u64, u64)>,
}

impl PrimeGraph {
    fn new(vertices: BTreeSet<u64>, edges: BTreeSet<(u64, u64)>) -> PrimeGraph {
        for &(p, q) in &edges {
            assert!(p < q, "edges are stored with p < q");
            assert!(
                vertices.contains(&p) && vertices.contains(&q),
                "edge endpoint is not a vertex"
            );
        }
        PrimeGraph { vertices, edges }
    }

    pub fn vertices(&self) -> &BTreeSet<u64> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(u64, u64)> {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        self.edges.contains(&(p.min(q), p.max(q)))
    }

    pub fn is_complete(&self) -> bool {
        let k = self.vertices.len();
        self.edges.len() == k * k.saturating_sub(1) / 2
    }

    /// Reads the prime graph as an ordinary graph: vertex `i` stands for the
    /// `i`-th smallest prime. Returns the graph and the prime labels.
    pub fn as_graph(&self) -> (Graph, Vec<u64>) {
        let labels: Vec<u64> = self.vertices.iter().copied().collect();
        let index = |p: u64| labels.binary_search(&p).expect("endpoint is a vertex");
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(p, q)| (index(p), index(q)))
            .collect();
        let g = Graph::from_edges(labels.len(), &edges).expect("prime graph edges are simple");
        (g, labels)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("prime graph serializes")
    }

    pub fn to_dot(&self) -> String {
        let labels: Vec<String> = self.vertices.iter().map(u64::to_string).collect();
        let index = |p: u64| self.vertices.iter().position(|&v| v == p).expect("vertex");
        let edges: BTreeSet<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(p, q)| (index(p), index(q)))
            .collect();
        crate::format::dot_labelled("primes", &labels, &edges)
    }
}

/// Ascending primes `<= m` by sieve.
pub fn primes_up_to(m: usize) -> Vec<u64> {
    if m < 2 {
        return Vec::new();
    }
    let mut is_prime = vec![true; m + 1];
    is_prime[0] = false;
    is_prime[1] = false;
    let mut p = 2;
    while p * p <= m {
        if is_prime[p] {
            let mut multiple = p * p;
            while multiple <= m {
                is_prime[multiple] = false;
                multiple += p;
            }
        }
        p += 1;
    }
    (2..=m).filter(|&x| is_prime[x]).map(|x| x as u64).collect()
}

/// The `k`-th prime, 1-based (`nth_prime(1) == 2`).
pub fn nth_prime(k: usize) -> u64 {
    assert!(k >= 1);
    let mut bound = 16;
    loop {
        let primes = primes_up_to(bound);
        if primes.len() >= k {
            return primes[k - 1];
        }
        bound *= 2;
    }
}

/// Closed-form prime graph of the group described by `sig`.
///
/// Vertices are the primes `<= alpha`. With a single class, `pq` is an edge
/// iff `p + q <= alpha`; with two or more classes there is additionally an
/// edge whenever the larger prime fits the largest class and the smaller
/// fits the second largest, i.e. `min(p, q) <= beta`.
pub fn prime_graph_of_sep(sig: &SepSignature) -> PrimeGraph {
    let alpha = sig.alpha() as u64;
    let beta = sig.beta() as u64;
    let multi_class = sig.s() >= 2;
    let vertices: BTreeSet<u64> = primes_up_to(sig.alpha()).into_iter().collect();
    let mut edges = BTreeSet::new();
    for &p in &vertices {
        for &q in vertices.range((p + 1)..) {
            if p + q <= alpha || (multi_class && q <= alpha && p <= beta) {
                edges.insert((p, q));
            }
        }
    }
    PrimeGraph::new(vertices, edges)
}

/// Largest class size the oracle accepts.
const ORACLE_ALPHA_MAX: usize = 30;

/// Element-order oracle for the prime graph, straight from the definition.
///
/// The vertex set is found by completely factoring the group order (the
/// product of class-size factorials) by trial division. For an edge `pq`,
/// each class contributes the set of element orders dividing `pq` that its
/// symmetric group can realize, computed by a knapsack over cycle lengths;
/// an element of order exactly `pq` exists iff the classwise lcm combination
/// reaches `pq`.
pub fn oracle_prime_graph(sig: &SepSignature) -> Result<PrimeGraph> {
    if sig.alpha() > ORACLE_ALPHA_MAX {
        return Err(Error::Capacity(format!(
            "element-order oracle handles class sizes up to {ORACLE_ALPHA_MAX}, got {}",
            sig.alpha()
        )));
    }

    let mut order = sep_order(sig);
    let mut vertices = BTreeSet::new();
    let mut d = BigUint::from(2u32);
    while !order.is_one() {
        if (&order % &d).is_zero() {
            vertices.insert(u64::try_from(&d).expect("small prime factor"));
            while (&order % &d).is_zero() {
                order /= &d;
            }
        }
        d += BigUint::one();
    }

    let primes: Vec<u64> = vertices.iter().copied().collect();
    let mut edges = BTreeSet::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if order_pq_exists(sig, p, q) {
                edges.insert((p, q));
            }
        }
    }
    Ok(PrimeGraph::new(vertices, edges))
}

/// Can the direct product of symmetric groups on the class sizes contain an
/// element of order exactly `p * q`?
fn order_pq_exists(sig: &SepSignature, p: u64, q: u64) -> bool {
    let target = p * q;
    let divisors = [1, p, q, target];
    let div_index = |d: u64| divisors.iter().position(|&x| x == d).expect("divisor");

    // Achievable lcms (restricted to divisors of pq) for each class.
    let mut overall = [true, false, false, false];
    for &gamma in sig.sizes() {
        let per_class = achievable_divisors(gamma as u64, &divisors);
        let mut next = [false; 4];
        for (i, &a) in divisors.iter().enumerate() {
            if !overall[i] {
                continue;
            }
            for (j, &b) in divisors.iter().enumerate() {
                if per_class[j] {
                    next[div_index(lcm(a, b))] = true;
                }
            }
        }
        overall = next;
    }
    overall[3]
}

/// Knapsack over cycle lengths: which divisors of `pq` occur as the lcm of a
/// multiset of cycle lengths (each dividing `pq`) fitting in `gamma` points?
fn achievable_divisors(gamma: u64, divisors: &[u64; 4]) -> [bool; 4] {
    let cap = gamma as usize;
    // reachable[c][j]: using total length c, lcm = divisors[j].
    let mut reachable = vec![[false; 4]; cap + 1];
    reachable[0][0] = true;
    let parts: Vec<u64> = (2..=gamma)
        .filter(|&len| divisors[3].is_multiple_of(len))
        .collect();
    for c in 0..=cap {
        for j in 0..4 {
            if !reachable[c][j] {
                continue;
            }
            for &len in &parts {
                let nc = c + len as usize;
                if nc <= cap {
                    let nl = lcm(divisors[j], len);
                    let nj = divisors.iter().position(|&x| x == nl).expect("divides pq");
                    reachable[nc][nj] = true;
                }
            }
        }
    }
    let mut out = [false; 4];
    for row in &reachable {
        for j in 0..4 {
            out[j] |= row[j];
        }
    }
    out
}

/// Closed-form k-clique test; `k = 0` is trivially true and `k = 1` asks for
/// a nonempty vertex set.
pub fn has_k_clique(sig: &SepSignature, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if k == 1 {
        return sig.alpha() >= 2;
    }
    let alpha = sig.alpha() as u64;
    let beta = sig.beta() as u64;
    let pk = nth_prime(k);
    let pk1 = nth_prime(k - 1);
    alpha >= pk + pk1 || (sig.s() >= 2 && alpha >= pk && beta >= pk1)
}

/// When the prime graph is a complete graph on `n >= 2` vertices, returns
/// that `n`: this happens exactly when `alpha` lies between the `n`-th and
/// `(n+1)`-st primes and `beta` reaches the `(n-1)`-st.
pub fn is_complete_prime_graph(sig: &SepSignature) -> Option<usize> {
    let alpha = sig.alpha() as u64;
    let beta = sig.beta() as u64;
    let n = primes_up_to(sig.alpha()).len();
    if n >= 2 && beta >= nth_prime(n - 1) {
        debug_assert!(alpha >= nth_prime(n) && alpha < nth_prime(n + 1));
        Some(n)
    } else {
        None
    }
}

/// The iterated prime-graph series of a graph: each step is the prime graph
/// of the previous step's group, the previous prime graph being read as an
/// ordinary graph. The series stops before the empty graph, which is the
/// terminal sentinel and is not stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SepSeries {
    steps: Vec<PrimeGraph>,
}

impl SepSeries {
    pub fn steps(&self) -> &[PrimeGraph] {
        &self.steps
    }

    pub fn length(&self) -> usize {
        self.steps.len()
    }

    /// Last prime graph before the empty graph; `None` for graphs whose
    /// group is trivial from the start.
    pub fn minimal(&self) -> Option<&PrimeGraph> {
        self.steps.last()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&serde_json::json!({
            "steps": self.steps,
            "length": self.length(),
            "minimal": self.minimal(),
        }))
        .expect("series serializes")
    }
}

/// Runs the series to its minimal element. Between consecutive prime-graph
/// steps the vertex set must shrink strictly and no new edges may appear;
/// that descent also guarantees termination, and the loop guard panics if it
/// ever fails (it cannot, for prime graphs produced by the edge rule).
pub fn sep_series(g: &Graph) -> SepSeries {
    let mut steps: Vec<PrimeGraph> = Vec::new();
    let mut sig = sep_signature(&equivalence_classes(g));
    loop {
        let pg = prime_graph_of_sep(&sig);
        if pg.is_empty() {
            break;
        }
        if let Some(prev) = steps.last() {
            assert!(
                pg.vertices().is_subset(prev.vertices()) && pg.vertices() != prev.vertices(),
                "series descent violated: vertex set did not shrink strictly"
            );
            assert!(
                pg.edges().is_subset(prev.edges()),
                "series descent violated: a new edge appeared"
            );
        }
        let (as_graph, _) = pg.as_graph();
        sig = sep_signature(&equivalence_classes(&as_graph));
        steps.push(pg);
    }
    SepSeries { steps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    fn sig(sizes: &[usize]) -> SepSignature {
        SepSignature::new(sizes.to_vec())
    }

    fn pg(vertices: &[u64], edges: &[(u64, u64)]) -> PrimeGraph {
        PrimeGraph::new(
            vertices.iter().copied().collect(),
            edges.iter().copied().collect(),
        )
    }

    #[test]
    fn sieve() {
        assert_eq!(primes_up_to(7), vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(10), vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(primes_up_to(2), vec![2]);
        assert_eq!(nth_prime(1), 2);
        assert_eq!(nth_prime(9), 23);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            prime_graph_of_sep(&sig(&[7])),
            pg(&[2, 3, 5, 7], &[(2, 3), (2, 5)])
        );
        assert_eq!(
            prime_graph_of_sep(&sig(&[5, 3])),
            pg(&[2, 3, 5], &[(2, 3), (2, 5), (3, 5)])
        );
        assert_eq!(prime_graph_of_sep(&sig(&[2])), pg(&[2], &[]));
        assert_eq!(prime_graph_of_sep(&sig(&[3, 2])), pg(&[2, 3], &[(2, 3)]));
        assert!(prime_graph_of_sep(&sig(&[1])).is_empty());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            oracle_prime_graph(&sig(&[7])).unwrap(),
            prime_graph_of_sep(&sig(&[7]))
        );
        // A 5-cycle in the first class and a 3-cycle in the second yield an
        // element of order 15, so {3, 5} is an edge.
        assert_eq!(
            oracle_prime_graph(&sig(&[5, 3])).unwrap(),
            pg(&[2, 3, 5], &[(2, 3), (2, 5), (3, 5)])
        );
        assert!(oracle_prime_graph(&sig(&[1])).unwrap().is_empty());
        assert!(matches!(
            oracle_prime_graph(&sig(&[31])),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn clique_and_completeness() {
        assert!(has_k_clique(&sig(&[7]), 2)); // 7 >= 3 + 2
        assert!(!has_k_clique(&sig(&[7]), 3)); // 7 < 5 + 3 with one class
        assert!(has_k_clique(&sig(&[5, 3]), 3)); // alpha >= 5, beta >= 3
        assert!(has_k_clique(&sig(&[2]), 1));
        assert!(!has_k_clique(&sig(&[1]), 1));

        assert_eq!(is_complete_prime_graph(&sig(&[5, 3])), Some(3));
        assert_eq!(is_complete_prime_graph(&sig(&[7, 1])), None);
        assert_eq!(is_complete_prime_graph(&sig(&[3, 2])), Some(2));
        assert_eq!(is_complete_prime_graph(&sig(&[5])), None);
    }

    #[test]
    fn series_on_complete_graphs() {
        let series = sep_series(&complete(7));
        assert_eq!(series.length(), 2);
        assert_eq!(series.steps()[0], pg(&[2, 3, 5, 7], &[(2, 3), (2, 5)]));
        assert_eq!(series.steps()[1], pg(&[2], &[]));
        assert_eq!(series.minimal(), Some(&pg(&[2], &[])));

        assert_eq!(sep_series(&complete(1)).length(), 0);
        assert_eq!(sep_series(&complete(1)).minimal(), None);

        let series = sep_series(&complete(3));
        assert_eq!(series.length(), 2);
        assert_eq!(series.steps()[0], pg(&[2, 3], &[]));
        assert_eq!(series.steps()[1], pg(&[2], &[]));
    }

    #[test]
    fn prime_graph_as_graph_keeps_labels() {
        let p = pg(&[2, 3, 5, 7], &[(2, 3), (2, 5)]);
        let (g, labels) = p.as_graph();
        assert_eq!(labels, vec![2, 3, 5, 7]);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn json_shape() {
        let p = pg(&[2, 3], &[(2, 3)]);
        let v: serde_json::Value = serde_json::from_str(&p.to_json()).unwrap();
        assert_eq!(v["vertices"], serde_json::json!([2, 3]));
        assert_eq!(v["edges"], serde_json::json!([[2, 3]]));
    }
}
