//! The group of permutations generated by the transpositions that are
//! automorphisms, represented by its class-size signature.
//!
//! The group factors as a direct product of symmetric groups, one per
//! equivalence class, so its order is the product of class-size factorials
//! and membership reduces to a per-cycle containment check. The group is
//! never materialized as an element list outside of small-n sanity tests.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::equivalence::Partition;
use crate::error::{Error, Result};

/// Multiset of class sizes, sorted descending. `alpha` is the largest size
/// and `beta` the second largest (0 when there is a single class), the two
/// quantities the prime-graph edge rule runs on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SepSignature {
    sizes: Vec<usize>,
}

impl SepSignature {
    /// Builds a signature from raw class sizes (any order, zeros rejected).
    pub fn new(mut sizes: Vec<usize>) -> SepSignature {
        assert!(sizes.iter().all(|&s| s > 0), "class sizes must be positive");
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        SepSignature { sizes }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of classes.
    pub fn s(&self) -> usize {
        self.sizes.len()
    }

    /// Largest class size (0 for the empty graph).
    pub fn alpha(&self) -> usize {
        self.sizes.first().copied().unwrap_or(0)
    }

    /// Second-largest class size; 0 when there is at most one class.
    pub fn beta(&self) -> usize {
        if self.s() >= 2 {
            self.sizes[1]
        } else {
            0
        }
    }
}

/// The signature of a partition: its class sizes.
pub fn sep_signature(p: &Partition) -> SepSignature {
    SepSignature::new(p.sizes())
}

/// Exact group order: the product of factorials of the class sizes.
pub fn sep_order(sig: &SepSignature) -> BigUint {
    let mut order = BigUint::one();
    for &size in sig.sizes() {
        for k in 2..=size {
            order *= BigUint::from(k);
        }
    }
    order
}

/// A permutation of `[0, n)` stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from an image array, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::Argument(format!(
                    "image array is not a bijection on [0, {n})"
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `[0, n)` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for &x in cycle {
                if x >= n {
                    return Err(Error::Argument(format!(
                        "cycle element {x} out of range for domain size {n}"
                    )));
                }
                if used[x] {
                    return Err(Error::Argument(format!("cycles are not disjoint at {x}")));
                }
                used[x] = true;
            }
            if cycle.len() >= 2 {
                for i in 0..cycle.len() {
                    images[cycle[i]] = cycle[(i + 1) % cycle.len()];
                }
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(3 4)(1 2)"`. Elements may be
    /// separated by spaces or commas; an empty string or `"()"` is the
    /// identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Permutation> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::parse_noline(format!(
                    "expected '(' in cycle notation near `{rest}`"
                )));
            };
            let Some(close) = stripped.find(')') else {
                return Err(Error::parse_noline("unclosed '(' in cycle notation"));
            };
            let body = &stripped[..close];
            let cycle: Vec<usize> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::parse_noline(format!("bad cycle element `{t}`")))
                })
                .collect::<Result<_>>()?;
            cycles.push(cycle);
            rest = stripped[close + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Disjoint cycles covering the non-fixed support, each rotated to start
    /// at its smallest element, in order of that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if visited[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            visited[start] = true;
            let mut x = self.images[start];
            while x != start {
                visited[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycle-notation rendering, `"()"` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(ToString::to_string).collect();
                format!("({})", body.join(" "))
            })
            .collect()
    }
}

/// True iff every disjoint cycle of `sigma` stays inside a single
/// equivalence class of the partition.
pub fn contains(p: &Partition, sigma: &Permutation) -> Result<bool> {
    let n: usize = p.classes().iter().map(|c| c.size()).sum();
    if sigma.n() != n {
        return Err(Error::Argument(format!(
            "permutation acts on [0, {}) but the graph has {n} vertices",
            sigma.n()
        )));
    }
    Ok(sigma.cycles().iter().all(|cycle| {
        let class = p.class_of(cycle[0]);
        cycle.iter().all(|&x| p.class_of(x) == class)
    }))
}

/// A sub-permutation of a member, together with its own membership verdict.
#[derive(Debug, Clone)]
pub struct Witness {
    pub perm: Permutation,
    pub member: bool,
}

/// Enumerates the membership witnesses implied by one member `sigma`: every
/// proper sub-cycle of each cycle (elements deleted, cyclic order kept) and,
/// when `sigma` has several disjoint cycles, each cycle on its own. A bare
/// transposition has only the identity as witness. Every verdict must come
/// back `true`; callers assert that.
pub fn hereditary_witnesses(p: &Partition, sigma: &Permutation) -> Result<Vec<Witness>> {
    if !contains(p, sigma)? {
        return Err(Error::Argument(
            "hereditary witnesses are defined only for members of the group".into(),
        ));
    }
    let n = sigma.n();
    let cycles = sigma.cycles();
    let mut perms: Vec<Permutation> = Vec::new();

    for cycle in &cycles {
        let k = cycle.len();
        // Proper sub-cycles: every subset of 2..k elements in inherited
        // cyclic order.
        for mask in 1u64..(1 << k) {
            let picked: Vec<usize> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| cycle[i])
                .collect();
            if picked.len() >= 2 && picked.len() < k {
                perms.push(Permutation::from_cycles(n, &[picked])?);
            }
        }
    }
    if cycles.len() >= 2 {
        for cycle in &cycles {
            perms.push(Permutation::from_cycles(n, std::slice::from_ref(cycle))?);
        }
    }
    if perms.is_empty() {
        perms.push(Permutation::identity(n));
    }

    perms.sort_by_key(Permutation::cycles);
    perms.dedup();
    perms
        .into_iter()
        .map(|perm| {
            let member = contains(p, &perm)?;
            Ok(Witness { perm, member })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::equivalence_classes;
    use crate::graph::{complete, figure2_graph, pineapple};

    fn sig(sizes: &[usize]) -> SepSignature {
        SepSignature::new(sizes.to_vec())
    }

    #[test]
    fn signatures_from_fixtures() {
        let s = sep_signature(&equivalence_classes(&pineapple(4, 2)));
        assert_eq!(s.sizes(), &[3, 2, 1]);
        assert_eq!((s.alpha(), s.beta()), (3, 2));

        let s = sep_signature(&equivalence_classes(&complete(5)));
        assert_eq!(s.sizes(), &[5]);
        assert_eq!((s.alpha(), s.beta()), (5, 0));

        let s = sep_signature(&equivalence_classes(&figure2_graph()));
        assert_eq!(s.sizes(), &[2, 1, 1, 1, 1]);
    }

    #[test]
    fn orders() {
        assert_eq!(sep_order(&sig(&[5])), BigUint::from(120u32));
        // 3! * 2! * 1! by direct multiplication.
        assert_eq!(sep_order(&sig(&[3, 2, 1])), BigUint::from(12u32));
        assert_eq!(sep_order(&sig(&[1, 1, 1])), BigUint::from(1u32));
        // Exceeds u64: 21! * 3!
        let big = sep_order(&sig(&[21, 3]));
        assert_eq!(big.to_string(), "306545653030256640000");
    }

    #[test]
    fn membership() {
        let f2 = figure2_graph();
        let p = equivalence_classes(&f2);
        let swap = Permutation::parse_cycles(6, "(2 3)").unwrap();
        assert!(contains(&p, &swap).unwrap());
        let outer = Permutation::parse_cycles(6, "(0 5)(1 4)").unwrap();
        assert!(!contains(&p, &outer).unwrap());
        assert!(contains(&p, &Permutation::identity(6)).unwrap());
        assert!(contains(&p, &Permutation::identity(5)).is_err());
    }

    #[test]
    fn members_preserve_edges() {
        let f2 = figure2_graph();
        let p = equivalence_classes(&f2);
        let swap = Permutation::parse_cycles(6, "(2 3)").unwrap();
        for (u, v) in f2.edges() {
            assert!(f2.has_edge(swap.apply(u), swap.apply(v)));
        }
        assert!(!contains(&p, &Permutation::parse_cycles(6, "(0 2)").unwrap()).unwrap());
    }

    #[test]
    fn hereditary_on_three_cycle() {
        let k3 = complete(3);
        let p = equivalence_classes(&k3);
        let rot = Permutation::parse_cycles(3, "(0 1 2)").unwrap();
        let ws = hereditary_witnesses(&p, &rot).unwrap();
        let rendered: Vec<String> = ws.iter().map(|w| w.perm.to_cycle_string()).collect();
        assert_eq!(rendered, vec!["(0 1)", "(0 2)", "(1 2)"]);
        assert!(ws.iter().all(|w| w.member));
    }

    #[test]
    fn hereditary_trivial_and_disjoint() {
        let f2 = figure2_graph();
        let p = equivalence_classes(&f2);
        let swap = Permutation::parse_cycles(6, "(2 3)").unwrap();
        let ws = hereditary_witnesses(&p, &swap).unwrap();
        assert_eq!(ws.len(), 1);
        assert!(ws[0].perm.is_identity() && ws[0].member);

        let k4 = complete(4);
        let p4 = equivalence_classes(&k4);
        let double = Permutation::parse_cycles(4, "(0 1)(2 3)").unwrap();
        let ws = hereditary_witnesses(&p4, &double).unwrap();
        let rendered: Vec<String> = ws.iter().map(|w| w.perm.to_cycle_string()).collect();
        assert_eq!(rendered, vec!["(0 1)", "(2 3)"]);
        assert!(ws.iter().all(|w| w.member));

        let non_member = Permutation::parse_cycles(6, "(0 5)").unwrap();
        assert!(hereditary_witnesses(&p, &non_member).is_err());
    }

    #[test]
    fn cycle_parser() {
        let p = Permutation::parse_cycles(5, "(0 1 2)(3 4)").unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(3), 4);
        assert_eq!(p.to_cycle_string(), "(0 1 2)(3 4)");
        assert!(Permutation::parse_cycles(3, "(0 1 2)(0)").is_err()); // overlap
        assert!(Permutation::parse_cycles(3, "(0 9)").is_err()); // range
        assert!(Permutation::parse_cycles(3, "0 1").is_err()); // no parens
        assert!(Permutation::parse_cycles(3, "").unwrap().is_identity());
    }
}
