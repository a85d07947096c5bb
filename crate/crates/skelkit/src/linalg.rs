//! Exact linear algebra over integer scalars: fraction-free Bareiss
//! elimination for rank and the Faddeev-LeVerrier recurrence for the
//! characteristic polynomial.
//!
//! Everything here is generic over [`ExactScalar`]. Machine integers are
//! exact as long as intermediate minors fit (for an n x n 0/1 matrix every
//! intermediate Bareiss entry is a minor, bounded by Hadamard's inequality
//! at n^(n/2), so i128 covers n <= 30 comfortably); `Int` at the crate root
//! is the arbitrary-precision default that is exact at any size. Floating
//! point has no place in rank and multiplicity questions, which are
//! discrete.

use num_traits::{FromPrimitive, Signed};

use crate::graph::Graph;

/// An exact integer scalar: ring operations with exact (known-divisible)
/// division. Implemented for `i64`, `i128`, and the arbitrary-precision
/// [`crate::Int`].
pub trait ExactScalar: Clone + Signed + FromPrimitive {}

impl ExactScalar for i64 {}
impl ExactScalar for i128 {}
impl ExactScalar for num_bigint::BigInt {}

/// A dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix<S> {
    n: usize,
    entries: Vec<S>,
}

impl<S: ExactScalar> SquareMatrix<S> {
    pub fn zero(n: usize) -> SquareMatrix<S> {
        SquareMatrix {
            n,
            entries: vec![S::zero(); n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> SquareMatrix<S> {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { n, entries }
    }

    /// Adjacency matrix of a graph.
    pub fn adjacency(g: &Graph) -> SquareMatrix<S> {
        SquareMatrix::from_fn(g.n(), |i, j| {
            if g.has_edge(i, j) {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    /// `I + A`: the adjacency matrix with a loop attached to every vertex.
    pub fn i_plus_a(g: &Graph) -> SquareMatrix<S> {
        SquareMatrix::from_fn(g.n(), |i, j| {
            if i == j || g.has_edge(i, j) {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    fn mul(&self, other: &SquareMatrix<S>) -> SquareMatrix<S> {
        let n = self.n;
        SquareMatrix::from_fn(n, |i, j| {
            let mut acc = S::zero();
            for k in 0..n {
                acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
            }
            acc
        })
    }

    fn trace(&self) -> S {
        (0..self.n).fold(S::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Exact rank over the rationals by fraction-free elimination.
    ///
    /// Pivoting takes the first nonzero entry in column order; every
    /// division is by the previous pivot and is exact by the Sylvester
    /// determinant identity (checked in debug builds).
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut m = self.entries.clone();
        let at = |m: &Vec<S>, i: usize, j: usize| m[i * n + j].clone();

        let mut prev = S::one();
        let mut pivot_row = 0;
        for col in 0..n {
            let Some(found) = (pivot_row..n).find(|&r| !at(&m, r, col).is_zero()) else {
                continue;
            };
            if found != pivot_row {
                for j in 0..n {
                    m.swap(found * n + j, pivot_row * n + j);
                }
            }
            let pivot = at(&m, pivot_row, col);
            for i in (pivot_row + 1)..n {
                let factor = at(&m, i, col);
                for j in (col + 1)..n {
                    let num = pivot.clone() * at(&m, i, j) - factor.clone() * at(&m, pivot_row, j);
                    debug_assert!((num.clone() % prev.clone()).is_zero());
                    m[i * n + j] = num / prev.clone();
                }
                m[i * n + col] = S::zero();
            }
            prev = pivot;
            pivot_row += 1;
            if pivot_row == n {
                break;
            }
        }
        pivot_row
    }

    /// Characteristic polynomial `det(xI - M)` by the Faddeev-LeVerrier
    /// recurrence; coefficients leading-first, so `[1, c1, ..., cn]`.
    /// The per-step division by `k` is exact over the integers.
    pub fn charpoly(&self) -> Vec<S> {
        let n = self.n;
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(S::one());
        let mut mk = self.clone();
        for k in 1..=n {
            let k_scalar = S::from_usize(k).expect("small integer fits any scalar");
            let tr = mk.trace();
            debug_assert!((tr.clone() % k_scalar.clone()).is_zero());
            let ck = -(tr / k_scalar);
            coeffs.push(ck.clone());
            if k < n {
                let mut shifted = mk;
                for i in 0..n {
                    let d = shifted.get(i, i).clone() + ck.clone();
                    shifted.entries[i * n + i] = d;
                }
                mk = self.mul(&shifted);
            }
        }
        coeffs
    }
}

/// Exponent of `(x + 1)` in a polynomial with leading-first coefficients:
/// repeated exact synthetic division at the root -1.
pub fn multiplicity_at_minus_one<S: ExactScalar>(coeffs: &[S]) -> usize {
    let mut poly: Vec<S> = coeffs.to_vec();
    let mut multiplicity = 0;
    while poly.len() > 1 {
        // Synthetic division by (x + 1): b_i = a_i - b_{i-1}.
        let mut quotient: Vec<S> = Vec::with_capacity(poly.len() - 1);
        let mut carry = S::zero();
        for a in &poly[..poly.len() - 1] {
            carry = a.clone() - carry;
            quotient.push(carry.clone());
        }
        let remainder = poly[poly.len() - 1].clone() - carry;
        if !remainder.is_zero() {
            break;
        }
        multiplicity += 1;
        poly = quotient;
    }
    multiplicity
}
