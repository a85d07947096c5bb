//! Exact rank of `I + A`, the skeleton correction term, and the multiplicity
//! of the -1 adjacency eigenvalue, with an independent characteristic-
//! polynomial oracle.
//!
//! The rank of `I + A` never exceeds the number of skeleton-structure
//! vertices, and the shortfall `lambda` is the same whether measured on the
//! graph or on its structure; the -1 multiplicity is then `n - rank`. The
//! rank is always computed on the full matrix here, with the skeleton-based
//! route exposed separately through [`lambda`], so the identity between the
//! two is a genuine two-sided test rather than self-fulfilling.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{multiplicity_at_minus_one, ExactScalar, SquareMatrix};
use crate::skeleton::skeleton_structure;
use crate::Int;

/// Exact rank of `I + A(g)` over the rationals.
pub fn rank_i_plus_a<S: ExactScalar>(g: &Graph) -> usize {
    SquareMatrix::<S>::i_plus_a(g).rank()
}

/// The correction term: skeleton-structure vertex count minus the rank of
/// `I + A` of the structure. Non-negative for every graph.
pub fn lambda<S: ExactScalar>(g: &Graph) -> usize {
    let structure = skeleton_structure(g);
    let rank = rank_i_plus_a::<S>(&structure);
    assert!(rank <= structure.n());
    structure.n() - rank
}

/// Multiplicity of the eigenvalue -1 of the adjacency matrix:
/// `n - rank(I + A)`. The skeleton lower bound `n - |V(structure)|` is
/// asserted along the way.
pub fn minus_one_multiplicity<S: ExactScalar>(g: &Graph) -> usize {
    let k = g.n() - rank_i_plus_a::<S>(g);
    let skeleton_vertices = skeleton_structure(g).n();
    assert!(
        k >= g.n() - skeleton_vertices,
        "multiplicity fell below the skeleton bound"
    );
    k
}

/// Largest graph the characteristic-polynomial oracle accepts.
pub const CHARPOLY_ORACLE_MAX_N: usize = 64;

/// Independent route to the same multiplicity: expand `det(xI - A)` exactly
/// and return the exponent of `(x + 1)` dividing it.
pub fn charpoly_multiplicity_oracle<S: ExactScalar>(g: &Graph) -> Result<usize> {
    if g.n() > CHARPOLY_ORACLE_MAX_N {
        return Err(Error::Capacity(format!(
            "characteristic-polynomial oracle handles n <= {CHARPOLY_ORACLE_MAX_N}, got {}",
            g.n()
        )));
    }
    let coeffs = SquareMatrix::<S>::adjacency(g).charpoly();
    Ok(multiplicity_at_minus_one(&coeffs))
}

/// Everything the spectral subcommands report, computed with
/// arbitrary-precision arithmetic. The fields satisfy
/// `rank_i_plus_a == skeleton_vertices - lambda` and
/// `minus_one_multiplicity == n - rank_i_plus_a` by construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralReport {
    pub n: usize,
    pub rank_i_plus_a: usize,
    pub skeleton_vertices: usize,
    pub lambda: usize,
    pub minus_one_multiplicity: usize,
}

impl SpectralReport {
    pub fn compute(g: &Graph) -> SpectralReport {
        let n = g.n();
        let rank = rank_i_plus_a::<Int>(g);
        let structure = skeleton_structure(g);
        let lambda = lambda::<Int>(g);
        let report = SpectralReport {
            n,
            rank_i_plus_a: rank,
            skeleton_vertices: structure.n(),
            lambda,
            minus_one_multiplicity: n - rank,
        };
        assert_eq!(
            report.rank_i_plus_a,
            report.skeleton_vertices - report.lambda
        );
        report
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
