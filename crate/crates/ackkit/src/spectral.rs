//! Kernel-level classification: core vertices, core/nut status, whether 0 is
//! a main eigenvalue, exact multiplicities of ±1, and the Parter-vertex test.
//!
//! Only the eigenvalues 0, +1 and −1 ever matter here, and all three reduce
//! to exact null spaces of integer shifts of the adjacency matrix — no
//! floating-point eigensolver anywhere.

use crate::graph::{Graph, Vertex, VertexSet};
use crate::ratlinalg::{int, QVector, Rational};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("base graph does not equal the graph with vertex {vertex} deleted")]
    BaseMismatch { vertex: Vertex },
    #[error("internal consistency failure: {0}")]
    InternalInconsistency(String),
}

/// Canonical basis of N(A_G) plus per-vertex support flags.
///
/// `support(v)` is true iff some basis vector is nonzero at `v`, i.e. iff
/// `v` is a core vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KernelBasis {
    n: usize,
    basis: Vec<QVector>,
    support: Vec<bool>,
}

impl KernelBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nullity(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QVector] {
        &self.basis
    }

    /// True iff `v` is a core vertex.
    pub fn supports(&self, v: Vertex) -> bool {
        assert!((1..=self.n).contains(&v), "vertex {v} out of range");
        self.support[v - 1]
    }

    /// True iff every vertex is a core vertex (vacuously false for a trivial
    /// kernel, since then no vertex is supported).
    pub fn all_supported(&self) -> bool {
        !self.basis.is_empty() && self.support.iter().all(|&s| s)
    }

    /// True iff `chi` is orthogonal to every basis vector, i.e. lies in
    /// R(A_G) for the symmetric adjacency matrix.
    pub fn is_orthogonal(&self, chi: &QVector) -> bool {
        self.basis.iter().all(|b| b.dot(chi).is_zero())
    }
}

/// Kernel-derived profile of one graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectralProfile {
    pub nullity: usize,
    pub is_core: bool,
    pub is_nut: bool,
    pub zero_is_main: bool,
    pub mult_plus1: usize,
    pub mult_minus1: usize,
    /// A kernel vector with every entry nonzero; present iff the graph is a
    /// core graph.
    pub full_kernel_vector: Option<QVector>,
}

/// Canonical RREF basis of N(A_G) with derived support flags.
pub fn kernel(g: &Graph) -> KernelBasis {
    let basis = g.adjacency_matrix().nullspace_basis();
    let support = (0..g.n())
        .map(|i| basis.iter().any(|b| !b[i].is_zero()))
        .collect();
    KernelBasis {
        n: g.n(),
        basis,
        support,
    }
}

/// Full kernel-level classification.
///
/// Nut status is tested from the definition (nullity 1 plus a full basis
/// vector) rather than through the adjugate; the ±1 multiplicities are the
/// exact nullities of A − I and A + I.
pub fn classify(g: &Graph) -> SpectralProfile {
    let ker = kernel(g);
    let a = g.adjacency_matrix();
    let nullity = ker.nullity();
    let is_core = ker.all_supported();
    let is_nut = nullity == 1 && ker.basis()[0].is_full();
    let e = QVector::from_entries(vec![int(1); g.n()]);
    let zero_is_main = ker.basis().iter().any(|b| !b.dot(&e).is_zero());
    let (_, mult_plus1) = a.plus_scaled_identity(-1).rank_nullity();
    let (_, mult_minus1) = a.plus_scaled_identity(1).rank_nullity();
    let full = full_kernel_vector_from(&ker);
    if let Some(v) = &full {
        debug_assert!(a.mul_vec(v).is_zero() && v.is_full());
    }
    SpectralProfile {
        nullity,
        is_core,
        is_nut,
        zero_is_main,
        mult_plus1,
        mult_minus1,
        full_kernel_vector: full,
    }
}

/// Nut test straight from the definition: nullity 1 and a full basis vector.
/// Cheaper than [`classify`] when the ±1 multiplicities are not needed.
pub fn is_nut(g: &Graph) -> bool {
    let ker = kernel(g);
    ker.nullity() == 1 && ker.basis()[0].is_full()
}

/// A kernel vector of G with every entry nonzero, when G is a core graph.
///
/// Construction is the deterministic greedy combination: start from the
/// first basis vector; for each later basis vector that covers a still-zero
/// coordinate, add the smallest positive integer multiple that zeroes no
/// coordinate gained so far.
pub fn full_kernel_vector(g: &Graph) -> Option<QVector> {
    full_kernel_vector_from(&kernel(g))
}

fn full_kernel_vector_from(ker: &KernelBasis) -> Option<QVector> {
    if !ker.all_supported() {
        return None;
    }
    let basis = ker.basis();
    let mut x = basis[0].clone();
    for b in &basis[1..] {
        let covers_missing = (0..ker.n()).any(|i| x[i].is_zero() && !b[i].is_zero());
        if !covers_missing {
            continue;
        }
        let mut multiplier = 1i64;
        loop {
            let candidate = x.add_scaled(&int(multiplier), b);
            let kills_existing = (0..ker.n()).any(|i| !x[i].is_zero() && candidate[i].is_zero());
            if !kills_existing {
                x = candidate;
                break;
            }
            multiplier += 1;
        }
    }
    // Fullness is guaranteed by the support precondition; verify exactly.
    assert!(
        x.is_full(),
        "greedy combination failed to reach a full vector"
    );
    Some(x)
}

/// Parter test: with `g = base + v`, returns true iff the nullity drops,
/// η(g) = η(base) − 1.
///
/// When the base is singular and the added vertex is non-duplicated with at
/// least one neighbor, the row-space characterization (`v` is not Parter iff
/// its adjacency vector lies in R(A_base)) is evaluated as well and any
/// disagreement is reported as an internal-consistency failure rather than
/// silently trusted.
pub fn is_parter(g: &Graph, base: &Graph, v: Vertex) -> Result<bool, SpectralError> {
    if !(1..=g.n()).contains(&v) {
        return Err(SpectralError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    if base.n() + 1 != g.n() || g.delete_vertex(v) != *base {
        return Err(SpectralError::BaseMismatch { vertex: v });
    }
    let base_kernel = kernel(base);
    let parter = kernel(g).nullity() + 1 == base_kernel.nullity();

    // Adjacency vector of v written over the base's labels.
    let relabeled: VertexSet = g
        .neighborhood(v)
        .into_iter()
        .map(|u| if u > v { u - 1 } else { u })
        .collect();
    let chi = crate::graph::characteristic_vector(base.n(), &relabeled);
    let duplicated = base.vertices().any(|u| base.neighborhood(u) == relabeled);
    if base_kernel.nullity() > 0 && !duplicated && !relabeled.is_empty() {
        let expected = !base_kernel.is_orthogonal(&chi);
        if expected != parter {
            return Err(SpectralError::InternalInconsistency(format!(
                "nullity difference says parter = {parter} but the row-space \
                 characterization says {expected} for vertex {v}"
            )));
        }
    }
    Ok(parter)
}

/// Inner product of a kernel vector with the subset `s`, Σ_{v∈S} x_v.
pub fn subset_sum(x: &QVector, s: &VertexSet) -> Rational {
    s.iter().map(|&v| x[v - 1].clone()).sum()
}
