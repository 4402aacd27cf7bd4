//! ACK-conjecture verification.
//!
//! The conjecture asks for a nonzero {0,1}-vector in the row space of the
//! adjacency matrix that is not itself a row. Since A_G is real symmetric,
//! row-space membership of χ_S is equivalent to orthogonality against the
//! kernel, which turns the question into a search for a non-duplicate
//! zero-sum subset. Two genuinely independent membership tests coexist here:
//! [`ack_witness`] goes through kernel orthogonality, [`ack_brute_oracle`]
//! through linear-system consistency, so neither can certify a false witness
//! without the other catching it.

use crate::graph::{characteristic_vector, Graph, Vertex, VertexSet};
use crate::ratlinalg::{QVector, Rational};
use crate::spectral::{classify, kernel, subset_sum, KernelBasis};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Default subset-search bound: full exhaustion is guaranteed up to here.
pub const DEFAULT_SEARCH_LIMIT: usize = 24;
/// Default bound for the definition-level brute oracle.
pub const DEFAULT_ORACLE_LIMIT: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AckError {
    #[error("the conjecture requires at least one edge")]
    EdgelessGraph,
    #[error("entry {index} is neither 0 nor 1")]
    NonBinaryEntry { index: usize },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(Vertex),
    #[error("graph is nonsingular: no kernel to take zero-sum subsets against")]
    NonsingularGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AckStatus {
    WitnessFound,
    NoWitness,
    AbortedTooLarge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AckMethod {
    OrthogonalitySearch,
    BruteOracle,
    DegreePruned,
}

/// Outcome of a witness search.
///
/// `NoWitness` is only ever reported after all 2^n − 1 nonempty subsets were
/// exhausted; a bounded run that finds nothing reports `AbortedTooLarge`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AckReport {
    pub status: AckStatus,
    pub witness: Option<VertexSet>,
    pub method: AckMethod,
    pub checked_count: u64,
    pub n: usize,
}

/// True iff `chi` lies in the row space of A_G, tested as orthogonality to
/// the kernel basis. `chi` must be a {0,1} vector of length n.
pub fn is_in_row_space(g: &Graph, chi: &QVector) -> Result<bool, AckError> {
    assert_eq!(chi.len(), g.n(), "characteristic vector length must be n");
    validate_binary(chi)?;
    Ok(kernel(g).is_orthogonal(chi))
}

fn validate_binary(chi: &QVector) -> Result<(), AckError> {
    for (index, e) in chi.iter().enumerate() {
        if !e.is_zero() && !e.is_one() {
            return Err(AckError::NonBinaryEntry { index });
        }
    }
    Ok(())
}

/// The vertex whose adjacency vector equals `chi`, if any.
pub fn is_row(g: &Graph, chi: &QVector) -> Option<Vertex> {
    assert_eq!(chi.len(), g.n(), "characteristic vector length must be n");
    let mut s = VertexSet::new();
    for (i, e) in chi.iter().enumerate() {
        if e.is_one() {
            s.insert(i + 1);
        } else if !e.is_zero() {
            return None; // not a {0,1} vector, cannot equal a row
        }
    }
    row_with_neighborhood(g, &s)
}

fn row_with_neighborhood(g: &Graph, s: &VertexSet) -> Option<Vertex> {
    g.vertices().find(|&u| g.neighborhood(u) == *s)
}

/// Canonical witness search via the zero-sum/orthogonality reformulation,
/// with the degree filter: sizes that match no vertex degree skip the
/// row-duplication scan entirely (such subsets can never equal a row).
pub fn ack_witness(g: &Graph, limit_n: usize) -> Result<AckReport, AckError> {
    subset_search(g, limit_n, true)
}

/// Same search without the degree filter; the returned witness is identical,
/// only the method provenance differs.
pub fn ack_witness_unfiltered(g: &Graph, limit_n: usize) -> Result<AckReport, AckError> {
    subset_search(g, limit_n, false)
}

struct SearchCtx<'a> {
    g: &'a Graph,
    basis: &'a [QVector],
    /// suffix_pos[j][i] (resp. neg): sum of positive (negative) entries of
    /// basis vector j over vertex indices >= i.
    suffix_pos: Vec<Vec<Rational>>,
    suffix_neg: Vec<Vec<Rational>>,
    degree_filter: bool,
    size_is_a_degree: bool,
    checked: u64,
}

fn subset_search(g: &Graph, limit_n: usize, degree_filter: bool) -> Result<AckReport, AckError> {
    if g.edge_count() == 0 {
        return Err(AckError::EdgelessGraph);
    }
    let n = g.n();
    let ker = kernel(g);
    let method = if degree_filter {
        AckMethod::DegreePruned
    } else {
        AckMethod::OrthogonalitySearch
    };

    let mut suffix_pos = Vec::new();
    let mut suffix_neg = Vec::new();
    for b in ker.basis() {
        let mut pos = vec![Rational::zero(); n + 1];
        let mut neg = vec![Rational::zero(); n + 1];
        for i in (0..n).rev() {
            pos[i] = pos[i + 1].clone();
            neg[i] = neg[i + 1].clone();
            if b[i].is_positive() {
                pos[i] += &b[i];
            } else if b[i].is_negative() {
                neg[i] += &b[i];
            }
        }
        suffix_pos.push(pos);
        suffix_neg.push(neg);
    }

    let degrees: VertexSet = g.vertices().map(|v| g.degree(v)).collect();
    let budget: u128 = 1u128
        .checked_shl(limit_n.min(120) as u32)
        .unwrap_or(u128::MAX);
    let mut spent: u128 = 0;

    let mut ctx = SearchCtx {
        g,
        basis: ker.basis(),
        suffix_pos,
        suffix_neg,
        degree_filter,
        size_is_a_degree: true,
        checked: 0,
    };

    for size in 1..=n {
        if n > limit_n {
            let cost = binomial_saturating(n, size);
            if spent.saturating_add(cost) > budget {
                return Ok(AckReport {
                    status: AckStatus::AbortedTooLarge,
                    witness: None,
                    method,
                    checked_count: ctx.checked,
                    n,
                });
            }
            spent = spent.saturating_add(cost);
        }
        ctx.size_is_a_degree = degrees.contains(&size);
        let mut chosen = Vec::with_capacity(size);
        let mut sums = vec![Rational::zero(); ctx.basis.len()];
        if let Some(witness) = dfs(&mut ctx, 0, size, &mut chosen, &mut sums) {
            assert_witness_valid(g, &ker, &witness);
            return Ok(AckReport {
                status: AckStatus::WitnessFound,
                witness: Some(witness),
                method,
                checked_count: ctx.checked,
                n,
            });
        }
    }
    Ok(AckReport {
        status: AckStatus::NoWitness,
        witness: None,
        method,
        checked_count: ctx.checked,
        n,
    })
}

/// Lexicographic DFS over size-`remaining` extensions drawn from vertex
/// indices >= `next`. Subtrees where some kernel constraint can no longer
/// reach zero are pruned via the suffix-sum intervals.
fn dfs(
    ctx: &mut SearchCtx,
    next: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    sums: &mut [Rational],
) -> Option<VertexSet> {
    if remaining == 0 {
        ctx.checked += 1;
        if sums.iter().all(|s| s.is_zero()) {
            let set: VertexSet = chosen.iter().map(|&i| i + 1).collect();
            let duplicate = if ctx.degree_filter && !ctx.size_is_a_degree {
                false
            } else {
                row_with_neighborhood(ctx.g, &set).is_some()
            };
            if !duplicate {
                return Some(set);
            }
        }
        return None;
    }
    for (j, s) in sums.iter().enumerate() {
        let reach_lo = s + &ctx.suffix_neg[j][next];
        let reach_hi = s + &ctx.suffix_pos[j][next];
        if reach_lo.is_positive() || reach_hi.is_negative() {
            return None;
        }
    }
    let n = ctx.g.n();
    for cand in next..=(n - remaining) {
        chosen.push(cand);
        for (j, b) in ctx.basis.iter().enumerate() {
            sums[j] += &b[cand];
        }
        let hit = dfs(ctx, cand + 1, remaining - 1, chosen, sums);
        for (j, b) in ctx.basis.iter().enumerate() {
            sums[j] -= &b[cand];
        }
        chosen.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Every reported witness is re-certified three independent ways before it
/// leaves the search: kernel orthogonality, linear-system consistency, and a
/// direct row comparison.
fn assert_witness_valid(g: &Graph, ker: &KernelBasis, s: &VertexSet) {
    let chi = characteristic_vector(g.n(), s);
    assert!(!s.is_empty(), "witness must be nonempty");
    assert!(
        ker.is_orthogonal(&chi),
        "witness {s:?} is not orthogonal to the kernel"
    );
    assert!(
        g.adjacency_matrix().solve(&chi).is_some(),
        "witness {s:?} fails the linear-system membership test"
    );
    assert!(
        row_with_neighborhood(g, s).is_none(),
        "witness {s:?} duplicates a row"
    );
}

/// Definition-level brute oracle: row-space membership is tested by solving
/// A_G y = χ_S exactly (never via the kernel), non-rowness by comparing
/// against the matrix rows. Subset order matches [`ack_witness`], so the two
/// must agree witness-for-witness.
pub fn ack_brute_oracle(g: &Graph, limit_n: usize) -> Result<AckReport, AckError> {
    if g.edge_count() == 0 {
        return Err(AckError::EdgelessGraph);
    }
    let n = g.n();
    if n > limit_n {
        return Ok(AckReport {
            status: AckStatus::AbortedTooLarge,
            witness: None,
            method: AckMethod::BruteOracle,
            checked_count: 0,
            n,
        });
    }
    let a = g.adjacency_matrix();
    let rows: Vec<QVector> = (0..n).map(|r| a.row(r)).collect();
    let mut checked = 0u64;
    for size in 1..=n {
        let mut indices: Vec<usize> = (0..size).collect();
        loop {
            checked += 1;
            let set: VertexSet = indices.iter().map(|&i| i + 1).collect();
            let chi = characteristic_vector(n, &set);
            if a.solve(&chi).is_some() && rows.iter().all(|r| *r != chi) {
                return Ok(AckReport {
                    status: AckStatus::WitnessFound,
                    witness: Some(set),
                    method: AckMethod::BruteOracle,
                    checked_count: checked,
                    n,
                });
            }
            if !next_combination(&mut indices, n) {
                break;
            }
        }
    }
    Ok(AckReport {
        status: AckStatus::NoWitness,
        witness: None,
        method: AckMethod::BruteOracle,
        checked_count: checked,
        n,
    })
}

/// Advances `indices` to the next size-k combination of 0..n in
/// lexicographic order; false when exhausted.
fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < n - k + i {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn binomial_saturating(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128);
        acc /= (i + 1) as u128;
    }
    acc
}

/// Lazily enumerates the nonempty subsets S with Σ_{v∈S} x_v = 0, in
/// lexicographic order (as sorted tuples); fixed-size when `size` is given.
pub fn zero_sum_subsets(x: &QVector, size: Option<usize>) -> ZeroSumSubsets<'_> {
    assert!(!x.is_zero(), "zero-sum subsets need a nonzero vector");
    ZeroSumSubsets {
        x,
        size,
        stack: Vec::new(),
        sum: Rational::zero(),
        next_candidate: 0,
        done: size == Some(0),
    }
}

pub struct ZeroSumSubsets<'a> {
    x: &'a QVector,
    size: Option<usize>,
    stack: Vec<usize>,
    sum: Rational,
    next_candidate: usize,
    done: bool,
}

impl ZeroSumSubsets<'_> {
    fn emit(&self) -> VertexSet {
        self.stack.iter().map(|&i| i + 1).collect()
    }

    fn pop(&mut self) {
        match self.stack.pop() {
            Some(top) => {
                self.sum -= &self.x[top];
                self.next_candidate = top + 1;
            }
            None => self.done = true,
        }
    }
}

impl Iterator for ZeroSumSubsets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while !self.done {
            if self.next_candidate < self.x.len() {
                let i = self.next_candidate;
                self.stack.push(i);
                self.sum += &self.x[i];
                self.next_candidate = i + 1;
                match self.size {
                    Some(s) if self.stack.len() == s => {
                        let hit = self.sum.is_zero();
                        let set = if hit { Some(self.emit()) } else { None };
                        self.pop();
                        if let Some(set) = set {
                            return Some(set);
                        }
                    }
                    Some(_) => {}
                    None => {
                        if self.sum.is_zero() {
                            return Some(self.emit());
                        }
                    }
                }
            } else {
                self.pop();
            }
        }
        None
    }
}

/// The neighborhood N(v0) of any vertex of a singular graph is zero-sum
/// relative to every kernel vector (the kernel condition at v0); returns it
/// after asserting that exactly.
pub fn neighborhood_zero_sum(g: &Graph, v0: Vertex) -> Result<VertexSet, AckError> {
    if !(1..=g.n()).contains(&v0) {
        return Err(AckError::VertexOutOfRange {
            vertex: v0,
            n: g.n(),
        });
    }
    let ker = kernel(g);
    if ker.nullity() == 0 {
        return Err(AckError::NonsingularGraph);
    }
    let s = g.neighborhood(v0);
    if s.is_empty() {
        return Err(AckError::IsolatedVertex(v0));
    }
    for b in ker.basis() {
        assert!(
            subset_sum(b, &s).is_zero(),
            "kernel condition violated at vertex {v0}"
        );
    }
    Ok(s)
}

/// The eight necessary conditions for membership in the class of potential
/// counterexamples, each computed from the definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassCReport {
    pub core: bool,
    pub zero_main: bool,
    pub vertex_triangle: bool,
    pub edge_triangle: bool,
    pub non_regular: bool,
    pub connected: bool,
    pub non_bipartite: bool,
    pub diameter_2_or_3: bool,
    pub in_class_c: bool,
}

pub fn class_c_report(g: &Graph) -> ClassCReport {
    let profile = classify(g);
    let s = g.structural_predicates();
    let core = profile.is_core;
    let zero_main = profile.zero_is_main;
    let vertex_triangle = s.every_vertex_on_triangle;
    let edge_triangle = s.every_edge_on_triangle;
    let non_regular = !s.regular;
    let connected = s.connected;
    let non_bipartite = !s.bipartite;
    let diameter_2_or_3 = matches!(s.diameter, Some(2) | Some(3));
    ClassCReport {
        core,
        zero_main,
        vertex_triangle,
        edge_triangle,
        non_regular,
        connected,
        non_bipartite,
        diameter_2_or_3,
        in_class_c: core
            && zero_main
            && vertex_triangle
            && edge_triangle
            && non_regular
            && connected
            && non_bipartite
            && diameter_2_or_3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;

    fn k2() -> Graph {
        Graph::from_edges(2, &[(1, 2)]).unwrap()
    }

    fn nut7() -> Graph {
        Graph::from_edges(
            7,
            &[
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 6),
                (2, 5),
                (3, 4),
                (5, 7),
                (6, 7),
            ],
        )
        .unwrap()
    }

    #[test]
    fn row_space_of_nonsingular_graph_is_everything() {
        assert_eq!(
            is_in_row_space(&k2(), &QVector::from_ints(&[1, 1])),
            Ok(true)
        );
    }

    #[test]
    fn row_space_rejects_non_binary_entries() {
        assert_eq!(
            is_in_row_space(&k2(), &QVector::from_ints(&[2, 0])),
            Err(AckError::NonBinaryEntry { index: 0 })
        );
    }

    #[test]
    fn nut7_chi12_is_outside_the_row_space() {
        // <chi_{1,2}, x> = x_1 + x_2 = 2 for the kernel vector.
        let chi = characteristic_vector(7, &vset(&[1, 2]));
        assert_eq!(is_in_row_space(&nut7(), &chi), Ok(false));
        assert_eq!(nut7().adjacency_matrix().solve(&chi), None);
    }

    #[test]
    fn is_row_finds_the_owning_vertex() {
        let chi = characteristic_vector(7, &vset(&[1, 3]));
        assert_eq!(is_row(&nut7(), &chi), Some(4));
        assert_eq!(is_row(&nut7(), &QVector::zeros(7)), None);
    }

    #[test]
    fn k2_witness_is_the_whole_vertex_set() {
        let r = ack_witness(&k2(), DEFAULT_SEARCH_LIMIT).unwrap();
        assert_eq!(r.status, AckStatus::WitnessFound);
        assert_eq!(r.witness, Some(vset(&[1, 2])));
    }

    #[test]
    fn nut7_witness_is_2_3() {
        // Earlier size-2 zero-sum sets {1,3},{1,4},{1,5},{1,7} are all rows.
        let r = ack_witness(&nut7(), DEFAULT_SEARCH_LIMIT).unwrap();
        assert_eq!(r.witness, Some(vset(&[2, 3])));
        assert_eq!(r.method, AckMethod::DegreePruned);
    }

    #[test]
    fn oracle_agrees_on_nut7() {
        let a = ack_witness(&nut7(), DEFAULT_SEARCH_LIMIT).unwrap();
        let b = ack_brute_oracle(&nut7(), DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(a.status, b.status);
        assert_eq!(a.witness, b.witness);
        assert_eq!(b.method, AckMethod::BruteOracle);
    }

    #[test]
    fn unfiltered_search_returns_the_same_witness() {
        let a = ack_witness(&nut7(), DEFAULT_SEARCH_LIMIT).unwrap();
        let b = ack_witness_unfiltered(&nut7(), DEFAULT_SEARCH_LIMIT).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(b.method, AckMethod::OrthogonalitySearch);
    }

    #[test]
    fn edgeless_graph_is_rejected_not_no_witness() {
        let g = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(ack_witness(&g, 24), Err(AckError::EdgelessGraph));
        assert_eq!(ack_brute_oracle(&g, 16), Err(AckError::EdgelessGraph));
    }

    #[test]
    fn oracle_aborts_over_its_limit() {
        let r = ack_brute_oracle(&nut7(), 6).unwrap();
        assert_eq!(r.status, AckStatus::AbortedTooLarge);
        assert_eq!(r.witness, None);
    }

    #[test]
    fn bounded_search_aborts_instead_of_claiming_no_witness() {
        // Both singletons of K2 are rows, so a budget of 2^1 candidates runs
        // out before size 2 is reached.
        let r = ack_witness(&k2(), 1).unwrap();
        assert_eq!(r.status, AckStatus::AbortedTooLarge);
    }

    #[test]
    fn zero_sum_pairs_of_a_plus_minus_vector() {
        let x = QVector::from_ints(&[1, -1]);
        let all: Vec<VertexSet> = zero_sum_subsets(&x, None).collect();
        assert_eq!(all, vec![vset(&[1, 2])]);
    }

    #[test]
    fn zero_sum_subsets_of_all_ones_is_empty() {
        let x = QVector::from_ints(&[1, 1, 1]);
        assert_eq!(zero_sum_subsets(&x, None).count(), 0);
    }

    #[test]
    fn zero_sum_subsets_respects_size_and_order() {
        let x = QVector::from_ints(&[1, 1, -1, -1, -1, -1, 1, 2]); // E8 kernel
        let size3: Vec<VertexSet> = zero_sum_subsets(&x, Some(3)).take(3).collect();
        assert_eq!(size3[0], vset(&[3, 4, 8]));
        for s in zero_sum_subsets(&x, Some(3)) {
            assert!(subset_sum(&x, &s).is_zero());
            assert_eq!(s.len(), 3);
        }
    }

    #[test]
    fn zero_sum_subsets_unsized_is_lexicographic() {
        let x = QVector::from_ints(&[1, -1, 0]);
        let all: Vec<VertexSet> = zero_sum_subsets(&x, None).collect();
        assert_eq!(all, vec![vset(&[1, 2]), vset(&[1, 2, 3]), vset(&[3])]);
    }

    #[test]
    fn neighborhood_zero_sum_on_nut7() {
        assert_eq!(neighborhood_zero_sum(&nut7(), 7), Ok(vset(&[5, 6])));
        assert_eq!(
            neighborhood_zero_sum(&k2(), 1),
            Err(AckError::NonsingularGraph)
        );
        let lonely = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(
            neighborhood_zero_sum(&lonely, 3),
            Err(AckError::IsolatedVertex(3))
        );
    }

    fn satellite7() -> Graph {
        // Dominating vertex 1, cycle 2-3-4, satellites 5, 6, 7.
        Graph::from_edges(
            7,
            &[
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (1, 7),
                (2, 3),
                (3, 4),
                (4, 2),
                (2, 5),
                (3, 6),
                (4, 7),
            ],
        )
        .unwrap()
    }

    #[test]
    fn satellite_examples() {
        let s7 = satellite7();
        // A satellite's neighborhood-of-a-satellite is {dominating, cycle
        // partner}, zero-sum since their kernel values cancel.
        assert_eq!(neighborhood_zero_sum(&s7, 5), Ok(vset(&[1, 2])));
        // The set of all non-dominating vertices is exactly row 1.
        let chi = characteristic_vector(7, &vset(&[2, 3, 4, 5, 6, 7]));
        assert_eq!(is_row(&s7, &chi), Some(1));
        // Witness search and oracle agree here too.
        let a = ack_witness(&s7, DEFAULT_SEARCH_LIMIT).unwrap();
        let b = ack_brute_oracle(&s7, DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(a.witness, Some(vset(&[2, 5])));
        assert_eq!(b.witness, a.witness);
    }

    #[test]
    fn g14_neighborhood_zero_sum_example() {
        let g14 = crate::constructions::catalog(crate::constructions::CatalogName::G14).graph;
        assert_eq!(neighborhood_zero_sum(&g14, 11), Ok(vset(&[1, 2])));
    }

    #[test]
    fn nut7_fails_class_c_on_triangles_only_where_expected() {
        let c = class_c_report(&nut7());
        assert!(c.core && c.zero_main && c.non_regular && c.connected && c.non_bipartite);
        assert!(!c.vertex_triangle && !c.edge_triangle);
        assert!(!c.in_class_c);
    }
}
