//! Exact-arithmetic toolkit for adjacency-matrix kernels over the rationals.
//!
//! The crate verifies, on arbitrary simple graphs, the conjecture that the
//! row space of the adjacency matrix always contains a nonzero {0,1}-vector
//! that is not itself a row. Everything is computed in exact rational
//! arithmetic: no floating point, no tolerances.
//!
//! - [`ratlinalg`]: dense rational linear algebra (RREF, null space, solve,
//!   inverse).
//! - [`graph`]: simple undirected graphs, structural predicates, graph6 and
//!   edge-list formats.
//! - [`spectral`]: kernel bases, core/nut classification, main-eigenvalue
//!   and Parter-vertex tests.
//! - [`ack`]: witness search via the zero-sum reformulation, a brute-force
//!   oracle through linear solves, and the eight-condition classifier for
//!   potential counterexamples.
//! - [`constructions`]: the graph families and operations under study, each
//!   certifying its own kernel data, plus the verified catalog of named
//!   graphs.

#![forbid(unsafe_code)]

pub mod ack;
pub mod constructions;
pub mod graph;
pub mod ratlinalg;
pub mod spectral;
