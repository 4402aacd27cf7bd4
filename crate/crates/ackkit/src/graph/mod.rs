//! Simple undirected labeled graphs and their structural predicates.
//!
//! Vertices are labeled `1..=n` everywhere on the public surface, matching
//! the catalog's labeling and all reports; the 0-indexing of matrix rows and
//! of the graph6 wire format is translated at the boundary. Graphs are
//! immutable after construction.

mod edgelist;
mod graph6;

pub use edgelist::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6};

use crate::ratlinalg::{QMatrix, QVector};
use std::collections::BTreeSet;
use thiserror::Error;

/// Vertex label, 1-based.
pub type Vertex = usize;

/// Sorted set of vertex labels.
pub type VertexSet = BTreeSet<Vertex>;

/// Convenience constructor for literal vertex sets.
pub fn vset(vs: &[Vertex]) -> VertexSet {
    vs.iter().copied().collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    EmptyOrder,
    #[error("edge {{{u}, {v}}} out of range for order {n}")]
    VertexOutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
}

/// Parse failures for the two file formats; positions are reported for
/// repair (byte offsets for graph6, line numbers for edge lists).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: byte {byte:#04x} at offset {offset} outside the printable range 63..=126")]
    Graph6InvalidChar { offset: usize, byte: u8 },
    #[error("graph6: order {n} at offset {offset} not supported (short form carries 1..=62)")]
    Graph6UnsupportedOrder { offset: usize, n: usize },
    #[error("graph6: expected {expected} data bytes, found {found} (error at offset {offset})")]
    Graph6Length {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph6: nonzero padding bits at offset {offset}")]
    Graph6TrailingBits { offset: usize },
    #[error("edge list: missing \"n <count>\" header line")]
    MissingHeader,
    #[error("edge list line {line}: malformed header, expected \"n <count>\"")]
    BadHeader { line: usize },
    #[error("edge list line {line}: expected \"<i> <j>\"")]
    BadEdge { line: usize },
    #[error("edge list line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// Simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    neighbors: Vec<BTreeSet<Vertex>>,
    edge_count: usize,
}

/// Structural facts used by the necessary-condition classifier.
///
/// `diameter` is `None` exactly when the graph is disconnected (an infinite
/// diameter marker). The triangle flags follow the direct definitions:
/// every vertex lies on a triangle, and every edge has a common neighbor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructuralPredicates {
    pub connected: bool,
    pub bipartite: bool,
    pub regular: bool,
    pub diameter: Option<usize>,
    pub every_vertex_on_triangle: bool,
    pub every_edge_on_triangle: bool,
}

impl Graph {
    /// Builds a canonical graph from an edge list. Duplicate pairs collapse;
    /// orientation is normalized. Rejects self-loops and out-of-range labels
    /// with the offending pair.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyOrder);
        }
        let mut g = Graph {
            n,
            neighbors: vec![BTreeSet::new(); n],
            edge_count: 0,
        };
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if u < 1 || v < 1 || u > self.n || v > self.n {
            return Err(GraphError::VertexOutOfRange { u, v, n: self.n });
        }
        if self.neighbors[u - 1].insert(v) {
            self.neighbors[v - 1].insert(u);
            self.edge_count += 1;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Edges as normalized pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 1..=self.n {
            for &v in &self.neighbors[u - 1] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.check_vertex(u);
        self.check_vertex(v);
        self.neighbors[u - 1].contains(&v)
    }

    fn check_vertex(&self, v: Vertex) {
        assert!(
            (1..=self.n).contains(&v),
            "vertex {v} out of range 1..={}",
            self.n
        );
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.check_vertex(v);
        self.neighbors[v - 1].len()
    }

    /// Open neighborhood N(v), excluding `v` itself.
    pub fn neighborhood(&self, v: Vertex) -> VertexSet {
        self.check_vertex(v);
        self.neighbors[v - 1].clone()
    }

    fn neighbors_ref(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.neighbors[v - 1]
    }

    /// Ascending degree multiset.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.neighbors.iter().map(|s| s.len()).collect();
        d.sort_unstable();
        d
    }

    pub fn is_dominating(&self, v: Vertex) -> bool {
        self.degree(v) == self.n - 1
    }

    /// Symmetric {0,1} adjacency matrix with zero diagonal; row `v - 1` is
    /// the adjacency vector of vertex `v`.
    pub fn adjacency_matrix(&self) -> QMatrix {
        QMatrix::from_fn(self.n, self.n, |r, c| {
            if self.neighbors[r].contains(&(c + 1)) {
                crate::ratlinalg::int(1)
            } else {
                crate::ratlinalg::int(0)
            }
        })
    }

    /// The {0,1} adjacency vector of `v` (row `v` of the adjacency matrix).
    pub fn adjacency_vector(&self, v: Vertex) -> QVector {
        self.check_vertex(v);
        characteristic_vector(self.n, self.neighbors_ref(v))
    }

    /// Graph with vertex `v` removed; labels above `v` shift down by one.
    pub fn delete_vertex(&self, v: Vertex) -> Graph {
        self.check_vertex(v);
        assert!(self.n > 1, "cannot delete the last vertex");
        let relabel = |u: Vertex| if u > v { u - 1 } else { u };
        let edges: Vec<(Vertex, Vertex)> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (relabel(a), relabel(b)))
            .collect();
        Graph::from_edges(self.n - 1, &edges).expect("relabeled edges stay in range")
    }

    /// Graph with one new vertex `n + 1` adjacent to exactly `neighbors`.
    pub fn add_vertex(&self, neighbors: &VertexSet) -> Result<Graph, GraphError> {
        let new = self.n + 1;
        let mut edges = self.edges();
        for &u in neighbors {
            edges.push((u, new));
        }
        Graph::from_edges(new, &edges)
    }

    fn bfs_distances(&self, src: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src - 1] = Some(0);
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u - 1].unwrap();
            for &w in self.neighbors_ref(u) {
                if dist[w - 1].is_none() {
                    dist[w - 1] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(1).iter().all(|d| d.is_some())
    }

    /// Connectivity, bipartiteness, regularity, diameter and the two
    /// triangle conditions, each computed by direct definition.
    pub fn structural_predicates(&self) -> StructuralPredicates {
        let connected = self.is_connected();
        let diameter = if connected {
            let mut max = 0;
            for v in 1..=self.n {
                for d in self.bfs_distances(v).iter().flatten() {
                    max = max.max(*d);
                }
            }
            Some(max)
        } else {
            None
        };

        // 2-coloring over every component
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut bipartite = true;
        for start in 1..=self.n {
            if color[start - 1].is_some() {
                continue;
            }
            color[start - 1] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let cu = color[u - 1].unwrap();
                for &w in self.neighbors_ref(u) {
                    match color[w - 1] {
                        None => {
                            color[w - 1] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => bipartite = false,
                        Some(_) => {}
                    }
                }
            }
        }

        let degrees = self.degree_sequence();
        let regular = degrees.first() == degrees.last() || self.n == 1;

        let every_vertex_on_triangle = self.vertices().all(|v| {
            let nv: Vec<Vertex> = self.neighbors_ref(v).iter().copied().collect();
            nv.iter().enumerate().any(|(i, &a)| {
                nv[i + 1..]
                    .iter()
                    .any(|&b| self.neighbors_ref(a).contains(&b))
            })
        });
        let every_edge_on_triangle = self.edges().into_iter().all(|(u, v)| {
            self.neighbors_ref(u)
                .intersection(self.neighbors_ref(v))
                .next()
                .is_some()
        });

        StructuralPredicates {
            connected,
            bipartite,
            regular,
            diameter,
            every_vertex_on_triangle,
            every_edge_on_triangle,
        }
    }
}

/// The {0,1} characteristic vector of a vertex subset, length `n`.
pub fn characteristic_vector(n: usize, s: &VertexSet) -> QVector {
    QVector::from_entries(
        (1..=n)
            .map(|v| crate::ratlinalg::int(if s.contains(&v) { 1 } else { 0 }))
            .collect(),
    )
}
