//! Built-in catalog of concrete graphs, each bundled with its expected
//! kernel data as a checksum.
//!
//! Hand-entered edge lists are second-class evidence, so every
//! entry is certified on construction: each expected kernel vector must
//! satisfy A·x = 0 entry-exactly and the computed nullity must match. A
//! failed checksum panics — it means the stored data is wrong, and nothing
//! downstream should run.

use crate::graph::Graph;
use crate::ratlinalg::QVector;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogName {
    Prism6,
    Nut7,
    E8,
    E10,
    E12,
    G14,
    G18,
    H5,
    H8,
}

impl CatalogName {
    pub const ALL: [CatalogName; 9] = [
        CatalogName::Prism6,
        CatalogName::Nut7,
        CatalogName::E8,
        CatalogName::E10,
        CatalogName::E12,
        CatalogName::G14,
        CatalogName::G18,
        CatalogName::H5,
        CatalogName::H8,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CatalogName::Prism6 => "PRISM6",
            CatalogName::Nut7 => "NUT7",
            CatalogName::E8 => "E8",
            CatalogName::E10 => "E10",
            CatalogName::E12 => "E12",
            CatalogName::G14 => "G14",
            CatalogName::G18 => "G18",
            CatalogName::H5 => "H5",
            CatalogName::H8 => "H8",
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let upper = s.to_ascii_uppercase();
        CatalogName::ALL
            .into_iter()
            .find(|n| n.as_str() == upper)
            .ok_or_else(|| {
                format!(
                    "unknown catalog graph `{s}`; known names: {}",
                    CatalogName::ALL.map(|n| n.as_str()).join(", ")
                )
            })
    }
}

/// One verified catalog graph.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub graph: Graph,
    /// Kernel vectors the entry is certified against (up to scale, but the
    /// stored vectors themselves satisfy A·x = 0 exactly). May be empty when
    /// only the nullity is pinned.
    pub expected_kernel: Vec<QVector>,
    pub expected_nullity: usize,
    pub notes: &'static str,
}

/// Builds and certifies a catalog entry.
#[allow(clippy::type_complexity)]
pub fn catalog(name: CatalogName) -> CatalogEntry {
    let (n, edges, kernel_ints, expected_nullity, notes): (
        usize,
        Vec<(usize, usize)>,
        Vec<Vec<i64>>,
        usize,
        &'static str,
    ) = match name {
        CatalogName::Prism6 => (
            6,
            vec![
                (1, 2),
                (2, 3),
                (3, 1),
                (4, 5),
                (5, 6),
                (6, 4),
                (1, 4),
                (2, 5),
                (3, 6),
            ],
            vec![],
            2,
            "Triangular prism: 3-regular core graph of nullity 2 that is not a nut graph.",
        ),
        CatalogName::Nut7 => (
            7,
            vec![
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 6),
                (2, 5),
                (3, 4),
                (5, 7),
                (6, 7),
            ],
            vec![vec![1, 1, -1, -1, -1, 1, -1]],
            1,
            "7-vertex nut graph: vertex 7 attached to vertices 5 and 6 of a nonsingular base.",
        ),
        CatalogName::E8 => (
            8,
            dominating_family(
                8,
                &[(2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 2)],
                &[(4, 8)],
                &[(4, 6), (5, 7), (2, 6), (3, 6)],
            ),
            vec![vec![1, 1, -1, -1, -1, -1, 1, 2]],
            1,
            "Even-order nut graph with a dominating vertex, 8 vertices.",
        ),
        CatalogName::E10 => (
            10,
            dominating_family(
                10,
                &[(2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 2)],
                &[(4, 9), (6, 10)],
                &[(4, 6), (5, 7), (3, 8), (2, 6)],
            ),
            vec![vec![1, -1, -1, -1, -1, -1, 1, 1, 2, 1]],
            1,
            "Even-order nut graph with a dominating vertex, 10 vertices.",
        ),
        CatalogName::E12 => (
            12,
            dominating_family(
                12,
                &[
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (7, 8),
                    (8, 9),
                    (9, 2),
                ],
                &[(2, 10), (4, 11), (3, 12)],
                &[(4, 6), (5, 7), (6, 8), (6, 9)],
            ),
            vec![vec![1, -1, -1, -1, -1, -1, 1, 1, -1, 1, 2, 1]],
            1,
            "Even-order nut graph with a dominating vertex, 12 vertices.",
        ),
        CatalogName::G14 => (
            14,
            vec![
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 6),
                (1, 7),
                (1, 8),
                (1, 9),
                (1, 10),
                (1, 11),
                (1, 12),
                (1, 13),
                (1, 14),
                (2, 3),
                (2, 10),
                (2, 11),
                (3, 4),
                (3, 5),
                (4, 5),
                (4, 12),
                (5, 6),
                (6, 7),
                (6, 8),
                (6, 13),
                (7, 8),
                (7, 9),
                (8, 9),
                (8, 10),
                (8, 14),
                (9, 10),
            ],
            vec![vec![0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 1, 0, -1, 0]],
            1,
            "14-vertex graph of nullity one that is not a core graph; zero is not a main \
             eigenvalue, yet the all-ones vector lies in the row space.",
        ),
        CatalogName::G18 => (
            18,
            dominating_family(
                18,
                &[
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (7, 8),
                    (8, 9),
                    (9, 10),
                    (10, 11),
                    (11, 12),
                    (12, 2),
                ],
                &[(2, 13), (4, 14), (6, 15), (8, 16), (10, 17), (12, 18)],
                &[(4, 6), (6, 9), (7, 11), (14, 16)],
            ),
            vec![vec![0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0]],
            1,
            "18-vertex dominating-vertex graph used as the base for zero-sum vertex additions.",
        ),
        CatalogName::H5 => (
            5,
            vec![(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4)],
            vec![],
            0,
            "Nonsingular 5-vertex base with -1 a simple eigenvalue and +1 absent; feeds the \
             K2 cartesian product.",
        ),
        CatalogName::H8 => (
            8,
            vec![
                (1, 3),
                (1, 5),
                (1, 6),
                (2, 4),
                (2, 5),
                (2, 6),
                (2, 8),
                (3, 5),
                (3, 7),
                (3, 8),
                (4, 5),
                (4, 6),
                (4, 7),
                (5, 6),
                (5, 8),
                (6, 8),
            ],
            vec![],
            0,
            "Nonsingular 8-vertex base for multi-vertex attachment.",
        ),
    };

    let graph = Graph::from_edges(n, &edges).expect("catalog edge lists are well-formed");
    let expected_kernel: Vec<QVector> = kernel_ints.iter().map(|v| QVector::from_ints(v)).collect();

    let a = graph.adjacency_matrix();
    for x in &expected_kernel {
        assert!(
            a.mul_vec(x).is_zero(),
            "catalog checksum failed for {name}: stored kernel vector is not in N(A)"
        );
    }
    let (_, nullity) = a.rank_nullity();
    assert_eq!(
        nullity, expected_nullity,
        "catalog checksum failed for {name}: nullity mismatch"
    );

    CatalogEntry {
        name,
        graph,
        expected_kernel,
        expected_nullity,
        notes,
    }
}

/// Edge list for the dominating-vertex families: vertex 1 joined to every
/// other vertex, plus a ring, satellite spokes, and chords.
fn dominating_family(
    n: usize,
    ring: &[(usize, usize)],
    spokes: &[(usize, usize)],
    chords: &[(usize, usize)],
) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (2..=n).map(|v| (1, v)).collect();
    edges.extend_from_slice(ring);
    edges.extend_from_slice(spokes);
    edges.extend_from_slice(chords);
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_passes_its_load_time_checks() {
        for name in CatalogName::ALL {
            let entry = catalog(name); // panics on checksum failure
            assert!(entry.graph.n() >= 5);
        }
    }

    #[test]
    fn names_round_trip_through_strings() {
        for name in CatalogName::ALL {
            assert_eq!(name.as_str().parse::<CatalogName>(), Ok(name));
        }
        assert_eq!("nut7".parse::<CatalogName>(), Ok(CatalogName::Nut7));
        assert!("NUT8".parse::<CatalogName>().is_err());
    }

    #[test]
    fn nut7_entry_shape() {
        let e = catalog(CatalogName::Nut7);
        assert_eq!(e.expected_nullity, 1);
        assert_eq!(e.graph.edge_count(), 8);
    }

    #[test]
    fn e8_degree_multiset() {
        let e = catalog(CatalogName::E8);
        assert_eq!(e.graph.degree_sequence(), vec![2, 4, 4, 4, 4, 5, 6, 7]);
    }

    #[test]
    fn g14_has_the_29_edge_list() {
        let e = catalog(CatalogName::G14);
        assert_eq!(e.graph.edge_count(), 29);
        // Vertex 5 is the one vertex not joined to the dominating vertex.
        assert!(!e.graph.has_edge(1, 5));
        assert_eq!(
            e.graph.degree_sequence(),
            vec![2, 2, 2, 2, 3, 4, 4, 4, 4, 4, 4, 5, 6, 12]
        );
    }

    #[test]
    fn g18_shape() {
        let e = catalog(CatalogName::G18);
        assert_eq!(e.graph.n(), 18);
        assert_eq!(e.graph.edge_count(), 38);
        assert!(e.graph.is_dominating(1));
    }

    #[test]
    fn e12_degree_multiset_matches_the_family_roles() {
        let e = catalog(CatalogName::E12);
        assert_eq!(
            e.graph.degree_sequence(),
            vec![2, 2, 2, 4, 4, 4, 4, 4, 4, 5, 6, 11]
        );
    }
}
