//! Shared test support: an integer-elimination oracle that is independent of
//! the library's rational RREF path, plus small graph generators.
#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use ackkit::graph::Graph;
use rand::Rng;

pub fn adjacency_ints(g: &Graph) -> Vec<Vec<i128>> {
    (1..=g.n())
        .map(|u| {
            (1..=g.n())
                .map(|v| if u != v && g.has_edge(u, v) { 1 } else { 0 })
                .collect()
        })
        .collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Rank by integer row echelon with gcd-normalized cross-multiplication;
/// no rationals anywhere, so this cannot share a bug with QMatrix::rref.
pub fn int_rank(mut m: Vec<Vec<i128>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            if m[r][col] != 0 {
                let g = gcd(m[rank][col], m[r][col]);
                let (mul_r, mul_p) = (m[rank][col] / g, m[r][col] / g);
                for c in col..cols {
                    m[r][c] = m[r][c] * mul_r - m[rank][c] * mul_p;
                }
                let rg = m[r][col..].iter().fold(0, |acc, &x| gcd(acc, x));
                if rg > 1 {
                    for c in col..cols {
                        m[r][c] /= rg;
                    }
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Exact determinant by fraction-free (Bareiss) elimination over i128.
/// Safe far beyond the {0,1} matrices of order <= 12 used in tests.
pub fn int_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Adjugate via cofactor determinants, entry (i, j) = (-1)^{i+j} det(M_ji).
pub fn int_adjugate(m: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = m.len();
    let minor = |row: usize, col: usize| -> Vec<Vec<i128>> {
        (0..n)
            .filter(|&r| r != row)
            .map(|r| (0..n).filter(|&c| c != col).map(|c| m[r][c]).collect())
            .collect()
    };
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    sign * int_det(minor(j, i))
                })
                .collect()
        })
        .collect()
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Erdos-Renyi-style sample, rejected until connected.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(0.45) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.edge_count() > 0 && g.structural_predicates().connected {
            return g;
        }
    }
}
