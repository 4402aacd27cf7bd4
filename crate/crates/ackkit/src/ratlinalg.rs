//! Exact dense linear algebra over the rationals.
//!
//! Everything here is arbitrary precision: entries are `BigRational`, so row
//! reduction, null spaces, solves and inverses are computed with no rounding
//! anywhere. Pivoting is "first nonzero row" — exact arithmetic needs no
//! magnitude pivoting, and a fixed rule keeps every result deterministic.
//!
//! Matrices and vectors are immutable after construction and all operations
//! are pure, so values can be shared freely across threads.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar: arbitrary-precision, always gcd-reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for the rational `num/den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Fixed-length vector of exact rationals.
///
/// Entries are 0-indexed; when a vector is indexed by graph vertices, vertex
/// `v` lives at entry `v - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QVector {
    entries: Vec<Rational>,
}

impl QVector {
    pub fn from_entries(entries: Vec<Rational>) -> Self {
        QVector { entries }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        QVector {
            entries: entries.iter().map(|&n| int(n)).collect(),
        }
    }

    pub fn zeros(len: usize) -> Self {
        QVector {
            entries: vec![Rational::zero(); len],
        }
    }

    /// Standard basis vector `e_i` (0-indexed) of the given length.
    pub fn basis(len: usize, i: usize) -> Self {
        assert!(i < len, "basis index {i} out of range for length {len}");
        let mut v = Self::zeros(len);
        v.entries[i] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.entries.iter()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.entries
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        assert_eq!(self.len(), other.len(), "dot of mismatched lengths");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// True iff no entry is zero (a "full" vector).
    pub fn is_full(&self) -> bool {
        !self.entries.is_empty() && self.entries.iter().all(|e| !e.is_zero())
    }

    /// `self + c * other`, entry-exact.
    pub fn add_scaled(&self, c: &Rational, other: &QVector) -> QVector {
        assert_eq!(self.len(), other.len(), "add_scaled of mismatched lengths");
        QVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + c * b)
                .collect(),
        }
    }

    pub fn scaled(&self, c: &Rational) -> QVector {
        QVector {
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Concatenation, used to extend kernel vectors over added vertices.
    pub fn extended(&self, tail: &[Rational]) -> QVector {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(tail);
        QVector { entries }
    }

    /// True iff `self = c * other` for some nonzero rational `c`.
    pub fn is_proportional_to(&self, other: &QVector) -> bool {
        if self.len() != other.len() || self.is_zero() || other.is_zero() {
            return false;
        }
        let mut ratio: Option<Rational> = None;
        for (a, b) in self.entries.iter().zip(&other.entries) {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return false,
                (false, false) => {
                    let r = a / b;
                    match &ratio {
                        None => ratio = Some(r),
                        Some(prev) if *prev == r => {}
                        Some(_) => return false,
                    }
                }
            }
        }
        true
    }
}

impl std::ops::Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Rational>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        QMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        assert!(!rows.is_empty(), "from_rows needs at least one row");
        let cols = rows[0].len();
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "from_rows needs equal-length rows"
        );
        QMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| int(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> QVector {
        QVector::from_entries(self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn column(&self, c: usize) -> QVector {
        QVector::from_entries((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// `self + t * I` for square matrices; used for the integer shifts A ± I.
    pub fn plus_scaled_identity(&self, t: i64) -> QMatrix {
        assert_eq!(self.rows, self.cols, "identity shift needs a square matrix");
        let t = int(t);
        QMatrix::from_fn(self.rows, self.cols, |r, c| {
            if r == c {
                self.get(r, c) + &t
            } else {
                self.get(r, c).clone()
            }
        })
    }

    pub fn mul_vec(&self, v: &QVector) -> QVector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        QVector::from_entries(
            (0..self.rows)
                .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
                .collect(),
        )
    }

    pub fn mul_mat(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "matrix-matrix dimension mismatch");
        QMatrix::from_fn(self.rows, other.cols, |r, c| {
            (0..self.cols)
                .map(|k| self.get(r, k) * other.get(k, c))
                .sum()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// True iff no entry is zero (a "full" matrix).
    pub fn is_full(&self) -> bool {
        !self.entries.is_empty() && self.entries.iter().all(|e| !e.is_zero())
    }

    /// Reduced row echelon form together with the 0-indexed pivot columns
    /// (strictly increasing).
    ///
    /// The RREF is unique, so this is the canonical representative of the row
    /// space; pivot selection scans for the first row with a nonzero entry in
    /// the leading column.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m: Vec<Vec<Rational>> = (0..self.rows)
            .map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) = (pivot_row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, found);
            let inv = m[pivot_row][col].recip();
            for e in m[pivot_row].iter_mut() {
                *e *= &inv;
            }
            let pivot_values = std::mem::take(&mut m[pivot_row]);
            for (r, row) in m.iter_mut().enumerate() {
                if r != pivot_row && !row[col].is_zero() {
                    let factor = std::mem::replace(&mut row[col], Rational::zero());
                    for (entry, pivot_entry) in
                        row[col + 1..].iter_mut().zip(&pivot_values[col + 1..])
                    {
                        *entry -= &factor * pivot_entry;
                    }
                }
            }
            m[pivot_row] = pivot_values;
            pivots.push(col);
            pivot_row += 1;
        }
        (
            QMatrix {
                rows: self.rows,
                cols: self.cols,
                entries: m.into_iter().flatten().collect(),
            },
            pivots,
        )
    }

    /// `(rank, nullity)` with `rank + nullity = cols`.
    pub fn rank_nullity(&self) -> (usize, usize) {
        let (_, pivots) = self.rref();
        (pivots.len(), self.cols - pivots.len())
    }

    /// Canonical basis of the null space: the RREF free-variable basis, free
    /// variables taken in increasing column order. Each returned vector `v`
    /// satisfies `self * v = 0` entry-exactly.
    pub fn nullspace_basis(&self) -> Vec<QVector> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            basis.push(QVector::from_entries(v));
        }
        basis
    }

    /// Solves `self * y = b` exactly. Returns `None` when the system is
    /// inconsistent; otherwise the particular solution with every free
    /// variable set to zero.
    pub fn solve(&self, b: &QVector) -> Option<QVector> {
        assert_eq!(self.rows, b.len(), "solve: rhs length must match rows");
        let aug = QMatrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut y = vec![Rational::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            y[pc] = r.get(row, self.cols).clone();
        }
        Some(QVector::from_entries(y))
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols, "inverse needs a square matrix");
        let n = self.rows;
        let aug = QMatrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(QMatrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }
}
