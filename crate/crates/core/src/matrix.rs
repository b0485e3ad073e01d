//! Exact sparse integer matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;

/// A `rows × cols` integer matrix storing only its nonzero entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), i64>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), 1);
        }
        m
    }

    /// Builds from `(row, col, value)` triplets; repeated positions add up.
    ///
    /// # Panics
    /// If a position is out of bounds.
    pub fn from_triplets(rows: usize, cols: usize, triplets: &[(usize, usize, i64)]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for &(r, c, v) in triplets {
            assert!(
                r < rows && c < cols,
                "entry ({r},{c}) outside {rows}x{cols}"
            );
            m.add_at(r, c, v);
        }
        m
    }

    pub fn triplets(&self) -> Vec<(usize, usize, i64)> {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v)).collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries.get(&(r, c)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        if v == 0 {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    fn add_at(&mut self, r: usize, c: usize, v: i64) {
        let total = self
            .get(r, c)
            .checked_add(v)
            .expect("matrix entry overflow");
        self.set(r, c, total);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), &v)| ((c, r), v))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut by_row: Vec<Vec<(usize, i64)>> = vec![Vec::new(); other.rows];
        for (&(r, c), &v) in &other.entries {
            by_row[r].push((c, v));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (&(r, k), &a) in &self.entries {
            for &(c, b) in &by_row[k] {
                out.add_at(r, c, a.checked_mul(b).expect("matrix entry overflow"));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "dimension mismatch in sum"
        );
        let mut out = self.clone();
        for (&(r, c), &v) in &other.entries {
            out.add_at(r, c, sign * v);
        }
        out
    }

    /// First position (in row-major order) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        let diff = self.sub(other);
        diff.entries.keys().next().copied()
    }

    /// Entries in `{0, 1}` with at most one 1 per row and per column.
    pub fn is_partial_permutation(&self) -> bool {
        let mut rows = vec![false; self.rows];
        let mut cols = vec![false; self.cols];
        for (&(r, c), &v) in &self.entries {
            if v != 1 || rows[r] || cols[c] {
                return false;
            }
            rows[r] = true;
            cols[c] = true;
        }
        true
    }

    /// Self-adjoint idempotent.
    pub fn is_projection(&self) -> bool {
        self.rows == self.cols && *self == self.transpose() && self.mul(self) == *self
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<BTreeMap<usize, Rational64>> = vec![BTreeMap::new(); self.rows];
        for (&(r, c), &v) in &self.entries {
            rows[r].insert(c, Rational64::from_integer(v));
        }
        let mut rows: Vec<_> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let mut rank = 0;
        while let Some(pivot_row) = rows.pop() {
            let Some((&pc, &pv)) = pivot_row.iter().next() else {
                continue;
            };
            rank += 1;
            for row in rows.iter_mut() {
                if let Some(&f) = row.get(&pc) {
                    let factor = f / pv;
                    for (&c, &v) in &pivot_row {
                        let nv = row.get(&c).copied().unwrap_or_default() - factor * v;
                        if nv == Rational64::default() {
                            row.remove(&c);
                        } else {
                            row.insert(c, nv);
                        }
                    }
                }
            }
            rows.retain(|r| !r.is_empty());
        }
        rank
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        out.entries = self.entries.clone();
        for (&(r, c), &v) in &other.entries {
            out.entries.insert((r + self.rows, c + self.cols), v);
        }
        out
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SparseMatrix({}x{}, {:?})",
            self.rows,
            self.cols,
            self.triplets()
        )
    }
}
