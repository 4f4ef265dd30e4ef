use std::fmt;

use super::int::Int;
use super::sparse::{self, SparseVec};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, entries: vec![Int::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::ONE;
        }
        m
    }

    /// Panics unless every row has length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Int>>) -> IntMatrix {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            entries.extend(r);
        }
        IntMatrix { rows: n, cols, entries }
    }

    pub fn from_i64(cols: usize, rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            cols,
            rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect(),
        )
    }

    pub fn from_sparse(cols: usize, rows: &[SparseVec]) -> IntMatrix {
        IntMatrix::from_rows(cols, rows.iter().map(|r| sparse::to_dense(r, cols)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Int]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        self.row_iter().map(sparse::from_dense).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Int::is_zero)
    }

    /// Determinant by fraction-free (Bareiss) elimination; square only.
    pub fn determinant(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::ONE;
        }
        let mut a = self.clone();
        let mut sign = 1i64;
        let mut prev = Int::ONE;
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Int::ZERO;
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = Int::lin2(&a[(k, k)], &a[(i, j)], &(-&a[(i, k)]), &a[(k, j)]);
                    a[(i, j)] = v.checked_div_exact(&prev).expect("Bareiss division is exact");
                }
                a[(i, k)] = Int::ZERO;
            }
            prev = a[(k, k)].clone();
        }
        &a[(n - 1, n - 1)] * &Int::from(sign)
    }

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i -= q * row_j
    pub(crate) fn row_sub_mul(&mut self, i: usize, q: &Int, j: usize) {
        for c in 0..self.cols {
            let y = self[(j, c)].clone();
            self[(i, c)].sub_mul(q, &y);
        }
    }

    /// col_i -= q * col_j
    pub(crate) fn col_sub_mul(&mut self, i: usize, q: &Int, j: usize) {
        for r in 0..self.rows {
            let y = self[(r, j)].clone();
            self[(r, i)].sub_mul(q, &y);
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            self[(i, c)] = -&self[(i, c)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_i64(3, &[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(m.determinant(), Int::from(6));
        let s = IntMatrix::from_i64(2, &[&[0, 1], &[1, 0]]);
        assert_eq!(s.determinant(), Int::from(-1));
    }
}
