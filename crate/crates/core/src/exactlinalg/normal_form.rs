//! Hermite and Smith normal forms.

use super::echelon::Echelon;
use super::int::Int;
use super::matrix::IntMatrix;
use super::sparse::SparseVec;
use super::submodule::SubmoduleBasis;

/// Row Hermite normal form of the row span of `m`.
pub fn hnf(m: &IntMatrix) -> SubmoduleBasis {
    SubmoduleBasis::from_rows(m.ncols(), m.sparse_rows())
}

/// Hermite form together with a transform.
///
/// Returns `(H, U, K)` where `H = U * m` and the rows of `K` form a basis of
/// the left kernel `{x : x * m = 0}`.
pub fn hnf_with_transform(m: &IntMatrix) -> (SubmoduleBasis, IntMatrix, Vec<SparseVec>) {
    let (cols, nrows) = (m.ncols(), m.nrows());
    let mut e = Echelon::new(cols + nrows);
    for (i, row) in m.sparse_rows().into_iter().enumerate() {
        let mut r = row;
        r.push((cols + i, Int::ONE));
        e.insert(r);
    }
    let mut image = Vec::new();
    let mut transform = Vec::new();
    let mut kernel = Vec::new();
    for row in e.into_hnf() {
        let split = row.partition_point(|(c, _)| *c < cols);
        let tag: SparseVec = row[split..].iter().map(|(c, x)| (c - cols, x.clone())).collect();
        if split == 0 {
            kernel.push(tag);
        } else {
            image.push(row[..split].to_vec());
            transform.push(tag);
        }
    }
    let u = IntMatrix::from_sparse(nrows, &transform);
    (SubmoduleBasis::from_hnf_rows(cols, image), u, kernel)
}

/// Smith normal form with transforms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    /// `min(rows, cols)` entries, nonnegative, each dividing the next
    /// (zeros last).
    pub diagonal: Vec<Int>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

/// Classical Smith reduction with minimal-absolute-value pivoting, so that
/// `left * m * right` is diagonal and both transforms are unimodular.
pub fn snf(m: &IntMatrix) -> Snf {
    let (r, c) = (m.nrows(), m.ncols());
    let mut a = m.clone();
    let mut left = IntMatrix::identity(r);
    let mut right = IntMatrix::identity(c);
    let k = r.min(c);
    for t in 0..k {
        loop {
            let Some((pi, pj)) = min_abs_position(&a, t) else {
                break;
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);
            let mut dirty = false;
            for i in t + 1..r {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                a.row_sub_mul(i, &q, t);
                left.row_sub_mul(i, &q, t);
                dirty |= !a[(i, t)].is_zero();
            }
            if dirty {
                continue;
            }
            for j in t + 1..c {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                a.col_sub_mul(j, &q, t);
                right.col_sub_mul(j, &q, t);
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[(t, t)].divides(&a[(i, j)])));
            match bad {
                Some(i) => {
                    a.row_sub_mul(t, &Int::from(-1), i);
                    left.row_sub_mul(t, &Int::from(-1), i);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }
    let diagonal = (0..k).map(|i| a[(i, i)].clone()).collect();
    Snf { diagonal, left, right }
}

fn min_abs_position(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(Int, usize, usize)> = None;
    for i in t..a.nrows() {
        for j in t..a.ncols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let av = v.abs();
            if best.as_ref().is_none_or(|(b, _, _)| av < *b) {
                best = Some((av, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Nonzero invariant factors (ascending, including ones) of the lattice map
/// given by `rows`, computed by alternating row and column Hermite forms
/// until diagonal. No transforms are kept, so this scales to the large
/// coordinate matrices met in quotient computations.
pub fn invariant_factors(ncols: usize, rows: Vec<SparseVec>) -> Vec<Int> {
    let mut rows = rows;
    let mut width = ncols;
    let mut diag = loop {
        let mut e = Echelon::new(width);
        for r in rows {
            e.insert(r);
        }
        let h = e.into_hnf();
        if h.iter().all(|r| r.len() == 1) {
            break h.into_iter().map(|r| r[0].1.clone()).collect::<Vec<_>>();
        }
        let k = h.len();
        let mut t: Vec<SparseVec> = vec![Vec::new(); width];
        for (i, r) in h.into_iter().enumerate() {
            for (c, x) in r {
                t[c].push((i, x));
            }
        }
        rows = t.into_iter().filter(|r| !r.is_empty()).collect();
        width = k;
    };
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            if diag[i].divides(&diag[j]) {
                continue;
            }
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}
