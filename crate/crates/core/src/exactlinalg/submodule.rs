use serde::Serialize;

use super::echelon::Echelon;
use super::int::Int;
use super::matrix::IntMatrix;
use super::normal_form::invariant_factors;
use super::sparse::{self, SparseVec};
use super::LinalgError;

/// A subgroup of `Z^n`, stored as its row Hermite normal form. Two bases are
/// equal exactly when they span the same subgroup.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubmoduleBasis {
    ambient_rank: usize,
    rows: Vec<SparseVec>,
}

/// Structure of a finitely generated abelian group:
/// `Z/d_1 + ... + Z/d_k + Z^free_rank` with `1 < d_1 | d_2 | ... | d_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize)]
pub struct ElementaryDivisors {
    pub divisors: Vec<Int>,
    pub free_rank: usize,
}

impl ElementaryDivisors {
    pub fn is_trivial(&self) -> bool {
        self.divisors.is_empty() && self.free_rank == 0
    }

    /// Order of the torsion part.
    pub fn torsion_order(&self) -> Int {
        self.divisors.iter().fold(Int::ONE, |acc, d| &acc * d)
    }

    /// Largest divisor, or 1 for a torsion-free group.
    pub fn exponent(&self) -> Int {
        self.divisors.last().cloned().unwrap_or(Int::ONE)
    }
}

impl SubmoduleBasis {
    pub fn zero(ambient_rank: usize) -> SubmoduleBasis {
        SubmoduleBasis { ambient_rank, rows: Vec::new() }
    }

    pub fn full(ambient_rank: usize) -> SubmoduleBasis {
        Self::unit_vectors(ambient_rank, 0..ambient_rank)
    }

    /// Span of the unit vectors at the given (increasing) positions.
    pub fn unit_vectors(ambient_rank: usize, cols: impl IntoIterator<Item = usize>) -> SubmoduleBasis {
        let rows = cols.into_iter().map(|c| vec![(c, Int::ONE)]).collect();
        SubmoduleBasis { ambient_rank, rows }
    }

    pub fn from_rows(ambient_rank: usize, rows: impl IntoIterator<Item = SparseVec>) -> SubmoduleBasis {
        let mut e = Echelon::new(ambient_rank);
        for r in rows {
            e.insert(r);
        }
        Self::from_echelon(e)
    }

    pub fn from_echelon(e: Echelon) -> SubmoduleBasis {
        let ambient_rank = e.ncols();
        SubmoduleBasis { ambient_rank, rows: e.into_hnf() }
    }

    /// Wraps rows that are already in Hermite normal form.
    pub(crate) fn from_hnf_rows(ambient_rank: usize, rows: Vec<SparseVec>) -> SubmoduleBasis {
        SubmoduleBasis { ambient_rank, rows }
    }

    pub fn from_matrix(m: &IntMatrix) -> SubmoduleBasis {
        Self::from_rows(m.ncols(), m.sparse_rows())
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_sparse(self.ambient_rank, &self.rows)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    fn row_with_pivot(&self, col: usize) -> Option<usize> {
        self.rows.binary_search_by_key(&col, |r| r[0].0).ok()
    }

    /// Coordinates of `v` over the basis rows, as `(row, coefficient)` pairs.
    pub fn decompose(&self, v: &[(usize, Int)]) -> Option<Vec<(usize, Int)>> {
        let mut v: SparseVec = v.to_vec();
        let mut coords = Vec::new();
        while let Some((col, lead)) = v.first() {
            let i = self.row_with_pivot(*col)?;
            let p = &self.rows[i];
            let q = lead.checked_div_exact(&p[0].1)?;
            v = sparse::axpy(&v, &q, p);
            coords.push((i, q));
        }
        Some(coords)
    }

    pub fn contains(&self, v: &[(usize, Int)]) -> bool {
        self.decompose(v).is_some()
    }

    pub fn contains_module(&self, other: &SubmoduleBasis) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Canonical representative of `v` modulo the submodule: every entry in a
    /// pivot column is reduced into `[0, pivot)`.
    pub fn reduce(&self, v: &[(usize, Int)]) -> SparseVec {
        let mut v: SparseVec = v.to_vec();
        for p in &self.rows {
            let col = p[0].0;
            let Ok(pos) = v.binary_search_by_key(&col, |e| e.0) else {
                continue;
            };
            let q = v[pos].1.div_floor(&p[0].1);
            if !q.is_zero() {
                v = sparse::axpy(&v, &q, p);
            }
        }
        v
    }

    /// Re-expresses the module in a wider or narrower ambient space by
    /// keeping only coordinates below `n`; rows are re-normalized.
    pub fn truncate(&self, n: usize) -> SubmoduleBasis {
        let rows = self.rows.iter().map(|r| r.iter().filter(|(c, _)| *c < n).cloned().collect());
        SubmoduleBasis::from_rows(n, rows)
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows
    }
}

fn check_dims(expected: usize, found: usize) -> Result<(), LinalgError> {
    if expected == found {
        Ok(())
    } else {
        Err(LinalgError::DimensionMismatch { expected, found })
    }
}

/// Integer coordinates of `v` over the rows of `b`, or `None` if `v` is not
/// in the span.
pub fn member(v: &[Int], b: &SubmoduleBasis) -> Result<Option<Vec<Int>>, LinalgError> {
    check_dims(b.ambient_rank, v.len())?;
    Ok(b.decompose(&sparse::from_dense(v)).map(|coords| {
        let mut out = vec![Int::ZERO; b.rank()];
        for (i, q) in coords {
            out[i] += &q;
        }
        out
    }))
}

pub fn module_sum(a: &SubmoduleBasis, b: &SubmoduleBasis) -> Result<SubmoduleBasis, LinalgError> {
    check_dims(a.ambient_rank, b.ambient_rank)?;
    if a.contains_module(b) {
        return Ok(a.clone());
    }
    let mut e = Echelon::new(a.ambient_rank);
    for r in a.rows.iter().chain(&b.rows) {
        e.insert(r.clone());
    }
    Ok(SubmoduleBasis::from_echelon(e))
}

/// `A ∩ B` via the kernel of the stacked system `[A A; B 0]`.
pub fn module_intersect(a: &SubmoduleBasis, b: &SubmoduleBasis) -> Result<SubmoduleBasis, LinalgError> {
    check_dims(a.ambient_rank, b.ambient_rank)?;
    let n = a.ambient_rank;
    let mut e = Echelon::new(2 * n);
    for r in &a.rows {
        let mut row = r.clone();
        row.extend(r.iter().map(|(c, x)| (c + n, x.clone())));
        e.insert(row);
    }
    for r in &b.rows {
        e.insert(r.clone());
    }
    let kernel = e
        .rows()
        .iter()
        .filter(|r| r[0].0 >= n)
        .map(|r| r.iter().map(|(c, x)| (c - n, x.clone())).collect::<SparseVec>())
        .collect::<Vec<_>>();
    Ok(SubmoduleBasis::from_rows(n, kernel))
}

/// Abelian group structure of `A / B`; requires `B ⊆ A`.
pub fn quotient_structure(a: &SubmoduleBasis, b: &SubmoduleBasis) -> Result<ElementaryDivisors, LinalgError> {
    check_dims(a.ambient_rank, b.ambient_rank)?;
    let mut coords = Vec::with_capacity(b.rank());
    for (i, r) in b.rows.iter().enumerate() {
        let c = a.decompose(r).ok_or(LinalgError::NotContained { row: i })?;
        coords.push(sparse::accumulate(a.rank(), c));
    }
    let factors = invariant_factors(a.rank(), coords);
    let free_rank = a.rank() - factors.len();
    let divisors = factors.into_iter().filter(|d| !d.is_one()).collect();
    Ok(ElementaryDivisors { divisors, free_rank })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(n: usize, rows: &[&[i64]]) -> SubmoduleBasis {
        SubmoduleBasis::from_matrix(&IntMatrix::from_i64(n, rows))
    }

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn member_examples() {
        let b = span(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(member(&ints(&[2, 2]), &b).unwrap(), Some(ints(&[1, 1])));
        assert_eq!(member(&ints(&[1, 1]), &b).unwrap(), None);
        assert_eq!(member(&ints(&[0, 0]), &b).unwrap(), Some(ints(&[0, 0])));
        assert_eq!(
            member(&ints(&[1]), &b),
            Err(LinalgError::DimensionMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn sum_examples() {
        let a = span(2, &[&[2, 0]]);
        assert_eq!(module_sum(&a, &span(2, &[&[0, 3]])).unwrap(), span(2, &[&[2, 0], &[0, 3]]));
        assert_eq!(module_sum(&a, &a).unwrap(), a);
        assert_eq!(module_sum(&a, &span(2, &[&[3, 0]])).unwrap(), span(2, &[&[1, 0]]));
        assert!(module_sum(&a, &SubmoduleBasis::zero(3)).is_err());
    }

    #[test]
    fn intersect_examples() {
        let a = span(2, &[&[2, 0]]);
        assert_eq!(module_intersect(&a, &span(2, &[&[3, 0]])).unwrap(), span(2, &[&[6, 0]]));
        let b = span(2, &[&[4, 6], &[0, 9]]);
        assert_eq!(module_intersect(&SubmoduleBasis::full(2), &b).unwrap(), b);
        let d = module_intersect(&span(2, &[&[1, 0]]), &span(2, &[&[0, 1]])).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn quotient_examples() {
        let full = SubmoduleBasis::full(2);
        let q = quotient_structure(&full, &span(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(q, ElementaryDivisors { divisors: ints(&[6]), free_rank: 0 });
        let q = quotient_structure(&full, &full).unwrap();
        assert!(q.is_trivial());
        let q = quotient_structure(&full, &span(2, &[&[2, 0]])).unwrap();
        assert_eq!(q, ElementaryDivisors { divisors: ints(&[2]), free_rank: 1 });
        let e = quotient_structure(&span(2, &[&[2, 0]]), &full);
        assert_eq!(e, Err(LinalgError::NotContained { row: 0 }));
    }

    #[test]
    fn reduce_is_canonical() {
        let b = span(2, &[&[2, 1], &[0, 3]]);
        let r1 = b.reduce(&sparse::from_dense(&ints(&[3, 4])));
        let r2 = b.reduce(&sparse::from_dense(&ints(&[1, 0])));
        assert_eq!(r1, r2);
    }
}
