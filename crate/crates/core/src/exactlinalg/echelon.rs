//! Incremental integer row echelon form.
//!
//! Rows are inserted one at a time; each insertion either reduces to zero
//! (the vector already lies in the lattice) or strictly enlarges the lattice.
//! Pivot collisions are resolved with an extended-gcd 2x2 unimodular step, so
//! the stored rows always form a basis of the span of everything inserted.
//! Canonical Hermite form is produced on demand by [`Echelon::into_hnf`].

use super::int::Int;
use super::sparse::{axpy, lincomb, SparseVec};

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivot_row: Vec<u32>,
    rows: Vec<SparseVec>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Echelon {
        Echelon { ncols, pivot_row: vec![NONE; ncols], rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Appends zero columns on the right.
    pub fn widen(&mut self, ncols: usize) {
        assert!(ncols >= self.ncols);
        self.ncols = ncols;
        self.pivot_row.resize(ncols, NONE);
    }

    pub fn pivot_at(&self, col: usize) -> Option<&SparseVec> {
        match self.pivot_row[col] {
            NONE => None,
            r => Some(&self.rows[r as usize]),
        }
    }

    /// Inserts `v`; returns whether the lattice grew.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        let mut changed = false;
        loop {
            let Some((col, lead)) = v.first() else {
                return changed;
            };
            let col = *col;
            debug_assert!(col < self.ncols);
            let ri = self.pivot_row[col];
            if ri == NONE {
                if lead.is_negative() {
                    for e in v.iter_mut() {
                        e.1 = -&e.1;
                    }
                }
                self.pivot_row[col] = self.rows.len() as u32;
                self.rows.push(v);
                return true;
            }
            let p = &self.rows[ri as usize];
            let a = &p[0].1;
            if let Some(q) = lead.checked_div_exact(a) {
                v = axpy(&v, &q, p);
            } else {
                let b = lead.clone();
                let (g, s, t) = a.ext_gcd(&b);
                let bg = b.checked_div_exact(&g).unwrap();
                let ag = a.checked_div_exact(&g).unwrap();
                let new_p = lincomb(&s, p, &t, &v);
                let new_v = lincomb(&bg, p, &(-&ag), &v);
                debug_assert!(new_p[0].0 == col && new_p[0].1 == g);
                self.rows[ri as usize] = new_p;
                v = new_v;
                changed = true;
            }
        }
    }

    /// Reduces `v` against the pivots. Returns the coefficient of every row
    /// used, or `None` as soon as a leading entry cannot be cleared.
    pub fn decompose(&self, v: &[(usize, Int)]) -> Option<Vec<(usize, Int)>> {
        let mut v: SparseVec = v.to_vec();
        let mut coords = Vec::new();
        while let Some((col, lead)) = v.first() {
            let ri = self.pivot_row[*col];
            if ri == NONE {
                return None;
            }
            let p = &self.rows[ri as usize];
            let q = lead.checked_div_exact(&p[0].1)?;
            v = axpy(&v, &q, p);
            coords.push((ri as usize, q));
        }
        Some(coords)
    }

    pub fn contains(&self, v: &[(usize, Int)]) -> bool {
        self.decompose(v).is_some()
    }

    /// Canonical row Hermite normal form: rows sorted by pivot, positive
    /// pivots, entries above each pivot reduced into `[0, pivot)`.
    pub fn into_hnf(mut self) -> Vec<SparseVec> {
        self.rows.sort_by_key(|r| r[0].0);
        let k = self.rows.len();
        let mut pivot_row = vec![NONE; self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            pivot_row[r[0].0] = i as u32;
        }
        let mut dense = vec![Int::ZERO; self.ncols];
        for i in (0..k).rev() {
            let row = std::mem::take(&mut self.rows[i]);
            let start = row[0].0;
            let needs_work = row
                .iter()
                .skip(1)
                .any(|(c, x)| pivot_row[*c] != NONE && (x.is_negative() || *x >= self.rows[pivot_row[*c] as usize][0].1));
            if !needs_work {
                self.rows[i] = row;
                continue;
            }
            for (c, x) in &row {
                dense[*c] = x.clone();
            }
            for c in start + 1..self.ncols {
                let rj = pivot_row[c];
                if rj == NONE || dense[c].is_zero() {
                    continue;
                }
                let pr = &self.rows[rj as usize];
                let q = dense[c].div_floor(&pr[0].1);
                if q.is_zero() {
                    continue;
                }
                for (cc, y) in pr {
                    dense[*cc].sub_mul(&q, y);
                }
            }
            let mut out = Vec::new();
            for (c, x) in dense.iter_mut().enumerate().skip(start) {
                if !x.is_zero() {
                    out.push((c, std::mem::take(x)));
                }
            }
            self.rows[i] = out;
        }
        self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(e: &[i64]) -> SparseVec {
        super::super::sparse::from_dense(&e.iter().map(|&x| Int::from(x)).collect::<Vec<_>>())
    }

    #[test]
    fn gcd_merge_on_collision() {
        let mut e = Echelon::new(2);
        assert!(e.insert(sv(&[2, 0])));
        assert!(e.insert(sv(&[3, 0])));
        assert_eq!(e.rank(), 1);
        assert_eq!(e.into_hnf(), vec![sv(&[1, 0])]);
    }

    #[test]
    fn redundant_insert_reports_no_change() {
        let mut e = Echelon::new(2);
        e.insert(sv(&[1, 1]));
        e.insert(sv(&[0, 2]));
        assert!(!e.insert(sv(&[2, 4])));
        assert!(e.insert(sv(&[1, 0])));
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let mut e = Echelon::new(2);
        e.insert(sv(&[1, 1]));
        e.insert(sv(&[1, -1]));
        assert_eq!(e.into_hnf(), vec![sv(&[1, 1]), sv(&[0, 2])]);
    }
}
