use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::word::{Monomial, MonomialIndex};
use super::AlgebraError;
use crate::exactlinalg::{Int, SparseVec};

/// Integer polynomial in noncommuting variables, with every term of degree
/// above `trunc` identically dropped.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Int>,
    trunc: usize,
}

impl Poly {
    pub fn zero(trunc: usize) -> Poly {
        Poly { terms: BTreeMap::new(), trunc }
    }

    pub fn term(w: Monomial, coeff: Int, trunc: usize) -> Poly {
        let mut p = Poly::zero(trunc);
        p.add_term(w, coeff);
        p
    }

    pub fn generator(i: usize, trunc: usize) -> Poly {
        Poly::term(Monomial::letter(i), Int::ONE, trunc)
    }

    pub fn from_terms(trunc: usize, terms: impl IntoIterator<Item = (Monomial, Int)>) -> Poly {
        let mut p = Poly::zero(trunc);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn trunc_degree(&self) -> usize {
        self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Int)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Monomial) -> Int {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn add_term(&mut self, w: Monomial, coeff: Int) {
        if w.degree() > self.trunc || coeff.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn assert_same_trunc(&self, other: &Poly) {
        assert_eq!(self.trunc, other.trunc, "mixing truncation degrees {} and {}", self.trunc, other.trunc);
    }

    /// Panics if the truncation degrees differ.
    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_trunc(other);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    /// Panics if the truncation degrees differ.
    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&Int::from(-1)))
    }

    pub fn scale(&self, k: &Int) -> Poly {
        if k.is_zero() {
            return Poly::zero(self.trunc);
        }
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect();
        Poly { terms, trunc: self.trunc }
    }

    pub fn truncate(&self, d: usize) -> Poly {
        let terms = self.terms.iter().filter(|(w, _)| w.degree() <= d).map(|(w, c)| (w.clone(), c.clone())).collect();
        Poly { terms, trunc: d }
    }

    /// Coordinates in `ix`; the constant term and anything above the index's
    /// degree are dropped.
    pub fn to_coords(&self, ix: &MonomialIndex) -> SparseVec {
        let mut v: SparseVec = self.terms.iter().filter_map(|(w, c)| ix.index(w).map(|i| (i, c.clone()))).collect();
        v.sort_by_key(|e| e.0);
        v
    }

    pub fn from_coords(ix: &MonomialIndex, v: &[(usize, Int)], trunc: usize) -> Poly {
        Poly::from_terms(trunc, v.iter().map(|(i, c)| (ix.word(*i), c.clone())))
    }
}

/// Concatenation product, discarding every term of degree above `d`.
pub fn multiply(p: &Poly, q: &Poly, d: usize) -> Result<Poly, AlgebraError> {
    for x in [p, q] {
        if x.trunc < d {
            return Err(AlgebraError::TruncationMismatch { have: x.trunc, need: d });
        }
    }
    let mut out = Poly::zero(d);
    for (u, a) in &p.terms {
        for (v, b) in &q.terms {
            if u.degree() + v.degree() <= d {
                out.add_term(u.concat(v), a * b);
            }
        }
    }
    Ok(out)
}

/// `pq - qp` truncated at `d`.
pub fn commutator(p: &Poly, q: &Poly, d: usize) -> Result<Poly, AlgebraError> {
    Ok(multiply(p, q, d)?.sub(&multiply(q, p, d)?))
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{w:?}")?;
        }
        Ok(())
    }
}
