use std::sync::OnceLock;

use crate::exactlinalg::{sparse, Int, SparseVec, SubmoduleBasis};
use crate::freealgebra::{AlgebraError, LieExpr, LyndonBasis, MonomialIndex, Poly};
use crate::par_map;

/// Coordinate systems for `U(F)/ϖ^{D+1}` (monomials of degree `1..=D`) and
/// `F/γ_{D+1}(F)` (Lyndon brackets of degree `1..=D`).
///
/// Both coordinate orders are prefix-compatible across truncations: the
/// first `dim_below(n)` positions mean the same thing for every `D ≥ n-1`.
pub struct TruncatedContext {
    basis: LyndonBasis,
    /// `ad[j][i]`: Lie coordinates of `[e_i, X_j]`.
    ad: OnceLock<Vec<Vec<SparseVec>>>,
}

impl TruncatedContext {
    pub fn new(m: usize, max_degree: usize) -> TruncatedContext {
        assert!(max_degree >= 1, "truncation degree must be positive");
        TruncatedContext { basis: LyndonBasis::new(m, max_degree), ad: OnceLock::new() }
    }

    pub fn generators(&self) -> usize {
        self.basis.generators()
    }

    pub fn max_degree(&self) -> usize {
        self.basis.max_degree()
    }

    pub fn basis(&self) -> &LyndonBasis {
        &self.basis
    }

    pub fn monomials(&self) -> &MonomialIndex {
        self.basis.monomials()
    }

    pub fn assoc_dim(&self) -> usize {
        self.monomials().dim()
    }

    pub fn lie_dim(&self) -> usize {
        self.basis.dim()
    }

    fn ad_table(&self) -> &Vec<Vec<SparseVec>> {
        self.ad.get_or_init(|| {
            let ix = self.monomials();
            let top = self.basis.dim_below(self.max_degree());
            let items: Vec<(usize, usize)> =
                (0..self.generators()).flat_map(|j| (0..top).map(move |i| (j, i))).collect();
            let entries = par_map(&items, |&(j, i)| {
                let img = self.basis.image(i);
                let right: SparseVec = img.iter().map(|(c, x)| (ix.right_mul(j, *c).unwrap(), x.clone())).collect();
                let left: SparseVec = img.iter().map(|(c, x)| (ix.left_mul(j, *c).unwrap(), x.clone())).collect();
                let diff = sparse::axpy(&right, &Int::ONE, &sparse::merge_terms(left));
                self.basis.solve(&diff).expect("brackets of Lie elements are Lie elements")
            });
            let mut table = vec![Vec::with_capacity(self.lie_dim()); self.generators()];
            for ((j, _), v) in items.iter().zip(entries) {
                table[*j].push(v);
            }
            table
        })
    }

    /// `[v, X_j]` in Lie coordinates.
    pub fn ad(&self, v: &[(usize, Int)], j: usize) -> SparseVec {
        let table = &self.ad_table()[j];
        let terms: Vec<(usize, Int)> = v
            .iter()
            .filter(|(i, _)| *i < table.len())
            .flat_map(|(i, c)| table[*i].iter().map(move |(k, x)| (*k, x * c)))
            .collect();
        sparse::merge_terms(terms)
    }

    /// `[u, v]` in Lie coordinates, computed through the associative
    /// embedding.
    pub fn bracket(&self, u: &[(usize, Int)], v: &[(usize, Int)]) -> SparseVec {
        if let [(i, c)] = v {
            if *i < self.generators() {
                return sparse::scale(&self.ad(u, *i), c);
            }
        }
        let (eu, ev) = (self.embed(u), self.embed(v));
        let limit = self.assoc_dim();
        let uv = assoc_product(self.monomials(), &eu, &ev, limit);
        let vu = assoc_product(self.monomials(), &ev, &eu, limit);
        self.basis.solve(&sparse::axpy(&uv, &Int::ONE, &vu)).expect("brackets of Lie elements are Lie elements")
    }

    /// Lie coordinates of an expression, evaluated directly in the basis.
    pub fn lie_vector(&self, e: &LieExpr) -> Result<SparseVec, AlgebraError> {
        e.validate(self.generators())?;
        Ok(self.lie_vector_unchecked(e))
    }

    fn lie_vector_unchecked(&self, e: &LieExpr) -> SparseVec {
        match e {
            LieExpr::Gen(g) => vec![(*g, Int::ONE)],
            LieExpr::Bracket(items) => {
                let mut acc = self.lie_vector_unchecked(&items[0]);
                for item in &items[1..] {
                    if acc.is_empty() {
                        break;
                    }
                    acc = match item {
                        LieExpr::Gen(j) => self.ad(&acc, *j),
                        _ => self.bracket(&acc, &self.lie_vector_unchecked(item)),
                    };
                }
                acc
            }
            LieExpr::Sum(terms) => {
                let parts: Vec<(usize, Int)> = terms
                    .iter()
                    .filter(|(k, _)| !k.is_zero())
                    .flat_map(|(k, e)| sparse::scale(&self.lie_vector_unchecked(e), k))
                    .collect();
                sparse::merge_terms(parts)
            }
        }
    }

    /// Associative coordinates of a Lie coordinate vector.
    pub fn embed(&self, v: &[(usize, Int)]) -> SparseVec {
        let terms = v.iter().flat_map(|(i, c)| self.basis.image(*i).iter().map(move |(j, x)| (*j, x * c)));
        sparse::merge_terms(terms.collect())
    }

    pub fn embed_module(&self, b: &SubmoduleBasis) -> SubmoduleBasis {
        self.basis.lie_submodule_to_poly_coords(b)
    }

    /// Associative coordinates of `p`; `p` must carry at least this
    /// context's truncation.
    pub fn poly_coords(&self, p: &Poly) -> Result<SparseVec, AlgebraError> {
        if p.trunc_degree() < self.max_degree() {
            return Err(AlgebraError::TruncationMismatch { have: p.trunc_degree(), need: self.max_degree() });
        }
        Ok(p.to_coords(self.monomials()))
    }
}

/// Product of two associative coordinate vectors, keeping only positions
/// below `limit`.
pub(crate) fn assoc_product(ix: &MonomialIndex, a: &[(usize, Int)], b: &[(usize, Int)], limit: usize) -> SparseVec {
    let mut terms = Vec::new();
    for (i, x) in a {
        for (j, y) in b {
            match ix.concat(*i, *j) {
                Some(k) if k < limit => terms.push((k, x * y)),
                _ => {}
            }
        }
    }
    sparse::merge_terms(terms)
}
