use std::collections::HashMap;
use std::sync::OnceLock;

use super::lyndon::{lyndon_words, LyndonWord};
use super::poly::Poly;
use super::word::{Monomial, MonomialIndex};
use super::AlgebraError;
use crate::exactlinalg::{sparse, Echelon, Int, SparseVec, SubmoduleBasis};

/// Coordinates of an element of `F/γ_{D+1}(F)` over the Lyndon bracket
/// basis of degrees `1..=max_degree`, ordered by degree and then lex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LieVector {
    pub max_degree: usize,
    pub coords: SparseVec,
}

/// Per-degree exact solver: Hermite form of the degree-`d` bracketings in
/// local monomial coordinates, plus the transform back to bracket rows.
struct DegreeSolver {
    hnf: SubmoduleBasis,
    transform: Vec<SparseVec>,
}

/// The Lyndon bracket basis of the free Lie ring on `m` generators,
/// truncated at `max_degree`, together with its embedding in the free
/// associative algebra.
pub struct LyndonBasis {
    words: Vec<LyndonWord>,
    offsets: Vec<usize>,
    index: HashMap<Monomial, usize>,
    monomials: MonomialIndex,
    images: Vec<SparseVec>,
    solvers: Vec<OnceLock<DegreeSolver>>,
}

impl LyndonBasis {
    pub fn new(m: usize, max_degree: usize) -> LyndonBasis {
        let monomials = MonomialIndex::new(m, max_degree);
        let mut words = Vec::new();
        let mut offsets = vec![0, 0];
        for d in 1..=max_degree {
            words.extend(lyndon_words(m, d));
            offsets.push(words.len());
        }
        let index: HashMap<Monomial, usize> =
            words.iter().enumerate().map(|(i, w)| (w.word().clone(), i)).collect();
        let mut images: Vec<SparseVec> = Vec::with_capacity(words.len());
        for w in &words {
            let img = match w.std_factorization() {
                None => vec![(monomials.index(w.word()).unwrap(), Int::ONE)],
                Some((u, v)) => {
                    let (bu, bv) = (&images[index[u.word()]], &images[index[v.word()]]);
                    let uv = product(&monomials, bu, bv);
                    let vu = product(&monomials, bv, bu);
                    sparse::axpy(&uv, &Int::ONE, &vu)
                }
            };
            images.push(img);
        }
        let solvers = (0..=max_degree).map(|_| OnceLock::new()).collect();
        LyndonBasis { words, offsets, index, monomials, images, solvers }
    }

    pub fn generators(&self) -> usize {
        self.monomials.generators()
    }

    pub fn max_degree(&self) -> usize {
        self.monomials.max_degree()
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    /// Number of basis elements of degree `< d`.
    pub fn dim_below(&self, d: usize) -> usize {
        self.offsets[d.clamp(1, self.max_degree() + 1)]
    }

    pub fn degree_range(&self, d: usize) -> std::ops::Range<usize> {
        self.offsets[d]..self.offsets[d + 1]
    }

    pub fn degree_of(&self, i: usize) -> usize {
        self.words[i].degree()
    }

    pub fn words(&self) -> &[LyndonWord] {
        &self.words
    }

    pub fn position(&self, w: &Monomial) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn monomials(&self) -> &MonomialIndex {
        &self.monomials
    }

    /// Bracketing of basis element `i` in associative coordinates.
    pub fn image(&self, i: usize) -> &SparseVec {
        &self.images[i]
    }

    /// Associative coordinates of a Lie coordinate vector.
    pub fn embed(&self, v: &[(usize, Int)]) -> SparseVec {
        let terms = v.iter().flat_map(|(i, c)| self.images[*i].iter().map(move |(j, x)| (*j, x * c)));
        sparse::accumulate(self.monomials.dim(), terms)
    }

    pub fn eval(&self, v: &LieVector) -> Poly {
        Poly::from_coords(&self.monomials, &self.embed(&v.coords), self.max_degree())
    }

    fn solver(&self, d: usize) -> &DegreeSolver {
        self.solvers[d].get_or_init(|| {
            let base = self.monomials.degree_range(d).start;
            let range = self.degree_range(d);
            let width = self.monomials.degree_range(d).len();
            let k = range.len();
            let mut e = Echelon::new(width + k);
            for (local, i) in range.enumerate() {
                let mut row: SparseVec = self.images[i].iter().map(|(c, x)| (c - base, x.clone())).collect();
                row.push((width + local, Int::ONE));
                e.insert(row);
            }
            let mut hnf_rows = Vec::with_capacity(k);
            let mut transform = Vec::with_capacity(k);
            for row in e.into_hnf() {
                let split = row.partition_point(|(c, _)| *c < width);
                assert!(split > 0, "Lyndon bracketings are linearly independent");
                hnf_rows.push(row[..split].to_vec());
                transform.push(row[split..].iter().map(|(c, x)| (c - width + self.offsets[d], x.clone())).collect());
            }
            // Pivots all lie in the monomial block, so the truncated rows
            // are still in Hermite form and keep their alignment with
            // `transform`.
            DegreeSolver { hnf: SubmoduleBasis::from_hnf_rows(width, hnf_rows), transform }
        })
    }

    /// Lie coordinates of a homogeneous-or-not associative coordinate
    /// vector, solved exactly degree by degree.
    pub fn solve(&self, v: &[(usize, Int)]) -> Option<SparseVec> {
        let mut out = Vec::new();
        let mut start = 0;
        while start < v.len() {
            let d = self.monomials.degree_of(v[start].0);
            let end = v.partition_point(|(c, _)| *c < self.monomials.degree_range(d).end);
            let base = self.monomials.degree_range(d).start;
            let local: SparseVec = v[start..end].iter().map(|(c, x)| (c - base, x.clone())).collect();
            let s = self.solver(d);
            let coords = s.hnf.decompose(&local)?;
            let terms = coords
                .iter()
                .flat_map(|(r, q)| s.transform[*r].iter().map(move |(c, x)| (*c, x * q)));
            out.extend(sparse::accumulate(self.dim(), terms));
            start = end;
        }
        out.sort_by_key(|e| e.0);
        Some(out)
    }

    /// Exact coordinates of `p` over the bracket basis, or `NotLieElement`.
    /// Terms above the basis degree are ignored.
    pub fn lie_coordinates(&self, p: &Poly) -> Result<LieVector, AlgebraError> {
        if !p.coeff(&Monomial::unit()).is_zero() {
            return Err(AlgebraError::NotLieElement);
        }
        if p.terms().any(|(w, _)| w.max_letter().is_some_and(|x| x >= self.generators())) {
            return Err(AlgebraError::NotLieElement);
        }
        let coords = self.solve(&p.to_coords(&self.monomials)).ok_or(AlgebraError::NotLieElement)?;
        Ok(LieVector { max_degree: self.max_degree(), coords })
    }

    /// Image of a Lie-coordinate submodule in associative coordinates.
    pub fn lie_submodule_to_poly_coords(&self, b: &SubmoduleBasis) -> SubmoduleBasis {
        assert_eq!(b.ambient_rank(), self.dim(), "Lie module from a different truncation");
        SubmoduleBasis::from_rows(self.monomials.dim(), b.rows().iter().map(|r| self.embed(r)))
    }
}

/// Product of two homogeneous associative coordinate vectors.
fn product(ix: &MonomialIndex, a: &[(usize, Int)], b: &[(usize, Int)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a {
        for (j, y) in b {
            if let Some(k) = ix.concat(*i, *j) {
                out.push((k, x * y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealgebra::lyndon::bracketing;

    #[test]
    fn images_match_recursive_bracketing() {
        let b = LyndonBasis::new(3, 4);
        for (i, w) in b.words().iter().enumerate() {
            let p = bracketing(w);
            assert_eq!(Poly::from_coords(b.monomials(), b.image(i), w.degree()), p);
        }
    }

    #[test]
    fn coordinates_examples() {
        let b = LyndonBasis::new(2, 3);
        let comm = Poly::from_terms(3, [(Monomial::new([0u8, 1]), Int::ONE), (Monomial::new([1u8, 0]), Int::from(-1))]);
        let v = b.lie_coordinates(&comm).unwrap();
        assert_eq!(v.coords, vec![(b.position(&Monomial::new([0u8, 1])).unwrap(), Int::ONE)]);
        let not_lie = Poly::term(Monomial::new([0u8, 1]), Int::ONE, 3);
        assert_eq!(b.lie_coordinates(&not_lie), Err(AlgebraError::NotLieElement));
        assert!(b.lie_coordinates(&Poly::zero(3)).unwrap().coords.is_empty());
    }

    #[test]
    fn degree_two_image_has_rank_one() {
        let b = LyndonBasis::new(2, 2);
        let deg2 = SubmoduleBasis::unit_vectors(b.dim(), b.degree_range(2));
        let img = b.lie_submodule_to_poly_coords(&deg2);
        assert_eq!(img.rank(), 1);
        assert_eq!(img.ambient_rank(), 6);
        assert!(b.lie_submodule_to_poly_coords(&SubmoduleBasis::zero(b.dim())).is_zero());
    }
}
