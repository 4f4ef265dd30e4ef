//! Lower central series, dimension subrings and their quotients for a
//! presented Lie ring, computed in a nilpotent quotient of chosen class.
//!
//! All modules here are preimages in the Lie coordinates of
//! `F/γ_{c+1}(F)`; membership modulo the relation module answers
//! membership in the presented ring.

mod checks;
mod report;

pub use checks::{
    check_corollary, check_lemma2, check_sjogren, check_theorem1, sjogren, CheckOutcome, Lemma2Outcome,
    SjogrenConstant,
};
pub use report::{quotient_report, SeriesEntry, SeriesReport};

use crate::exactlinalg::{module_sum, quotient_structure, ElementaryDivisors, Int, LinalgError, SparseVec, SubmoduleBasis};
use crate::idealengine::{gamma_free, lie_closure, lie_preimage, right_closure, IdealError, TruncatedContext};
use crate::presentation::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("class {class} is too small for degree {n}; need class ≥ {}", n - 1)]
    ClassTooSmall { n: usize, class: usize },
    #[error("{what} {n} outside {min}..={max}")]
    OutOfRange { what: &'static str, n: usize, min: usize, max: usize },
    #[error("presentation is not in pre-abelian form")]
    NotPreabelian,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `F/(R + γ_{c+1}(F))` in Lie coordinates of degree `1..=c`.
pub struct NilpotentQuotient {
    ctx: TruncatedContext,
    relation_module: SubmoduleBasis,
    structure: ElementaryDivisors,
}

impl NilpotentQuotient {
    pub fn new(p: &Presentation, class: usize) -> Result<NilpotentQuotient, SeriesError> {
        if class == 0 {
            return Err(SeriesError::OutOfRange { what: "class", n: 0, min: 1, max: usize::MAX });
        }
        let ctx = TruncatedContext::new(p.rank(), class);
        let rows = p.relators().iter().map(|r| ctx.lie_vector(r)).collect::<Result<Vec<_>, _>>().map_err(IdealError::from)?;
        let relation_module = lie_closure(&ctx, rows);
        let structure = quotient_structure(&SubmoduleBasis::full(ctx.lie_dim()), &relation_module)?;
        Ok(NilpotentQuotient { ctx, relation_module, structure })
    }

    pub fn class_bound(&self) -> usize {
        self.ctx.max_degree()
    }

    pub fn context(&self) -> &TruncatedContext {
        &self.ctx
    }

    pub fn relation_module(&self) -> &SubmoduleBasis {
        &self.relation_module
    }

    /// Additive structure of `L/γ_{c+1}(L)`.
    pub fn structure(&self) -> &ElementaryDivisors {
        &self.structure
    }

    pub fn lie_dim(&self) -> usize {
        self.ctx.lie_dim()
    }

    fn check_n(&self, n: usize) -> Result<(), SeriesError> {
        let max = self.class_bound() + 1;
        if (1..=max).contains(&n) {
            Ok(())
        } else {
            Err(SeriesError::OutOfRange { what: "degree", n, min: 1, max })
        }
    }

    /// Preimage of `γₙ(L)`: `γₙ(F) + R`.
    pub fn gamma(&self, n: usize) -> Result<SubmoduleBasis, SeriesError> {
        self.check_n(n)?;
        Ok(module_sum(&gamma_free(n, &self.ctx)?.basis, &self.relation_module)?)
    }

    /// Preimage of `δₙ(L) = L ∩ ϖⁿ(L)`, that is `F ∩ (ϖⁿ + r)` plus `R`.
    ///
    /// Membership in `ϖⁿ + r` only involves degrees below `n`, so the
    /// associative side is the right ideal `R·U` cut off at degree `n - 1`,
    /// and the answer is the pullback of that lattice along the bracketing
    /// map on Lie coordinates of degree `< n`.
    pub fn delta(&self, n: usize) -> Result<SubmoduleBasis, SeriesError> {
        self.check_n(n)?;
        if n == 1 {
            return Ok(SubmoduleBasis::full(self.lie_dim()));
        }
        let ctx = &self.ctx;
        let limit = ctx.monomials().dim_below(n);
        let lie_limit = ctx.basis().dim_below(n);
        let rows: Vec<SparseVec> = self
            .relation_module
            .rows()
            .iter()
            .map(|r| {
                let low: SparseVec = r.iter().take_while(|(c, _)| *c < lie_limit).cloned().collect();
                ctx.embed(&low)
            })
            .filter(|r| !r.is_empty())
            .collect();
        let target = right_closure(ctx, &rows, limit);
        let low = lie_preimage(ctx, target, lie_limit);
        let high = module_sum(&gamma_free(n, ctx)?.basis, &self.relation_module)?;
        Ok(module_sum(&low, &high)?)
    }
}

pub fn nilpotent_quotient(p: &Presentation, class: usize) -> Result<NilpotentQuotient, SeriesError> {
    NilpotentQuotient::new(p, class)
}

pub fn gamma_n(q: &NilpotentQuotient, n: usize) -> Result<SubmoduleBasis, SeriesError> {
    q.gamma(n)
}

/// `δₙ` of the presented ring, computed in its class-`c` quotient; requires
/// `c ≥ n - 1` so that `γ_{c+1}` cannot touch degrees below `n`.
pub fn delta_n(p: &Presentation, n: usize, class: usize) -> Result<SubmoduleBasis, SeriesError> {
    if n == 0 {
        return Err(SeriesError::OutOfRange { what: "degree", n, min: 1, max: usize::MAX });
    }
    if class + 1 < n {
        return Err(SeriesError::ClassTooSmall { n, class });
    }
    NilpotentQuotient::new(p, class)?.delta(n)
}

/// `k·v ∈ target` for every row `v` of `source`; returns the first row that
/// fails.
fn first_failure(source: &SubmoduleBasis, k: &Int, target: &SubmoduleBasis) -> Option<SparseVec> {
    source.rows().iter().find(|v| !target.contains(&crate::exactlinalg::sparse::scale(v, k))).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealgebra::LieExpr;
    use crate::presentation::parse;

    #[test]
    fn nilpotent_quotient_examples() {
        let q = NilpotentQuotient::new(&Presentation::free(["a", "b"]), 2).unwrap();
        assert!(q.relation_module().is_zero());
        assert_eq!(q.structure(), &ElementaryDivisors { divisors: vec![], free_rank: 3 });

        let p = parse("generators: a\nrelator: a").unwrap();
        assert!(NilpotentQuotient::new(&p, 1).unwrap().structure().is_trivial());

        let p = parse("generators: a b\nrelator: 2*a\nrelator: 3*b").unwrap();
        let q = NilpotentQuotient::new(&p, 2).unwrap();
        // Z/2 + Z/3 in degree one, and [a, b] is killed by gcd(2, 3) = 1.
        assert_eq!(q.structure().divisors, vec![Int::from(6)]);
    }

    #[test]
    fn gamma_examples() {
        let p = parse("generators: a b\nrelator: 4*[a, b]").unwrap();
        let q = NilpotentQuotient::new(&p, 3).unwrap();
        assert_eq!(q.gamma(1).unwrap(), SubmoduleBasis::full(q.lie_dim()));
        assert_eq!(q.gamma(4).unwrap(), *q.relation_module());
        assert!(matches!(q.gamma(5), Err(SeriesError::OutOfRange { .. })));
        let free = NilpotentQuotient::new(&Presentation::free(["a", "b"]), 3).unwrap();
        assert_eq!(free.gamma(2).unwrap(), gamma_free(2, free.context()).unwrap().basis);
    }

    #[test]
    fn delta_equals_gamma_for_free_rings() {
        let q = NilpotentQuotient::new(&Presentation::free(["a", "b"]), 4).unwrap();
        for n in 1..=5 {
            assert_eq!(q.delta(n).unwrap(), q.gamma(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn delta_class_check() {
        let p = Presentation::free(["a"]);
        assert_eq!(delta_n(&p, 4, 2), Err(SeriesError::ClassTooSmall { n: 4, class: 2 }));
    }

    #[test]
    fn delta_contains_gamma() {
        let p = Presentation::with_indexed_generators(
            2,
            vec![LieExpr::sum([(Int::from(4), LieExpr::Gen(0)), (Int::ONE, LieExpr::commutator_of(&[0, 1]))])],
        )
        .unwrap();
        let q = NilpotentQuotient::new(&p, 4).unwrap();
        for n in 1..=5 {
            let (g, d) = (q.gamma(n).unwrap(), q.delta(n).unwrap());
            assert!(d.contains_module(&g));
            if n <= 3 {
                assert_eq!(d, g);
            }
        }
    }
}
