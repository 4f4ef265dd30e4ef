//! Saturation of ideals in the truncated free associative ring and the
//! truncated free Lie ring, and the standard submodules `ϖⁿ` and `γₙ(F)`.

mod context;

pub use context::TruncatedContext;

use crate::exactlinalg::{Echelon, Int, SparseVec, SubmoduleBasis};
use crate::freealgebra::{AlgebraError, LieExpr, Poly};
use crate::par_map;
pub(crate) use context::assoc_product;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("degree {n} outside 1..={max}")]
    OutOfRange { n: usize, max: usize },
    #[error("operands come from different coordinate systems")]
    ContextMismatch,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealKind {
    /// Two-sided ideal, associative coordinates.
    Associative,
    /// Lie ideal, Lie coordinates.
    Lie,
    /// Any other submodule of the associative coordinates.
    Plain,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealBasis {
    pub kind: IdealKind,
    pub generators: usize,
    pub max_degree: usize,
    pub basis: SubmoduleBasis,
}

impl IdealBasis {
    fn new(ctx: &TruncatedContext, kind: IdealKind, basis: SubmoduleBasis) -> IdealBasis {
        IdealBasis { kind, generators: ctx.generators(), max_degree: ctx.max_degree(), basis }
    }

    fn check(&self, ctx: &TruncatedContext) -> Result<(), IdealError> {
        if self.generators == ctx.generators() && self.max_degree == ctx.max_degree() {
            Ok(())
        } else {
            Err(IdealError::ContextMismatch)
        }
    }
}

/// Inserts `seeds` and then everything reachable from them under `step`,
/// until the lattice stops growing. Only vectors that enlarged the lattice
/// are expanded further; the rest are already combinations of expanded
/// ones, so their images are too.
pub fn saturate<F>(e: &mut Echelon, seeds: Vec<SparseVec>, step: F)
where
    F: Fn(&SparseVec) -> Vec<SparseVec> + Sync,
{
    let mut frontier: Vec<SparseVec> = seeds.into_iter().filter(|v| e.insert(v.clone())).collect();
    while !frontier.is_empty() {
        let images = par_map(&frontier, &step);
        frontier = images.into_iter().flatten().filter(|v| !v.is_empty() && e.insert(v.clone())).collect();
    }
}

/// `v·X_g` (or `X_g·v` when `left`) restricted to positions below `limit`.
fn shift(ctx: &TruncatedContext, v: &[(usize, Int)], g: usize, left: bool, limit: usize) -> SparseVec {
    let ix = ctx.monomials();
    // Both multiplication maps are increasing in the position, so the
    // result stays sorted.
    v.iter()
        .filter_map(|(c, x)| {
            let k = if left { ix.left_mul(g, *c) } else { ix.right_mul(g, *c) }?;
            (k < limit).then(|| (k, x.clone()))
        })
        .collect()
}

fn truncate_vec(v: &[(usize, Int)], limit: usize) -> SparseVec {
    v.iter().take_while(|(c, _)| *c < limit).cloned().collect()
}

/// Span of `rows · U` inside the associative coordinates below `limit`.
pub fn right_closure(ctx: &TruncatedContext, rows: &[SparseVec], limit: usize) -> Echelon {
    let mut e = Echelon::new(limit);
    let m = ctx.generators();
    let seeds = rows.iter().map(|r| truncate_vec(r, limit)).collect();
    saturate(&mut e, seeds, |v| (0..m).map(|g| shift(ctx, v, g, false, limit)).collect());
    e
}

/// Span of `ϖ · rows` (left multiples by monomials of degree ≥ 1) below
/// `limit`.
pub fn left_augmented_closure(ctx: &TruncatedContext, rows: &[SparseVec], limit: usize) -> Echelon {
    let mut e = Echelon::new(limit);
    let m = ctx.generators();
    let seeds = rows.iter().flat_map(|r| (0..m).map(move |g| shift(ctx, r, g, true, limit))).collect();
    saturate(&mut e, seeds, |v| (0..m).map(|g| shift(ctx, v, g, true, limit)).collect());
    e
}

/// Span of `U · rows · U` below `limit`.
pub fn two_sided_closure(ctx: &TruncatedContext, rows: &[SparseVec], limit: usize) -> Echelon {
    let mut e = Echelon::new(limit);
    let m = ctx.generators();
    let seeds = rows.iter().map(|r| truncate_vec(r, limit)).collect();
    saturate(&mut e, seeds, |v| {
        (0..m).flat_map(|g| [shift(ctx, v, g, false, limit), shift(ctx, v, g, true, limit)]).collect()
    });
    e
}

/// Lie ideal generated by Lie coordinate vectors: closure under `[·, X_j]`.
pub fn lie_closure(ctx: &TruncatedContext, rows: Vec<SparseVec>) -> SubmoduleBasis {
    let mut e = Echelon::new(ctx.lie_dim());
    let m = ctx.generators();
    saturate(&mut e, rows, |v| (0..m).map(|j| ctx.ad(v, j)).collect());
    SubmoduleBasis::from_echelon(e)
}

/// Lie coordinates below `lie_limit` whose bracketing lies in the lattice
/// `target` (associative coordinates below `target.ncols()`).
pub fn lie_preimage(ctx: &TruncatedContext, mut target: Echelon, lie_limit: usize) -> SubmoduleBasis {
    let width = target.ncols();
    target.widen(width + lie_limit);
    for i in 0..lie_limit {
        let mut row = truncate_vec(ctx.basis().image(i), width);
        debug_assert_eq!(row.len(), ctx.basis().image(i).len(), "Lie coordinate limit exceeds target width");
        row.push((width + i, Int::ONE));
        target.insert(row);
    }
    let kernel = target
        .rows()
        .iter()
        .filter(|r| r[0].0 >= width)
        .map(|r| r.iter().map(|(c, x)| (c - width, x.clone())).collect::<SparseVec>());
    SubmoduleBasis::from_rows(ctx.lie_dim(), kernel.collect::<Vec<_>>())
}

/// Two-sided ideal generated by `relators` in the truncated algebra.
pub fn assoc_ideal(relators: &[Poly], ctx: &TruncatedContext) -> Result<IdealBasis, IdealError> {
    let rows = relators.iter().map(|p| ctx.poly_coords(p)).collect::<Result<Vec<_>, _>>()?;
    let e = two_sided_closure(ctx, &rows, ctx.assoc_dim());
    Ok(IdealBasis::new(ctx, IdealKind::Associative, SubmoduleBasis::from_echelon(e)))
}

/// Lie ideal generated by `relators` in `F/γ_{D+1}(F)`.
pub fn lie_ideal(relators: &[LieExpr], ctx: &TruncatedContext) -> Result<IdealBasis, IdealError> {
    let rows = relators.iter().map(|r| ctx.lie_vector(r)).collect::<Result<Vec<_>, _>>()?;
    Ok(IdealBasis::new(ctx, IdealKind::Lie, lie_closure(ctx, rows)))
}

/// Two-sided ideal generated by a Lie ideal, which is `R·U`: for Lie `R`,
/// `X·ρ = ρ·X + [X, ρ]` keeps left multiples inside `R·U`.
pub fn ideal_of_lie_ideal(lie: &IdealBasis, ctx: &TruncatedContext) -> Result<IdealBasis, IdealError> {
    lie.check(ctx)?;
    if lie.kind != IdealKind::Lie {
        return Err(IdealError::ContextMismatch);
    }
    let rows: Vec<SparseVec> = lie.basis.rows().iter().map(|r| ctx.embed(r)).collect();
    let e = right_closure(ctx, &rows, ctx.assoc_dim());
    Ok(IdealBasis::new(ctx, IdealKind::Associative, SubmoduleBasis::from_echelon(e)))
}

fn check_degree(n: usize, ctx: &TruncatedContext) -> Result<(), IdealError> {
    let max = ctx.max_degree() + 1;
    if (1..=max).contains(&n) {
        Ok(())
    } else {
        Err(IdealError::OutOfRange { n, max })
    }
}

/// `ϖⁿ`: all monomials of degree `n..=D`.
pub fn aug_power(n: usize, ctx: &TruncatedContext) -> Result<IdealBasis, IdealError> {
    check_degree(n, ctx)?;
    let ix = ctx.monomials();
    let basis = SubmoduleBasis::unit_vectors(ix.dim(), ix.dim_below(n)..ix.dim());
    Ok(IdealBasis::new(ctx, IdealKind::Associative, basis))
}

/// `γₙ(F)`: Lyndon brackets of degree `n..=D`.
pub fn gamma_free(n: usize, ctx: &TruncatedContext) -> Result<IdealBasis, IdealError> {
    check_degree(n, ctx)?;
    let b = ctx.basis();
    let basis = SubmoduleBasis::unit_vectors(b.dim(), b.dim_below(n)..b.dim());
    Ok(IdealBasis::new(ctx, IdealKind::Lie, basis))
}

/// A Lie module carried into associative coordinates by bracketing.
pub fn embed(lie: &IdealBasis, ctx: &TruncatedContext) -> Result<IdealBasis, IdealError> {
    lie.check(ctx)?;
    if lie.kind != IdealKind::Lie {
        return Err(IdealError::ContextMismatch);
    }
    Ok(IdealBasis::new(ctx, IdealKind::Plain, ctx.embed_module(&lie.basis)))
}

/// Span of all products `a·b` of basis rows, truncated.
pub fn product_submodule(a: &IdealBasis, b: &IdealBasis, ctx: &TruncatedContext) -> Result<SubmoduleBasis, IdealError> {
    a.check(ctx)?;
    b.check(ctx)?;
    if a.kind == IdealKind::Lie || b.kind == IdealKind::Lie {
        return Err(IdealError::ContextMismatch);
    }
    let limit = ctx.assoc_dim();
    if a.basis.rank() == limit {
        return Ok(SubmoduleBasis::from_echelon(left_augmented_closure(ctx, b.basis.rows(), limit)));
    }
    let pairs: Vec<(usize, usize)> =
        (0..a.basis.rank()).flat_map(|i| (0..b.basis.rank()).map(move |j| (i, j))).collect();
    let products = par_map(&pairs, |&(i, j)| {
        assoc_product(ctx.monomials(), &a.basis.rows()[i], &b.basis.rows()[j], limit)
    });
    Ok(SubmoduleBasis::from_rows(limit, products))
}
