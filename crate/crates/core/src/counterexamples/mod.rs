//! The metabelian rings `L(n)` on generators `r, a, b, c` with
//! `γₙ(L(n)) = 0` but a nonzero element `g ∈ δ_{2n-4}(L(n))` of order 2.

use std::time::Instant;

use serde::Serialize;

use crate::exactlinalg::{module_sum, quotient_structure, sparse, ElementaryDivisors, Int, SubmoduleBasis};
use crate::freealgebra::{lyndon_words, LieExpr, LyndonWord};
use crate::idealengine::IdealError;
use crate::series::{NilpotentQuotient, SeriesError};
use crate::presentation::Presentation;

const R: usize = 0;
const A: usize = 1;
const B: usize = 2;
const C: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CounterexampleError {
    #[error("need n ≥ 4 and degree ≥ 2n-4 (got n = {n}, degree = {degree})")]
    BadParameters { n: usize, degree: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

impl From<IdealError> for CounterexampleError {
    fn from(e: IdealError) -> Self {
        CounterexampleError::Series(e.into())
    }
}

fn pow2(k: usize) -> Int {
    Int::pow(2, k as u32)
}

/// `[r, t, t, ..., t]` with `i` copies of `t`; `x_i`, `y_i`, `z_i` for
/// `t = a, b, c`.
fn chain(t: usize, i: usize) -> LieExpr {
    let mut gens = vec![R];
    gens.extend(std::iter::repeat(t).take(i));
    LieExpr::commutator_of(&gens)
}

fn lin(terms: &[(Int, LieExpr)]) -> LieExpr {
    LieExpr::sum(terms.iter().cloned())
}

fn lyndon_expr(w: &LyndonWord) -> LieExpr {
    match w.std_factorization() {
        None => LieExpr::Gen(w.word().letters()[0] as usize),
        Some((u, v)) => LieExpr::bracket(lyndon_expr(&u), lyndon_expr(&v)),
    }
}

/// The defining relators of `L(n)`, with the infinite families cut off at
/// total degree `degree`: `u` runs over Lyndon brackets, and indexed
/// families over all indices whose bracket has degree at most `degree`.
pub fn build_ln(n: usize, degree: usize) -> Result<Presentation, CounterexampleError> {
    if n < 4 || degree < 2 * n - 4 {
        return Err(CounterexampleError::BadParameters { n, degree });
    }
    let (x, y, z) = (|i| chain(A, i), |i| chain(B, i), |i| chain(C, i));
    let one = Int::ONE;
    let mut rels = vec![
        lin(&[(pow2(2 * n - 1), LieExpr::Gen(R))]),
        lin(&[(pow2(n + 2), LieExpr::Gen(A)), (Int::from(-4), y(n - 3)), (Int::from(-2), z(n - 3))]),
        lin(&[(pow2(n), LieExpr::Gen(B)), (Int::from(4), x(n - 3)), (Int::from(-1), z(n - 3))]),
        lin(&[(pow2(n - 2), LieExpr::Gen(C)), (Int::from(2), x(n - 3)), (one.clone(), y(n - 3))]),
        lin(&[(one.clone(), z(n - 2)), (Int::from(-4), y(n - 2))]),
        lin(&[(one.clone(), y(n - 2)), (Int::from(-4), x(n - 2))]),
        x(n - 1),
        y(n - 1),
        z(n - 1),
    ];
    for d in 1..=degree - 2 {
        for u in lyndon_words(4, d) {
            let u = lyndon_expr(&u);
            for (s, t) in [(A, B), (A, C), (B, C)] {
                rels.push(LieExpr::left_normed([LieExpr::Gen(s), LieExpr::Gen(t), u.clone()]));
            }
        }
    }
    for i in 1..=degree - 2 {
        for (f, t) in [(A, B), (A, C), (B, A), (B, C), (C, A), (C, B)] {
            rels.push(LieExpr::bracket(chain(f, i), LieExpr::Gen(t)));
        }
    }
    let families = [A, B, C];
    for (fi, &s) in families.iter().enumerate() {
        for &t in &families[fi..] {
            for i in 0..=degree - 2 {
                for j in 0..=degree - 2 - i {
                    if s == t && i >= j {
                        // [x_i, x_i] = 0 and [x_i, x_j] = -[x_j, x_i].
                        continue;
                    }
                    rels.push(LieExpr::bracket(chain(s, i), chain(t, j)));
                }
            }
        }
    }
    Ok(Presentation::new(["r", "a", "b", "c"].map(String::from).to_vec(), rels).expect("valid relators"))
}

/// `g = 2^{2n-1}[a, b] + 2^{2n-2}[a, c] + 2^{2n-3}[b, c]`.
pub fn build_g(n: usize) -> Result<LieExpr, CounterexampleError> {
    if n < 4 {
        return Err(CounterexampleError::BadParameters { n, degree: 0 });
    }
    Ok(LieExpr::sum([
        (pow2(2 * n - 1), LieExpr::commutator_of(&[A, B])),
        (pow2(2 * n - 2), LieExpr::commutator_of(&[A, C])),
        (pow2(2 * n - 3), LieExpr::commutator_of(&[B, C])),
    ]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Identities {
    /// `g = 2^{n+1} x_{n-2}`
    pub g_eq_x: bool,
    /// `g = 2^{n-3} z_{n-2}`
    pub g_eq_z: bool,
    /// `g = 2^{2n-1} [a, b]`
    pub g_eq_ab: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dimensions {
    /// Lie coordinates of the class-`c` quotient.
    pub lie_width: usize,
    /// Associative coordinates used for the dimension subring (degrees
    /// below `2n - 4`).
    pub assoc_width: usize,
    pub relation_rank: usize,
    pub relator_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub relation_module_ms: u128,
    pub delta_ms: u128,
    pub total_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub n: usize,
    pub degree: usize,
    pub class_bound: usize,
    pub gamma_n_zero: bool,
    pub g_nonzero: bool,
    pub g_in_delta: bool,
    /// Additive order of `g`; 0 if infinite.
    pub order_of_g: Int,
    pub identities: Identities,
    /// `δ_{2n-4}/γ_{2n-4}` as computed.
    pub delta_quotient: ElementaryDivisors,
    pub dimensions: Dimensions,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Certificate {
    pub fn passes(&self) -> bool {
        let ids = &self.identities;
        self.gamma_n_zero
            && self.g_nonzero
            && self.g_in_delta
            && self.order_of_g == Int::from(2)
            && ids.g_eq_x
            && ids.g_eq_z
            && ids.g_eq_ab
    }

    pub fn without_timing(mut self) -> Certificate {
        self.timing = None;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// Checks every claim about `L(n)` with the families cut at `2n - 4`.
pub fn verify(n: usize) -> Result<Certificate, CounterexampleError> {
    verify_with_degree(n, 2 * n.max(2) - 4)
}

/// As [`verify`] with the relator families cut at `degree ≥ 2n - 4`.
///
/// The class bound is `max(n, degree - 1)`: at least `n` so the quotient
/// sees `γₙ`, and at least `2n - 5` so that `δ_{2n-4}` is computed exactly.
pub fn verify_with_degree(n: usize, degree: usize) -> Result<Certificate, CounterexampleError> {
    let start = Instant::now();
    let p = build_ln(n, degree)?;
    let class = n.max(degree - 1);
    let q = NilpotentQuotient::new(&p, class)?;
    let relation_module_ms = start.elapsed().as_millis();
    let ctx = q.context();
    let rel = q.relation_module();

    let gamma_n_zero = q.gamma(n)? == *rel;
    let vec = |e: &LieExpr| ctx.lie_vector(e).map_err(IdealError::from);
    let g = vec(&build_g(n)?)?;
    let g_nonzero = !rel.contains(&g);

    let t = Instant::now();
    let dn = 2 * n - 4;
    let delta = q.delta(dn)?;
    let delta_ms = t.elapsed().as_millis();
    let g_in_delta = delta.contains(&g);
    let delta_quotient = quotient_structure(&delta, &q.gamma(dn)?).map_err(SeriesError::from)?;

    let with_g = module_sum(rel, &SubmoduleBasis::from_rows(rel.ambient_rank(), [g.clone()])).map_err(SeriesError::from)?;
    let cyclic = quotient_structure(&with_g, rel).map_err(SeriesError::from)?;
    let order_of_g = if cyclic.free_rank > 0 { Int::ZERO } else { cyclic.exponent() };

    let equal_in_l = |k: Int, e: LieExpr| -> Result<bool, CounterexampleError> {
        let other = vec(&e.scaled(k))?;
        Ok(rel.contains(&sparse::axpy(&g, &Int::ONE, &other)))
    };
    let identities = Identities {
        g_eq_x: equal_in_l(pow2(n + 1), chain(A, n - 2))?,
        g_eq_z: equal_in_l(pow2(n - 3), chain(C, n - 2))?,
        g_eq_ab: equal_in_l(pow2(2 * n - 1), LieExpr::commutator_of(&[A, B]))?,
    };
    let dimensions = Dimensions {
        lie_width: ctx.lie_dim(),
        assoc_width: ctx.monomials().dim_below(dn),
        relation_rank: rel.rank(),
        relator_count: p.relators().len(),
    };
    let total_ms = start.elapsed().as_millis();
    Ok(Certificate {
        n,
        degree,
        class_bound: class,
        gamma_n_zero,
        g_nonzero,
        g_in_delta,
        order_of_g,
        identities,
        delta_quotient,
        dimensions,
        timing: Some(Timing { relation_module_ms, delta_ms, total_ms }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::normalize;

    #[test]
    fn parameters_are_checked() {
        assert!(matches!(build_ln(3, 10), Err(CounterexampleError::BadParameters { .. })));
        assert!(matches!(build_ln(5, 5), Err(CounterexampleError::BadParameters { .. })));
        assert!(build_g(3).is_err());
    }

    #[test]
    fn leading_relators_for_n4() {
        let p = build_ln(4, 4).unwrap();
        let doc = p.serialize();
        let head: Vec<&str> = doc.lines().take(10).collect();
        assert_eq!(
            head,
            [
                "generators: r a b c",
                "relator: 128*r",
                "relator: 64*a - 4*[r, b] - 2*[r, c]",
                "relator: 16*b + 4*[r, a] - [r, c]",
                "relator: 4*c + 2*[r, a] + [r, b]",
                "relator: [r, c, c] - 4*[r, b, b]",
                "relator: [r, b, b] - 4*[r, a, a]",
                "relator: [r, a, a, a]",
                "relator: [r, b, b, b]",
                "relator: [r, c, c, c]",
            ]
        );
    }

    #[test]
    fn g_coefficients() {
        let g = normalize(&build_g(5).unwrap());
        let LieExpr::Sum(terms) = g else { panic!("sum expected") };
        let coeffs: Vec<Int> = terms.iter().map(|(k, _)| k.clone()).collect();
        assert_eq!(coeffs, vec![Int::from(512), Int::from(256), Int::from(128)]);
    }

    #[test]
    fn n4_certificate_passes() {
        let cert = verify(4).unwrap();
        assert!(cert.passes(), "{}", cert.to_json());
    }
}
