use std::fmt;

use super::basis::LyndonBasis;
use super::poly::{commutator, Poly};
use super::word::Monomial;
use super::AlgebraError;
use crate::exactlinalg::Int;

/// A Lie-ring expression over generators `0..m`.
///
/// `Bracket(items)` is left-normed: `[a, b, c] = [[a, b], c]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum LieExpr {
    Gen(usize),
    Bracket(Vec<LieExpr>),
    Sum(Vec<(Int, LieExpr)>),
}

impl LieExpr {
    pub fn zero() -> LieExpr {
        LieExpr::Sum(Vec::new())
    }

    pub fn bracket(a: LieExpr, b: LieExpr) -> LieExpr {
        LieExpr::Bracket(vec![a, b])
    }

    pub fn left_normed(items: impl IntoIterator<Item = LieExpr>) -> LieExpr {
        LieExpr::Bracket(items.into_iter().collect())
    }

    /// `[x_i1, ..., x_ik]` on generator indices.
    pub fn commutator_of(gens: &[usize]) -> LieExpr {
        match gens {
            [g] => LieExpr::Gen(*g),
            _ => LieExpr::left_normed(gens.iter().map(|&g| LieExpr::Gen(g))),
        }
    }

    pub fn scaled(self, k: impl Into<Int>) -> LieExpr {
        LieExpr::Sum(vec![(k.into(), self)])
    }

    pub fn sum(terms: impl IntoIterator<Item = (Int, LieExpr)>) -> LieExpr {
        LieExpr::Sum(terms.into_iter().collect())
    }

    /// Upper bound on the degree of any term.
    pub fn degree_bound(&self) -> usize {
        match self {
            LieExpr::Gen(_) => 1,
            LieExpr::Bracket(items) => items.iter().map(LieExpr::degree_bound).sum(),
            LieExpr::Sum(terms) => terms.iter().map(|(_, e)| e.degree_bound()).max().unwrap_or(0),
        }
    }

    /// Lower bound on the degree of any nonzero term.
    pub fn min_degree(&self) -> Option<usize> {
        match self {
            LieExpr::Gen(_) => Some(1),
            LieExpr::Bracket(items) => items.iter().map(LieExpr::min_degree).sum(),
            LieExpr::Sum(terms) => terms.iter().filter(|(k, _)| !k.is_zero()).filter_map(|(_, e)| e.min_degree()).min(),
        }
    }

    pub fn max_generator(&self) -> Option<usize> {
        match self {
            LieExpr::Gen(g) => Some(*g),
            LieExpr::Bracket(items) => items.iter().filter_map(LieExpr::max_generator).max(),
            LieExpr::Sum(terms) => terms.iter().filter_map(|(_, e)| e.max_generator()).max(),
        }
    }

    /// Replaces every generator `i` with `f(i)`.
    pub fn substitute(&self, f: &dyn Fn(usize) -> LieExpr) -> LieExpr {
        match self {
            LieExpr::Gen(g) => f(*g),
            LieExpr::Bracket(items) => LieExpr::Bracket(items.iter().map(|e| e.substitute(f)).collect()),
            LieExpr::Sum(terms) => LieExpr::Sum(terms.iter().map(|(k, e)| (k.clone(), e.substitute(f))).collect()),
        }
    }

    pub fn validate(&self, m: usize) -> Result<(), AlgebraError> {
        match self {
            LieExpr::Gen(g) if *g >= m => Err(AlgebraError::MalformedExpr(format!("generator {g} out of range 0..{m}"))),
            LieExpr::Gen(_) => Ok(()),
            LieExpr::Bracket(items) if items.len() < 2 => {
                Err(AlgebraError::MalformedExpr(format!("bracket with {} entries", items.len())))
            }
            LieExpr::Bracket(items) => items.iter().try_for_each(|e| e.validate(m)),
            LieExpr::Sum(terms) => terms.iter().try_for_each(|(_, e)| e.validate(m)),
        }
    }
}

impl fmt::Debug for LieExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieExpr::Gen(g) => write!(f, "x{g}"),
            LieExpr::Bracket(items) => {
                write!(f, "[")?;
                for (i, e) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{e:?}")?;
                }
                write!(f, "]")
            }
            LieExpr::Sum(terms) if terms.is_empty() => write!(f, "0"),
            LieExpr::Sum(terms) => {
                for (i, (k, e)) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{k}*{e:?}")?;
                }
                Ok(())
            }
        }
    }
}

/// Associative expansion of `e`, truncated at degree `d`.
pub fn eval_lie(e: &LieExpr, m: usize, d: usize) -> Result<Poly, AlgebraError> {
    e.validate(m)?;
    Ok(eval_unchecked(e, d))
}

fn eval_unchecked(e: &LieExpr, d: usize) -> Poly {
    match e {
        LieExpr::Gen(g) => Poly::generator(*g, d),
        LieExpr::Bracket(items) => {
            let mut acc = eval_unchecked(&items[0], d);
            for item in &items[1..] {
                acc = commutator(&acc, &eval_unchecked(item, d), d).expect("same truncation");
            }
            acc
        }
        LieExpr::Sum(terms) => {
            terms.iter().fold(Poly::zero(d), |acc, (k, e)| acc.add(&eval_unchecked(e, d).scale(k)))
        }
    }
}

/// `x ∘ w = [...[x, x_{i1}], ..., x_{ik}]` for a word `w = x_{i1}...x_{ik}`;
/// `x` must be a Lie element.
pub fn adjoint_action(basis: &LyndonBasis, x: &Poly, w: &Monomial) -> Result<Poly, AlgebraError> {
    basis.lie_coordinates(x)?;
    let d = basis.max_degree();
    let mut acc = x.truncate(d);
    for &g in w.letters() {
        acc = commutator(&acc, &Poly::generator(g as usize, d), d)?;
    }
    Ok(acc)
}
