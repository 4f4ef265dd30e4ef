//! Finitely presented Lie rings: a small text format, canonical
//! serialization, pre-abelian normal form and metabelian instantiation.

mod parse;
mod preabelian;

pub use parse::parse;
pub use preabelian::{abelianized_matrix, instantiate_metabelian, preabelianize};

use std::fmt::Write as _;

use serde::Serialize;

use crate::exactlinalg::Int;
use crate::freealgebra::{AlgebraError, LieExpr};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("line {line}, column {col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("line {line}, column {col}: unknown generator '{name}'")]
    UnknownGenerator { name: String, line: usize, col: usize },
    #[error("line {line}, column {col}: bracket needs at least two entries")]
    EmptyBracket { line: usize, col: usize },
    #[error("generator '{0}' listed twice")]
    DuplicateGenerator(String),
    #[error("invalid relator: {0}")]
    InvalidRelator(#[from] AlgebraError),
}

/// Relators in the form `e_i X_i + ξ_i` (`i < m`) followed by `ξ_i`
/// (`i ≥ m`), each `ξ_i` in the derived subring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreabelianForm {
    /// One entry per generator, `e_i | e_{i+1}`, zeros last.
    pub e: Vec<Int>,
    #[serde(skip)]
    pub xi: Vec<LieExpr>,
    /// Row `j`: the original generator `j` in terms of the new generators.
    pub substitution: Vec<Vec<Int>>,
}

impl PreabelianForm {
    /// `e_i X_i + ξ_i`, or just `ξ_i` past the generators.
    pub fn relator(&self, i: usize) -> LieExpr {
        let xi = self.xi.get(i).cloned().unwrap_or_else(LieExpr::zero);
        match self.e.get(i) {
            Some(e) if !e.is_zero() => normalize(&LieExpr::sum([(e.clone(), LieExpr::Gen(i)), (Int::ONE, xi)])),
            _ => xi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<LieExpr>,
    preabelian: Option<PreabelianForm>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<LieExpr>) -> Result<Presentation, PresentationError> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        for r in &relators {
            r.validate(generators.len())?;
        }
        Ok(Presentation { generators, relators, preabelian: None })
    }

    /// The free Lie ring on `names`.
    pub fn free<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Presentation {
        Presentation::new(names.into_iter().map(Into::into).collect(), Vec::new()).expect("distinct names")
    }

    /// Generators named `x0, x1, ...`.
    pub fn with_indexed_generators(m: usize, relators: Vec<LieExpr>) -> Result<Presentation, PresentationError> {
        Presentation::new((0..m).map(|i| format!("x{i}")).collect(), relators)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[LieExpr] {
        &self.relators
    }

    pub fn preabelian(&self) -> Option<&PreabelianForm> {
        self.preabelian.as_ref()
    }

    pub fn push_relator(&mut self, r: LieExpr) -> Result<(), PresentationError> {
        r.validate(self.rank())?;
        if let Some(form) = &mut self.preabelian {
            form.xi.resize_with(form.xi.len().max(self.generators.len()), LieExpr::zero);
            form.xi.push(r.clone());
        }
        self.relators.push(r);
        Ok(())
    }

    /// The same ring with generators renamed and reordered: generator `i`
    /// of the result is generator `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Presentation {
        assert_eq!(perm.len(), self.rank());
        let mut inverse = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        let generators = perm.iter().map(|&p| self.generators[p].clone()).collect();
        let relators = self.relators.iter().map(|r| r.substitute(&|g| LieExpr::Gen(inverse[g]))).collect();
        Presentation { generators, relators, preabelian: None }
    }

    /// Canonical text form; see [`normalize`] for the expression rules.
    /// Identically zero relators are omitted.
    pub fn serialize(&self) -> String {
        let mut out = String::from("generators:");
        for g in &self.generators {
            out.push(' ');
            out.push_str(g);
        }
        out.push('\n');
        for r in &self.relators {
            let r = normalize(r);
            if r == LieExpr::zero() {
                continue;
            }
            out.push_str("relator: ");
            write_expr(&mut out, &r, &self.generators);
            out.push('\n');
        }
        out
    }
}

/// Canonical form of an expression: nested sums flattened with their
/// coefficients distributed, repeated summands merged (first occurrence
/// keeps its place), zero summands and brackets with a zero entry dropped,
/// nested leading brackets flattened into left-normed lists, and a lone
/// summand with coefficient 1 unwrapped.
pub fn normalize(e: &LieExpr) -> LieExpr {
    let mut terms: Vec<(Int, LieExpr)> = Vec::new();
    collect_terms(e, &Int::ONE, &mut terms);
    match terms.len() {
        1 if terms[0].0.is_one() => terms.pop().unwrap().1,
        _ => LieExpr::Sum(terms),
    }
}

fn collect_terms(e: &LieExpr, k: &Int, out: &mut Vec<(Int, LieExpr)>) {
    match e {
        LieExpr::Sum(ts) => {
            for (c, t) in ts {
                if !c.is_zero() {
                    collect_terms(t, &(k * c), out);
                }
            }
        }
        LieExpr::Gen(_) => push_term(out, k.clone(), e.clone()),
        LieExpr::Bracket(items) => {
            let mut flat = Vec::with_capacity(items.len());
            for (i, item) in items.iter().enumerate() {
                let n = normalize(item);
                if n == LieExpr::zero() {
                    return;
                }
                match n {
                    LieExpr::Bracket(inner) if i == 0 => flat.extend(inner),
                    n => flat.push(n),
                }
            }
            push_term(out, k.clone(), LieExpr::Bracket(flat));
        }
    }
}

fn push_term(out: &mut Vec<(Int, LieExpr)>, k: Int, e: LieExpr) {
    match out.iter().position(|(_, t)| *t == e) {
        Some(i) => {
            out[i].0 += &k;
            if out[i].0.is_zero() {
                out.remove(i);
            }
        }
        None => out.push((k, e)),
    }
}

/// Splits a relator into its degree-1 coefficients and the remaining
/// bracket terms (which lie in the derived subring).
pub fn split_linear(e: &LieExpr, m: usize) -> (Vec<Int>, LieExpr) {
    let mut lin = vec![Int::ZERO; m];
    let mut rest = Vec::new();
    let LieExpr::Sum(terms) = normalize(e) else {
        return match normalize(e) {
            LieExpr::Gen(g) => {
                lin[g] = Int::ONE;
                (lin, LieExpr::zero())
            }
            other => (lin, other),
        };
    };
    for (k, t) in terms {
        match t {
            LieExpr::Gen(g) => lin[g] += &k,
            other => rest.push((k, other)),
        }
    }
    (lin, normalize(&LieExpr::Sum(rest)))
}

fn write_expr(out: &mut String, e: &LieExpr, names: &[String]) {
    match e {
        LieExpr::Gen(g) => out.push_str(&names[*g]),
        LieExpr::Bracket(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_expr(out, item, names);
            }
            out.push(']');
        }
        LieExpr::Sum(terms) => {
            for (i, (k, t)) in terms.iter().enumerate() {
                let neg = k.is_negative();
                match (i, neg) {
                    (0, true) => out.push('-'),
                    (0, false) => {}
                    (_, true) => out.push_str(" - "),
                    (_, false) => out.push_str(" + "),
                }
                let a = k.abs();
                if !a.is_one() {
                    let _ = write!(out, "{a}*");
                }
                // Summands of a normalized sum are never sums themselves.
                write_expr(out, t, names);
            }
        }
    }
}
