use super::{normalize, split_linear, PreabelianForm, Presentation};
use crate::exactlinalg::{snf, Int, IntMatrix};
use crate::freealgebra::{lyndon_words, LieExpr, LyndonWord};

/// Degree-1 coefficients of the relators, one row per relator.
pub fn abelianized_matrix(p: &Presentation) -> IntMatrix {
    let rows: Vec<Vec<Int>> = p.relators().iter().map(|r| split_linear(r, p.rank()).0).collect();
    IntMatrix::from_rows(p.rank(), rows)
}

/// An equivalent presentation whose relators read `e_i Y_i + ξ_i` with
/// `e_1 | e_2 | ...` and every `ξ_i` in the derived subring.
///
/// With `P·A·Q` the Smith form of the abelianized relation matrix `A`, the
/// new generators are `Y = Q⁻¹X` (generator `j` of the old ring becomes
/// `Σ_l Q_jl Y_l`) and the new relators are `P` applied to the old ones.
/// Generator names are kept.
pub fn preabelianize(p: &Presentation) -> Presentation {
    let m = p.rank();
    let k = p.relators().len();
    if k == 0 {
        let identity = (0..m).map(|j| (0..m).map(|l| if j == l { Int::ONE } else { Int::ZERO }).collect()).collect();
        let form = PreabelianForm { e: vec![Int::ZERO; m], xi: Vec::new(), substitution: identity };
        return Presentation { generators: p.generators.clone(), relators: Vec::new(), preabelian: Some(form) };
    }
    let split: Vec<(Vec<Int>, LieExpr)> = p.relators().iter().map(|r| split_linear(r, m)).collect();
    let a = IntMatrix::from_rows(m, split.iter().map(|(lin, _)| lin.clone()).collect());
    let s = snf(&a);
    let substitution = |j: usize| -> LieExpr {
        let terms = (0..m).map(|l| (s.right[(j, l)].clone(), LieExpr::Gen(l))).filter(|(c, _)| !c.is_zero());
        normalize(&LieExpr::sum(terms))
    };
    let rests: Vec<LieExpr> = split.iter().map(|(_, rest)| rest.substitute(&substitution)).collect();
    let e: Vec<Int> = (0..m).map(|i| s.diagonal.get(i).cloned().unwrap_or(Int::ZERO)).collect();
    let xi: Vec<LieExpr> = (0..k)
        .map(|i| {
            let terms = (0..k).filter(|&l| !s.left[(i, l)].is_zero()).map(|l| (s.left[(i, l)].clone(), rests[l].clone()));
            normalize(&LieExpr::sum(terms))
        })
        .collect();
    let substitution = (0..m).map(|j| s.right.row(j).to_vec()).collect();
    let form = PreabelianForm { e, xi, substitution };
    let relators = (0..k.max(m))
        .map(|i| form.relator(i))
        .filter(|r| *r != LieExpr::zero())
        .collect();
    Presentation { generators: p.generators.clone(), relators, preabelian: Some(form) }
}

fn lyndon_expr(w: &LyndonWord) -> LieExpr {
    match w.std_factorization() {
        None => LieExpr::Gen(w.word().letters()[0] as usize),
        Some((u, v)) => LieExpr::bracket(lyndon_expr(&u), lyndon_expr(&v)),
    }
}

/// Appends `[b(u), b(v)]` for Lyndon words `u < v` of degree ≥ 2 with
/// `deg u + deg v ≤ D`, which kills the second derived subring up to the
/// truncation. Pairs with `u = v` give zero and are skipped.
pub fn instantiate_metabelian(p: &Presentation, max_degree: usize) -> Presentation {
    let m = p.rank();
    let words: Vec<LyndonWord> = (2..=max_degree.saturating_sub(2)).flat_map(|d| lyndon_words(m, d)).collect();
    let mut out = p.clone();
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            if u.degree() + v.degree() <= max_degree {
                let r = normalize(&LieExpr::bracket(lyndon_expr(u), lyndon_expr(v)));
                out.push_relator(r).expect("indices in range");
            }
        }
    }
    out
}
