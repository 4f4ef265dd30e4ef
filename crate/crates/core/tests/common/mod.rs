#![allow(dead_code)]

pub mod oracle;

use liedim::counterexamples::build_ln;
use liedim::exactlinalg::Int;
use liedim::freealgebra::LieExpr;
use liedim::presentation::{instantiate_metabelian, preabelianize, Presentation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coeff(rng: &mut ChaCha8Rng, max: i64) -> Int {
    let k = rng.gen_range(1..=max);
    Int::from(if rng.gen_bool(0.5) { -k } else { k })
}

/// A random left-normed commutator of `deg` generators.
pub fn random_commutator(rng: &mut ChaCha8Rng, m: usize, deg: usize) -> LieExpr {
    let gens: Vec<usize> = (0..deg).map(|_| rng.gen_range(0..m)).collect();
    LieExpr::commutator_of(&gens)
}

/// A sum of up to `terms` random commutators with degrees in
/// `min_deg..=max_deg` and nonzero coefficients bounded by `max_coeff`.
pub fn random_element(rng: &mut ChaCha8Rng, m: usize, min_deg: usize, max_deg: usize, terms: usize, max_coeff: i64) -> LieExpr {
    let k = rng.gen_range(1..=terms);
    LieExpr::sum((0..k).map(|_| {
        let d = rng.gen_range(min_deg..=max_deg);
        (coeff(rng, max_coeff), random_commutator(rng, m, d))
    }))
}

pub fn random_presentation(rng: &mut ChaCha8Rng, m: usize, relators: usize, max_deg: usize, max_coeff: i64) -> Presentation {
    let rels = (0..relators).map(|_| random_element(rng, m, 1, max_deg, 3, max_coeff)).collect();
    Presentation::with_indexed_generators(m, rels).expect("indices in range")
}

/// Up to 3 generators, up to 4 relators of degree at most 4, coefficients
/// bounded by 8.
pub fn small_corpus(seed: u64, count: usize) -> Vec<Presentation> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let m = r.gen_range(1..=3);
            let k = r.gen_range(0..=4);
            random_presentation(&mut r, m, k, 4, 8)
        })
        .collect()
}

fn chain(t: usize, i: usize) -> LieExpr {
    let mut gens = vec![0];
    gens.extend(std::iter::repeat(t).take(i));
    LieExpr::commutator_of(&gens)
}

/// The ring `L(4)` with the order of `r` raised to `2^6..2^9` and a few
/// signs flipped at random. Purely random relators almost never give a
/// nontrivial `δₙ/γₙ`; these often do.
pub fn l4_variant(rng: &mut ChaCha8Rng) -> Presentation {
    let base = build_ln(4, 4).expect("valid parameters");
    let order = 6 + rng.gen_range(0..=3);
    let mut s = || Int::from(if rng.gen_bool(0.15) { -1 } else { 1 });
    let k = |x: i64, s: Int| &Int::from(x) * &s;
    let (a, b, c) = (1, 2, 3);
    let mut rels = vec![
        LieExpr::sum([(Int::pow(2, order), LieExpr::Gen(0))]),
        LieExpr::sum([(Int::pow(2, 6), LieExpr::Gen(a)), (k(-4, s()), chain(b, 1)), (k(-2, s()), chain(c, 1))]),
        LieExpr::sum([(Int::pow(2, 4), LieExpr::Gen(b)), (k(4, s()), chain(a, 1)), (k(-1, s()), chain(c, 1))]),
        LieExpr::sum([(Int::pow(2, 2), LieExpr::Gen(c)), (k(2, s()), chain(a, 1)), (k(1, s()), chain(b, 1))]),
        LieExpr::sum([(Int::ONE, chain(c, 2)), (k(-4, s()), chain(b, 2))]),
        LieExpr::sum([(Int::ONE, chain(b, 2)), (k(-4, s()), chain(a, 2))]),
    ];
    rels.extend(base.relators()[6..].iter().cloned());
    Presentation::new(base.generators().to_vec(), rels).expect("valid relators")
}

/// Random presentations on 2 or 3 generators, and every fourth instance a
/// variant of `L(4)`, with the metabelian relators added up to `class`.
pub fn metabelian_corpus(seed: u64, count: usize, class: usize) -> Vec<Presentation> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let p = if i % 4 == 3 {
                l4_variant(&mut r)
            } else {
                let m = r.gen_range(2..=3);
                let k = r.gen_range(1..=3);
                random_presentation(&mut r, m, k, 3, 8)
            };
            instantiate_metabelian(&p, class)
        })
        .collect()
}

pub const E_CHAINS: [&[i64]; 4] = [&[1, 2], &[2, 4], &[1, 2, 6], &[0, 0]];

/// Relators `e_i x_i + ξ_i` with random `ξ_i` of degree 2 or 3 for the
/// given chain (plus one extra commutator relator when the chain is all
/// zero), pre-abelianized and made metabelian up to `class`.
pub fn preabelian_instance(rng: &mut ChaCha8Rng, chain: &[i64], class: usize) -> Presentation {
    let m = chain.len();
    let mut rels: Vec<LieExpr> = chain
        .iter()
        .enumerate()
        .filter(|(_, e)| **e != 0)
        .map(|(i, &e)| LieExpr::sum([(Int::from(e), LieExpr::Gen(i)), (Int::ONE, random_element(rng, m, 2, 3, 2, 8))]))
        .collect();
    if rels.is_empty() {
        rels.push(random_element(rng, m, 2, 3, 2, 8));
    }
    let p = Presentation::with_indexed_generators(m, rels).expect("indices in range");
    instantiate_metabelian(&preabelianize(&p), class)
}

pub fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

/// A random matrix with entries in `[-9, 9]`, about a third of them zero,
/// and now and then a row that is a combination of earlier rows.
pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::with_capacity(rows);
    for _ in 0..rows {
        if !out.is_empty() && rng.gen_bool(0.2) {
            let (a, b) = (rng.gen_range(-2..=2i64), rng.gen_range(-2..=2i64));
            let (i, j) = (rng.gen_range(0..out.len()), rng.gen_range(0..out.len()));
            let row = (0..cols).map(|c| (a * out[i][c] + b * out[j][c]).clamp(-9, 9)).collect();
            out.push(row);
        } else {
            out.push((0..cols).map(|_| if rng.gen_bool(0.3) { 0 } else { rng.gen_range(-9..=9) }).collect());
        }
    }
    out
}
