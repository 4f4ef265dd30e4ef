//! Lyndon words and their standard bracketings, the basis used for the free
//! Lie ring.

use super::poly::{commutator, Poly};
use super::word::Monomial;
use crate::exactlinalg::Int;

/// A word strictly smaller than each of its proper rotations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LyndonWord(Monomial);

impl LyndonWord {
    /// Returns `None` unless `w` has the Lyndon property.
    pub fn new(w: Monomial) -> Option<LyndonWord> {
        is_lyndon(w.letters()).then_some(LyndonWord(w))
    }

    pub fn word(&self) -> &Monomial {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    /// `w = uv` with `v` the longest proper suffix that is itself Lyndon.
    pub fn std_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        let l = self.0.letters();
        if l.len() < 2 {
            return None;
        }
        let split = (1..l.len()).find(|&i| is_lyndon(&l[i..]))?;
        Some((LyndonWord(Monomial::new(&l[..split])), LyndonWord(Monomial::new(&l[split..]))))
    }
}

pub fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|k| {
        let rotated = w[k..].iter().chain(&w[..k]);
        w.iter().cmp(rotated) == std::cmp::Ordering::Less
    })
}

/// All Lyndon words of length exactly `d` over `m` letters, in lexicographic
/// order (Duval's successor algorithm).
pub fn lyndon_words(m: usize, d: usize) -> Vec<LyndonWord> {
    assert!(m >= 1 && d >= 1);
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == d {
            out.push(LyndonWord(Monomial::new(w.clone())));
        }
        let k = w.len();
        while w.len() < d {
            w.push(w[w.len() - k]);
        }
        while w.last() == Some(&((m - 1) as u8)) {
            w.pop();
        }
        match w.last_mut() {
            Some(x) => *x += 1,
            None => break,
        }
    }
    out
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Rank of the degree-`d` component of the free Lie ring on `m` generators:
/// `(1/d) Σ_{e|d} μ(e) m^{d/e}`.
pub fn witt_number(m: usize, d: usize) -> Int {
    let mut total = Int::ZERO;
    for e in (1..=d).filter(|e| d % e == 0) {
        let mu = mobius(e);
        if mu != 0 {
            total += &(&Int::from(mu) * &Int::pow(m as i64, (d / e) as u32));
        }
    }
    total.checked_div_exact(&Int::from(d)).expect("Witt sum is divisible by d")
}

/// Associative expansion of the standard bracketing:
/// `b(x) = x`, `b(uv) = b(u)b(v) - b(v)b(u)`.
pub fn bracketing(w: &LyndonWord) -> Poly {
    let d = w.degree();
    match w.std_factorization() {
        None => Poly::term(w.word().clone(), Int::ONE, d),
        Some((u, v)) => {
            let pu = bracketing(&u);
            let pv = bracketing(&v);
            commutator(&pu.truncate(d), &pv.truncate(d), d).expect("degrees match")
        }
    }
}
