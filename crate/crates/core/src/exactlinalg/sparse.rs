//! Sparse integer vectors: `(column, value)` pairs, strictly increasing
//! columns, no stored zeros.

use super::int::Int;

pub type SparseVec = Vec<(usize, Int)>;

/// `x - q*y`.
pub fn axpy(x: &[(usize, Int)], q: &Int, y: &[(usize, Int)]) -> SparseVec {
    if q.is_zero() {
        return x.to_vec();
    }
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map_or(usize::MAX, |e| e.0);
        let cy = y.get(j).map_or(usize::MAX, |e| e.0);
        if cx < cy {
            out.push(x[i].clone());
            i += 1;
        } else if cy < cx {
            let v = -(q * &y[j].1);
            out.push((cy, v));
            j += 1;
        } else {
            let mut v = x[i].1.clone();
            v.sub_mul(q, &y[j].1);
            if !v.is_zero() {
                out.push((cx, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `a*x + b*y`.
pub fn lincomb(a: &Int, x: &[(usize, Int)], b: &Int, y: &[(usize, Int)]) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map_or(usize::MAX, |e| e.0);
        let cy = y.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if cx < cy {
            i += 1;
            (cx, a * &x[i - 1].1)
        } else if cy < cx {
            j += 1;
            (cy, b * &y[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (cx, Int::lin2(a, &x[i - 1].1, b, &y[j - 1].1))
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

pub fn scale(v: &[(usize, Int)], k: &Int) -> SparseVec {
    if k.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(c, x)| (*c, x * k)).collect()
}

pub fn neg(v: &[(usize, Int)]) -> SparseVec {
    v.iter().map(|(c, x)| (*c, -x)).collect()
}

pub fn from_dense(v: &[Int]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (c, x.clone()))
        .collect()
}

pub fn to_dense(v: &[(usize, Int)], len: usize) -> Vec<Int> {
    let mut out = vec![Int::ZERO; len];
    for (c, x) in v {
        out[*c] = x.clone();
    }
    out
}

/// Sums arbitrary `(column, value)` contributions into a sparse vector.
pub fn accumulate(width: usize, terms: impl IntoIterator<Item = (usize, Int)>) -> SparseVec {
    let mut dense = vec![Int::ZERO; width];
    let mut touched = Vec::new();
    for (c, x) in terms {
        if dense[c].is_zero() {
            touched.push(c);
        }
        dense[c] += &x;
    }
    touched.sort_unstable();
    touched.dedup();
    touched
        .into_iter()
        .filter_map(|c| {
            let v = std::mem::take(&mut dense[c]);
            (!v.is_zero()).then_some((c, v))
        })
        .collect()
}

/// Like [`accumulate`], but sorts instead of scattering into a dense
/// buffer; better when the width is large and the term count small.
pub fn merge_terms(mut terms: Vec<(usize, Int)>) -> SparseVec {
    terms.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(terms.len());
    for (c, x) in terms {
        match out.last_mut() {
            Some((lc, lx)) if *lc == c => *lx += &x,
            _ => {
                if out.last().is_some_and(|e| e.1.is_zero()) {
                    out.pop();
                }
                out.push((c, x));
            }
        }
    }
    if out.last().is_some_and(|e| e.1.is_zero()) {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(e: &[(usize, i64)]) -> SparseVec {
        e.iter().map(|&(c, v)| (c, Int::from(v))).collect()
    }

    #[test]
    fn axpy_cancels() {
        let x = sv(&[(0, 4), (2, 1)]);
        let y = sv(&[(0, 2), (3, 5)]);
        assert_eq!(axpy(&x, &Int::from(2), &y), sv(&[(2, 1), (3, -10)]));
    }

    #[test]
    fn lincomb_merges() {
        let x = sv(&[(1, 1)]);
        let y = sv(&[(1, 1), (4, 2)]);
        assert_eq!(lincomb(&Int::from(3), &x, &Int::from(-3), &y), sv(&[(4, -6)]));
    }

    #[test]
    fn accumulate_drops_cancellations() {
        let v = accumulate(5, [(3, Int::from(2)), (1, Int::from(1)), (3, Int::from(-2))]);
        assert_eq!(v, sv(&[(1, 1)]));
    }

    #[test]
    fn merge_terms_matches_accumulate() {
        let terms = vec![(7, Int::from(1)), (2, Int::from(3)), (7, Int::from(-1)), (2, Int::from(1)), (0, Int::from(-5)), (9, Int::from(0))];
        assert_eq!(merge_terms(terms.clone()), accumulate(10, terms));
        assert_eq!(merge_terms(vec![(4, Int::from(2)), (4, Int::from(-2))]), sv(&[]));
    }
}
