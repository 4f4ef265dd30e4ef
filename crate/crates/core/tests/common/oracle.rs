//! Brute-force references for small integer lattices. Everything here works
//! on `i128` minors and box enumeration and shares no code with the library.

use liedim::exactlinalg::{hnf, member, module_intersect, module_sum, snf, Int, IntMatrix, SubmoduleBasis};

pub type Rows = Vec<Vec<i64>>;

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Fraction-free Gaussian elimination.
pub fn det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|s| s.count_ones() as usize == k).map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect()).collect()
}

/// gcd of all `k × k` minors (the `k`-th determinantal divisor).
pub fn minor_gcd(a: &Rows, k: usize) -> i128 {
    if k == 0 {
        return 1;
    }
    let cols = a.first().map_or(0, Vec::len);
    let mut g = 0;
    for rs in subsets(a.len(), k) {
        for cs in subsets(cols, k) {
            let m = rs.iter().map(|&r| cs.iter().map(|&c| a[r][c] as i128).collect()).collect();
            g = gcd(g, det(m));
        }
    }
    g
}

pub fn rank(a: &Rows) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    (1..=a.len().min(cols)).rev().find(|&k| minor_gcd(a, k) != 0).unwrap_or(0)
}

/// A row lattice with its rank and covolume (gcd of maximal minors).
pub struct Lattice {
    rows: Rows,
    rank: usize,
    covolume: i128,
}

impl Lattice {
    pub fn new(rows: &Rows) -> Lattice {
        let rank = rank(rows);
        Lattice { rows: rows.clone(), rank, covolume: minor_gcd(rows, rank) }
    }

    /// `x` lies in the lattice exactly when appending it keeps both the
    /// rank and the covolume.
    pub fn contains(&self, x: &[i64]) -> bool {
        if x.iter().all(|&v| v == 0) {
            return true;
        }
        let mut b = self.rows.clone();
        b.push(x.to_vec());
        self.rank > 0 && minor_gcd(&b, self.rank + 1) == 0 && minor_gcd(&b, self.rank) == self.covolume
    }
}

pub fn contains(a: &Rows, x: &[i64]) -> bool {
    Lattice::new(a).contains(x)
}

/// Invariant factors as quotients of determinantal divisors.
pub fn invariant_factors(a: &Rows) -> Vec<i128> {
    (1..=rank(a)).map(|k| minor_gcd(a, k) / minor_gcd(a, k - 1)).collect()
}

/// Every integer vector with entries in `[-b, b]`.
pub fn box_points(dim: usize, b: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out.into_iter().flat_map(|p| (-b..=b).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

/// `Σ c_i a_i` for every coefficient vector in `[-b, b]^rows`.
pub fn combinations(a: &Rows, b: i64) -> Vec<Vec<i64>> {
    let cols = a.first().map_or(0, Vec::len);
    box_points(a.len(), b)
        .into_iter()
        .map(|c| (0..cols).map(|j| c.iter().zip(a).map(|(k, r)| k * r[j]).sum()).collect())
        .collect()
}

pub fn to_matrix(a: &Rows, cols: usize) -> IntMatrix {
    let refs: Vec<&[i64]> = a.iter().map(Vec::as_slice).collect();
    IntMatrix::from_i64(cols, &refs)
}

pub fn to_rows(b: &SubmoduleBasis) -> Rows {
    b.matrix().row_iter().map(|r| r.iter().map(|x| x.to_i64().expect("small entries")).collect()).collect()
}

fn ints(x: &[i64]) -> Vec<Int> {
    x.iter().map(|&v| Int::from(v)).collect()
}

fn lib_contains(b: &SubmoduleBasis, x: &[i64]) -> bool {
    member(&ints(x), b).expect("dimensions agree").is_some()
}

fn same_lattice(a: &Rows, b: &Rows) -> bool {
    let (la, lb) = (Lattice::new(a), Lattice::new(b));
    a.iter().all(|r| lb.contains(r)) && b.iter().all(|r| la.contains(r))
}

fn unimodular(m: &IntMatrix) -> bool {
    let rows = m.row_iter().map(|r| r.iter().map(|x| x.to_i64().unwrap() as i128).collect()).collect();
    det(rows).abs() == 1
}

fn check_hnf(a: &Rows, cols: usize) -> Result<SubmoduleBasis, String> {
    let h = hnf(&to_matrix(a, cols));
    let rows = to_rows(&h);
    let mut last_pivot = None;
    for r in &rows {
        let p = r.iter().position(|&x| x != 0).ok_or("zero row in Hermite form")?;
        if last_pivot.is_some_and(|q| q >= p) || r[p] <= 0 {
            return Err(format!("not echelon with positive pivots: {rows:?}"));
        }
        for other in &rows {
            let above = other[p];
            if !std::ptr::eq(other, r) && (above < 0 || above >= r[p]) {
                return Err(format!("entry above pivot not reduced: {rows:?}"));
            }
        }
        last_pivot = Some(p);
    }
    if rows.len() != rank(a) || !same_lattice(a, &rows) {
        return Err(format!("Hermite form {rows:?} spans a different lattice than {a:?}"));
    }
    Ok(h)
}

fn check_snf(a: &Rows, cols: usize) -> Result<(), String> {
    let m = to_matrix(a, cols);
    let s = snf(&m);
    let mut want: Vec<i128> = invariant_factors(a);
    want.resize(a.len().min(cols), 0);
    let got: Vec<i128> = s.diagonal.iter().map(|d| d.to_i64().unwrap() as i128).collect();
    if got != want {
        return Err(format!("Smith diagonal {got:?}, determinantal divisors give {want:?} for {a:?}"));
    }
    let d = s.left.mul(&m).mul(&s.right);
    for i in 0..d.nrows() {
        for j in 0..d.ncols() {
            let expect = if i == j && i < s.diagonal.len() { s.diagonal[i].clone() } else { Int::ZERO };
            if d.row(i)[j] != expect {
                return Err(format!("left * A * right is not the Smith form for {a:?}"));
            }
        }
    }
    if !unimodular(&s.left) || !unimodular(&s.right) {
        return Err(format!("Smith transforms not unimodular for {a:?}"));
    }
    Ok(())
}

fn check_membership(a: &Rows, h: &SubmoduleBasis, cols: usize) -> Result<(), String> {
    let bound = if cols <= 3 { 3 } else { 2 };
    let oracle = Lattice::new(a);
    for x in box_points(cols, bound) {
        let lib = lib_contains(h, &x);
        if lib != oracle.contains(&x) {
            return Err(format!("membership of {x:?} in {a:?}: library says {lib}"));
        }
        if let Some(c) = member(&ints(&x), h).unwrap() {
            let back: Vec<Int> = (0..cols)
                .map(|j| c.iter().zip(h.rows()).fold(Int::ZERO, |acc, (k, r)| {
                    let v = r.iter().find(|e| e.0 == j).map_or(Int::ZERO, |e| e.1.clone());
                    &acc + &(k * &v)
                }))
                .collect();
            if back != ints(&x) {
                return Err(format!("coordinates of {x:?} do not reproduce it"));
            }
        }
    }
    for x in combinations(a, 1) {
        if !lib_contains(h, &x) {
            return Err(format!("combination {x:?} of {a:?} rejected"));
        }
    }
    Ok(())
}

/// Hermite form, Smith form and membership of one matrix.
pub fn check_matrix(a: &Rows, cols: usize) -> Result<(), String> {
    let h = check_hnf(a, cols)?;
    check_snf(a, cols)?;
    check_membership(a, &h, cols)
}

/// Sum and intersection of the row lattices of two matrices.
pub fn check_pair(a: &Rows, b: &Rows, cols: usize) -> Result<(), String> {
    let (ha, hb) = (hnf(&to_matrix(a, cols)), hnf(&to_matrix(b, cols)));
    let stacked: Rows = a.iter().chain(b).cloned().collect();
    let sum = to_rows(&module_sum(&ha, &hb).unwrap());
    if !same_lattice(&sum, &stacked) {
        return Err(format!("sum {sum:?} differs from span of {stacked:?}"));
    }
    let meet = module_intersect(&ha, &hb).unwrap();
    let rows = to_rows(&meet);
    let (la, lb) = (Lattice::new(a), Lattice::new(b));
    if rows.iter().any(|r| !la.contains(r) || !lb.contains(r)) {
        return Err(format!("intersection row outside an operand: {rows:?}"));
    }
    if rank(&rows) + rank(&stacked) != rank(a) + rank(b) {
        return Err(format!("intersection {rows:?} has the wrong rank for {a:?}, {b:?}"));
    }
    for x in combinations(a, 2) {
        if lb.contains(&x) && !lib_contains(&meet, &x) {
            return Err(format!("{x:?} lies in both lattices but not in the intersection"));
        }
    }
    Ok(())
}
