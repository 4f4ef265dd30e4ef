use std::cmp::Ordering;
use std::fmt;

/// A word over generator indices; an element of the monomial basis of the
/// free associative algebra. The empty word is the unit.
///
/// Ordered by degree first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn new(letters: impl Into<Vec<u8>>) -> Monomial {
        Monomial(letters.into())
    }

    pub fn unit() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn letter(i: usize) -> Monomial {
        Monomial(vec![i as u8])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Monomial(v)
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().max().map(|&x| x as usize)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "x{x}")?;
        }
        Ok(())
    }
}

/// Coordinate system for the augmentation ideal of the free associative
/// algebra on `m` letters modulo degree `> max_degree`: monomials of degree
/// `1..=max_degree`, ordered by degree and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIndex {
    m: usize,
    max_degree: usize,
    /// `offsets[d]` is the position of the first degree-`d` monomial;
    /// `offsets[max_degree + 1]` is the dimension.
    offsets: Vec<usize>,
    powers: Vec<usize>,
}

impl MonomialIndex {
    pub fn new(m: usize, max_degree: usize) -> MonomialIndex {
        assert!(m >= 1 && m <= 256, "generator count out of range");
        let mut powers = vec![1usize];
        for d in 1..=max_degree + 1 {
            powers.push(powers[d - 1] * m);
        }
        let mut offsets = vec![0, 0];
        for d in 1..=max_degree {
            offsets.push(offsets[d] + powers[d]);
        }
        MonomialIndex { m, max_degree, offsets, powers }
    }

    pub fn generators(&self) -> usize {
        self.m
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn dim(&self) -> usize {
        self.offsets[self.max_degree + 1]
    }

    /// Number of coordinates of degree `< d`.
    pub fn dim_below(&self, d: usize) -> usize {
        self.offsets[d.clamp(1, self.max_degree + 1)]
    }

    pub fn degree_range(&self, d: usize) -> std::ops::Range<usize> {
        self.offsets[d]..self.offsets[d + 1]
    }

    pub fn degree_of(&self, idx: usize) -> usize {
        self.offsets.partition_point(|&o| o <= idx) - 1
    }

    /// Position of a word of degree `1..=max_degree`.
    pub fn index(&self, w: &Monomial) -> Option<usize> {
        let d = w.degree();
        if d == 0 || d > self.max_degree || w.max_letter().is_some_and(|x| x >= self.m) {
            return None;
        }
        let rank = w.letters().iter().fold(0usize, |acc, &x| acc * self.m + x as usize);
        Some(self.offsets[d] + rank)
    }

    pub fn word(&self, idx: usize) -> Monomial {
        let d = self.degree_of(idx);
        let mut rank = idx - self.offsets[d];
        let mut letters = vec![0u8; d];
        for slot in letters.iter_mut().rev() {
            *slot = (rank % self.m) as u8;
            rank /= self.m;
        }
        Monomial(letters)
    }

    /// Position of the concatenation of two words, if within the truncation.
    #[inline]
    pub fn concat(&self, i: usize, j: usize) -> Option<usize> {
        let (di, dj) = (self.degree_of(i), self.degree_of(j));
        if di + dj > self.max_degree {
            return None;
        }
        let ri = i - self.offsets[di];
        let rj = j - self.offsets[dj];
        Some(self.offsets[di + dj] + ri * self.powers[dj] + rj)
    }

    /// `x_g · w`.
    #[inline]
    pub fn left_mul(&self, g: usize, idx: usize) -> Option<usize> {
        let d = self.degree_of(idx);
        (d < self.max_degree).then(|| self.offsets[d + 1] + g * self.powers[d] + (idx - self.offsets[d]))
    }

    /// `w · x_g`.
    #[inline]
    pub fn right_mul(&self, g: usize, idx: usize) -> Option<usize> {
        let d = self.degree_of(idx);
        (d < self.max_degree).then(|| self.offsets[d + 1] + (idx - self.offsets[d]) * self.m + g)
    }
}
