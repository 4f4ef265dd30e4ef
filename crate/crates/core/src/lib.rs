//! Exact computation of lower central series and dimension subrings of
//! finitely presented Lie rings over the integers.

pub mod counterexamples;
pub mod exactlinalg;
pub mod freealgebra;
pub mod idealengine;
pub mod presentation;
pub mod series;

#[cfg(feature = "parallel")]
pub(crate) fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T, U>(items: &[T], f: impl Fn(&T) -> U) -> Vec<U> {
    items.iter().map(f).collect()
}
