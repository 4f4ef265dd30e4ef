mod common;

use liedim::exactlinalg::{invariant_factors, module_sum, sparse, Int, IntMatrix, SparseVec};
use liedim::freealgebra::{commutator, is_lyndon, lyndon_words, multiply, witt_number, LieVector, Monomial, Poly};
use liedim::idealengine::{aug_power, embed, ideal_of_lie_ideal, lie_ideal, product_submodule, TruncatedContext};
use liedim::presentation::{abelianized_matrix, parse, preabelianize, split_linear, Presentation};
use liedim::series::NilpotentQuotient;
use proptest::prelude::*;

const M: usize = 3;
const D: usize = 5;

fn lie_vector(dim: usize) -> impl Strategy<Value = SparseVec> {
    prop::collection::vec((0..dim, -5i64..=5), 0..6)
        .prop_map(|t| sparse::merge_terms(t.into_iter().map(|(c, x)| (c, Int::from(x))).collect()))
}

fn poly(m: usize, d: usize) -> impl Strategy<Value = Poly> {
    let term = (prop::collection::vec(0..m as u8, 0..=d), -4i64..=4);
    prop::collection::vec(term, 0..5).prop_map(move |ts| Poly::from_terms(d, ts.into_iter().map(|(w, c)| (Monomial::new(w), Int::from(c)))))
}

fn presentation() -> impl Strategy<Value = Presentation> {
    (any::<u64>(), 1usize..=3, 0usize..=4).prop_map(|(seed, m, k)| {
        let mut r = common::rng(seed);
        common::random_presentation(&mut r, m, k, 4, 8)
    })
}

fn ctx() -> &'static TruncatedContext {
    use std::sync::OnceLock;
    static CTX: OnceLock<TruncatedContext> = OnceLock::new();
    CTX.get_or_init(|| TruncatedContext::new(M, D))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lyndon_counts_match_witt(m in 1usize..=4, d in 1usize..=7) {
        let words = lyndon_words(m, d);
        prop_assert_eq!(Int::from(words.len()), witt_number(m, d));
        prop_assert!(words.iter().all(|w| is_lyndon(w.word().letters())));
        prop_assert!(words.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn bracket_is_antisymmetric_and_satisfies_jacobi(
        u in lie_vector(ctx().lie_dim()),
        v in lie_vector(ctx().lie_dim()),
        w in lie_vector(ctx().lie_dim()),
    ) {
        let c = ctx();
        prop_assert_eq!(c.bracket(&u, &v), sparse::neg(&c.bracket(&v, &u)));
        prop_assert!(c.bracket(&u, &u).is_empty());
        let a = c.bracket(&u, &c.bracket(&v, &w));
        let b = c.bracket(&v, &c.bracket(&w, &u));
        let k = c.bracket(&w, &c.bracket(&u, &v));
        let total = sparse::axpy(&sparse::axpy(&a, &Int::from(-1), &b), &Int::from(-1), &k);
        prop_assert!(total.is_empty(), "{:?}", total);
    }

    #[test]
    fn bracket_matches_associative_commutator(u in lie_vector(ctx().lie_dim()), v in lie_vector(ctx().lie_dim())) {
        let c = ctx();
        let b = c.basis();
        let lhs = b.eval(&LieVector { max_degree: D, coords: c.bracket(&u, &v) });
        let pu = b.eval(&LieVector { max_degree: D, coords: u });
        let pv = b.eval(&LieVector { max_degree: D, coords: v });
        prop_assert_eq!(lhs, commutator(&pu, &pv, D).unwrap());
    }

    #[test]
    fn lie_coordinates_round_trip(u in lie_vector(ctx().lie_dim())) {
        let b = ctx().basis();
        let v = LieVector { max_degree: D, coords: u };
        prop_assert_eq!(b.lie_coordinates(&b.eval(&v)).unwrap(), v);
    }

    #[test]
    fn multiplication_is_associative(p in poly(3, 5), q in poly(3, 5), r in poly(3, 5)) {
        let left = multiply(&multiply(&p, &q, 5).unwrap(), &r, 5).unwrap();
        let right = multiply(&p, &multiply(&q, &r, 5).unwrap(), 5).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn relation_ideal_is_augmentation_times_itself_plus_relators(p in presentation()) {
        let ctx = TruncatedContext::new(p.rank(), 4);
        let lie = lie_ideal(p.relators(), &ctx).unwrap();
        let r = ideal_of_lie_ideal(&lie, &ctx).unwrap();
        let wr = product_submodule(&aug_power(1, &ctx).unwrap(), &r, &ctx).unwrap();
        prop_assert_eq!(module_sum(&wr, &embed(&lie, &ctx).unwrap().basis).unwrap(), r.basis);
    }

    #[test]
    fn preabelian_form_invariants(p in presentation()) {
        let q = preabelianize(&p);
        let form = q.preabelian().unwrap();
        for w in form.e.windows(2) {
            prop_assert!(w[0].divides(&w[1]) && !w[0].is_negative());
        }
        let a = abelianized_matrix(&p);
        let b = abelianized_matrix(&q);
        prop_assert_eq!(invariant_factors(a.ncols(), a.sparse_rows()), invariant_factors(b.ncols(), b.sparse_rows()));
        for i in 0..form.xi.len().max(q.rank()) {
            let (lin, _) = split_linear(&form.relator(i), q.rank());
            for (j, x) in lin.iter().enumerate() {
                let want = if i == j { form.e[i].clone() } else { Int::ZERO };
                prop_assert_eq!(x, &want);
            }
            if let Some(xi) = form.xi.get(i) {
                prop_assert!(split_linear(xi, q.rank()).0.iter().all(Int::is_zero));
            }
        }
        let s = IntMatrix::from_rows(q.rank(), form.substitution.clone());
        prop_assert_eq!(s.determinant().abs(), Int::ONE);
        // Same ring: isomorphic nilpotent quotients.
        let (nq, nr) = (NilpotentQuotient::new(&p, 3).unwrap(), NilpotentQuotient::new(&q, 3).unwrap());
        prop_assert_eq!(nq.structure(), nr.structure());
    }

    #[test]
    fn serialization_round_trips(p in presentation()) {
        let text = p.serialize();
        let back = parse(&text).unwrap();
        prop_assert_eq!(back.serialize(), text);
        let ctx = TruncatedContext::new(p.rank(), 4);
        let vectors = |x: &Presentation| -> Vec<SparseVec> {
            x.relators().iter().map(|r| ctx.lie_vector(r).unwrap()).filter(|v| !v.is_empty()).collect()
        };
        prop_assert_eq!(vectors(&back), vectors(&p));
    }

    #[test]
    fn delta_contains_gamma_and_decreases(p in presentation()) {
        let q = NilpotentQuotient::new(&p, 4).unwrap();
        let mut prev = q.delta(1).unwrap();
        for n in 1..=5 {
            let (g, d) = (q.gamma(n).unwrap(), q.delta(n).unwrap());
            prop_assert!(d.contains_module(&g));
            prop_assert!(prev.contains_module(&d));
            prev = d;
        }
    }
}
