mod common;

use common::oracle::{self, check_matrix, check_pair};
use liedim::exactlinalg::{hnf, module_intersect, module_sum, quotient_structure, Int};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn oracle_determinant() {
    let a = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
    assert_eq!(oracle::det(a), 4);
    assert_eq!(oracle::det(vec![vec![0, 1], vec![1, 0]]), -1);
    assert_eq!(oracle::invariant_factors(&vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
}

#[test]
fn degenerate_matrices() {
    check_matrix(&vec![vec![0, 0, 0]], 3).unwrap();
    check_matrix(&vec![vec![0, 0], vec![0, 0]], 2).unwrap();
    check_matrix(&vec![vec![3, 6], vec![-2, -4]], 2).unwrap();
    check_pair(&vec![vec![0, 0]], &vec![vec![1, 1]], 2).unwrap();
    check_pair(&vec![vec![2, 0], vec![0, 3]], &vec![vec![3, 0], vec![0, 2]], 2).unwrap();
}

#[test]
fn random_small_matrices() {
    let mut r = common::rng(0x5eed_0001);
    for _ in 0..300 {
        let (rows, cols) = (r.gen_range(1..=4), r.gen_range(1..=4));
        let a = common::random_matrix(&mut r, rows, cols);
        check_matrix(&a, cols).unwrap();
        let brows = r.gen_range(1..=4);
        let b = common::random_matrix(&mut r, brows, cols);
        check_pair(&a, &b, cols).unwrap();
    }
}

fn matrix(max_rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-9i64..=9, cols), 1..=max_rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_idempotent(a in matrix(4, 3)) {
        let h = hnf(&oracle::to_matrix(&a, 3));
        prop_assert_eq!(hnf(&h.matrix()), h);
    }

    #[test]
    fn sum_and_intersection_are_symmetric(a in matrix(3, 3), b in matrix(3, 3)) {
        let (ha, hb) = (hnf(&oracle::to_matrix(&a, 3)), hnf(&oracle::to_matrix(&b, 3)));
        prop_assert_eq!(module_sum(&ha, &hb).unwrap(), module_sum(&hb, &ha).unwrap());
        prop_assert_eq!(module_intersect(&ha, &hb).unwrap(), module_intersect(&hb, &ha).unwrap());
    }

    #[test]
    fn quotient_order_is_the_index(a in matrix(3, 3), k in 1i64..=6) {
        let ha = hnf(&oracle::to_matrix(&a, 3));
        let scaled: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|x| k * x).collect()).collect();
        let hk = hnf(&oracle::to_matrix(&scaled, 3));
        let q = quotient_structure(&ha, &hk).unwrap();
        prop_assert_eq!(q.free_rank, 0);
        prop_assert_eq!(q.torsion_order(), Int::pow(k, ha.rank() as u32));
    }
}
