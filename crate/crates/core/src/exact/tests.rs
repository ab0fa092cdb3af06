use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use super::*;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Cofactor expansion; the independent determinant oracle.
fn cofactor_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigRational::zero();
    for j in 0..n {
        let minor: Vec<Vec<BigRational>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Does some integer combination of `gens` with coefficients in [-r, r] hit `target`?
fn in_span_box(gens: &IntMatrix, target: &[BigInt], r: i64) -> bool {
    let k = gens.rows();
    let mut coeffs = vec![-r; k];
    loop {
        let c = big(&coeffs);
        if gens.left_mul_vec(&c) == target {
            return true;
        }
        let mut i = 0;
        loop {
            if i == k {
                return false;
            }
            coeffs[i] += 1;
            if coeffs[i] <= r {
                break;
            }
            coeffs[i] = -r;
            i += 1;
        }
    }
}

fn assert_hnf_shape(h: &IntMatrix, pivots: &[usize]) {
    for (r, &pc) in pivots.iter().enumerate() {
        assert!(h.get(r, pc).is_positive());
        for c in 0..pc {
            assert!(h.get(r, c).is_zero());
        }
        for i in 0..r {
            let x = h.get(i, pc);
            assert!(!x.is_negative() && x < h.get(r, pc));
        }
    }
    for r in pivots.len()..h.rows() {
        assert!(h.row(r).iter().all(Zero::is_zero));
    }
}

#[test]
fn hnf_identity() {
    let herm = hnf(&IntMatrix::identity(2));
    assert_eq!(herm.h, IntMatrix::identity(2));
    assert_eq!(herm.u, IntMatrix::identity(2));
}

#[test]
fn hnf_two_by_two() {
    let m = IntMatrix::from_rows(&[[4, 0], [1, 1]]);
    let herm = hnf(&m);
    assert_eq!(herm.h, IntMatrix::from_rows(&[[1, 1], [0, 4]]));
    assert_eq!(herm.u.mul(&m), herm.h);
}

#[test]
fn hnf_generator_list_with_zero_row() {
    let m = IntMatrix::from_rows(&[[2, 0], [0, 2], [1, 1]]);
    let herm = hnf(&m);
    assert_eq!(herm.rank, 2);
    assert_eq!(herm.h, IntMatrix::from_rows(&[[1, 1], [0, 2], [0, 0]]));
    // brute-force span check in a 5x5 box: both row sets generate each other
    for i in 0..2 {
        assert!(in_span_box(&m, herm.h.row(i), 2));
    }
    for i in 0..3 {
        assert!(in_span_box(&herm.h.row_vecs().iter().take(2).fold(IntMatrix::zeros(0, 2), |acc, r| {
            acc.stack(&IntMatrix::new(1, 2, r.clone()))
        }), m.row(i), 2));
    }
}

#[test]
fn hnf_falls_back_to_bignum() {
    let huge = BigInt::from(1u64 << 62);
    let m = IntMatrix::new(2, 2, vec![huge.clone(), BigInt::from(3), BigInt::from(5), huge.clone()]);
    let herm = hnf(&m);
    assert_eq!(herm.u.mul(&m), herm.h);
    assert!(herm.u.is_unimodular());
    assert_hnf_shape(&herm.h, &herm.pivots);
    assert_eq!(herm.h.det().unwrap().abs(), m.det().unwrap().abs());
}

#[test]
fn snf_examples() {
    let s = snf(&IntMatrix::from_rows(&[[2, 0], [0, 4]]));
    assert_eq!(s.invariant_factors(), big(&[2, 4]));
    let m = IntMatrix::from_rows(&[[1, 1], [0, 4]]);
    let s = snf(&m);
    assert_eq!(s.invariant_factors(), big(&[1, 4]));
    assert_eq!(s.u.mul(&m).mul(&s.v), s.s);
    let s = snf(&IntMatrix::zeros(2, 2));
    assert_eq!(s.s, IntMatrix::zeros(2, 2));
}

#[test]
fn snf_needs_divisibility_fix() {
    // diag(2, 3) is not in Smith form; the answer is diag(1, 6)
    let m = IntMatrix::from_rows(&[[2, 0], [0, 3]]);
    let s = snf(&m);
    assert_eq!(s.invariant_factors(), big(&[1, 6]));
    assert_eq!(s.u.mul(&m).mul(&s.v), s.s);
}

#[test]
fn determinants() {
    assert_eq!(IntMatrix::identity(3).det().unwrap(), BigInt::one());
    assert_eq!(IntMatrix::from_rows(&[[1, 1], [0, 4]]).det().unwrap(), BigInt::from(4));
    let r = RatMatrix::new(IntMatrix::from_rows(&[[3, 5], [4, -3]]), BigInt::from(5));
    let oracle = cofactor_det(&r.row_vecs());
    assert_eq!(oracle, rat(-29, 25));
    assert_eq!(r.det().unwrap(), oracle);
    assert_eq!(
        IntMatrix::from_rows(&[[1, 2, 3]]).det(),
        Err(crate::Error::NotSquare { rows: 1, cols: 3 })
    );
}

#[test]
fn det_with_zero_leading_pivot() {
    let m = IntMatrix::from_rows(&[[0, 2, 1], [3, 1, 0], [1, 0, 4]]);
    let oracle = cofactor_det(&RatMatrix::from_int(m.clone()).row_vecs());
    assert_eq!(BigRational::from(m.det().unwrap()), oracle);
}

#[test]
fn solve_examples() {
    assert_eq!(solve_integer(&IntMatrix::identity(2), &big(&[3, 5])), Some(big(&[3, 5])));
    assert_eq!(solve_integer(&IntMatrix::from_rows(&[[2, 0], [0, 2]]), &big(&[1, 0])), None);
    // x₀ + x₁ = 3, 4x₁ = 8
    let a = IntMatrix::from_rows(&[[1, 1], [0, 4]]);
    let b = big(&[3, 8]);
    let x = solve_integer(&a, &b).expect("solvable");
    assert_eq!(a.mul_vec(&x), b);
    // brute force agrees that a solution exists
    let mut found = false;
    for x0 in -10..=10 {
        for x1 in -10..=10 {
            if a.mul_vec(&big(&[x0, x1])) == b {
                found = true;
            }
        }
    }
    assert!(found);
}

#[test]
fn rational_inverse_and_canonical_denominator() {
    let r = RatMatrix::new(IntMatrix::from_rows(&[[6, -8], [8, 6]]), BigInt::from(10));
    assert_eq!(r.denom(), &BigInt::from(5));
    let inv = r.inverse().unwrap();
    assert_eq!(inv, r.transpose());
    assert_eq!(r.mul(&inv), RatMatrix::identity(2));
    assert_eq!(RatMatrix::from_int(IntMatrix::from_rows(&[[1, 2], [2, 4]])).inverse(), Err(crate::Error::Singular));
}

#[test]
fn left_kernel_annihilates() {
    let m = IntMatrix::from_rows(&[[1, 2], [3, 4], [5, 6]]);
    let k = left_kernel(&m);
    assert_eq!(k.rows(), 1);
    assert_eq!(k.mul(&m), IntMatrix::zeros(1, 2));
}

fn small_matrix(max_rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows).prop_flat_map(move |rows| {
        proptest::collection::vec(-9i64..=9, rows * cols)
            .prop_map(move |v| IntMatrix::new(rows, cols, big(&v)))
    })
}

fn square_matrix(n: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-9i64..=9, n * n).prop_map(move |v| IntMatrix::new(n, n, big(&v)))
}

proptest! {
    #[test]
    fn hnf_is_canonical_and_spans(m in small_matrix(5, 3)) {
        let herm = hnf(&m);
        prop_assert_eq!(herm.u.mul(&m), herm.h.clone());
        prop_assert!(herm.u.is_unimodular());
        assert_hnf_shape(&herm.h, &herm.pivots);
        // every generator is in the row span of H and vice versa
        let (basis, rank) = hnf_basis(&m);
        prop_assert_eq!(rank, herm.rank);
        prop_assert_eq!(&basis, &herm.h);
        let ht = herm.h.transpose();
        for i in 0..m.rows() {
            prop_assert!(solve_integer(&ht, m.row(i)).is_some());
        }
        let mt = m.transpose();
        for i in 0..herm.rank {
            prop_assert!(solve_integer(&mt, herm.h.row(i)).is_some());
        }
    }

    #[test]
    fn snf_is_diagonal_chain(m in small_matrix(4, 3)) {
        let sm = snf(&m);
        prop_assert_eq!(sm.u.mul(&m).mul(&sm.v), sm.s.clone());
        prop_assert!(sm.u.is_unimodular());
        prop_assert!(sm.v.is_unimodular());
        for i in 0..sm.s.rows() {
            for j in 0..sm.s.cols() {
                if i != j {
                    prop_assert!(sm.s.get(i, j).is_zero());
                }
            }
        }
        let d = sm.invariant_factors();
        for w in d.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn det_invariant_under_unimodular(m in square_matrix(3)) {
        let sm = snf(&m);
        let d = m.det().unwrap();
        let d2 = sm.u.mul(&m).mul(&sm.v).det().unwrap();
        prop_assert_eq!(d.abs(), d2.abs());
        let oracle = cofactor_det(&RatMatrix::from_int(m.clone()).row_vecs());
        prop_assert_eq!(BigRational::from(d), oracle);
    }

    #[test]
    fn solve_matches_brute_force(a in proptest::collection::vec(-4i64..=4, 4), b in proptest::collection::vec(-6i64..=6, 2)) {
        let a = IntMatrix::new(2, 2, big(&a));
        let b = big(&b);
        match solve_integer(&a, &b) {
            Some(x) => prop_assert_eq!(a.mul_vec(&x), b),
            None => {
                for x0 in -12..=12 {
                    for x1 in -12..=12 {
                        prop_assert_ne!(a.mul_vec(&big(&[x0, x1])), b.clone());
                    }
                }
            }
        }
    }
}
