use csl_core::coloring::Coloring;
use csl_core::csl::{self, Isometry};
use csl_core::lattice::{named, rat_vec};
use csl_core::quat::{self, AdmissiblePair, Quaternion};
use csl_core::{BigInt, BigRational, IntMatrix, Lattice, RatMatrix};
use num_integer::Integer;
use num_traits::One;
use proptest::prelude::*;

/// Least k with k·R integral, read off the entries.
fn entry_denominator(r: &Isometry) -> BigInt {
    let m = r.matrix();
    let mut den = BigInt::one();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            den = den.lcm(m.entry(i, j).denom());
        }
    }
    den
}

fn diag(entries: &[i64]) -> Lattice {
    let d = entries.len();
    let rows: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| if i == j { entries[i] } else { 0 }).collect()).collect();
    Lattice::from_int_rows(&rows).unwrap()
}

#[test]
fn named_cubic_indices() {
    let (p, b, f) = (named::cubic_primitive(), named::cubic_body(), named::cubic_face());
    assert_eq!(b.index_of(&p).unwrap(), BigInt::from(2));
    assert_eq!(p.index_of(&f).unwrap(), BigInt::from(2));
    assert_eq!(f.dual(), b);
    assert_eq!(p.dual(), p);
    assert_eq!(named::hurwitz().index_of(&named::lipschitz()).unwrap(), BigInt::from(2));
    assert_eq!(named::im_lipschitz().index_of(&named::twice_im_hurwitz()).unwrap(), BigInt::from(4));
}

#[test]
fn diagonal_intersections_and_sums() {
    let a = diag(&[4, 6]);
    let b = diag(&[6, 10]);
    assert_eq!(a.intersect(&b).unwrap(), diag(&[12, 30]));
    assert_eq!(a.sum(&b).unwrap(), diag(&[2, 2]));
}

#[test]
fn sigma_of_sample_rotations() {
    let z3 = named::cubic_primitive();
    let r = quat::cayley_so3(&"(1,1,1,0)".parse().unwrap()).unwrap();
    assert_eq!(csl::sigma(&z3, &r).unwrap(), BigInt::from(3));
    assert_eq!(csl::sigma(&z3, &Isometry::identity(3)).unwrap(), BigInt::one());
    let planar = Isometry::planar_rotation(2, 1).unwrap();
    assert_eq!(csl::sigma(&named::square(), &planar).unwrap(), BigInt::from(5));
}

#[test]
fn pair_with_odd_inner_product_is_not_a_color_coincidence() {
    // |q|² ≡ |p|² ≡ 2 (mod 4) with ⟨q, p⟩ odd
    let c = Coloring::new(&named::hurwitz(), &named::lipschitz()).unwrap();
    let q = Quaternion::new(1, 1, 0, 0);
    let p = Quaternion::new(4, 1, 1, 0);
    assert!(q.norm() == BigInt::from(2) && p.norm() == BigInt::from(18));
    let pair = AdmissiblePair::new(q, p).unwrap();
    let r = quat::so4_from_pair(&pair).unwrap();
    let report = c.report(&r).unwrap();
    assert!(!report.is_color_coincidence);
    assert_eq!(report.sigma2, BigInt::from(2) * &report.sigma1);
}

#[test]
fn trivial_coloring() {
    let z3 = named::cubic_primitive();
    let c = Coloring::new(&z3, &z3).unwrap();
    let r = quat::cayley_so3(&Quaternion::new(1, 2, 0, 0)).unwrap();
    let report = c.report(&r).unwrap();
    assert_eq!((report.m, report.s, report.t, report.u, report.v), (1, 1, 1, 1, 1));
    assert!(report.is_color_coincidence);
    assert_eq!(report.sigma1, report.sigma2);
}

fn unimodular(seed: [i64; 3]) -> IntMatrix {
    // product of elementary shears, so det = 1
    let [a, b, c] = seed;
    let l = IntMatrix::from_rows(&[[1, 0, 0], [a, 1, 0], [b, c, 1]]);
    let u = IntMatrix::from_rows(&[[1, c, a], [0, 1, b], [0, 0, 1]]);
    l.mul(&u)
}

proptest! {
    #[test]
    fn sigma_on_integer_lattices_is_the_entry_denominator(q in prop::array::uniform4(-6i64..=6)) {
        prop_assume!(q.iter().any(|&x| x != 0));
        let r = quat::cayley_so3(&Quaternion::new(q[0], q[1], q[2], q[3])).unwrap();
        prop_assert_eq!(csl::sigma(&named::cubic_primitive(), &r).unwrap(), entry_denominator(&r));
    }

    #[test]
    fn planar_sigma_is_the_entry_denominator(x in -12i64..=12, y in -12i64..=12) {
        prop_assume!(x != 0 || y != 0);
        let r = Isometry::planar_rotation(x, y).unwrap();
        prop_assert_eq!(csl::sigma(&named::square(), &r).unwrap(), entry_denominator(&r));
    }

    #[test]
    fn basis_change_does_not_change_the_lattice(
        rows in prop::array::uniform3(prop::array::uniform3(-9i64..=9)),
        seed in prop::array::uniform3(-4i64..=4),
        denom in 1i64..=6,
    ) {
        let m = IntMatrix::from_rows(&rows);
        prop_assume!(m.det().map(|d| d != BigInt::from(0)).unwrap_or(false));
        let l = Lattice::new(&RatMatrix::new(m.clone(), BigInt::from(denom))).unwrap();
        let moved = Lattice::new(&RatMatrix::new(unimodular(seed).mul(&m), BigInt::from(denom))).unwrap();
        prop_assert_eq!(&l, &moved);
        let vol = BigRational::new(m.det().unwrap(), BigInt::from(denom).pow(3));
        prop_assert_eq!(l.volume(), if vol < BigRational::from(BigInt::from(0)) { -vol } else { vol });
    }

    #[test]
    fn lattice_points_are_contained(c in prop::array::uniform3(-20i64..=20)) {
        let b = named::cubic_body();
        let coords: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        prop_assert!(b.contains(&b.point(&coords)));
        prop_assert!(named::cubic_face().contains(&rat_vec(&[c[0] + c[1], c[0] - c[1], 2 * c[2]])));
    }
}
