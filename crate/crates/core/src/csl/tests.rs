use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use super::*;
use crate::lattice::{named, rat_vec};
use crate::quat::{self, AdmissiblePair, Quaternion};

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn rot345() -> Isometry {
    Isometry::planar_rotation(2, 1).unwrap()
}

#[test]
fn construction() {
    let r = rot345();
    assert_eq!(r.matrix(), &RatMatrix::new(IntMatrix::from_rows(&[[3, -4], [4, 3]]), big(5)));
    assert_eq!(r.kind(), IsometryKind::Rotation);
    let shear = RatMatrix::from_int(IntMatrix::from_rows(&[[1, 1], [0, 1]]));
    assert_eq!(Isometry::new(shear), Err(Error::NotOrthogonal));
    let rect = RatMatrix::from_int(IntMatrix::from_rows(&[[1, 0, 0], [0, 1, 0]]));
    assert!(matches!(Isometry::new(rect), Err(Error::NotSquare { .. })));
    let m = Isometry::reflection(&rat_vec(&[1, 2])).unwrap();
    assert_eq!(m.kind(), IsometryKind::Rotoreflection);
    assert!(m.compose(&m).unwrap().is_identity());
}

#[test]
fn coincidence_and_csl_examples() {
    let z2 = named::square();
    let z3 = named::cubic_primitive();
    assert!(is_coincidence(&z3, &Isometry::identity(3)).unwrap());
    assert!(is_coincidence(&z2, &rot345()).unwrap());
    let rq = quat::cayley_so3(&Quaternion::new(1, 1, 1, 0)).unwrap();
    assert!(is_coincidence(&named::cubic_primitive(), &rq).unwrap());
    assert!(is_coincidence(&z2, &rq).is_err());

    assert_eq!(csl_lattice(&z3, &Isometry::identity(3)).unwrap(), z3);
    // x ↦ Rx with this orientation: the CSL is {(x, y) : x ≡ 2y mod 5}
    let csl = csl_lattice(&z2, &rot345()).unwrap();
    assert_eq!(csl, Lattice::from_int_rows(&[[2, 1], [5, 0]]).unwrap());
    assert_eq!(csl_lattice(&z2, &rot345().inverse()).unwrap(), Lattice::from_int_rows(&[[3, 1], [5, 0]]).unwrap());
    let csl = csl_lattice(&z3, &rq).unwrap();
    assert_eq!(z3.index_of(&csl).unwrap(), big(3));
}

#[test]
fn sigma_and_denominator_examples() {
    let z2 = named::square();
    let z3 = named::cubic_primitive();
    assert_eq!(sigma(&z3, &Isometry::identity(3)).unwrap(), big(1));
    assert_eq!(sigma(&z2, &rot345()).unwrap(), big(5));
    let rq = quat::cayley_so3(&Quaternion::new(1, 1, 1, 0)).unwrap();
    assert_eq!(sigma(&z3, &rq).unwrap(), big(3));
    assert_eq!(denominator(&z3, &Isometry::identity(3)).unwrap(), big(1));
    assert_eq!(denominator(&z2, &rot345()).unwrap(), big(5));
    assert_eq!(denominator(&z3, &rq).unwrap(), big(3));
    // in body-centred coordinates the denominator is basis dependent but Σ is not
    assert_eq!(common_sigma(&[named::cubic_primitive(), named::cubic_body(), named::cubic_face()], &rq).unwrap(), Some(big(3)));
}

#[test]
fn parametrized_inverses_and_products() {
    let a = Quaternion::new(1, 2, 0, 1);
    let b = Quaternion::new(3, 1, 1, 0);
    let ra = quat::cayley_so3(&a).unwrap();
    let rb = quat::cayley_so3(&b).unwrap();
    let inv = ra.inverse();
    assert_eq!(inv.source(), Some(&Parametrization::Cayley(a.conj())));
    assert_eq!(inv.matrix(), quat::cayley_so3(&a.conj()).unwrap().matrix());
    let ab = ra.compose(&rb).unwrap();
    let Some(Parametrization::Cayley(c)) = ab.source() else { panic!("product of Cayley rotations keeps its source") };
    assert_eq!(ab.matrix(), quat::cayley_so3(c).unwrap().matrix());

    let neg = ra.negated();
    assert_eq!(neg.kind(), IsometryKind::Rotoreflection);
    assert_eq!(neg.inverse().matrix(), &neg.matrix().transpose());

    let p1 = AdmissiblePair::new(Quaternion::new(1, 1, 0, 0), Quaternion::new(1, 0, 1, 0)).unwrap();
    let p2 = AdmissiblePair::new(Quaternion::new(1, 1, 1, 0), Quaternion::new(1, 1, 0, 1)).unwrap();
    for pair in [&p1, &p2] {
        let r = quat::so4_from_pair(pair).unwrap();
        let Some(Parametrization::Pair(q, p)) = r.inverse().source().cloned() else { panic!() };
        let rebuilt = quat::so4_from_pair(&AdmissiblePair::new(q, p).unwrap()).unwrap();
        assert_eq!(rebuilt.matrix(), r.inverse().matrix());

        let t = quat::rotoreflection_from_pair(pair).unwrap();
        let Some(Parametrization::Pair(q, p)) = t.inverse().source().cloned() else { panic!() };
        let rebuilt = quat::rotoreflection_from_pair(&AdmissiblePair::new(q, p).unwrap()).unwrap();
        assert_eq!(rebuilt.matrix(), t.inverse().matrix());
        // T_{q,p} = R_{q,p} T_{1,1}
        let t11 = quat::rotoreflection_from_pair(&AdmissiblePair::identity()).unwrap();
        assert_eq!(r.compose(&t11).unwrap().matrix(), t.matrix());
    }
    let r12 = quat::so4_from_pair(&p1).unwrap().compose(&quat::so4_from_pair(&p2).unwrap()).unwrap();
    let Some(Parametrization::Pair(q, p)) = r12.source().cloned() else { panic!() };
    assert_eq!(quat::so4_from_pair(&AdmissiblePair::new(q, p).unwrap()).unwrap().matrix(), r12.matrix());
}

fn cubic_rotation() -> impl Strategy<Value = Isometry> {
    proptest::array::uniform4(-5i64..6).prop_filter_map("nonzero", |c| {
        let q = Quaternion::new(c[0], c[1], c[2], c[3]);
        (!q.is_zero()).then(|| quat::cayley_so3(&q).unwrap())
    })
}

fn cubic_isometry() -> impl Strategy<Value = Isometry> {
    (cubic_rotation(), any::<bool>()).prop_map(|(r, flip)| if flip { r.negated() } else { r })
}

fn sublattice3() -> impl Strategy<Value = Lattice> {
    (1i64..4, 1i64..4, 1i64..3, -3i64..4, -3i64..4, -3i64..4)
        .prop_map(|(a, b, c, x, y, z)| Lattice::from_int_rows(&[[a, x, y], [0, b, z], [0, 0, c]]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_has_same_sigma(r in cubic_isometry()) {
        for l in [named::cubic_primitive(), named::cubic_body(), named::cubic_face()] {
            prop_assert_eq!(sigma(&l, &r).unwrap(), sigma(&l, &r.inverse()).unwrap());
        }
    }

    #[test]
    fn sigma_one_iff_symmetry(r in cubic_isometry()) {
        let z3 = named::cubic_primitive();
        let unit = sigma(&z3, &r).unwrap().is_one();
        prop_assert_eq!(unit, r.image(&z3).unwrap() == z3);
    }

    #[test]
    fn cubic_lattices_share_sigma(r in cubic_isometry()) {
        let cubic = [named::cubic_primitive(), named::cubic_body(), named::cubic_face()];
        prop_assert!(common_sigma(&cubic, &r).unwrap().is_some());
    }

    #[test]
    fn sublattice_sigma_bounds(r in cubic_isometry(), sub in sublattice3()) {
        let parent = named::cubic_primitive();
        let m = parent.index_of(&sub).unwrap();
        let s1 = sigma(&parent, &r).unwrap();
        let s2 = sigma(&sub, &r).unwrap();
        prop_assert!((&m * &s2 % &s1).is_zero());
        prop_assert!((&m * &s1 % &s2).is_zero());
        let ratio = BigRational::new(s2, s1);
        let m = BigRational::from_integer(m);
        prop_assert!(ratio <= m && ratio >= m.recip());
    }

    #[test]
    fn sigma_of_product_divides_product(r1 in cubic_isometry(), r2 in cubic_isometry()) {
        let z3 = named::cubic_primitive();
        let prod = r2.compose(&r1).unwrap();
        let bound = sigma(&z3, &r1).unwrap() * sigma(&z3, &r2).unwrap();
        prop_assert!((bound % sigma(&z3, &prod).unwrap()).is_zero());
    }

    #[test]
    fn planar_csls(x in -9i64..10, y in -9i64..10) {
        prop_assume!(x != 0 || y != 0);
        let r = Isometry::planar_rotation(x, y).unwrap();
        let z2 = named::square();
        let g = num_integer::gcd(x, y);
        let n = (x * x + y * y) / (g * g);
        // Σ of a planar rotation is the odd part of the reduced norm
        let mut odd = n;
        while odd % 2 == 0 { odd /= 2; }
        prop_assert_eq!(sigma(&z2, &r).unwrap(), big(odd));
        let csl = csl_lattice(&z2, &r).unwrap();
        for v in csl.basis_vectors() {
            prop_assert!(z2.contains(&v));
            let back: Vec<BigRational> = r.inverse().apply(&v);
            prop_assert!(z2.contains(&back));
        }
    }
}
