use csl::closure;
use csl::oracle::{self, ColorPairs};
use csl_core::coloring::Coloring;
use csl_core::csl::Isometry;
use csl_core::lattice::named;
use csl_core::quat::{self, Quaternion};
use csl_core::Lattice;

/// σ_R read as a color coincidence test: a bijection between colors.
fn is_bijection(pairs: &ColorPairs) -> bool {
    let firsts: std::collections::BTreeSet<_> = pairs.iter().map(|(a, _)| a).collect();
    let seconds: std::collections::BTreeSet<_> = pairs.iter().map(|(_, b)| b).collect();
    firsts.len() == pairs.len() && seconds.len() == pairs.len()
}

fn enumerated_cc(c: &Coloring, r: &Isometry) -> bool {
    is_bijection(&oracle::sigma_relation(c, r).unwrap())
}

#[test]
fn enumeration_matches_structure_on_named_colorings() {
    let cases = [
        (named::im_lipschitz(), named::twice_im_hurwitz(), Quaternion::new(1, 1, 0, 0)),
        (named::im_lipschitz(), named::twice_im_hurwitz(), Quaternion::new(1, 2, 3, 0)),
        (named::cubic_body(), named::cubic_primitive(), Quaternion::new(2, 1, 1, 1)),
    ];
    for (parent, sub, q) in cases {
        let c = Coloring::new(&parent, &sub).unwrap();
        let r = quat::cayley_so3(&q).unwrap();
        assert_eq!(c.sigma_relation(&r).unwrap().pairs, oracle::sigma_relation(&c, &r).unwrap(), "q = {q}");
        assert_eq!(c.is_color_coincidence(&r).unwrap(), enumerated_cc(&c, &r));
    }
}

#[test]
fn a_larger_box_sees_nothing_new() {
    let c = Coloring::new(&named::square(), &Lattice::from_int_rows(&[[1, 1], [0, 3]]).unwrap()).unwrap();
    let r = Isometry::planar_rotation(2, 1).unwrap();
    let (basis, sides) = oracle::period_box(&c, &r).unwrap();
    let lo: Vec<i64> = sides.iter().map(|s| -2 * s).collect();
    let hi: Vec<i64> = sides.iter().map(|s| 2 * s + 1).collect();
    let wide = oracle::observed_pairs(&c, &r, &basis, &lo, &hi).unwrap();
    assert_eq!(wide, oracle::sigma_relation(&c, &r).unwrap());
}

#[test]
fn closure_violations_survive_enumeration() {
    // ℤ² colored by an index-5 sublattice
    let parent = named::square();
    let sub = Lattice::from_int_rows(&[[1, 2], [0, 5]]).unwrap();
    let c = Coloring::new(&parent, &sub).unwrap();
    let report = closure::search(&parent, &sub, 25).unwrap();
    assert!(!report.product_violations.is_empty());
    for v in report.product_violations.iter().take(10) {
        let r1 = v.first.isometry.to_isometry().unwrap();
        let r2 = v.second.isometry.to_isometry().unwrap();
        assert!(enumerated_cc(&c, &r1) && enumerated_cc(&c, &r2));
        let product = r2.compose(&r1).unwrap();
        assert_eq!(product.matrix(), v.product.isometry.to_isometry().unwrap().matrix());
        assert!(!enumerated_cc(&c, &product), "{} * {}", v.second.label, v.first.label);
    }
}

#[test]
fn body_centred_closure_is_empty() {
    let report = closure::search(&named::cubic_body(), &named::cubic_primitive(), 5).unwrap();
    assert!(report.is_empty());
    assert_eq!(report.candidates, report.color_coincidences);
}
