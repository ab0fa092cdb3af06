//! Seeded random lattices, colorings and isometries for the property suites.

use csl_core::coloring::Coloring;
use csl_core::csl::{self, Isometry};
use csl_core::lattice::{named, rat_vec};
use csl_core::quat::{self, Quaternion, RationalQuaternion};
use csl_core::{BigInt, BigRational, IntMatrix, Lattice, RatMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rotation by the argument of `(x+iy)²`, composed with a reflection half
/// of the time.
pub fn planar_isometry(rng: &mut SuiteRng, max: i64) -> Isometry {
    loop {
        let (x, y) = (rng.random_range(-max..=max), rng.random_range(-max..=max));
        if x == 0 && y == 0 {
            continue;
        }
        let r = Isometry::planar_rotation(x, y).expect("nonzero");
        if rng.random_bool(0.5) {
            let m = Isometry::reflection(&rat_vec(&[0, 1])).expect("nonzero normal");
            return r.compose(&m).expect("same dimension");
        }
        return r;
    }
}

pub fn quaternion(rng: &mut SuiteRng, max: i64) -> Quaternion {
    loop {
        let c: [i64; 4] = std::array::from_fn(|_| rng.random_range(-max..=max));
        let q = Quaternion::new(c[0], c[1], c[2], c[3]);
        if !q.is_zero() {
            return q.primitive_part().expect("nonzero");
        }
    }
}

/// `R_q`, or `−R_q` half of the time.
pub fn cubic_isometry(rng: &mut SuiteRng, max: i64) -> Isometry {
    let r = quat::cayley_so3(&quaternion(rng, max)).expect("nonzero");
    if rng.random_bool(0.5) {
        r.negated()
    } else {
        r
    }
}

pub fn isometry(rng: &mut SuiteRng, dim: usize, max: i64) -> Isometry {
    match dim {
        2 => planar_isometry(rng, max),
        3 => cubic_isometry(rng, max),
        _ => panic!("random isometries are only drawn in dimension 2 or 3"),
    }
}

/// An upper triangular integer matrix with the given diagonal and reduced
/// off-diagonal entries.
fn triangular(rng: &mut SuiteRng, diag: &[i64]) -> IntMatrix {
    let d = diag.len();
    let mut m = IntMatrix::zeros(d, d);
    for i in 0..d {
        m.set(i, i, diag[i].into());
        for j in i + 1..d {
            m.set(i, j, rng.random_range(0..diag[j]).into());
        }
    }
    m
}

/// Diagonal with product exactly `index`.
fn diagonal_of_product(rng: &mut SuiteRng, dim: usize, index: u64) -> Vec<i64> {
    let mut diag = vec![1i64; dim];
    let mut rest = index;
    let mut p = 2;
    while rest > 1 {
        while rest.is_multiple_of(p) {
            let slot = rng.random_range(0..dim);
            diag[slot] *= p as i64;
            rest /= p;
        }
        p += 1;
    }
    diag
}

/// A sublattice of `parent` of exactly the given index.
pub fn sublattice_of_index(rng: &mut SuiteRng, parent: &Lattice, index: u64) -> Lattice {
    let diag = diagonal_of_product(rng, parent.dim(), index);
    let coords = RatMatrix::from_int(triangular(rng, &diag));
    Lattice::new(&coords.mul(parent.basis())).expect("nonsingular")
}

/// Random parent lattices: small triangular ones in the plane, the three
/// cubic lattices or a random superlattice-scaled variant in space.
pub fn parent_lattice(rng: &mut SuiteRng, dim: usize) -> Lattice {
    match dim {
        2 => {
            let diag = [rng.random_range(1..=2), rng.random_range(1..=3)];
            Lattice::new(&RatMatrix::from_int(triangular(rng, &diag))).expect("nonsingular")
        }
        3 => match rng.random_range(0..4) {
            0 => named::cubic_primitive(),
            1 => named::cubic_body(),
            2 => named::cubic_face(),
            _ => {
                let diag = [1, rng.random_range(1..=2), rng.random_range(1..=2)];
                let m = RatMatrix::new(triangular(rng, &diag), BigInt::from(2));
                Lattice::new(&m).expect("nonsingular")
            }
        },
        _ => panic!("random parents are only drawn in dimension 2 or 3"),
    }
}

/// A coloring with `m ≤ max_m` colors and a coincidence isometry with
/// `Σ₁ ≤ max_sigma1`.
pub fn triple(rng: &mut SuiteRng, dim: usize, max_m: u64, max_sigma1: u64) -> (Coloring, Isometry) {
    let parent = parent_lattice(rng, dim);
    let m = rng.random_range(1..=max_m);
    let sub = sublattice_of_index(rng, &parent, m);
    let coloring = Coloring::new(&parent, &sub).expect("constructed as a sublattice");
    let r = coincidence_with_bound(rng, &parent, max_sigma1);
    (coloring, r)
}

/// A random isometry with `Σ_Γ(R) ≤ bound`, by rejection.
pub fn coincidence_with_bound(rng: &mut SuiteRng, lattice: &Lattice, bound: u64) -> Isometry {
    let bound = BigInt::from(bound);
    let max = if lattice.dim() == 2 { 6 } else { 5 };
    loop {
        let r = isometry(rng, lattice.dim(), max);
        if csl::sigma(lattice, &r).expect("dimensions agree") <= bound {
            return r;
        }
    }
}

/// Hurwitz quaternion with doubled components in `[-2·max-1, 2·max+1]`.
pub fn hurwitz(rng: &mut SuiteRng, max: i64) -> Quaternion {
    let half = rng.random_bool(0.5) as i64;
    let d: [BigInt; 4] = std::array::from_fn(|_| BigInt::from(2 * rng.random_range(-max..=max) + half));
    Quaternion::from_doubled(d).expect("uniform parity")
}

pub fn rational_quaternion(rng: &mut SuiteRng) -> RationalQuaternion {
    RationalQuaternion(std::array::from_fn(|_| {
        BigRational::new(rng.random_range(-40i64..=40).into(), rng.random_range(1i64..=15).into())
    }))
}
