use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{odd_part, Quaternion};
use crate::csl::{Isometry, Parametrization};
use crate::error::{Error, Result};
use crate::exact::{IntMatrix, RatMatrix};

/// Images of the colors `c₀, c₁, c₂, c₃` (the classes of `0, i, j, k`).
pub type ColorIndexPermutation = [usize; 4];

/// `R_q(x) = q x q̄ / |q|²` on `Im ℍ` with basis `(i, j, k)`.
///
/// Any nonzero Hurwitz `q` is accepted; the stored parametrization is the
/// primitive quaternion on the same ray, which gives the same rotation.
pub fn cayley_so3(q: &Quaternion) -> Result<Isometry> {
    let q = q.primitive_part()?;
    let n = q.norm();
    let qc = q.conj();
    let mut data: Vec<BigInt> = alloc::vec![BigInt::zero(); 9];
    for a in 0..3 {
        let image = q.mul(&Quaternion::unit(a + 1)).mul(&qc);
        let c = image.lipschitz_components().expect("Lipschitz products stay Lipschitz");
        debug_assert!(c[0].is_zero());
        for r in 0..3 {
            data[r * 3 + a] = c[r + 1].clone();
        }
    }
    let m = RatMatrix::new(IntMatrix::new(3, 3, data), n);
    Ok(Isometry::new(m)?.with_source(Parametrization::Cayley(q)))
}

/// The odd part of `|q|²`.
pub fn sigma_so3(q: &Quaternion) -> Result<BigInt> {
    if !q.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    odd_part(&q.norm())
}

/// Predicted color permutation of `R_q` on the coloring of `Im 𝕃` by
/// `2 Im 𝕁`, classified by `|q|²` modulo 4 (odd norms fix every color).
pub fn example2_class(q: &Quaternion) -> Result<ColorIndexPermutation> {
    let c = q.lipschitz_components().filter(|_| q.is_primitive()).ok_or(Error::NotPrimitive)?;
    let n = q.norm();
    if n.is_odd() {
        return Ok([0, 1, 2, 3]);
    }
    let four = BigInt::from(4);
    if n.mod_floor(&four) == BigInt::from(2) {
        // exactly two components are odd
        let j = (1..4).find(|&j| c[j].is_odd() == c[0].is_odd()).expect("two components share q0's parity");
        let mut perm = [0, 1, 2, 3];
        let others: Vec<usize> = (1..4).filter(|&x| x != j).collect();
        perm[others[0]] = others[1];
        perm[others[1]] = others[0];
        return Ok(perm);
    }
    // all four components odd
    let ones = c.iter().filter(|x| x.mod_floor(&four) == BigInt::from(1)).count();
    Ok(if ones % 2 == 0 { [0, 2, 3, 1] } else { [0, 3, 1, 2] })
}
