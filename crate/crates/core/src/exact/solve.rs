//! Integer linear systems.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::normal_form::hnf;
use super::IntMatrix;

/// Finds an integer `x` with `a · x = b`, if one exists.
///
/// The solution is canonical: it comes from forward substitution against the
/// Hermite form of `aᵀ`, so equal inputs always give equal outputs.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "right-hand side has the wrong length");
    let herm = hnf(&a.transpose());
    let y = solve_echelon(&herm.h, &herm.pivots, b)?;
    // x = Uᵀ · y
    Some(herm.u.left_mul_vec(&y))
}

/// Solves `y · h = target` for an integer row vector `y`, where `h` is in row
/// Hermite form with the given pivot columns.
pub(crate) fn solve_echelon(h: &IntMatrix, pivots: &[usize], target: &[BigInt]) -> Option<Vec<BigInt>> {
    debug_assert_eq!(h.cols(), target.len());
    let mut residual = target.to_vec();
    let mut y = vec![BigInt::zero(); h.rows()];
    let mut next_col = 0;
    for (r, &pc) in pivots.iter().enumerate() {
        if residual[next_col..pc].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let (q, rem) = residual[pc].div_rem(h.get(r, pc));
        if !rem.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for c in pc..h.cols() {
                let hv = h.get(r, c);
                if !hv.is_zero() {
                    residual[c] -= &q * hv;
                }
            }
        }
        y[r] = q;
        next_col = pc + 1;
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(y)
}

/// Basis (as rows) of the lattice of integer row vectors `w` with `w · m = 0`.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let herm = hnf(m);
    let rows: Vec<BigInt> = (herm.rank..m.rows()).flat_map(|i| herm.u.row(i).to_vec()).collect();
    IntMatrix::new(m.rows() - herm.rank, m.rows(), rows)
}
