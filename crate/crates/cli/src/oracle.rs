//! Point-enumeration oracle for the relation σ_R.
//!
//! The production path computes σ_R from lattice sums and intersections.
//! This module instead colors actual points `x ∈ Γ₁(R⁻¹)` and their images
//! `Rx` and records every pair of colors seen.

use std::collections::BTreeSet;

use csl_core::coloring::Coloring;
use csl_core::csl::Isometry;
use csl_core::exact::hnf_basis;
use csl_core::{BigInt, CosetLabel, Lattice};
use num_traits::ToPrimitive;

use crate::CliError;

pub type ColorPairs = BTreeSet<(CosetLabel, CosetLabel)>;

/// Side lengths of a coordinate box of `Γ₁(R⁻¹)` meeting every class of
/// `L = Γ₂ ∩ R⁻¹Γ₂`.
///
/// `(color x, color Rx)` is constant on classes of `L`, and for `L` in
/// triangular form relative to `Γ₁(R⁻¹)` the box `∏ [0, hᵢᵢ)` contains one
/// point of each class, so enumerating it observes all of σ_R.
pub fn period_box(c: &Coloring, r: &Isometry) -> Result<(Lattice, Vec<i64>), CliError> {
    let parent = c.parent();
    let csl_inv = parent.intersect(&r.inverse().image(parent)?)?;
    let period = c.sub().intersect(&r.inverse().image(c.sub())?)?;
    let coords = csl_inv.coordinates_of(&period).ok_or(csl_core::Error::NotSublattice)?;
    let (h, _) = hnf_basis(&coords);
    let sides = (0..h.rows())
        .map(|i| h.get(i, i).to_i64().ok_or_else(|| CliError::Usage("period box too large".into())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((csl_inv, sides))
}

/// Colors of `x` and `Rx` for every `x` with coordinates in `∏ [lo, hi)`.
pub fn observed_pairs(
    c: &Coloring,
    r: &Isometry,
    basis: &Lattice,
    lo: &[i64],
    hi: &[i64],
) -> Result<ColorPairs, CliError> {
    let d = basis.dim();
    let mut out = BTreeSet::new();
    if (0..d).any(|i| lo[i] >= hi[i]) {
        return Ok(out);
    }
    let mut coords = lo.to_vec();
    loop {
        let big: Vec<BigInt> = coords.iter().map(|&v| v.into()).collect();
        let x = basis.point(&big);
        out.insert((c.color_of(&x)?, c.color_of(&r.apply(&x))?));
        let mut i = 0;
        while i < d {
            coords[i] += 1;
            if coords[i] < hi[i] {
                break;
            }
            coords[i] = lo[i];
            i += 1;
        }
        if i == d {
            return Ok(out);
        }
    }
}

/// σ_R by enumerating one period of `Γ₁(R⁻¹)`.
pub fn sigma_relation(c: &Coloring, r: &Isometry) -> Result<ColorPairs, CliError> {
    let (basis, sides) = period_box(c, r)?;
    observed_pairs(c, r, &basis, &vec![0; sides.len()], &sides)
}
