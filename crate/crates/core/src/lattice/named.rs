//! The lattices used throughout: cubic lattices in ℝ³ ≅ Im ℍ and the two
//! hypercubic lattices in ℝ⁴ ≅ ℍ, in quaternion coordinates `(1, i, j, k)`.

use super::Lattice;

fn build(rows: &[[i64; 3]], denom: i64) -> Lattice {
    Lattice::from_scaled_rows(rows, denom).expect("named lattice basis has full rank")
}

/// ℤ².
pub fn square() -> Lattice {
    Lattice::integer(2)
}

/// Primitive cubic Γ_P = ℤ³ = Im 𝕃.
pub fn cubic_primitive() -> Lattice {
    Lattice::integer(3)
}

/// Body-centred cubic Γ_B = Γ_P ∪ ((½,½,½) + Γ_P) = Im 𝕁.
pub fn cubic_body() -> Lattice {
    build(&[[1, 1, 1], [2, 0, 0], [0, 2, 0]], 2)
}

/// Face-centred cubic Γ_F = Γ_B*.
pub fn cubic_face() -> Lattice {
    cubic_body().dual()
}

/// Im 𝕃, the imaginary Lipschitz quaternions (= Γ_P).
pub fn im_lipschitz() -> Lattice {
    cubic_primitive()
}

/// Im 𝕁, the imaginary parts of Hurwitz quaternions (= Γ_B).
pub fn im_hurwitz() -> Lattice {
    cubic_body()
}

/// 2·Im 𝕁, index 4 in Im 𝕃.
pub fn twice_im_hurwitz() -> Lattice {
    build(&[[1, 1, 1], [2, 0, 0], [0, 2, 0]], 1)
}

/// Lipschitz quaternions 𝕃 ≅ ℤ⁴.
pub fn lipschitz() -> Lattice {
    Lattice::integer(4)
}

/// Hurwitz quaternions 𝕁, the centred hypercubic lattice; basis {(½,½,½,½), i, j, k}.
pub fn hurwitz() -> Lattice {
    Lattice::from_scaled_rows(&[[1, 1, 1, 1], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]], 2)
        .expect("named lattice basis has full rank")
}
