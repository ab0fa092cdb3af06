//! Coincidence isometries and their coincidence site lattices.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{IntMatrix, RatMatrix};
use crate::lattice::{Lattice, RatVector};
use crate::quat::Quaternion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsometryKind {
    Rotation,
    Rotoreflection,
}

/// The quaternions an isometry was built from.
///
/// Together with [`IsometryKind`] this determines the matrix: in three
/// dimensions `Cayley(q)` is `R_q` or `−R_q`, in four `Pair(q, p)` is
/// `R_{q,p}` or `T_{q,p} = R_{q,p}·T_{1,1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parametrization {
    Cayley(Quaternion),
    Pair(Quaternion, Quaternion),
}

/// An orthogonal map with rational matrix, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Isometry {
    matrix: RatMatrix,
    kind: IsometryKind,
    source: Option<Parametrization>,
}

impl Isometry {
    /// Checks `MᵀM = I` exactly.
    pub fn new(matrix: RatMatrix) -> Result<Isometry> {
        if !matrix.is_square() {
            return Err(Error::NotSquare { rows: matrix.rows(), cols: matrix.cols() });
        }
        let n = matrix.numer();
        let d2 = matrix.denom() * matrix.denom();
        let gram = n.transpose().mul(n);
        if gram != IntMatrix::identity(matrix.rows()).scale(&d2) {
            return Err(Error::NotOrthogonal);
        }
        let kind = if matrix.det()?.is_positive() { IsometryKind::Rotation } else { IsometryKind::Rotoreflection };
        Ok(Isometry { matrix, kind, source: None })
    }

    pub(crate) fn with_source(mut self, source: Parametrization) -> Isometry {
        self.source = Some(source);
        self
    }

    pub fn identity(d: usize) -> Isometry {
        Isometry { matrix: RatMatrix::identity(d), kind: IsometryKind::Rotation, source: None }
    }

    /// Planar rotation by the argument of `(x + iy)²`, i.e. with
    /// `cos = (x²−y²)/n` and `sin = 2xy/n` for `n = x²+y²`.
    pub fn planar_rotation(x: i64, y: i64) -> Result<Isometry> {
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        let n = &x * &x + &y * &y;
        if n.is_zero() {
            return Err(Error::Singular);
        }
        let c = &x * &x - &y * &y;
        let s = BigInt::from(2) * &x * &y;
        let numer = IntMatrix::new(2, 2, alloc::vec![c.clone(), -&s, s, c]);
        Isometry::new(RatMatrix::new(numer, n))
    }

    /// The reflection `x ↦ x − 2⟨x,n⟩n/⟨n,n⟩` in the hyperplane orthogonal to `normal`.
    pub fn reflection(normal: &[BigRational]) -> Result<Isometry> {
        let d = normal.len();
        let nn: BigRational = normal.iter().map(|x| x * x).sum();
        if nn.is_zero() {
            return Err(Error::Singular);
        }
        let two = BigRational::from_integer(2.into());
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let delta = if i == j { BigRational::one() } else { BigRational::zero() };
                entries.push(delta - &two * &normal[i] * &normal[j] / &nn);
            }
        }
        Isometry::new(RatMatrix::from_rationals(d, d, &entries))
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn kind(&self) -> IsometryKind {
        self.kind
    }

    pub fn source(&self) -> Option<&Parametrization> {
        self.source.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == RatMatrix::identity(self.dim())
    }

    /// `R⁻¹ = Rᵀ`, carrying the parametrization along.
    pub fn inverse(&self) -> Isometry {
        let source = self.source.as_ref().map(|s| match (s, self.kind) {
            (Parametrization::Cayley(q), _) => Parametrization::Cayley(q.conj()),
            (Parametrization::Pair(q, p), IsometryKind::Rotation) => Parametrization::Pair(q.conj(), p.conj()),
            (Parametrization::Pair(q, p), IsometryKind::Rotoreflection) => Parametrization::Pair(p.conj(), q.conj()),
        });
        Isometry { matrix: self.matrix.transpose(), kind: self.kind, source }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Result<Isometry> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        let kind = if self.kind == other.kind { IsometryKind::Rotation } else { IsometryKind::Rotoreflection };
        let both_rotations = self.kind == IsometryKind::Rotation && other.kind == IsometryKind::Rotation;
        let source = match (&self.source, &other.source) {
            (Some(Parametrization::Cayley(a)), Some(Parametrization::Cayley(b))) if both_rotations => {
                Some(Parametrization::Cayley(a.mul(b).primitive_part()?))
            }
            (Some(Parametrization::Pair(q1, p1)), Some(Parametrization::Pair(q2, p2))) if both_rotations => Some(
                Parametrization::Pair(q1.mul(q2).primitive_part()?, p1.mul(p2).primitive_part()?),
            ),
            _ => None,
        };
        Ok(Isometry { matrix: self.matrix.mul(&other.matrix), kind, source })
    }

    /// `R·x`.
    pub fn apply(&self, x: &[BigRational]) -> RatVector {
        self.matrix.mul_vec(x)
    }

    /// `−R`, which flips the kind in odd dimension.
    pub fn negated(&self) -> Isometry {
        let kind = match (self.dim() % 2, self.kind) {
            (0, k) => k,
            (_, IsometryKind::Rotation) => IsometryKind::Rotoreflection,
            (_, IsometryKind::Rotoreflection) => IsometryKind::Rotation,
        };
        let source = match &self.source {
            Some(Parametrization::Cayley(q)) if self.dim() == 3 => Some(Parametrization::Cayley(q.clone())),
            _ => None,
        };
        Isometry { matrix: self.matrix.neg(), kind, source }
    }

    /// `R·Γ`.
    pub fn image(&self, lattice: &Lattice) -> Result<Lattice> {
        self.check_dim(lattice)?;
        lattice.transform(&self.matrix)
    }

    fn check_dim(&self, lattice: &Lattice) -> Result<()> {
        if lattice.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: lattice.dim(), found: self.dim() });
        }
        Ok(())
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// Whether `Γ ∩ RΓ` has full rank. Rational isometries always qualify.
pub fn is_coincidence(lattice: &Lattice, r: &Isometry) -> Result<bool> {
    r.check_dim(lattice)?;
    Ok(true)
}

/// `Γ(R) = Γ ∩ RΓ`.
pub fn csl_lattice(lattice: &Lattice, r: &Isometry) -> Result<Lattice> {
    if r.is_identity() {
        return Ok(lattice.clone());
    }
    lattice.intersect(&r.image(lattice)?)
}

/// `Σ_Γ(R) = [Γ : Γ(R)]`.
pub fn sigma(lattice: &Lattice, r: &Isometry) -> Result<BigInt> {
    let csl = csl_lattice(lattice, r)?;
    Ok(lattice.volume_ratio(&csl))
}

/// Least `k ≥ 1` with `k·R` integral in the coordinates of `Γ`.
pub fn denominator(lattice: &Lattice, r: &Isometry) -> Result<BigInt> {
    r.check_dim(lattice)?;
    // a point with coordinates c maps to coordinates c·(B Rᵀ B⁻¹)
    let b = lattice.basis();
    let m = b.mul(&r.matrix().transpose()).mul(&b.inverse()?);
    Ok(m.denom().clone())
}

/// `Σ` of each lattice in `lattices` agree; convenience for comparisons
/// across a family such as the three cubic lattices.
pub fn common_sigma(lattices: &[Lattice], r: &Isometry) -> Result<Option<BigInt>> {
    let mut out: Option<BigInt> = None;
    for l in lattices {
        let s = sigma(l, r)?;
        match &out {
            Some(prev) if *prev != s => return Ok(None),
            _ => out = Some(s),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
