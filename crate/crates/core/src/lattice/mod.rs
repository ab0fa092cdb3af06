//! Full-rank lattices with exact rational bases.

mod quotient;
pub mod named;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{hnf_basis, left_kernel, solve_echelon, solve_integer, IntMatrix, RatMatrix};

pub use quotient::{CosetLabel, QuotientStructure};

/// A rational point of ℝᵈ.
pub type RatVector = Vec<BigRational>;

/// A lattice of rank and dimension `d`, stored in scaled Hermite normal form.
///
/// The basis is `numer / denom` with `numer` in row Hermite form and `denom`
/// the least positive integer clearing all coordinates of the lattice, so
/// derived `Eq`/`Hash` are equality of point sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice {
    basis: RatMatrix,
}

impl Lattice {
    /// The ℤ-span of the rows of `generators`, which must have rank `cols`.
    ///
    /// More rows than columns are accepted; the result is the lattice they
    /// generate.
    pub fn new(generators: &RatMatrix) -> Result<Lattice> {
        let d = generators.cols();
        let (h, rank) = hnf_basis(generators.numer());
        if rank != d {
            return Err(Error::RankDeficient { rank, dim: d });
        }
        let top = IntMatrix::new(d, d, h.data()[..d * d].to_vec());
        Ok(Lattice { basis: RatMatrix::new(top, generators.denom().clone()) })
    }

    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Lattice> {
        Lattice::new(&RatMatrix::from_int(IntMatrix::from_rows(rows)))
    }

    /// Rows given as `numer / denom`.
    pub fn from_scaled_rows<R: AsRef<[i64]>>(rows: &[R], denom: i64) -> Result<Lattice> {
        Lattice::new(&RatMatrix::new(IntMatrix::from_rows(rows), BigInt::from(denom)))
    }

    /// ℤᵈ.
    pub fn integer(d: usize) -> Lattice {
        Lattice { basis: RatMatrix::identity(d) }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical basis; rows are basis vectors.
    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<RatVector> {
        self.basis.row_vecs()
    }

    /// Volume of a fundamental domain, `|det basis|`.
    pub fn volume(&self) -> BigRational {
        let n = self.basis.numer();
        let prod: BigInt = (0..self.dim()).map(|i| n.get(i, i).clone()).product();
        BigRational::new(prod, num_traits::pow(self.basis.denom().clone(), self.dim()))
    }

    pub fn scaled(&self, k: &BigRational) -> Result<Lattice> {
        if k.is_zero() {
            return Err(Error::RankDeficient { rank: 0, dim: self.dim() });
        }
        Lattice::new(&self.basis.scale(k))
    }

    /// Image under the linear map `x ↦ m·x`.
    pub fn transform(&self, m: &RatMatrix) -> Result<Lattice> {
        self.check_dim(m.cols())?;
        Lattice::new(&self.basis.mul(&m.transpose()))
    }

    /// Integer coordinates of `p` in the canonical basis, if `p` is a lattice point.
    pub fn coordinates(&self, p: &[BigRational]) -> Option<Vec<BigInt>> {
        if p.len() != self.dim() {
            return None;
        }
        let denom = self.basis.denom();
        let mut target = Vec::with_capacity(p.len());
        for x in p {
            let scaled = x * denom;
            if !scaled.is_integer() {
                return None;
            }
            target.push(scaled.to_integer());
        }
        let pivots: Vec<usize> = (0..self.dim()).collect();
        solve_echelon(self.basis.numer(), &pivots, &target)
    }

    pub fn contains(&self, p: &[BigRational]) -> bool {
        self.coordinates(p).is_some()
    }

    /// The lattice point with the given coordinates.
    pub fn point(&self, coords: &[BigInt]) -> RatVector {
        let v: Vec<BigRational> = coords.iter().map(|c| BigRational::from(c.clone())).collect();
        self.basis.left_mul_vec(&v)
    }

    /// Integer matrix whose rows are the coordinates of `other`'s basis in `self`.
    pub fn coordinates_of(&self, other: &Lattice) -> Option<IntMatrix> {
        let d = self.dim();
        let mut data = Vec::with_capacity(d * d);
        for row in other.basis_vectors() {
            data.extend(self.coordinates(&row)?);
        }
        Some(IntMatrix::new(d, d, data))
    }

    pub fn is_sublattice_of(&self, parent: &Lattice) -> Result<bool> {
        parent.check_dim(self.dim())?;
        Ok(self.basis_vectors().iter().all(|v| parent.contains(v)))
    }

    /// `[self : sub]`.
    pub fn index_of(&self, sub: &Lattice) -> Result<BigInt> {
        if !sub.is_sublattice_of(self)? {
            return Err(Error::NotSublattice);
        }
        Ok(self.volume_ratio(sub))
    }

    /// `vol(sub) / vol(self)`, assumed integral.
    pub(crate) fn volume_ratio(&self, sub: &Lattice) -> BigInt {
        let r = sub.volume() / self.volume();
        debug_assert!(r.is_integer(), "volume ratio of a sublattice must be integral");
        r.to_integer()
    }

    /// Lattices with rational bases are always commensurate; only the
    /// dimensions need to agree.
    pub fn is_commensurate_with(&self, other: &Lattice) -> Result<bool> {
        self.check_dim(other.dim())?;
        Ok(true)
    }

    /// `self ∩ other`, from the integer relations `y·B₁ = z·B₂`.
    pub fn intersect(&self, other: &Lattice) -> Result<Lattice> {
        self.check_dim(other.dim())?;
        if self == other {
            return Ok(self.clone());
        }
        let d = self.dim();
        let l = self.basis.denom().lcm(other.basis.denom());
        let a = self.basis.numer().scale(&(&l / self.basis.denom()));
        let b = other.basis.numer().scale(&-(&l / other.basis.denom()));
        let kernel = left_kernel(&a.stack(&b));
        if kernel.rows() != d {
            return Err(Error::Incommensurate);
        }
        let mut ys = Vec::with_capacity(d * d);
        for i in 0..d {
            ys.extend_from_slice(&kernel.row(i)[..d]);
        }
        let gens = IntMatrix::new(d, d, ys).mul(self.basis.numer());
        Lattice::new(&RatMatrix::new(gens, self.basis.denom().clone())).map_err(|_| Error::Incommensurate)
    }

    /// `self + other`.
    pub fn sum(&self, other: &Lattice) -> Result<Lattice> {
        self.check_dim(other.dim())?;
        Lattice::new(&self.basis.stack(&other.basis))
    }

    /// `{x : ⟨x, y⟩ ∈ ℤ for all y ∈ self}`.
    pub fn dual(&self) -> Lattice {
        let inv = self.basis.inverse().expect("lattice bases are nonsingular");
        Lattice::new(&inv.transpose()).expect("dual of a full-rank lattice has full rank")
    }

    /// Canonical representative of `p + self`: the unique point of the coset
    /// whose `i`-th coordinate lies in `[0, bᵢᵢ)` for the triangular basis.
    pub fn reduce(&self, p: &[BigRational]) -> RatVector {
        let mut x = p.to_vec();
        let rows = self.basis_vectors();
        for (c, row) in rows.iter().enumerate() {
            let q = (&x[c] / &row[c]).floor();
            if q.is_zero() {
                continue;
            }
            for (xi, ri) in x.iter_mut().zip(row).skip(c) {
                *xi -= &q * ri;
            }
        }
        x
    }

    /// Builds the quotient `self / sub` with its coset labels.
    pub fn quotient(&self, sub: &Lattice) -> Result<QuotientStructure> {
        QuotientStructure::new(self, sub)
    }

    fn check_dim(&self, d: usize) -> Result<()> {
        if d != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: d });
        }
        Ok(())
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.basis)
    }
}

/// Some point of `(c + coset_lattice) ∩ target`, or `None` if they are disjoint.
///
/// The point is the canonical representative modulo `coset_lattice ∩ target`,
/// so when the intersection is nonempty it equals `x + (coset_lattice ∩ target)`.
pub fn affine_intersect(c: &[BigRational], coset_lattice: &Lattice, target: &Lattice) -> Result<Option<RatVector>> {
    let common = coset_lattice.intersect(target)?;
    Ok(affine_point(c, coset_lattice, target)?.map(|x| common.reduce(&x)))
}

/// A (deterministic, non-canonical) point of `(c + coset_lattice) ∩ target`.
pub(crate) fn affine_point(c: &[BigRational], coset_lattice: &Lattice, target: &Lattice) -> Result<Option<RatVector>> {
    coset_lattice.check_dim(target.dim())?;
    coset_lattice.check_dim(c.len())?;
    if c.iter().all(Zero::is_zero) {
        return Ok(Some(c.to_vec()));
    }
    if target.contains(c) {
        return Ok(Some(c.to_vec()));
    }
    let d = c.len();
    let l = c
        .iter()
        .fold(coset_lattice.basis.denom().lcm(target.basis.denom()), |acc, x| acc.lcm(x.denom()));
    let a = coset_lattice.basis.numer().scale(&(&l / coset_lattice.basis.denom()));
    let b = target.basis.numer().scale(&-(&l / target.basis.denom()));
    let m = a.stack(&b);
    // y·B₂ − z·B_p = −c
    let rhs: Vec<BigInt> = c.iter().map(|x| -(x * &l).to_integer()).collect();
    let Some(w) = solve_integer(&m.transpose(), &rhs) else {
        return Ok(None);
    };
    let z: Vec<BigInt> = w[d..].to_vec();
    Ok(Some(target.point(&z)))
}

/// Integer coordinates as a rational point.
pub fn rat_vec(v: &[i64]) -> RatVector {
    v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

#[cfg(test)]
pub(crate) fn is_zero_vec(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
pub(crate) fn sub_vec(a: &[BigRational], b: &[BigRational]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[cfg(test)]
mod tests;
