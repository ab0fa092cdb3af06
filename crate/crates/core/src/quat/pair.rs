use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{odd_part, Quaternion};
use crate::csl::{Isometry, Parametrization};
use crate::error::{Error, Result};
use crate::exact::{IntMatrix, RatMatrix};

/// Primitive `q, p` with `|q|²|p|²` a perfect square.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissiblePair {
    q: Quaternion,
    p: Quaternion,
    root_norm: BigInt,
}

impl AdmissiblePair {
    pub fn new(q: Quaternion, p: Quaternion) -> Result<AdmissiblePair> {
        if q.is_zero() || p.is_zero() {
            return Err(Error::ZeroQuaternion);
        }
        if !q.is_primitive() || !p.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        let prod = q.norm() * p.norm();
        let root = prod.sqrt();
        if &root * &root != prod {
            return Err(Error::NotAdmissible(prod.to_string()));
        }
        Ok(AdmissiblePair { q, p, root_norm: root })
    }

    pub fn q(&self) -> &Quaternion {
        &self.q
    }

    pub fn p(&self) -> &Quaternion {
        &self.p
    }

    /// `|q p̄| = |q||p|`.
    pub fn root_norm(&self) -> &BigInt {
        &self.root_norm
    }

    /// `⟨q, p⟩`, an integer for Lipschitz quaternions.
    pub fn inner(&self) -> BigInt {
        self.q.dot(&self.p).to_integer()
    }
}

fn pair_matrix(pair: &AdmissiblePair, conjugate_input: bool) -> RatMatrix {
    let pc = pair.p.conj();
    let mut data: Vec<BigInt> = alloc::vec![BigInt::zero(); 16];
    for a in 0..4 {
        let mut e = Quaternion::unit(a);
        if conjugate_input {
            e = e.conj();
        }
        let image = pair.q.mul(&e).mul(&pc);
        let c = image.lipschitz_components().expect("Lipschitz products stay Lipschitz");
        for (r, x) in c.into_iter().enumerate() {
            data[r * 4 + a] = x;
        }
    }
    RatMatrix::new(IntMatrix::new(4, 4, data), pair.root_norm.clone())
}

/// `R_{q,p}(x) = q x p̄ / |q p|` on `ℍ ≅ ℝ⁴` with basis `(1, i, j, k)`.
pub fn so4_from_pair(pair: &AdmissiblePair) -> Result<Isometry> {
    let m = pair_matrix(pair, false);
    Ok(Isometry::new(m)?.with_source(Parametrization::Pair(pair.q.clone(), pair.p.clone())))
}

/// `T_{q,p}(x) = q x̄ p̄ / |q p|`.
pub fn rotoreflection_from_pair(pair: &AdmissiblePair) -> Result<Isometry> {
    let m = pair_matrix(pair, true);
    Ok(Isometry::new(m)?.with_source(Parametrization::Pair(pair.q.clone(), pair.p.clone())))
}

/// `lcm` of the odd parts of `|q|²` and `|p|²`.
pub fn sigma_d4(pair: &AdmissiblePair) -> BigInt {
    let a = odd_part(&pair.q.norm()).expect("primitive quaternions are nonzero");
    let b = odd_part(&pair.p.norm()).expect("primitive quaternions are nonzero");
    a.lcm(&b)
}

/// `lcm(Σ_{D₄}, den R_{q,p})`.
pub fn sigma_z4(pair: &AdmissiblePair) -> BigInt {
    sigma_d4(pair).lcm(pair_matrix(pair, false).denom())
}

/// Whether `Σ_{ℤ⁴}(R_{q,p}) = Σ_{D₄}(R_{q,p})` is predicted by the norm
/// classes of `q, p` modulo 4 and the parity of `⟨q, p⟩`.
pub fn prop64_condition(pair: &AdmissiblePair) -> bool {
    let four = BigInt::from(4);
    let nq = pair.q.norm().mod_floor(&four);
    let np = pair.p.norm().mod_floor(&four);
    let inner = pair.inner();
    if nq.is_odd() && np.is_odd() {
        return true;
    }
    if nq == BigInt::from(2) && np == BigInt::from(2) {
        return inner.is_even();
    }
    if nq.is_zero() && np.is_zero() {
        return inner.mod_floor(&four).is_zero();
    }
    false
}

impl AdmissiblePair {
    /// `(e, e)`.
    pub fn identity() -> AdmissiblePair {
        AdmissiblePair { q: Quaternion::one(), p: Quaternion::one(), root_norm: BigInt::one() }
    }
}
