//! Quaternion parametrizations of rational rotations in three and four
//! dimensions.
//!
//! Hurwitz quaternions (all-integer or all-half-integer components) are
//! stored as doubled integers so that ring arithmetic never leaves ℤ.

mod cubic;
mod enumerate;
mod pair;

use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use cubic::{cayley_so3, example2_class, sigma_so3, ColorIndexPermutation};
pub use enumerate::{admissible_pairs, primitive_quaternions, primitive_quaternions_signed};
pub use pair::{prop64_condition, rotoreflection_from_pair, sigma_d4, sigma_z4, so4_from_pair, AdmissiblePair};

/// A Hurwitz quaternion `q₀ + q₁i + q₂j + q₃k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quaternion {
    doubled: [BigInt; 4],
}

impl Quaternion {
    /// Lipschitz quaternion with integer components.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Quaternion {
        Quaternion::from_components([a.into(), b.into(), c.into(), d.into()])
    }

    pub fn from_components(c: [BigInt; 4]) -> Quaternion {
        Quaternion { doubled: c.map(|x| x * 2) }
    }

    /// From `(2q₀, 2q₁, 2q₂, 2q₃)`; the entries must be all even or all odd.
    pub fn from_doubled(d: [BigInt; 4]) -> Result<Quaternion> {
        let odd = d.iter().filter(|x| x.is_odd()).count();
        if odd != 0 && odd != 4 {
            return Err(Error::NotHurwitz);
        }
        Ok(Quaternion { doubled: d })
    }

    /// `(a/2, b/2, c/2, d/2)`.
    pub fn halves(a: i64, b: i64, c: i64, d: i64) -> Result<Quaternion> {
        Quaternion::from_doubled([a.into(), b.into(), c.into(), d.into()])
    }

    pub fn one() -> Quaternion {
        Quaternion::new(1, 0, 0, 0)
    }

    /// The basis unit `e, i, j, k` for `index = 0, 1, 2, 3`.
    pub fn unit(index: usize) -> Quaternion {
        let mut c = [0i64; 4];
        c[index] = 1;
        Quaternion::new(c[0], c[1], c[2], c[3])
    }

    pub fn doubled(&self) -> &[BigInt; 4] {
        &self.doubled
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.iter().all(Zero::is_zero)
    }

    pub fn is_lipschitz(&self) -> bool {
        self.doubled.iter().all(|x| x.is_even())
    }

    /// Integer components, if the quaternion is Lipschitz.
    pub fn lipschitz_components(&self) -> Option<[BigInt; 4]> {
        self.is_lipschitz().then(|| self.doubled.clone().map(|x| x / 2))
    }

    pub fn components(&self) -> [BigRational; 4] {
        self.doubled.clone().map(|x| BigRational::new(x, BigInt::from(2)))
    }

    pub fn real(&self) -> BigRational {
        BigRational::new(self.doubled[0].clone(), BigInt::from(2))
    }

    pub fn imaginary(&self) -> [BigRational; 3] {
        let c = self.components();
        [c[1].clone(), c[2].clone(), c[3].clone()]
    }

    pub fn conj(&self) -> Quaternion {
        let [a, b, c, d] = &self.doubled;
        Quaternion { doubled: [a.clone(), -b, -c, -d] }
    }

    pub fn neg(&self) -> Quaternion {
        Quaternion { doubled: self.doubled.clone().map(|x| -x) }
    }

    pub fn add(&self, other: &Quaternion) -> Quaternion {
        Quaternion { doubled: core::array::from_fn(|i| &self.doubled[i] + &other.doubled[i]) }
    }

    pub fn sub(&self, other: &Quaternion) -> Quaternion {
        Quaternion { doubled: core::array::from_fn(|i| &self.doubled[i] - &other.doubled[i]) }
    }

    pub fn scale(&self, k: &BigInt) -> Quaternion {
        Quaternion { doubled: self.doubled.clone().map(|x| x * k) }
    }

    /// Hamilton product `self · other`.
    pub fn mul(&self, other: &Quaternion) -> Quaternion {
        let p = hamilton(&self.doubled, &other.doubled);
        // (2a)(2b) = 4ab and 2ab is integral for Hurwitz a, b
        Quaternion { doubled: p.map(|x| x / 2) }
    }

    /// `|q|² = q q̄`, an integer for every Hurwitz quaternion.
    pub fn norm(&self) -> BigInt {
        let s: BigInt = self.doubled.iter().map(|x| x * x).sum();
        s / 4
    }

    /// Euclidean inner product `⟨q, p⟩` of the component vectors.
    pub fn dot(&self, other: &Quaternion) -> BigRational {
        let s: BigInt = self.doubled.iter().zip(&other.doubled).map(|(a, b)| a * b).sum();
        BigRational::new(s, BigInt::from(4))
    }

    /// gcd of the components is one.
    pub fn is_primitive(&self) -> bool {
        match self.lipschitz_components() {
            Some(c) => c.iter().fold(BigInt::zero(), |g, x| g.gcd(x)).is_one(),
            None => false,
        }
    }

    /// The primitive Lipschitz quaternion on the same ray through the origin.
    ///
    /// Half-integer input is doubled first; the sign is preserved.
    pub fn primitive_part(&self) -> Result<Quaternion> {
        if self.is_zero() {
            return Err(Error::ZeroQuaternion);
        }
        let g = self.doubled.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        Ok(Quaternion::from_components(self.doubled.clone().map(|x| x / &g)))
    }

    /// Sign convention for "up to sign" listings: first nonzero component positive.
    pub fn sign_normalized(&self) -> Quaternion {
        match self.doubled.iter().find(|x| !x.is_zero()) {
            Some(x) if x.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }
}

pub(crate) fn hamilton(q: &[BigInt; 4], p: &[BigInt; 4]) -> [BigInt; 4] {
    let [q0, q1, q2, q3] = q;
    let [p0, p1, p2, p3] = p;
    [
        q0 * p0 - q1 * p1 - q2 * p2 - q3 * p3,
        q0 * p1 + q1 * p0 + q2 * p3 - q3 * p2,
        q0 * p2 - q1 * p3 + q2 * p0 + q3 * p1,
        q0 * p3 + q1 * p2 - q2 * p1 + q3 * p0,
    ]
}

/// Largest odd divisor of `n ≥ 1`.
pub fn odd_part(n: &BigInt) -> Result<BigInt> {
    if n.is_zero() {
        return Err(Error::OddPartOfZero);
    }
    let mut n = n.abs();
    while n.is_even() {
        n >>= 1;
    }
    Ok(n)
}

/// Membership in the two-sided ideal `(1+i)ʳ𝕁 = {q ∈ 𝕁 : 2ʳ | |q|²}`.
pub fn ideal_membership(q: &Quaternion, r: u32) -> bool {
    (q.norm() % (BigInt::one() << r)).is_zero()
}

/// A quaternion with arbitrary rational components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalQuaternion(pub [BigRational; 4]);

impl RationalQuaternion {
    pub fn conj(&self) -> RationalQuaternion {
        let [a, b, c, d] = &self.0;
        RationalQuaternion([a.clone(), -b, -c, -d])
    }

    pub fn mul(&self, other: &RationalQuaternion) -> RationalQuaternion {
        let [q0, q1, q2, q3] = &self.0;
        let [p0, p1, p2, p3] = &other.0;
        RationalQuaternion([
            q0 * p0 - q1 * p1 - q2 * p2 - q3 * p3,
            q0 * p1 + q1 * p0 + q2 * p3 - q3 * p2,
            q0 * p2 - q1 * p3 + q2 * p0 + q3 * p1,
            q0 * p3 + q1 * p2 - q2 * p1 + q3 * p0,
        ])
    }

    pub fn norm(&self) -> BigRational {
        self.0.iter().map(|x| x * x).sum()
    }
}

impl From<&Quaternion> for RationalQuaternion {
    fn from(q: &Quaternion) -> Self {
        RationalQuaternion(q.components())
    }
}

impl fmt::Display for Quaternion {
    /// `(a,b,c,d)` for Lipschitz quaternions, `(a/2,b/2,c/2,d/2)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let lipschitz = self.is_lipschitz();
        for (i, x) in self.doubled.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if lipschitz {
                write!(f, "{}", x / 2)?;
            } else {
                write!(f, "{x}/2")?;
            }
        }
        write!(f, ")")
    }
}

impl FromStr for Quaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Quaternion> {
        let bad = || Error::Parse(s.to_string());
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let mut doubled: [BigInt; 4] = Default::default();
        let mut n = 0;
        for part in inner.split(',') {
            if n == 4 {
                return Err(bad());
            }
            let part = part.trim();
            doubled[n] = match part.split_once('/') {
                Some((num, den)) if den.trim() == "2" => num.trim().parse::<BigInt>().map_err(|_| bad())?,
                Some(_) => return Err(bad()),
                None => part.parse::<BigInt>().map_err(|_| bad())? * 2,
            };
            n += 1;
        }
        if n != 4 {
            return Err(bad());
        }
        Quaternion::from_doubled(doubled)
    }
}
