//! Exact integer and rational linear algebra.
//!
//! Matrices are dense and row-major. Nothing in this module touches floating
//! point; intermediate growth is absorbed by [`BigInt`].

mod normal_form;
mod scalar;
mod solve;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use normal_form::{hnf, hnf_basis, snf, Hermite, Smith};
pub use solve::{left_kernel, solve_integer};
pub(crate) use solve::solve_echelon;

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data has the wrong length");
        IntMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let n = entries.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Builds a matrix from rows of machine integers.
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix::new(rows.len(), cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[BigInt] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix::new(self.cols, self.rows, data)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "incompatible shapes");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix, `y · self`.
    pub fn left_mul_vec(&self, y: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(y.len(), self.rows, "incompatible shapes");
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, yi) in y.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let m = self.get(i, j);
                if !m.is_zero() {
                    *o += yi * m;
                }
            }
        }
        out
    }

    /// Matrix times column vector, `self · x`.
    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols, "incompatible shapes");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "incompatible shapes");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        IntMatrix::new(self.rows + other.rows, self.cols, data)
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        IntMatrix::new(self.rows, self.cols, self.data.iter().map(|x| x * k).collect())
    }

    /// gcd of all entries (zero for the zero matrix).
    pub fn content(&self) -> BigInt {
        self.data.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.data.clone();
        let mut sign = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        let d = a[n * n - 1].clone();
        Ok(if sign { -d } else { d })
    }

    /// |det| = 1.
    pub fn is_unimodular(&self) -> bool {
        self.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

/// Rational matrix `numer / denom` with a single common denominator.
///
/// Always canonical: `denom ≥ 1` and `gcd(denom, content(numer)) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatMatrix {
    numer: IntMatrix,
    denom: BigInt,
}

impl RatMatrix {
    /// Panics if `denom` is zero.
    pub fn new(numer: IntMatrix, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        let mut g = numer.content().gcd(&denom);
        if denom.is_negative() {
            g = -g;
        }
        if g.is_one() {
            return RatMatrix { numer, denom };
        }
        let data = numer.data.iter().map(|x| x / &g).collect();
        RatMatrix { numer: IntMatrix::new(numer.rows, numer.cols, data), denom: denom / g }
    }

    pub fn from_int(numer: IntMatrix) -> Self {
        RatMatrix { numer, denom: BigInt::one() }
    }

    pub fn identity(n: usize) -> Self {
        RatMatrix::from_int(IntMatrix::identity(n))
    }

    /// Builds a matrix from rational entries (row-major).
    pub fn from_rationals(rows: usize, cols: usize, entries: &[BigRational]) -> Self {
        assert_eq!(rows * cols, entries.len(), "matrix data has the wrong length");
        let denom = entries.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let data = entries.iter().map(|x| x.numer() * (&denom / x.denom())).collect();
        RatMatrix::new(IntMatrix::new(rows, cols, data), denom)
    }

    pub fn from_rows(rows: &[Vec<BigRational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let flat: Vec<BigRational> = rows.iter().flat_map(|r| r.iter().cloned()).collect();
        RatMatrix::from_rationals(rows.len(), cols, &flat)
    }

    pub fn numer(&self) -> &IntMatrix {
        &self.numer
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn rows(&self) -> usize {
        self.numer.rows
    }

    pub fn cols(&self) -> usize {
        self.numer.cols
    }

    pub fn is_square(&self) -> bool {
        self.numer.is_square()
    }

    pub fn is_integral(&self) -> bool {
        self.denom.is_one()
    }

    pub fn entry(&self, i: usize, j: usize) -> BigRational {
        BigRational::new(self.numer.get(i, j).clone(), self.denom.clone())
    }

    pub fn row(&self, i: usize) -> Vec<BigRational> {
        (0..self.cols()).map(|j| self.entry(i, j)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows()).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix { numer: self.numer.transpose(), denom: self.denom.clone() }
    }

    pub fn neg(&self) -> RatMatrix {
        RatMatrix { numer: self.numer.scale(&BigInt::from(-1)), denom: self.denom.clone() }
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        RatMatrix::new(self.numer.mul(&other.numer), &self.denom * &other.denom)
    }

    pub fn scale(&self, k: &BigRational) -> RatMatrix {
        RatMatrix::new(self.numer.scale(k.numer()), &self.denom * k.denom())
    }

    pub fn stack(&self, other: &RatMatrix) -> RatMatrix {
        let l = self.denom.lcm(&other.denom);
        let a = self.numer.scale(&(&l / &self.denom));
        let b = other.numer.scale(&(&l / &other.denom));
        RatMatrix::new(a.stack(&b), l)
    }

    /// Row vector times matrix, `y · self`.
    pub fn left_mul_vec(&self, y: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(y.len(), self.rows(), "incompatible shapes");
        (0..self.cols())
            .map(|j| {
                let s: BigRational = y.iter().enumerate().map(|(i, yi)| yi * self.numer.get(i, j)).sum();
                s / &self.denom
            })
            .collect()
    }

    /// Matrix times column vector, `self · x`.
    pub fn mul_vec(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.cols(), "incompatible shapes");
        (0..self.rows())
            .map(|i| {
                let s: BigRational = x.iter().enumerate().map(|(j, xj)| xj * self.numer.get(i, j)).sum();
                s / &self.denom
            })
            .collect()
    }

    pub fn det(&self) -> Result<BigRational> {
        let d = self.numer.det()?;
        let scale = num_traits::pow(self.denom.clone(), self.rows());
        Ok(BigRational::new(d, scale))
    }

    /// Exact inverse by Gauss-Jordan elimination over ℚ.
    pub fn inverse(&self) -> Result<RatMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows(), cols: self.cols() });
        }
        let n = self.rows();
        // numer⁻¹ · denom; eliminate on the integer numerator over ℚ
        let mut a: Vec<BigRational> = self.numer.data.iter().map(|x| BigRational::from(x.clone())).collect();
        let mut inv: Vec<BigRational> = IntMatrix::identity(n).data.into_iter().map(BigRational::from).collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !a[i * n + c].is_zero()).ok_or(Error::Singular)?;
            if p != c {
                for j in 0..n {
                    a.swap(c * n + j, p * n + j);
                    inv.swap(c * n + j, p * n + j);
                }
            }
            let pivot = a[c * n + c].clone();
            for j in 0..n {
                a[c * n + j] /= &pivot;
                inv[c * n + j] /= &pivot;
            }
            for i in 0..n {
                if i == c || a[i * n + c].is_zero() {
                    continue;
                }
                let f = a[i * n + c].clone();
                for j in 0..n {
                    let t = &f * &a[c * n + j];
                    a[i * n + j] -= t;
                    let t = &f * &inv[c * n + j];
                    inv[i * n + j] -= t;
                }
            }
        }
        let scale = BigRational::from(self.denom.clone());
        let entries: Vec<BigRational> = inv.into_iter().map(|x| x * &scale).collect();
        Ok(RatMatrix::from_rationals(n, n, &entries))
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

#[cfg(test)]
mod tests;
