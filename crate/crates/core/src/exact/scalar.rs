//! Integer entries the normal-form kernels run on.
//!
//! The kernels are written once over [`Scalar`]. Machine integers report
//! overflow as `None`, in which case callers rerun the same kernel over
//! [`BigInt`], which never fails.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub(crate) trait Scalar: Clone + PartialEq + core::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    fn neg(&self) -> Option<Self>;
    fn add(&self, other: &Self) -> Option<Self>;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn div_floor(&self, d: &Self) -> Option<Self>;
    fn is_multiple_of(&self, d: &Self) -> bool;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
    fn div_floor(&self, d: &Self) -> Option<Self> {
        if *d == -1 {
            return self.checked_neg();
        }
        Some(Integer::div_floor(self, d))
    }
    fn is_multiple_of(&self, d: &Self) -> bool {
        if *d == 0 {
            *self == 0
        } else {
            self % d == 0
        }
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        self.sign() == Sign::Minus
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn div_floor(&self, d: &Self) -> Option<Self> {
        Some(Integer::div_floor(self, d))
    }
    fn is_multiple_of(&self, d: &Self) -> bool {
        if Zero::is_zero(d) {
            Zero::is_zero(self)
        } else {
            Zero::is_zero(&(self % d))
        }
    }
}

/// Dense row-major scratch matrix for the kernels.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Grid<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Scalar> Grid<T> {
    pub fn identity(n: usize) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(if i == j { T::one() } else { T::zero() });
            }
        }
        Grid { rows: n, cols: n, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn negate_row(&mut self, r: usize) -> Option<()> {
        for j in 0..self.cols {
            let k = r * self.cols + j;
            self.data[k] = self.data[k].neg()?;
        }
        Some(())
    }

    /// `row[target] -= q * row[source]`, touching columns `from..`.
    pub fn sub_row(&mut self, target: usize, source: usize, q: &T, from: usize) -> Option<()> {
        if q.is_zero() {
            return Some(());
        }
        for j in from..self.cols {
            let s = self.data[source * self.cols + j].clone();
            if s.is_zero() {
                continue;
            }
            let k = target * self.cols + j;
            self.data[k] = self.data[k].sub_mul(q, &s)?;
        }
        Some(())
    }

    /// `col[target] -= q * col[source]`.
    pub fn sub_col(&mut self, target: usize, source: usize, q: &T) -> Option<()> {
        if q.is_zero() {
            return Some(());
        }
        for i in 0..self.rows {
            let s = self.data[i * self.cols + source].clone();
            if s.is_zero() {
                continue;
            }
            let k = i * self.cols + target;
            self.data[k] = self.data[k].sub_mul(q, &s)?;
        }
        Some(())
    }

    /// `row[target] += row[source]`.
    pub fn add_row(&mut self, target: usize, source: usize) -> Option<()> {
        for j in 0..self.cols {
            let s = self.data[source * self.cols + j].clone();
            let k = target * self.cols + j;
            self.data[k] = self.data[k].add(&s)?;
        }
        Some(())
    }
}

pub(crate) fn to_small(data: &[BigInt]) -> Option<Vec<i64>> {
    // Leave headroom so that a few products still fit before overflow checks kick in.
    const LIMIT: i64 = 1 << 40;
    data.iter()
        .map(|x| x.to_i64().filter(|v| v.abs() < LIMIT))
        .collect()
}

pub(crate) fn to_big(data: Vec<i64>) -> Vec<BigInt> {
    data.into_iter().map(BigInt::from).collect()
}

