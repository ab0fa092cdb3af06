//! Hermite and Smith normal forms of integer matrices.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;

use super::scalar::{to_big, to_small, Grid, Scalar};
use super::IntMatrix;

/// Row-style Hermite normal form `h = u · m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hermite {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    pub pivots: Vec<usize>,
}

/// Smith normal form `s = u · m · v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// Diagonal of `s`, `d₁ | d₂ | …`, with trailing zeros for rank-deficient input.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s.get(i, i).clone()).collect()
    }
}

/// Hermite normal form together with the unimodular transform.
///
/// The result is upper triangular on its rank profile: each nonzero row has a
/// positive pivot, entries above a pivot lie in `[0, pivot)`, and zero rows
/// are collected at the bottom.
pub fn hnf(m: &IntMatrix) -> Hermite {
    if let Some(small) = to_small(m.data()) {
        let mut h = Grid { rows: m.rows(), cols: m.cols(), data: small };
        let mut u = Grid::<i64>::identity(m.rows());
        if let Some(pivots) = hnf_kernel(&mut h, Some(&mut u)) {
            return Hermite {
                rank: pivots.len(),
                h: IntMatrix::new(h.rows, h.cols, to_big(h.data)),
                u: IntMatrix::new(u.rows, u.cols, to_big(u.data)),
                pivots,
            };
        }
    }
    let mut h = Grid { rows: m.rows(), cols: m.cols(), data: m.data().to_vec() };
    let mut u = Grid::<BigInt>::identity(m.rows());
    let pivots = hnf_kernel(&mut h, Some(&mut u)).expect("bignum arithmetic cannot overflow");
    Hermite {
        rank: pivots.len(),
        h: IntMatrix::new(h.rows, h.cols, h.data),
        u: IntMatrix::new(u.rows, u.cols, u.data),
        pivots,
    }
}

/// Hermite normal form without the transform; returns `(h, rank)`.
pub fn hnf_basis(m: &IntMatrix) -> (IntMatrix, usize) {
    if let Some(small) = to_small(m.data()) {
        let mut h = Grid { rows: m.rows(), cols: m.cols(), data: small };
        if let Some(pivots) = hnf_kernel::<i64>(&mut h, None) {
            return (IntMatrix::new(h.rows, h.cols, to_big(h.data)), pivots.len());
        }
    }
    let mut h = Grid { rows: m.rows(), cols: m.cols(), data: m.data().to_vec() };
    let pivots = hnf_kernel::<BigInt>(&mut h, None).expect("bignum arithmetic cannot overflow");
    (IntMatrix::new(h.rows, h.cols, h.data), pivots.len())
}

/// Smith normal form with both unimodular transforms.
pub fn snf(m: &IntMatrix) -> Smith {
    if let Some(small) = to_small(m.data()) {
        let mut s = Grid { rows: m.rows(), cols: m.cols(), data: small };
        let mut u = Grid::<i64>::identity(m.rows());
        let mut v = Grid::<i64>::identity(m.cols());
        if snf_kernel(&mut s, &mut u, &mut v).is_some() {
            return Smith {
                s: IntMatrix::new(s.rows, s.cols, to_big(s.data)),
                u: IntMatrix::new(u.rows, u.cols, to_big(u.data)),
                v: IntMatrix::new(v.rows, v.cols, to_big(v.data)),
            };
        }
    }
    let mut s = Grid { rows: m.rows(), cols: m.cols(), data: m.data().to_vec() };
    let mut u = Grid::<BigInt>::identity(m.rows());
    let mut v = Grid::<BigInt>::identity(m.cols());
    snf_kernel(&mut s, &mut u, &mut v).expect("bignum arithmetic cannot overflow");
    Smith {
        s: IntMatrix::new(s.rows, s.cols, s.data),
        u: IntMatrix::new(u.rows, u.cols, u.data),
        v: IntMatrix::new(v.rows, v.cols, v.data),
    }
}

fn min_abs_in_col<T: Scalar>(h: &Grid<T>, col: usize, from: usize) -> Option<usize> {
    let mut best: Option<usize> = None;
    for i in from..h.rows {
        let x = h.at(i, col);
        if x.is_zero() {
            continue;
        }
        match best {
            Some(b) if x.cmp_abs(h.at(b, col)) != Ordering::Less => {}
            _ => best = Some(i),
        }
    }
    best
}

pub(crate) fn hnf_kernel<T: Scalar>(h: &mut Grid<T>, mut u: Option<&mut Grid<T>>) -> Option<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..h.cols {
        if r == h.rows {
            break;
        }
        let mut found = false;
        while let Some(p) = min_abs_in_col(h, col, r) {
            found = true;
            h.swap_rows(r, p);
            if let Some(u) = u.as_deref_mut() {
                u.swap_rows(r, p);
            }
            let mut clean = true;
            for i in r + 1..h.rows {
                if h.at(i, col).is_zero() {
                    continue;
                }
                let q = h.at(i, col).div_floor(h.at(r, col))?;
                h.sub_row(i, r, &q, col)?;
                if let Some(u) = u.as_deref_mut() {
                    u.sub_row(i, r, &q, 0)?;
                }
                if !h.at(i, col).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if h.at(r, col).is_negative() {
            h.negate_row(r)?;
            if let Some(u) = u.as_deref_mut() {
                u.negate_row(r)?;
            }
        }
        for i in 0..r {
            if h.at(i, col).is_zero() {
                continue;
            }
            let q = h.at(i, col).div_floor(h.at(r, col))?;
            h.sub_row(i, r, &q, col)?;
            if let Some(u) = u.as_deref_mut() {
                u.sub_row(i, r, &q, 0)?;
            }
        }
        pivots.push(col);
        r += 1;
    }
    Some(pivots)
}

pub(crate) fn snf_kernel<T: Scalar>(s: &mut Grid<T>, u: &mut Grid<T>, v: &mut Grid<T>) -> Option<()> {
    let n = s.rows.min(s.cols);
    for t in 0..n {
        // smallest nonzero entry of the trailing block goes to (t, t)
        let mut best: Option<(usize, usize)> = None;
        for i in t..s.rows {
            for j in t..s.cols {
                let x = s.at(i, j);
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if x.cmp_abs(s.at(bi, bj)) != Ordering::Less => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        s.swap_rows(t, bi);
        u.swap_rows(t, bi);
        s.swap_cols(t, bj);
        v.swap_cols(t, bj);

        loop {
            let mut residue: Option<(usize, usize)> = None;
            for i in t + 1..s.rows {
                if s.at(i, t).is_zero() {
                    continue;
                }
                let q = s.at(i, t).div_floor(s.at(t, t))?;
                s.sub_row(i, t, &q, 0)?;
                u.sub_row(i, t, &q, 0)?;
                if !s.at(i, t).is_zero() {
                    residue = smaller(s, residue, (i, t));
                }
            }
            for j in t + 1..s.cols {
                if s.at(t, j).is_zero() {
                    continue;
                }
                let q = s.at(t, j).div_floor(s.at(t, t))?;
                s.sub_col(j, t, &q)?;
                v.sub_col(j, t, &q)?;
                if !s.at(t, j).is_zero() {
                    residue = smaller(s, residue, (t, j));
                }
            }
            if let Some((i, j)) = residue {
                s.swap_rows(t, i);
                u.swap_rows(t, i);
                s.swap_cols(t, j);
                v.swap_cols(t, j);
                continue;
            }
            // row and column t are clear; enforce divisibility of the trailing block
            let mut offender = None;
            'scan: for i in t + 1..s.rows {
                for j in t + 1..s.cols {
                    if !s.at(i, j).is_multiple_of(s.at(t, t)) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    s.add_row(t, i)?;
                    u.add_row(t, i)?;
                }
                None => break,
            }
        }
        if s.at(t, t).is_negative() {
            s.negate_row(t)?;
            u.negate_row(t)?;
        }
    }
    Some(())
}

fn smaller<T: Scalar>(s: &Grid<T>, cur: Option<(usize, usize)>, cand: (usize, usize)) -> Option<(usize, usize)> {
    match cur {
        Some(c) if s.at(cand.0, cand.1).cmp_abs(s.at(c.0, c.1)) != Ordering::Less => Some(c),
        _ => Some(cand),
    }
}
