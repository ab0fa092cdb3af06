use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{Lattice, RatVector};
use crate::error::{Error, Result};
use crate::exact::{snf, IntMatrix, RatMatrix};

/// Largest quotient whose coset representatives are materialized.
const MAX_COSETS: u64 = 1 << 20;

/// A coset of the sublattice, as residues `(r₁, …, r_d)` with `0 ≤ rᵢ < dᵢ`
/// in the Smith-adapted basis of the parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetLabel(pub Vec<u64>);

impl CosetLabel {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for CosetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// The finite group `parent / sub` with labelled coset representatives.
///
/// If `S = U·M·V` is the Smith form of the coordinate matrix `M` of `sub` in
/// `parent`, the rows `b'ᵢ` of `V⁻¹·B` form a parent basis in which
/// `sub = ⊕ dᵢ ℤ b'ᵢ`. A point with adapted coordinates `c'` lies in the coset
/// labelled `c' mod d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientStructure {
    parent: Lattice,
    sub: Lattice,
    factors: Vec<u64>,
    to_adapted: IntMatrix,
    adapted: RatMatrix,
    labels: Vec<CosetLabel>,
    reps: Vec<RatVector>,
}

impl QuotientStructure {
    pub fn new(parent: &Lattice, sub: &Lattice) -> Result<QuotientStructure> {
        let d = parent.dim();
        if sub.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: sub.dim() });
        }
        let coords = parent.coordinates_of(sub).ok_or(Error::NotSublattice)?;
        let smith = snf(&coords);
        let factors_big = smith.invariant_factors();
        let index: BigInt = factors_big.iter().product();
        let m = index.to_u64().filter(|&m| m <= MAX_COSETS).ok_or_else(|| Error::IndexTooLarge(format!("{index}")))?;
        let factors: Vec<u64> = factors_big.iter().map(|f| f.to_u64().expect("factor divides index")).collect();
        let v_inv = RatMatrix::from_int(smith.v.clone()).inverse()?;
        debug_assert!(v_inv.is_integral());
        let adapted = v_inv.mul(parent.basis());

        let mut labels = Vec::with_capacity(m as usize);
        let mut current = alloc::vec![0u64; d];
        loop {
            labels.push(CosetLabel(current.clone()));
            // odometer over residues, last coordinate fastest
            let mut i = d;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                current[i] += 1;
                if current[i] < factors[i] {
                    break;
                }
                current[i] = 0;
            }
            if current.iter().all(|&r| r == 0) {
                break;
            }
        }
        debug_assert_eq!(labels.len() as u64, m);
        let reps = labels.iter().map(|l| adapted_point(&adapted, l)).collect();
        Ok(QuotientStructure {
            parent: parent.clone(),
            sub: sub.clone(),
            factors,
            to_adapted: smith.v,
            adapted,
            labels,
            reps,
        })
    }

    pub fn parent(&self) -> &Lattice {
        &self.parent
    }

    pub fn sub(&self) -> &Lattice {
        &self.sub
    }

    /// `d₁ | d₂ | … | d_d`, including leading ones.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    /// The index `m = [parent : sub]`.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// All labels in lexicographic order; the zero label comes first.
    pub fn labels(&self) -> &[CosetLabel] {
        &self.labels
    }

    /// Coset representatives, aligned with [`labels`](Self::labels); `reps()[0]` is the origin.
    pub fn reps(&self) -> &[RatVector] {
        &self.reps
    }

    /// Position of `label` in [`labels`](Self::labels), i.e. the `j` of color `c_j`.
    pub fn color_index(&self, label: &CosetLabel) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    pub fn rep(&self, label: &CosetLabel) -> Option<&RatVector> {
        self.color_index(label).map(|j| &self.reps[j])
    }

    /// The label of the coset `p + sub`.
    pub fn coset_of(&self, p: &[BigRational]) -> Result<CosetLabel> {
        let coords = self.parent.coordinates(p).ok_or(Error::NotInLattice)?;
        Ok(self.label_of_coordinates(&coords))
    }

    /// Label of the parent point with the given (canonical-basis) coordinates.
    pub fn label_of_coordinates(&self, coords: &[BigInt]) -> CosetLabel {
        let adapted = self.to_adapted.left_mul_vec(coords);
        CosetLabel(
            adapted
                .iter()
                .zip(&self.factors)
                .map(|(c, &f)| {
                    if f == 1 {
                        0
                    } else {
                        c.mod_floor(&BigInt::from(f)).to_u64().expect("residue below factor")
                    }
                })
                .collect(),
        )
    }

    /// Labels of the cosets generated by the given labels (the subgroup they span).
    pub fn subgroup_generated<'a, I>(&self, gens: I) -> Vec<CosetLabel>
    where
        I: IntoIterator<Item = &'a CosetLabel>,
    {
        let gens: Vec<&CosetLabel> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let mut seen = alloc::collections::BTreeSet::new();
        let zero = CosetLabel(alloc::vec![0; self.factors.len()]);
        seen.insert(zero.clone());
        let mut frontier = alloc::vec![zero];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = self.add_labels(&x, g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn add_labels(&self, a: &CosetLabel, b: &CosetLabel) -> CosetLabel {
        CosetLabel(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.factors)
                .map(|((x, y), &f)| if f == 1 { 0 } else { (x + y) % f })
                .collect(),
        )
    }
}

fn adapted_point(adapted: &RatMatrix, label: &CosetLabel) -> RatVector {
    let coeffs: Vec<BigRational> = label.0.iter().map(|&r| BigRational::from_integer(BigInt::from(r))).collect();
    let p = adapted.left_mul_vec(&coeffs);
    debug_assert!(label.0.iter().any(|&r| r != 0) || p.iter().all(Zero::is_zero));
    p
}
