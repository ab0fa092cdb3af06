//! Sublattice colorings and their behaviour under coincidence isometries.
//!
//! For a coloring of `Γ₁` by the cosets of `Γ₂` and a coincidence isometry
//! `R`, the lattices involved are
//!
//! ```text
//! Γ₁(R) = Γ₁ ∩ RΓ₁          Γ₂(R) = Γ₂ ∩ RΓ₂
//! A     = RΓ₂ ∩ Γ₁(R)       B     = Γ₂ ∩ Γ₁(R)
//! ```
//!
//! with `s = [Γ₁(R):A]`, `t = [Γ₁(R):B]`, `u = [B:Γ₂(R)]`, `v = [A:Γ₂(R)]`.

mod classify;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::csl::{self, Isometry};
use crate::error::{Error, Result};
use crate::lattice::{affine_point, CosetLabel, Lattice, QuotientStructure, RatVector};

pub use classify::{Classification, ClosureFindings, Containment, Prediction, ProductCheck, Rule};

/// The coloring of `parent` whose colors are the cosets of `sub`.
#[derive(Clone, Debug)]
pub struct Coloring {
    quotient: QuotientStructure,
}

/// `(s, t, u, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Stuv {
    pub s: u64,
    pub t: u64,
    pub u: u64,
    pub v: u64,
}

/// Pairs `(c_j, c_k)` such that `R` maps some point of color `c_j` in
/// `Γ₁(R⁻¹)` to a point of color `c_k` in `Γ₁(R)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SigmaRelation {
    pub pairs: BTreeSet<(CosetLabel, CosetLabel)>,
}

impl SigmaRelation {
    pub fn contains(&self, j: &CosetLabel, k: &CosetLabel) -> bool {
        self.pairs.contains(&(j.clone(), k.clone()))
    }

    pub fn domain(&self) -> BTreeSet<CosetLabel> {
        self.pairs.iter().map(|(j, _)| j.clone()).collect()
    }

    pub fn range(&self) -> BTreeSet<CosetLabel> {
        self.pairs.iter().map(|(_, k)| k.clone()).collect()
    }

    /// Every color on either side appears in exactly one pair.
    pub fn is_bijection(&self) -> bool {
        self.pairs.len() == self.domain().len() && self.pairs.len() == self.range().len()
    }

    /// `|{c_j : (c_j, c₀) ∈ σ_R}|`.
    pub fn count_into_zero(&self) -> u64 {
        self.pairs.iter().filter(|(_, k)| k.is_zero()).count() as u64
    }

    /// `|{c_k : (c₀, c_k) ∈ σ_R}|`.
    pub fn count_from_zero(&self) -> u64 {
        self.pairs.iter().filter(|(j, _)| j.is_zero()).count() as u64
    }
}

/// Everything computed about one isometry relative to one coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorReport {
    pub m: u64,
    pub sigma1: BigInt,
    pub sigma2: BigInt,
    pub s: u64,
    pub t: u64,
    pub u: u64,
    pub v: u64,
    /// Colors present in `Γ₁(R⁻¹)`.
    pub c_rinv: BTreeSet<CosetLabel>,
    /// Colors present in `Γ₁(R)`.
    pub c_r: BTreeSet<CosetLabel>,
    pub sigma_relation: SigmaRelation,
    pub is_color_coincidence: bool,
    pub permutation: Option<BTreeMap<CosetLabel, CosetLabel>>,
}

/// The lattices attached to a coincidence isometry `R` of a coloring.
#[derive(Clone, Debug)]
pub struct Frame<'a> {
    coloring: &'a Coloring,
    r: Isometry,
    /// `Γ₁(R)`.
    pub csl: Lattice,
    /// `Γ₁(R⁻¹) = R⁻¹Γ₁(R)`.
    pub csl_inv: Lattice,
    /// `RΓ₂ ∩ Γ₁(R)`.
    pub rotated_part: Lattice,
    /// `Γ₂ ∩ Γ₁(R)`.
    pub fixed_part: Lattice,
    /// `Γ₂(R)`.
    pub sub_csl: Lattice,
    pub sigma1: BigInt,
    pub sigma2: BigInt,
}

impl Coloring {
    pub fn new(parent: &Lattice, sub: &Lattice) -> Result<Coloring> {
        if !sub.is_sublattice_of(parent)? {
            return Err(Error::NotSublattice);
        }
        Ok(Coloring { quotient: parent.quotient(sub)? })
    }

    pub fn parent(&self) -> &Lattice {
        self.quotient.parent()
    }

    pub fn sub(&self) -> &Lattice {
        self.quotient.sub()
    }

    pub fn quotient(&self) -> &QuotientStructure {
        &self.quotient
    }

    /// Number of colors `m`.
    pub fn order(&self) -> u64 {
        self.quotient.order() as u64
    }

    /// Colors `c₀, c₁, …` in their fixed order, `c₀` being `Γ₂` itself.
    pub fn colors(&self) -> &[CosetLabel] {
        self.quotient.labels()
    }

    /// The `j` of color `c_j`.
    pub fn color_index(&self, label: &CosetLabel) -> Option<usize> {
        self.quotient.color_index(label)
    }

    pub fn color_of(&self, p: &[num_rational::BigRational]) -> Result<CosetLabel> {
        self.quotient.coset_of(p)
    }

    /// Colors of the cosets of `Γ₂` meeting `lattice ⊆ Γ₁`, i.e. `(Γ₂ + lattice)/Γ₂`.
    pub fn colors_meeting(&self, lattice: &Lattice) -> Result<BTreeSet<CosetLabel>> {
        let mut gens = Vec::with_capacity(lattice.dim());
        for v in lattice.basis_vectors() {
            gens.push(self.quotient.coset_of(&v).map_err(|_| Error::NotSublattice)?);
        }
        Ok(self.quotient.subgroup_generated(gens.iter()).into_iter().collect())
    }

    pub fn frame(&self, r: &Isometry) -> Result<Frame<'_>> {
        let parent = self.parent();
        let sub = self.sub();
        csl::is_coincidence(parent, r)?;
        let rotated_parent = r.image(parent)?;
        let rotated_sub = r.image(sub)?;
        let csl = parent.intersect(&rotated_parent)?;
        let csl_inv = r.inverse().image(&csl)?;
        let rotated_part = rotated_sub.intersect(parent)?;
        let fixed_part = sub.intersect(&rotated_parent)?;
        let sub_csl = sub.intersect(&rotated_sub)?;
        let sigma1 = parent.index_of(&csl)?;
        let sigma2 = sub.index_of(&sub_csl)?;
        Ok(Frame { coloring: self, r: r.clone(), csl, csl_inv, rotated_part, fixed_part, sub_csl, sigma1, sigma2 })
    }

    pub fn stuv(&self, r: &Isometry) -> Result<Stuv> {
        self.frame(r)?.stuv()
    }

    /// `Σ₂ = t·u·Σ₁/m`, checked against `s·v·Σ₁/m`.
    pub fn sigma2_via_formula(&self, r: &Isometry, sigma1: &BigInt) -> Result<BigInt> {
        self.frame(r)?.sigma2_via_formula(sigma1)
    }

    pub fn sigma_relation(&self, r: &Isometry) -> Result<SigmaRelation> {
        self.frame(r)?.sigma_relation()
    }

    pub fn is_color_coincidence(&self, r: &Isometry) -> Result<bool> {
        Ok(self.frame(r)?.is_color_coincidence())
    }

    pub fn color_permutation(&self, r: &Isometry) -> Result<BTreeMap<CosetLabel, CosetLabel>> {
        self.frame(r)?.color_permutation()
    }

    pub fn report(&self, r: &Isometry) -> Result<ColorReport> {
        self.frame(r)?.report()
    }

    /// Cycle decomposition of a color permutation by color index, omitting
    /// fixed points; cycles start at their smallest index.
    pub fn cycles(&self, perm: &BTreeMap<CosetLabel, CosetLabel>) -> Vec<Vec<usize>> {
        let map: BTreeMap<usize, usize> = perm
            .iter()
            .filter_map(|(a, b)| Some((self.color_index(a)?, self.color_index(b)?)))
            .collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in map.keys() {
            if seen.contains(&start) || map[&start] == start {
                continue;
            }
            let mut cycle = alloc::vec![start];
            seen.insert(start);
            let mut x = map[&start];
            while x != start {
                cycle.push(x);
                seen.insert(x);
                match map.get(&x) {
                    Some(&y) => x = y,
                    None => break,
                }
            }
            out.push(cycle);
        }
        out
    }
}

impl<'a> Frame<'a> {
    pub fn isometry(&self) -> &Isometry {
        &self.r
    }

    pub fn coloring(&self) -> &'a Coloring {
        self.coloring
    }

    pub fn stuv(&self) -> Result<Stuv> {
        let small = |x: BigInt| {
            x.to_u64().ok_or_else(|| Error::Inconsistent(format!("index {x} exceeds the number of colors")))
        };
        Ok(Stuv {
            s: small(self.csl.index_of(&self.rotated_part)?)?,
            t: small(self.csl.index_of(&self.fixed_part)?)?,
            u: small(self.fixed_part.index_of(&self.sub_csl)?)?,
            v: small(self.rotated_part.index_of(&self.sub_csl)?)?,
        })
    }

    pub fn sigma2_via_formula(&self, sigma1: &BigInt) -> Result<BigInt> {
        let Stuv { s, t, u, v } = self.stuv()?;
        let m = BigInt::from(self.coloring.order());
        let tu = BigInt::from(t) * u * sigma1;
        let sv = BigInt::from(s) * v * sigma1;
        if tu != sv {
            return Err(Error::Inconsistent(format!("t·u·Σ₁ = {tu} but s·v·Σ₁ = {sv}")));
        }
        if !(&tu % &m).is_zero() {
            return Err(Error::Inconsistent(format!("m = {m} does not divide t·u·Σ₁ = {tu}")));
        }
        Ok(tu / m)
    }

    /// Colors present in `Γ₁(R⁻¹)`.
    pub fn colors_inverse(&self) -> Result<BTreeSet<CosetLabel>> {
        self.coloring.colors_meeting(&self.csl_inv)
    }

    /// Colors present in `Γ₁(R)`.
    pub fn colors(&self) -> Result<BTreeSet<CosetLabel>> {
        self.coloring.colors_meeting(&self.csl)
    }

    /// A point of `(c + Γ₂) ∩ target`; exists whenever `c` is among the
    /// colors meeting `target`.
    fn representative(&self, label: &CosetLabel, target: &Lattice) -> Result<RatVector> {
        let rep = self.coloring.quotient.rep(label).ok_or(Error::NotInLattice)?;
        affine_point(rep, self.coloring.sub(), target)?
            .ok_or_else(|| Error::Inconsistent(format!("color {label} does not meet the coincidence site lattice")))
    }

    /// `(c_j, c_k) ∈ σ_R` iff `R x_j − y_k ∈ A + B`, where `x_j` and `y_k` are
    /// points of the respective colors in `Γ₁(R⁻¹)` and `Γ₁(R)`.
    pub fn sigma_relation(&self) -> Result<SigmaRelation> {
        let diff = self.rotated_part.sum(&self.fixed_part)?;
        let mut targets: BTreeMap<RatVector, Vec<CosetLabel>> = BTreeMap::new();
        for k in self.colors()? {
            let y = self.representative(&k, &self.csl)?;
            targets.entry(diff.reduce(&y)).or_default().push(k);
        }
        let mut pairs = BTreeSet::new();
        for j in self.colors_inverse()? {
            let x = self.representative(&j, &self.csl_inv)?;
            let key = diff.reduce(&self.r.apply(&x));
            for k in targets.get(&key).into_iter().flatten() {
                pairs.insert((j.clone(), k.clone()));
            }
        }
        Ok(SigmaRelation { pairs })
    }

    /// `R` fixes color `c₀`: `R[Γ₂ ∩ Γ₁(R⁻¹)] = Γ₂ ∩ Γ₁(R)`.
    pub fn is_color_coincidence(&self) -> bool {
        self.rotated_part == self.fixed_part
    }

    pub fn color_permutation(&self) -> Result<BTreeMap<CosetLabel, CosetLabel>> {
        if !self.is_color_coincidence() {
            return Err(Error::NotColorCoincidence);
        }
        let mut perm = BTreeMap::new();
        for j in self.colors_inverse()? {
            let x = self.representative(&j, &self.csl_inv)?;
            perm.insert(j, self.coloring.color_of(&self.r.apply(&x))?);
        }
        Ok(perm)
    }

    pub fn report(&self) -> Result<ColorReport> {
        let stuv = self.stuv()?;
        let sigma2 = self.sigma2_via_formula(&self.sigma1)?;
        if sigma2 != self.sigma2 {
            return Err(Error::Inconsistent(format!("Σ₂ formula gives {sigma2}, direct index {}", self.sigma2)));
        }
        let c_rinv = self.colors_inverse()?;
        let c_r = self.colors()?;
        if c_rinv.len() as u64 != stuv.s || c_r.len() as u64 != stuv.t {
            return Err(Error::Inconsistent(format!(
                "color counts ({}, {}) differ from (s, t) = ({}, {})",
                c_rinv.len(),
                c_r.len(),
                stuv.s,
                stuv.t
            )));
        }
        let sigma_relation = self.sigma_relation()?;
        let is_color_coincidence = self.is_color_coincidence();
        let permutation = if is_color_coincidence { Some(self.color_permutation()?) } else { None };
        Ok(ColorReport {
            m: self.coloring.order(),
            sigma1: self.sigma1.clone(),
            sigma2,
            s: stuv.s,
            t: stuv.t,
            u: stuv.u,
            v: stuv.v,
            c_rinv,
            c_r,
            sigma_relation,
            is_color_coincidence,
            permutation,
        })
    }
}
