//! Search for products and inverses of color coincidences that are not
//! color coincidences.

use csl_core::coloring::Coloring;
use csl_core::csl::Isometry;
use csl_core::Lattice;
use serde::{Deserialize, Serialize};

use crate::formats::{ColorReportJson, IsometryJson, LatticeJson};
use crate::table;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportedIsometry {
    pub label: String,
    pub isometry: IsometryJson,
    pub report: ColorReportJson,
}

/// `second ∘ first` (apply `first`, then `second`) is not a color coincidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductViolation {
    pub first: ReportedIsometry,
    pub second: ReportedIsometry,
    pub product: ReportedIsometry,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseViolation {
    pub member: ReportedIsometry,
    pub inverse: ReportedIsometry,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub parent: LatticeJson,
    pub sub: LatticeJson,
    /// Bound on Σ of the parent lattice.
    pub bound: u64,
    pub candidates: usize,
    pub color_coincidences: usize,
    pub product_violations: Vec<ProductViolation>,
    pub inverse_violations: Vec<InverseViolation>,
}

impl ClosureReport {
    pub fn is_empty(&self) -> bool {
        self.product_violations.is_empty() && self.inverse_violations.is_empty()
    }
}

fn reported(c: &Coloring, label: String, r: &Isometry) -> Result<ReportedIsometry, CliError> {
    let report = c.report(r)?;
    Ok(ReportedIsometry {
        label,
        isometry: IsometryJson::from(r),
        report: ColorReportJson::new(c.colors(), &report),
    })
}

/// Candidates are the parametrized rotations and their det −1 partners
/// with `Σ₁ ≤ bound`.
pub fn search(parent: &Lattice, sub: &Lattice, bound: u64) -> Result<ClosureReport, CliError> {
    let c = Coloring::new(parent, sub)?;
    let found = table::candidates(parent, bound, true)?;
    let isometries: Vec<Isometry> = found.iter().map(|(_, cand)| cand.isometry.clone()).collect();
    let findings = c.closure_search(&isometries)?;
    let label = |i: usize| found[i].1.label.clone();
    let mut product_violations = Vec::new();
    for &(i, j) in &findings.product_violations {
        let product = isometries[j].compose(&isometries[i])?;
        product_violations.push(ProductViolation {
            first: reported(&c, label(i), &isometries[i])?,
            second: reported(&c, label(j), &isometries[j])?,
            product: reported(&c, format!("{} * {}", label(j), label(i)), &product)?,
        });
    }
    let mut inverse_violations = Vec::new();
    for &i in &findings.inverse_violations {
        inverse_violations.push(InverseViolation {
            member: reported(&c, label(i), &isometries[i])?,
            inverse: reported(&c, format!("inverse of {}", label(i)), &isometries[i].inverse())?,
        });
    }
    Ok(ClosureReport {
        parent: LatticeJson::from(parent),
        sub: LatticeJson::from(sub),
        bound,
        candidates: isometries.len(),
        color_coincidences: findings.members.len(),
        product_violations,
        inverse_violations,
    })
}
