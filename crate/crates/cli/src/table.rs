//! Σ tables for the built-in colorings and custom lattice pairs.
//!
//! Bounds are on Σ of the parent lattice. Rows are sorted by Σ₁, then by
//! the text of the parametrization, so repeated runs are byte-identical.

use std::collections::BTreeMap;

use csl_core::coloring::Coloring;
use csl_core::csl::{self, Isometry};
use csl_core::lattice::named;
use csl_core::quat::{self, Quaternion};
use csl_core::{BigInt, Lattice, RatMatrix};
use num_integer::Integer;

use crate::formats::{self, CsvRow};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `Im𝕃 ⊃ 2Im𝕁` under the rotations `R_q`.
    Cubic3,
    /// `𝕁 ⊃ 𝕃` under the rotations `R_{q,p}`.
    Hypercubic4,
    Custom { parent: Lattice, sub: Lattice },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Format, CliError> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(CliError::Usage(format!("unknown format {s:?}; expected csv or json"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRequest {
    pub family: Family,
    pub bound: u64,
    pub format: Format,
}

impl TableRequest {
    pub fn new(family: Family, bound: u64, format: Format) -> Result<TableRequest, CliError> {
        if bound == 0 {
            return Err(CliError::Usage("--bound must be at least 1".into()));
        }
        if let Family::Custom { parent, sub } = &family {
            if !sub.is_sublattice_of(parent)? {
                return Err(CliError::Usage("--sub is not a sublattice of --parent".into()));
            }
        }
        Ok(TableRequest { family, bound, format })
    }

    pub fn coloring(&self) -> Result<Coloring, CliError> {
        Ok(match &self.family {
            Family::Cubic3 => Coloring::new(&named::im_lipschitz(), &named::twice_im_hurwitz())?,
            Family::Hypercubic4 => Coloring::new(&named::hurwitz(), &named::lipschitz())?,
            Family::Custom { parent, sub } => Coloring::new(parent, sub)?,
        })
    }
}

/// A parametrized isometry with its text label.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub label: String,
    pub isometry: Isometry,
}

/// Planar rotations by `arg (x+iy)²` for primitive `(x, y)` with
/// `x² + y² ≤ norm_bound`, one per matrix.
fn planar_rotations(norm_bound: u64) -> Vec<Candidate> {
    let r = norm_bound.isqrt() as i64;
    let mut out = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            let n = (x * x + y * y) as u64;
            // (x, y) and (−x, −y) give the same rotation
            let canonical = x > 0 || (x == 0 && y > 0);
            if n == 0 || n > norm_bound || x.gcd(&y) != 1 || !canonical {
                continue;
            }
            let isometry = Isometry::planar_rotation(x, y).expect("nonzero");
            out.push(Candidate { label: format!("({x},{y})"), isometry });
        }
    }
    out
}

/// Every parametrized rotation of dimension `dim` that can have `Σ ≤ bound`
/// on a cubic-type lattice; callers filter by the actual Σ.
///
/// A primitive quaternion (or Gaussian integer) with Σ ≤ bound has norm at
/// most `4·bound`.
fn rotations(dim: usize, bound: u64) -> Result<Vec<Candidate>, CliError> {
    Ok(match dim {
        2 => planar_rotations(2 * bound),
        3 => quat::primitive_quaternions(4 * bound)
            .map(|q| Ok(Candidate { label: q.to_string(), isometry: quat::cayley_so3(&q)? }))
            .collect::<Result<_, CliError>>()?,
        4 => quat::admissible_pairs(bound)
            .map(|pair| {
                let isometry = quat::so4_from_pair(&pair)?;
                Ok(Candidate { label: formats::source_text(&isometry), isometry })
            })
            .collect::<Result<_, CliError>>()?,
        _ => return Err(CliError::Usage(format!("no parametrized isometries in dimension {dim}"))),
    })
}

/// Distinct rotations (and, with `improper`, their det −1 partners) with
/// `Σ_lattice ≤ bound`, sorted by Σ then label.
///
/// Improper partners are `−R` in odd dimension, `R·T_{1,1}` in dimension 4
/// and `R` composed with the reflection in the x-axis in the plane.
pub fn candidates(lattice: &Lattice, bound: u64, improper: bool) -> Result<Vec<(BigInt, Candidate)>, CliError> {
    let dim = lattice.dim();
    let mut found: BTreeMap<RatMatrix, (BigInt, Candidate)> = BTreeMap::new();
    let limit = BigInt::from(bound);
    for c in rotations(dim, bound)? {
        let mut list = vec![c.clone()];
        if improper {
            list.push(improper_partner(&c)?);
        }
        for c in list {
            let sigma = csl::sigma(lattice, &c.isometry)?;
            if sigma <= limit {
                found.entry(c.isometry.matrix().clone()).or_insert((sigma, c));
            }
        }
    }
    let mut out: Vec<(BigInt, Candidate)> = found.into_values().collect();
    out.sort_by(|(s, a), (t, b)| s.cmp(t).then_with(|| a.label.cmp(&b.label)));
    Ok(out)
}

fn improper_partner(c: &Candidate) -> Result<Candidate, CliError> {
    let r = &c.isometry;
    let isometry = match r.dim() {
        2 => {
            let flip = Isometry::reflection(&csl_core::lattice::rat_vec(&[0, 1]))?;
            r.compose(&flip)?
        }
        4 => {
            let one = Quaternion::one();
            let t = quat::rotoreflection_from_pair(&quat::AdmissiblePair::new(one.clone(), one)?)?;
            r.compose(&t)?
        }
        _ => r.negated(),
    };
    Ok(Candidate { label: format!("-{}", c.label), isometry })
}

/// Rows for the request; every row's Σ values are recomputed both by
/// formula (built-in families) and by direct intersection.
pub fn build(req: &TableRequest) -> Result<Vec<CsvRow>, CliError> {
    let coloring = req.coloring()?;
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for (sigma1, c) in candidates(coloring.parent(), req.bound, false)? {
        let report = coloring.report(&c.isometry)?;
        debug_assert_eq!(sigma1, report.sigma1);
        let formula = match (&req.family, c.isometry.source()) {
            (Family::Cubic3, Some(csl_core::Parametrization::Cayley(q))) => Some((quat::sigma_so3(q)?, None)),
            (Family::Hypercubic4, Some(csl_core::Parametrization::Pair(q, p))) => {
                let pair = quat::AdmissiblePair::new(q.clone(), p.clone())?;
                Some((quat::sigma_d4(&pair), Some(quat::sigma_z4(&pair))))
            }
            _ => None,
        };
        if let Some((f1, f2)) = formula {
            if f1 != report.sigma1 || f2.is_some_and(|f2| f2 != report.sigma2) {
                mismatches.push(c.label.clone());
            }
        }
        let cycles = report.permutation.as_ref().map(|p| coloring.cycles(p));
        rows.push(CsvRow::new(c.label, &report, cycles));
    }
    if !mismatches.is_empty() {
        return Err(CliError::ChecksFailed(mismatches.len()));
    }
    Ok(rows)
}

pub fn render(req: &TableRequest, rows: &[CsvRow]) -> Result<Vec<u8>, CliError> {
    let mut out = Vec::new();
    match req.format {
        Format::Csv => formats::write_csv(&mut out, rows)?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, rows)?;
            out.push(b'\n');
        }
    }
    Ok(out)
}
