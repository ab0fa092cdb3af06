//! JSON and CSV forms of lattices, isometries and color reports.
//!
//! Integers are written as decimal strings so that arbitrary precision
//! survives JSON readers that parse numbers as doubles.

use std::collections::BTreeMap;

use csl_core::coloring::ColorReport;
use csl_core::csl::{Isometry, IsometryKind, Parametrization};
use csl_core::{BigInt, CosetLabel, IntMatrix, Lattice, RatMatrix};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub dim: usize,
    pub denominator: String,
    pub numerator_rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsometryJson {
    pub denominator: String,
    pub numerator_rows: Vec<Vec<String>>,
    pub kind: String,
    /// One quaternion for a Cayley map, two for a pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quaternion: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorReportJson {
    /// Colors in index order; `c_j` is `colors[j]`.
    pub colors: Vec<String>,
    pub m: u64,
    pub sigma1: String,
    pub sigma2: String,
    pub s: u64,
    pub t: u64,
    pub u: u64,
    pub v: u64,
    pub c_rinv: Vec<String>,
    pub c_r: Vec<String>,
    pub sigma_relation: Vec<[String; 2]>,
    pub is_color_coincidence: bool,
    pub permutation: Option<Vec<[String; 2]>>,
}

/// One table line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub quaternions: String,
    pub sigma1: String,
    pub sigma2: String,
    pub m: u64,
    pub s: u64,
    pub t: u64,
    pub u: u64,
    pub v: u64,
    pub color_coincidence: bool,
    pub permutation: String,
}

fn rows_of(m: &IntMatrix) -> Vec<Vec<String>> {
    m.row_vecs().into_iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn parse_int(s: &str) -> Result<BigInt, CliError> {
    s.trim().parse().map_err(|_| CliError::Usage(format!("not an integer: {s:?}")))
}

fn parse_matrix(denominator: &str, rows: &[Vec<String>]) -> Result<RatMatrix, CliError> {
    let denom = parse_int(denominator)?;
    if denom <= BigInt::from(0) {
        return Err(CliError::Usage("denominator must be positive".into()));
    }
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Usage("rows have different lengths".into()));
    }
    let data = rows.iter().flatten().map(|x| parse_int(x)).collect::<Result<Vec<_>, _>>()?;
    Ok(RatMatrix::new(IntMatrix::new(rows.len(), cols, data), denom))
}

impl From<&Lattice> for LatticeJson {
    fn from(l: &Lattice) -> Self {
        LatticeJson {
            dim: l.dim(),
            denominator: l.basis().denom().to_string(),
            numerator_rows: rows_of(l.basis().numer()),
        }
    }
}

impl LatticeJson {
    /// The lattice generated by the rows; need not be in canonical form.
    pub fn to_lattice(&self) -> Result<Lattice, CliError> {
        let m = parse_matrix(&self.denominator, &self.numerator_rows)?;
        if m.cols() != self.dim {
            return Err(CliError::Usage(format!("rows have {} entries, dim is {}", m.cols(), self.dim)));
        }
        Ok(Lattice::new(&m)?)
    }
}

pub fn kind_name(kind: IsometryKind) -> &'static str {
    match kind {
        IsometryKind::Rotation => "rotation",
        IsometryKind::Rotoreflection => "rotoreflection",
    }
}

impl From<&Isometry> for IsometryJson {
    fn from(r: &Isometry) -> Self {
        let quaternion = r.source().map(|s| match s {
            Parametrization::Cayley(q) => vec![q.to_string()],
            Parametrization::Pair(q, p) => vec![q.to_string(), p.to_string()],
        });
        IsometryJson {
            denominator: r.matrix().denom().to_string(),
            numerator_rows: rows_of(r.matrix().numer()),
            kind: kind_name(r.kind()).to_string(),
            quaternion,
        }
    }
}

impl IsometryJson {
    /// Checks orthogonality exactly and that `kind` matches the determinant.
    /// The quaternion field is informational and not re-derived.
    pub fn to_isometry(&self) -> Result<Isometry, CliError> {
        let r = Isometry::new(parse_matrix(&self.denominator, &self.numerator_rows)?)?;
        if kind_name(r.kind()) != self.kind {
            return Err(CliError::Usage(format!("kind {:?} does not match the determinant", self.kind)));
        }
        Ok(r)
    }
}

fn labels(set: impl IntoIterator<Item = CosetLabel>) -> Vec<String> {
    set.into_iter().map(|l| l.to_string()).collect()
}

fn label_pairs<'a>(pairs: impl IntoIterator<Item = (&'a CosetLabel, &'a CosetLabel)>) -> Vec<[String; 2]> {
    pairs.into_iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect()
}

impl ColorReportJson {
    pub fn new(colors: &[CosetLabel], report: &ColorReport) -> Self {
        ColorReportJson {
            colors: labels(colors.iter().cloned()),
            m: report.m,
            sigma1: report.sigma1.to_string(),
            sigma2: report.sigma2.to_string(),
            s: report.s,
            t: report.t,
            u: report.u,
            v: report.v,
            c_rinv: labels(report.c_rinv.iter().cloned()),
            c_r: labels(report.c_r.iter().cloned()),
            sigma_relation: label_pairs(report.sigma_relation.pairs.iter().map(|(a, b)| (a, b))),
            is_color_coincidence: report.is_color_coincidence,
            permutation: report.permutation.as_ref().map(|p| label_pairs(p.iter())),
        }
    }
}

/// `(c1 c2 c3)(c4 c5)` by color index, `()` for the identity.
pub fn cycle_notation(cycles: &[Vec<usize>]) -> String {
    if cycles.is_empty() {
        return "()".into();
    }
    cycles
        .iter()
        .map(|c| format!("({})", c.iter().map(|i| format!("c{i}")).collect::<Vec<_>>().join(" ")))
        .collect()
}

/// Text form of a parametrization: `(q)` or `(q);(p)`.
pub fn source_text(r: &Isometry) -> String {
    match r.source() {
        Some(Parametrization::Cayley(q)) => q.to_string(),
        Some(Parametrization::Pair(q, p)) => format!("{q};{p}"),
        None => String::new(),
    }
}

impl CsvRow {
    pub fn new(
        quaternions: String,
        report: &ColorReport,
        cycles: Option<Vec<Vec<usize>>>,
    ) -> Self {
        CsvRow {
            quaternions,
            sigma1: report.sigma1.to_string(),
            sigma2: report.sigma2.to_string(),
            m: report.m,
            s: report.s,
            t: report.t,
            u: report.u,
            v: report.v,
            color_coincidence: report.is_color_coincidence,
            permutation: cycles.map_or_else(|| "-".into(), |c| cycle_notation(&c)),
        }
    }
}

pub fn write_csv<W: std::io::Write>(out: W, rows: &[CsvRow]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<CsvRow>, CliError> {
    let mut r = csv::Reader::from_reader(input);
    Ok(r.deserialize().collect::<Result<Vec<CsvRow>, _>>()?)
}

/// Color permutation as a map between color indices.
pub fn permutation_indices(
    colors: &[CosetLabel],
    perm: &BTreeMap<CosetLabel, CosetLabel>,
) -> BTreeMap<usize, usize> {
    let index = |l: &CosetLabel| colors.iter().position(|c| c == l).expect("labels come from the coloring");
    perm.iter().map(|(a, b)| (index(a), index(b))).collect()
}
