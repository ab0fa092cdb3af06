//! Built-in lattice names and parsing of isometry arguments.

use std::path::Path;

use csl_core::csl::Isometry;
use csl_core::lattice::named;
use csl_core::quat::{self, AdmissiblePair, Quaternion};
use csl_core::Lattice;

use crate::formats::{IsometryJson, LatticeJson};
use crate::CliError;

/// Names accepted wherever a lattice is expected.
pub const LATTICE_NAMES: &[&str] = &["Z2", "Z3", "P", "B", "F", "Z4", "L", "D4", "J", "ImL", "ImJ", "2ImJ"];

/// `Γ_P = Im 𝕃 = ℤ³`, `Γ_B = Im 𝕁`, `Γ_F` its dual, `D₄ = 𝕁`, `ℤ⁴ = 𝕃`.
pub fn lattice_by_name(name: &str) -> Option<Lattice> {
    Some(match name {
        "Z2" => named::square(),
        "Z3" | "P" => named::cubic_primitive(),
        "B" => named::cubic_body(),
        "F" => named::cubic_face(),
        "Z4" | "L" => named::lipschitz(),
        "D4" | "J" => named::hurwitz(),
        "ImL" => named::im_lipschitz(),
        "ImJ" => named::im_hurwitz(),
        "2ImJ" => named::twice_im_hurwitz(),
        _ => return None,
    })
}

/// A built-in name, or the path of a lattice JSON file.
pub fn resolve_lattice(spec: &str) -> Result<Lattice, CliError> {
    if let Some(l) = lattice_by_name(spec) {
        return Ok(l);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(CliError::Usage(format!(
            "unknown lattice {spec:?}: expected one of {} or a JSON file",
            LATTICE_NAMES.join(", ")
        )));
    }
    let json: LatticeJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    json.to_lattice()
}

pub fn parse_quaternion(s: &str) -> Result<Quaternion, CliError> {
    Ok(s.parse::<Quaternion>()?)
}

/// Two quaternions, as `(q);(p)`, `(q),(p)` or `(q) (p)`.
pub fn parse_pair(s: &str) -> Result<(Quaternion, Quaternion), CliError> {
    let groups: Vec<&str> = s
        .split(')')
        .map(|g| g.trim_start_matches([';', ',', ' ']).trim())
        .filter(|g| !g.is_empty())
        .collect();
    if groups.len() != 2 {
        return Err(CliError::Usage(format!("expected two quaternions, got {s:?}")));
    }
    let q = parse_quaternion(&format!("{})", groups[0]))?;
    let p = parse_quaternion(&format!("{})", groups[1]))?;
    Ok((q, p))
}

/// How the user named an isometry; at most one of the three sources.
#[derive(Clone, Debug, Default)]
pub struct IsometrySpec {
    pub quat: Option<String>,
    pub pair: Option<String>,
    pub matrix_file: Option<String>,
    /// `−R_q` in three dimensions, `T_{q,p}` in four.
    pub rotoreflection: bool,
}

impl IsometrySpec {
    /// The isometry in dimension `dim`; the identity if nothing was given.
    pub fn resolve(&self, dim: usize) -> Result<Isometry, CliError> {
        let given = [self.quat.is_some(), self.pair.is_some(), self.matrix_file.is_some()];
        if given.iter().filter(|&&g| g).count() > 1 {
            return Err(CliError::Usage("give at most one of --quat, --pair, --matrix-file".into()));
        }
        if self.rotoreflection && self.quat.is_none() && self.pair.is_none() {
            return Err(CliError::Usage("--rotoreflection needs --quat or --pair".into()));
        }
        let r = if let Some(q) = &self.quat {
            if dim != 3 {
                return Err(CliError::Usage(format!("--quat parametrizes rotations of 3-space, lattice has dim {dim}")));
            }
            let r = quat::cayley_so3(&parse_quaternion(q)?)?;
            if self.rotoreflection { r.negated() } else { r }
        } else if let Some(p) = &self.pair {
            if dim != 4 {
                return Err(CliError::Usage(format!("--pair parametrizes isometries of 4-space, lattice has dim {dim}")));
            }
            let (q, p) = parse_pair(p)?;
            let pair = AdmissiblePair::new(q, p)?;
            if self.rotoreflection {
                quat::rotoreflection_from_pair(&pair)?
            } else {
                quat::so4_from_pair(&pair)?
            }
        } else if let Some(path) = &self.matrix_file {
            let json: IsometryJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            json.to_isometry()?
        } else {
            Isometry::identity(dim)
        };
        if r.dim() != dim {
            return Err(CliError::Usage(format!("isometry has dim {}, lattice has dim {dim}", r.dim())));
        }
        Ok(r)
    }
}
