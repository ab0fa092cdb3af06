//! Exact lattice algebra for coincidence site lattices and sublattice colorings.
//!
//! Everything here is exact: bases are rational matrices with arbitrary-precision
//! integer entries, and every predicate (membership, equality of lattices,
//! orthogonality) is decided without floating point.
//!
//! Conventions used throughout the crate:
//!
//! * lattices are row spans of their basis matrices;
//! * isometries act on column vectors, `x ↦ R·x`, so a lattice basis `B`
//!   is mapped to `B·Rᵀ`;
//! * a lattice is always stored in canonical scaled Hermite normal form, so
//!   two lattices are equal as point sets iff their bases are equal.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod coloring;
pub mod csl;
mod error;
pub mod exact;
pub mod lattice;
pub mod quat;

pub use coloring::{ColorReport, Coloring, SigmaRelation, Stuv};
pub use csl::{Isometry, IsometryKind, Parametrization};
pub use error::{Error, Result};
pub use exact::{IntMatrix, RatMatrix};
pub use lattice::{CosetLabel, Lattice, QuotientStructure};
pub use quat::{AdmissiblePair, Quaternion};

/// Re-exported so downstream crates name the same integer types.
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
