use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generators span a lattice of rank {rank}, expected {dim}")]
    RankDeficient { rank: usize, dim: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("lattices are not commensurate")]
    Incommensurate,
    #[error("not a sublattice of the parent lattice")]
    NotSublattice,
    #[error("point is not in the lattice")]
    NotInLattice,
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("index {0} is too large to enumerate cosets")]
    IndexTooLarge(String),
    #[error("quaternion is zero")]
    ZeroQuaternion,
    #[error("quaternion is not a Hurwitz integer")]
    NotHurwitz,
    #[error("quaternion is not primitive")]
    NotPrimitive,
    #[error("quaternion pair is not admissible: |q|^2 |p|^2 = {0} is not a perfect square")]
    NotAdmissible(String),
    #[error("odd part of zero is undefined")]
    OddPartOfZero,
    #[error("isometry is not a color coincidence")]
    NotColorCoincidence,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
