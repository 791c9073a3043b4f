//! Exact Lie-theoretic bookkeeping for the canonical variations of Hodge
//! structure over irreducible bounded symmetric domains.
//!
//! The crate is layered bottom-up:
//!
//! * [`rootsys`]: Cartan data, positive roots, Weyl reflections, strongly
//!   orthogonal cascades.
//! * [`repchar`]: Freudenthal multiplicities, Weyl dimensions, tensor,
//!   symmetric and exterior powers of characters, decomposition.
//! * [`schur`]: partitions, hook-content dimensions, Pieri and
//!   Littlewood–Richardson rules, the Cauchy and plethysm families.
//! * [`pvhs`]: the domain catalog, Hodge gradings, the graded kernel ideal of
//!   the iterated Higgs field and the checks built on it.
//! * [`higgs`]: a concrete matrix model of the type A Higgs field on
//!   `Λ^p(C^{p+q})`, generic over the scalar field.
//!
//! Matrix code is generic over [`Scalar`]; the aliases below pin the exact
//! instantiations every verification uses.

pub mod error;
pub mod higgs;
pub mod linalg;
pub mod pvhs;
pub mod repchar;
pub mod rootsys;
pub mod scalar;
pub mod schur;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary precision rationals; the default field for every exact check.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals, used where entries are known to stay small.
pub type SmallRational = num_rational::Rational64;

pub type RationalMatrix = linalg::Matrix<Rational>;
pub type RationalTangent = higgs::TangentMatrix<Rational>;
