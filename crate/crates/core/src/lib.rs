//! Exact construction and verification of generalized vector (cross) products.
//!
//! Everything runs over the rationals, so each identity check is an exact
//! equality. The crate provides:
//!
//! * [`Rational`] and [`Vector`]: exact scalars and dense vectors.
//! * [`ProductTable`]: bilinear products given by structure constants, with
//!   the canonical 3D and 7D products.
//! * [`identities`]: the ternary product `{a,b,c}`, its rank-4 tensor, the
//!   identity checkers and basis-sum formulas, and the dimension obstruction
//!   `5n(n-1)(n-3)(n-7) = 0`.
//! * [`cayley_dickson`]: the doubling ladder up to the sedenions and the 7D
//!   product as half the octonion commutator.
//! * [`iso`]: exhaustive signed-permutation search between tables.
//! * [`falsify`]: certificates of failure for candidate products in other
//!   dimensions.

pub mod cayley_dickson;
pub mod error;
pub mod falsify;
pub mod identities;
pub mod iso;
pub mod rational;
pub mod sampling;
pub mod suite;
pub mod table;
pub mod vector;

pub use cayley_dickson::{CDElement, HurwitzReport};
pub use error::Error;
pub use identities::{IdentityId, IdentityReport, ObstructionReport, Status, TernaryTensor};
pub use iso::SignedPermutation;
pub use rational::Rational;
pub use sampling::Sampler;
pub use suite::{verify_table, SuiteReport};
pub use table::{Canonical, Entry, ProductTable};
pub use vector::Vector;
