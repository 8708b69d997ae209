//! Computational algebra for group codes: ideals in finite group algebras KG
//! viewed as linear codes of length |G|.
//!
//! The crate builds finite fields GF(p^m) and finite groups as Cayley tables,
//! does exact arithmetic in KG (convolution product, adjoint, Euclidean and
//! Hermitian forms), and analyzes the codes that ideals of KG cut out of
//! K^|G|: canonical bases, duals, exact minimum distances, and linear
//! complementary pairs with their split idempotents and security parameters.

pub mod algebra;
pub mod codes;
pub mod error;
mod expr;
pub mod field;
pub mod group;
pub mod lcp;
pub mod linalg;

pub use algebra::AlgebraElement;
pub use codes::{DistanceOutcome, GroupCode, WeightEnumerator, DEFAULT_CODEWORD_BUDGET};
pub use error::Error;
pub use field::{Field, FieldElement};
pub use group::Group;
pub use lcp::{DualityMode, LcpReport, SweepSummary, DEFAULT_SWEEP_BUDGET};
pub use linalg::{solve_in_sum, Matrix, Subspace};
