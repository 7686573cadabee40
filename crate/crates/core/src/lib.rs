//! Bicovariant first-order differential calculi on the function algebra
//! `F(G)` of a finite group `G`.
//!
//! The crate builds the pieces bottom-up:
//!
//! - [`group`]: Cayley tables, conjugacy classes, centralizers, irreps.
//! - [`linalg`]: a small dense complex matrix kernel.
//! - [`hopf`]: the dual Hopf algebras `F(G)` and `CG`.
//! - [`double`]: the Drinfeld double `D(G)` and its representations `ρ^μ_C`.
//! - [`bicov`]: bicovariant bimodules, their braiding matrix `Λ` and the
//!   Yang–Baxter check.
//! - [`cohom`]: the Hochschild complex with values in the left-invariant
//!   forms, invariant cocycles, and the classification of calculi.
//! - [`calculus`]: first-order calculi, the universal calculus and
//!   quantum Lie algebra data.
//!
//! Scalars are `f64` complex numbers; identities are checked by residuals
//! against a tolerance ([`DEFAULT_TOL`] unless overridden).

pub mod bicov;
pub mod calculus;
pub mod cohom;
pub mod double;
pub mod error;
pub mod group;
pub mod hopf;
pub mod linalg;

pub use bicov::BicovBimodule;
pub use calculus::{FirstOrderCalculus, QuantumLie};
pub use cohom::{Cochain, CochainSpace};
pub use double::{DoubleElement, DoubleRep};
pub use error::{Error, Result};
pub use group::{catalog, CatalogGroup, ConjugacyClass, GroupTable, Irrep};
pub use hopf::{FunElement, GroupAlgElement, TensorElement};
pub use linalg::{CMatrix, C64};

/// Default numeric tolerance for residual checks and rank decisions.
pub const DEFAULT_TOL: f64 = 1e-9;
