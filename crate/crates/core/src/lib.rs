//! Finite models for comparing arbitrary mappings against bijections.
//!
//! The crate measures how far a mapping `f: X -> Y` between finite sets is
//! from being a bijection through its *deviation* `(X_f, Y \ f(X))`, orders
//! deviations, lifts the construction to finite abelian groups
//! (`(X / ker f, Y / f(X))`), and represents mappings as morphisms of Chu
//! spaces through the powerset embedding `f |-> (f, f^-1)`.
//!
//! Every statement about these constructions is registered in
//! [`verifier`] as an executable claim that is checked exhaustively over a
//! bounded universe of small carriers.
//!
//! Module map:
//! - [`finset`]: finite sets, mappings, subsets, partitions, deviations,
//!   canonical factorization and the refinement/deviation orders.
//! - [`powerset`]: powerset carriers, direct image `f~`, preimage `f^-1`
//!   and the identification maps `iota`/`kappa`.
//! - [`abgroup`]: finite abelian groups, Smith normal form, group deviations,
//!   embeddability, and brute-force element-table oracles.
//! - [`chu`]: Chu spaces, morphism validity and composition, the embedding of
//!   mappings, and the deviation of the evaluation matrix `e_X`.
//! - [`verifier`]: claim registry, enumeration engines and reports.

pub mod abgroup;
pub mod chu;
mod error;
pub mod finset;
pub mod powerset;
pub mod verifier;

pub use error::{Error, Result};
