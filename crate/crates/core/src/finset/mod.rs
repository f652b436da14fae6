//! Finite sets, mappings between them, and the deviation of a mapping from
//! bijectivity.
//!
//! Elements of a [`FiniteSet`] of size `n` are always the integers `0..n`;
//! labels only affect display. A [`Mapping`] is a total function stored as a
//! lookup table, and its [`Deviation`] is the pair of its kernel partition
//! `X_f` and the subset `Y \ f(X)` it misses.

mod deviation;
mod mapping;
mod partition;
mod subset;

pub use deviation::{
    canonical_factorization, classify, deviation, deviation_leq, image, kernel_partition, rho,
    Classification, Deviation, Factorization,
};
pub use mapping::{FiniteSet, Mapping};
pub use partition::Partition;
pub use subset::Subset;
