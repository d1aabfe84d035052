//! Exact element-order sums of finite abelian groups.
//!
//! For a finite group `G`, `m(G)` is the sum of `1/o(a)` over all elements
//! and `ψ(G)` the sum of `o(a)`. This crate computes both exactly for every
//! finite abelian group, enumerates the abelian groups of a given order, and
//! checks a family of inequalities comparing `m(G)` with `m(Z_n)`.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! parallel sweeps live in the `ordsum` crate.

#![no_std]

extern crate alloc;

pub mod abelian;
pub mod bounds;
mod error;
pub mod numtheory;
pub mod ordersum;
mod rational;

pub use abelian::{enumerate_abelian_groups, AbelianGroup};
pub use bounds::{BoundReport, CheckId, Verdict};
pub use error::Error;
pub use numtheory::{factorize, Factorization, Partition, TwoAdicSplit};
pub use ordersum::{m_bruteforce, m_cyclic, m_group, order_distribution, psi_group, OrderDistribution};
pub use rational::Rational;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Resource caps shared by enumeration and the brute-force oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of isomorphism classes a single enumeration may produce.
    pub class_cap: u64,
    /// Maximum group order the brute-force oracle will walk.
    pub element_cap: u64,
}

impl Limits {
    pub const DEFAULT_CLASS_CAP: u64 = 1_000_000;
    pub const DEFAULT_ELEMENT_CAP: u64 = 100_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            class_cap: Self::DEFAULT_CLASS_CAP,
            element_cap: Self::DEFAULT_ELEMENT_CAP,
        }
    }
}
