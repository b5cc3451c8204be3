//! Exact-arithmetic cohomology of finite-dimensional Lie algebras over the
//! rationals.
//!
//! The crate computes Chevalley-Eilenberg cohomology `H^n(L,V)` by exact rank
//! computations over `Q`, provides the structure theory needed to take an
//! algebra apart (Killing form, solvable radical, Levi decomposition), and
//! builds on both to decide whether an algebra is *2-trivial* — whether
//! `H^2(L,V)` vanishes for every finite-dimensional module `V`. Algebras that
//! are not 2-trivial get an explicit certificate: a concrete module together
//! with a 2-cocycle that is provably not a coboundary, re-checkable from
//! scratch by [`theorems::verify_certificate`].
//!
//! Module layout mirrors the layering of the computation:
//!
//! - [`exactlin`]: dense rational matrices; rank, kernel, solve, quotient
//!   bases via fraction-free elimination. Everything above is rank counting.
//! - [`liealg`]: Lie algebras as structure-constant tables; subspaces,
//!   ideals, quotients, direct sums.
//! - [`rep`]: finite-dimensional modules and their constructions (trivial,
//!   adjoint, dual, tensor, restriction, inflation, invariants).
//! - [`cohomology`]: the Chevalley-Eilenberg complex, `H^n` with
//!   deterministic representatives, and induced actions on cohomology.
//! - [`structure`]: Killing form, radical, derived/lower-central series,
//!   Levi decomposition.
//! - [`theorems`]: dimension-identity verifiers, Whitehead batteries, the
//!   2-triviality classifier and its certificates.
//! - [`catalog`]: named, validated example algebras with expected values.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to use concurrently without synchronization.

pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exactlin;
pub mod liealg;
pub mod rep;
pub mod structure;
pub mod theorems;

pub use error::Error;
