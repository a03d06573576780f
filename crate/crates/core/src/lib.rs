//! Exact computer algebra for integral-form Jack polynomials `J_μ^(α)` and
//! the combinatorics of their Schur coefficients.
//!
//! The central object is the tilde form `J̃_μ^(α) = α^n J_μ^(1/α)`: the
//! coefficient of each Schur function in it, expanded in either the shifted
//! binomial basis `{C(α+k, n)}` or the falling factorial basis
//! `{C(α,k)·k!}`, is conjectured to have nonnegative integer coefficients
//! with a real-rooted companion polynomial. This crate constructs the Jack
//! expansions exactly over Q(α), extracts both coefficient tables, and
//! machine-verifies every identity in the surrounding theory (Eulerian and
//! Stirling specializations, quasi-Yamanouchi tableau generating functions,
//! RSK and fundamental quasisymmetric expansions, rook and hit number
//! factorizations) at desk scale through the [`verify`] registry.
//!
//! All arithmetic is exact: arbitrary-precision rationals, dense polynomials
//! in α, and rational functions where orthogonalization transiently needs
//! them. There is no floating point anywhere.

pub mod error;
pub mod exact;
pub mod jack;
pub mod partition;
pub mod perm;
pub mod rook;
pub mod symfunc;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{AlphaPoly, Rat, RatFun};
pub use partition::{partitions_of, Cell, Partition};
