//! Exact combinatorics, polynomial algebra and point counting for the exotic
//! nilpotent cone of `Sp(2n)`.
//!
//! The crate is organised by subsystem:
//!
//! - [`partitions`]: partitions, bi-partitions, marked partitions and the
//!   bijection between the last two.
//! - [`weyl`]: the hyperoctahedral group `W(C_n)` as signed permutations,
//!   weights, the special elements `w_λ` and the weight sets they cut out.
//! - [`algebra`]: rationals, multivariate polynomials, torus characters,
//!   Pfaffians and exact linear algebra.
//! - [`nilcone`]: the defining invariants `P_1..P_n`, membership, Jordan data,
//!   marked-partition invariants, orbit representatives and dimensions.
//! - [`joseph`]: K-polynomials of presented subvarieties, Joseph polynomials,
//!   the Macdonald polynomials `D(μ, ν)` and the representations they span.
//! - [`charp`]: point-level checks over `F_2` and `F_4` of the map
//!   `(X1, X2) ↦ X1·X1ᵀ + X2`.
//! - [`verify`]: the named verification suites driven by the CLI.

pub mod algebra;
pub mod charp;
mod error;
pub mod joseph;
pub mod nilcone;
pub mod partitions;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
