//! Exact-arithmetic laboratory for regenerating codes with repair secrecy.
//!
//! Everything in this crate is exact: code symbols live in GF(256), entropies
//! are matrix ranks over that field, and tradeoff bounds are arbitrary-precision
//! rationals. There is no floating point anywhere, so every check is an
//! algebraic identity or inequality that either holds or does not.
//!
//! The crate is organized bottom-up:
//!
//! * [`gf256`] / [`matrix`] — the finite field and dense linear algebra
//!   (rank, solve, Vandermonde generation).
//! * [`codes`] — product-matrix regenerating codes: plain MBR, key-padded
//!   secure variants, and multi-level composites built by separate coding.
//! * [`entropy`] — a rank-based entropy oracle over the linear maps of a
//!   built code; joint/conditional entropy, mutual information, node-index
//!   symmetrization, and secrecy certification.
//! * [`bounds`] — exact-rational storage/bandwidth tradeoff machinery:
//!   corner points, outer-bound lines, intersections, and region reports.
//! * [`proofkit`] — machine checks of the converse-proof machinery
//!   (functional-dependency closure, the exchange inequality and its
//!   corollaries, the inductive chains, and the final bound evaluation)
//!   on concrete code instances.

pub mod bounds;
pub mod codes;
pub mod entropy;
pub mod error;
pub mod gf256;
pub mod matrix;
pub mod proofkit;
pub mod ratio;

pub use error::{Error, Result};
pub use gf256::Gf256;
pub use matrix::FieldMatrix;
