//! Exact-arithmetic toroidal Lie algebras, their module categories, and the
//! formal distribution calculus that splits mixed representations into
//! restricted and evaluation parts.
//!
//! The toroidal Lie algebra here is
//!
//! ```text
//! τ = (𝔤 ⊗ ℂ[t₀^±1] ⊕ ℂK₀) ⊗ ℂ[t₁^±1,…,t_r^±1] ⊕ Σᵢ ℂKᵢ
//! ```
//!
//! over a finite-dimensional simple 𝔤, with the base field restricted to the
//! rationals so every identity can be checked by exact comparison. The crate
//! provides:
//!
//! - [`exact`]: rational scalars, sparse Laurent polynomials, truncated power
//!   series, and the power-series inverse expansion used by the projection ψ.
//! - [`lie`]: structure-constant tables for sl₂/sl₃ (or user tables), the τ
//!   bracket, and Jacobi/antisymmetry checkers.
//! - [`modules`]: evaluation modules on finite-dimensional 𝔤-modules, PBW
//!   truncations of induced affine modules, restricted evaluation modules,
//!   and tensor products — all presented through one action-oracle trait.
//! - [`formal`]: generating series a(x₀,x̲) acting on vectors, delta-function
//!   identities, residues, the projection ψ and the direct-sum splitting of
//!   series into restricted and polynomial-annihilated parts.
//! - [`categories`]: witness-based certification of category membership, the
//!   representation splitter π = π_R + π_E with commutation and integrability
//!   transport checks, and exact Vandermonde factor recovery.
//! - [`harness`]: JSON descriptors, deterministic verification suites, and
//!   machine-readable reports backing the `toroidal` command-line tool.
//!
//! Every identity is verified coefficient-wise on caller-specified finite
//! exponent windows; the library never claims an identity outside a window,
//! and truncated modules refuse to answer (rather than approximate) when an
//! operation would leave their valid range.
//!
//! See the crate examples for a tour: each major capability has a runnable
//! example under `examples/`.

#![forbid(unsafe_code)]

pub mod categories;
pub mod error;
pub mod exact;
pub mod formal;
pub mod harness;
pub mod lie;
pub mod modules;

pub use error::{Error, Result};
