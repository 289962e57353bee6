//! Complex-quaternion (biquaternion) spacetime algebra.
//!
//! The algebra C⊗H has eight real dimensions spanned by `{1, @, i, j, k, @i, @j, @k}`,
//! where `@` is a complex unit commuting with the quaternion units `i, j, k`.
//! Spacetime events live in the purely imaginary subspace `M` as `@t + ix + jy + kz`;
//! Lorentz transformations act by rotor multiplication `q -> w q conj_c(conj_q(w))`
//! instead of 4x4 matrices, and the four Maxwell equations collapse into the single
//! identity `DF + J = 0` between two CQ numbers.
//!
//! Every algebraic claim ships with an independent numerical cross-check:
//! a hand-entered basis product table, a 4x4 matrix bridge for Lorentz
//! transformations, and component-wise classical Maxwell residuals computed
//! without any CQ arithmetic.
//!
//! Modules:
//! - [`algebra`]: the C⊗H arithmetic, conjugations, and subspace predicates
//! - [`minkowski`]: events, the embedding into `M`, proper intervals, scalar products
//! - [`lorentz`]: rotors for rotations and boosts, plus the matrix oracle bridge
//! - [`fields`]: scalar/potential/current fields with polynomial and closure backends
//! - [`electrodynamics`]: the D and D-bar operators, field strength, gauge
//!   transformations, and Maxwell residuals in both CQ and classical form
//! - [`verify`]: the seeded identity-verification suite behind the CLI

pub mod algebra;
pub mod electrodynamics;
mod error;
pub mod fields;
pub mod lorentz;
pub mod minkowski;
pub mod verify;

pub use algebra::{CqNumber, StructureConstants};
pub use error::{Error, Result};
pub use lorentz::{LorentzMatrix, Rotor, UnitDirection};
pub use minkowski::Event;
