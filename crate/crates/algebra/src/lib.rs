//! Exact symbolic engine for multimode bosonic operator algebra.
//!
//! Operators live in canonical normal order over the three modes of a
//! four-wave-mixing process (pump, stokes, signal); coefficients are exact
//! multivariate polynomials in the model symbols with complex-rational
//! constants, so every identity the engine produces is a structural one —
//! there is no floating point anywhere in this crate except in the optional
//! numeric evaluation of a finished polynomial.
//!
//! The pieces:
//!
//! * [`word::NormalWord`] / [`operator::OperatorPoly`] — normally ordered
//!   words and their ring operations (products re-order via `[a, a†] = 1`,
//!   distinct modes commute freely).
//! * [`scalar::ScalarPoly`] — the coefficient ring over `g`, `t`, `ω1..ω3`,
//!   `α`, `ᾱ`.
//! * [`fwm`] — the four-wave-mixing Hamiltonian, Heisenberg derivatives in
//!   the rotated frame, the short-time Taylor solution and factorial-moment
//!   operators.
//! * [`expect`] — expectation values in the coherent-pump ⊗ vacuum state.
//! * [`render`] / [`json`] — deterministic text/LaTeX and JSON output.

pub mod error;
pub mod expect;
pub mod fwm;
pub mod json;
pub mod operator;
pub mod render;
pub mod scalar;
pub mod symbol;
pub mod word;

pub use error::AlgebraError;
pub use expect::{expect_coherent_vacuum, CoherentVacuumState};
pub use fwm::{
    factorial_moment_operator, heisenberg_derivative, taylor_evolve, taylor_evolve_with_max,
    Hamiltonian, DEFAULT_MAX_TAYLOR_ORDER,
};
pub use operator::{commutator, normal_order_product, OperatorPoly};
pub use scalar::{Coefficient, Monomial, Rational, ScalarPoly};
pub use symbol::{Symbol, SymbolValues};
pub use word::{Mode, ModePowers, NormalWord};
