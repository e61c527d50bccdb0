//! Numerical evaluation of the Holtsmark distribution.
//!
//! The Holtsmark distribution describes the electric micro-field at a point
//! in a plasma of uncorrelated ions (and the gravitational force of randomly
//! placed bodies). Two functions matter in practice:
//!
//! * `S(β)` — the probability density of the symmetric stable law with index
//!   3/2, defined by `S(β) = (1/π) ∫₀^∞ cos(βx) exp(-x^(3/2)) dx`,
//! * `H(β)` — the field-strength distribution
//!   `H(β) = (2β/π) ∫₀^∞ x sin(βx) exp(-x^(3/2)) dx`, related to `S` by
//!   `H(β) = -2β S'(β)`.
//!
//! Neither is elementary, but both admit several independent evaluation
//! routes. This crate implements five for `S` (Taylor series, asymptotic
//! expansion, a ₂F₃/₃F₄ hypergeometric form, a ₂F₂ + Airy `Bi` closed form,
//! and a Bessel-function closed form), three for `H`, an auto-dispatching
//! front door, and an adaptive-quadrature oracle of the defining integrals
//! that everything is validated against.
//!
//! Layout:
//!
//! * [`specfun`] — self-contained kernels: `Γ`, Pochhammer, generalized
//!   hypergeometric series `pFq` with complex argument, Airy `Bi`/`Bi'`,
//!   Bessel `J` of order ±1/3, ±2/3.
//! * [`holtsmark`] — the analytical evaluators and the `s_auto`/`h_auto`
//!   dispatchers.
//! * [`oracle`] — ground-truth quadrature of the defining integrals plus
//!   global identity checks (Fourier transform, normalization).
//!
//! All operations are pure functions of their inputs: no globals, no caches,
//! no interior mutability. Evaluating grids from many threads is safe.
//! The crate is `no_std` and allocation-free; float math comes from `libm`.

#![no_std]
#![forbid(unsafe_code)]
// reference constants are frozen at more digits than f64 holds; the literal
// rounds to the intended double
#![allow(clippy::excessive_precision)]
// `!(x >= a)` guards are deliberate: they send NaN down the error path
#![allow(clippy::neg_cmp_op_on_partial_ord)]

#[cfg(any(test, feature = "std"))]
extern crate std;

use core::fmt;

mod dd;
mod kahan;

pub mod holtsmark;
pub mod oracle;
pub mod specfun;

pub use holtsmark::{
    eval, h_airy_closed, h_asymptotic, h_auto, h_auto_with, h_bessel_closed, h_series, s_airy_closed,
    s_asymptotic, s_asymptotic_truncated, s_auto, s_auto_with, s_bessel_closed, s_lee, s_series,
    s_series_truncated, EvalResult, Function, MethodId,
};
pub use oracle::{fourier_check, h_mass, h_normalization, h_quadrature, s_quadrature, QuadratureReport};
pub use specfun::{
    airy_bi, airy_bi_prime, bessel_j_frac, gamma_real, pfq, pochhammer, ComplexValue,
    HypergeometricSpec, PfqEval, SeriesControl,
};

/// Error type shared by every evaluation routine in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvalError {
    /// Gamma pole: argument is zero or a negative integer.
    Pole(f64),
    /// The result (or an intermediate) exceeds the representable range.
    Overflow,
    /// A series failed to meet its truncation criterion within `max_terms`.
    NoConvergence {
        /// Terms consumed before giving up.
        terms: u32,
    },
    /// Catastrophic cancellation: the running peak of the partial-sum
    /// magnitude exceeded `cancel_guard` times the final magnitude, so the
    /// result would carry no trustworthy digits.
    PrecisionLoss {
        /// Ratio of peak partial-sum magnitude to final magnitude.
        peak_ratio: f64,
    },
    /// Argument outside the supported range of the routine.
    Domain(&'static str),
    /// Invalid control parameters or hypergeometric spec.
    Invalid(&'static str),
    /// Adaptive quadrature exceeded its evaluation budget.
    BudgetExceeded {
        /// Integrand evaluations consumed.
        evaluations: u32,
    },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Pole(x) => write!(f, "gamma pole at x = {x}"),
            EvalError::Overflow => write!(f, "result overflows f64"),
            EvalError::NoConvergence { terms } => {
                write!(f, "series did not converge within {terms} terms")
            }
            EvalError::PrecisionLoss { peak_ratio } => write!(
                f,
                "precision loss: peak partial sum exceeded the cancellation guard (ratio {peak_ratio:.3e})"
            ),
            EvalError::Domain(what) => write!(f, "domain error: {what}"),
            EvalError::Invalid(what) => write!(f, "invalid argument: {what}"),
            EvalError::BudgetExceeded { evaluations } => {
                write!(f, "quadrature budget exceeded after {evaluations} evaluations")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for EvalError {}
