//! Self-contained special-function kernels.
//!
//! Everything the Holtsmark evaluators need and nothing more: the real Gamma
//! function, Pochhammer symbols, generalized hypergeometric series `pFq`
//! with complex argument, Airy `Bi`/`Bi'`, and Bessel `J` of order ±1/3 and
//! ±2/3. All kernels are pure and reentrant.

use crate::EvalError;
use core::ops::{Add, Mul, Neg, Sub};

pub(crate) mod airy;
mod bessel;
mod gamma;
mod hyper;

pub use airy::{airy_bi, airy_bi_prime};
pub use bessel::bessel_j_frac;
pub use gamma::{gamma_real, pochhammer};
pub use hyper::{pfq, PfqEval};

/// A complex number as a plain (re, im) pair of finite doubles.
///
/// The closed forms only ever feed pure-imaginary arguments `±4iβ³/27` into
/// the hypergeometric series, but the type is a full complex value so the
/// identity tests can exercise arbitrary arguments.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl ComplexValue {
    pub const ZERO: ComplexValue = ComplexValue { re: 0.0, im: 0.0 };
    pub const ONE: ComplexValue = ComplexValue { re: 1.0, im: 0.0 };

    #[inline]
    pub fn new(re: f64, im: f64) -> Self {
        ComplexValue { re, im }
    }

    /// Pure-imaginary value `iy`.
    #[inline]
    pub fn imaginary(y: f64) -> Self {
        ComplexValue { re: 0.0, im: y }
    }

    #[inline]
    pub fn conj(self) -> Self {
        ComplexValue { re: self.re, im: -self.im }
    }

    /// Modulus |z|.
    #[inline]
    pub fn magnitude(self) -> f64 {
        libm::hypot(self.re, self.im)
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        ComplexValue { re: self.re * s, im: self.im * s }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl From<f64> for ComplexValue {
    fn from(re: f64) -> Self {
        ComplexValue { re, im: 0.0 }
    }
}

impl Add for ComplexValue {
    type Output = ComplexValue;
    fn add(self, o: ComplexValue) -> ComplexValue {
        ComplexValue::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for ComplexValue {
    type Output = ComplexValue;
    fn sub(self, o: ComplexValue) -> ComplexValue {
        ComplexValue::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for ComplexValue {
    type Output = ComplexValue;
    fn mul(self, o: ComplexValue) -> ComplexValue {
        ComplexValue::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Neg for ComplexValue {
    type Output = ComplexValue;
    fn neg(self) -> ComplexValue {
        ComplexValue::new(-self.re, -self.im)
    }
}

/// Parameters of a generalized hypergeometric series `pFq(α; γ; z)`.
///
/// Construction validates what the series needs: no denominator parameter is
/// zero or a negative integer, `p <= q + 1`, and everything is finite.
#[derive(Debug, Clone, Copy)]
pub struct HypergeometricSpec<'a> {
    numerators: &'a [f64],
    denominators: &'a [f64],
    argument: ComplexValue,
}

impl<'a> HypergeometricSpec<'a> {
    pub fn new(
        numerators: &'a [f64],
        denominators: &'a [f64],
        argument: ComplexValue,
    ) -> Result<Self, EvalError> {
        if numerators.len() > denominators.len() + 1 {
            return Err(EvalError::Invalid("pFq requires p <= q + 1"));
        }
        if numerators.iter().chain(denominators).any(|p| !p.is_finite()) {
            return Err(EvalError::Invalid("pFq parameters must be finite"));
        }
        if !argument.is_finite() {
            return Err(EvalError::Invalid("pFq argument must be finite"));
        }
        if denominators.iter().any(|&g| g <= 0.0 && g == libm::floor(g)) {
            return Err(EvalError::Invalid(
                "pFq denominator parameter is zero or a negative integer",
            ));
        }
        Ok(HypergeometricSpec { numerators, denominators, argument })
    }

    pub fn numerators(&self) -> &[f64] {
        self.numerators
    }

    pub fn denominators(&self) -> &[f64] {
        self.denominators
    }

    pub fn argument(&self) -> ComplexValue {
        self.argument
    }
}

/// Truncation control for series evaluation.
#[derive(Debug, Clone, Copy)]
pub struct SeriesControl {
    /// Stop once two consecutive terms fall below `rel_tol * |partial sum|`.
    pub rel_tol: f64,
    /// Hard cap on the number of terms; exceeding it is `NoConvergence`.
    pub max_terms: u32,
    /// Maximum allowed ratio of peak partial-sum magnitude to final
    /// magnitude; exceeding it is `PrecisionLoss`.
    pub cancel_guard: f64,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl { rel_tol: 1e-15, max_terms: 500, cancel_guard: 1e12 }
    }
}

impl SeriesControl {
    pub(crate) fn validate(&self) -> Result<(), EvalError> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(EvalError::Invalid("rel_tol must lie in (0, 1)"));
        }
        if self.max_terms == 0 {
            return Err(EvalError::Invalid("max_terms must be at least 1"));
        }
        if !(self.cancel_guard > 1.0) {
            return Err(EvalError::Invalid("cancel_guard must exceed 1"));
        }
        Ok(())
    }
}
