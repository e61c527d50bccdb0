//! Real Gamma function and Pochhammer symbols.

use crate::EvalError;

/// Lanczos coefficients (g = 10.900511, n = 11), from Pugh's "An Analysis of
/// the Lanczos Gamma Approximation" (2004), p. 116. Relative error of the
/// resulting Gamma is below 1e-14 across the range this crate uses.
const LANCZOS_DK: [f64; 11] = [
    2.48574089138753565546e-5,
    1.05142378581721974210,
    -3.45687097222016235469,
    4.51227709466894823700,
    -2.98285225323576655721,
    1.05639711577126713077,
    -1.95428773191645869583e-1,
    1.70970543404441224307e-2,
    -5.71926117404305781283e-4,
    4.63399473359905636708e-6,
    -2.71994908488607703910e-9,
];

const LANCZOS_R: f64 = 10.900511;
const TWO_SQRT_E_OVER_PI: f64 = 1.8603827342052657173362492472666631120594218414085755;

/// Largest x with Γ(x) finite in f64.
const GAMMA_OVERFLOW_X: f64 = 171.62;

fn lanczos_sum(shifted: impl Fn(usize) -> f64) -> f64 {
    let mut s = LANCZOS_DK[0];
    for (i, dk) in LANCZOS_DK.iter().enumerate().skip(1) {
        s += dk / shifted(i);
    }
    s
}

/// Γ(x) for real x.
///
/// Poles (x a non-positive integer) and overflow (x beyond ~171.62, or a
/// reflection denominator underflowing) are reported as errors rather than
/// returned as infinities.
pub fn gamma_real(x: f64) -> Result<f64, EvalError> {
    if !x.is_finite() {
        return Err(EvalError::Domain("gamma argument must be finite"));
    }
    if x <= 0.0 && x == libm::floor(x) {
        return Err(EvalError::Pole(x));
    }
    if x > GAMMA_OVERFLOW_X {
        return Err(EvalError::Overflow);
    }
    let value = if x < 0.5 {
        // reflection: Γ(x) = π / (sin(πx) Γ(1-x))
        let s = lanczos_sum(|i| i as f64 - x);
        core::f64::consts::PI
            / (libm::sin(core::f64::consts::PI * x)
                * s
                * TWO_SQRT_E_OVER_PI
                * libm::pow((0.5 - x + LANCZOS_R) / core::f64::consts::E, 0.5 - x))
    } else if x <= 100.0 {
        let s = lanczos_sum(|i| x + i as f64 - 1.0);
        s * TWO_SQRT_E_OVER_PI
            * libm::pow((x - 0.5 + LANCZOS_R) / core::f64::consts::E, x - 0.5)
    } else {
        // the unscaled power term overflows before Γ itself does; go
        // through log space for large arguments
        let s = lanczos_sum(|i| x + i as f64 - 1.0);
        let ln = libm::log(s * TWO_SQRT_E_OVER_PI)
            + (x - 0.5) * libm::log((x - 0.5 + LANCZOS_R) / core::f64::consts::E);
        libm::exp(ln)
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(EvalError::Overflow)
    }
}

/// Pochhammer symbol (λ)ₙ = λ(λ+1)···(λ+n-1), with (λ)₀ = 1.
///
/// Evaluated by the product form, so λ may be any real; if some factor
/// λ + k vanishes the symbol is exactly zero.
pub fn pochhammer(lam: f64, n: u32) -> Result<f64, EvalError> {
    if !lam.is_finite() {
        return Err(EvalError::Domain("pochhammer argument must be finite"));
    }
    let mut p = 1.0_f64;
    for k in 0..n {
        p *= lam + k as f64;
        if !p.is_finite() {
            return Err(EvalError::Overflow);
        }
    }
    Ok(p)
}
