//! Closed-form evaluators: Lee's ₂F₃/₃F₄ formula, the ₂F₂ + Airy form, and
//! the ₂F₂ + Bessel form.
//!
//! The hypergeometric arguments are the pure-imaginary pair ±4iβ³/27; each
//! conjugate pair is evaluated explicitly and combined, with a diagnostic
//! assertion that the combination is real (the imaginary parts cancel
//! bit-exactly because the series recurrence is sign-symmetric). Validity in
//! β is governed by the cancellation guard in `SeriesControl`, not by a
//! hard-coded cut: past β ≈ 5.8 under the default guard the ₂F₂ evaluation
//! reports `PrecisionLoss`.

use crate::holtsmark::{EvalResult, MethodId};
use crate::specfun::airy::airy_bi_pair;
use crate::specfun::{bessel_j_frac, gamma_real, pfq, ComplexValue, HypergeometricSpec, PfqEval, SeriesControl};
use crate::EvalError;
use core::f64::consts::PI;

/// Measured worst-case relative error of the Airy/Bessel kernels on the
/// ranges the closed forms use; enters the composed error estimates.
const KERNEL_REL_ERR: f64 = 5e-12;

/// One conjugate pair pFq(α; γ; ±iu).
fn conjugate_pair(
    nums: &[f64],
    dens: &[f64],
    u: f64,
    ctl: &SeriesControl,
) -> Result<(PfqEval, PfqEval), EvalError> {
    let plus = pfq(&HypergeometricSpec::new(nums, dens, ComplexValue::imaginary(u))?, ctl)?;
    let minus = pfq(&HypergeometricSpec::new(nums, dens, ComplexValue::imaginary(-u))?, ctl)?;
    Ok((plus, minus))
}

const F_NUM: [f64; 2] = [1.0, 1.5];
const F_DEN: [f64; 2] = [4.0 / 3.0, 5.0 / 3.0];
const G_NUM: [f64; 2] = [2.0, 2.5];
const G_DEN: [f64; 2] = [7.0 / 3.0, 8.0 / 3.0];

/// S(β) by Lee's hypergeometric formula: three pFq values at the real
/// negative argument -4β⁶/3⁶.
pub fn s_lee(beta: f64, ctl: &SeriesControl) -> Result<EvalResult, EvalError> {
    if !(beta >= 0.0) {
        return Err(EvalError::Domain("s_lee requires beta >= 0"));
    }
    let b2 = beta * beta;
    let w = ComplexValue::from(-4.0 * b2 * b2 * b2 / 729.0);
    let t1 = pfq(
        &HypergeometricSpec::new(&[5.0 / 12.0, 11.0 / 12.0], &[1.0 / 3.0, 0.5, 5.0 / 6.0], w)?,
        ctl,
    )?;
    let t2 = pfq(
        &HypergeometricSpec::new(
            &[0.75, 1.0, 1.25],
            &[2.0 / 3.0, 5.0 / 6.0, 7.0 / 6.0, 4.0 / 3.0],
            w,
        )?,
        ctl,
    )?;
    let t3 = pfq(
        &HypergeometricSpec::new(&[13.0 / 12.0, 19.0 / 12.0], &[7.0 / 6.0, 1.5, 5.0 / 3.0], w)?,
        ctl,
    )?;
    let c1 = gamma_real(5.0 / 3.0)? / PI;
    let c2 = -b2 / (3.0 * PI);
    let c3 = 7.0 * b2 * b2 * gamma_real(4.0 / 3.0)? / (81.0 * PI);
    let parts = [c1 * t1.value.re, c2 * t2.value.re, c3 * t3.value.re];
    let value = parts[0] + parts[1] + parts[2];
    let err = c1.abs() * t1.err_estimate
        + c2.abs() * t2.err_estimate
        + c3.abs() * t3.err_estimate
        + f64::EPSILON * (parts[0].abs() + parts[1].abs() + parts[2].abs());
    Ok(EvalResult {
        value,
        method: MethodId::Lee,
        err_estimate: err,
        terms_used: t1.terms_used + t2.terms_used + t3.terms_used,
    })
}

/// S(β) by the ₂F₂ + Airy closed form.
pub fn s_airy_closed(beta: f64, ctl: &SeriesControl) -> Result<EvalResult, EvalError> {
    if !(beta >= 0.0) {
        return Err(EvalError::Domain("s_airy_closed requires beta >= 0"));
    }
    let b2 = beta * beta;
    let b3 = b2 * beta;
    let u = 4.0 * b3 / 27.0;
    let (fp, fm) = conjugate_pair(&F_NUM, &F_DEN, u, ctl)?;
    let f_pair = fp.value + fm.value;
    debug_assert!(
        f_pair.im.abs() <= 1e-13 * f_pair.re.abs().max(f64::MIN_POSITIVE),
        "conjugate 2F2 pair must combine to a real value"
    );
    let term1 = -b2 / (6.0 * PI) * f_pair.re;

    let t_2_3 = libm::pow(3.0, 2.0 / 3.0);
    let y = -b2 / (3.0 * libm::cbrt(3.0));
    let (bi, bip) = airy_bi_pair(y)?;
    let (sv, cv) = libm::sincos(u / 2.0);
    let c_airy = 4.0 / (3.0 * t_2_3);
    let airy_parts = [c_airy * bip * cv, c_airy * beta / t_2_3 * bi * sv];
    let term2 = airy_parts[0] + airy_parts[1];

    let value = term1 + term2;
    let err = b2 / (6.0 * PI) * (fp.err_estimate + fm.err_estimate)
        + KERNEL_REL_ERR * (airy_parts[0].abs() + airy_parts[1].abs())
        + f64::EPSILON * (term1.abs() + term2.abs());
    Ok(EvalResult {
        value,
        method: MethodId::AiryClosed,
        err_estimate: err,
        terms_used: fp.terms_used + fm.terms_used,
    })
}

/// S(β) by the ₂F₂ + fractional-order Bessel closed form (β > 0; the
/// negative-order J is singular at 0, where the Airy form takes over by
/// continuity).
pub fn s_bessel_closed(beta: f64, ctl: &SeriesControl) -> Result<EvalResult, EvalError> {
    if !(beta > 0.0) {
        return Err(EvalError::Domain("s_bessel_closed requires beta > 0"));
    }
    let b2 = beta * beta;
    let b3 = b2 * beta;
    let u = 4.0 * b3 / 27.0;
    let (fp, fm) = conjugate_pair(&F_NUM, &F_DEN, u, ctl)?;
    let f_pair = fp.value + fm.value;
    debug_assert!(f_pair.im.abs() <= 1e-13 * f_pair.re.abs().max(f64::MIN_POSITIVE));
    let term1 = -b2 / (6.0 * PI) * f_pair.re;

    let v = u / 2.0;
    let j_m23 = bessel_j_frac(-2.0 / 3.0, v)?;
    let j_p23 = bessel_j_frac(2.0 / 3.0, v)?;
    let j_m13 = bessel_j_frac(-1.0 / 3.0, v)?;
    let j_p13 = bessel_j_frac(1.0 / 3.0, v)?;
    let (sv, cv) = libm::sincos(v);
    let c_bes = 4.0 * b2 / (27.0 * libm::sqrt(3.0));
    let bes_parts = [c_bes * cv * (j_m23 + j_p23), c_bes * sv * (j_m13 - j_p13)];
    let term2 = bes_parts[0] + bes_parts[1];

    let value = term1 + term2;
    let err = b2 / (6.0 * PI) * (fp.err_estimate + fm.err_estimate)
        + KERNEL_REL_ERR * (bes_parts[0].abs() + bes_parts[1].abs())
        + f64::EPSILON * (term1.abs() + term2.abs());
    Ok(EvalResult {
        value,
        method: MethodId::BesselClosed,
        err_estimate: err,
        terms_used: fp.terms_used + fm.terms_used,
    })
}

/// H(β) by the four-term ₂F₂ + Airy closed form.
pub fn h_airy_closed(beta: f64, ctl: &SeriesControl) -> Result<EvalResult, EvalError> {
    if !(beta >= 0.0) {
        return Err(EvalError::Domain("h_airy_closed requires beta >= 0"));
    }
    let b2 = beta * beta;
    let b3 = b2 * beta;
    let b5 = b2 * b3;
    let u = 4.0 * b3 / 27.0;
    let (term1, term2, err12, terms12) = h_hyper_terms(b2, b5, u, ctl)?;

    let t_1_3 = libm::cbrt(3.0);
    let t_2_3 = libm::pow(3.0, 2.0 / 3.0);
    let y = -b2 / (3.0 * t_1_3);
    let (bi, bip) = airy_bi_pair(y)?;
    let (sv, cv) = libm::sincos(u / 2.0);
    let c_airy = -8.0 * beta / (81.0 * t_2_3);
    let airy_parts = [
        c_airy * t_1_3 * bi * (4.0 * b3 * cv + 9.0 * sv),
        -c_airy * 12.0 * b2 * bip * sv,
    ];
    let term3 = airy_parts[0] + airy_parts[1];

    let value = term1 + term2 + term3;
    let err = err12
        + KERNEL_REL_ERR * (airy_parts[0].abs() + airy_parts[1].abs())
        + f64::EPSILON * (term1.abs() + term2.abs() + term3.abs());
    Ok(EvalResult { value, method: MethodId::AiryClosed, err_estimate: err, terms_used: terms12 })
}

/// H(β) by the ₂F₂ + Bessel closed form (β > 0).
pub fn h_bessel_closed(beta: f64, ctl: &SeriesControl) -> Result<EvalResult, EvalError> {
    if !(beta > 0.0) {
        return Err(EvalError::Domain("h_bessel_closed requires beta > 0"));
    }
    let b2 = beta * beta;
    let b3 = b2 * beta;
    let b5 = b2 * b3;
    let u = 4.0 * b3 / 27.0;
    let (term1, term2, err12, terms12) = h_hyper_terms(b2, b5, u, ctl)?;

    let v = u / 2.0;
    let j_m23 = bessel_j_frac(-2.0 / 3.0, v)?;
    let j_p23 = bessel_j_frac(2.0 / 3.0, v)?;
    let j_m13 = bessel_j_frac(-1.0 / 3.0, v)?;
    let j_p13 = bessel_j_frac(1.0 / 3.0, v)?;
    let (sv, cv) = libm::sincos(v);
    let c_bes = -8.0 * b2 / (243.0 * libm::sqrt(3.0));
    let bes_parts = [
        c_bes * (j_m13 - j_p13) * (4.0 * b3 * cv + 9.0 * sv),
        -c_bes * 4.0 * b3 * (j_m23 + j_p23) * sv,
    ];
    let term3 = bes_parts[0] + bes_parts[1];

    let value = term1 + term2 + term3;
    let err = err12
        + KERNEL_REL_ERR * (bes_parts[0].abs() + bes_parts[1].abs())
        + f64::EPSILON * (term1.abs() + term2.abs() + term3.abs());
    Ok(EvalResult { value, method: MethodId::BesselClosed, err_estimate: err, terms_used: terms12 })
}

/// The two hypergeometric blocks shared by both H forms:
/// `(2β²/3π)[F(-iu) + F(iu)]` (a real conjugate sum) and
/// `(-iβ⁵/10π)[G(-iu) - G(iu)]` (a pure-imaginary conjugate difference
/// times -i, hence also real).
fn h_hyper_terms(
    b2: f64,
    b5: f64,
    u: f64,
    ctl: &SeriesControl,
) -> Result<(f64, f64, f64, u32), EvalError> {
    let (fp, fm) = conjugate_pair(&F_NUM, &F_DEN, u, ctl)?;
    let f_pair = fp.value + fm.value;
    debug_assert!(f_pair.im.abs() <= 1e-13 * f_pair.re.abs().max(f64::MIN_POSITIVE));
    let term1 = 2.0 * b2 / (3.0 * PI) * f_pair.re;

    let (gp, gm) = conjugate_pair(&G_NUM, &G_DEN, u, ctl)?;
    let g_diff = gm.value - gp.value;
    debug_assert!(g_diff.re.abs() <= 1e-13 * g_diff.im.abs().max(f64::MIN_POSITIVE));
    // (-i c)(i Im) = c Im: the remaining real part of the middle term
    let term2 = b5 / (10.0 * PI) * g_diff.im;

    let err = 2.0 * b2 / (3.0 * PI) * (fp.err_estimate + fm.err_estimate)
        + b5 / (10.0 * PI) * (gp.err_estimate + gm.err_estimate);
    Ok((term1, term2, err, fp.terms_used + fm.terms_used + gp.terms_used + gm.terms_used))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    // defining-integral references computed at 40-digit precision pre-build
    const S_0: f64 = 0.2873527514521644450244822;
    const S_1: f64 = 0.2020381596078401303889315;
    const S_2: f64 = 0.08453962312613752005681148;
    const S_2_5: f64 = 0.05114889453067176631293602;
    const S_3: f64 = 0.03150942361632493531350302;
    const S_5: f64 = 0.007111736047654806841151691;
    const H_1: f64 = 0.2712208070312723342087942;
    const H_2: f64 = 0.3369387826994849573063306;
    const H_3: f64 = 0.1760629272356150543499015;
    const H_5: f64 = 0.04118023719381629755891353;

    fn ctl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn lee_at_zero_is_gamma_five_thirds_over_pi() {
        let r = s_lee(0.0, &ctl()).unwrap();
        let expect = gamma_real(5.0 / 3.0).unwrap() / PI;
        assert_relative_eq!(r.value, expect, max_relative = 1e-14);
        assert_abs_diff_eq!(r.value, 0.2874, epsilon = 5e-5);
    }

    #[test]
    fn lee_matches_oracle_values() {
        assert_relative_eq!(s_lee(1.0, &ctl()).unwrap().value, S_1, max_relative = 1e-12);
        assert_relative_eq!(s_lee(2.0, &ctl()).unwrap().value, S_2, max_relative = 1e-12);
        assert_abs_diff_eq!(s_lee(5.0, &ctl()).unwrap().value, S_5, epsilon = 1e-10);
    }

    #[test]
    fn airy_closed_matches_oracle_values() {
        let r = s_airy_closed(0.0, &ctl()).unwrap();
        assert_relative_eq!(r.value, S_0, max_relative = 1e-13);
        assert_relative_eq!(s_airy_closed(1.0, &ctl()).unwrap().value, S_1, max_relative = 1e-12);
        assert_relative_eq!(s_airy_closed(3.0, &ctl()).unwrap().value, S_3, max_relative = 1e-11);
        assert_abs_diff_eq!(s_airy_closed(5.0, &ctl()).unwrap().value, S_5, epsilon = 1e-10);
    }

    #[test]
    fn airy_closed_agrees_with_series_route() {
        let a = s_airy_closed(1.0, &ctl()).unwrap().value;
        let s = crate::holtsmark::s_series(1.0, &ctl()).unwrap().value;
        assert_abs_diff_eq!(a, s, epsilon = 1e-10);
    }

    #[test]
    fn bessel_closed_matches_airy_closed() {
        for beta in [0.3, 1.0, 2.5, 4.0] {
            let b = s_bessel_closed(beta, &ctl()).unwrap().value;
            let a = s_airy_closed(beta, &ctl()).unwrap().value;
            assert_abs_diff_eq!(b, a, epsilon = 1e-10);
        }
        assert_relative_eq!(s_bessel_closed(2.5, &ctl()).unwrap().value, S_2_5, max_relative = 1e-11);
    }

    #[test]
    fn bessel_closed_continuous_at_zero() {
        assert!(matches!(s_bessel_closed(0.0, &ctl()), Err(EvalError::Domain(_))));
        let near = s_bessel_closed(1e-4, &ctl()).unwrap().value;
        assert_abs_diff_eq!(near, 0.2874, epsilon = 5e-5);
    }

    #[test]
    fn h_airy_closed_values() {
        assert_eq!(h_airy_closed(0.0, &ctl()).unwrap().value, 0.0);
        assert_relative_eq!(h_airy_closed(1.0, &ctl()).unwrap().value, H_1, max_relative = 1e-11);
        assert_relative_eq!(h_airy_closed(2.0, &ctl()).unwrap().value, H_2, max_relative = 1e-11);
        assert_relative_eq!(h_airy_closed(5.0, &ctl()).unwrap().value, H_5, max_relative = 1e-9);
    }

    #[test]
    fn h_bessel_closed_values() {
        assert_relative_eq!(h_bessel_closed(3.0, &ctl()).unwrap().value, H_3, max_relative = 1e-10);
        for beta in [0.5, 1.0, 2.0, 4.0] {
            let b = h_bessel_closed(beta, &ctl()).unwrap().value;
            let a = h_airy_closed(beta, &ctl()).unwrap().value;
            assert_abs_diff_eq!(b, a, epsilon = 1e-10);
        }
        assert!(matches!(h_bessel_closed(0.0, &ctl()), Err(EvalError::Domain(_))));
        // continuity toward H(0) = 0
        assert!(h_bessel_closed(1e-4, &ctl()).unwrap().value.abs() < 1e-7);
    }

    #[test]
    fn h_airy_matches_derivative_of_s() {
        // H = -2β S' against a finite difference of the S closed form
        let h = 1e-5;
        let beta = 1.0;
        let ds = (s_airy_closed(beta + h, &ctl()).unwrap().value
            - s_airy_closed(beta - h, &ctl()).unwrap().value)
            / (2.0 * h);
        let hv = h_airy_closed(beta, &ctl()).unwrap().value;
        assert_relative_eq!(-2.0 * beta * ds, hv, max_relative = 1e-6);
    }

    #[test]
    fn guard_refuses_past_validity() {
        assert!(matches!(s_airy_closed(7.0, &ctl()), Err(EvalError::PrecisionLoss { .. })));
        assert!(matches!(h_airy_closed(7.0, &ctl()), Err(EvalError::PrecisionLoss { .. })));
    }

    #[test]
    fn negative_beta_is_domain_error() {
        assert!(matches!(s_airy_closed(-1.0, &ctl()), Err(EvalError::Domain(_))));
        assert!(matches!(s_lee(-1.0, &ctl()), Err(EvalError::Domain(_))));
        assert!(matches!(h_bessel_closed(-1.0, &ctl()), Err(EvalError::Domain(_))));
    }
}
