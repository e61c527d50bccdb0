//! Small-argument Taylor series and large-argument asymptotic expansions.
//!
//! Both expansions put the summation index inside a Gamma argument
//! (Γ((4n+2)/3), Γ((3n+2)/2)), so neighbouring terms are not rationally
//! related. Terms three (respectively two) apart are: Γ(x+4)/Γ(x) and
//! Γ(x+3)/Γ(x) are plain polynomials. Each series therefore runs as
//! interleaved strands with exact rational step factors, seeded by direct
//! Gamma evaluations.

use crate::holtsmark::{EvalResult, MethodId};
use crate::kahan::KahanSum;
use crate::specfun::{gamma_real, SeriesControl};
use crate::EvalError;
use core::f64::consts::{FRAC_1_SQRT_2, PI};

/// Combined factor (-1)^(n+1) sin(3πn/4) of the n-th asymptotic term,
/// indexed by n mod 8. Exact values; terms at n ≡ 0 (mod 4) vanish.
const ASYM_SIGN: [f64; 8] = [
    0.0,
    FRAC_1_SQRT_2,
    1.0,
    FRAC_1_SQRT_2,
    0.0,
    -FRAC_1_SQRT_2,
    -1.0,
    -FRAC_1_SQRT_2,
];

/// S(β) by the small-argument series
/// `(2/3π) Σ (-1)ⁿ Γ((4n+2)/3) β²ⁿ/(2n)!`.
pub fn s_series(beta: f64, ctl: &SeriesControl) -> Result<EvalResult, EvalError> {
    ctl.validate()?;
    if !(0.0..=12.0).contains(&beta) {
        return Err(EvalError::Domain("s_series supports beta in [0, 12]"));
    }
    let c = 2.0 / (3.0 * PI);
    let b2 = beta * beta;
    let seeds = [
        c * gamma_real(2.0 / 3.0)?,
        -c * b2 / 2.0,
        c * gamma_real(10.0 / 3.0)? * b2 * b2 / 24.0,
    ];
    taylor_sum(beta, ctl, seeds, 0, s_step)
}

/// Step factor t_{m+3}/t_m of the S series (base index m).
fn s_step(m: f64, b6: f64) -> f64 {
    let x = (4.0 * m + 2.0) / 3.0;
    -b6 * x * (x + 1.0) * (x + 2.0) * (x + 3.0)
        / ((2.0 * m + 1.0)
            * (2.0 * m + 2.0)
            * (2.0 * m + 3.0)
            * (2.0 * m + 4.0)
            * (2.0 * m + 5.0)
            * (2.0 * m + 6.0))
}

/// H(β) by the term-wise derivative of the S series through
/// `H = -2β S'`: `(4/3π) Σ_{n≥1} (-1)^(n+1) Γ((4n+2)/3) β²ⁿ/(2n-1)!`.
pub fn h_series(beta: f64, ctl: &SeriesControl) -> Result<EvalResult, EvalError> {
    ctl.validate()?;
    if !(0.0..=12.0).contains(&beta) {
        return Err(EvalError::Domain("h_series supports beta in [0, 12]"));
    }
    let c = 4.0 / (3.0 * PI);
    let b2 = beta * beta;
    let b4 = b2 * b2;
    let seeds = [
        c * b2,
        -c * gamma_real(10.0 / 3.0)? * b4 / 6.0,
        c * gamma_real(14.0 / 3.0)? * b4 * b2 / 120.0,
    ];
    taylor_sum(beta, ctl, seeds, 1, h_step)
}

/// Step factor of the H series (base index m ≥ 1).
fn h_step(m: f64, b6: f64) -> f64 {
    let x = (4.0 * m + 2.0) / 3.0;
    -b6 * x * (x + 1.0) * (x + 2.0) * (x + 3.0)
        / ((2.0 * m)
            * (2.0 * m + 1.0)
            * (2.0 * m + 2.0)
            * (2.0 * m + 3.0)
            * (2.0 * m + 4.0)
            * (2.0 * m + 5.0))
}

/// Shared three-strand driver. `seeds` are the first three terms, whose
/// series indices start at `base` (0 for S, 1 for H); `step` maps
/// (series index m, β⁶) to the factor t_{m+3}/t_m.
fn taylor_sum(
    beta: f64,
    ctl: &SeriesControl,
    seeds: [f64; 3],
    base: u32,
    step: fn(f64, f64) -> f64,
) -> Result<EvalResult, EvalError> {
    let b6 = {
        let b2 = beta * beta;
        b2 * b2 * b2
    };
    let mut strand = seeds;
    let mut sum = KahanSum::new();
    let mut abs_sum = 0.0;
    let mut peak = 0.0_f64;
    let mut streak = 0u32;
    let mut count = 0u32; // terms added so far; the k-th has series index base + k
    let mut converged = false;
    while count < ctl.max_terms {
        let idx = (count % 3) as usize;
        let t = if count < 3 {
            strand[idx]
        } else {
            // strand[idx] still holds the term three indices back
            let t = strand[idx] * step((base + count - 3) as f64, b6);
            strand[idx] = t;
            t
        };
        if !t.is_finite() {
            return Err(EvalError::Overflow);
        }
        sum.add(t);
        abs_sum += t.abs();
        peak = peak.max(sum.value().abs());
        count += 1;
        if t.abs() <= ctl.rel_tol * sum.value().abs() {
            streak += 1;
            if streak >= 2 {
                converged = true;
                break;
            }
        } else {
            streak = 0;
        }
    }
    if !converged {
        return Err(EvalError::NoConvergence { terms: count });
    }
    let value = sum.value();
    if peak > ctl.cancel_guard * value.abs() {
        return Err(EvalError::PrecisionLoss { peak_ratio: peak / value.abs() });
    }
    // first omitted term, from the strand that is now three behind
    let omitted = if count >= 3 {
        strand[(count % 3) as usize] * step((base + count - 3) as f64, b6)
    } else {
        strand[count as usize]
    };
    Ok(EvalResult {
        value,
        method: MethodId::Series,
        err_estimate: omitted.abs() + f64::EPSILON * abs_sum,
        terms_used: count,
    })
}

/// S(β) truncated to exactly `order` retained terms (n = 0 .. order-1),
/// with no convergence or cancellation checks. This is the curve the
/// truncation-order figures plot.
pub fn s_series_truncated(beta: f64, order: u32) -> Result<EvalResult, EvalError> {
    if order == 0 {
        return Err(EvalError::Invalid("order must be positive"));
    }
    if !(beta >= 0.0) {
        return Err(EvalError::Domain("s_series_truncated requires beta >= 0"));
    }
    let c = 2.0 / (3.0 * PI);
    let b2 = beta * beta;
    let b6 = b2 * b2 * b2;
    let mut strand = [
        c * gamma_real(2.0 / 3.0)?,
        -c * b2 / 2.0,
        c * gamma_real(10.0 / 3.0)? * b2 * b2 / 24.0,
    ];
    let mut sum = KahanSum::new();
    let mut abs_sum = 0.0;
    for n in 0..order {
        let idx = (n % 3) as usize;
        let t = if n < 3 {
            strand[idx]
        } else {
            let t = strand[idx] * s_step((n - 3) as f64, b6);
            strand[idx] = t;
            t
        };
        if !t.is_finite() {
            return Err(EvalError::Overflow);
        }
        sum.add(t);
        abs_sum += t.abs();
    }
    let omitted = if order < 3 {
        strand[(order % 3) as usize]
    } else {
        strand[(order % 3) as usize] * s_step((order - 3) as f64, b6)
    };
    Ok(EvalResult {
        value: sum.value(),
        method: MethodId::Series,
        err_estimate: omitted.abs() + f64::EPSILON * abs_sum,
        terms_used: order,
    })
}

/// S(β) by the asymptotic expansion
/// `(1/π) Σ_{n≥1} (-1)^(n+1)/n! Γ((3n+2)/2) sin(3πn/4) β^(-(3n+2)/2)`,
/// stopped at the smallest-magnitude term (optimal truncation) or at
/// `max_terms`, whichever comes first. `err_estimate` is the first omitted
/// term plus the machine floor.
pub fn s_asymptotic(beta: f64, max_terms: u32) -> Result<EvalResult, EvalError> {
    if max_terms == 0 {
        return Err(EvalError::Invalid("max_terms must be at least 1"));
    }
    if !(beta >= 2.0) {
        return Err(EvalError::Domain(
            "s_asymptotic requires beta >= 2 (optimal truncation is useless below)",
        ));
    }
    let m1 = gamma_real(2.5)? * libm::pow(beta, -2.5) / PI;
    let m2 = gamma_real(4.0)? * libm::pow(beta, -4.0) / (2.0 * PI);
    Ok(asymptotic_sum(beta, max_terms, [m1, m2], 2.0))
}

/// H(β) by the term-wise derivative of the asymptotic S expansion:
/// `(2/π) Σ_{n≥1} (-1)^(n+1)/n! Γ((3n+4)/2) sin(3πn/4) β^(-(3n+2)/2)`.
pub fn h_asymptotic(beta: f64, max_terms: u32) -> Result<EvalResult, EvalError> {
    if max_terms == 0 {
        return Err(EvalError::Invalid("max_terms must be at least 1"));
    }
    if !(beta >= 2.0) {
        return Err(EvalError::Domain(
            "h_asymptotic requires beta >= 2 (optimal truncation is useless below)",
        ));
    }
    let m1 = 2.0 * gamma_real(3.5)? * libm::pow(beta, -2.5) / PI;
    let m2 = gamma_real(5.0)? * libm::pow(beta, -4.0) / PI;
    Ok(asymptotic_sum(beta, max_terms, [m1, m2], 4.0))
}

/// Two-strand driver for the asymptotic expansions. `seeds` are the term
/// magnitudes at n = 1, 2; the magnitude step is
/// `m_{n+2} = m_n · y(y+1)(y+2) / ((n+1)(n+2)) · β⁻³` with
/// `y = (3n + y_off)/2` (y_off = 2 for S, 4 for H).
fn asymptotic_sum(beta: f64, max_terms: u32, seeds: [f64; 2], y_off: f64) -> EvalResult {
    let binv3 = libm::pow(beta, -3.0);
    let mag_step = |base: f64, m: f64| {
        let y = (3.0 * base + y_off) / 2.0;
        m * y * (y + 1.0) * (y + 2.0) / ((base + 1.0) * (base + 2.0)) * binv3
    };
    let mut strand = seeds;
    let mut sum = KahanSum::new();
    let mut abs_sum = 0.0;
    let mut prev_nonzero = f64::INFINITY;
    let mut n = 1u32;
    let (err_lead, terms_used) = loop {
        let idx = ((n - 1) % 2) as usize;
        let mag = if n <= 2 {
            strand[idx]
        } else {
            let m = mag_step((n - 2) as f64, strand[idx]);
            strand[idx] = m;
            m
        };
        let sign = ASYM_SIGN[(n % 8) as usize];
        if sign != 0.0 {
            if mag > prev_nonzero {
                // smallest term reached; omit this one and stop
                break (mag * sign.abs(), n - 1);
            }
            prev_nonzero = mag;
            sum.add(sign * mag);
            abs_sum += mag * sign.abs();
        }
        if n >= max_terms {
            // estimate from the next nonzero-signed term
            let mut est = 0.0;
            for j in n + 1..=n + 2 {
                let idx = ((j - 1) % 2) as usize;
                let m = mag_step((j - 2) as f64, strand[idx]);
                strand[idx] = m;
                let s = ASYM_SIGN[(j % 8) as usize];
                if s != 0.0 {
                    est = m * s.abs();
                    break;
                }
            }
            break (est, n);
        }
        n += 1;
    };
    EvalResult {
        value: sum.value(),
        method: MethodId::Asymptotic,
        err_estimate: err_lead + f64::EPSILON * abs_sum,
        terms_used,
    }
}

/// S(β) asymptotic expansion truncated to exactly the terms n = 1..=order,
/// regardless of growth. Away from its validity range the partial sums
/// diverge — which is exactly what the truncation-order figure shows.
pub fn s_asymptotic_truncated(beta: f64, order: u32) -> Result<EvalResult, EvalError> {
    if order == 0 {
        return Err(EvalError::Invalid("order must be positive"));
    }
    if !(beta > 0.0) {
        return Err(EvalError::Domain("s_asymptotic_truncated requires beta > 0"));
    }
    let binv3 = libm::pow(beta, -3.0);
    let mut strand = [
        gamma_real(2.5)? * libm::pow(beta, -2.5) / PI,
        gamma_real(4.0)? * libm::pow(beta, -4.0) / (2.0 * PI),
    ];
    let mut sum = KahanSum::new();
    let mut abs_sum = 0.0;
    let mut last_mag = strand[0];
    for n in 1..=order {
        let idx = ((n - 1) % 2) as usize;
        let mag = if n <= 2 {
            strand[idx]
        } else {
            let base = (n - 2) as f64;
            let y = (3.0 * base + 2.0) / 2.0;
            let m = strand[idx] * y * (y + 1.0) * (y + 2.0) / ((base + 1.0) * (base + 2.0)) * binv3;
            strand[idx] = m;
            m
        };
        if !mag.is_finite() {
            return Err(EvalError::Overflow);
        }
        last_mag = mag;
        let sign = ASYM_SIGN[(n % 8) as usize];
        if sign != 0.0 {
            sum.add(sign * mag);
            abs_sum += mag * sign.abs();
        }
    }
    Ok(EvalResult {
        value: sum.value(),
        method: MethodId::Asymptotic,
        err_estimate: last_mag + f64::EPSILON * abs_sum,
        terms_used: order,
    })
}

/// ∫ₓ^∞ of the asymptotic H expansion, integrated term by term:
/// each `c_n β^(-(3n+2)/2)` contributes `term_n(x) · x · 2/(3n)`.
/// Used by the oracle's normalization check for the tail beyond its
/// quadrature range.
pub(crate) fn h_asym_tail_integral(x: f64) -> f64 {
    let binv3 = libm::pow(x, -3.0);
    let mut strand = [
        2.0 * 3.32335097044784255118 * libm::pow(x, -2.5) / PI, // 2 Γ(7/2) x^(-5/2) / π
        24.0 * libm::pow(x, -4.0) / PI,
    ];
    let mut total = 0.0;
    let mut prev = f64::INFINITY;
    for n in 1u32..60 {
        let idx = ((n - 1) % 2) as usize;
        let mag = if n <= 2 {
            strand[idx]
        } else {
            let base = (n - 2) as f64;
            let y = (3.0 * base + 4.0) / 2.0;
            let m = strand[idx] * y * (y + 1.0) * (y + 2.0) / ((base + 1.0) * (base + 2.0)) * binv3;
            strand[idx] = m;
            m
        };
        let sign = ASYM_SIGN[(n % 8) as usize];
        if sign != 0.0 {
            if mag > prev {
                break;
            }
            prev = mag;
            total += sign * mag * x * 2.0 / (3.0 * n as f64);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    // defining-integral references computed at 40-digit precision pre-build
    const S_0: f64 = 0.2873527514521644450244822;
    const S_1: f64 = 0.2020381596078401303889315;
    const S_5: f64 = 0.007111736047654806841151691;
    const S_10: f64 = 0.001047776024929440461165364;
    const S_15: f64 = 0.0003628823428194809815786696;
    const H_1: f64 = 0.2712208070312723342087942;
    const H_1_5: f64 = 0.3635663743012374275272636;

    fn ctl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn s_series_at_zero_is_peak() {
        let r = s_series(0.0, &ctl()).unwrap();
        assert_abs_diff_eq!(r.value, 0.2874, epsilon = 5e-5);
        assert_relative_eq!(r.value, S_0, max_relative = 1e-14);
    }

    #[test]
    fn s_series_first_three_terms_match_displayed_coefficients() {
        // S(β) ≈ 0.2874 - 0.1061 β² + 0.0246 β⁴; the three rounded
        // coefficients carry ~5e-5 of display rounding between them
        let r = s_series_truncated(0.5, 3).unwrap();
        let displayed = 0.2874 - 0.1061 * 0.25 + 0.0246 * 0.0625;
        assert_abs_diff_eq!(r.value, displayed, epsilon = 1.5e-4);
    }

    #[test]
    fn s_series_against_oracle_value() {
        let r = s_series(1.0, &ctl()).unwrap();
        assert_relative_eq!(r.value, S_1, max_relative = 1e-13);
        let r = s_series(5.0, &ctl()).unwrap();
        assert_abs_diff_eq!(r.value, S_5, epsilon = 1e-8);
        assert!(r.err_estimate < 1e-7, "err_estimate {}", r.err_estimate);
    }

    #[test]
    fn s_series_guard_trips_for_large_beta() {
        // the 1e12 default guard gives out near beta ≈ 5.7
        assert!(matches!(
            s_series(8.0, &ctl()),
            Err(EvalError::PrecisionLoss { .. }) | Err(EvalError::NoConvergence { .. })
        ));
        assert!(matches!(s_series(12.5, &ctl()), Err(EvalError::Domain(_))));
        assert!(matches!(s_series(-0.1, &ctl()), Err(EvalError::Domain(_))));
    }

    #[test]
    fn s_series_no_convergence_when_capped() {
        let tight = SeriesControl { max_terms: 4, ..ctl() };
        assert!(matches!(s_series(2.0, &tight), Err(EvalError::NoConvergence { terms: 4 })));
    }

    #[test]
    fn h_series_values() {
        let r = h_series(0.0, &ctl()).unwrap();
        assert_eq!(r.value, 0.0);
        let r = h_series(1.0, &ctl()).unwrap();
        assert_relative_eq!(r.value, H_1, max_relative = 1e-12);
        let r = h_series(1.5, &ctl()).unwrap();
        assert_relative_eq!(r.value, H_1_5, max_relative = 1e-12);
    }

    #[test]
    fn h_series_matches_finite_difference_of_s_series() {
        // H = -2β S', the relation the coefficients were derived from
        let h = 1e-5;
        for beta in [0.5, 1.0, 2.0] {
            let ds = (s_series(beta + h, &ctl()).unwrap().value
                - s_series(beta - h, &ctl()).unwrap().value)
                / (2.0 * h);
            let hv = h_series(beta, &ctl()).unwrap().value;
            assert_relative_eq!(-2.0 * beta * ds, hv, max_relative = 1e-8);
        }
    }

    #[test]
    fn asymptotic_values() {
        let r = s_asymptotic(10.0, 500).unwrap();
        assert_relative_eq!(r.value, S_10, max_relative = 1e-10);
        assert!(r.err_estimate < 1e-8);
        let r = s_asymptotic(15.0, 500).unwrap();
        assert_relative_eq!(r.value, S_15, max_relative = 1e-10);
    }

    #[test]
    fn asymptotic_domain() {
        assert!(matches!(s_asymptotic(1.9, 100), Err(EvalError::Domain(_))));
        assert!(matches!(h_asymptotic(0.5, 100), Err(EvalError::Domain(_))));
    }

    #[test]
    fn asymptotic_term_four_vanishes() {
        // sin(3πn/4) = 0 at n = 4: order 4 and order 3 truncations agree
        let a = s_asymptotic_truncated(3.0, 3).unwrap();
        let b = s_asymptotic_truncated(3.0, 4).unwrap();
        assert_eq!(a.value, b.value);
    }

    #[test]
    fn truncated_diverges_at_small_beta() {
        // more terms is NOT better below the validity range
        let lo = s_asymptotic_truncated(1.0, 4).unwrap();
        let hi = s_asymptotic_truncated(1.0, 64).unwrap();
        let s1 = 0.2020381596078401;
        assert!((hi.value - s1).abs() > (lo.value - s1).abs());
        assert!((hi.value - s1).abs() > 1e3);
    }

    #[test]
    fn h_asymptotic_leading_coefficient() {
        // H ~ 1.4960335515 β^(-5/2) + (24/π) β^(-4) + O(β^(-11/2))
        let r = h_asymptotic(50.0, 500).unwrap();
        assert_relative_eq!(
            r.value,
            1.496033551505372542275 * libm::pow(50.0, -2.5) + 24.0 / PI * libm::pow(50.0, -4.0),
            max_relative = 1e-3
        );
    }

    #[test]
    fn tail_integral_reasonable() {
        // ∫_30^∞ H ≈ 1.496·(2/3)·30^(-3/2) to leading order
        let t = h_asym_tail_integral(30.0);
        let lead = 1.496033551505372542275 * 2.0 / 3.0 * libm::pow(30.0, -1.5);
        assert_relative_eq!(t, lead, max_relative = 2e-2);
    }
}
