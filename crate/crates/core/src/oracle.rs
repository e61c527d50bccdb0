//! Ground-truth quadrature of the defining integrals, plus global identity
//! checks (Fourier transform, normalization).
//!
//! The oracle is deliberately slow-but-sure: panels are sized to at most
//! half an oscillation period, each panel runs an embedded 7/15-point
//! Gauss–Kronrod pair with recursive bisection, and the reported `abs_err`
//! is the a-posteriori panel bound plus an explicit bound on the truncated
//! tail. It exists to validate the analytical routes, never to be fast.

use crate::holtsmark::{h_auto, series::h_asym_tail_integral, s_auto};
use crate::EvalError;
use core::f64::consts::PI;

/// Result of one adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureReport {
    pub value: f64,
    /// A-posteriori error bound: accepted panel estimates plus tail bound.
    pub abs_err: f64,
    /// Integrand evaluations consumed.
    pub evaluations: u32,
    /// Upper integration limit X that replaced infinity.
    pub truncation_point: f64,
}

/// Total integrand evaluations any single oracle call may spend.
const EVAL_BUDGET: u32 = 20_000_000;

/// Maximum bisection depth per panel.
const MAX_DEPTH: u32 = 40;

// 15-point Kronrod nodes (positive half), with the embedded 7-point Gauss
// rule on the odd-indexed nodes. Standard QUADPACK abscissae/weights.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// QUADPACK's error rescaling: sharpen |K15 - G7| against the panel's
/// own variation measure.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = libm::pow(200.0 * scaled / res_asc, 1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

/// One 7/15 Gauss–Kronrod panel: returns (integral, error estimate).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<(f64, f64), EvalError> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_gauss = fc * WG[3];
    let mut res_kronrod = fc * WGK[7];
    let mut res_abs = res_kronrod.abs();
    let mut fv = [0.0_f64; 14];
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv[j] = f1;
        fv[j + 7] = f2;
        res_kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = res_kronrod * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv[j] - mean).abs() + (fv[j + 7] - mean).abs());
    }
    let value = res_kronrod * half;
    if !value.is_finite() {
        return Err(EvalError::Domain("integrand produced a non-finite value"));
    }
    let err = rescale_error((res_kronrod - res_gauss) * half, res_abs * half.abs(), res_asc * half.abs());
    Ok((value, err))
}

/// Recursive bisection until the panel meets `tol` (or depth runs out, in
/// which case the honest remaining estimate is reported upward).
fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
    evals: &mut u32,
) -> Result<(f64, f64), EvalError> {
    *evals += 15;
    if *evals > EVAL_BUDGET {
        return Err(EvalError::BudgetExceeded { evaluations: *evals });
    }
    let (value, err) = gk15(f, a, b)?;
    if err <= tol || depth >= MAX_DEPTH {
        return Ok((value, err));
    }
    let mid = 0.5 * (a + b);
    let (v1, e1) = adapt(f, a, mid, tol * 0.5, depth + 1, evals)?;
    let (v2, e2) = adapt(f, mid, b, tol * 0.5, depth + 1, evals)?;
    Ok((v1 + v2, e1 + e2))
}

/// Integrate `f` over [0, upper], cutting initial panels with `next_width`
/// and sharing `tol` across panels proportionally to width.
fn integrate<F: Fn(f64) -> f64, W: Fn(f64) -> f64>(
    f: &F,
    upper: f64,
    next_width: W,
    tol: f64,
) -> Result<(f64, f64, u32), EvalError> {
    let mut a = 0.0;
    let mut value = 0.0;
    let mut err = 0.0;
    let mut evals = 0u32;
    while a < upper {
        let b = (a + next_width(a)).min(upper);
        let panel_tol = tol * (b - a) / upper;
        let (v, e) = adapt(f, a, b, panel_tol, 0, &mut evals)?;
        value += v;
        err += e;
        a = b;
    }
    Ok((value, err, evals))
}

fn check_abs_tol(abs_tol: f64) -> Result<(), EvalError> {
    if !(abs_tol >= 1e-12) {
        return Err(EvalError::Invalid("abs_tol must be at least 1e-12"));
    }
    Ok(())
}

/// Upper truncation from the tail bound e^(-X^(3/2)) < abs_tol/10.
fn truncation_point(abs_tol: f64) -> f64 {
    libm::pow(libm::log(10.0 / abs_tol), 2.0 / 3.0)
}

/// S(β) = (1/π) ∫₀^∞ cos(βx) e^(-x^(3/2)) dx by adaptive quadrature.
///
/// Accepts any |β| ≤ 30 (the integrand is even in β). Panels span at most
/// half an oscillation period π/β.
pub fn s_quadrature(beta: f64, abs_tol: f64) -> Result<QuadratureReport, EvalError> {
    check_abs_tol(abs_tol)?;
    if !(beta.abs() <= 30.0) {
        return Err(EvalError::Domain("s_quadrature supports |beta| <= 30"));
    }
    let b = beta.abs();
    let x_max = truncation_point(abs_tol);
    let f = move |x: f64| libm::cos(b * x) * libm::exp(-libm::pow(x, 1.5)) / PI;
    let width = if b >= 1.0 { PI / b } else { x_max / 8.0 };
    let (value, err, evaluations) = integrate(&f, x_max, |_| width, abs_tol * 0.45)?;
    let tail = libm::exp(-libm::pow(x_max, 1.5)) / PI; // |cos| <= 1
    Ok(QuadratureReport { value, abs_err: err + tail, evaluations, truncation_point: x_max })
}

/// H(β) = (2β/π) ∫₀^∞ x sin(βx) e^(-x^(3/2)) dx by adaptive quadrature.
pub fn h_quadrature(beta: f64, abs_tol: f64) -> Result<QuadratureReport, EvalError> {
    check_abs_tol(abs_tol)?;
    if !(0.0..=30.0).contains(&beta) {
        return Err(EvalError::Domain("h_quadrature supports beta in [0, 30]"));
    }
    let x_max = truncation_point(abs_tol);
    if beta == 0.0 {
        // sin(0) = 0: the integrand vanishes identically
        return Ok(QuadratureReport { value: 0.0, abs_err: 0.0, evaluations: 0, truncation_point: x_max });
    }
    let f = move |x: f64| 2.0 * beta / PI * x * libm::sin(beta * x) * libm::exp(-libm::pow(x, 1.5));
    let width = if beta >= 1.0 { PI / beta } else { x_max / 8.0 };
    let (value, err, evaluations) = integrate(&f, x_max, |_| width, abs_tol * 0.45)?;
    // |x sin| <= X over the tail
    let tail = 2.0 * beta / PI * x_max * libm::exp(-libm::pow(x_max, 1.5));
    Ok(QuadratureReport { value, abs_err: err + tail, evaluations, truncation_point: x_max })
}

/// ∫₀^upper H(β) dβ through `h_auto` (partial probability mass).
pub fn h_mass(upper: f64, abs_tol: f64) -> Result<QuadratureReport, EvalError> {
    check_abs_tol(abs_tol)?;
    if !(upper > 0.0 && upper.is_finite()) {
        return Err(EvalError::Domain("h_mass requires a positive finite upper limit"));
    }
    let f = |beta: f64| h_auto(beta).map_or(f64::NAN, |r| r.value);
    let (value, err, evaluations) = integrate(&f, upper, |_| 1.0, abs_tol)?;
    Ok(QuadratureReport { value, abs_err: err, evaluations, truncation_point: upper })
}

/// ∫₀^∞ H(β) dβ: quadrature on [0, 30] plus the term-wise integral of the
/// asymptotic expansion beyond. H is a probability density on [0, ∞), so
/// the result should be 1 to within the method error (~1e-6).
pub fn h_normalization() -> Result<f64, EvalError> {
    let head = h_mass(30.0, 1e-7)?;
    Ok(head.value + h_asym_tail_integral(30.0))
}

/// Fourier-transform identity check: computes |∫ S(β) e^(-iβτ) dβ −
/// e^(-|τ|^(3/2))| numerically, folding the integral onto [0, ∞) by
/// evenness. At τ = 0 this doubles as the normalization of S.
pub fn fourier_check(tau: f64, abs_tol: f64) -> Result<f64, EvalError> {
    check_abs_tol(abs_tol)?;
    if !(tau.abs() <= 3.0) {
        return Err(EvalError::Domain("fourier_check supports |tau| <= 3"));
    }
    let t = tau.abs();
    let integral = if t < 1e-9 {
        // non-oscillatory: integrate to 30 and add the analytic tail of the
        // asymptotic expansion, integrated term by term
        let f = |beta: f64| s_auto(beta).map_or(f64::NAN, |r| r.value);
        let (value, _err, _evals) = integrate(&f, 30.0, |a| (0.25 * a).max(2.0), abs_tol * 0.45)?;
        2.0 * (value + s_asym_tail_integral(30.0))
    } else {
        // oscillatory: truncate where the van der Corput bound
        // 4 S(X)/τ <= 1.28 X^(-5/2)/τ drops below abs_tol/10
        let x_max = libm::pow(12.8 / (abs_tol * t), 0.4).max(30.0);
        let f = move |beta: f64| {
            s_auto(beta).map_or(f64::NAN, |r| r.value) * libm::cos(t * beta)
        };
        let osc_cap = PI / t;
        let (value, _err, _evals) =
            integrate(&f, x_max, |a| osc_cap.min((0.25 * a).max(2.0)), abs_tol * 0.45)?;
        2.0 * value
    };
    Ok((integral - libm::exp(-libm::pow(t, 1.5))).abs())
}

/// ∫ₓ^∞ of the asymptotic S expansion, term by term (used for the
/// non-oscillatory Fourier tail).
fn s_asym_tail_integral(x: f64) -> f64 {
    // magnitudes of the S asymptotic terms at β = x, two-strand recurrence
    let binv3 = libm::pow(x, -3.0);
    let mut strand = [
        1.32934038817913702047_f64 * libm::pow(x, -2.5) / PI, // Γ(5/2) x^(-5/2) / π
        3.0 * libm::pow(x, -4.0) / PI,
    ];
    let signs = [
        0.0,
        core::f64::consts::FRAC_1_SQRT_2,
        1.0,
        core::f64::consts::FRAC_1_SQRT_2,
        0.0,
        -core::f64::consts::FRAC_1_SQRT_2,
        -1.0,
        -core::f64::consts::FRAC_1_SQRT_2,
    ];
    let mut total = 0.0;
    let mut prev = f64::INFINITY;
    for n in 1u32..60 {
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
        let s = signs[(n % 8) as usize];
        if s != 0.0 {
            if mag > prev {
                break;
            }
            prev = mag;
            total += s * mag * x * 2.0 / (3.0 * n as f64);
        }
    }
    total
}
