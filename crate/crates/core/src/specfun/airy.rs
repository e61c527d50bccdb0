//! Airy function of the second kind and its derivative on [-40, 5].

use crate::kahan::KahanSum;
use crate::EvalError;

/// Bi(0) = 1/(3^(1/6) Γ(2/3)).
const BI_0: f64 = 0.6149266274460007351509224;
/// Bi'(0) = 3^(1/6)/Γ(1/3).
const BIP_0: f64 = 0.4482883573538263579148237;

/// Below this the ascending series has lost too much to cancellation
/// (measured ~2e-11 at -8, 2e-8 at -10) and the negative-side asymptotic
/// expansion is already good to ~3e-13, so the two routes swap.
const SERIES_FLOOR: f64 = -7.0;

fn domain_check(x: f64) -> Result<(), EvalError> {
    if !(-40.0..=5.0).contains(&x) {
        return Err(EvalError::Domain("airy_bi supports x in [-40, 5]"));
    }
    Ok(())
}

/// Bi(x), relative error ≤ 1e-10 on [-40, 5].
pub fn airy_bi(x: f64) -> Result<f64, EvalError> {
    airy_bi_pair(x).map(|(bi, _)| bi)
}

/// Bi'(x), relative error ≤ 1e-10 on [-40, 5].
pub fn airy_bi_prime(x: f64) -> Result<f64, EvalError> {
    airy_bi_pair(x).map(|(_, bip)| bip)
}

/// (Bi, Bi') in one pass; the closed forms always need both.
pub(crate) fn airy_bi_pair(x: f64) -> Result<(f64, f64), EvalError> {
    domain_check(x)?;
    if x < SERIES_FLOOR {
        Ok(asymptotic_negative(-x))
    } else {
        Ok(maclaurin(x))
    }
}

/// Ascending Maclaurin pair: Bi = Bi(0) f + Bi'(0) g with
///   f(x) = Σ (1/3)ₖ 3ᵏ x³ᵏ/(3k)!,   g(x) = Σ (2/3)ₖ 3ᵏ x³ᵏ⁺¹/(3k+1)!.
fn maclaurin(x: f64) -> (f64, f64) {
    let x3 = x * x * x;
    let (mut f, mut g) = (KahanSum::new(), KahanSum::new());
    let (mut fp, mut gp) = (KahanSum::new(), KahanSum::new());
    // running terms of f, g, f', g'
    let mut t = 1.0;
    let mut u = x;
    let mut tp = 0.0;
    let mut up = 1.0;
    f.add(t);
    g.add(u);
    gp.add(up);
    let mut k = 0u32;
    loop {
        let kf = k as f64;
        t *= x3 / ((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        u *= x3 / ((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
        tp = if k == 0 { x * x / 2.0 } else { tp * x3 / ((3.0 * kf) * (3.0 * kf + 2.0)) };
        up *= x3 / ((3.0 * kf + 1.0) * (3.0 * kf + 3.0));
        f.add(t);
        g.add(u);
        fp.add(tp);
        gp.add(up);
        k += 1;
        if k > 4
            && t.abs() < 1e-17 * f.value().abs().max(1.0)
            && u.abs() < 1e-17 * g.value().abs().max(1.0)
        {
            break;
        }
        debug_assert!(k < 300, "airy maclaurin failed to terminate");
    }
    (
        BI_0 * f.value() + BIP_0 * g.value(),
        BI_0 * fp.value() + BIP_0 * gp.value(),
    )
}

/// Negative-side asymptotic expansion at x = -z, z ≥ 7 (optimally truncated):
///   Bi(-z)  = [cos(ζ+π/4) Σ(-1)ᵏu₂ₖζ⁻²ᵏ + sin(ζ+π/4) Σ(-1)ᵏu₂ₖ₊₁ζ⁻²ᵏ⁻¹] / (√π z^(1/4))
///   Bi'(-z) = z^(1/4) [sin(ζ+π/4) Σ(-1)ᵏv₂ₖζ⁻²ᵏ - cos(ζ+π/4) Σ(-1)ᵏv₂ₖ₊₁ζ⁻²ᵏ⁻¹] / √π
/// with ζ = (2/3)z^(3/2), u₀ = 1, uₖ₊₁ = uₖ (3k+½)(3k+1½)(3k+2½)/(54(k+1)(k+½)),
/// and vₖ = -(6k+1)/(6k-1) uₖ.
fn asymptotic_negative(z: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * libm::pow(z, 1.5);
    // Σ (-1)^(k/2) u_k/ζ^k over even and odd k, and the same with v_k.
    let (mut fe, mut fo, mut pe, mut po) = (0.0, 0.0, 0.0, 0.0);
    let mut m = 1.0; // u_k / ζ^k
    let mut prev = f64::INFINITY;
    let mut sign = [1.0, 1.0]; // per-strand (-1)^(k/2)
    for k in 0u32..40 {
        // all four strands share the u_k/ζ^k magnitude profile to within
        // the (6k+1)/(6k-1) factor; one optimal-truncation point serves
        if m > prev {
            break;
        }
        let kf = k as f64;
        let v_over_u = if k == 0 { 1.0 } else { -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) };
        let i = (k % 2) as usize;
        if i == 0 {
            fe += sign[0] * m;
            pe += sign[0] * v_over_u * m;
        } else {
            fo += sign[1] * m;
            po += sign[1] * v_over_u * m;
        }
        sign[i] = -sign[i];
        prev = m;
        m *= (3.0 * kf + 0.5) * (3.0 * kf + 1.5) * (3.0 * kf + 2.5)
            / (54.0 * (kf + 1.0) * (kf + 0.5) * zeta);
    }
    let (s, c) = libm::sincos(zeta + core::f64::consts::FRAC_PI_4);
    let q4 = libm::pow(z, 0.25);
    let sp = libm::sqrt(core::f64::consts::PI);
    let bi = (c * fe + s * fo) / (sp * q4);
    let bip = q4 * (s * pe - c * po) / sp;
    (bi, bip)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // references computed at 30-digit precision before the build
    #[test]
    fn at_zero() {
        assert_relative_eq!(airy_bi(0.0).unwrap(), BI_0, max_relative = 1e-15);
        assert_relative_eq!(airy_bi_prime(0.0).unwrap(), BIP_0, max_relative = 1e-15);
    }

    #[test]
    fn series_branch() {
        assert_relative_eq!(airy_bi(-1.0).unwrap(), 0.10399738949694461188869, max_relative = 1e-12);
        assert_relative_eq!(airy_bi_prime(-1.0).unwrap(), 0.5923756264227923508167792, max_relative = 1e-12);
        assert_relative_eq!(airy_bi(-5.5).unwrap(), -0.3678134539157119910947078, max_relative = 1e-11);
        assert_relative_eq!(airy_bi(2.5).unwrap(), 6.481660738460578608073, max_relative = 1e-13);
        assert_relative_eq!(airy_bi_prime(2.5).unwrap(), 9.421423317334301755582, max_relative = 1e-13);
    }

    #[test]
    fn asymptotic_branch() {
        assert_relative_eq!(airy_bi(-10.0).unwrap(), -0.3146798296438386331618, max_relative = 1e-11);
        assert_relative_eq!(airy_bi_prime(-10.0).unwrap(), 0.1194141133999092382775, max_relative = 1e-11);
        assert_relative_eq!(airy_bi(-15.0).unwrap(), -0.06912659453101006118593, max_relative = 1e-11);
        assert_relative_eq!(airy_bi_prime(-15.0).unwrap(), 1.076429753084374786744, max_relative = 1e-12);
        assert_relative_eq!(airy_bi(-40.0).unwrap(), 0.2195886242840424235781, max_relative = 1e-12);
        assert_relative_eq!(airy_bi_prime(-40.0).unwrap(), -0.2891399402820919350561, max_relative = 1e-12);
    }

    #[test]
    fn routes_agree_at_switch() {
        let (s_bi, s_bip) = maclaurin(-7.0);
        let (a_bi, a_bip) = asymptotic_negative(7.0);
        assert_relative_eq!(s_bi, a_bi, max_relative = 1e-10);
        assert_relative_eq!(s_bip, a_bip, max_relative = 1e-10);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(airy_bi(-40.001), Err(EvalError::Domain(_))));
        assert!(matches!(airy_bi(5.001), Err(EvalError::Domain(_))));
        assert!(matches!(airy_bi_prime(f64::NAN), Err(EvalError::Domain(_))));
    }
}
