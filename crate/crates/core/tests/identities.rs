//! The special-function identity suite: contraction identities, the 2F2
//! derivative rule, the Airy ODE and representations, the Bessel/Airy
//! connection, and the Gauss multiplication identity.

use approx::assert_relative_eq;
use holtsmark_core::{
    airy_bi, airy_bi_prime, bessel_j_frac, gamma_real, pfq, pochhammer, ComplexValue,
    HypergeometricSpec, SeriesControl,
};

fn ctl() -> SeriesControl {
    SeriesControl::default()
}

fn pfq_val(nums: &[f64], dens: &[f64], z: ComplexValue) -> ComplexValue {
    pfq(&HypergeometricSpec::new(nums, dens, z).unwrap(), &ctl()).unwrap().value
}

#[test]
fn contraction_2f2_to_1f1_first() {
    // 2F2(1, 5/6; 2/3, 1; x) = 1F1(5/6; 2/3; x)
    for v in [-5.0, -2.0, -0.5, 0.5, 2.0, 5.0] {
        let x = ComplexValue::imaginary(v);
        let lhs = pfq_val(&[1.0, 5.0 / 6.0], &[2.0 / 3.0, 1.0], x);
        let rhs = pfq_val(&[5.0 / 6.0], &[2.0 / 3.0], x);
        assert!(
            (lhs - rhs).magnitude() <= 1e-12 * rhs.magnitude(),
            "v = {v}: |lhs - rhs| = {}",
            (lhs - rhs).magnitude()
        );
    }
}

#[test]
fn contraction_2f2_to_1f1_second() {
    // 2F2(1, 13/6; 2, 7/3; x) = (8/(7x)) [1F1(7/6; 4/3; x) - 1]
    for v in [-5.0, -2.0, -0.5, 0.5, 2.0, 5.0] {
        let x = ComplexValue::imaginary(v);
        let lhs = pfq_val(&[1.0, 13.0 / 6.0], &[2.0, 7.0 / 3.0], x);
        let f = pfq_val(&[7.0 / 6.0], &[4.0 / 3.0], x) - ComplexValue::ONE;
        // (a + bi)/(iv) = (b - ai)/v
        let rhs = ComplexValue::new(f.im / v, -f.re / v).scale(8.0 / 7.0);
        assert!(
            (lhs - rhs).magnitude() <= 1e-12 * rhs.magnitude(),
            "v = {v}: |lhs - rhs| = {}",
            (lhs - rhs).magnitude()
        );
    }
}

#[test]
fn derivative_rule_2f2() {
    // d/dx 2F2(a1,a2;b1,b2;x) = (a1 a2)/(b1 b2) 2F2(a1+1,a2+1;b1+1,b2+1;x)
    let nums = [1.0, 1.5];
    let dens = [4.0 / 3.0, 5.0 / 3.0];
    let shifted_n = [2.0, 2.5];
    let shifted_d = [7.0 / 3.0, 8.0 / 3.0];
    let factor = (1.0 * 1.5) / (4.0 / 3.0 * (5.0 / 3.0));
    let h = 1e-6;
    // real centers and one pure-imaginary center (the case the H closed
    // forms rely on)
    for center in [
        ComplexValue::from(-2.0),
        ComplexValue::from(-0.5),
        ComplexValue::from(0.5),
        ComplexValue::from(2.0),
        ComplexValue::imaginary(2.0),
    ] {
        let plus = pfq_val(&nums, &dens, center + ComplexValue::from(h));
        let minus = pfq_val(&nums, &dens, center - ComplexValue::from(h));
        let fd = (plus - minus).scale(1.0 / (2.0 * h));
        let rhs = pfq_val(&shifted_n, &shifted_d, center).scale(factor);
        assert!(
            (fd - rhs).magnitude() <= 1e-6 * rhs.magnitude(),
            "center = {center:?}: |fd - rhs| = {}",
            (fd - rhs).magnitude()
        );
    }
}

#[test]
fn airy_ode() {
    // Bi''(x) = x Bi(x) by second central difference; points keep clear of
    // the zeros of Bi so the relative comparison stays meaningful
    let h = 1e-3;
    for x in [-4.6, -4.0, -3.6, -2.8, -2.2, -1.6, -0.9, 0.6, 1.3, 2.0] {
        let second = (airy_bi(x + h).unwrap() - 2.0 * airy_bi(x).unwrap() + airy_bi(x - h).unwrap())
            / (h * h);
        let rhs = x * airy_bi(x).unwrap();
        assert_relative_eq!(second, rhs, max_relative = 1e-6);
    }
}

#[test]
fn airy_bi_confluent_representation() {
    // Bi(x) = e^(-2/3 x^(3/2)) [ 1F1(1/6;1/3;t)/(3^(1/6)Γ(2/3))
    //        + 3^(5/6) (2/3)^(2/3) x 1F1(5/6;5/3;t)/(2^(2/3)Γ(1/3)) ],
    // t = (4/3) x^(3/2), valid for x > 0
    let g23 = gamma_real(2.0 / 3.0).unwrap();
    let g13 = gamma_real(1.0 / 3.0).unwrap();
    for x in [0.25f64, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0] {
        let t = 4.0 / 3.0 * x.powf(1.5);
        let e = (-2.0 / 3.0 * x.powf(1.5)).exp();
        let f1 = pfq_val(&[1.0 / 6.0], &[1.0 / 3.0], ComplexValue::from(t)).re;
        let f2 = pfq_val(&[5.0 / 6.0], &[5.0 / 3.0], ComplexValue::from(t)).re;
        let rep = e * f1 / (3f64.powf(1.0 / 6.0) * g23)
            + 3f64.powf(5.0 / 6.0) / (2f64.powf(2.0 / 3.0) * g13)
                * (2.0f64 / 3.0).powf(2.0 / 3.0)
                * x
                * e
                * f2;
        assert_relative_eq!(airy_bi(x).unwrap(), rep, max_relative = 1e-10);
    }
}

#[test]
fn airy_bi_prime_confluent_representation() {
    // Bi'(x) = e^(-2/3 x^(3/2)) [ 3^(1/6) 1F1(-1/6;-1/3;t)/Γ(1/3)
    //        + x² 1F1(7/6;7/3;t)/(2·3^(1/6)Γ(2/3)) ]
    let g23 = gamma_real(2.0 / 3.0).unwrap();
    let g13 = gamma_real(1.0 / 3.0).unwrap();
    for x in [0.25f64, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0] {
        let t = 4.0 / 3.0 * x.powf(1.5);
        let e = (-2.0 / 3.0 * x.powf(1.5)).exp();
        let f1 = pfq_val(&[-1.0 / 6.0], &[-1.0 / 3.0], ComplexValue::from(t)).re;
        let f2 = pfq_val(&[7.0 / 6.0], &[7.0 / 3.0], ComplexValue::from(t)).re;
        let rep = 3f64.powf(1.0 / 6.0) / g13 * e * f1
            + x * x / (2.0 * 3f64.powf(1.0 / 6.0) * g23) * e * f2;
        assert_relative_eq!(airy_bi_prime(x).unwrap(), rep, max_relative = 1e-10);
    }
}

#[test]
fn bessel_airy_connection() {
    // Bi(-x) = sqrt(x/3) [J_{-1/3}(ζ) - J_{1/3}(ζ)], ζ = (2/3) x^(3/2)
    for x in [0.5f64, 1.5, 2.5, 3.8, 4.4, 5.6, 7.0, 8.0, 9.1, 10.0] {
        let zeta = 2.0 / 3.0 * x.powf(1.5);
        let rhs = (x / 3.0).sqrt()
            * (bessel_j_frac(-1.0 / 3.0, zeta).unwrap() - bessel_j_frac(1.0 / 3.0, zeta).unwrap());
        let lhs = airy_bi(-x).unwrap();
        assert_relative_eq!(lhs, rhs, max_relative = 1e-9);
    }
}

#[test]
fn gauss_multiplication_identity() {
    // Γ(2r + 2(2q+1)/3)/Γ(3r + 2q + 1) written as the product of
    // power-of-2/3 factors, Gammas and Pochhammers
    let two_pi = 2.0 * core::f64::consts::PI;
    for r in 0u32..=5 {
        for q in 0u32..=2 {
            let rf = r as f64;
            let qf = q as f64;
            let lhs = gamma_real(2.0 * rf + 2.0 * (2.0 * qf + 1.0) / 3.0).unwrap()
                / gamma_real(3.0 * rf + 2.0 * qf + 1.0).unwrap();
            let mut rhs = two_pi.sqrt() * 2f64.powf(2.0 * rf + 4.0 * qf / 3.0 + 1.0 / 6.0)
                / 3f64.powf(3.0 * rf + 2.0 * qf + 0.5)
                * gamma_real(2.0 * qf / 3.0 + 5.0 / 6.0).unwrap()
                * pochhammer(2.0 * qf / 3.0 + 5.0 / 6.0, r).unwrap();
            for k in 1..=2 {
                let arg = (2.0 * qf + 1.0 + k as f64) / 3.0;
                rhs /= gamma_real(arg).unwrap() * pochhammer(arg, r).unwrap();
            }
            assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
        }
    }
}
