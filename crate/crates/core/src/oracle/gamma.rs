//! Gamma function for real arguments (Lanczos, g = 7, nine terms) with the
//! reflection formula below 1/2.

use crate::error::{Error, Result};
use crate::exact::pochhammer_f64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `Some(k)` when `x` is within `1e-12` of the integer `k`.
pub fn near_integer(x: f64) -> Option<i64> {
    let r = x.round();
    ((x - r).abs() <= 1e-12 * x.abs().max(1.0)).then_some(r as i64)
}

pub fn is_nonpositive_integer(x: f64) -> bool {
    near_integer(x).is_some_and(|k| k <= 0)
}

/// `Γ(x)`; infinite at the poles `x = 0, -1, -2, …`.
pub fn gamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return f64::INFINITY;
    }
    if let Some(k) = near_integer(x).filter(|&k| k <= 20) {
        return (1..k).map(|j| j as f64).product();
    }
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut a = LANCZOS[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}

/// `1/Γ(x)`, zero at the poles of `Γ`.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x < 0.5 {
        return (PI * x).sin() * gamma(1.0 - x) / PI;
    }
    1.0 / gamma(x)
}

/// `Γ(a)/Γ(b)`. When `a - b` is an integer the ratio is the Pochhammer
/// symbol `(b)_{a-b}`, which also supplies the limit when both are poles.
pub fn gamma_ratio(a: f64, b: f64) -> Result<f64> {
    if let Some(k) = near_integer(a - b) {
        let v = pochhammer_f64(b, k);
        if !v.is_finite() {
            return Err(Error::Undefined(format!("Γ({a})/Γ({b}) with Γ({a}) infinite")));
        }
        return Ok(v);
    }
    if is_nonpositive_integer(a) {
        return Err(Error::Undefined(format!("Γ({a}) is infinite")));
    }
    Ok(gamma(a) * rgamma(b))
}
