//! Legendre (`z > 1`) and Ferrers (`-1 < z < 1`) functions of both kinds
//! from their hypergeometric representations. `Q̂ = e^{-μπi} Q`.

use super::gamma::{gamma_ratio, near_integer, rgamma};
use super::hyp2f1::{gauss_2f1, gauss_2f1_regularized, Hyp2F1Params, SERIES_GUARD};
use crate::error::{Error, Result};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LegendreFn {
    LegendreP,
    LegendreQhat,
    FerrersP,
    FerrersQ,
}

/// A Legendre-type function with its degree and order, plus the degeneracy
/// flags that follow from them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LegendreKind {
    pub function: LegendreFn,
    pub nu: f64,
    pub mu: f64,
    /// `Q̂_ν^μ` (hence Ferrers `Q_ν^μ`) is undefined.
    pub q_undefined: bool,
    /// The first-kind function vanishes identically.
    pub p_vanishes: bool,
}

impl LegendreKind {
    pub fn new(function: LegendreFn, nu: f64, mu: f64) -> Self {
        LegendreKind { function, nu, mu, q_undefined: qhat_undefined(nu, mu), p_vanishes: p_vanishes(nu, mu) }
    }

    pub fn eval(&self, z: f64) -> Result<f64> {
        match self.function {
            LegendreFn::LegendreP => legendre_p(self.nu, self.mu, z),
            LegendreFn::LegendreQhat => legendre_qhat(self.nu, self.mu, z),
            LegendreFn::FerrersP => ferrers_p(self.nu, self.mu, z),
            LegendreFn::FerrersQ => ferrers_q(self.nu, self.mu, z),
        }
    }
}

/// `ν+μ` a negative integer, except `ν = -3/2, -5/2, …` with
/// `μ ∈ {ν+1, …, -(ν+1)}`.
fn qhat_undefined(nu: f64, mu: f64) -> bool {
    let Some(s) = near_integer(nu + mu) else { return false };
    if s >= 0 {
        return false;
    }
    let half_odd = near_integer(nu + 0.5).is_some_and(|k| k <= -1);
    !(half_odd && mu <= -(nu + 1.0) + 1e-12)
}

/// `P_ν^μ ≡ 0` for `μ = 1, 2, …` and `ν ∈ {-μ, …, μ-1}`.
fn p_vanishes(nu: f64, mu: f64) -> bool {
    match (near_integer(mu), near_integer(nu)) {
        (Some(m), Some(n)) if m >= 1 => -m <= n && n < m,
        _ => false,
    }
}

/// Legendre `P_ν^μ(z)`, `z > 1`, from
/// `Γ(1-μ)^{-1} ((z+1)/(z-1))^{μ/2} 2F1(-ν, ν+1; 1-μ; (1-z)/2)`.
///
/// After Pfaff's transformation the series argument is `(z-1)/(z+1)`,
/// which stays inside the guard for `z ≤ 9`.
pub fn legendre_p(nu: f64, mu: f64, z: f64) -> Result<f64> {
    if z <= 1.0 || !z.is_finite() {
        return Err(Error::Domain(format!("Legendre P needs z > 1, got {z}")));
    }
    if p_vanishes(nu, mu) {
        return Ok(0.0);
    }
    let x = (1.0 - z) / 2.0;
    let pre = ((z + 1.0) / (z - 1.0)).powf(mu / 2.0);
    if x.abs() <= SERIES_GUARD {
        return Ok(pre * gauss_2f1_regularized(-nu, nu + 1.0, 1.0 - mu, x)?);
    }
    let y = (z - 1.0) / (z + 1.0);
    Ok(pre * ((z + 1.0) / 2.0).powf(nu) * gauss_2f1_regularized(-nu, -nu - mu, 1.0 - mu, y)?)
}

/// Ferrers `P_ν^μ(z)`, `-1 < z < 1`; the Legendre prefactor with `1-z` in
/// place of `z-1`. For `(1-z)/2` beyond the guard (`z < -0.6`) the series
/// is re-expanded about `z = -1`, which needs `μ` non-integer.
pub fn ferrers_p(nu: f64, mu: f64, z: f64) -> Result<f64> {
    if !(z > -1.0 && z < 1.0) {
        return Err(Error::Domain(format!("Ferrers P needs -1 < z < 1, got {z}")));
    }
    ferrers_p_split(nu, mu, 1.0 - z, 1.0 + z)
}

/// Ferrers `P_ν^μ(z)` given `1-z` and `1+z` separately, so that endpoint
/// behaviour survives when `z` itself rounds to `±1`.
pub fn ferrers_p_split(nu: f64, mu: f64, one_minus_z: f64, one_plus_z: f64) -> Result<f64> {
    if !(one_minus_z > 0.0 && one_plus_z > 0.0) {
        return Err(Error::Domain(format!("Ferrers P needs -1 < z < 1, got 1-z = {one_minus_z}, 1+z = {one_plus_z}")));
    }
    if p_vanishes(nu, mu) {
        return Ok(0.0);
    }
    let x = one_minus_z / 2.0;
    let pre = (one_plus_z / one_minus_z).powf(mu / 2.0);
    if x <= SERIES_GUARD {
        return Ok(pre * gauss_2f1_regularized(-nu, nu + 1.0, 1.0 - mu, x)?);
    }
    if near_integer(mu).is_some() {
        return Err(Error::Domain(format!("Ferrers P at z = {} with integer order {mu}", 1.0 - one_minus_z)));
    }
    // F(a,b;c;x)/Γ(c) = π/sin(π(c-a-b)) [ F(a,b;a+b-c+1;1-x) / (Γ(c-a)Γ(c-b)Γ(a+b-c+1))
    //   - (1-x)^{c-a-b} F(c-a,c-b;c-a-b+1;1-x) / (Γ(a)Γ(b)Γ(c-a-b+1)) ],  c-a-b = -μ
    let y = one_plus_z / 2.0;
    let t1 = rgamma(1.0 - mu + nu) * rgamma(-mu - nu) * gauss_2f1_regularized(-nu, nu + 1.0, 1.0 + mu, y)?;
    let t2 = y.powf(-mu) * rgamma(-nu) * rgamma(nu + 1.0) * gauss_2f1_regularized(1.0 - mu + nu, -mu - nu, 1.0 - mu, y)?;
    Ok(pre * PI / (-PI * mu).sin() * (t1 - t2))
}

/// `Q̂_ν^μ(z)`, `z > 1`, from
/// `√π/2^{ν+1} Γ(ν+μ+1)/Γ(ν+3/2) (z²-1)^{μ/2} z^{-ν-μ-1} 2F1((ν+μ+1)/2, (ν+μ+2)/2; ν+3/2; 1/z²)`.
/// Closer to `z = 1` than the guard allows, the `P → Q̂` reduction is used.
pub fn legendre_qhat(nu: f64, mu: f64, z: f64) -> Result<f64> {
    if z <= 1.0 || !z.is_finite() {
        return Err(Error::Domain(format!("Legendre Q̂ needs z > 1, got {z}")));
    }
    if qhat_undefined(nu, mu) {
        return Err(Error::Undefined(format!("Q̂_{nu}^{mu}: ν+μ is a negative integer")));
    }
    let x = 1.0 / (z * z);
    if x > SERIES_GUARD {
        if near_integer(mu).is_some() {
            return Err(Error::Domain(format!("Q̂ at z = {z} with integer order {mu}")));
        }
        let g = gamma_ratio(nu + mu + 1.0, nu - mu + 1.0)?;
        let s = (mu * PI).sin();
        return Ok(PI / 2.0 * (legendre_p(nu, mu, z)? - g * legendre_p(nu, -mu, z)?) / s);
    }
    let pre = PI.sqrt() / 2f64.powf(nu + 1.0) * (z * z - 1.0).powf(mu / 2.0) * z.powf(-nu - mu - 1.0);
    let (a, b, c) = ((nu + mu + 1.0) / 2.0, (nu + mu + 2.0) / 2.0, nu + 1.5);
    if near_integer(mu - 0.5).is_some() {
        // Γ(ν+μ+1)/Γ(ν+3/2) is a Pochhammer symbol; c may be a pole cancelled by termination
        let g = gamma_ratio(nu + mu + 1.0, c)?;
        return Ok(pre * g * gauss_2f1(Hyp2F1Params { a, b, c, x })?);
    }
    let g = super::gamma::gamma(nu + mu + 1.0);
    Ok(pre * g * gauss_2f1_regularized(a, b, c, x)?)
}

/// Ferrers `Q_ν^μ(z)` from `(2/π)Q = cot(μπ) P^μ - csc(μπ) Γ(ν+μ+1)/Γ(ν-μ+1) P^{-μ}`;
/// integer orders are outside this reduction.
pub fn ferrers_q(nu: f64, mu: f64, z: f64) -> Result<f64> {
    if near_integer(mu).is_some() {
        return Err(Error::Domain(format!("Ferrers Q with integer order {mu}")));
    }
    if qhat_undefined(nu, mu) {
        return Err(Error::Undefined(format!("Q_{nu}^{mu}: ν+μ is a negative integer")));
    }
    let g = gamma_ratio(nu + mu + 1.0, nu - mu + 1.0)?;
    let s = (mu * PI).sin();
    let c = (mu * PI).cos();
    let cot_term = if c.abs() < 1e-15 { 0.0 } else { c / s * ferrers_p(nu, mu, z)? };
    let csc_term = if g == 0.0 { 0.0 } else { g / s * ferrers_p(nu, -mu, z)? };
    Ok(PI / 2.0 * (cot_term - csc_term))
}

/// `Q̂_ν^μ(coth ξ) - √(π/2) Γ(ν+μ+1) (sinh ξ)^{1/2} P_{-μ-1/2}^{-ν-1/2}(cosh ξ)`.
pub fn whipple(nu: f64, mu: f64, xi: f64) -> Result<f64> {
    if xi <= 0.0 {
        return Err(Error::Domain(format!("Whipple needs ξ > 0, got {xi}")));
    }
    if qhat_undefined(nu, mu) {
        return Err(Error::Undefined(format!("Q̂_{nu}^{mu}: ν+μ is a negative integer")));
    }
    let lhs = legendre_qhat(nu, mu, 1.0 / xi.tanh())?;
    let g = super::gamma::gamma(nu + mu + 1.0);
    let rhs = (PI / 2.0).sqrt() * g * xi.sinh().sqrt() * legendre_p(-mu - 0.5, -nu - 0.5, xi.cosh())?;
    Ok(lhs - rhs)
}
