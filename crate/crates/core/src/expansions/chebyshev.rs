//! The `μ = -1/2` Love–Hunter expansion in its hatted form: the bilateral
//! basis `ψ̂_n^{(α)}`, `χ̂_n^{(α)}`, and at `α = 1/2` the equivalent unilateral
//! expansion in fourth-kind Chebyshev polynomials `W_j`.

use super::quad::{de_quad, panel_rule, QuadResult};
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// `W_j(z)` from `W_0 = 1`, `W_1 = 2z+1`, `W_{j+1} = 2z W_j - W_{j-1}`;
/// equal to `sin[(j+1/2)θ] / sin(θ/2)` at `z = cos θ`, and valid on all of
/// `[-1, 1]` including the endpoints.
pub fn chebyshev_w(j: u32, z: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * z + 1.0);
    if j == 0 {
        return prev;
    }
    for _ in 1..j {
        (prev, cur) = (cur, 2.0 * z * cur - prev);
    }
    cur
}

/// `(ψ̂_n^{(α)}(θ), χ̂_n^{(α)}(θ))
///  = (sin[(2n+α)θ], cos[(2n+α)(π-θ)]) / sin(θ/2)`.
pub fn pinsky_basis(n: i64, alpha: f64, theta: f64) -> (f64, f64) {
    let k = 2.0 * n as f64 + alpha;
    let s = (theta / 2.0).sin();
    ((k * theta).sin() / s, (k * (PI - theta)).cos() / s)
}

/// `ψ̂_n^{(1/2)}` as a signed `W_j`: `(2n, +1)` for `n ≥ 0`, `(-2n-1, -1)`
/// otherwise.
pub fn w_index(n: i64) -> (u32, f64) {
    if n >= 0 {
        (2 * n as u32, 1.0)
    } else {
        ((-2 * n - 1) as u32, -1.0)
    }
}

/// `∫₀^π χ̂_n ψ̂_n sin²(θ/2) dθ = (π/2) sin(απ)`, the same for every `n`.
pub fn pinsky_denominator(alpha: f64) -> f64 {
    PI / 2.0 * (alpha * PI).sin()
}

/// `(cos bπ - cos aπ)/(a - b)`, or its limit `π sin(aπ)` as `b → a`.
fn cos_difference_quotient(a: f64, b: f64) -> f64 {
    if (a - b).abs() < 1e-9 {
        PI * (a * PI).sin()
    } else {
        ((b * PI).cos() - (a * PI).cos()) / (a - b)
    }
}

/// `∫₀^π sin(αθ) cos[α'(π-θ)] dθ`
/// `= ½ (cos α'π - cos απ) [1/(α-α') + 1/(α+α')]`, which vanishes when
/// `α - α'` is a nonzero even integer and `α + α' ≠ 0`.
pub fn dihedral_inner_exact(alpha: f64, alpha_prime: f64) -> f64 {
    0.5 * (cos_difference_quotient(alpha, alpha_prime) + cos_difference_quotient(alpha, -alpha_prime))
}

/// The same integral by quadrature.
pub fn dihedral_inner_quad(alpha: f64, alpha_prime: f64) -> Result<QuadResult> {
    de_quad(|t, _, dm| (alpha * t).sin() * (alpha_prime * dm).cos(), 0.0, PI, 1e-14)
}

/// Coefficients `ĉ_n`, `|n| ≤ N`, of the `α = 1/2` expansion
/// `f(cos θ) = Σ ĉ_n ψ̂_n(θ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WExpansion {
    pub n_trunc: i64,
    /// `(n, ĉ_n)` for `n = -N, …, N`.
    pub coeffs: Vec<(i64, f64)>,
}

impl WExpansion {
    /// The coefficient of `W_j`, `j ≤ 2N`: `ĉ_n ψ̂_n = ±ĉ_n W_j`.
    pub fn w_coeff(&self, j: u32) -> Option<f64> {
        let (n, sign) = if j % 2 == 0 { (j as i64 / 2, 1.0) } else { (-(j as i64 + 1) / 2, -1.0) };
        self.coeffs.iter().find(|(k, _)| *k == n).map(|&(_, c)| sign * c)
    }

    /// `Σ_{|n| ≤ n_max} ĉ_n ψ̂_n` at `z ∈ [-1, 1]`, endpoints included.
    pub fn eval_partial(&self, n_max: i64, z: f64) -> Result<f64> {
        if !(-1.0..=1.0).contains(&z) {
            return Err(Error::Domain(format!("W expansion evaluated at z = {z}")));
        }
        let top = 2 * n_max.min(self.n_trunc).max(0) as u32;
        // W_{-1} = -1 continues the recurrence backwards
        let (mut prev, mut cur) = (-1.0, 1.0);
        let mut sum = 0.0;
        for j in 0..=top {
            if let Some(c) = self.w_coeff(j) {
                sum += c * cur;
            }
            (prev, cur) = (cur, 2.0 * z * cur - prev);
        }
        Ok(sum)
    }

    pub fn eval(&self, z: f64) -> Result<f64> {
        self.eval_partial(self.n_trunc, z)
    }
}

/// Tanh-sinh step inside each panel; the panel integrands are analytic.
const PANEL_STEP: f64 = 0.125;

/// The `α = 1/2` expansion of `f`, `|n| ≤ N`, with
/// `ĉ_n = ∫₀^π χ̂_n f(cos θ) sin²(θ/2) dθ / (π/2)`.
///
/// `breaks` lists the points of `(-1, 1)` where `f` is discontinuous or
/// not smooth. The θ-interval is split there and then into panels no wider
/// than `π/(2N+1)`, about half a period of the fastest integrand.
pub fn w_expansion(f: impl Fn(f64) -> f64, n_trunc: i64, breaks: &[f64]) -> Result<WExpansion> {
    if n_trunc < 0 {
        return Err(Error::Config(format!("truncation {n_trunc} is negative")));
    }
    let mut cuts: Vec<f64> = breaks.iter().filter(|z| z.abs() < 1.0).map(|z| z.acos()).collect();
    cuts.extend([0.0, PI]);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let nodes = panel_rule(&cuts, PI / (2 * n_trunc + 1) as f64, PANEL_STEP);
    // χ̂_n f sin²(θ/2) = ±sin[(j+1/2)θ] sin(θ/2) f(cos θ) with j from w_index
    let weighted: Vec<(f64, f64)> = nodes.iter().map(|n| (n.x, n.w * (n.x / 2.0).sin() * f(n.x.cos()))).collect();
    let coeffs = (-n_trunc..=n_trunc)
        .map(|n| {
            let (j, sign) = w_index(n);
            let k = j as f64 + 0.5;
            let num: f64 = weighted.iter().map(|&(t, wf)| wf * (k * t).sin()).sum();
            (n, sign * num / pinsky_denominator(0.5))
        })
        .collect();
    Ok(WExpansion { n_trunc, coeffs })
}
