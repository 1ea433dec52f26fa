//! Love–Hunter biorthogonality `∫₋₁¹ P_ν^μ(z) P_{ν'}^{-μ}(-z) dz = 0` for
//! degrees differing by a nonzero even integer, and the bilateral
//! expansions `f = Σ c_n P_{ν₀+2n}^μ` it supports.

use super::quad::{de_quad, panel_rule, QuadResult};
use std::f64::consts::PI;
use crate::error::{Error, Result};
use crate::oracle::{ferrers_p_split, near_integer};

const TOL: f64 = 1e-14;

/// `de_quad` over `[-1, 1]` for an integrand `g(z, 1+z, 1-z)` that may fail;
/// the first failure aborts the integral.
pub(crate) fn try_quad_pm1(mut g: impl FnMut(f64, f64, f64) -> Result<f64>) -> Result<QuadResult> {
    let mut failure = None;
    let r = de_quad(
        |z, dp, dm| {
            if failure.is_some() {
                return 0.0;
            }
            g(z, dp, dm).unwrap_or_else(|e| {
                failure = Some(e);
                0.0
            })
        },
        -1.0,
        1.0,
        TOL,
    )?;
    failure.map_or(Ok(r), Err)
}

fn check_order(mu: f64) -> Result<()> {
    if !(mu > -1.0 && mu < 1.0) {
        return Err(Error::Domain(format!("Love–Hunter integrals need μ ∈ (-1, 1), got {mu}")));
    }
    Ok(())
}

fn check_degree(nu: f64) -> Result<()> {
    if near_integer(nu - 0.5).is_some() {
        return Err(Error::Domain(format!("degree {nu} is a half-odd-integer")));
    }
    Ok(())
}

/// `∫₋₁¹ P_ν^μ(z) P_{ν'}^{-μ}(-z) dz`. Both factors are evaluated from the
/// exact distances `1∓z`, which resolves the `(1∓z)^{±μ/2}` endpoint
/// behaviour without splitting.
pub fn love_hunter_inner(nu: f64, nu_prime: f64, mu: f64) -> Result<QuadResult> {
    check_order(mu)?;
    check_degree(nu)?;
    check_degree(nu_prime)?;
    try_quad_pm1(|_, dp, dm| Ok(ferrers_p_split(nu, mu, dm, dp)? * ferrers_p_split(nu_prime, -mu, dp, dm)?))
}

/// `|inner| / ∫|integrand|`, the scale-free size of a Love–Hunter integral.
pub fn relative_size(r: &QuadResult) -> f64 {
    r.value.abs() / r.abs_value
}

/// A bilateral expansion in `P_{ν₀+2n}^μ`, `|n| ≤ n_trunc`, of the target `f`.
pub struct ExpansionSpec<F> {
    pub nu0: f64,
    pub mu: f64,
    pub n_trunc: i64,
    pub f: F,
}

impl<F: Fn(f64) -> f64> ExpansionSpec<F> {
    pub fn new(nu0: f64, mu: f64, n_trunc: i64, f: F) -> Result<Self> {
        check_order(mu)?;
        if n_trunc < 0 {
            return Err(Error::Config(format!("truncation {n_trunc} is negative")));
        }
        for n in -n_trunc..=n_trunc {
            check_degree(nu0 + 2.0 * n as f64)?;
        }
        Ok(ExpansionSpec { nu0, mu, n_trunc, f })
    }

    pub fn degree(&self, n: i64) -> f64 {
        self.nu0 + 2.0 * n as f64
    }
}

/// `∫₋₁¹ P_ν^{-μ}(-z) P_ν^μ(z) dz`, the normalization of the `n`-th term.
pub fn lh_denominator(nu: f64, mu: f64) -> Result<f64> {
    Ok(love_hunter_inner(nu, nu, mu)?.value)
}

/// `P_{ν₀+k}^μ`, `k = 0, …, kmax`, at the point with `1-z = dm`, `1+z = dp`,
/// by the forward degree recurrence
/// `(ν-μ+1) P_{ν+1} = (2ν+1) z P_ν - (ν+μ) P_{ν-1}` from oracle seeds at
/// `k = 0, 1`. On `(-1, 1)` the recurrence is neutrally stable, while the
/// oracle series cancels catastrophically once the degree reaches a few
/// tens. Where the pivot vanishes the oracle supplies the value.
pub fn ferrers_p_degree_ladder(nu0: f64, mu: f64, dm: f64, dp: f64, kmax: usize) -> Result<Vec<f64>> {
    let z = (dp - dm) / 2.0;
    let mut out = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let v = if k < 2 {
            ferrers_p_split(nu0 + k as f64, mu, dm, dp)?
        } else {
            let nu = nu0 + (k - 1) as f64;
            let pivot = nu - mu + 1.0;
            if pivot.abs() < 1e-12 {
                ferrers_p_split(nu + 1.0, mu, dm, dp)?
            } else {
                ((2.0 * nu + 1.0) * z * out[k - 1] - (nu + mu) * out[k - 2]) / pivot
            }
        };
        out.push(v);
    }
    Ok(out)
}

/// Tanh-sinh step inside each θ-panel.
const PANEL_STEP: f64 = 0.125;

/// `c_n = ⟨P_{ν₀+2n}^{-μ}(-·), f⟩ / ⟨P_{ν₀+2n}^{-μ}(-·), P_{ν₀+2n}^μ⟩` for
/// `|n| ≤ N`.
///
/// All `2N+1` numerators and denominators share one composite tanh-sinh
/// rule in `θ = arccos z`, with panels no wider than half a period of the
/// fastest integrand and the basis evaluated by degree ladders. Negative
/// `n` use `P_ν = P_{-ν-1}`, so both ladders start at low degree.
/// Nodes whose `z` rounds to `±1` carry negligible weight; they are skipped
/// for the target, which is only defined on `(-1, 1)`, and dropped entirely
/// once `1∓z` underflows.
pub fn lh_coefficients<F: Fn(f64) -> f64>(spec: &ExpansionSpec<F>) -> Result<Vec<(i64, f64)>> {
    let n = spec.n_trunc;
    let kmax = 2 * n as usize;
    let top = spec.nu0.abs().max((spec.nu0 + 1.0).abs()) + kmax as f64 + 1.0;
    let nodes = panel_rule(&[0.0, PI], PI / (2.0 * top + 2.0), PANEL_STEP);
    let bases = [spec.nu0, -spec.nu0 - 1.0];
    let len = (n + 1) as usize;
    // [base][0 = numerator, 1 = denominator][n index]
    let mut acc = [[vec![0.0; len], vec![0.0; len]], [vec![0.0; len], vec![0.0; len]]];
    for node in &nodes {
        let (theta, phi) = (node.da, node.db);
        let dm = 2.0 * (theta / 2.0).sin().powi(2);
        let dp = 2.0 * (phi / 2.0).sin().powi(2);
        if dm == 0.0 || dp == 0.0 {
            continue;
        }
        let z = node.x.cos();
        let jac = node.w * if theta < phi { theta.sin() } else { phi.sin() };
        let target = if z.abs() < 1.0 { (spec.f)(z) } else { 0.0 };
        for (b, &nu_b) in bases.iter().enumerate() {
            let dual = ferrers_p_degree_ladder(nu_b, -spec.mu, dp, dm, kmax)?;
            let primal = ferrers_p_degree_ladder(nu_b, spec.mu, dm, dp, kmax)?;
            for i in 0..len {
                acc[b][0][i] += jac * dual[2 * i] * target;
                acc[b][1][i] += jac * dual[2 * i] * primal[2 * i];
            }
        }
    }
    (-n..=n)
        .map(|k| {
            let (b, i) = if k >= 0 { (0, k as usize) } else { (1, k.unsigned_abs() as usize) };
            let den = acc[b][1][i];
            if den.abs() < 1e-14 {
                let nu = spec.degree(k);
                return Err(Error::DivisionByZero(format!("Love–Hunter normalization vanishes at ν = {nu}")));
            }
            Ok((k, acc[b][0][i] / den))
        })
        .collect()
}

/// `Σ c_n P_{ν₀+2n}^μ(z)` over the coefficients whose `|n| ≤ n_max`, with
/// the basis from degree ladders.
pub fn lh_partial_sum<F>(spec: &ExpansionSpec<F>, coeffs: &[(i64, f64)], n_max: i64, z: f64) -> Result<f64> {
    let (dm, dp) = (1.0 - z, 1.0 + z);
    let kmax = 2 * coeffs.iter().map(|(n, _)| n.abs()).filter(|&n| n <= n_max).max().unwrap_or(0) as usize;
    let up = ferrers_p_degree_ladder(spec.nu0, spec.mu, dm, dp, kmax)?;
    let down = ferrers_p_degree_ladder(-spec.nu0 - 1.0, spec.mu, dm, dp, kmax)?;
    Ok(coeffs
        .iter()
        .filter(|(n, _)| n.abs() <= n_max)
        .map(|&(n, c)| c * if n >= 0 { up[2 * n as usize] } else { down[2 * n.unsigned_abs() as usize] })
        .sum())
}
