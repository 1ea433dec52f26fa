//! Double-exponential (tanh-sinh) quadrature for integrands with algebraic
//! endpoint singularities.
//!
//! Nodes are generated together with their distances to both endpoints,
//! computed without cancellation, so an integrand can form `(x-a)^p` and
//! `(b-x)^q` accurately even when `x` itself rounds to an endpoint.

use crate::error::{Error, Result};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    /// Difference between the last two refinement levels.
    pub err_estimate: f64,
    pub evaluations: usize,
    /// The same rule applied to `|f|`; the scale for integrals that vanish.
    pub abs_value: f64,
}

/// Step of the coarsest level in the transformed variable.
const H0: f64 = 0.25;
/// Refinement stops once this many integrand evaluations have been spent.
pub const MAX_EVALUATIONS: usize = 1 << 13;
const MIN_LEVELS: usize = 3;
/// `|t|` beyond which `(π/2)sinh t > 360`, so both endpoint distances underflow
/// relative to the interval.
const T_MAX: f64 = 6.2;

/// `∫_a^b f` where `f(x, x-a, b-x)` is the full integrand.
pub fn de_quad<F>(mut f: F, a: f64, b: f64, rel_tol: f64) -> Result<QuadResult>
where
    F: FnMut(f64, f64, f64) -> f64,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("quadrature interval [{a}, {b}]")));
    }
    let len = b - a;
    let mut evaluations = 0usize;
    let mut node = |t: f64, evaluations: &mut usize| -> Result<(f64, f64)> {
        let y = PI / 2.0 * t.sinh();
        let da = len / (1.0 + (-2.0 * y).exp());
        let db = len / (1.0 + (2.0 * y).exp());
        if da == 0.0 || db == 0.0 {
            return Ok((0.0, 0.0));
        }
        let x = if da < db { a + da } else { b - db };
        let w = PI * t.cosh() * da * db / len;
        *evaluations += 1;
        let v = f(x, da, db);
        if !v.is_finite() {
            return Err(Error::NoConvergence(format!("integrand not finite at x = {x}")));
        }
        Ok((w * v, (w * v).abs()))
    };

    let mut h = H0;
    let (mut sum, mut abs_sum) = node(0.0, &mut evaluations)?;
    let mut k = 1;
    while k as f64 * h <= T_MAX {
        let t = k as f64 * h;
        for s in [t, -t] {
            let (v, a) = node(s, &mut evaluations)?;
            sum += v;
            abs_sum += a;
        }
        k += 1;
    }
    let mut estimate = sum * h;
    let mut level = 0;
    loop {
        h /= 2.0;
        let mut k = 1;
        while k as f64 * h <= T_MAX {
            let t = k as f64 * h;
            for s in [t, -t] {
                let (v, a) = node(s, &mut evaluations)?;
                sum += v;
                abs_sum += a;
            }
            k += 2;
        }
        let next = sum * h;
        let err = (next - estimate).abs();
        estimate = next;
        level += 1;
        let abs_value = abs_sum * h;
        let converged = err <= rel_tol * estimate.abs() || err <= rel_tol * abs_value || err < 1e-300;
        if (level >= MIN_LEVELS && converged) || evaluations >= MAX_EVALUATIONS {
            return Ok(QuadResult { value: estimate, err_estimate: err, evaluations, abs_value });
        }
    }
}

/// A node of a fixed rule with its distances to both endpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Node {
    pub x: f64,
    pub da: f64,
    pub db: f64,
    pub w: f64,
}

/// Fixed tanh-sinh nodes and weights on `[a, b]` with step `h`, for
/// integrands that are smooth up to the endpoints or have integrable
/// algebraic endpoint singularities.
pub fn de_rule(a: f64, b: f64, h: f64) -> Vec<Node> {
    let len = b - a;
    let kmax = (T_MAX / h) as i64;
    (-kmax..=kmax)
        .filter_map(|k| {
            let t = k as f64 * h;
            let y = PI / 2.0 * t.sinh();
            let da = len / (1.0 + (-2.0 * y).exp());
            let db = len / (1.0 + (2.0 * y).exp());
            let w = h * PI * t.cosh() * da * db / len;
            let x = if da < db { a + da } else { b - db };
            (da > 0.0 && db > 0.0 && w > 0.0).then_some(Node { x, da, db, w })
        })
        .collect()
}

/// A composite of [`de_rule`] over `[cuts[0], cuts[last]]`: the interval is
/// split at every cut and then into panels no wider than `max_width`.
/// `da` and `db` are distances to the ends of the whole interval.
pub fn panel_rule(cuts: &[f64], max_width: f64, h: f64) -> Vec<Node> {
    let (Some(&a), Some(&b)) = (cuts.first(), cuts.last()) else {
        return Vec::new();
    };
    let mut nodes = Vec::new();
    for seg in cuts.windows(2).filter(|s| s[1] > s[0]) {
        let panels = ((seg[1] - seg[0]) / max_width).ceil().max(1.0) as usize;
        let step = (seg[1] - seg[0]) / panels as f64;
        for p in 0..panels {
            let lo = seg[0] + p as f64 * step;
            let hi = if p + 1 == panels { seg[1] } else { lo + step };
            nodes.extend(de_rule(lo, hi, h).into_iter().map(|n| Node {
                da: if lo == a { n.da } else { n.x - a },
                db: if hi == b { n.db } else { b - n.x },
                ..n
            }));
        }
    }
    nodes
}

/// `∫_a^b g(x) (x-a)^p (b-x)^q dx` for smooth `g` and `p, q > -1`.
pub fn singular_quad<G>(mut g: G, a: f64, b: f64, (p, q): (f64, f64)) -> Result<QuadResult>
where
    G: FnMut(f64) -> f64,
{
    if p <= -1.0 || q <= -1.0 {
        return Err(Error::Domain(format!("non-integrable endpoint exponents ({p}, {q})")));
    }
    de_quad(|x, da, db| g(x) * da.powf(p) * db.powf(q), a, b, 1e-14)
}
