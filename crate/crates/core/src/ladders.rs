//! Differential and three-term recurrences in the degree and order of
//! Legendre-type functions with arbitrary `(ν, μ)`, evaluated through the
//! hypergeometric oracle; plus a propagator that fills an `(n, m)` window
//! from four seeds.
//!
//! All recurrences are stated for Ferrers functions. The Legendre forms
//! replace `√(1-z²)` by `√(z²-1)` and multiply each term by a sign; for
//! `Q̂ = e^{-μπi}Q` each term additionally picks up `(-1)^δ`, where `δ` is
//! its order shift.

use crate::error::{Error, Result};
use crate::oracle::{LegendreFn, LegendreKind};

/// The four ladders; `J`, `K`, `R`, `S` in the Lie-algebra notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ladder {
    /// `Δ(ν,μ) = ±(0,1)`.
    Order,
    /// `±(1,0)`.
    Degree,
    /// `±(1,1)`.
    DiagPlus,
    /// `±(1,-1)`.
    DiagMinus,
}

/// One of the eight differential recurrences
/// `α± F_{ν+Δν}^{μ+Δμ} = κ z^{ε₀-σ₀} (1-z²)^{(ε₁-σ₁)/2} d/dz[z^{σ₀} (1-z²)^{σ₁/2} F_ν^μ]`
/// with `κ = ∓1`, except on the `±(1,-1)` ladder where `κ = ±1` and
/// `σ₀ = 1/2 ± (ν+1/2) ∓ μ`. That ladder is the image of `∓(1,1)` under
/// `ν+1/2 ↦ -(ν+1/2)`, which leaves `F_ν^μ` unchanged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LadderStep {
    pub ladder: Ladder,
    pub raising: bool,
}

pub const LADDERS: [Ladder; 4] = [Ladder::Order, Ladder::Degree, Ladder::DiagPlus, Ladder::DiagMinus];

pub fn ladder_steps() -> [LadderStep; 8] {
    let mut out = [LadderStep { ladder: Ladder::Order, raising: true }; 8];
    for (i, &l) in LADDERS.iter().enumerate() {
        out[2 * i] = LadderStep { ladder: l, raising: true };
        out[2 * i + 1] = LadderStep { ladder: l, raising: false };
    }
    out
}

impl LadderStep {
    fn pm(&self) -> f64 {
        if self.raising {
            1.0
        } else {
            -1.0
        }
    }

    pub fn delta(&self) -> (i64, i64) {
        let s = if self.raising { 1 } else { -1 };
        match self.ladder {
            Ladder::Order => (0, s),
            Ladder::Degree => (s, 0),
            Ladder::DiagPlus => (s, s),
            Ladder::DiagMinus => (s, -s),
        }
    }

    /// `(σ₀, σ₁)` at `(ν, μ)`.
    pub fn sigmas(&self, nu: f64, mu: f64) -> (f64, f64) {
        let pm = self.pm();
        let h = nu + 0.5;
        match self.ladder {
            Ladder::Order => (0.0, -pm * mu),
            Ladder::Degree => (0.0, 0.5 + pm * h),
            Ladder::DiagPlus => (0.5 + pm * h + pm * mu, -pm * mu),
            Ladder::DiagMinus => (0.5 + pm * h - pm * mu, pm * mu),
        }
    }

    /// `κ`, the sign in front of the derivative term.
    pub fn prefix(&self) -> f64 {
        match self.ladder {
            Ladder::DiagMinus => self.pm(),
            _ => -self.pm(),
        }
    }

    /// `(ε₀, ε₁)`.
    pub fn eps(&self) -> (i32, i32) {
        match self.ladder {
            Ladder::Order => (0, 1),
            Ladder::Degree => (0, 2),
            Ladder::DiagPlus | Ladder::DiagMinus => (1, 1),
        }
    }

    /// `α±` at `(ν, μ)`.
    pub fn alpha(&self, nu: f64, mu: f64) -> f64 {
        match (self.ladder, self.raising) {
            (Ladder::Order, true) => 1.0,
            (Ladder::Order, false) => (nu + mu) * (nu - mu + 1.0),
            (Ladder::Degree, true) => nu - mu + 1.0,
            (Ladder::Degree, false) => nu + mu,
            (Ladder::DiagPlus, true) => 1.0,
            (Ladder::DiagPlus, false) => (nu + mu) * (nu + mu - 1.0),
            (Ladder::DiagMinus, true) => (nu - mu + 1.0) * (nu - mu + 2.0),
            (Ladder::DiagMinus, false) => 1.0,
        }
    }
}

fn is_legendre(f: LegendreFn) -> bool {
    matches!(f, LegendreFn::LegendreP | LegendreFn::LegendreQhat)
}

fn neg_pow(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `i^k` for even `k`.
fn i_pow_even(k: i64) -> f64 {
    debug_assert!(k % 2 == 0);
    neg_pow(k / 2)
}

fn eval(f: LegendreFn, nu: f64, mu: f64, z: f64) -> Result<f64> {
    LegendreKind::new(f, nu, mu).eval(z)
}

const FD_STEP: f64 = 1e-5;

fn check_z(f: LegendreFn, z: f64) -> Result<()> {
    let ok = if is_legendre(f) { z > 1.0 } else { z > 0.0 && z < 1.0 };
    if ok && z.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{f:?} recurrence needs {} , got z = {z}", if is_legendre(f) { "z > 1" } else { "0 < z < 1" })))
    }
}

/// `(α± F_shifted, right-hand side)` of a differential recurrence in its
/// algebraic form, with the `z`-derivative by central differences. Ferrers
/// functions need `0 < z < 1` so that `z^{σ₀}` is real.
pub fn diff_recurrence_sides(f: LegendreFn, nu: f64, mu: f64, z: f64, step: LadderStep) -> Result<(f64, f64)> {
    check_z(f, z)?;
    let (s0, s1) = step.sigmas(nu, mu);
    let (e0, e1) = step.eps();
    let (dn, dm) = step.delta();
    let leg = is_legendre(f);
    // w = 1-z² (Ferrers) or z²-1 (Legendre), both positive
    let w = |z: f64| if leg { z * z - 1.0 } else { 1.0 - z * z };
    let g = |z: f64| -> Result<f64> { Ok(z.powf(s0) * w(z).powf(s1 / 2.0) * eval(f, nu, mu, z)?) };
    let h = FD_STEP;
    let dg = (g(z + h)? - g(z - h)?) / (2.0 * h);
    let mut rhs = step.prefix() * z.powf(e0 as f64 - s0) * w(z).powf((e1 as f64 - s1) / 2.0) * dg;
    if leg {
        rhs *= i_pow_even(e1 as i64 + dm);
    }
    let mut lhs = step.alpha(nu, mu) * eval(f, nu + dn as f64, mu + dm as f64, z)?;
    if f == LegendreFn::LegendreQhat {
        lhs *= neg_pow(dm);
    }
    Ok((lhs, rhs))
}

/// `(α± F_shifted, right-hand side)` in the circular form with `z = cos θ`:
/// `[±D_θ - μ cot θ]`, `{±sin θ D_θ + [(ν+1/2) ± 1/2] cos θ}`,
/// `{±cos θ D_θ - μ csc θ - [(ν+1/2) ± 1/2] sin θ}`,
/// `{∓cos θ D_θ - μ csc θ + [(ν+1/2) ± 1/2] sin θ}`.
pub fn trig_recurrence_sides(f: LegendreFn, nu: f64, mu: f64, theta: f64, step: LadderStep) -> Result<(f64, f64)> {
    if is_legendre(f) {
        return Err(Error::Domain(format!("the circular recurrence form is for Ferrers functions, not {f:?}")));
    }
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(Error::Domain(format!("θ = {theta}")));
    }
    let p = |t: f64| eval(f, nu, mu, t.cos());
    let h = FD_STEP;
    let d = (p(theta + h)? - p(theta - h)?) / (2.0 * h);
    let v = p(theta)?;
    let pm = step.pm();
    let (s, c) = theta.sin_cos();
    let shifted = nu + 0.5 + pm * 0.5;
    let rhs = match step.ladder {
        Ladder::Order => pm * d - mu * c / s * v,
        Ladder::Degree => pm * s * d + shifted * c * v,
        Ladder::DiagPlus => pm * c * d - mu / s * v - shifted * s * v,
        Ladder::DiagMinus => -pm * c * d - mu / s * v + shifted * s * v,
    };
    let (dn, dm) = step.delta();
    let lhs = step.alpha(nu, mu) * eval(f, nu + dn as f64, mu + dm as f64, theta.cos())?;
    Ok((lhs, rhs))
}

/// `|lhs - rhs| / max(|lhs|, |rhs|)`, or the absolute difference when both
/// are below `1e-300`.
pub fn relative_gap(lhs: f64, rhs: f64) -> f64 {
    let scale = lhs.abs().max(rhs.abs());
    if scale < 1e-300 {
        (lhs - rhs).abs()
    } else {
        (lhs - rhs).abs() / scale
    }
}

pub fn diff_recurrence_check(f: LegendreFn, nu: f64, mu: f64, z: f64, step: LadderStep) -> Result<f64> {
    let (l, r) = diff_recurrence_sides(f, nu, mu, z, step)?;
    Ok(relative_gap(l, r))
}

pub fn trig_recurrence_check(f: LegendreFn, nu: f64, mu: f64, theta: f64, step: LadderStep) -> Result<f64> {
    let (l, r) = trig_recurrence_sides(f, nu, mu, theta, step)?;
    Ok(relative_gap(l, r))
}

/// One term `coef · s^power · F_{ν+dn}^{μ+dm}` of a three-term recurrence,
/// with `s = √(1-z²)` in Ferrers form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Term {
    pub shift: (i64, i64),
    pub power: u32,
    pub coef: f64,
}

/// `Order` and `Degree` are the classical recurrences; the diagonal ones
/// link `F_{ν±1}^{μ+1}`, `F_ν^μ` and `F_{ν∓1}^{μ-1}`.
pub fn three_term(which: Ladder, nu: f64, mu: f64, z: f64) -> Vec<Term> {
    let t = |dn, dm, power, coef| Term { shift: (dn, dm), power, coef };
    match which {
        Ladder::Order => vec![t(0, 1, 1, 1.0), t(0, 0, 0, 2.0 * mu * z), t(0, -1, 1, (nu + mu) * (nu - mu + 1.0))],
        Ladder::Degree => vec![t(1, 0, 0, nu - mu + 1.0), t(0, 0, 0, -(2.0 * nu + 1.0) * z), t(-1, 0, 0, nu + mu)],
        Ladder::DiagPlus | Ladder::DiagMinus => {
            let pm = if which == Ladder::DiagPlus { 1.0 } else { -1.0 };
            let k = pm as i64;
            let h = nu + 0.5;
            vec![
                t(k, 1, 1, 1.0),
                t(0, 0, 2, pm * (2.0 * nu + 1.0)),
                t(0, 0, 0, 2.0 * mu),
                t(-k, -1, 1, (h + pm * (mu - 0.5)) * (h + pm * (mu - 1.5))),
            ]
        }
    }
}

/// The term's multiplier in the given function family: `s^power` with the
/// Legendre sign `i^{power-δ}` and the `Q̂` sign `(-1)^δ`.
fn term_weight(f: LegendreFn, term: &Term, z: f64) -> f64 {
    let dm = term.shift.1;
    let s = if is_legendre(f) { (z * z - 1.0).sqrt() } else { (1.0 - z * z).sqrt() };
    let mut w = s.powi(term.power as i32);
    if is_legendre(f) {
        w *= i_pow_even(term.power as i64 - dm);
    }
    if f == LegendreFn::LegendreQhat {
        w *= neg_pow(dm);
    }
    w
}

/// `|Σ terms| / Σ |terms|` for a three-term recurrence centred at `(ν, μ)`.
pub fn three_term_check(f: LegendreFn, nu: f64, mu: f64, z: f64, which: Ladder) -> Result<f64> {
    let mut sum = 0.0;
    let mut scale = 0.0;
    for term in three_term(which, nu, mu, z) {
        let v = term.coef * term_weight(f, &term, z) * eval(f, nu + term.shift.0 as f64, mu + term.shift.1 as f64, z)?;
        sum += v;
        scale += v.abs();
    }
    Ok(if scale == 0.0 { 0.0 } else { sum.abs() / scale })
}

/// A propagated window: `values[n][m]` holds `F_{ν₀+n}^{μ₀+m}(z)`, or `None`
/// where every available recurrence had a vanishing pivot.
#[derive(Clone, Debug, PartialEq)]
pub struct Propagated {
    pub function: LegendreFn,
    pub nu0: f64,
    pub mu0: f64,
    pub z: f64,
    pub values: Vec<Vec<Option<f64>>>,
}

impl Propagated {
    pub fn get(&self, n: usize, m: usize) -> Option<f64> {
        self.values.get(n).and_then(|row| row.get(m).copied().flatten())
    }

    pub fn unavailable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (n, row) in self.values.iter().enumerate() {
            for (m, v) in row.iter().enumerate() {
                if v.is_none() {
                    out.push((n, m));
                }
            }
        }
        out
    }
}

/// Solves a three-term recurrence centred at `(ν, μ)` for the term with the
/// given shift; `None` if its coefficient vanishes.
fn solve_for(f: LegendreFn, which: Ladder, nu: f64, mu: f64, z: f64, target: (i64, i64), known: &dyn Fn(i64, i64) -> Option<f64>) -> Option<f64> {
    let terms = three_term(which, nu, mu, z);
    let mut pivot = 0.0;
    let mut rest = 0.0;
    for t in &terms {
        let w = t.coef * term_weight(f, t, z);
        if t.shift == target {
            pivot += w;
        } else {
            rest += w * known(t.shift.0, t.shift.1)?;
        }
    }
    (pivot.abs() > 1e-14).then(|| -rest / pivot)
}

/// Fills the window `n ∈ [0, n_max]`, `m ∈ [0, m_max]` above `(ν₀, μ₀)` from
/// the four oracle seeds at `(n, m) ∈ {0,1}²`. Rows are extended in `μ`
/// with the order recurrence; new rows come from the degree recurrence,
/// falling back to the order recurrence where the degree pivot
/// `ν-μ+1` vanishes.
pub fn propagate(f: LegendreFn, nu0: f64, mu0: f64, z: f64, n_max: usize, m_max: usize) -> Result<Propagated> {
    if is_legendre(f) {
        check_z(f, z)?;
    } else if !(z > -1.0 && z < 1.0) {
        return Err(Error::Domain(format!("Ferrers propagation needs -1 < z < 1, got {z}")));
    }
    let mut values = vec![vec![None; m_max + 1]; n_max + 1];
    for n in 0..=n_max.min(1) {
        for m in 0..=m_max.min(1) {
            values[n][m] = Some(eval(f, nu0 + n as f64, mu0 + m as f64, z)?);
        }
    }
    let order_step = |values: &Vec<Vec<Option<f64>>>, n: usize, m: usize| -> Option<f64> {
        if m < 2 {
            return None;
        }
        let (nu, mu) = (nu0 + n as f64, mu0 + (m - 1) as f64);
        let known = |dn: i64, dm: i64| values[n][(m as i64 - 1 + dm) as usize].filter(|_| dn == 0);
        solve_for(f, Ladder::Order, nu, mu, z, (0, 1), &known)
    };
    for n in 0..=n_max.min(1) {
        for m in 2..=m_max {
            values[n][m] = order_step(&values, n, m);
        }
    }
    for n in 2..=n_max {
        for m in 0..=m_max {
            let (nu, mu) = (nu0 + (n - 1) as f64, mu0 + m as f64);
            let known = |dn: i64, dm: i64| values[(n as i64 - 1 + dn) as usize][m].filter(|_| dm == 0);
            values[n][m] = solve_for(f, Ladder::Degree, nu, mu, z, (1, 0), &known).or_else(|| order_step(&values, n, m));
        }
    }
    Ok(Propagated { function: f, nu0, mu0, z, values })
}
