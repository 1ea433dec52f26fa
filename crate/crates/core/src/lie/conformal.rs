use super::forms::Elements;
use super::ladder_ops::build_ladders;
use super::matrix::OpMatrix;
use super::window::Window;
use crate::error::{Error, Result};
use crate::oracle::ferrers_p;
use num_complex::Complex64;

type Point = [f64; 3];

/// `r^ν P_ν^μ(cos θ) e^{iμφ}` on the principal branch `-π < φ < π`.
pub fn solid_harmonic(nu: f64, mu: f64, x: Point) -> Result<Complex64> {
    let [x1, x2, x3] = x;
    let rho2 = x1 * x1 + x2 * x2;
    let r = (rho2 + x3 * x3).sqrt();
    if !(r > 0.0) || rho2 <= 1e-12 * r * r {
        return Err(Error::Domain(format!("solid harmonic is singular on the x₃ axis, got {x:?}")));
    }
    let phi = x2.atan2(x1);
    if phi.abs() > std::f64::consts::PI - 1e-3 {
        return Err(Error::Domain(format!("point {x:?} is on the branch cut φ = ±π")));
    }
    Ok(r.powf(nu) * ferrers_p(nu, mu, x3 / r)? * Complex64::from_polar(1.0, mu * phi))
}

/// The conformal operators on three-space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConformalOp {
    /// `iJ_i = x_j ∂_k - x_k ∂_j`.
    Rotation(usize),
    /// `P_i = ∂_i`.
    Translation(usize),
    /// `C_i = x_i - |x|² ∂_i + 2x_i (x·∂)`.
    Special(usize),
    /// `D = x·∂ + ½`.
    Dilatation,
}

impl ConformalOp {
    pub const ALL: [ConformalOp; 10] = [
        ConformalOp::Rotation(0),
        ConformalOp::Rotation(1),
        ConformalOp::Rotation(2),
        ConformalOp::Translation(0),
        ConformalOp::Translation(1),
        ConformalOp::Translation(2),
        ConformalOp::Special(0),
        ConformalOp::Special(1),
        ConformalOp::Special(2),
        ConformalOp::Dilatation,
    ];
}

const FD_STEP: f64 = 1e-5;

fn gradient(f: &impl Fn(Point) -> Result<Complex64>, x: Point) -> Result<[Complex64; 3]> {
    let mut g = [Complex64::default(); 3];
    for (i, gi) in g.iter_mut().enumerate() {
        let (mut a, mut b) = (x, x);
        a[i] += FD_STEP;
        b[i] -= FD_STEP;
        *gi = (f(a)? - f(b)?) / (2.0 * FD_STEP);
    }
    Ok(g)
}

/// `op S_ν^μ` at `x` by central differences in Cartesian coordinates.
pub fn apply_differential(op: ConformalOp, nu: f64, mu: f64, x: Point) -> Result<Complex64> {
    let f = |p: Point| solid_harmonic(nu, mu, p);
    let g = gradient(&f, x)?;
    let v = f(x)?;
    let x_dot_grad: Complex64 = (0..3).map(|i| x[i] * g[i]).sum();
    let r2: f64 = x.iter().map(|t| t * t).sum();
    Ok(match op {
        ConformalOp::Rotation(i) => {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            x[j] * g[k] - x[k] * g[j]
        }
        ConformalOp::Translation(i) => g[i],
        ConformalOp::Special(i) => x[i] * v - r2 * g[i] + 2.0 * x[i] * x_dot_grad,
        ConformalOp::Dilatation => x_dot_grad + 0.5 * v,
    })
}

fn op_matrix(e: &Elements, op: ConformalOp) -> Result<OpMatrix> {
    Ok(match op {
        ConformalOp::Rotation(i) => e.j[i].times_i(),
        ConformalOp::Translation(i) => e.p()?[i].clone(),
        ConformalOp::Special(i) => e.conformal()?[i].clone(),
        ConformalOp::Dilatation => e.d.clone(),
    })
}

/// `op S_ν^μ` at `x` from the ladder matrices: the `(0,0)` column applied
/// to the neighbouring solid harmonics.
pub fn apply_matrix(op: ConformalOp, nu: f64, mu: f64, x: Point) -> Result<Complex64> {
    let w = Window::square(nu, mu, 2, 2)?;
    let e = Elements::new(&build_ladders(w, false))?;
    let m = op_matrix(&e, op)?;
    let mut acc = Complex64::default();
    for ((n, k), v) in m.column((0, 0)) {
        if v.norm() != 0.0 {
            acc += v * solid_harmonic(w.nu(n), w.mu(k), x)?;
        }
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug)]
pub struct ConformalResidual {
    pub op: ConformalOp,
    pub point: Point,
    pub differential: Complex64,
    pub matrix: Complex64,
    /// `|differential - matrix| / max(1, |matrix|)`.
    pub residual: f64,
}

/// Every conformal operator at every sample point.
pub fn conformal_ops_check(nu: f64, mu: f64, points: &[Point]) -> Result<Vec<ConformalResidual>> {
    let mut out = Vec::new();
    for &x in points {
        for op in ConformalOp::ALL {
            let differential = apply_differential(op, nu, mu, x)?;
            let matrix = apply_matrix(op, nu, mu, x)?;
            let residual = (differential - matrix).norm() / matrix.norm().max(1.0);
            out.push(ConformalResidual { op, point: x, differential, matrix, residual });
        }
    }
    Ok(out)
}

/// `|∇² S_ν^μ| / max(1, |S_ν^μ|)` at `x` with a fourth-order stencil.
pub fn laplacian_residual(nu: f64, mu: f64, x: Point) -> Result<f64> {
    let h = 1e-3;
    let v = solid_harmonic(nu, mu, x)?;
    let mut lap = Complex64::default();
    for i in 0..3 {
        let at = |k: f64| {
            let mut p = x;
            p[i] += k * h;
            solid_harmonic(nu, mu, p)
        };
        lap += (-at(2.0)? + 16.0 * at(1.0)? - 30.0 * v + 16.0 * at(-1.0)? - at(-2.0)?) / (12.0 * h * h);
    }
    Ok(lap.norm() / v.norm().max(1.0))
}
