//! Jacobi polynomials `P_n^{(α,β)}(z) = (α+1)_n/n! · 2F1(-n, n+α+β+1; α+1; (1-z)/2)`
//! for complex parameters and argument.

use num_complex::Complex64;

/// Each term is formed as `(α+k+1)_{n-k} (-n)_k (n+α+β+1)_k / (n! k!) x^k`,
/// so `α+1` may be a non-positive integer.
pub fn jacobi_p(n: u32, alpha: Complex64, beta: Complex64, z: Complex64) -> Complex64 {
    let x = (Complex64::new(1.0, 0.0) - z) / 2.0;
    let one = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut fact_n = 1.0;
    for j in 1..=n {
        fact_n *= j as f64;
    }
    let mut lower = one; // (-n)_k (n+α+β+1)_k / k!
    let mut xk = one;
    for k in 0..=n {
        let mut upper = one; // (α+k+1)_{n-k}
        for j in k..n {
            upper *= alpha + (j + 1) as f64;
        }
        sum += upper * lower * xk;
        let kf = k as f64;
        lower *= (kf - n as f64) * (alpha + beta + (n as f64 + kf + 1.0)) / (kf + 1.0);
        xk *= x;
    }
    sum / fact_n
}

pub fn jacobi_p_real(n: u32, alpha: f64, beta: f64, z: f64) -> f64 {
    jacobi_p(n, Complex64::new(alpha, 0.0), Complex64::new(beta, 0.0), Complex64::new(z, 0.0)).re
}
