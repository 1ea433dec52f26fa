//! Gauss hypergeometric function by direct summation of its Maclaurin series.

use super::gamma::{is_nonpositive_integer, near_integer, rgamma};
use crate::error::{Error, Result};

/// Non-terminating series are only summed for `|x|` up to this bound.
pub const SERIES_GUARD: f64 = 0.8;
const MAX_TERMS: usize = 1_000_000;
/// A sum whose largest term exceeds both this and `CANCELLATION_RATIO · |sum|`
/// has lost more than ten of its sixteen digits and is rejected. Terms of
/// modest size are exempt, so values near a zero of the function survive.
const CANCELLATION_TERM: f64 = 1e6;
const CANCELLATION_RATIO: f64 = 1e10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hyp2F1Params {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub x: f64,
}

/// Number of terms of a terminating series (`a` or `b` a non-positive integer).
fn termination(a: f64, b: f64) -> Option<usize> {
    [a, b].iter().filter_map(|&p| near_integer(p).filter(|&k| k <= 0)).map(|k| (-k) as usize + 1).min()
}

/// Sum `sum_{k ≥ k0} t_k` with `t_{k0} = t0` and the 2F1 term ratio.
fn sum_series(a: f64, b: f64, c: f64, x: f64, t0: f64, k0: usize, nterms: Option<usize>) -> Result<f64> {
    let mut term = t0;
    let mut sum = t0;
    let mut k = k0;
    let mut small = 0;
    let mut largest = t0.abs();
    let checked = |sum: f64, largest: f64| {
        if largest > CANCELLATION_TERM && largest > CANCELLATION_RATIO * sum.abs() {
            Err(Error::NoConvergence(format!("2F1({a}, {b}; {c}; {x}): terms up to {largest:e} cancel to {sum:e}")))
        } else {
            Ok(sum)
        }
    };
    loop {
        if let Some(n) = nterms {
            if k + 1 >= n {
                return checked(sum, largest);
            }
        }
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
        sum += term;
        largest = largest.max(term.abs());
        k += 1;
        if nterms.is_none() {
            small = if term.abs() <= 1e-17 * sum.abs() { small + 1 } else { 0 };
            if small >= 2 || term == 0.0 {
                return checked(sum, largest);
            }
            if k > MAX_TERMS {
                return Err(Error::NoConvergence(format!("2F1({a}, {b}; {c}; {x})")));
            }
        }
    }
}

/// `2F1(a, b; c; x)`.
///
/// Terminating series are summed for any `x`; otherwise `|x| ≤ 0.8` is
/// required. A non-positive integer `c` is accepted only when the series
/// terminates before the vanishing denominator is reached.
pub fn gauss_2f1(p: Hyp2F1Params) -> Result<f64> {
    let Hyp2F1Params { a, b, c, x } = p;
    if x == 0.0 {
        return Ok(1.0);
    }
    let nterms = termination(a, b);
    if is_nonpositive_integer(c) {
        let pole = (-near_integer(c).unwrap()) as usize + 1;
        if nterms.is_none_or(|n| n > pole) {
            return Err(Error::Undefined(format!("2F1 denominator parameter c = {c}")));
        }
    }
    if nterms.is_none() && x.abs() > SERIES_GUARD {
        return Err(Error::Domain(format!("|x| = {} beyond series guard {SERIES_GUARD}", x.abs())));
    }
    sum_series(a, b, c, x, 1.0, 0, nterms)
}

/// `2F1(a, b; c; x)/Γ(c)`, finite for every `c`. At `c = 1 - N`
/// (`N = 1, 2, …`) it is the limit
/// `(a)_N (b)_N / N! · x^N · 2F1(a+N, b+N; N+1; x)`.
pub fn gauss_2f1_regularized(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    if !is_nonpositive_integer(c) {
        return Ok(gauss_2f1(Hyp2F1Params { a, b, c, x })? * rgamma(c));
    }
    let big_n = (1 - near_integer(c).unwrap()) as usize;
    let mut pre = x.powi(big_n as i32);
    for j in 0..big_n {
        pre *= (a + j as f64) * (b + j as f64) / (j + 1) as f64;
    }
    if pre == 0.0 {
        return Ok(0.0);
    }
    let nf = big_n as f64;
    Ok(pre * gauss_2f1(Hyp2F1Params { a: a + nf, b: b + nf, c: nf + 1.0, x })?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: f64, b: f64, c: f64, x: f64) -> f64 {
        gauss_2f1(Hyp2F1Params { a, b, c, x }).unwrap()
    }

    #[test]
    fn elementary_cases() {
        assert_eq!(f(0.3, 0.7, 1.1, 0.0), 1.0);
        // 2F1(1,1;2;x) = -ln(1-x)/x
        assert!((f(1.0, 1.0, 2.0, 0.5) + (0.5f64).ln() / 0.5).abs() < 1e-15);
        // 2F1(a,b;b;x) = (1-x)^-a
        assert!((f(0.3, 1.7, 1.7, -0.6) - 1.6f64.powf(-0.3)).abs() < 1e-15);
        assert!((f(-2.0, -13.0 / 4.0, -0.25, 1.0) + 64.0).abs() < 1e-12);
    }

    #[test]
    fn cancellation_is_reported() {
        // the series behind P_{39.8}^{1/4}(0.3)
        let r = gauss_2f1(Hyp2F1Params { a: -39.8, b: 40.8, c: 0.75, x: 0.35 });
        assert!(matches!(r, Err(Error::NoConvergence(_))), "{r:?}");
    }

    #[test]
    fn guards() {
        assert!(matches!(gauss_2f1(Hyp2F1Params { a: 0.5, b: 0.5, c: 1.0, x: 0.9 }), Err(Error::Domain(_))));
        assert!(matches!(gauss_2f1(Hyp2F1Params { a: 0.5, b: 0.5, c: -1.0, x: 0.1 }), Err(Error::Undefined(_))));
        assert!(gauss_2f1(Hyp2F1Params { a: -1.0, b: 0.5, c: -1.0, x: 3.0 }).is_ok());
    }

    #[test]
    fn regularized_limit() {
        // F(a,b;c;x)/Γ(c) is continuous in c through the poles of Γ
        let near = gauss_2f1_regularized(0.3, 0.6, -1.0 + 1e-7, 0.4).unwrap();
        let at = gauss_2f1_regularized(0.3, 0.6, -1.0, 0.4).unwrap();
        assert!((near - at).abs() < 1e-5 * at.abs());
    }
}
