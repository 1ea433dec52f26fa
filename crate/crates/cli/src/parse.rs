//! Numeric arguments: reals as decimals or exact `p/q`, and grids.

use algleg::exact::{to_f64, ExactRational};

/// A decimal, or `p/q` rounded once to the nearest double.
pub fn real(s: &str) -> Result<f64, String> {
    let s = s.trim();
    if s.contains('/') {
        let q: ExactRational = s.parse().map_err(|e| format!("`{s}` is not a rational p/q: {e}"))?;
        return Ok(to_f64(&q));
    }
    let x: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

/// `a:b:n` (`n` equally spaced points, both ends included) or a comma list.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid(pub Vec<f64>);

impl Grid {
    pub fn parse(s: &str) -> Result<Grid, String> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [a, b, n] => {
                let (a, b) = (real(a)?, real(b)?);
                let n: usize = n.trim().parse().map_err(|_| format!("`{n}` is not a point count"))?;
                Ok(Grid(linspace(a, b, n)?))
            }
            [_] => s.split(',').map(real).collect::<Result<_, _>>().map(Grid),
            _ => Err(format!("`{s}` is neither a:b:n nor a comma list")),
        }
    }
}

pub fn linspace(a: f64, b: f64, n: usize) -> Result<Vec<f64>, String> {
    match n {
        0 => Err("a grid needs at least one point".into()),
        1 => Ok(vec![a]),
        _ => Ok((0..n).map(|i| if i + 1 == n { b } else { a + (b - a) * i as f64 / (n - 1) as f64 }).collect()),
    }
}

/// `a:b` or a single integer.
pub fn int_range(s: &str) -> Result<(i64, i64), String> {
    let p = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("`{t}` is not an integer"));
    let (lo, hi) = match s.split_once(':') {
        Some((a, b)) => (p(a)?, p(b)?),
        None => (p(s)?, p(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}
