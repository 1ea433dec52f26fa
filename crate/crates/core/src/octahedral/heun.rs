//! Coefficient recurrences for the polynomial quadrant `n, m ≥ 0`.

use super::OctIndex;
use crate::error::{Error, Result};
use crate::exact::{int, ExactRational};
use num_traits::{One, Zero};

fn check_polynomial_quadrant(idx: OctIndex) -> Result<usize> {
    if idx.n < 0 || idx.m < 0 {
        return Err(Error::Domain(format!("coefficient recurrence needs n, m ≥ 0, got {idx}")));
    }
    Ok((3 * idx.n + 2 * idx.m) as usize)
}

fn terminated(idx: OctIndex, mut a: Vec<ExactRational>, deg: usize) -> Result<Vec<ExactRational>> {
    if a[deg + 1..].iter().any(|c| !c.is_zero()) {
        return Err(Error::Consistency(format!("coefficient series of {idx} does not terminate at degree {deg}")));
    }
    a.truncate(deg + 1);
    Ok(a)
}

/// Coefficients `a_0..a_{3n+2m}` of `r_n^m` from the third-order
/// generalized-Heun recurrence
///
/// `(k+1)(4k-4m+3) a_{k+1} + [k(52k-36m-168n-13) - (2m-9n)(12m+12n+1)] a_k
///  - [(k-1)(52k-276m-144n-65) + 2(14m+3n)(12m+12n+1)] a_{k-1}
///  - (k-2m-3n-2)(4k-12m-12n-9) a_{k-2} = 0`.
pub fn coeffs_via_recurrence(idx: OctIndex) -> Result<Vec<ExactRational>> {
    let deg = check_polynomial_quadrant(idx)?;
    let (n, m) = (idx.n, idx.m);
    let mut a = vec![ExactRational::one()];
    let at = |a: &Vec<ExactRational>, j: i64| if j < 0 { ExactRational::zero() } else { a[j as usize].clone() };
    for k in 0..(deg as i64 + 2) {
        let lead = (k + 1) * (4 * k - 4 * m + 3);
        assert!(lead != 0, "4k - 4m + 3 never vanishes for integer k");
        let c0 = k * (52 * k - 36 * m - 168 * n - 13) - (2 * m - 9 * n) * (12 * m + 12 * n + 1);
        let c1 = (k - 1) * (52 * k - 276 * m - 144 * n - 65) + 2 * (14 * m + 3 * n) * (12 * m + 12 * n + 1);
        let c2 = (k - 2 * m - 3 * n - 2) * (4 * k - 12 * m - 12 * n - 9);
        let next = (-int(c0) * at(&a, k) + int(c1) * at(&a, k - 1) + int(c2) * at(&a, k - 2)) / int(lead);
        a.push(next);
    }
    terminated(idx, a, deg)
}

/// Coefficients of `r_n^0` from the second-order Heun recurrence
///
/// `(k+1)(4k+3) a_{k+1} + [14k(4k-12n-1) + 9n(12n+1)] a_k
///  + (k-3n-1)(4k-12n-5) a_{k-1} = 0`.
pub fn coeffs_via_heun(n: i64) -> Result<Vec<ExactRational>> {
    let idx = OctIndex::new(n, 0);
    let deg = check_polynomial_quadrant(idx)?;
    let mut a = vec![ExactRational::one()];
    for k in 0..(deg as i64 + 2) {
        let c0 = 14 * k * (4 * k - 12 * n - 1) + 9 * n * (12 * n + 1);
        let c1 = (k - 3 * n - 1) * (4 * k - 12 * n - 5);
        let prev = if k >= 1 { a[k as usize - 1].clone() } else { ExactRational::zero() };
        let next = -(int(c0) * &a[k as usize] + int(c1) * prev) / int((k + 1) * (4 * k + 3));
        a.push(next);
    }
    terminated(idx, a, deg)
}
