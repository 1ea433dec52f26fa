//! Biorthogonality of the lifted octahedral functions `r̃_n^m(s) = r_n^m(s⁴)`
//! on `0 ≤ s ≤ 1`, for `m = 0` and `m = -1`.

use super::quad::{de_quad, QuadResult};
use crate::error::{Error, Result};
use crate::exact::horner_f64;
use crate::octahedral::{generate, OctIndex};

/// `q_f(s) = 1 + 14s⁴ + s⁸`.
fn q_f(s: f64) -> f64 {
    let s4 = s.powi(4);
    1.0 + s4 * (14.0 + s4)
}

/// `∫₀¹ [q_v^{-2m} q_f^{-3n/2} r̃_n^m(s)] [q_v^{-2m} q_f^{-3n'/2} (1-s)^{1+12m+12n'}
/// r̃_{n'}^m((1+s)/(1-s))] q_v²/q_f² ds`, with `q_v = s(1-s⁴)`.
///
/// The rotated factor is evaluated as `(1+s)^{4d} Σ a_j t^{4(d-j)}` with
/// `t = (1-s)/(1+s)`, using `1 - σ⁴ = -8s(1+s²)/(1-s)⁴` and
/// `p_f(σ⁴) = 16 q_f(s)/(1-s)⁸` for `σ = (1+s)/(1-s)`, so nothing overflows
/// as `s → 1`.
pub fn octahedral_biorthog(n: i64, n_prime: i64, m: i64) -> Result<QuadResult> {
    if m != 0 && m != -1 {
        return Err(Error::Domain(format!("the s-interval integral diverges unless m ∈ {{0, -1}}, got m = {m}")));
    }
    let direct = generate(OctIndex::new(n, m))?;
    let rotated = generate(OctIndex::new(n_prime, m))?;
    let a_dir: Vec<f64> = direct.numer.to_f64_coeffs();
    let a_rot: Vec<f64> = rotated.numer.to_f64_coeffs();
    let d_rot = a_rot.len() as i32 - 1;
    let (ad, bd) = (direct.pow_one_minus_u as i32, direct.pow_pf as i32);
    let (ar, br) = (rotated.pow_one_minus_u as i32, rotated.pow_pf as i32);
    let k = 1 + 12 * m as i32 + 12 * n_prime as i32;
    let e_rot = k - 4 * d_rot + 4 * ar + 8 * br;
    let p_qv = -4 * m as i32 + 2;
    // the powers of s and of 1-s are each collected into one exponent so
    // that nothing overflows or underflows separately at the endpoints
    let e_s = p_qv - ar;
    let e_db = p_qv - ad + e_rot;
    de_quad(
        |s, _, db| {
            let (s2, s4) = (s * s, s.powi(4));
            let qf = q_f(s);
            // (1-s⁴) / (1-s)
            let ring = (1.0 + s) * (1.0 + s2);
            let direct = horner_f64(&a_dir, s4) * ring.powi(-ad) * qf.powi(-bd);
            let t4 = (db / (1.0 + s)).powi(4);
            let rev = a_rot.iter().fold(0.0, |acc, &c| acc * t4 + c);
            let rotated = (1.0 + s).powi(4 * d_rot) * rev * (-8.0 * (1.0 + s2)).powi(-ar) * (16.0 * qf).powi(-br);
            ring.powi(p_qv) * s.powi(e_s) * db.powi(e_db) * qf.powf(-1.5 * (n + n_prime) as f64 - 2.0) * direct * rotated
        },
        0.0,
        1.0,
        1e-14,
    )
}
