//! Octahedral functions `r_n^m(u)` for all `(n, m)` in Z².
//!
//! Each function is stored as `numer(u) * (1-u)^(-a) * (1+14u+u^2)^(-b)`.
//! The four quadrant shapes are checked whenever a value is constructed:
//!
//! | quadrant        | `a`      | `b`      | `deg numer`     |
//! |-----------------|----------|----------|-----------------|
//! | n, m ≥ 0        | 0        | 0        | 3n+2m           |
//! | n ≥ 0, m = −m′−1 | 3+4m′    | 0        | 1+3n+2m′        |
//! | n = −n′−1, m ≥ 0 | 0        | 2+3n′    | 1+3n′+2m        |
//! | both negative   | 3+4m′    | 2+3n′    | 2+3n′+2m′       |

mod diffrec;
mod form;
mod heun;
mod hyprow;
mod recurrences;

pub use diffrec::{apply_diff_recurrence, diff_step, DiffStep, DIFF_DELTAS};
pub use heun::{coeffs_via_heun, coeffs_via_recurrence};
pub use hyprow::hypergeometric_row;
pub use recurrences::{diagonal_residuals, three_term_residuals};

use crate::error::{Error, Result};
use crate::exact::{int, pochhammer, rat, to_f64, ExactRational, RationalFunction, RationalPoly};
use form::Form;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OctIndex {
    pub n: i64,
    pub m: i64,
}

impl OctIndex {
    pub const fn new(n: i64, m: i64) -> Self {
        OctIndex { n, m }
    }

    /// Exponents `(a, b, deg numer)` of the quadrant form.
    pub fn shape(&self) -> (u32, u32, usize) {
        let (n, m) = (self.n, self.m);
        let (a, dm) = if m >= 0 { (0, 2 * m) } else { (3 + 4 * (-m - 1), 1 + 2 * (-m - 1)) };
        let (b, dn) = if n >= 0 { (0, 3 * n) } else { (2 + 3 * (-n - 1), 1 + 3 * (-n - 1)) };
        (a as u32, b as u32, (dm + dn) as usize)
    }
}

impl fmt::Display for OctIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r_{}^{}", self.n, self.m)
    }
}

/// `r_n^m(u) = numer(u) (1-u)^(-a) p_f(u)^(-b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct OctahedralFunction {
    pub index: OctIndex,
    pub numer: RationalPoly,
    pub pow_one_minus_u: u32,
    pub pow_pf: u32,
    numer_f64: Vec<f64>,
}

impl OctahedralFunction {
    fn from_form(index: OctIndex, form: Form) -> Result<Self> {
        let (a, b, deg) = index.shape();
        let bad = |what: &str| Error::Consistency(format!("{index}: {what}"));
        if form.a != a || form.b != b {
            return Err(bad(&format!("denominator exponents ({}, {}) expected ({a}, {b})", form.a, form.b)));
        }
        if form.numer.degree() != Some(deg) {
            return Err(bad(&format!("numerator degree {:?} expected {deg}", form.numer.degree())));
        }
        if !form.numer.coeff(0).is_one() {
            return Err(bad("constant term is not 1"));
        }
        let mut lead = form.numer.leading();
        if a % 2 == 1 {
            lead = -lead;
        }
        if lead != d_coeff(index) {
            return Err(bad(&format!("leading coefficient {lead} differs from d_n^m")));
        }
        let numer_f64 = form.numer.to_f64_coeffs();
        Ok(OctahedralFunction { index, numer: form.numer, pow_one_minus_u: a, pow_pf: b, numer_f64 })
    }

    /// Validate a rational function as `r_n^m` and store it in structured form.
    pub fn from_rational_function(index: OctIndex, f: &RationalFunction) -> Result<Self> {
        Self::from_form(index, Form::from_rational_function(f)?)
    }

    fn form(&self) -> Form {
        Form { numer: self.numer.clone(), a: self.pow_one_minus_u, b: self.pow_pf }
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        self.form().to_rational_function()
    }

    pub fn eval(&self, u: &ExactRational) -> Result<ExactRational> {
        let omu = ExactRational::one() - u;
        let pf = crate::exact::invariant_polys().pf.eval(u);
        if (self.pow_one_minus_u > 0 && omu.is_zero()) || (self.pow_pf > 0 && pf.is_zero()) {
            return Err(Error::Pole(format!("{} at u = {u}", self.index)));
        }
        let mut v = self.numer.eval(u);
        for _ in 0..self.pow_one_minus_u {
            v /= &omu;
        }
        for _ in 0..self.pow_pf {
            v /= &pf;
        }
        Ok(v)
    }

    pub fn eval_f64(&self, u: f64) -> Result<f64> {
        let omu = 1.0 - u;
        let pf = 1.0 + 14.0 * u + u * u;
        if (self.pow_one_minus_u > 0 && omu == 0.0) || (self.pow_pf > 0 && pf == 0.0) {
            return Err(Error::Pole(format!("{} at u = {u}", self.index)));
        }
        let v = crate::exact::horner_f64(&self.numer_f64, u)
            / omu.powi(self.pow_one_minus_u as i32)
            / pf.powi(self.pow_pf as i32);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Pole(format!("{} at u = {u}", self.index)))
        }
    }
}

impl fmt::Display for OctahedralFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.pow_one_minus_u > 0 {
            parts.push(format!("(1−u)^(−{})", self.pow_one_minus_u));
        }
        if self.pow_pf > 0 {
            parts.push(format!("(1 + 14u + u²)^(−{})", self.pow_pf));
        }
        if parts.is_empty() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}({})", parts.concat(), self.numer)
        }
    }
}

/// Leading coefficient `d_n^m` of `r_n^m` as `u → ∞`.
pub fn d_coeff(idx: OctIndex) -> ExactRational {
    let (n, m) = (idx.n, idx.m);
    let p = |d: ExactRational, k: i64| pochhammer(&d, k).expect("octahedral Pochhammer factors never vanish");
    let sign = if (m + n).rem_euclid(2) == 0 { int(1) } else { int(-1) };
    let three = ExactRational::from_integer(3.into());
    sign * three.pow(3 * m as i32) * p(rat(5, 12), m - n) * p(rat(13, 12), m + n) / (p(rat(1, 4), m) * p(rat(5, 4), m))
}

fn seed_polys() -> [(OctIndex, RationalPoly); 4] {
    [
        (OctIndex::new(0, 0), RationalPoly::one()),
        (OctIndex::new(0, 1), RationalPoly::from_i64(&[1, -26, -39])),
        (OctIndex::new(1, 0), RationalPoly::from_coeffs(vec![int(1), int(-39), rat(-195, 7), rat(13, 7)])),
        (OctIndex::new(1, 1), RationalPoly::from_i64(&[1, 175, -150, 3550, 325, 195])),
    ]
}

/// The four hand-computable seeds `r_0^0, r_0^1, r_1^0, r_1^1`.
pub fn seed_functions() -> HashMap<OctIndex, OctahedralFunction> {
    seed_polys()
        .into_iter()
        .map(|(i, p)| (i, OctahedralFunction::from_form(i, Form::poly(p)).expect("seed satisfies structure")))
        .collect()
}

type Cache = RwLock<HashMap<OctIndex, Arc<OctahedralFunction>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(seed_functions().into_iter().map(|(i, f)| (i, Arc::new(f))).collect()))
}

fn poly_const(c: ExactRational) -> RationalPoly {
    RationalPoly::constant(c)
}

/// `r_n^m`, built from the seeds by the three-term recurrences in `m`
/// (at `n ∈ {0, 1}`) and then in `n`. Results are memoized.
pub fn generate(idx: OctIndex) -> Result<Arc<OctahedralFunction>> {
    if let Some(f) = cache().read().expect("cache lock").get(&idx) {
        return Ok(f.clone());
    }
    let (n, m) = (idx.n, idx.m);
    let inv = crate::exact::invariant_polys();
    let form = if n == 0 || n == 1 {
        if m >= 2 {
            // (4k-3)(4k+1) r^{k+1} = (4k-3)(4k+1) p_e r^k + 3(12k-12n-7)(12k+12n+1) p_v r^{k-1}, k = m-1
            let k = m - 1;
            let (f1, f0) = (generate(OctIndex::new(n, k))?, generate(OctIndex::new(n, k - 1))?);
            let c = int((4 * k - 3) * (4 * k + 1));
            let e = int(3 * (12 * k - 12 * n - 7) * (12 * k + 12 * n + 1));
            Form::lin_comb(&[(inv.pe.scale(&c), &f1.form()), (inv.pv.scale(&e), &f0.form())]).divide(&c, 0, 0, 0)?
        } else {
            // solve the same relation for r^{k-1}, k = m+1; p_v = u(1-u)^4
            let k = m + 1;
            let (f2, f1) = (generate(OctIndex::new(n, k + 1))?, generate(OctIndex::new(n, k))?);
            let c = int((4 * k - 3) * (4 * k + 1));
            let e = int(3 * (12 * k - 12 * n - 7) * (12 * k + 12 * n + 1));
            Form::lin_comb(&[(poly_const(c.clone()), &f2.form()), (-&inv.pe.scale(&c), &f1.form())]).divide(&e, 1, 4, 0)?
        }
    } else if n >= 2 {
        // (12k-12m+7) r_{k+1} = 8(3k+1) p_e r_k - (12k+12m+1) p_f^3 r_{k-1}, k = n-1
        let k = n - 1;
        let (f1, f0) = (generate(OctIndex::new(k, m))?, generate(OctIndex::new(k - 1, m))?);
        let c = int(12 * k - 12 * m + 7);
        let e = int(12 * k + 12 * m + 1);
        let pf3 = inv.pf.pow(3);
        Form::lin_comb(&[(inv.pe.scale(&int(8 * (3 * k + 1))), &f1.form()), (-&pf3.scale(&e), &f0.form())]).divide(&c, 0, 0, 0)?
    } else {
        // solve for r_{k-1}, k = n+1
        let k = n + 1;
        let (f2, f1) = (generate(OctIndex::new(k + 1, m))?, generate(OctIndex::new(k, m))?);
        let c = int(12 * k - 12 * m + 7);
        let e = int(12 * k + 12 * m + 1);
        Form::lin_comb(&[(inv.pe.scale(&int(8 * (3 * k + 1))), &f1.form()), (poly_const(-c), &f2.form())]).divide(&e, 0, 0, 3)?
    };
    let f = Arc::new(OctahedralFunction::from_form(idx, form)?);
    Ok(cache().write().expect("cache lock").entry(idx).or_insert(f).clone())
}

/// Conjugate `r̄_n^m(u) = u^(3n+2m) r_n^m(1/u) / d_n^m`.
pub fn conjugate(idx: OctIndex) -> Result<RationalFunction> {
    let r = generate(idx)?.to_rational_function();
    Ok(reflect(&r, 3 * idx.n + 2 * idx.m)?.scale(&d_coeff(idx).recip()))
}

/// `u^k f(1/u)` for a rational function `f`.
pub fn reflect(f: &RationalFunction, k: i64) -> Result<RationalFunction> {
    let dn = f.num().degree().unwrap_or(0) as i64;
    let dd = f.den().degree().unwrap_or(0) as i64;
    let num = f.num().reversed(dn as usize);
    let den = f.den().reversed(dd as usize);
    // f(1/u) = u^(dd-dn) num(u)/den(u)
    let e = k + dd - dn;
    let (num, den) = if e >= 0 { (num.shift(e as usize), den) } else { (num, den.shift((-e) as usize)) };
    RationalFunction::new(num, den)
}

/// Float evaluation of `r_n^m(u)`.
pub fn eval_f64(idx: OctIndex, u: f64) -> Result<f64> {
    generate(idx)?.eval_f64(u)
}

/// Float evaluation of the normalized `r̂_n^m = r_n^m / d_n^m`.
pub fn eval_hat_f64(idx: OctIndex, u: f64) -> Result<f64> {
    Ok(eval_f64(idx, u)? / to_f64(&d_coeff(idx)))
}

/// Exact evaluation of `r_n^m(u)`.
pub fn eval(idx: OctIndex, u: &ExactRational) -> Result<ExactRational> {
    generate(idx)?.eval(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: RationalPoly, den: RationalPoly) -> RationalFunction {
        RationalFunction::new(num, den).unwrap()
    }

    #[test]
    fn d_coeff_examples() {
        assert_eq!(d_coeff(OctIndex::new(0, 0)), int(1));
        assert_eq!(d_coeff(OctIndex::new(0, 1)), int(-39));
        assert_eq!(d_coeff(OctIndex::new(1, 0)), rat(13, 7));
        assert_eq!(d_coeff(OctIndex::new(1, 1)), int(195));
    }

    #[test]
    fn negative_index_values() {
        let omu3 = RationalPoly::from_i64(&[1, -1]).pow(3);
        let pf = RationalPoly::from_i64(&[1, 14, 1]);
        let r = generate(OctIndex::new(0, -1)).unwrap().to_rational_function();
        assert_eq!(r, rf(RationalPoly::from_coeffs(vec![int(1), rat(1, 7)]), omu3.clone()));
        let r = generate(OctIndex::new(-1, 0)).unwrap().to_rational_function();
        assert_eq!(r, rf(RationalPoly::from_i64(&[1, -5]), pf.pow(2)));
        let r = generate(OctIndex::new(-1, -1)).unwrap().to_rational_function();
        let num = RationalPoly::from_coeffs(vec![int(1), int(2), rat(-1, 11)]);
        assert_eq!(r, rf(num, &omu3 * &pf.pow(2)));
    }

    #[test]
    fn seeds_are_reproduced_by_recurrence() {
        for (i, p) in seed_polys() {
            assert_eq!(generate(i).unwrap().numer, p);
        }
        assert_eq!(generate(OctIndex::new(1, 1)).unwrap().to_string(), "1 + 175u − 150u² + 3550u³ + 325u⁴ + 195u⁵");
        assert_eq!(generate(OctIndex::new(0, -1)).unwrap().to_string(), "(1−u)^(−3)(1 + (1/7)u)");
    }

    #[test]
    fn value_at_one() {
        for n in 0..=3 {
            for m in 0..=3 {
                let v = eval(OctIndex::new(n, m), &int(1)).unwrap();
                assert_eq!(v, int(-64).pow((m + n) as i32));
            }
        }
        assert!(eval(OctIndex::new(0, -1), &int(1)).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(OctIndex::new(0, 0)).unwrap(), RationalFunction::one());
        let c = conjugate(OctIndex::new(0, 1)).unwrap();
        let expect = RationalPoly::from_coeffs(vec![int(1), rat(26, 39), rat(-1, 39)]);
        assert_eq!(c, RationalFunction::from_poly(expect));
        for n in -2..=2 {
            for m in -2..=2 {
                let c = conjugate(OctIndex::new(n, m)).unwrap();
                assert_eq!(c.eval(&int(0)).unwrap(), int(1), "({n},{m})");
            }
        }
    }

    #[test]
    fn conjugate_involution() {
        for n in -2..=2 {
            for m in -2..=2 {
                let idx = OctIndex::new(n, m);
                let back = reflect(&conjugate(idx).unwrap(), 3 * n + 2 * m).unwrap().scale(&d_coeff(idx));
                assert_eq!(back, generate(idx).unwrap().to_rational_function());
            }
        }
    }

    #[test]
    fn float_evaluation_matches_exact() {
        let idx = OctIndex::new(-2, 1);
        let u = rat(3, 10);
        let e = to_f64(&eval(idx, &u).unwrap());
        assert!((eval_f64(idx, 0.3).unwrap() - e).abs() < 1e-13 * e.abs());
        assert_eq!(eval_f64(OctIndex::new(0, 0), 0.37).unwrap(), 1.0);
    }
}
