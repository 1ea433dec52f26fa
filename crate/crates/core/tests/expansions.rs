use algleg::expansions::*;
use algleg::oracle::ferrers_p;
use algleg::Error;
use proptest::prelude::*;
use std::f64::consts::PI;

#[test]
fn love_hunter_examples() {
    let r = love_hunter_inner(-1.0 / 6.0, -1.0 / 6.0 + 2.0, 0.25).unwrap();
    assert!(r.value.abs() < 1e-8, "{r:?}");
    let r = love_hunter_inner(0.3, 2.3, -0.45).unwrap();
    assert!(r.value.abs() < 1e-8, "{r:?}");
    // regression baseline; agrees with 3√3/2 to rounding
    let r = love_hunter_inner(-1.0 / 6.0, -1.0 / 6.0, 0.25).unwrap();
    assert!((r.value - 2.5980762113533173).abs() < 1e-10, "{r:?}");
}

#[test]
fn love_hunter_domain() {
    assert!(matches!(love_hunter_inner(0.3, 2.3, 1.0), Err(Error::Domain(_))));
    assert!(matches!(love_hunter_inner(0.5, 2.5, 0.25), Err(Error::Domain(_))));
    assert!(matches!(ExpansionSpec::new(-1.5, 0.1, 2, |z: f64| z), Err(Error::Domain(_))));
}

/// `|∫| < 1e-8 ∫|integrand|`; the right side is bounded by the product of the
/// two L² norms.
#[test]
fn biorthogonality_across_families() {
    let cases = [
        (-1.0 / 6.0, 0.25),
        (-1.0 / 6.0, -0.25),
        (-0.75, 1.0 / 3.0),
        (-0.75, -1.0 / 3.0),
        (-1.0 / 6.0, 1.0 / 3.0),
        (-0.5 + 0.3, -0.45),
        (-0.5 + 0.3, 0.25),
        (0.0, -0.45),
    ];
    for (nu0, mu) in cases {
        for gap in [-4, -2, 2, 4] {
            for shift in [-1, 0, 1] {
                let nu = nu0 + 2.0 * shift as f64;
                let r = love_hunter_inner(nu, nu + gap as f64, mu).unwrap();
                assert!(relative_size(&r) < 1e-8, "ν = {nu}, gap {gap}, μ = {mu}: {r:?}");
            }
        }
    }
}

#[test]
fn s_interval_examples() {
    assert!(octahedral_biorthog(0, 2, 0).unwrap().value.abs() < 1e-8);
    assert!(octahedral_biorthog(1, -1, -1).unwrap().value.abs() < 1e-8);
    assert!(octahedral_biorthog(0, 1, 0).unwrap().value.abs() > 1e-6);
    assert!(matches!(octahedral_biorthog(0, 2, 1), Err(Error::Domain(_))));
    assert!(matches!(octahedral_biorthog(0, 2, -2), Err(Error::Domain(_))));
}

#[test]
fn s_interval_even_gaps_vanish() {
    for m in [0, -1] {
        for n in -3..=3i64 {
            for np in -3..=3i64 {
                let r = octahedral_biorthog(n, np, m).unwrap();
                if n != np && (n - np) % 2 == 0 {
                    assert!(relative_size(&r) < 1e-10, "({n}, {np}, {m}): {r:?}");
                }
                if n == np {
                    assert!(relative_size(&r) > 1e-3, "({n}, {np}, {m}): {r:?}");
                }
            }
        }
    }
}

#[test]
fn self_expansion_is_a_delta() {
    for (nu0, mu) in [(-1.0 / 6.0, 0.25), (0.3, -0.45)] {
        let spec = ExpansionSpec::new(nu0, mu, 3, |z: f64| ferrers_p(nu0, mu, z).unwrap()).unwrap();
        for (n, c) in lh_coefficients(&spec).unwrap() {
            let want = if n == 0 { 1.0 } else { 0.0 };
            assert!((c - want).abs() < 1e-7, "({nu0}, {mu}) c_{n} = {c}");
        }
    }
}

#[test]
fn dihedral_denominator() {
    let alpha: f64 = 0.3;
    for n in -2..=2 {
        let k = alpha + 2.0 * n as f64;
        // P^{∓1/2} differ from ψ, χ by √(π/2)k and √(π/2)
        let d = lh_denominator(-0.5 + k, -0.5).unwrap() * PI / 2.0 * k;
        assert!((d - PI / 2.0 * (alpha * PI).sin()).abs() < 1e-9, "n = {n}: {d}");
        let hat = de_quad(
            |t, _, _| {
                let (psi, chi) = pinsky_basis(n, alpha, t);
                psi * chi * (t / 2.0).sin().powi(2)
            },
            0.0,
            PI,
            1e-14,
        )
        .unwrap();
        assert!((hat.value - pinsky_denominator(alpha)).abs() < 1e-9, "n = {n}: {hat:?}");
    }
}

/// The error oscillates at `O(1/N)`, so only dyadic `N` are compared.
#[test]
fn linear_target_converges_at_interior_point() {
    let spec = ExpansionSpec::new(-1.0 / 6.0, 0.25, 64, |z: f64| z).unwrap();
    let c = lh_coefficients(&spec).unwrap();
    let errs: Vec<f64> = [8, 16, 32, 64].iter().map(|&n| (lh_partial_sum(&spec, &c, n, 0.2).unwrap() - 0.2).abs()).collect();
    assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
    assert!(errs[3] < 1e-3, "{errs:?}");
}

#[test]
fn fourth_kind_chebyshev_identities() {
    assert_eq!(chebyshev_w(0, 0.37), 1.0);
    let u: f64 = 0.4;
    let z = 1.0 - 2.0 * u * u;
    let t7 = (7.0 * u.acos()).cos();
    assert!((chebyshev_w(3, z) - (-t7 / u)).abs() < 1e-13);
    let th: f64 = 0.8;
    assert!((pinsky_basis(2, 0.5, th).0 - chebyshev_w(4, th.cos())).abs() < 1e-13);
    for n in -4..=4 {
        let (j, sign) = w_index(n);
        let (psi, chi) = pinsky_basis(n, 0.5, th);
        assert!((psi - sign * chebyshev_w(j, th.cos())).abs() < 1e-12, "n = {n}");
        assert!((chi - psi).abs() < 1e-12, "n = {n}");
    }
    for j in 0..6 {
        assert!((chebyshev_w(j, 1.0) - (2 * j + 1) as f64).abs() < 1e-14);
        assert_eq!(chebyshev_w(j, -1.0), if j % 2 == 0 { 1.0 } else { -1.0 });
    }
}

#[test]
fn constant_expands_to_w0() {
    let e = w_expansion(|_| 1.0, 6, &[]).unwrap();
    for (n, c) in &e.coeffs {
        let want = if *n == 0 { 1.0 } else { 0.0 };
        assert!((c - want).abs() < 1e-13, "ĉ_{n} = {c}");
    }
    for z in [-1.0, -0.3, 0.0, 0.9, 1.0] {
        assert!((e.eval(z).unwrap() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn absolute_value_error_decreases() {
    let pts = [-1.0, -0.5, 0.3, 1.0];
    let errs: Vec<f64> = [16, 32, 64, 128]
        .iter()
        .map(|&n| {
            let e = w_expansion(|z: f64| z.abs(), n, &[0.0]).unwrap();
            pts.iter().map(|&z: &f64| (e.eval(z).unwrap() - z.abs()).abs()).fold(0.0, f64::max)
        })
        .collect();
    assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
}

#[test]
fn step_converges_to_midpoint() {
    let e = w_expansion(|z: f64| if z > 0.0 { 1.0 } else { 0.0 }, 128, &[0.0]).unwrap();
    assert!((e.eval(0.0).unwrap() - 0.5).abs() < 0.05);
    assert!((e.eval(0.5).unwrap() - 1.0).abs() < 0.05);
    assert!(e.eval(-1.0).unwrap().abs() < 0.05);
    assert!(e.eval(1.5).is_err());
}

// At z = +1 the step's partial sums alternate between 1 ∓ 2/π with the
// parity of N instead of tending to f(1) = 1.
#[test]
fn step_oscillates_at_upper_endpoint() {
    let e = w_expansion(|z: f64| if z > 0.0 { 1.0 } else { 0.0 }, 129, &[0.0]).unwrap();
    let two_over_pi = 2.0 / PI;
    for n in [64i64, 128] {
        assert!((e.eval_partial(n, 1.0).unwrap() - (1.0 - two_over_pi)).abs() < 0.01, "N = {n}");
        assert!((e.eval_partial(n + 1, 1.0).unwrap() - (1.0 + two_over_pi)).abs() < 0.01, "N = {}", n + 1);
    }
}

#[test]
fn dihedral_orthogonality_spot_checks() {
    for (a, b) in [(0.3, 2.3), (0.3, -1.7), (0.7, 4.7), (1.25, -0.75)] {
        assert!(dihedral_inner_exact(a, b).abs() < 1e-14, "({a}, {b})");
        assert!(dihedral_inner_quad(a, b).unwrap().value.abs() < 1e-12, "({a}, {b})");
    }
    let a = 0.3;
    assert!((dihedral_inner_exact(a, a) - pinsky_denominator(a)).abs() < 1e-14);
    assert!((dihedral_inner_exact(0.3, 1.1) - dihedral_inner_quad(0.3, 1.1).unwrap().value).abs() < 1e-12);
}

proptest! {
    #[test]
    fn dihedral_even_gaps_vanish(a in 0.05f64..0.95, k in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3])) {
        let b = a + 2.0 * k as f64;
        prop_assert!(dihedral_inner_exact(a, b).abs() < 1e-13);
        prop_assert!(dihedral_inner_quad(a, b).unwrap().value.abs() < 1e-11);
    }

    #[test]
    fn w_matches_trigonometric_form(j in 0u32..40, th in 0.01f64..3.13) {
        let trig = ((j as f64 + 0.5) * th).sin() / (th / 2.0).sin();
        prop_assert!((chebyshev_w(j, th.cos()) - trig).abs() < 1e-10 * (2 * j + 1) as f64);
    }
}
