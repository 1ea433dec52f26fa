use algleg::exact::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

#[test]
fn pochhammer_composes() {
    for d in [rat(1, 4), rat(5, 12), rat(13, 12)] {
        for k in -5..=5 {
            for j in -5..=5 {
                let (Ok(a), Ok(b), Ok(c)) = (pochhammer(&d, k), pochhammer(&(&d + int(k)), j), pochhammer(&d, k + j)) else {
                    continue;
                };
                assert_eq!(a * b, c, "d = {d}, k = {k}, j = {j}");
            }
        }
    }
}

#[test]
fn pochhammer_zero_divisor_is_reported() {
    // (1)_{-1} = 1/0
    assert!(pochhammer(&int(1), -1).is_err());
    assert_eq!(pochhammer(&int(-2), 3).unwrap(), int(0));
}

fn small_poly() -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 1..5)
        .prop_map(|cs| RationalPoly::from_coeffs(cs.into_iter().map(|(p, q)| rat(p, q)).collect()))
}

fn nonzero_poly() -> impl Strategy<Value = RationalPoly> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn canonical(f: &RationalFunction) -> bool {
    f.den().leading().is_one() && f.num().gcd(f.den()).degree() == Some(0)
}

proptest! {
    #[test]
    fn product_over_factor_is_identity(a in small_poly(), b in nonzero_poly(), c in nonzero_poly(), d in nonzero_poly()) {
        let f = RationalFunction::new(a, b).unwrap();
        let g = RationalFunction::new(c, d).unwrap();
        let back = (&f * &g).checked_div(&g).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert!(f.is_zero() || canonical(&back));
    }

    #[test]
    fn sum_minus_term_is_identity(a in small_poly(), b in nonzero_poly(), c in small_poly(), d in nonzero_poly()) {
        let f = RationalFunction::new(a, b).unwrap();
        let g = RationalFunction::new(c, d).unwrap();
        let s = &f + &g;
        prop_assert!(s.is_zero() || canonical(&s));
        prop_assert_eq!(&(&s - &g), &f);
    }

    #[test]
    fn polynomial_division_reconstructs(a in small_poly(), b in nonzero_poly()) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&(&q * &b) + &r), &a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn exact_and_float_pochhammer_agree(p in 1i64..60, q in 1i64..13, k in -6i64..=6) {
        let d = rat(p, q);
        if let Ok(x) = pochhammer(&d, k) {
            let y = pochhammer_f64(p as f64 / q as f64, k);
            prop_assert!((to_f64(&x) - y).abs() <= 1e-13 * y.abs().max(1.0));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in small_poly(), b in nonzero_poly(), x in -20i64..20) {
        let x = rat(x, 3);
        let fb = b.eval(&x);
        prop_assume!(!fb.is_zero());
        let f = RationalFunction::new(a.clone(), b.clone()).unwrap();
        prop_assert_eq!(f.eval(&x).unwrap(), a.eval(&x) / fb);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
    }
}

#[test]
fn invariants_satisfy_syzygy() {
    let inv = invariant_polys();
    let s = &(&inv.pe.pow(2) - &inv.pf.pow(3)) + &inv.pv.scale(&int(108));
    assert!(s.is_zero());
    // R = 1 - p_f^3/p_e^2 as exact rational functions
    let r = RationalFunction::new(inv.pv.scale(&int(-108)), inv.pe.pow(2)).unwrap();
    let alt = &RationalFunction::one() - &RationalFunction::new(inv.pf.pow(3), inv.pe.pow(2)).unwrap();
    assert_eq!(r, alt);
    assert!(ExactRational::zero() == map_r(&int(0)).unwrap());
}
