//! Independent generation routes for `r_n^m` agree exactly.

use algleg::exact::{int, RationalFunction};
use algleg::octahedral::{
    apply_diff_recurrence, coeffs_via_heun, coeffs_via_recurrence, d_coeff, diagonal_residuals, generate,
    hypergeometric_row, three_term_residuals, OctIndex, DIFF_DELTAS,
};

#[test]
fn structure_on_wide_grid() {
    for n in -4..=4 {
        for m in -4..=4 {
            let idx = OctIndex::new(n, m);
            let f = generate(idx).unwrap();
            let (a, b, deg) = idx.shape();
            assert_eq!((f.pow_one_minus_u, f.pow_pf, f.numer.degree()), (a, b, Some(deg)));
            assert_eq!(f.numer.coeff(0), int(1));
            let sign = if a % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(f.numer.leading() * sign, d_coeff(idx));
        }
    }
}

#[test]
fn value_at_one_up_to_six() {
    for n in 0..=6 {
        for m in 0..=6 {
            let f = generate(OctIndex::new(n, m)).unwrap();
            assert_eq!(f.eval(&int(1)).unwrap(), int(-64).pow((n + m) as i32));
        }
    }
}

#[test]
fn three_term_recurrences_vanish() {
    for n in -3..=3 {
        for m in -3..=3 {
            for r in three_term_residuals(OctIndex::new(n, m)).unwrap() {
                assert!(r.is_zero(), "({n},{m})");
            }
        }
    }
}

#[test]
fn diagonal_recurrences_vanish() {
    for n in -2..=2 {
        for m in -2..=2 {
            for r in diagonal_residuals(OctIndex::new(n, m)).unwrap() {
                assert!(r.is_zero(), "({n},{m})");
            }
        }
    }
}

#[test]
fn differential_recurrences_reach_neighbours() {
    for n in -3..=3i64 {
        for m in -3..=3i64 {
            for d in DIFF_DELTAS {
                let (tn, tm) = (n + d.0, m + d.1);
                if tn.abs() > 3 || tm.abs() > 3 {
                    continue;
                }
                let got = apply_diff_recurrence(OctIndex::new(n, m), d).unwrap();
                assert_eq!(got, *generate(OctIndex::new(tn, tm)).unwrap(), "({n},{m}) Δ={d:?}");
            }
        }
    }
}

#[test]
fn coefficient_recurrences_match() {
    for n in 0..=3 {
        for m in 0..=3 {
            let idx = OctIndex::new(n, m);
            assert_eq!(coeffs_via_recurrence(idx).unwrap(), generate(idx).unwrap().numer.coeffs());
        }
        assert_eq!(coeffs_via_heun(n).unwrap(), generate(OctIndex::new(n, 0)).unwrap().numer.coeffs());
    }
}

#[test]
fn hypergeometric_row_matches() {
    for m in -3..=3 {
        assert_eq!(hypergeometric_row(m).unwrap(), *generate(OctIndex::new(0, m)).unwrap());
    }
    let _ = RationalFunction::zero();
}
