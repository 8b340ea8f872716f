use bessel_zeros::approx::{power_sum_direct, power_sum_rational};
use bessel_zeros::asymptotics::{limit_defect_curve, ZeroSource};
use bessel_zeros::experiments::{is_bounded, tail_growth_slope};
use bessel_zeros::oracle::{DEFAULT_MAX_ITER, DEFAULT_TOL};
use bessel_zeros::poly::{coefficients, reverse_zeros};
use bessel_zeros::{
    aberth_solve, approx_zeros, newton_solve, validate_against_polynomial, Complex64, NewtonConfig,
    Provenance,
};

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

#[test]
fn newton_and_oracle_agree() {
    for n in [3u32, 8, 17, 40, 75] {
        let newton = newton_solve(n, &NewtonConfig::default(), None).unwrap();
        let oracle = aberth_solve(n, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        assert_eq!(newton.provenance(), Provenance::Newton);
        assert_eq!(oracle.provenance(), Provenance::Oracle);
        assert!(newton.max_deviation(&oracle).unwrap() <= 1e-10, "n={n}");
    }
}

#[test]
fn low_degree_zeros_annihilate_the_coefficients() {
    // Horner on the integer coefficients is well conditioned only for small n.
    for n in 2u32..=8 {
        let coeffs = coefficients(n).unwrap();
        let set = newton_solve(n, &NewtonConfig::default(), None).unwrap();
        for &z in set.zeros() {
            let scale: f64 = coeffs.iter().rev().fold(0.0, |acc, &c| acc * z.norm() + c);
            assert!(horner(&coeffs, z).norm() <= 1e-13 * scale, "n={n} z={z}");
        }
    }
}

#[test]
fn solved_zeros_pass_polynomial_validation() {
    for n in [90u32, 150] {
        let set = newton_solve(n, &NewtonConfig::default(), None).unwrap();
        let worst = validate_against_polynomial(&set).unwrap();
        let smallest = set
            .zeros()
            .iter()
            .map(|z| z.norm())
            .fold(f64::INFINITY, f64::min);
        assert!(worst <= 1e-12 * smallest.max(1e-3), "n={n} worst={worst:e}");
    }
}

#[test]
fn oracle_seeded_newton_keeps_the_oracle_zeros() {
    let oracle = aberth_solve(60, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
    let polished = newton_solve(60, &NewtonConfig::default(), Some(&oracle)).unwrap();
    assert!(polished.max_deviation(&oracle).unwrap() <= 1e-12);
}

#[test]
fn reversed_zeros_satisfy_the_reverse_polynomial() {
    // θ_n(x) = x^n y_n(1/x) has coefficients in the opposite order.
    let n = 6;
    let set = newton_solve(n, &NewtonConfig::default(), None).unwrap();
    let rev = reverse_zeros(&set).unwrap();
    let mut coeffs = coefficients(n).unwrap();
    coeffs.reverse();
    for &w in rev.zeros() {
        assert!(horner(&coeffs, w).norm() <= 1e-9 * coeffs[0], "w={w}");
    }
}

#[test]
fn newton_zero_defect_stays_bounded() {
    let cfg = NewtonConfig::default();
    for k in [1u32, 2, 5] {
        let curve = limit_defect_curve(k, &[50, 100, 200, 400], ZeroSource::Newton(cfg)).unwrap();
        let scaled: Vec<_> = curve.iter().map(|p| (p.n, p.scaled_defect)).collect();
        assert!(is_bounded(&scaled).unwrap(), "k={k} {scaled:?}");
        assert!(tail_growth_slope(&scaled).unwrap() < 0.0);
        assert!(curve.iter().all(|p| !p.arg_violation));
    }
}

#[test]
fn approx_zeros_are_conjugate_symmetric() {
    for n in [2u32, 9, 64, 301] {
        let z = approx_zeros(n).unwrap().into_zeros();
        let m = z.len();
        for k in 0..m {
            assert!((z[k] - z[m - 1 - k].conj()).norm() <= 1e-15, "n={n} k={k}");
        }
    }
}

#[test]
fn printed_rational_forms_match_direct_sums() {
    for order in [2, 3] {
        for n in (10..=400).step_by(13) {
            let d = power_sum_direct(n, order).unwrap();
            let r = power_sum_rational(n, order).unwrap();
            assert!((d - r).norm() <= 1e-9 * d.norm(), "n={n} order={order}");
        }
    }
}
