//! Closed-form approximation of the zeros of `y_n`.
//!
//! The `k`-th zero is approximated by `x̃(k,n) + i ỹ(k,n)`, with `x̃` a
//! quadratic and `ỹ` a cubic in `k` whose coefficients are rational in `n`.
//! The coefficients are fixed by interpolation conditions at the ends and
//! the middle of `k ∈ [0, n+1]`; [`verify_fit_conditions`] measures how well
//! the closed forms meet them.

use std::fmt;

use num_complex::Complex64;

use crate::electrostatics::scaled_residual_norm;
use crate::error::{Error, Result};
use crate::zeros::{Provenance, ZeroSet};
use crate::PolyIndex;

/// Coefficients of `x̃(k) = a2 k² + a1 k + a0` and `ỹ(k) = b3 k³ + b2 k² + b1 k + b0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxCoefficients {
    pub n: PolyIndex,
    pub a2: f64,
    pub a1: f64,
    pub a0: f64,
    pub b3: f64,
    pub b2: f64,
    pub b1: f64,
    pub b0: f64,
}

impl ApproxCoefficients {
    /// Real part at a (possibly fractional) index.
    pub fn real_part(&self, k: f64) -> f64 {
        (self.a2 * k + self.a1) * k + self.a0
    }

    pub fn imag_part(&self, k: f64) -> f64 {
        ((self.b3 * k + self.b2) * k + self.b1) * k + self.b0
    }

    /// `dỹ/dk`.
    pub fn imag_slope(&self, k: f64) -> f64 {
        (3.0 * self.b3 * k + 2.0 * self.b2) * k + self.b1
    }

    pub fn zero(&self, k: f64) -> Complex64 {
        Complex64::new(self.real_part(k), self.imag_part(k))
    }
}

/// Fit coefficients for degree `n ≥ 2`.
///
/// The denominators contain `n - 1` and `n² - 2n - 2`
/// (`n³ - 3n² + 2 = (n - 1)(n² - 2n - 2)`); neither vanishes for integer `n ≥ 2`.
pub fn fit_coefficients(n: PolyIndex) -> Result<ApproxCoefficients> {
    if n < 2 {
        return Err(Error::SingularDegree { n });
    }
    let m = f64::from(n);
    let m2 = m * m;
    let cubic = m * m2 - 3.0 * m2 + 2.0;
    let quad = m2 - 2.0 * m - 2.0;
    if cubic == 0.0 || quad == 0.0 {
        return Err(Error::SingularDegree { n });
    }
    Ok(ApproxCoefficients {
        n,
        a2: 6.0 / (m2 * (m + 2.0)),
        a1: -6.0 * (m + 1.0) / (m2 * (m + 2.0)),
        a0: 0.0,
        b3: -8.0 * (m - 2.0) / (m2 * cubic),
        b2: 12.0 * (m - 2.0) * (m + 1.0) / ((m - 1.0) * m2 * quad),
        b1: -2.0 * (m * m2 + 6.0 * m2 - 12.0 * m - 4.0) / ((m - 1.0) * m2 * quad),
        b0: -(m * m2 - 5.0 * m2 + 6.0) / (m * cubic),
    })
}

/// `z̃_k` for `1 ≤ k ≤ n`.
pub fn approx_zero(k: u32, n: PolyIndex) -> Result<Complex64> {
    let coeffs = fit_coefficients(n)?;
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { k, n });
    }
    Ok(coeffs.zero(f64::from(k)))
}

/// All `n` approximate zeros as a [`ZeroSet`] (residual is the scaled
/// electrostatic residual of the closed-form points).
pub fn approx_zeros(n: PolyIndex) -> Result<ZeroSet> {
    let coeffs = fit_coefficients(n)?;
    let zeros: Vec<_> = (1..=n).map(|k| coeffs.zero(f64::from(k))).collect();
    let residual = scaled_residual_norm(&zeros)?;
    ZeroSet::new(n, zeros, Provenance::Approx, residual)
}

/// The seven interpolation conditions the fit is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FitCondition {
    /// `x̃(0, n) = 0`
    RealAtStart,
    /// `x̃(n/2, n) = -3/(2n)`
    RealAtMiddle,
    /// `x̃(n+1, n) = 0`
    RealAtEnd,
    /// `ỹ(1, n) = -1/n`
    ImagAtFirst,
    /// `ỹ((n+1)/2, n) = 0`
    ImagAtCentre,
    /// `dỹ/dk (n/2, n) = 4/n²`
    ImagSlopeAtMiddle,
    /// `ỹ(n, n) = 1/n`
    ImagAtLast,
}

impl FitCondition {
    pub const ALL: [FitCondition; 7] = [
        FitCondition::RealAtStart,
        FitCondition::RealAtMiddle,
        FitCondition::RealAtEnd,
        FitCondition::ImagAtFirst,
        FitCondition::ImagAtCentre,
        FitCondition::ImagSlopeAtMiddle,
        FitCondition::ImagAtLast,
    ];

    fn residual(self, c: &ApproxCoefficients) -> f64 {
        let n = f64::from(c.n);
        match self {
            FitCondition::RealAtStart => c.real_part(0.0),
            FitCondition::RealAtMiddle => c.real_part(n / 2.0) + 3.0 / (2.0 * n),
            FitCondition::RealAtEnd => c.real_part(n + 1.0),
            FitCondition::ImagAtFirst => c.imag_part(1.0) + 1.0 / n,
            FitCondition::ImagAtCentre => c.imag_part((n + 1.0) / 2.0),
            FitCondition::ImagSlopeAtMiddle => c.imag_slope(n / 2.0) - 4.0 / (n * n),
            FitCondition::ImagAtLast => c.imag_part(n) - 1.0 / n,
        }
    }
}

impl fmt::Display for FitCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FitCondition::RealAtStart => "x(0,n)=0",
            FitCondition::RealAtMiddle => "x(n/2,n)=-3/(2n)",
            FitCondition::RealAtEnd => "x(n+1,n)=0",
            FitCondition::ImagAtFirst => "y(1,n)=-1/n",
            FitCondition::ImagAtCentre => "y((n+1)/2,n)=0",
            FitCondition::ImagSlopeAtMiddle => "dy/dk(n/2,n)=4/n^2",
            FitCondition::ImagAtLast => "y(n,n)=1/n",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResidual {
    pub condition: FitCondition,
    pub residual: f64,
}

/// Left-minus-right residual of each interpolation condition, in the order of
/// [`FitCondition::ALL`].
pub fn verify_fit_conditions(n: PolyIndex) -> Result<Vec<FitResidual>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "fit conditions are audited for n >= 3, got {n}"
        )));
    }
    let coeffs = fit_coefficients(n)?;
    Ok(FitCondition::ALL
        .iter()
        .map(|&condition| FitResidual {
            condition,
            residual: condition.residual(&coeffs),
        })
        .collect())
}

/// A condition whose residual exceeded the audit tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitFinding {
    pub n: PolyIndex,
    pub condition: FitCondition,
    pub residual: f64,
}

impl fmt::Display for FitFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={}: condition {} violated by {:e}",
            self.n, self.condition, self.residual
        )
    }
}

/// Runs [`verify_fit_conditions`] over `degrees` and returns every residual above `tol`.
pub fn audit_fit_conditions(
    degrees: impl IntoIterator<Item = PolyIndex>,
    tol: f64,
) -> Result<Vec<FitFinding>> {
    let mut findings = Vec::new();
    for n in degrees {
        for r in verify_fit_conditions(n)? {
            if r.residual.abs() > tol || !r.residual.is_finite() {
                findings.push(FitFinding {
                    n,
                    condition: r.condition,
                    residual: r.residual,
                });
            }
        }
    }
    Ok(findings)
}

/// Closed-form estimate of the real zero, `-3(n+1)² / (2n²(n+2))`.
pub fn real_zero_approx(n: PolyIndex) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("y_0 has no zeros".into()));
    }
    let m = f64::from(n);
    Ok(-3.0 * (m + 1.0) * (m + 1.0) / (2.0 * m * m * (m + 2.0)))
}

/// Literature estimate of the real zero, `-2 / (1.32549 n + 0.662743)`.
pub fn real_zero_reference(n: PolyIndex) -> f64 {
    -2.0 / (1.32549 * f64::from(n) + 0.662743)
}

fn check_order(order: u32) -> Result<()> {
    if (1..=3).contains(&order) {
        Ok(())
    } else {
        Err(Error::UnsupportedOrder { order })
    }
}

/// `Σ_k z̃_k^order` by direct summation.
pub fn power_sum_direct(n: PolyIndex, order: u32) -> Result<Complex64> {
    check_order(order)?;
    let coeffs = fit_coefficients(n)?;
    Ok((1..=n).map(|k| coeffs.zero(f64::from(k)).powu(order)).sum())
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

// Printed numerator / denominator coefficients, highest power first.
const P2: [f64; 9] = [55., 15., -800., -612., 4064., 1740., -1696., -2832., -3312.];
const P3: [f64; 11] = [
    -1., 28., -217., 468., 1002., -3804., -1076., 5936., -3848., 12816., 19584.,
];

/// The closed rational forms `p₂/q₂` and `p₃/q₃` of the power sums of the
/// approximate zeros, evaluated verbatim from their printed integer coefficients.
pub fn power_sum_rational(n: PolyIndex, order: u32) -> Result<Complex64> {
    let m = f64::from(n);
    let (num, den) = match order {
        2 => {
            let q = m * m - 2.0 * m - 2.0;
            (
                horner(&P2, m),
                105.0 * m.powi(3) * q * q * (m * m + m - 2.0),
            )
        }
        3 => {
            let q = m.powi(3) - 6.0 * m - 4.0;
            (horner(&P3, m), 35.0 * (m - 1.0) * m.powi(5) * q * q)
        }
        _ => return Err(Error::UnsupportedOrder { order }),
    };
    if den == 0.0 {
        return Err(Error::VanishingDenominator { n, order });
    }
    Ok(Complex64::new(num / den, 0.0))
}

/// Exact power sums of the true zeros: `-1`, `1/(2n-1)`, `0`.
pub fn power_sum_exact(n: PolyIndex, order: u32) -> Result<Complex64> {
    check_order(order)?;
    if n == 0 {
        return Err(Error::InvalidArgument("y_0 has no zeros".into()));
    }
    let value = match order {
        1 => -1.0,
        2 => 1.0 / (2.0 * f64::from(n) - 1.0),
        _ => 0.0,
    };
    Ok(Complex64::new(value, 0.0))
}

/// Direct, rational and exact power sums side by side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerSumReport {
    pub n: PolyIndex,
    pub order: u32,
    pub direct_sum: Complex64,
    /// Only for orders 2 and 3.
    pub rational_form: Option<Complex64>,
    pub exact_value: Complex64,
}

impl PowerSumReport {
    pub fn new(n: PolyIndex, order: u32) -> Result<Self> {
        let rational_form = match order {
            2 | 3 => Some(power_sum_rational(n, order)?),
            _ => None,
        };
        Ok(PowerSumReport {
            n,
            order,
            direct_sum: power_sum_direct(n, order)?,
            rational_form,
            exact_value: power_sum_exact(n, order)?,
        })
    }

    /// `|direct - exact|`.
    pub fn direct_error(&self) -> f64 {
        (self.direct_sum - self.exact_value).norm()
    }

    /// Relative gap between the direct sum and the printed rational form.
    pub fn rational_discrepancy(&self) -> Option<f64> {
        self.rational_form
            .map(|r| (r - self.direct_sum).norm() / self.direct_sum.norm().max(f64::MIN_POSITIVE))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn coefficients_at_two() {
        let c = fit_coefficients(2).unwrap();
        assert_relative_eq!(c.a2, 3.0 / 8.0, max_relative = 1e-15);
        assert_relative_eq!(c.a1, -9.0 / 8.0, max_relative = 1e-15);
        assert_eq!(c.a0, 0.0);
        assert_eq!(c.b3, 0.0);
        assert_eq!(c.b2, 0.0);
        assert_relative_eq!(c.b1, 1.0, max_relative = 1e-15);
        assert_relative_eq!(c.b0, -1.5, max_relative = 1e-15);
        assert_relative_eq!(c.imag_part(1.0), -0.5, max_relative = 1e-15);
    }

    #[test]
    fn leading_order_of_real_coefficients() {
        let c = fit_coefficients(1_000_000).unwrap();
        let n = 1e6;
        assert_relative_eq!(c.a2 * n * n * n, 6.0, max_relative = 1e-5);
        assert_relative_eq!(c.a1 * n * n, -6.0, max_relative = 1e-5);
    }

    #[test]
    fn singular_degrees() {
        assert_eq!(fit_coefficients(0), Err(Error::SingularDegree { n: 0 }));
        assert_eq!(fit_coefficients(1), Err(Error::SingularDegree { n: 1 }));
        for n in 2..2000 {
            let c = fit_coefficients(n).unwrap();
            assert!([c.a2, c.a1, c.b3, c.b2, c.b1, c.b0]
                .iter()
                .all(|v| v.is_finite()));
        }
    }

    #[test]
    fn approx_zeros_at_two() {
        let z1 = approx_zero(1, 2).unwrap();
        let z2 = approx_zero(2, 2).unwrap();
        assert_relative_eq!(z1.re, -0.75, max_relative = 1e-15);
        assert_relative_eq!(z1.im, -0.5, max_relative = 1e-15);
        assert_relative_eq!(z2.re, -0.75, max_relative = 1e-15);
        assert_relative_eq!(z2.im, 0.5, max_relative = 1e-15);
        assert_eq!(
            approx_zero(0, 2),
            Err(Error::IndexOutOfRange { k: 0, n: 2 })
        );
        assert_eq!(
            approx_zero(11, 10),
            Err(Error::IndexOutOfRange { k: 11, n: 10 })
        );
        assert_eq!(approx_zero(1, 1), Err(Error::SingularDegree { n: 1 }));
    }

    #[test]
    fn middle_index_reproduces_real_zero_formula() {
        for n in (3u32..500).step_by(2) {
            let mid = approx_zero(n.div_ceil(2), n).unwrap();
            assert_relative_eq!(mid.re, real_zero_approx(n).unwrap(), max_relative = 1e-13);
        }
    }

    #[test]
    fn real_part_symmetric_in_k() {
        for n in 2..300 {
            let c = fit_coefficients(n).unwrap();
            for k in 1..=n {
                let a = c.real_part(f64::from(k));
                let b = c.real_part(f64::from(n + 1 - k));
                let m = f64::from(k.max(n + 1 - k));
                let size = (c.a2 * m * m).abs() + (c.a1 * m).abs();
                assert!((a - b).abs() <= 8.0 * f64::EPSILON * size, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn closed_form_zeros_follow_arc_order() {
        for n in 2..=500 {
            let set = approx_zeros(n).unwrap();
            for k in 1..=n {
                assert_eq!(
                    set.zeros()[k as usize - 1],
                    approx_zero(k, n).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn fit_conditions_at_ten() {
        let r = verify_fit_conditions(10).unwrap();
        assert_eq!(r[0].condition, FitCondition::RealAtStart);
        assert_eq!(r[0].residual, 0.0);
        assert!(r[1].residual.abs() <= 1e-14);
        assert!(r.iter().all(|r| r.residual.abs() <= 1e-12));
        assert!(verify_fit_conditions(2).is_err());
    }

    #[test]
    fn real_zero_formulas() {
        assert_relative_eq!(
            real_zero_approx(3).unwrap(),
            -8.0 / 15.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(real_zero_approx(1).unwrap(), -2.0, max_relative = 1e-15);
        assert!(real_zero_approx(0).is_err());
        let n = 1e9 as u32;
        assert_relative_eq!(
            real_zero_approx(n).unwrap() * f64::from(n),
            -1.5,
            max_relative = 1e-8
        );
        // mpmath: -2/133.211743
        assert_relative_eq!(
            real_zero_reference(100),
            -0.015_013_691_398_062_407,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            real_zero_reference(n) * f64::from(n),
            -2.0 / 1.32549,
            max_relative = 1e-8
        );
        assert_relative_eq!(-2.0 / 1.32549, -1.50888, max_relative = 1e-5);
        let ratio = real_zero_approx(n).unwrap() / real_zero_reference(n);
        assert_relative_eq!(ratio, 0.994_117_5, max_relative = 1e-6);
    }

    #[test]
    fn first_power_sum_closed_form() {
        for n in 2..=500 {
            let s = power_sum_direct(n, 1).unwrap();
            let want = -(f64::from(n) + 1.0) / f64::from(n);
            assert!((s.re - want).abs() <= 1e-12 * want.abs(), "n={n}");
            assert!(s.im.abs() <= 1e-10 * f64::from(n));
        }
    }

    #[test]
    fn rational_forms_match_direct_sums() {
        // Values from exact rational summation of the closed-form zeros.
        assert_relative_eq!(
            power_sum_rational(10, 2).unwrap().re,
            0.070_021_735_213_188_2,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            power_sum_rational(10, 3).unwrap().re,
            5.785_185_185_185_185e-5,
            max_relative = 1e-12
        );
        for n in 10..=100 {
            for order in [2, 3] {
                let r = PowerSumReport::new(n, order).unwrap();
                assert!(
                    r.rational_discrepancy().unwrap() <= 1e-9,
                    "n={n} order={order}"
                );
            }
        }
    }

    #[test]
    fn rational_form_errors() {
        assert_eq!(
            power_sum_rational(1, 2),
            Err(Error::VanishingDenominator { n: 1, order: 2 })
        );
        assert_eq!(
            power_sum_rational(0, 3),
            Err(Error::VanishingDenominator { n: 0, order: 3 })
        );
        assert_eq!(
            power_sum_rational(5, 1),
            Err(Error::UnsupportedOrder { order: 1 })
        );
    }

    #[test]
    fn rational_leading_behaviour() {
        let n = 1e6 as u32;
        let s2 = power_sum_rational(n, 2).unwrap().re * f64::from(n);
        assert_relative_eq!(s2, 11.0 / 21.0, max_relative = 1e-4);
    }

    #[test]
    fn exact_power_sums() {
        assert_eq!(power_sum_exact(7, 1).unwrap().re, -1.0);
        assert_eq!(power_sum_exact(5, 2).unwrap().re, 1.0 / 9.0);
        assert_eq!(power_sum_exact(9, 3).unwrap().re, 0.0);
        assert_eq!(
            power_sum_exact(5, 4),
            Err(Error::UnsupportedOrder { order: 4 })
        );
        assert_eq!(
            power_sum_direct(5, 0),
            Err(Error::UnsupportedOrder { order: 0 })
        );
    }

    #[test]
    fn second_and_third_sums_asymptotics() {
        let mut prev = f64::INFINITY;
        for n in (50..=500).step_by(10) {
            let s2 = power_sum_direct(n, 2).unwrap();
            let dev = (f64::from(n) * s2.re - 11.0 / 21.0).abs();
            assert!(dev < prev, "n={n}");
            prev = dev;
            let s3 = power_sum_direct(n, 3).unwrap();
            assert!((f64::from(n * n) * s3.re).abs() < 0.05, "n={n}");
        }
    }
}
