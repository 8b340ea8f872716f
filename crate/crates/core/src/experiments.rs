//! Numerical studies over grids of degrees.
//!
//! Every table is computed per degree in parallel and assembled in grid
//! order, so results do not depend on scheduling.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::approx::{approx_zeros, real_zero_approx, real_zero_reference, PowerSumReport};
use crate::electrostatics::{newton_solve, NewtonConfig};
use crate::error::{Error, Result};
use crate::PolyIndex;

/// `n_min, n_min + step, ...` up to and including `n_max` when it falls on the grid.
pub fn degree_grid(n_min: PolyIndex, n_max: PolyIndex, step: PolyIndex) -> Result<Vec<PolyIndex>> {
    if n_min < 2 || n_min >= n_max {
        return Err(Error::InvalidArgument(format!(
            "grid needs 2 <= n_min < n_max, got {n_min}..{n_max}"
        )));
    }
    if step == 0 {
        return Err(Error::InvalidArgument("step must be at least 1".into()));
    }
    Ok((n_min..=n_max).step_by(step as usize).collect())
}

fn require_min_degree(degrees: &[PolyIndex], min: PolyIndex) -> Result<()> {
    match degrees.iter().find(|&&n| n < min) {
        Some(n) => Err(Error::InvalidArgument(format!(
            "degree {n} is below the minimum {min}"
        ))),
        None => Ok(()),
    }
}

/// One zero of `y_n` and its closed-form estimate, both multiplied by `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocusRow {
    pub n: PolyIndex,
    pub k: u32,
    pub exact: Complex64,
    pub approx: Complex64,
}

pub fn zero_locus_data(degrees: &[PolyIndex], config: &NewtonConfig) -> Result<Vec<LocusRow>> {
    require_min_degree(degrees, 2)?;
    let blocks: Vec<Vec<LocusRow>> = degrees
        .par_iter()
        .map(|&n| {
            let approx = approx_zeros(n)?;
            let exact = newton_solve(n, config, Some(&approx))?;
            let scale = f64::from(n);
            Ok(exact
                .zeros()
                .iter()
                .zip(approx.zeros())
                .zip(1..)
                .map(|((&e, &a), k)| LocusRow {
                    n,
                    k,
                    exact: scale * e,
                    approx: scale * a,
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(blocks.into_iter().flatten().collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRecord {
    pub n: PolyIndex,
    /// `max_k |z_k - z̃_k|` with the solver zeros as reference.
    pub max_error: f64,
    pub per_k_errors: Option<Vec<f64>>,
}

/// `error ≈ amplitude / n^exponent`, fitted by least squares in log-log space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawFit {
    pub exponent: f64,
    pub amplitude: f64,
    pub n_range: (PolyIndex, PolyIndex),
    /// Residual sum of squares of the fit to `ln error`.
    pub rss: f64,
}

/// Ordinary least squares of `ln error` on `ln n`.
pub fn fit_power_law(points: &[(PolyIndex, f64)]) -> Result<PowerLawFit> {
    if points.len() < 2 {
        return Err(Error::InvalidArgument(
            "a power-law fit needs at least two points".into(),
        ));
    }
    if let Some(&(n, e)) = points
        .iter()
        .find(|&&(n, e)| n == 0 || !(e > 0.0 && e.is_finite()))
    {
        return Err(Error::InvalidArgument(format!(
            "cannot take logarithms of ({n}, {e})"
        )));
    }
    let xs: Vec<f64> = points.iter().map(|&(n, _)| f64::from(n).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, e)| e.ln()).collect();
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidArgument("all points share one degree".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let r = y - (intercept + slope * x);
            r * r
        })
        .sum();
    let lo = points.iter().map(|p| p.0).min().unwrap_or(0);
    let hi = points.iter().map(|p| p.0).max().unwrap_or(0);
    Ok(PowerLawFit {
        exponent: -slope,
        amplitude: intercept.exp(),
        n_range: (lo, hi),
        rss,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceStudy {
    pub records: Vec<ConvergenceRecord>,
    pub fit: PowerLawFit,
}

impl ConvergenceStudy {
    /// `(n, |z_k - z̃_k|)` for a fixed `k`, over the degrees that have one.
    pub fn fixed_k_errors(&self, k: u32) -> Result<Vec<(PolyIndex, f64)>> {
        if k == 0 {
            return Err(Error::IndexOutOfRange { k, n: 0 });
        }
        self.records
            .iter()
            .filter(|r| r.n >= k)
            .map(|r| {
                let errs = r.per_k_errors.as_ref().ok_or_else(|| {
                    Error::InvalidArgument("study was run without per-k errors".into())
                })?;
                Ok((r.n, errs[k as usize - 1]))
            })
            .collect()
    }

    pub fn fixed_k_fit(&self, k: u32) -> Result<PowerLawFit> {
        fit_power_law(&self.fixed_k_errors(k)?)
    }

    /// Fraction of adjacent grid pairs where `max_error` increases.
    pub fn monotonicity_violations(&self) -> f64 {
        let values: Vec<f64> = self.records.iter().map(|r| r.max_error).collect();
        increase_fraction(&values)
    }
}

/// Solve on every grid degree and fit `max_k |z_k - z̃_k|` against `n`.
///
/// Solver and closed-form zeros are paired by their shared sorted order.
pub fn convergence_study(
    n_min: PolyIndex,
    n_max: PolyIndex,
    step: PolyIndex,
    config: &NewtonConfig,
    keep_per_k: bool,
) -> Result<ConvergenceStudy> {
    let degrees = degree_grid(n_min, n_max, step)?;
    let records: Vec<ConvergenceRecord> = degrees
        .par_iter()
        .map(|&n| {
            let approx = approx_zeros(n)?;
            let exact = newton_solve(n, config, Some(&approx))?;
            let errs: Vec<f64> = exact
                .zeros()
                .iter()
                .zip(approx.zeros())
                .map(|(e, a)| (e - a).norm())
                .collect();
            Ok(ConvergenceRecord {
                n,
                max_error: errs.iter().copied().fold(0.0, f64::max),
                per_k_errors: keep_per_k.then_some(errs),
            })
        })
        .collect::<Result<_>>()?;
    let points: Vec<_> = records.iter().map(|r| (r.n, r.max_error)).collect();
    let fit = fit_power_law(&points)?;
    Ok(ConvergenceStudy { records, fit })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealZeroRow {
    pub n: PolyIndex,
    pub newton: f64,
    pub approx: f64,
    pub reference: f64,
    pub approx_error: f64,
    pub reference_error: f64,
}

/// The real zero of `y_n` for odd `n ≥ 3` next to both closed-form estimates.
pub fn real_zero_table(degrees: &[PolyIndex], config: &NewtonConfig) -> Result<Vec<RealZeroRow>> {
    if let Some(n) = degrees.iter().find(|&&n| n < 3 || n % 2 == 0) {
        return Err(Error::InvalidArgument(format!(
            "real-zero table needs odd degrees >= 3, got {n}"
        )));
    }
    degrees
        .par_iter()
        .map(|&n| {
            let set = newton_solve(n, config, None)?;
            let real = set.real_zeros(1e-12);
            let newton = match real.as_slice() {
                [x] => *x,
                _ => {
                    return Err(Error::Internal(format!(
                        "degree {n} produced {} real zeros",
                        real.len()
                    )))
                }
            };
            let approx = real_zero_approx(n)?;
            let reference = real_zero_reference(n);
            Ok(RealZeroRow {
                n,
                newton,
                approx,
                reference,
                approx_error: (newton - approx).abs(),
                reference_error: (newton - reference).abs(),
            })
        })
        .collect()
}

/// Orders 1 to 3 for each degree, in `(n, order)` order.
pub fn power_sum_table(degrees: &[PolyIndex]) -> Result<Vec<PowerSumReport>> {
    require_min_degree(degrees, 2)?;
    let blocks: Vec<Vec<PowerSumReport>> = degrees
        .par_iter()
        .map(|&n| (1..=3).map(|order| PowerSumReport::new(n, order)).collect())
        .collect::<Result<_>>()?;
    Ok(blocks.into_iter().flatten().collect())
}

/// Fraction of adjacent pairs with `values[i+1] > values[i]`.
pub fn increase_fraction(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let ups = values.windows(2).filter(|w| w[1] > w[0]).count();
    ups as f64 / (values.len() - 1) as f64
}

/// Log-log slope of `|value|` against `n` over the upper half of the points.
///
/// A sequence bounded in `n` settles to a slope near or below zero; linear
/// growth shows up as a slope near one.
pub fn tail_growth_slope(points: &[(PolyIndex, f64)]) -> Result<f64> {
    let tail = &points[points.len() / 2..];
    let abs: Vec<_> = tail.iter().map(|&(n, v)| (n, v.abs())).collect();
    Ok(-fit_power_law(&abs)?.exponent)
}

/// Largest tail slope still read as "bounded".
pub const BOUNDED_SLOPE: f64 = 0.2;

pub fn is_bounded(points: &[(PolyIndex, f64)]) -> Result<bool> {
    Ok(tail_growth_slope(points)? <= BOUNDED_SLOPE)
}
