//! Limit curve of the normalised zeros `ω_k = n z_k`.
//!
//! With `W(z) = e^{√(1+1/z²)} / (z (1 + √(1+1/z²)))` (principal root), the
//! normalised zeros accumulate on `Γ = {z : |W(z)| = 1, |arg z| ≥ π/2}`.
//! Nearness to `Γ` is measured by the scalar defect `| |W(z)| - 1 |`.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::approx::approx_zero;
use crate::electrostatics::{newton_solve, NewtonConfig};
use crate::error::{Error, Result};
use crate::PolyIndex;

pub fn w_function(z: Complex64) -> Result<Complex64> {
    if !z.is_finite() {
        return Err(Error::NonFinite);
    }
    let singular = || Error::SingularArgument { re: z.re, im: z.im };
    if z.norm_sqr() == 0.0 {
        return Err(singular());
    }
    let s = (1.0 + (z * z).inv()).sqrt();
    let den = z * (1.0 + s);
    if den.norm_sqr() == 0.0 {
        return Err(singular());
    }
    let w = s.exp() / den;
    if !w.is_finite() {
        return Err(singular());
    }
    Ok(w)
}

/// `|arg z| ≥ π/2`.
pub fn satisfies_arg_constraint(z: Complex64) -> bool {
    z.arg().abs() >= FRAC_PI_2
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaSample {
    pub point: Complex64,
    pub abs_w: f64,
    pub on_curve: bool,
}

pub fn gamma_sample(z: Complex64, tol: f64) -> Result<GammaSample> {
    let abs_w = w_function(z)?.norm();
    Ok(GammaSample {
        point: z,
        abs_w,
        on_curve: (abs_w - 1.0).abs() <= tol && satisfies_arg_constraint(z),
    })
}

/// `| |W(z)| - 1 |`, with the arg constraint reported alongside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaDistance {
    pub defect: f64,
    pub arg_violation: bool,
}

pub fn gamma_distance(z: Complex64) -> Result<GammaDistance> {
    Ok(GammaDistance {
        defect: (w_function(z)?.norm() - 1.0).abs(),
        arg_violation: !satisfies_arg_constraint(z),
    })
}

/// Where the `k`-th zero comes from in [`limit_defect_curve`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ZeroSource {
    Approx,
    Newton(NewtonConfig),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DefectPoint {
    pub k: u32,
    pub n: PolyIndex,
    /// `| |W(n z_k)| - 1 |`
    pub defect: f64,
    /// `n · defect`; stays bounded in `n` when the defect is `O(1/n)`.
    pub scaled_defect: f64,
    pub arg_violation: bool,
}

/// Defect of the normalised `k`-th zero for each degree in `degrees`.
pub fn limit_defect_curve(
    k: u32,
    degrees: &[PolyIndex],
    source: ZeroSource,
) -> Result<Vec<DefectPoint>> {
    if k == 0 {
        return Err(Error::IndexOutOfRange { k, n: 0 });
    }
    degrees
        .iter()
        .map(|&n| {
            if n < k.max(2) {
                return Err(Error::IndexOutOfRange { k, n });
            }
            let z = match source {
                ZeroSource::Approx => approx_zero(k, n)?,
                ZeroSource::Newton(cfg) => newton_solve(n, &cfg, None)?.zeros()[k as usize - 1],
            };
            let d = gamma_distance(f64::from(n) * z)?;
            Ok(DefectPoint {
                k,
                n,
                defect: d.defect,
                scaled_defect: f64::from(n) * d.defect,
                arg_violation: d.arg_violation,
            })
        })
        .collect()
}
