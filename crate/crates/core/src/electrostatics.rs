//! Zeros of `y_n` as the equilibrium of unit charges in the field `(z+1)/z²`.
//!
//! The zeros satisfy, for every `j`,
//!
//! ```text
//! F_j(z) = Σ_{k≠j} 1/(z_j - z_k) + (z_j + 1)/z_j² = 0
//! ```
//!
//! which follows from `x² y'' + 2(x+1) y' - n(n+1) y = 0` evaluated at a
//! root. The system is holomorphic, so Newton runs on the `n` complex
//! unknowns directly; [`equilibrium_equations`] exposes the equivalent
//! `2n` real equations.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::approx::approx_zeros;
use crate::error::{Error, Result};
use crate::poly::newton_correction;
use crate::zeros::{Provenance, ZeroSet};
use crate::PolyIndex;

/// Stopping and damping parameters for [`newton_solve`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonConfig {
    /// Threshold on the scaled residual (see [`scaled_residual_norm`]).
    pub tol_residual: f64,
    pub max_iter: usize,
    /// Initial step length; halved while the residual fails to decrease.
    pub damping: f64,
    /// Give up once the step length falls below this.
    pub min_step: f64,
}

impl Default for NewtonConfig {
    fn default() -> Self {
        NewtonConfig {
            tol_residual: 1e-12,
            max_iter: 100,
            damping: 1.0,
            min_step: 1e-4,
        }
    }
}

impl NewtonConfig {
    pub fn validate(&self) -> Result<()> {
        if self.tol_residual.is_nan() || self.tol_residual <= 0.0 {
            return Err(Error::InvalidArgument(
                "tol_residual must be positive".into(),
            ));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidArgument("max_iter must be at least 1".into()));
        }
        if !(self.damping > 0.0 && self.damping <= 1.0) {
            return Err(Error::InvalidArgument("damping must lie in (0, 1]".into()));
        }
        if self.min_step.is_nan() || self.min_step <= 0.0 {
            return Err(Error::InvalidArgument("min_step must be positive".into()));
        }
        Ok(())
    }
}

fn check_points(zeros: &[Complex64]) -> Result<()> {
    for (j, z) in zeros.iter().enumerate() {
        if !z.is_finite() {
            return Err(Error::NonFinite);
        }
        if z.norm_sqr() == 0.0 {
            return Err(Error::ZeroArgument { index: j });
        }
    }
    for j in 0..zeros.len() {
        for k in j + 1..zeros.len() {
            if zeros[j] == zeros[k] {
                return Err(Error::CoincidentPoints { i: j, j: k });
            }
        }
    }
    Ok(())
}

/// Pairwise `1/(z_j - z_k)` (zero on the diagonal).
fn inverse_gaps(zeros: &[Complex64]) -> Vec<Complex64> {
    let n = zeros.len();
    let mut inv = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        for k in j + 1..n {
            let g = (zeros[j] - zeros[k]).inv();
            inv[j * n + k] = g;
            inv[k * n + j] = -g;
        }
    }
    inv
}

fn field(z: Complex64) -> Complex64 {
    (z + 1.0) / (z * z)
}

fn residual_from(zeros: &[Complex64], inv: &[Complex64]) -> Vec<Complex64> {
    let n = zeros.len();
    (0..n)
        .map(|j| inv[j * n..(j + 1) * n].iter().sum::<Complex64>() + field(zeros[j]))
        .collect()
}

/// `F_j` for every point.
pub fn electrostatic_residual(zeros: &[Complex64]) -> Result<Vec<Complex64>> {
    check_points(zeros)?;
    Ok(residual_from(zeros, &inverse_gaps(zeros)))
}

/// The real form of the equilibrium conditions: for each `j` the pair
///
/// ```text
/// Σ (x_j-x_k)/|z_j-z_k|² + (x³ + x² + x y² - y²)/(x²+y²)²
/// Σ (y_j-y_k)/|z_j-z_k|² + y (x² + 2x + y²)/(x²+y²)²
/// ```
///
/// These equal `Re F_j` and `-Im F_j`.
pub fn equilibrium_equations(zeros: &[Complex64]) -> Result<Vec<[f64; 2]>> {
    check_points(zeros)?;
    Ok(zeros
        .iter()
        .enumerate()
        .map(|(j, zj)| {
            let (x, y) = (zj.re, zj.im);
            let mut sx = 0.0;
            let mut sy = 0.0;
            for (k, zk) in zeros.iter().enumerate() {
                if k != j {
                    let (dx, dy) = (x - zk.re, y - zk.im);
                    let d2 = dx * dx + dy * dy;
                    sx += dx / d2;
                    sy += dy / d2;
                }
            }
            let r4 = (x * x + y * y) * (x * x + y * y);
            [
                sx + (x * x * x + x * x + x * y * y - y * y) / r4,
                sy + y * (x * x + 2.0 * x + y * y) / r4,
            ]
        })
        .collect())
}

fn scaled_from(zeros: &[Complex64], inv: &[Complex64], residual: &[Complex64]) -> f64 {
    let n = zeros.len();
    (0..n)
        .map(|j| {
            let scale: f64 = inv[j * n..(j + 1) * n]
                .iter()
                .map(|g| g.norm())
                .sum::<f64>()
                + field(zeros[j]).norm();
            residual[j].norm() / scale
        })
        .fold(0.0, f64::max)
}

/// `max_j |F_j| / (Σ_{k≠j} |1/(z_j-z_k)| + |(z_j+1)/z_j²|)`.
///
/// Each `F_j` is a sum of terms of size up to `O(n²)` that cancel at the
/// solution, so the absolute residual bottoms out near `eps · n⁴ |z|`; the
/// scaled residual bottoms out near `eps` for every degree.
pub fn scaled_residual_norm(zeros: &[Complex64]) -> Result<f64> {
    check_points(zeros)?;
    let inv = inverse_gaps(zeros);
    let res = residual_from(zeros, &inv);
    Ok(scaled_from(zeros, &inv, &res))
}

/// `max_j |F_j|`.
pub fn raw_residual_norm(zeros: &[Complex64]) -> Result<f64> {
    Ok(electrostatic_residual(zeros)?
        .iter()
        .map(|f| f.norm())
        .fold(0.0, f64::max))
}

fn jacobian_from(zeros: &[Complex64], inv: &[Complex64]) -> DMatrix<Complex64> {
    let n = zeros.len();
    DMatrix::from_fn(n, n, |j, k| {
        if j == k {
            let z = zeros[j];
            let pair: Complex64 = inv[j * n..(j + 1) * n].iter().map(|g| g * g).sum();
            -pair - (z * z).inv() - 2.0 * (z * z * z).inv()
        } else {
            let g = inv[j * n + k];
            g * g
        }
    })
}

/// `∂F_j/∂z_k`: off-diagonal `1/(z_j-z_k)²`, diagonal
/// `-Σ_{k≠j} 1/(z_j-z_k)² - 1/z_j² - 2/z_j³`.
pub fn electrostatic_jacobian(zeros: &[Complex64]) -> Result<DMatrix<Complex64>> {
    check_points(zeros)?;
    Ok(jacobian_from(zeros, &inverse_gaps(zeros)))
}

fn default_seed(n: PolyIndex) -> Result<Vec<Complex64>> {
    match n {
        0 => Err(Error::InvalidArgument("y_0 has no zeros".into())),
        1 => Ok(vec![Complex64::new(-1.0, 0.0)]),
        _ => Ok(approx_zeros(n)?.into_zeros()),
    }
}

/// Replaces each mirror pair `(z_k, z_{n+1-k})` by its conjugate-symmetric
/// average and puts the middle zero of odd `n` on the real axis.
fn symmetrize(zeros: &mut [Complex64]) -> Result<()> {
    let n = zeros.len();
    for k in 0..n / 2 {
        let (a, b) = (zeros[k], zeros[n - 1 - k]);
        if (a - b.conj()).norm() > 1e-6 * a.norm() {
            return Err(Error::Internal(format!(
                "zeros {} and {} are not a conjugate pair: {a} vs {b}",
                k + 1,
                n - k
            )));
        }
        let avg = (a + b.conj()) * 0.5;
        zeros[k] = avg;
        zeros[n - 1 - k] = avg.conj();
    }
    if n % 2 == 1 {
        zeros[n / 2].im = 0.0;
    }
    Ok(())
}

/// Damped Newton on the equilibrium system.
///
/// Seeds from `seed` or, by default, from the closed-form approximation
/// (`{-1}` for `n = 1`). The result is sorted and conjugate-symmetrised.
pub fn newton_solve(
    n: PolyIndex,
    config: &NewtonConfig,
    seed: Option<&ZeroSet>,
) -> Result<ZeroSet> {
    config.validate()?;
    let mut z = match seed {
        Some(s) if s.n() != n => {
            return Err(Error::InvalidArgument(format!(
                "seed has degree {}, expected {n}",
                s.n()
            )))
        }
        Some(s) => s.zeros().to_vec(),
        None => default_seed(n)?,
    };
    check_points(&z)?;

    let mut inv = inverse_gaps(&z);
    let mut f = residual_from(&z, &inv);
    let mut r = scaled_from(&z, &inv, &f);
    let mut iterations = 0;
    while r > config.tol_residual {
        if iterations == config.max_iter {
            return Err(Error::NoConvergence {
                iterations,
                residual: r,
            });
        }
        iterations += 1;

        let jac = jacobian_from(&z, &inv);
        let rhs = nalgebra::DVector::from_iterator(n as usize, f.iter().map(|v| -v));
        let step = jac.lu().solve(&rhs).ok_or(Error::SingularJacobian)?;
        if step.iter().any(|s| !s.is_finite()) {
            return Err(Error::SingularJacobian);
        }

        let mut t = config.damping;
        loop {
            let trial: Vec<Complex64> = z.iter().zip(step.iter()).map(|(a, s)| a + t * s).collect();
            if check_points(&trial).is_ok() {
                let trial_inv = inverse_gaps(&trial);
                let trial_f = residual_from(&trial, &trial_inv);
                let trial_r = scaled_from(&trial, &trial_inv, &trial_f);
                if trial_r < r {
                    z = trial;
                    inv = trial_inv;
                    f = trial_f;
                    r = trial_r;
                    break;
                }
            }
            t *= 0.5;
            if t < config.min_step {
                return Err(Error::NoConvergence {
                    iterations,
                    residual: r,
                });
            }
        }
    }

    let mut set = ZeroSet::new(n, z, Provenance::Newton, r)?.into_zeros();
    symmetrize(&mut set)?;
    let residual = scaled_residual_norm(&set)?;
    Ok(ZeroSet::new(n, set, Provenance::Newton, residual)?.with_iterations(iterations))
}

/// `max_k |y_n(z_k) / y_n'(z_k)|`, i.e. the largest Newton correction the
/// polynomial itself would apply to the set.
pub fn validate_against_polynomial(zeros: &ZeroSet) -> Result<f64> {
    let n = zeros.n();
    let corrections: Vec<f64> = zeros
        .zeros()
        .par_iter()
        .map(|&z| newton_correction(n, z).map(|c| c.norm()))
        .collect::<Result<_>>()?;
    Ok(corrections.into_iter().fold(0.0, f64::max))
}
