//! Aberth–Ehrlich simultaneous root refinement for `y_n`.
//!
//! Shares nothing with the electrostatic solver except the closed-form seed:
//! the iteration is driven by `y_n / y_n'` from the polynomial recurrence.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::approx::approx_zeros;
use crate::error::{Error, Result};
use crate::poly::newton_correction;
use crate::zeros::{Provenance, ZeroSet};
use crate::PolyIndex;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 200;

/// All zeros of `y_n`, converged when every `|y_n(z_k)/y_n'(z_k)| ≤ tol`.
///
/// Updates are synchronous (Jacobi style): each sweep evaluates every
/// correction at the previous iterate before moving any point.
pub fn aberth_solve(n: PolyIndex, tol: f64, max_iter: usize) -> Result<ZeroSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("y_0 has no zeros".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument("tol must be positive".into()));
    }
    let mut z = if n == 1 {
        vec![Complex64::new(-1.0, 0.0)]
    } else {
        approx_zeros(n)?.into_zeros()
    };

    let mut sweep = 0;
    loop {
        let corrections: Vec<Complex64> = z
            .par_iter()
            .map(|&zk| newton_correction(n, zk))
            .collect::<Result<_>>()?;
        let worst = corrections.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if worst <= tol {
            // one last Newton step is free and squares the error
            let polished = z.iter().zip(&corrections).map(|(a, c)| a - c).collect();
            return Ok(ZeroSet::new(n, polished, Provenance::Oracle, worst)?.with_iterations(sweep));
        }
        if sweep == max_iter {
            return Err(Error::NoConvergence {
                iterations: sweep,
                residual: worst,
            });
        }
        sweep += 1;

        let mut next = Vec::with_capacity(z.len());
        for (k, (&zk, &nk)) in z.iter().zip(&corrections).enumerate() {
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != k {
                    if zk == zj {
                        return Err(Error::Pole);
                    }
                    repulsion += (zk - zj).inv();
                }
            }
            let w = nk / (1.0 - nk * repulsion);
            next.push(zk - w);
        }
        z = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one() {
        let set = aberth_solve(1, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        assert_eq!(set.zeros(), &[Complex64::new(-1.0, 0.0)]);
        assert_eq!(set.provenance(), Provenance::Oracle);
        assert_eq!(set.iterations(), 0);
    }

    #[test]
    fn degree_two() {
        let set = aberth_solve(2, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        let s = 1.0 / (2.0 * 3f64.sqrt());
        let want = [Complex64::new(-0.5, -s), Complex64::new(-0.5, s)];
        for (got, w) in set.zeros().iter().zip(want) {
            assert!((got - w).norm() <= 1e-12, "{got} vs {w}");
        }
    }

    #[test]
    fn y5_against_high_precision_roots() {
        // mpmath polyroots on [945, 945, 420, 105, 15, 1], 40 digits.
        let want = [
            Complex64::new(-0.1280366783154105, -0.1966821383462184),
            Complex64::new(-0.234_854_508_719_397_26, -0.122_099_407_637_076_39),
            Complex64::new(-0.2742176259303845, 0.0),
            Complex64::new(-0.234_854_508_719_397_26, 0.122_099_407_637_076_39),
            Complex64::new(-0.1280366783154105, 0.1966821383462184),
        ];
        let set = aberth_solve(5, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        for (got, w) in set.zeros().iter().zip(want) {
            assert!((got - w).norm() <= 1e-14, "{got} vs {w}");
        }
    }

    #[test]
    fn zeros_lie_in_left_half_plane() {
        for n in [7u32, 30, 60] {
            let set = aberth_solve(n, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
            assert!(set.zeros().iter().all(|z| z.re < 0.0), "n={n}");
            assert!(set.residual_norm() <= DEFAULT_TOL);
        }
    }

    #[test]
    fn iteration_cap_is_reported() {
        assert!(matches!(
            aberth_solve(40, 1e-15, 0),
            Err(Error::NoConvergence { iterations: 0, .. })
        ));
        assert!(aberth_solve(0, DEFAULT_TOL, 10).is_err());
    }
}
