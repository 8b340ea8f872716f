//! Ordered zero sets shared by every solver.
//!
//! Zeros are kept in *arc order*: ascending `atan2(Im z, -Re z)`, the
//! argument of `z` seen from the origin and measured from the negative real
//! axis. For Bessel polynomials all zeros sit in the left half-plane on a
//! curve that is star-shaped about the origin, so this walks the curve from
//! the lower tip, across the real axis, to the upper tip. It matches the
//! index `k` of the closed-form approximation, and conjugation reverses it.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::PolyIndex;

/// Where a zero set came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Approx,
    Newton,
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Approx => "approx",
            Provenance::Newton => "newton",
            Provenance::Oracle => "oracle",
        })
    }
}

/// Sort key of the ordering convention.
pub fn arc_angle(z: Complex64) -> f64 {
    z.im.atan2(-z.re)
}

/// Total order used for every [`ZeroSet`]; ties on the angle fall back to modulus.
pub fn arc_order(a: &Complex64, b: &Complex64) -> Ordering {
    arc_angle(*a)
        .total_cmp(&arc_angle(*b))
        .then_with(|| a.norm_sqr().total_cmp(&b.norm_sqr()))
}

/// The `n` zeros of `y_n`, sorted by [`arc_order`].
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    n: PolyIndex,
    zeros: Vec<Complex64>,
    provenance: Provenance,
    residual_norm: f64,
    iterations: usize,
}

impl ZeroSet {
    /// Builds a set, sorting `zeros` into arc order.
    pub fn new(
        n: PolyIndex,
        mut zeros: Vec<Complex64>,
        provenance: Provenance,
        residual_norm: f64,
    ) -> Result<Self> {
        if zeros.len() != n as usize {
            return Err(Error::InvalidArgument(format!(
                "expected {n} zeros, got {}",
                zeros.len()
            )));
        }
        if zeros.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite);
        }
        zeros.sort_by(arc_order);
        Ok(ZeroSet {
            n,
            zeros,
            provenance,
            residual_norm,
            iterations: 0,
        })
    }

    pub(crate) fn with_iterations(mut self, iterations: usize) -> Self {
        self.iterations = iterations;
        self
    }

    pub fn n(&self) -> PolyIndex {
        self.n
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn into_zeros(self) -> Vec<Complex64> {
        self.zeros
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Max-norm of the residual appropriate to the provenance: the scaled
    /// electrostatic residual for `Approx`/`Newton`, `max |y_n/y_n'|` for `Oracle`.
    pub fn residual_norm(&self) -> f64 {
        self.residual_norm
    }

    /// Iterations spent by the producing solver (0 for closed-form sets).
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// Largest `|z_k - w_k|` between two sets of the same degree, paired by order.
    pub fn max_deviation(&self, other: &ZeroSet) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "degree mismatch: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(self
            .zeros
            .iter()
            .zip(&other.zeros)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// `Σ z_k^order`.
    pub fn power_sum(&self, order: u32) -> Complex64 {
        self.zeros.iter().map(|z| z.powu(order)).sum()
    }

    /// Zeros whose imaginary part is negligible relative to their modulus.
    pub fn real_zeros(&self, rel_tol: f64) -> Vec<f64> {
        self.zeros
            .iter()
            .filter(|z| z.im.abs() <= rel_tol * z.norm())
            .map(|z| z.re)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_lower_tip_first() {
        let zs = vec![
            Complex64::new(-0.1, 1.0),
            Complex64::new(-1.5, 0.0),
            Complex64::new(-0.1, -1.0),
        ];
        let set = ZeroSet::new(3, zs, Provenance::Approx, 0.0).unwrap();
        assert_eq!(set.zeros()[0], Complex64::new(-0.1, -1.0));
        assert_eq!(set.zeros()[1], Complex64::new(-1.5, 0.0));
        assert_eq!(set.zeros()[2], Complex64::new(-0.1, 1.0));
    }

    #[test]
    fn conjugation_reverses_order() {
        let zs = vec![
            Complex64::new(-0.44, -1.111),
            Complex64::new(-0.49, -1.110),
            Complex64::new(-0.39, -1.109),
        ];
        let mut all = zs.clone();
        all.extend(zs.iter().map(|z| z.conj()));
        let set = ZeroSet::new(6, all, Provenance::Newton, 0.0).unwrap();
        let z = set.zeros();
        for k in 0..6 {
            assert_eq!(z[k], z[5 - k].conj());
        }
    }

    #[test]
    fn rejects_wrong_length() {
        let err = ZeroSet::new(2, vec![Complex64::new(-1.0, 0.0)], Provenance::Oracle, 0.0);
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }
}
