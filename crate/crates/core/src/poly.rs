//! Bessel polynomials `y_n` and their reverses `θ_n(x) = x^n y_n(1/x)`.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::precise::{self, Ratio};
use crate::zeros::ZeroSet;
use crate::PolyIndex;

pub use crate::precise::working_precision;

const RESCALE_HIGH: f64 = 1.340_780_792_994_259_7e154; // 2^512
const RESCALE_LOW: f64 = 7.458_340_731_200_207e-155; // 2^-512

/// `y_n(z)` and `y_n'(z)` as mantissas sharing the factor `2^scale_exp`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselEval {
    pub value: Complex64,
    pub derivative: Complex64,
    pub scale_exp: i32,
}

impl BesselEval {
    /// Unscaled value; may overflow to infinity for large degrees.
    pub fn value_unscaled(&self) -> Complex64 {
        scale_by_pow2(self.value, self.scale_exp)
    }

    pub fn derivative_unscaled(&self) -> Complex64 {
        scale_by_pow2(self.derivative, self.scale_exp)
    }
}

fn pow2(e: i32) -> f64 {
    // split so that neither factor overflows on its own
    let half = e / 2;
    2f64.powi(half) * 2f64.powi(e - half)
}

fn scale_by_pow2(v: Complex64, e: i32) -> Complex64 {
    let half = e / 2;
    v * 2f64.powi(half) * 2f64.powi(e - half)
}

/// Largest degree whose coefficients are all finite `f64`s.
///
/// The leading coefficient `(2n)!/(n! 2^n)` is the largest, so this is the
/// last `n` for which the double factorial `(2n-1)!!` stays finite.
pub fn coefficient_safe_bound() -> PolyIndex {
    static BOUND: OnceLock<PolyIndex> = OnceLock::new();
    *BOUND.get_or_init(|| {
        let mut lead = 1.0_f64;
        let mut n: PolyIndex = 0;
        loop {
            let next = lead * (2 * (n + 1) - 1) as f64;
            if !next.is_finite() {
                return n;
            }
            lead = next;
            n += 1;
        }
    })
}

/// Coefficients of `y_n` in ascending powers: `(n+k)! / ((n-k)! k! 2^k)`.
pub fn coefficients(n: PolyIndex) -> Result<Vec<f64>> {
    let max = coefficient_safe_bound();
    if n > max {
        return Err(Error::DegreeTooLarge { n, max });
    }
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut c = 1.0_f64;
    out.push(c);
    for k in 0..n {
        c *= f64::from(n + k + 1) * f64::from(n - k) / f64::from(2 * (k + 1));
        out.push(c.round());
    }
    Ok(out)
}

/// Value and derivative of `y_n(z)` by the three-term recurrence
/// `y_m = (2m-1) z y_{m-1} + y_{m-2}`, renormalised into `scale_exp`.
///
/// Accurate in the relative sense away from the zero cluster; near the zeros
/// of large degree use [`log_derivative`] instead.
pub fn evaluate(n: PolyIndex, z: Complex64) -> Result<BesselEval> {
    if !z.is_finite() {
        return Err(Error::NonFinite);
    }
    let one = Complex64::new(1.0, 0.0);
    if n == 0 {
        return Ok(BesselEval {
            value: one,
            derivative: Complex64::new(0.0, 0.0),
            scale_exp: 0,
        });
    }
    let (mut p0, mut d0) = (one, Complex64::new(0.0, 0.0));
    let (mut p1, mut d1) = (one + z, one);
    let mut scale_exp = 0_i32;
    for m in 2..=n {
        let c = f64::from(2 * m - 1);
        let p2 = c * z * p1 + p0;
        let d2 = c * (p1 + z * d1) + d0;
        p0 = p1;
        d0 = d1;
        p1 = p2;
        d1 = d2;

        let big = [p0, d0, p1, d1]
            .iter()
            .map(|v| v.re.abs().max(v.im.abs()))
            .fold(0.0, f64::max);
        if big > RESCALE_HIGH || (big < RESCALE_LOW && big > 0.0) {
            let e = big.log2().floor() as i32;
            let s = pow2(-e);
            p0 *= s;
            d0 *= s;
            p1 *= s;
            d1 *= s;
            scale_exp += e;
        }
    }
    if !p1.is_finite() || !d1.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(BesselEval {
        value: p1,
        derivative: d1,
        scale_exp,
    })
}

/// `y_n'(z) / y_n(z)`, computed in extended precision so it stays accurate
/// next to the zeros for any degree.
pub fn log_derivative(n: PolyIndex, z: Complex64) -> Result<Complex64> {
    if !z.is_finite() {
        return Err(Error::NonFinite);
    }
    match precise::value_over_derivative(n, z) {
        Ratio::Finite(r) if r != Complex64::new(0.0, 0.0) => Ok(r.inv()),
        Ratio::Finite(_) | Ratio::AtZero => Err(Error::Pole),
        Ratio::AtCritical => Ok(Complex64::new(0.0, 0.0)),
    }
}

/// Newton correction `y_n(z) / y_n'(z)`; zero exactly at a root.
pub fn newton_correction(n: PolyIndex, z: Complex64) -> Result<Complex64> {
    if !z.is_finite() {
        return Err(Error::NonFinite);
    }
    match precise::value_over_derivative(n, z) {
        Ratio::Finite(r) => Ok(r),
        Ratio::AtZero => Ok(Complex64::new(0.0, 0.0)),
        Ratio::AtCritical => Err(Error::Pole),
    }
}

/// Zeros of the reverse polynomial `θ_n`: reciprocals of the zeros of `y_n`.
pub fn reverse_zeros(zeros: &ZeroSet) -> Result<ZeroSet> {
    let mut out = Vec::with_capacity(zeros.len());
    for (index, z) in zeros.zeros().iter().enumerate() {
        if z.norm_sqr() == 0.0 {
            return Err(Error::ZeroArgument { index });
        }
        out.push(z.inv());
    }
    Ok(
        ZeroSet::new(zeros.n(), out, zeros.provenance(), zeros.residual_norm())?
            .with_iterations(zeros.iterations()),
    )
}
