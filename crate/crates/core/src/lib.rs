//! Zeros of the Bessel polynomials
//! `y_n(x) = Σ_{k=0}^{n} (n+k)! / ((n-k)! k!) (x/2)^k`.
//!
//! Three routes to the zeros are provided and cross-checked:
//!
//! * [`approx`]: a closed-form approximation `z̃_k(n)` rational in `n`;
//! * [`electrostatics`]: Newton's method on the equilibrium equations of
//!   unit charges in the field `(z+1)/z²`;
//! * [`oracle`]: Aberth iteration on the polynomial itself, evaluated in
//!   extended precision.
//!
//! [`asymptotics`] measures how far normalised zeros `n z_k` sit from their
//! limit curve and [`experiments`] runs the studies over grids of degrees.
//!
//! ```
//! use bessel_zeros::{newton_solve, NewtonConfig};
//!
//! let set = newton_solve(2, &NewtonConfig::default(), None).unwrap();
//! assert!((set.zeros()[0].re + 0.5).abs() < 1e-12);
//! ```

pub mod approx;
pub mod asymptotics;
pub mod electrostatics;
mod error;
pub mod experiments;
pub mod oracle;
pub mod poly;
mod precise;
mod zeros;

/// Degree of a Bessel polynomial.
pub type PolyIndex = u32;

pub use num_complex::Complex64;

pub use approx::{approx_zero, approx_zeros, fit_coefficients, ApproxCoefficients, PowerSumReport};
pub use asymptotics::{gamma_distance, limit_defect_curve, w_function, ZeroSource};
pub use electrostatics::{newton_solve, validate_against_polynomial, NewtonConfig};
pub use error::{Error, Result};
pub use experiments::{ConvergenceRecord, ConvergenceStudy, PowerLawFit};
pub use oracle::aberth_solve;
pub use poly::{evaluate, BesselEval};
pub use zeros::{arc_angle, arc_order, Provenance, ZeroSet};
