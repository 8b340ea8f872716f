use thiserror::Error;

/// Errors raised by the zero computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Raw coefficients of `y_n` do not fit in an `f64`.
    #[error("degree {n} exceeds the coefficient-safe bound {max}")]
    DegreeTooLarge { n: u32, max: u32 },

    /// The closed-form fit coefficients are undefined at this degree.
    #[error("closed-form coefficients are singular at degree n = {n}")]
    SingularDegree { n: u32 },

    #[error("zero index k = {k} out of range 1..={n}")]
    IndexOutOfRange { k: u32, n: u32 },

    #[error("unsupported power-sum order {order}")]
    UnsupportedOrder { order: u32 },

    #[error("rational power-sum denominator vanishes at n = {n}, order {order}")]
    VanishingDenominator { n: u32, order: u32 },

    #[error("points {i} and {j} coincide")]
    CoincidentPoints { i: usize, j: usize },

    #[error("point {index} is at the origin")]
    ZeroArgument { index: usize },

    /// `y_n` vanishes (to working precision) where its log-derivative was requested.
    #[error("logarithmic derivative has a pole at the evaluation point")]
    Pole,

    #[error("W(z) is singular at z = {re} + {im}i")]
    SingularArgument { re: f64, im: f64 },

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("Jacobian is singular")]
    SingularJacobian,

    #[error("non-finite input")]
    NonFinite,

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
