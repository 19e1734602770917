use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested field point sits on (or too close to) a boundary where
    /// the renormalized expectation values diverge.
    #[error("quantity diverges at the boundary: {0}")]
    DivergesAtBoundary(String),

    #[error("invalid decay scale {0}: must be positive and finite")]
    InvalidDecayScale(f64),

    /// The adaptive integrator ran out of subdivisions. The best values and
    /// error estimates reached so far are carried along.
    #[error("quadrature did not converge after {subdivisions} subdivisions (values {values:?}, error estimates {errors:?})")]
    NonConvergence {
        values: Vec<f64>,
        errors: Vec<f64>,
        subdivisions: usize,
    },

    #[error("no sign change of the midgap energy density on [{lo}, {hi}] (values {f_lo:e}, {f_hi:e})")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
