use thiserror::Error;

/// Errors produced by the verification routines.
///
/// Non-admissible parameter pairs are reported through [`Error::NotAdmissible`]
/// only by operations that need a solved zero; classification routines such as
/// [`crate::params::admissible_interval`] return them as data.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parameters (A={a}, B={b}) are not admissible: L={left} > R={right}")]
    NotAdmissible { a: f64, b: f64, left: f64, right: f64 },

    #[error("G has no admissible sign change for (A={a}, B={b}): G(L)={g_left:e}, G(R)={g_right:e}")]
    NoSignChange { a: f64, b: f64, g_left: f64, g_right: f64 },

    #[error("{what} did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence {
        what: &'static str,
        iterations: usize,
        residual: f64,
    },

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("bidegree ({m}, {n}) is below the stored degree bounds ({deg_a}, {deg_b})")]
    Degree {
        m: usize,
        n: usize,
        deg_a: usize,
        deg_b: usize,
    },

    #[error("certificate {matrix} mismatch at entry ({i}, {j}): expected {expected}, computed {computed}")]
    CertificateMismatch {
        matrix: String,
        i: usize,
        j: usize,
        expected: String,
        computed: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
