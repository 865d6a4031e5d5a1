use thiserror::Error;

/// Errors surfaced by the evaluation and verification routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument sits on a pole of the evaluated function.
    #[error("pole: {0}")]
    Pole(String),

    /// Argument lies outside the range for which the stated accuracy holds.
    #[error("accuracy domain: {0}")]
    AccuracyDomain(String),

    /// A denominator function is numerically zero (e.g. evaluation at a
    /// point where |zeta| is below the configured floor).
    #[error("near zero: {0}")]
    NearZero(String),

    /// Evaluation point is too close to a catalogued or hypothetical zero.
    #[error("proximity: {0}")]
    Proximity(String),

    /// Parameter outside its admissible range.
    #[error("domain: {0}")]
    Domain(String),

    /// Zero-table file could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Zero-table ordinates are not strictly increasing or not positive.
    #[error("monotonicity violation at line {line}: {msg}")]
    Monotonicity { line: usize, msg: String },

    /// Zero-table file contains no ordinates.
    #[error("empty zero table: {0}")]
    EmptyTable(String),

    /// Adaptive quadrature exhausted its refinement depth.
    #[error("quadrature did not converge: {0}")]
    Convergence(String),

    /// Invalid region grid specification.
    #[error("grid spec: {0}")]
    GridSpec(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
