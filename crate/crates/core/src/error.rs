use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("Gamma has a pole at z = {0}")]
    GammaPole(f64),
    #[error("Barnes G vanishes at z = {0}")]
    BarnesGZero(f64),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("symbol evaluated at singular point theta = {0}")]
    AtSingularity(f64),
    #[error("quadrature did not converge: estimated error {estimate:e} after {levels} levels")]
    Quadrature { estimate: f64, levels: usize },
    #[error("Szegő recursion breakdown at degree {degree}: |1 - Phi(0) hatPhi(0)| = {value:e}")]
    Breakdown { degree: usize, value: f64 },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
