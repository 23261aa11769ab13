//! Exact and asymptotic determinants of Toeplitz, Hankel and Toeplitz+Hankel
//! matrices whose symbols carry Fisher–Hartwig singularities.
//!
//! The crate is organised bottom-up:
//!
//! * [`specialfn`]: log-Gamma, log-Barnes-G, the Tricomi function on its
//!   Riemann surface and the confluent hypergeometric parametrix.
//! * [`quad`]: tanh–sinh quadrature with endpoint-offset aware integrands.
//! * [`symbol`]: circle symbols, Hankel weights, Fourier coefficients, moments.
//! * [`exactdet`]: LU log-determinants and the Szegő recursion.
//! * [`fhrep`]: the seminorm and minimizing FH-representations.
//! * [`asym`]: closed-form asymptotic predictors.
//! * [`relations`]: exact identities between the determinant families.
//! * [`corpus`]: seeded random inputs for the identity suites.

pub mod asym;
pub mod corpus;
pub mod error;
pub mod exactdet;
pub mod fhrep;
pub mod logscaled;
pub mod poly;
pub mod quad;
pub mod relations;
pub mod specialfn;
pub mod symbol;

pub use error::{Error, Result};
pub use logscaled::LogScaled;
pub use num_complex::Complex64;
