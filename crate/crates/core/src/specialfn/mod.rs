//! Complex special functions used by the asymptotic formulas and the
//! local parametrix.

mod barnes;
mod gamma;
mod hyperu;
mod parametrix;

pub use barnes::ln_barnes_g;
pub use gamma::{gamma, ln_gamma, rgamma};
pub use hyperu::{kummer_m, psi_chf, CoveringPoint};
pub use parametrix::{
    jump_matrix, jump_residual, parametrix_asymptotic, parametrix_matrix, ray_angle, ray_sides, Mat2, ParametrixInput,
    Sector,
};

use num_complex::Complex64;

/// Nearest integer to `z` when `z` lies within `tol` of a non-positive integer.
pub(crate) fn nonpositive_integer(z: Complex64, tol: f64) -> Option<i64> {
    let r = z.re.round();
    if r <= 0.0 && (z.re - r).abs() <= tol && z.im.abs() <= tol {
        Some(r as i64)
    } else {
        None
    }
}
