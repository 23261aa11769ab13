use super::{ln_gamma, nonpositive_integer};
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// ζ'(−1).
const ZETA_PRIME_M1: f64 = -0.165_421_143_700_450_93;

// B_{2k+2} / (4k(k+1)) for k = 1..=8.
const KERNEL: [f64; 8] = [
    -1.0 / 240.0,
    1.0 / 1008.0,
    -1.0 / 1440.0,
    5.0 / 5280.0,
    -691.0 / 327600.0,
    7.0 / 1008.0,
    -3617.0 / 114240.0,
    43867.0 / 229824.0,
];

const SHIFT: f64 = 16.0;

/// ln G(w + 1) for large |w|.
fn kernel(w: Complex64) -> Complex64 {
    let lw = w.ln();
    let w2 = w * w;
    let inv2 = w2.inv();
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv2;
    for c in KERNEL {
        series += p * c;
        p *= inv2;
    }
    (0.5 * w2 - 1.0 / 12.0) * lw - 0.75 * w2 + 0.5 * w * (2.0 * PI).ln() + ZETA_PRIME_M1 + series
}

/// A branch of ln G(z), continuous on the plane cut along the negative real
/// axis and real on the positive axis.
///
/// The argument is pushed to the right by the recurrence G(z+1) = Γ(z)G(z)
/// until the large-argument expansion is accurate.
pub fn ln_barnes_g(z: Complex64) -> Result<Complex64> {
    if nonpositive_integer(z, 0.0).is_some() {
        return Err(Error::BarnesGZero(z.re));
    }
    let n = (SHIFT - z.re).ceil().max(0.0) as usize;
    let mut lg = ln_gamma(z)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        acc += lg;
        lg += (z + k as f64).ln();
    }
    Ok(kernel(z + n as f64 - 1.0) - acc)
}
