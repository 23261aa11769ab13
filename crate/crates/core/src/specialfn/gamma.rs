use super::nonpositive_integer;
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

// B_{2k} / (2k (2k-1)) for k = 1..=8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

const SHIFT: f64 = 15.0;

fn stirling(w: Complex64) -> Complex64 {
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING {
        series += p * c;
        p *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series
}

/// Principal branch of log Γ(z): continuous on the plane cut along the
/// negative real axis, real for real positive z.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if nonpositive_integer(z, 0.0).is_some() {
        return Err(Error::GammaPole(z.re));
    }
    let n = (SHIFT - z.re).ceil().max(0.0) as usize;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        acc += (z + k as f64).ln();
    }
    Ok(stirling(z + n as f64) - acc)
}

pub fn gamma(z: Complex64) -> Result<Complex64> {
    ln_gamma(z).map(|l| l.exp())
}

/// 1/Γ(z), entire; exactly zero at the poles of Γ.
pub fn rgamma(z: Complex64) -> Complex64 {
    match ln_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}
