//! The Tricomi confluent hypergeometric function ψ(a, c, ζ) (often written
//! U(a, c, ζ)) on the universal covering of the punctured plane.
//!
//! Evaluation regions, by |ζ|:
//!
//! * `|ζ| ≤ KUMMER_RADIUS`: two-term Kummer representation. The factor
//!   ζ^{1−c} is taken from the covering argument, so this works on every sheet.
//! * otherwise the argument is first brought into (−π, π] by the monodromy
//!   relation, then
//!   * `|ζ| ≥ ASYMPTOTIC_RADIUS`: optimally truncated asymptotic series;
//!   * in between: Taylor stepping of Kummer's equation along the ray, in
//!     whichever direction keeps ψ the dominant solution.

use super::{gamma, rgamma};
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const KUMMER_RADIUS: f64 = 4.0;
const ASYMPTOTIC_RADIUS: f64 = 50.0;
/// Distance from an integer `c` below which the Kummer route averages over a
/// small circle in the c-plane.
const INTEGER_C_TRIGGER: f64 = 1e-3;
const DETOUR_RADIUS: f64 = 1e-2;
const DETOUR_POINTS: usize = 8;
const MAX_STEP: f64 = 3.0;

/// A point ζ ≠ 0 of the universal covering: `ζ = exp(log_modulus + i*argument)`
/// with the argument kept as given.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoveringPoint {
    pub log_modulus: f64,
    pub argument: f64,
}

impl CoveringPoint {
    pub fn new(modulus: f64, argument: f64) -> Self {
        CoveringPoint {
            log_modulus: modulus.ln(),
            argument,
        }
    }

    pub fn modulus(&self) -> f64 {
        self.log_modulus.exp()
    }

    /// The projection of the point to the plane.
    pub fn value(&self) -> Complex64 {
        Complex64::from_polar(self.modulus(), self.argument)
    }

    /// `ζ^e` on this sheet.
    pub fn pow(&self, e: Complex64) -> Complex64 {
        (e * Complex64::new(self.log_modulus, self.argument)).exp()
    }

    /// `e^{iφ} ζ` as a covering point.
    pub fn rotate(&self, phi: f64) -> Self {
        CoveringPoint {
            log_modulus: self.log_modulus,
            argument: self.argument + phi,
        }
    }

    fn with_modulus(&self, modulus: f64) -> Self {
        CoveringPoint::new(modulus, self.argument)
    }
}

/// Kummer's function M(a, c, z) = 1F1(a; c; z) by its power series.
pub fn kummer_m(a: Complex64, c: Complex64, z: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut k = 0.0;
    loop {
        term *= (a + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        k += 1.0;
        if term.norm() <= 1e-17 * sum.norm() && k > z.norm() {
            break;
        }
        if term == Complex64::new(0.0, 0.0) || k > 2000.0 {
            break;
        }
    }
    sum
}

fn kummer_route_regular(a: Complex64, c: Complex64, zeta: &CoveringPoint) -> Complex64 {
    let z = zeta.value();
    let one = Complex64::new(1.0, 0.0);
    let g1 = gamma(one - c).unwrap_or_default();
    let g2 = gamma(c - one).unwrap_or_default();
    let t1 = g1 * rgamma(a - c + one) * kummer_m(a, c, z);
    let t2 = g2 * rgamma(a) * zeta.pow(one - c) * kummer_m(a - c + one, 2.0 * one - c, z);
    t1 + t2
}

fn kummer_route(a: Complex64, c: Complex64, zeta: &CoveringPoint) -> Complex64 {
    if (c.re - c.re.round()).abs() < INTEGER_C_TRIGGER && c.im.abs() < INTEGER_C_TRIGGER {
        // ψ is entire in c: the mean over a circle recovers the centre value.
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..DETOUR_POINTS {
            let phi = 2.0 * PI * (k as f64 + 0.5) / DETOUR_POINTS as f64;
            acc += kummer_route_regular(a, c + Complex64::from_polar(DETOUR_RADIUS, phi), zeta);
        }
        acc / DETOUR_POINTS as f64
    } else {
        kummer_route_regular(a, c, zeta)
    }
}

fn asymptotic(a: Complex64, c: Complex64, zeta: &CoveringPoint) -> Complex64 {
    let x = zeta.value();
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut prev = f64::INFINITY;
    let b = a - c + 1.0;
    for k in 0..200 {
        let kf = k as f64;
        let next = term * (a + kf) * (b + kf) / ((kf + 1.0) * (-x));
        let m = next.norm();
        if m > prev || m == 0.0 {
            break;
        }
        sum += next;
        term = next;
        prev = m;
        if m <= 1e-17 * sum.norm() {
            break;
        }
    }
    zeta.pow(-a) * sum
}

/// Advance (y, y') of Kummer's equation from `z0` to `z0 + h` by Taylor series.
fn taylor_step(
    a: Complex64,
    c: Complex64,
    z0: Complex64,
    h: Complex64,
    y: Complex64,
    dy: Complex64,
) -> (Complex64, Complex64) {
    let mut t0 = y;
    let mut t1 = dy;
    let mut yh = t0 + t1 * h;
    let mut dyh = t1;
    let mut hp = h; // h^{k+1} for the coefficient t_{k+2} below, times h
    let scale = y.norm() + (dy * h).norm();
    let mut small = 0;
    for k in 0..600 {
        let kf = k as f64;
        let t2 = ((kf + a) * t0 - (kf + 1.0) * (kf + c - z0) * t1) / (z0 * (kf + 1.0) * (kf + 2.0));
        dyh += t2 * hp * (kf + 2.0);
        hp *= h;
        let contrib = t2 * hp;
        yh += contrib;
        if contrib.norm() <= 1e-18 * scale {
            small += 1;
            if small >= 2 {
                break;
            }
        } else {
            small = 0;
        }
        t0 = t1;
        t1 = t2;
    }
    (yh, dyh)
}

fn integrate_ray(
    a: Complex64,
    c: Complex64,
    arg: f64,
    r_from: f64,
    r_to: f64,
    mut y: Complex64,
    mut dy: Complex64,
) -> Complex64 {
    let dir = Complex64::from_polar(1.0, arg);
    let mut r = r_from;
    while (r_to - r).abs() > 0.0 {
        let step = (0.5 * r).min(MAX_STEP);
        let next = if r_to > r {
            (r + step).min(r_to)
        } else {
            (r - step).max(r_to)
        };
        let (y1, dy1) = taylor_step(a, c, dir * r, dir * (next - r), y, dy);
        y = y1;
        dy = dy1;
        r = next;
    }
    y
}

fn principal_sheet(a: Complex64, c: Complex64, zeta: &CoveringPoint) -> Complex64 {
    let r = zeta.modulus();
    let one = Complex64::new(1.0, 0.0);
    if r >= ASYMPTOTIC_RADIUS {
        return asymptotic(a, c, zeta);
    }
    if zeta.argument.abs() <= 0.5 * PI {
        let start = zeta.with_modulus(ASYMPTOTIC_RADIUS);
        let y = asymptotic(a, c, &start);
        let dy = -a * asymptotic(a + one, c + one, &start);
        integrate_ray(a, c, zeta.argument, ASYMPTOTIC_RADIUS, r, y, dy)
    } else {
        let start = zeta.with_modulus(KUMMER_RADIUS);
        let y = kummer_route(a, c, &start);
        let dy = -a * kummer_route(a + one, c + one, &start);
        integrate_ray(a, c, zeta.argument, KUMMER_RADIUS, r, y, dy)
    }
}

fn eval(a: Complex64, c: Complex64, zeta: &CoveringPoint) -> Complex64 {
    if a == Complex64::new(0.0, 0.0) {
        return Complex64::new(1.0, 0.0);
    }
    if zeta.modulus() <= KUMMER_RADIUS {
        return kummer_route(a, c, zeta);
    }
    let arg = zeta.argument;
    if arg > -PI && arg <= PI {
        return principal_sheet(a, c, zeta);
    }
    let i = Complex64::new(0.0, 1.0);
    let k = 2.0 * PI * i * rgamma(a) * rgamma(a - c + 1.0);
    if arg > PI {
        // ψ(a,c,e^{2πi}ζ') = e^{−2πia}[ψ(a,c,ζ') + K e^{iπa} e^{ζ'} ψ(c−a,c,e^{iπ}ζ')]
        let lower = zeta.rotate(-2.0 * PI);
        let mut inner = eval(a, c, &lower);
        if k != Complex64::new(0.0, 0.0) {
            inner += k * (i * PI * a).exp() * lower.value().exp() * eval(c - a, c, &lower.rotate(PI));
        }
        (-2.0 * PI * i * a).exp() * inner
    } else {
        // ψ(a,c,e^{−2πi}ζ) = e^{2πia}ψ(a,c,ζ) − K e^{iπa} e^{ζ} ψ(c−a,c,e^{−iπ}ζ)
        let upper = zeta.rotate(2.0 * PI);
        let mut out = (2.0 * PI * i * a).exp() * eval(a, c, &upper);
        if k != Complex64::new(0.0, 0.0) {
            out -= k * (i * PI * a).exp() * upper.value().exp() * eval(c - a, c, &upper.rotate(-PI));
        }
        out
    }
}

/// ψ(a, c, ζ) continued analytically to the sheet of `zeta`.
pub fn psi_chf(a: Complex64, c: Complex64, zeta: CoveringPoint) -> Result<Complex64> {
    if !zeta.log_modulus.is_finite() || !zeta.argument.is_finite() {
        return Err(Error::Invalid("psi_chf needs a finite, nonzero argument".into()));
    }
    let v = eval(a, c, &zeta);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Degenerate(format!(
            "psi({a}, {c}, .) is not finite at |zeta| = {}, arg = {}",
            zeta.modulus(),
            zeta.argument
        )))
    }
}
