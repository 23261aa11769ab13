//! The confluent hypergeometric model solution Ψ(ζ) near a Fisher–Hartwig
//! point, on the eight sectors cut out by the rays Γ_1..Γ_8.
//!
//! Ray Γ_k leaves the origin at angle `ray_angle(k)`: Γ_1 at π/2, then Γ_2..Γ_6
//! at 3π/4, π, 5π/4, 3π/2, 7π/4, Γ_7 along the positive axis (argument 0 on
//! one side, 2π on the other) and Γ_8 at π/4. Sector I lies between Γ_1 and
//! Γ_2, sector II between Γ_2 and Γ_3, and so on round to sector VIII between
//! Γ_8 and Γ_1.

use super::{gamma, psi_chf, rgamma, CoveringPoint};
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::ops::Mul;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Self {
        let o = Complex64::new(1.0, 0.0);
        let z = Complex64::new(0.0, 0.0);
        Mat2([[o, z], [z, o]])
    }

    pub fn diag(a: Complex64, d: Complex64) -> Self {
        let z = Complex64::new(0.0, 0.0);
        Mat2([[a, z], [z, d]])
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn inverse(&self) -> Self {
        let m = &self.0;
        let d = self.det();
        Mat2([[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]])
    }

    /// Max-row-sum norm.
    pub fn norm(&self) -> f64 {
        self.0
            .iter()
            .map(|r| r[0].norm() + r[1].norm())
            .fold(0.0, f64::max)
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.0[i][j] -= o.0[i][j];
            }
        }
        r
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        let mut r = [[Complex64::new(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Mat2(r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sector {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
}

impl Sector {
    pub const ALL: [Sector; 8] = [
        Sector::I,
        Sector::II,
        Sector::III,
        Sector::IV,
        Sector::V,
        Sector::VI,
        Sector::VII,
        Sector::VIII,
    ];

    /// Open argument range of the sector inside (0, 2π).
    pub fn arg_range(&self) -> (f64, f64) {
        let q = PI / 4.0;
        match self {
            Sector::I => (2.0 * q, 3.0 * q),
            Sector::II => (3.0 * q, 4.0 * q),
            Sector::III => (4.0 * q, 5.0 * q),
            Sector::IV => (5.0 * q, 6.0 * q),
            Sector::V => (6.0 * q, 7.0 * q),
            Sector::VI => (7.0 * q, 8.0 * q),
            Sector::VII => (0.0, q),
            Sector::VIII => (q, 2.0 * q),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParametrixInput {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub sector: Sector,
}

/// Angle of ray Γ_k, k = 1..=8. Γ_7 is reported as 0.
pub fn ray_angle(k: usize) -> f64 {
    let q = PI / 4.0;
    match k {
        1 => 2.0 * q,
        2 => 3.0 * q,
        3 => 4.0 * q,
        4 => 5.0 * q,
        5 => 6.0 * q,
        6 => 7.0 * q,
        7 => 0.0,
        8 => q,
        _ => panic!("ray index {k} out of 1..=8"),
    }
}

/// The two sectors adjacent to Γ_k and their arguments on the ray, ordered so
/// that `Ψ_left(ζ) = Ψ_right(ζ) J_k` holds on Γ_k.
pub fn ray_sides(k: usize) -> ((Sector, f64), (Sector, f64)) {
    let t = ray_angle(k);
    match k {
        1 => ((Sector::I, t), (Sector::VIII, t)),
        2 => ((Sector::II, t), (Sector::I, t)),
        3 => ((Sector::III, t), (Sector::II, t)),
        4 => ((Sector::III, t), (Sector::IV, t)),
        5 => ((Sector::IV, t), (Sector::V, t)),
        6 => ((Sector::V, t), (Sector::VI, t)),
        7 => ((Sector::VII, 0.0), (Sector::VI, 2.0 * PI)),
        8 => ((Sector::VIII, t), (Sector::VII, t)),
        _ => panic!("ray index {k} out of 1..=8"),
    }
}

fn e(x: Complex64) -> Complex64 {
    (Complex64::new(0.0, PI) * x).exp()
}

/// `‖Ψ_left − Ψ_right J_k‖ / ‖Ψ_right‖` at `|ζ| = r` on Γ_k.
pub fn jump_residual(alpha: Complex64, beta: Complex64, k: usize, r: f64) -> Result<f64> {
    let ((left, la), (right, ra)) = ray_sides(k);
    let pl = parametrix_matrix(ParametrixInput { alpha, beta, sector: left }, CoveringPoint::new(r, la))?;
    let pr = parametrix_matrix(ParametrixInput { alpha, beta, sector: right }, CoveringPoint::new(r, ra))?;
    Ok(pl.sub(&(pr * jump_matrix(k, alpha, beta))).norm() / pr.norm())
}

/// The constant jump matrix J_k on Γ_k.
pub fn jump_matrix(k: usize, alpha: Complex64, beta: Complex64) -> Mat2 {
    let o = Complex64::new(1.0, 0.0);
    let z = Complex64::new(0.0, 0.0);
    match k {
        1 => Mat2([[z, e(-beta)], [-e(beta), z]]),
        5 => Mat2([[z, e(beta)], [-e(-beta), z]]),
        3 | 7 => Mat2::diag(e(alpha), e(-alpha)),
        2 => Mat2([[o, z], [e(beta - 2.0 * alpha), o]]),
        4 => Mat2([[o, z], [e(-(beta - 2.0 * alpha)), o]]),
        8 => Mat2([[o, z], [e(beta + 2.0 * alpha), o]]),
        6 => Mat2([[o, z], [e(-(beta + 2.0 * alpha)), o]]),
        _ => panic!("ray index {k} out of 1..=8"),
    }
}

/// Right factor taking the sector-I formula to the given sector. Sectors
/// I–IV, VII and VIII follow from Ψ_I by the jumps across Γ_1..Γ_4 and Γ_8;
/// V and VI are reached from VII across Γ_7 and Γ_6, which leaves Γ_5 as the
/// ray where the two continuations meet.
fn sector_constant(s: Sector, alpha: Complex64, beta: Complex64) -> Mat2 {
    let j = |k| jump_matrix(k, alpha, beta);
    match s {
        Sector::I => Mat2::identity(),
        Sector::II => j(2),
        Sector::III => j(2) * j(3),
        Sector::IV => j(2) * j(3) * j(4).inverse(),
        // Applied to the formula at e^{−2πi}ζ: sector VII continued across Γ_7.
        Sector::VI => j(1).inverse() * j(8).inverse() * j(7).inverse(),
        Sector::V => j(1).inverse() * j(8).inverse() * j(7).inverse() * j(6),
        Sector::VIII => j(1).inverse(),
        Sector::VII => j(1).inverse() * j(8).inverse(),
    }
}

fn check(p: &ParametrixInput) -> Result<()> {
    for (label, v) in [("alpha + beta", p.alpha + p.beta), ("alpha - beta", p.alpha - p.beta)] {
        if let Some(k) = super::nonpositive_integer(v, 1e-12) {
            if k < 0 {
                return Err(Error::Degenerate(format!("{label} = {k} is a negative integer")));
            }
        }
    }
    if p.alpha.re <= -0.5 {
        return Err(Error::Hypothesis(format!("Re alpha = {} <= -1/2", p.alpha.re)));
    }
    Ok(())
}

/// The sector-I formula continued to the point `zeta` of the covering.
fn sector_one_formula(alpha: Complex64, beta: Complex64, zeta: CoveringPoint) -> Result<Mat2> {
    let one = Complex64::new(1.0, 0.0);
    let z = zeta.value();
    let zm = zeta.rotate(-PI);
    let ea = zeta.pow(alpha);
    let ema = zeta.pow(-alpha);
    let em = (-0.5 * z).exp();
    let ep = (0.5 * z).exp();
    let g21 = gamma(one + alpha + beta)? * rgamma(alpha - beta);
    let g12 = gamma(one + alpha - beta)? * rgamma(alpha + beta);
    let p11 = ea * psi_chf(alpha + beta, one + 2.0 * alpha, zeta)? * e(2.0 * beta + alpha) * em;
    let p21 = -ema * psi_chf(one - alpha + beta, one - 2.0 * alpha, zeta)? * e(beta - 3.0 * alpha) * em * g21;
    let p12 = -ea * psi_chf(one + alpha - beta, one + 2.0 * alpha, zm)? * e(beta + alpha) * ep * g12;
    let p22 = ema * psi_chf(-alpha - beta, one - 2.0 * alpha, zm)? * e(-alpha) * ep;
    Ok(Mat2([[p11, p12], [p21, p22]]))
}

/// Ψ(ζ) on the requested sector. `zeta.argument` is normally inside the
/// sector's range; other arguments give the analytic continuation.
pub fn parametrix_matrix(p: ParametrixInput, zeta: CoveringPoint) -> Result<Mat2> {
    check(&p)?;
    // On sectors V and VI the column that decays like e^{−ζ/2} is taken
    // directly from the sheet below, so it never arises by cancellation.
    let at = match p.sector {
        Sector::V | Sector::VI => zeta.rotate(-2.0 * PI),
        _ => zeta,
    };
    Ok(sector_one_formula(p.alpha, p.beta, at)? * sector_constant(p.sector, p.alpha, p.beta))
}

/// Large-ζ form of Ψ on the requested sector:
/// `(I + [order ≥ 1] M/ζ) ζ^{−βσ3} e^{−ζσ3/2} E_sector`.
pub fn parametrix_asymptotic(p: ParametrixInput, zeta: CoveringPoint, order: usize) -> Result<Mat2> {
    check(&p)?;
    let (a, b) = (p.alpha, p.beta);
    let one = Complex64::new(1.0, 0.0);
    let z = zeta.value();
    let mut lead = Mat2::identity();
    if order >= 1 {
        let d = a * a - b * b;
        let m12 = gamma(one + a - b)? * rgamma(a + b) * e(b + 4.0 * a);
        let m21 = -gamma(one + a + b)? * rgamma(a - b) * e(-(b + 4.0 * a));
        let m = Mat2([[d / z, m12 / z], [m21 / z, -d / z]]);
        lead = Mat2([
            [one + m.0[0][0], m.0[0][1]],
            [m.0[1][0], one + m.0[1][1]],
        ]);
    }
    let core = lead
        * Mat2::diag(zeta.pow(-b), zeta.pow(b))
        * Mat2::diag((-0.5 * z).exp(), (0.5 * z).exp())
        * Mat2::diag(e(2.0 * b + a), e(-(b + 2.0 * a)));
    let tail = match p.sector {
        Sector::I | Sector::II => Mat2::identity(),
        Sector::III | Sector::IV => Mat2::diag(e(a), e(-a)),
        Sector::V | Sector::VI => {
            let zz = Complex64::new(0.0, 0.0);
            Mat2([[zz, -e(b)], [e(-b), zz]]) * Mat2::diag(e(-a), e(a))
        }
        Sector::VII | Sector::VIII => jump_matrix(1, a, b).inverse(),
    };
    Ok(core * tail)
}
