//! Exact identities between Toeplitz, Hankel and Toeplitz+Hankel
//! determinants, evaluated as residual checks.

use crate::exactdet::{
    dense_logdet, hankel_logdet, szego_recursion, toeplitz_logdet, toeplitz_logdet_shifted, tph_logdet, OPData,
    TphVariant,
};
use crate::symbol::{circle_symbol_of_weight, hankel_moments, integrate_on_circle, Coeffs, FHSymbol, HankelWeight, SymbolQuad};
use crate::{Error, LogScaled, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Residual threshold for a passing report.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Largest n at which the Toeplitz route is anchored to direct LU.
pub const ANCHOR_MAX: usize = 6;
/// Evenness tolerance on the Fourier coefficients.
const EVEN_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub name: String,
    pub n: usize,
    pub lhs: LogScaled,
    pub rhs: LogScaled,
    pub relative_residual: f64,
    pub status: Status,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, n: usize, lhs: LogScaled, rhs: LogScaled) -> Self {
        Self::with_residual(name, n, lhs, rhs, lhs.relative_residual(&rhs))
    }

    fn with_residual(name: impl Into<String>, n: usize, lhs: LogScaled, rhs: LogScaled, res: f64) -> Self {
        IdentityReport {
            name: name.into(),
            n,
            lhs,
            rhs,
            relative_residual: res,
            status: if res < DEFAULT_TOL { Status::Pass } else { Status::Fail },
        }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.relative_residual < tol
    }
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn ln_factorial(k: usize) -> f64 {
    (1..=k).map(|j| (j as f64).ln()).sum()
}

/// `F_n` (or its hat version for negative ℓ): the determinant of the
/// derivatives at 0 of the monic polynomials of degrees n..n+|ℓ|−1.
pub fn f_determinant(op: &OPData, ell: i64, n: usize) -> LogScaled {
    let l = ell.unsigned_abs() as usize;
    let polys = if ell > 0 { &op.monic } else { &op.hat_monic };
    let mut a = Vec::with_capacity(l * l);
    for i in 0..l {
        for j in 0..l {
            a.push(polys[n + j].derivative_at_zero(i));
        }
    }
    dense_logdet(a, l)
}

/// `D_n(z^ℓ f)` against `(−1)^{ℓn} F_n / Π_{j<ℓ} j! · D_n(f)`.
pub fn check_shift_identity(f: &FHSymbol, ell: i64, n: usize) -> Result<IdentityReport> {
    if ell == 0 || ell.abs() > 3 {
        return Err(Error::Invalid(format!("shift {ell} outside 1 <= |l| <= 3")));
    }
    let l = ell.unsigned_abs() as usize;
    check_shift_identity_coeffs(&Coeffs::of(f, n + l + 1)?, ell, n)
}

/// As [`check_shift_identity`] on given coefficients, `|j| ≤ n + |ℓ| + 1`.
pub fn check_shift_identity_coeffs(coeffs: &Coeffs, ell: i64, n: usize) -> Result<IdentityReport> {
    if ell == 0 || ell.abs() > 3 {
        return Err(Error::Invalid(format!("shift {ell} outside 1 <= |l| <= 3")));
    }
    let l = ell.unsigned_abs() as usize;
    let lhs = toeplitz_logdet_shifted(coeffs, n, ell);
    let op = szego_recursion(coeffs, n + l - 1)?;
    for k in 0..n {
        if f_determinant(&op, ell, k).is_zero() {
            return Err(Error::Hypothesis(format!("F_{k} vanishes for shift {ell}")));
        }
    }
    let fd = f_determinant(&op, ell, n);
    let sign = if (ell * n as i64) % 2 == 0 { LogScaled::ONE } else { LogScaled::ONE.neg() };
    let fact: f64 = (1..l).map(ln_factorial).sum();
    let rhs = sign * fd * LogScaled::new(-fact, 0.0) * op.det(n);
    Ok(IdentityReport::new(format!("shift(l={ell})"), n, lhs, rhs))
}

/// `π^{2n} 4^{−(n−1)²} (1+Φ_{2n}(0))² D_{2n}(f) / (Φ_{2n}(1) Φ_{2n}(−1))`
/// from recursion data up to degree `2n`.
fn ht_rhs(op: &OPData, n: usize) -> LogScaled {
    let nf = n as f64;
    let p = &op.monic[2 * n];
    let one_plus = LogScaled::from_complex(c(1.0) + p.coeff(0));
    LogScaled::new(2.0 * nf * PI.ln() - (nf - 1.0).powi(2) * 4f64.ln(), 0.0) * one_plus.powi(2) * op.det(2 * n)
        / (LogScaled::from_complex(p.eval(c(1.0))) * LogScaled::from_complex(p.eval(c(-1.0))))
}

fn circle_data(w: &HankelWeight, deg: usize) -> Result<OPData> {
    let f = circle_symbol_of_weight(w).full();
    szego_recursion(&Coeffs::of(&f, deg + 1)?, deg)
}

/// `D_n(w)²` by direct LU on the moments against the Toeplitz side.
pub fn check_hankel_toeplitz(w: &HankelWeight, n: usize) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let m = hankel_moments(w, 2 * n - 2)?;
    let lhs = hankel_logdet(&m, n).value.powi(2);
    let op = circle_data(w, 2 * n)?;
    Ok(IdentityReport::new("hankel-toeplitz", n, lhs, ht_rhs(&op, n)))
}

/// `D_n(w)` through the Toeplitz side. The square root is fixed by direct
/// LU for n ≤ 6 and continued by linear extrapolation of the phase beyond.
pub fn route_hankel_via_toeplitz(w: &HankelWeight, n: usize) -> Result<LogScaled> {
    if n == 0 {
        return Ok(LogScaled::ONE);
    }
    let op = circle_data(w, 2 * n)?;
    let anchor = n.min(ANCHOR_MAX);
    let moments = hankel_moments(w, 2 * anchor - 2)?;
    let mut phases: Vec<f64> = Vec::with_capacity(n);
    let mut last = LogScaled::ONE;
    for k in 1..=n {
        let sq = ht_rhs(&op, k);
        if sq.is_zero() {
            return Err(Error::Hypothesis(format!("Toeplitz side vanishes at n = {k}")));
        }
        let half = 0.5 * sq.phase();
        let target = if k <= anchor {
            let lu = hankel_logdet(&moments, k).value;
            if lu.is_zero() {
                return Err(Error::Invalid(format!("sign anchor failed: direct Hankel determinant is zero at n = {k}")));
            }
            lu.phase()
        } else if k == 1 {
            half
        } else if k == 2 {
            phases[0]
        } else {
            2.0 * phases[k - 2] - phases[k - 3]
        };
        let turns = ((target - half) / PI).round();
        let phase = half + turns * PI;
        if k <= anchor {
            let miss = (phase - target).abs();
            if miss > 0.5 {
                return Err(Error::Invalid(format!("sign anchor failed at n = {k}: phase mismatch {miss:.3}")));
            }
        }
        phases.push(phase);
        last = LogScaled::new(0.5 * sq.log_modulus(), phase);
    }
    Ok(last)
}

/// Moments `∫_0^π cos^k θ f(e^{iθ}) g(θ) dθ` of the Hankel weight paired
/// with a Toeplitz+Hankel variant.
pub fn tph_moments(f: &FHSymbol, variant: TphVariant, kmax: usize) -> Result<Vec<Complex64>> {
    let g = move |t: f64| match variant {
        TphVariant::Plus => 1.0,
        TphVariant::Minus2 => t.sin().powi(2),
        TphVariant::Plus1 => 1.0 + t.cos(),
        TphVariant::Minus1 => 1.0 - t.cos(),
    };
    integrate_on_circle(
        f,
        0.0,
        PI,
        |t| {
            let x = t.cos();
            let mut p = g(t);
            (0..=kmax)
                .map(|_| {
                    let v = c(p);
                    p *= x;
                    v
                })
                .collect()
        },
        &SymbolQuad::default(),
    )
}

/// `ln` of the prefactor `2^{e(n)}/π^n` in front of the Hankel determinant.
fn tph_prefactor(variant: TphVariant, n: usize) -> f64 {
    let nf = n as f64;
    let e = match variant {
        TphVariant::Plus => nf * nf - 2.0 * nf + 2.0,
        TphVariant::Minus2 => nf * nf,
        TphVariant::Plus1 | TphVariant::Minus1 => nf * nf - nf,
    };
    e * 2f64.ln() - nf * PI.ln()
}

fn require_even(f: &FHSymbol) -> Result<()> {
    if f.is_even(EVEN_TOL) {
        Ok(())
    } else {
        Err(Error::Hypothesis("symbol is not even in theta".into()))
    }
}

/// Toeplitz+Hankel determinant against the prefactor times the matching
/// Hankel determinant.
pub fn check_tph_reduction(f: &FHSymbol, n: usize, variant: TphVariant) -> Result<IdentityReport> {
    require_even(f)?;
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let lhs = tph_logdet(&Coeffs::of(f, 2 * n + 2)?, n, variant);
    let m = tph_moments(f, variant, 2 * n - 2)?;
    let rhs = LogScaled::new(tph_prefactor(variant, n), 0.0) * hankel_logdet(&m, n).value;
    Ok(IdentityReport::new(format!("tph-reduction({})", variant.name()), n, lhs, rhs))
}

/// Monomial coefficients of `T_k`, lowest first.
fn chebyshev_t(k: usize) -> Vec<f64> {
    let mut prev = vec![1.0];
    if k == 0 {
        return prev;
    }
    let mut cur = vec![0.0, 1.0];
    for _ in 1..k {
        let mut next = vec![0.0; cur.len() + 1];
        for (i, &a) in cur.iter().enumerate() {
            next[i + 1] += 2.0 * a;
        }
        for (i, &a) in prev.iter().enumerate() {
            next[i] -= a;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Monic `P_k(x) = (Φ_{2k}(z) + Φ*_{2k}(z)) / ((2z)^k (1 − a_{2k−1}))` in
/// powers of x, using `z^{j−k} + z^{k−j} = 2 T_{|k−j|}(x)`.
pub fn szego_map_poly(op: &OPData, k: usize) -> Vec<Complex64> {
    let p = &op.monic[2 * k];
    let mut out = vec![c(0.0); k + 1];
    for j in 0..=2 * k {
        let t = chebyshev_t(j.abs_diff(k));
        for (i, &a) in t.iter().enumerate() {
            out[i] += 2.0 * p.coeff(j) * a;
        }
    }
    let den = 2f64.powi(k as i32) * (c(1.0) + p.coeff(0));
    out.iter().map(|&v| v / den).collect()
}

fn eval_real_poly(p: &[Complex64], x: f64) -> Complex64 {
    p.iter().rev().fold(c(0.0), |acc, &a| acc * x + a)
}

/// Orthogonality of the mapped polynomials, their normalisation, the
/// relation between consecutive `a`-coefficients and `P_k(±1)`, and
/// `hatΦ_k = Φ_k` for the even symbol. The residual is the worst of these.
pub fn check_szego_map(f: &FHSymbol, n: usize) -> Result<IdentityReport> {
    require_even(f)?;
    let op = szego_recursion(&Coeffs::of(f, 2 * n + 2)?, 2 * n + 1)?;
    let m = tph_moments(f, TphVariant::Plus, 2 * n)?;
    let mut worst: f64 = 0.0;
    let mut lhs = LogScaled::ONE;
    let mut rhs = LogScaled::ONE;
    for k in 0..=n {
        let p = szego_map_poly(&op, k);
        let a = -op.monic[2 * k].coeff(0);
        // κ_k^{-2} = 2π / (4^k χ_{2k}² (1 − a_{2k−1})).
        let norm = 2.0 * PI / (4f64.powi(k as i32) * op.chi_sq[2 * k] * (1.0 - a));
        let scale = norm.norm();
        for mm in 0..=k {
            let v: Complex64 = p.iter().enumerate().map(|(i, &pi)| pi * m[mm + i]).sum();
            let res = if mm == k { (v / norm - 1.0).norm() } else { v.norm() / scale };
            worst = worst.max(res);
            if k == n && mm == n {
                lhs = LogScaled::from_complex(v);
                rhs = LogScaled::from_complex(norm);
            }
        }
        for i in 0..=2 * k {
            let (x, y) = (op.monic[2 * k].coeff(i), op.hat_monic[2 * k].coeff(i));
            worst = worst.max((x - y).norm() / x.norm().max(y.norm()).max(1.0));
        }
        if k >= 1 && k < n {
            let pk = szego_map_poly(&op, k);
            let pk1 = szego_map_poly(&op, k + 1);
            let ap = 1.0 + op.monic[2 * k].coeff(0);
            let left = ap * ap;
            let right = -4.0 * op.chi_sq[2 * k + 1] / op.chi_sq[2 * k]
                * eval_real_poly(&pk1, 1.0)
                * eval_real_poly(&pk1, -1.0)
                / (eval_real_poly(&pk, 1.0) * eval_real_poly(&pk, -1.0));
            worst = worst.max((left - right).norm() / left.norm().max(right.norm()));
        }
    }
    Ok(IdentityReport::with_residual("szego-map", n, lhs, rhs, worst))
}

/// Christoffel–Darboux residual at degree n, reported against zero.
pub fn check_christoffel_darboux(f: &FHSymbol, n: usize, z: Complex64, a: Complex64) -> Result<IdentityReport> {
    let op = szego_recursion(&Coeffs::of(f, n + 1)?, n)?;
    let res = crate::exactdet::cd_residual(&op, n, z, a);
    Ok(IdentityReport::with_residual("christoffel-darboux", n, LogScaled::ONE, LogScaled::ONE, res))
}

/// `D_n(f)` by LU against the product of the recursion's `h_k`.
pub fn check_recursion_det(f: &FHSymbol, n: usize) -> Result<IdentityReport> {
    let coeffs = Coeffs::of(f, n)?;
    let op = szego_recursion(&coeffs, n.saturating_sub(1))?;
    Ok(IdentityReport::new("recursion-det", n, toeplitz_logdet(&coeffs, n), op.det(n)))
}
