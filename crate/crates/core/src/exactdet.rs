//! Exact finite-n determinants and orthogonal polynomial data.
//!
//! `D_n(f) = det(f_{j−k})`, Hankel determinants `det(m_{j+k})` and the four
//! Toeplitz+Hankel combinations are evaluated by dense LU with partial
//! pivoting. The Szegő recursion produces the monic polynomials `Φ_k`,
//! `hatΦ_k` orthogonal with respect to f, together with `χ_k² = D_k/D_{k+1}`.

use crate::poly::Poly;
use crate::symbol::Coeffs;
use crate::{Error, LogScaled, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

pub const PIVOT_FLOOR: f64 = 1e-280;
pub const BREAKDOWN_FLOOR: f64 = 1e-10;

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// LU factors of a square matrix stored row-major, `P A = L U`.
#[derive(Debug, Clone)]
pub struct Lu {
    n: usize,
    lu: Vec<Complex64>,
    perm: Vec<usize>,
    swaps: usize,
    singular: bool,
}

impl Lu {
    pub fn factor(mut a: Vec<Complex64>, n: usize, pivot_floor: f64) -> Lu {
        assert_eq!(a.len(), n * n, "matrix is not {n} x {n}");
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;
        let mut singular = false;
        for k in 0..n {
            let (p, best) = (k..n)
                .map(|r| (r, a[r * n + k].norm()))
                .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if !best.is_finite() || best <= pivot_floor {
                singular = true;
                break;
            }
            if p != k {
                for c in 0..n {
                    a.swap(k * n + c, p * n + c);
                }
                perm.swap(k, p);
                swaps += 1;
            }
            let piv = a[k * n + k];
            for r in k + 1..n {
                let l = a[r * n + k] / piv;
                a[r * n + k] = l;
                if l != zero() {
                    for c in k + 1..n {
                        let u = a[k * n + c];
                        a[r * n + c] -= l * u;
                    }
                }
            }
        }
        Lu { n, lu: a, perm, swaps, singular }
    }

    pub fn is_singular(&self) -> bool {
        self.singular
    }

    /// Determinant with phase accumulated pivot by pivot.
    pub fn logdet(&self) -> LogScaled {
        if self.singular {
            return LogScaled::Zero;
        }
        let mut lm = 0.0;
        let mut ph = PI * self.swaps as f64;
        for k in 0..self.n {
            let p = self.lu[k * self.n + k];
            lm += p.norm().ln();
            ph += p.arg();
        }
        LogScaled::new(lm, ph)
    }

    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let mut x: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        for r in 0..n {
            for c in 0..r {
                let l = self.lu[r * n + c];
                x[r] = x[r] - l * x[c];
            }
        }
        for r in (0..n).rev() {
            for c in r + 1..n {
                let u = self.lu[r * n + c];
                x[r] = x[r] - u * x[c];
            }
            x[r] /= self.lu[r * n + r];
        }
        x
    }

    /// ‖A^{-1}‖_1 from explicit column solves.
    pub fn inverse_norm1(&self) -> f64 {
        if self.singular {
            return f64::INFINITY;
        }
        let mut best: f64 = 0.0;
        for j in 0..self.n {
            let mut e = vec![zero(); self.n];
            e[j] = Complex64::new(1.0, 0.0);
            let col = self.solve(&e);
            best = best.max(col.iter().map(|v| v.norm()).sum());
        }
        best
    }
}

fn norm1(a: &[Complex64], n: usize) -> f64 {
    (0..n).map(|c| (0..n).map(|r| a[r * n + c].norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// Determinant of a dense row-major matrix.
pub fn dense_logdet(a: Vec<Complex64>, n: usize) -> LogScaled {
    if n == 0 {
        return LogScaled::ONE;
    }
    Lu::factor(a, n, PIVOT_FLOOR).logdet()
}

/// The matrix `(f_{j−k−ℓ})_{j,k<n}`.
pub fn toeplitz_matrix(c: &Coeffs, n: usize, ell: i64) -> Vec<Complex64> {
    let mut a = Vec::with_capacity(n * n);
    for j in 0..n as i64 {
        for k in 0..n as i64 {
            a.push(c.get(j - k - ell));
        }
    }
    a
}

/// `D_n(f) = det(f_{j−k})`, with `D_0 = 1`.
pub fn toeplitz_logdet(c: &Coeffs, n: usize) -> LogScaled {
    toeplitz_logdet_shifted(c, n, 0)
}

/// `D_n(z^ℓ f) = det(f_{j−k−ℓ})`.
pub fn toeplitz_logdet_shifted(c: &Coeffs, n: usize, ell: i64) -> LogScaled {
    dense_logdet(toeplitz_matrix(c, n, ell), n)
}

#[derive(Debug, Clone, PartialEq)]
pub struct HankelDet {
    pub value: LogScaled,
    /// Estimate of ‖H‖₁‖H⁻¹‖₁.
    pub condition: f64,
    /// Set when `condition · n · ε` exceeds 1e-6.
    pub warning: Option<String>,
}

/// `det(m_{j+k})_{j,k<n}` from moments `m_0..m_{2n−2}`.
pub fn hankel_logdet(moments: &[Complex64], n: usize) -> HankelDet {
    if n == 0 {
        return HankelDet { value: LogScaled::ONE, condition: 1.0, warning: None };
    }
    assert!(moments.len() + 1 >= 2 * n, "need moments up to m_{}", 2 * n - 2);
    let mut a = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            a.push(moments[j + k]);
        }
    }
    let norm = norm1(&a, n);
    let lu = Lu::factor(a, n, PIVOT_FLOOR);
    let condition = norm * lu.inverse_norm1();
    let err = condition * n as f64 * f64::EPSILON;
    let warning = (err > 1e-6).then(|| format!("Hankel matrix of order {n} is ill-conditioned: estimated relative error {err:.1e}"));
    HankelDet { value: lu.logdet(), condition, warning }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TphVariant {
    /// `det(f_{j−k} + f_{j+k})`
    Plus,
    /// `det(f_{j−k} − f_{j+k+2})`
    Minus2,
    /// `det(f_{j−k} + f_{j+k+1})`
    Plus1,
    /// `det(f_{j−k} − f_{j+k+1})`
    Minus1,
}

impl TphVariant {
    pub const ALL: [TphVariant; 4] = [TphVariant::Plus, TphVariant::Minus2, TphVariant::Plus1, TphVariant::Minus1];

    /// Sign and index offset of the Hankel part.
    pub fn hankel_part(self) -> (f64, i64) {
        match self {
            TphVariant::Plus => (1.0, 0),
            TphVariant::Minus2 => (-1.0, 2),
            TphVariant::Plus1 => (1.0, 1),
            TphVariant::Minus1 => (-1.0, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TphVariant::Plus => "plus",
            TphVariant::Minus2 => "minus2",
            TphVariant::Plus1 => "plus1",
            TphVariant::Minus1 => "minus1",
        }
    }
}

impl std::str::FromStr for TphVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TphVariant::ALL
            .into_iter()
            .find(|v| v.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Invalid(format!("unknown variant '{s}' (plus, minus2, plus1, minus1)")))
    }
}

/// Toeplitz+Hankel determinant; needs coefficients up to |j| ≤ 2n.
pub fn tph_logdet(c: &Coeffs, n: usize, variant: TphVariant) -> LogScaled {
    let (sign, q) = variant.hankel_part();
    let mut a = Vec::with_capacity(n * n);
    for j in 0..n as i64 {
        for k in 0..n as i64 {
            a.push(c.get(j - k) + sign * c.get(j + k + q));
        }
    }
    dense_logdet(a, n)
}

/// Orthogonal polynomial data for degrees `0..=nmax`.
#[derive(Debug, Clone)]
pub struct OPData {
    pub nmax: usize,
    /// `h_k = D_{k+1}/D_k = χ_k^{−2}`.
    pub h: Vec<Complex64>,
    pub chi_sq: Vec<Complex64>,
    /// `φ_k(0) = χ_k Φ_k(0)` with the principal `χ_k`.
    pub phi0: Vec<Complex64>,
    pub hatphi0: Vec<Complex64>,
    /// Monic `Φ_k`, coefficients lowest first.
    pub monic: Vec<Poly>,
    /// Monic `hatΦ_k`.
    pub hat_monic: Vec<Poly>,
    /// Largest relative residual of `χ_{k+1}² − χ_k² = φ_{k+1}(0) hatφ_{k+1}(0)`.
    pub chi_residual: f64,
}

impl OPData {
    pub fn chi(&self, k: usize) -> Complex64 {
        self.chi_sq[k].sqrt()
    }

    /// `Φ_k(0)`, free of the sign of χ_k.
    pub fn reflection(&self, k: usize) -> Complex64 {
        self.monic[k].coeff(0)
    }

    pub fn hat_reflection(&self, k: usize) -> Complex64 {
        self.hat_monic[k].coeff(0)
    }

    /// `D_k = Π_{i<k} h_i` for `k ≤ nmax + 1`.
    pub fn det(&self, k: usize) -> LogScaled {
        self.h[..k].iter().map(|&h| LogScaled::from_complex(h)).product()
    }

    /// `hatφ_k(x) φ_k(y) = χ_k² hatΦ_k(x) Φ_k(y)`.
    pub fn kernel_term(&self, k: usize, x: Complex64, y: Complex64) -> Complex64 {
        self.chi_sq[k] * self.hat_monic[k].eval(x) * self.monic[k].eval(y)
    }
}

/// Szegő–Levinson recursion on the coefficients `f_j`, `|j| ≤ nmax`.
pub fn szego_recursion(c: &Coeffs, nmax: usize) -> Result<OPData> {
    szego_recursion_with(c, nmax, BREAKDOWN_FLOOR)
}

pub fn szego_recursion_with(c: &Coeffs, nmax: usize, breakdown_floor: f64) -> Result<OPData> {
    let f0 = c.get(0);
    if f0.norm() < breakdown_floor {
        return Err(Error::Breakdown { degree: 0, value: f0.norm() });
    }
    let mut h = vec![f0];
    let mut monic = vec![Poly::one()];
    let mut hat_monic = vec![Poly::one()];
    let mut chi_res: f64 = 0.0;
    for n in 0..nmax {
        let p = &monic[n];
        let q = &hat_monic[n];
        let eps: Complex64 = (0..=n).map(|i| p.coeff(i) * c.get(-1 - i as i64)).sum();
        let heps: Complex64 = (0..=n).map(|i| q.coeff(i) * c.get(i as i64 + 1)).sum();
        let r = -eps / h[n];
        let rh = -heps / h[n];
        let mut next = vec![zero(); n + 2];
        let mut hnext = vec![zero(); n + 2];
        for i in 0..=n {
            next[i + 1] += p.coeff(i);
            hnext[i + 1] += q.coeff(i);
            // z^n hatΦ_n(1/z) and w^n Φ_n(1/w) reverse the coefficients.
            next[n - i] += r * q.coeff(i);
            hnext[n - i] += rh * p.coeff(i);
        }
        let one_minus = Complex64::new(1.0, 0.0) - r * rh;
        if one_minus.norm() < breakdown_floor {
            return Err(Error::Breakdown { degree: n + 1, value: one_minus.norm() });
        }
        let hn = h[n] * one_minus;
        // χ normalization in the form χ_{n+1}² − χ_n² − χ_{n+1}² Φ(0) hatΦ(0).
        let (cs1, cs0) = (hn.inv(), h[n].inv());
        let res = (cs1 - cs0 - cs1 * r * rh).norm() / cs1.norm().max(cs0.norm());
        chi_res = chi_res.max(res);
        h.push(hn);
        monic.push(Poly(next));
        hat_monic.push(Poly(hnext));
    }
    let chi_sq: Vec<Complex64> = h.iter().map(|x| x.inv()).collect();
    let phi0 = (0..=nmax).map(|k| chi_sq[k].sqrt() * monic[k].coeff(0)).collect();
    let hatphi0 = (0..=nmax).map(|k| chi_sq[k].sqrt() * hat_monic[k].coeff(0)).collect();
    Ok(OPData { nmax, h, chi_sq, phi0, hatphi0, monic, hat_monic, chi_residual: chi_res })
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

/// Relative residuals of the two Christoffel–Darboux identities at degree n:
/// the one at `(z, a)` and its confluent form at `z`. Returns the larger.
pub fn cd_residual(op: &OPData, n: usize, z: Complex64, a: Complex64) -> f64 {
    assert!(n >= 1 && n <= op.nmax, "degree {n} outside 1..={}", op.nmax);
    let one = Complex64::new(1.0, 0.0);
    let (ai, zi) = (a.inv(), z.inv());
    let sum: Complex64 = (0..n).map(|k| op.kernel_term(k, ai, z)).sum();
    let lhs1 = (one - ai * z) * sum;
    let cs = op.chi_sq[n];
    let rhs1 = cs * a.powi(-(n as i32)) * op.monic[n].eval(a) * z.powi(n as i32) * op.hat_monic[n].eval(zi)
        - op.kernel_term(n, ai, z);
    let lhs2: Complex64 = (0..n).map(|k| op.kernel_term(k, zi, z)).sum();
    let (p, dp) = (op.monic[n].eval(z), op.monic[n].derivative().eval(z));
    let (q, dq_at) = (op.hat_monic[n].eval(zi), op.hat_monic[n].derivative().eval(zi));
    // d/dz hatΦ(1/z) = −z^{−2} hatΦ'(1/z)
    let dq = -zi * zi * dq_at;
    let rhs2 = cs * (-(n as f64) * p * q + z * (q * dp - p * dq));
    rel(lhs1, rhs1).max(rel(lhs2, rhs2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn small_determinants() {
        let one = Coeffs::from_fn(4, |j| if j == 0 { c(1.0, 0.0) } else { zero() });
        for n in 0..5 {
            assert_eq!(toeplitz_logdet(&one, n).to_complex(), c(1.0, 0.0));
        }
        let bt = Coeffs::from_fn(3, |j| if j % 2 != 0 { c(-2.0 / (PI * j as f64), 0.0) } else { zero() });
        assert!((toeplitz_logdet(&bt, 1).is_zero()));
        let d2 = toeplitz_logdet(&bt, 2).to_complex();
        assert!((d2 - 4.0 / (PI * PI)).norm() < 1e-15);
        assert_eq!(tph_logdet(&one, 1, TphVariant::Plus).to_complex(), c(2.0, 0.0));
        assert_eq!(tph_logdet(&one, 1, TphVariant::Minus2).to_complex(), c(1.0, 0.0));
    }

    #[test]
    fn hankel_of_constant_weight() {
        let m: Vec<Complex64> = (0..3).map(|k| c(if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 }, 0.0)).collect();
        let d = hankel_logdet(&m, 2);
        assert!((d.value.to_complex() - 4.0 / 3.0).norm() < 1e-15);
        assert!(d.warning.is_none());
        assert_eq!(hankel_logdet(&m, 1).value.to_complex(), c(2.0, 0.0));
    }

    #[test]
    fn recursion_of_constant_symbol() {
        let one = Coeffs::from_fn(6, |j| if j == 0 { c(1.0, 0.0) } else { zero() });
        let op = szego_recursion(&one, 6).unwrap();
        for k in 0..=6 {
            assert_eq!(op.chi_sq[k], c(1.0, 0.0));
            if k > 0 {
                assert_eq!(op.phi0[k], zero());
                assert!(cd_residual(&op, k, c(0.3, 0.4), c(-1.1, 0.2)) < 1e-12);
            }
        }
    }

    #[test]
    fn variant_names_parse() {
        for v in TphVariant::ALL {
            assert_eq!(v.name().parse::<TphVariant>().unwrap(), v);
        }
        assert!("bogus".parse::<TphVariant>().is_err());
    }
}
