//! Tanh–sinh (double exponential) quadrature on a finite interval.
//!
//! The integrand receives the abscissa together with its distances to both
//! endpoints, computed without cancellation. Integrands with algebraic
//! endpoint singularities should use those distances rather than `x − a`.

use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// First level at which convergence may be declared (step 2^{-level}).
    pub min_level: usize,
    pub max_level: usize,
    /// Truncation of the t-axis.
    pub t_max: f64,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            abs_tol: 1e-14,
            rel_tol: 1e-13,
            min_level: 4,
            max_level: 14,
            t_max: 6.5,
        }
    }
}

struct Node {
    x: f64,
    dl: f64,
    dr: f64,
    w: f64,
}

fn node(a: f64, b: f64, t: f64) -> Option<Node> {
    let half = 0.5 * (b - a);
    let u = FRAC_PI_2 * t.sinh();
    let e = (-2.0 * u.abs()).exp();
    let small = half * 2.0 * e / (1.0 + e);
    let big = half * 2.0 / (1.0 + e);
    let w = half * FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
    if small == 0.0 || w == 0.0 || !w.is_finite() {
        return None;
    }
    let (dl, dr, x) = if u >= 0.0 {
        (big, small, b - small)
    } else {
        (small, big, a + small)
    };
    Some(Node { x, dl, dr, w })
}

/// ∫_a^b f for a vector-valued integrand `f(x, x − a, b − x)`.
pub fn integrate<F>(f: F, a: f64, b: f64, opts: &QuadOptions) -> Result<Vec<Complex64>>
where
    F: Fn(f64, f64, f64) -> Vec<Complex64>,
{
    let mut sum: Vec<Complex64> = Vec::new();
    let add = |sum: &mut Vec<Complex64>, t: f64| {
        if let Some(nd) = node(a, b, t) {
            let v = f(nd.x, nd.dl, nd.dr);
            if sum.is_empty() {
                sum.resize(v.len(), Complex64::new(0.0, 0.0));
            }
            for (s, x) in sum.iter_mut().zip(v) {
                *s += x * nd.w;
            }
        }
    };
    let mut h = 1.0;
    let kmax = opts.t_max.floor() as i64;
    for k in -kmax..=kmax {
        add(&mut sum, k as f64);
    }
    let mut prev: Vec<Complex64> = sum.iter().map(|s| s * h).collect();
    let mut last_err = f64::INFINITY;
    for level in 1..=opts.max_level {
        h *= 0.5;
        let n = (opts.t_max / h).floor() as i64;
        let mut k = -n + if n % 2 == 0 { 1 } else { 0 };
        while k <= n {
            add(&mut sum, k as f64 * h);
            k += 2;
        }
        let cur: Vec<Complex64> = sum.iter().map(|s| s * h).collect();
        let mut ok = true;
        let mut err: f64 = 0.0;
        for (c, p) in cur.iter().zip(&prev) {
            let d = (c - p).norm();
            err = err.max(d);
            if d > opts.abs_tol + opts.rel_tol * c.norm() {
                ok = false;
            }
        }
        last_err = err;
        prev = cur;
        if ok && level >= opts.min_level {
            if prev.iter().all(|v| v.is_finite()) {
                return Ok(prev);
            }
            break;
        }
    }
    Err(Error::Quadrature {
        estimate: last_err,
        levels: opts.max_level,
    })
}
