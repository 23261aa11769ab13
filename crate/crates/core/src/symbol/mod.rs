//! Fisher–Hartwig symbols on the unit circle and Hankel weights on [−1, 1].
//!
//! A circle symbol is
//!
//! ```text
//! f(z) = e^{V(z)} z^{Σβ_j} Π_j |z − z_j|^{2α_j} g_{β_j}(z) z_j^{−β_j},   z_j = e^{iθ_j},
//! ```
//!
//! with `g_β(e^{iθ}) = e^{iπβ}` for `0 ≤ θ < θ_j` and `e^{−iπβ}` for
//! `θ_j ≤ θ < 2π`. A Hankel weight is
//!
//! ```text
//! w(x) = e^{U(x)} Π_{j=0}^{r+1} |x − λ_j|^{2α_j} ω_j(x),   λ_0 = 1, λ_{r+1} = −1,
//! ```
//!
//! with `ω_j = e^{iπβ_j}` for `x ≤ λ_j`, `e^{−iπβ_j}` for `x > λ_j`.

mod io;

pub use io::{format_symbol, format_weight, parse_symbol, parse_weight, parse_symbol_or_weight, Described};

use crate::quad::{integrate, QuadOptions};
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const TWO_PI: f64 = 2.0 * PI;

fn i() -> Complex64 {
    Complex64::new(0.0, 1.0)
}

/// A trigonometric polynomial `V(z) = Σ_{|k| ≤ K} V_k z^k`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SmoothPart {
    coeffs: Vec<Complex64>,
}

impl SmoothPart {
    pub fn zero() -> Self {
        SmoothPart { coeffs: vec![Complex64::new(0.0, 0.0)] }
    }

    /// From pairs `(k, V_k)`; repeated `k` accumulate.
    pub fn from_pairs(pairs: &[(i64, Complex64)]) -> Self {
        let mut s = SmoothPart::zero();
        for &(k, v) in pairs {
            let cur = s.get(k);
            s.set(k, cur + v);
        }
        s
    }

    /// `V(z) = t (z + 1/z)`.
    pub fn cosine(t: f64) -> Self {
        SmoothPart::from_pairs(&[(1, t.into()), (-1, t.into())])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() / 2
    }

    pub fn get(&self, k: i64) -> Complex64 {
        let kk = self.order() as i64;
        if k.abs() > kk {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(k + kk) as usize]
        }
    }

    pub fn set(&mut self, k: i64, v: Complex64) {
        let need = k.unsigned_abs() as usize;
        if need > self.order() {
            let old = std::mem::take(&mut self.coeffs);
            let oldk = old.len() / 2;
            self.coeffs = vec![Complex64::new(0.0, 0.0); 2 * need + 1];
            for (idx, c) in old.into_iter().enumerate() {
                self.coeffs[idx + need - oldk] = c;
            }
        }
        let kk = self.order() as i64;
        self.coeffs[(k + kk) as usize] = v;
    }

    /// Nonzero coefficients as `(k, V_k)`, ascending in k.
    pub fn pairs(&self) -> Vec<(i64, Complex64)> {
        let kk = self.order() as i64;
        (-kk..=kk)
            .map(|k| (k, self.get(k)))
            .filter(|(_, v)| *v != Complex64::new(0.0, 0.0))
            .collect()
    }

    pub fn is_even(&self, tol: f64) -> bool {
        (1..=self.order() as i64).all(|k| (self.get(k) - self.get(-k)).norm() <= tol)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == Complex64::new(0.0, 0.0))
    }

    /// V(e^{iθ}).
    pub fn eval_theta(&self, theta: f64) -> Complex64 {
        let mut s = self.get(0);
        for k in 1..=self.order() as i64 {
            let e = Complex64::from_polar(1.0, k as f64 * theta);
            s += self.get(k) * e + self.get(-k) * e.conj();
        }
        s
    }

    /// V(z) for any z ≠ 0.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut s = self.get(0);
        let (mut p, mut q) = (z, z.inv());
        for k in 1..=self.order() as i64 {
            s += self.get(k) * p + self.get(-k) * q;
            p *= z;
            q /= z;
        }
        s
    }

    /// `Σ_{k ≥ 1} k V_k V_{−k}`.
    pub fn szego_sum(&self) -> Complex64 {
        (1..=self.order() as i64)
            .map(|k| k as f64 * self.get(k) * self.get(-k))
            .sum()
    }
}

/// Wiener–Hopf split `e^{V} = b_+ e^{V_0} b_−`, kept in log form.
#[derive(Debug, Clone, PartialEq)]
pub struct WienerHopf {
    pub v0: Complex64,
    /// Coefficients `V_1, V_2, …` of `ln b_+`.
    pub plus: Vec<Complex64>,
    /// Coefficients `V_{−1}, V_{−2}, …` of `ln b_−`.
    pub minus: Vec<Complex64>,
}

impl WienerHopf {
    /// `ln b_+(z) = Σ_{k≥1} V_k z^k`.
    pub fn ln_b_plus(&self, z: Complex64) -> Complex64 {
        let mut p = z;
        let mut s = Complex64::new(0.0, 0.0);
        for c in &self.plus {
            s += c * p;
            p *= z;
        }
        s
    }

    /// `ln b_−(z) = Σ_{k≥1} V_{−k} z^{−k}`.
    pub fn ln_b_minus(&self, z: Complex64) -> Complex64 {
        self.minus.iter().enumerate().map(|(k, c)| c * z.powi(-(k as i32 + 1))).sum()
    }
}

pub fn wiener_hopf(v: &SmoothPart) -> WienerHopf {
    let k = v.order() as i64;
    WienerHopf {
        v0: v.get(0),
        plus: (1..=k).map(|j| v.get(j)).collect(),
        minus: (1..=k).map(|j| v.get(-j)).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Singularity {
    pub theta: f64,
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl Singularity {
    pub fn new(theta: f64, alpha: Complex64, beta: Complex64) -> Self {
        Singularity { theta, alpha, beta }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FHSymbol {
    pub smooth: SmoothPart,
    singularities: Vec<Singularity>,
}

/// `|2 sin(d/2)|` for an angular offset `d`.
fn chord(d: f64) -> f64 {
    (2.0 * (0.5 * d).sin()).abs()
}

impl FHSymbol {
    /// Validates ordering and exponents; a `θ = 0` entry with `α = β = 0` is
    /// inserted when absent.
    pub fn new(smooth: SmoothPart, mut singularities: Vec<Singularity>) -> Result<Self> {
        for s in &singularities {
            if !(0.0..TWO_PI).contains(&s.theta) {
                return Err(Error::Invalid(format!("theta = {} outside [0, 2pi)", s.theta)));
            }
            if s.alpha.re <= -0.5 {
                return Err(Error::Invalid(format!("Re alpha = {} <= -1/2 is not integrable", s.alpha.re)));
            }
        }
        if singularities.first().is_none_or(|s| s.theta != 0.0) {
            singularities.insert(0, Singularity::new(0.0, 0.0.into(), 0.0.into()));
        }
        if singularities.windows(2).any(|w| w[1].theta <= w[0].theta) {
            return Err(Error::Invalid("singularity angles must be strictly increasing".into()));
        }
        Ok(FHSymbol { smooth, singularities })
    }

    pub fn smooth_only(v: SmoothPart) -> Self {
        FHSymbol::new(v, vec![]).expect("valid")
    }

    pub fn one() -> Self {
        Self::smooth_only(SmoothPart::zero())
    }

    /// `|z − 1|^{2α}` times the jump `g_β` at z = 1.
    pub fn pure(alpha: Complex64, beta: Complex64) -> Self {
        FHSymbol::new(SmoothPart::zero(), vec![Singularity::new(0.0, alpha, beta)]).expect("valid")
    }

    /// The symbol equal to −i on (0, π) and i on (π, 2π).
    pub fn basor_tracy() -> Self {
        FHSymbol::new(
            SmoothPart::zero(),
            vec![
                Singularity::new(0.0, 0.0.into(), 0.5.into()),
                Singularity::new(PI, 0.0.into(), (-0.5).into()),
            ],
        )
        .expect("valid")
    }

    pub fn singularities(&self) -> &[Singularity] {
        &self.singularities
    }

    pub fn alphas(&self) -> Vec<Complex64> {
        self.singularities.iter().map(|s| s.alpha).collect()
    }

    pub fn betas(&self) -> Vec<Complex64> {
        self.singularities.iter().map(|s| s.beta).collect()
    }

    /// The same symbol data with β replaced.
    pub fn with_betas(&self, betas: &[Complex64]) -> Self {
        let mut out = self.clone();
        for (s, b) in out.singularities.iter_mut().zip(betas) {
            s.beta = *b;
        }
        out
    }

    /// The same symbol with `V_0` shifted by `c`, i.e. multiplied by `e^{c}`.
    pub fn scaled_by_log(&self, c: Complex64) -> Self {
        let mut out = self.clone();
        let v0 = out.smooth.get(0);
        out.smooth.set(0, v0 + c);
        out
    }

    /// ln f on the open arc between singularities `p` and `p + 1`, with
    /// `dl = θ − θ_p` and `dr = θ_{p+1} − θ` supplied exactly.
    fn ln_on_panel(&self, p: usize, theta: f64, dl: f64, dr: f64) -> Complex64 {
        let m = self.singularities.len();
        let mut acc = self.smooth.eval_theta(theta);
        let mut sum_beta = Complex64::new(0.0, 0.0);
        for (j, s) in self.singularities.iter().enumerate() {
            sum_beta += s.beta;
            let d = if j == p {
                chord(dl)
            } else if j == (p + 1) % m {
                chord(dr)
            } else {
                chord(theta - s.theta)
            };
            if s.alpha != Complex64::new(0.0, 0.0) {
                acc += 2.0 * s.alpha * d.ln();
            }
            let sign = if j <= p { -1.0 } else { 1.0 };
            acc += i() * PI * sign * s.beta - i() * s.theta * s.beta;
        }
        acc + i() * theta * sum_beta
    }

    /// Index of the arc containing θ ∈ [0, 2π), and its endpoints.
    fn panel_of(&self, theta: f64) -> (usize, f64, f64) {
        let m = self.singularities.len();
        let p = self.singularities.iter().rposition(|s| s.theta <= theta).unwrap_or(0);
        let right = if p + 1 < m { self.singularities[p + 1].theta } else { TWO_PI };
        (p, self.singularities[p].theta, right)
    }

    /// Value of f at z = e^{iθ}.
    pub fn eval(&self, theta: f64) -> Result<Complex64> {
        let theta = theta.rem_euclid(TWO_PI);
        let (p, left, right) = self.panel_of(theta);
        let at = if theta == left {
            Some(p)
        } else {
            None
        };
        if let Some(j) = at {
            let a = self.singularities[j].alpha;
            if a != Complex64::new(0.0, 0.0) {
                if a.re > 0.0 {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                return Err(Error::AtSingularity(theta));
            }
        }
        Ok(self.ln_on_panel(p, theta, theta - left, right - theta).exp())
    }

    /// Arc endpoints `[θ_0, θ_1, …, θ_m, 2π]`.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut b: Vec<f64> = self.singularities.iter().map(|s| s.theta).collect();
        b.push(TWO_PI);
        b
    }

    /// f(e^{iθ}) = f(e^{−iθ}) structurally: even V, β = 0 at θ = 0 and π,
    /// interior points mirrored with equal α and opposite β.
    pub fn is_even(&self, tol: f64) -> bool {
        self.even_structure(tol).is_ok()
    }

    /// For an even symbol: `(α at 1, α at −1, interior singularities in (0, π))`.
    pub fn even_structure(&self, tol: f64) -> Result<(Complex64, Complex64, Vec<Singularity>)> {
        let bad = |m: &str| Err(Error::Hypothesis(format!("symbol is not even: {m}")));
        if !self.smooth.is_even(tol) {
            return bad("V_k != V_-k");
        }
        let s0 = self.singularities[0];
        if s0.beta.norm() > tol {
            return bad("beta at z = 1 must vanish");
        }
        let mut alpha_pi = Complex64::new(0.0, 0.0);
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for s in &self.singularities[1..] {
            if (s.theta - PI).abs() <= tol {
                if s.beta.norm() > tol {
                    return bad("beta at z = -1 must vanish");
                }
                alpha_pi = s.alpha;
            } else if s.theta < PI {
                lower.push(*s);
            } else {
                upper.push(*s);
            }
        }
        if lower.len() != upper.len() {
            return bad("unpaired singularity");
        }
        for (a, b) in lower.iter().zip(upper.iter().rev()) {
            if (a.theta + b.theta - TWO_PI).abs() > tol
                || (a.alpha - b.alpha).norm() > tol
                || (a.beta + b.beta).norm() > tol
            {
                return bad("singularities at theta and 2pi - theta do not match");
            }
        }
        Ok((s0.alpha, alpha_pi, lower))
    }
}

/// Settings for singularity-split quadrature.
#[derive(Debug, Clone, Copy)]
pub struct SymbolQuad {
    pub quad: QuadOptions,
    /// Each natural panel is cut into this many equal pieces.
    pub subdivide: usize,
}

impl Default for SymbolQuad {
    fn default() -> Self {
        SymbolQuad { quad: QuadOptions::default(), subdivide: 1 }
    }
}

/// ∫_0^{2π} f(e^{iθ}) h(θ) dθ over the singularity-split arcs for a vector of
/// test functions produced by `h`.
pub fn integrate_on_circle<H>(f: &FHSymbol, lo: f64, hi: f64, h: H, q: &SymbolQuad) -> Result<Vec<Complex64>>
where
    H: Fn(f64) -> Vec<Complex64> + Sync,
{
    let bp = f.breakpoints();
    let mut total: Vec<Complex64> = Vec::new();
    for p in 0..bp.len() - 1 {
        let (a, b) = (bp[p].max(lo), bp[p + 1].min(hi));
        if b <= a {
            continue;
        }
        let (pa, pb) = (bp[p], bp[p + 1]);
        let sub = q.subdivide.max(1);
        for s in 0..sub {
            let x0 = a + (b - a) * s as f64 / sub as f64;
            let x1 = if s + 1 == sub { b } else { a + (b - a) * (s + 1) as f64 / sub as f64 };
            let part = integrate(
                |theta, dl, dr| {
                    let dl_p = (theta - pa).max(0.0);
                    let dr_p = (pb - theta).max(0.0);
                    // Exact offsets only where the subpanel touches the arc ends.
                    let dl_p = if x0 == pa { dl } else { dl_p };
                    let dr_p = if x1 == pb { dr } else { dr_p };
                    let v = f.ln_on_panel(p, theta, dl_p, dr_p).exp();
                    let mut out = h(theta);
                    for o in out.iter_mut() {
                        *o *= v;
                    }
                    out
                },
                x0,
                x1,
                &q.quad,
            )?;
            if total.is_empty() {
                total = part;
            } else {
                for (t, v) in total.iter_mut().zip(part) {
                    *t += v;
                }
            }
        }
    }
    Ok(total)
}

/// Fourier coefficients `f_j`, `j = −jmax..=jmax`, at index `j + jmax`.
pub fn fourier_coeffs(f: &FHSymbol, jmax: usize) -> Result<Vec<Complex64>> {
    fourier_coeffs_with(f, jmax, &SymbolQuad::default())
}

pub fn fourier_coeffs_with(f: &FHSymbol, jmax: usize, q: &SymbolQuad) -> Result<Vec<Complex64>> {
    let n = 2 * jmax + 1;
    let trivial = f.singularities.iter().all(|s| s.alpha == Complex64::new(0.0, 0.0) && s.beta == Complex64::new(0.0, 0.0));
    if trivial && f.smooth.is_zero() {
        // f ≡ 1: the coefficients are exact.
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        out[jmax] = Complex64::new(1.0, 0.0);
        return Ok(out);
    }
    let v = integrate_on_circle(
        f,
        0.0,
        TWO_PI,
        |theta| {
            let mut out = vec![Complex64::new(0.0, 0.0); n];
            let w = Complex64::from_polar(1.0, -theta);
            out[jmax] = Complex64::new(1.0, 0.0);
            let mut p = Complex64::new(1.0, 0.0);
            for j in 1..=jmax {
                p *= w;
                out[jmax + j] = p;
                out[jmax - j] = p.conj();
            }
            out
        },
        q,
    )?;
    Ok(v.into_iter().map(|x| x / TWO_PI).collect())
}

/// Coefficient lookup for a vector returned by [`fourier_coeffs`].
#[derive(Debug, Clone, PartialEq)]
pub struct Coeffs {
    pub jmax: usize,
    pub values: Vec<Complex64>,
}

impl Coeffs {
    pub fn new(values: Vec<Complex64>) -> Self {
        let jmax = values.len() / 2;
        Coeffs { jmax, values }
    }

    pub fn of(f: &FHSymbol, jmax: usize) -> Result<Self> {
        Ok(Coeffs::new(fourier_coeffs(f, jmax)?))
    }

    /// From a closed-form coefficient map.
    pub fn from_fn(jmax: usize, g: impl Fn(i64) -> Complex64) -> Self {
        Coeffs::new((-(jmax as i64)..=jmax as i64).map(g).collect())
    }

    pub fn get(&self, j: i64) -> Complex64 {
        if j.unsigned_abs() as usize > self.jmax {
            panic!("Fourier coefficient {j} requested beyond jmax = {}", self.jmax);
        }
        self.values[(j + self.jmax as i64) as usize]
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Coeffs { jmax: self.jmax, values: self.values.iter().map(|v| v * c).collect() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub lambda: f64,
    pub alpha: Complex64,
    pub beta: Complex64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HankelWeight {
    /// Even V with V(e^{iθ}) = U(cos θ).
    pub smooth_u: SmoothPart,
    /// Interior nodes, λ strictly decreasing in (−1, 1).
    nodes: Vec<Node>,
    /// Exponent at x = 1.
    pub alpha_plus: Complex64,
    /// Exponent at x = −1.
    pub alpha_minus: Complex64,
}

impl HankelWeight {
    pub fn new(smooth_u: SmoothPart, nodes: Vec<Node>, alpha_plus: Complex64, alpha_minus: Complex64) -> Result<Self> {
        if !smooth_u.is_even(0.0) {
            return Err(Error::Invalid("U must come from an even V (V_k = V_-k)".into()));
        }
        for a in [alpha_plus, alpha_minus].iter().chain(nodes.iter().map(|n| &n.alpha)) {
            if a.re <= -0.5 {
                return Err(Error::Invalid(format!("Re alpha = {} <= -1/2", a.re)));
            }
        }
        for nd in &nodes {
            if !(nd.lambda > -1.0 && nd.lambda < 1.0) {
                return Err(Error::Invalid(format!("node lambda = {} outside (-1, 1)", nd.lambda)));
            }
            if !(nd.beta.re > -0.5 && nd.beta.re <= 0.5) {
                return Err(Error::Invalid(format!("Re beta = {} outside (-1/2, 1/2]", nd.beta.re)));
            }
        }
        if nodes.windows(2).any(|w| w[1].lambda >= w[0].lambda) {
            return Err(Error::Invalid("node lambdas must be strictly decreasing".into()));
        }
        Ok(HankelWeight { smooth_u, nodes, alpha_plus, alpha_minus })
    }

    pub fn one() -> Self {
        HankelWeight::new(SmoothPart::zero(), vec![], 0.0.into(), 0.0.into()).expect("valid")
    }

    /// 1/√(1 − x²).
    pub fn chebyshev() -> Self {
        HankelWeight::new(SmoothPart::zero(), vec![], (-0.25).into(), (-0.25).into()).expect("valid")
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// `A = Σ_{k=0}^{r+1} α_k`.
    pub fn alpha_sum(&self) -> Complex64 {
        self.alpha_plus + self.alpha_minus + self.nodes.iter().map(|n| n.alpha).sum::<Complex64>()
    }

    /// U(x) = V_0 + 2 Σ V_k T_k(x).
    pub fn u(&self, x: f64) -> Complex64 {
        let mut s = self.smooth_u.get(0);
        let (mut t0, mut t1) = (1.0, x);
        for k in 1..=self.smooth_u.order() as i64 {
            s += 2.0 * self.smooth_u.get(k) * t1;
            let t2 = 2.0 * x * t1 - t0;
            t0 = t1;
            t1 = t2;
        }
        s
    }

    /// All λ in decreasing order with their (α, β), endpoints included.
    pub fn points(&self) -> Vec<Node> {
        let mut v = vec![Node { lambda: 1.0, alpha: self.alpha_plus, beta: 0.0.into() }];
        v.extend(self.nodes.iter().copied());
        v.push(Node { lambda: -1.0, alpha: self.alpha_minus, beta: 0.0.into() });
        v
    }

    /// ln w on the open interval between points `p + 1` and `p` of
    /// [`Self::points`], with `dl = x − λ_{p+1}`, `dr = λ_p − x` exact.
    fn ln_on_panel(&self, pts: &[Node], p: usize, x: f64, dl: f64, dr: f64) -> Complex64 {
        let mut acc = self.u(x);
        for (j, nd) in pts.iter().enumerate() {
            let d = if j == p {
                dr
            } else if j == p + 1 {
                dl
            } else {
                (x - nd.lambda).abs()
            };
            if nd.alpha != Complex64::new(0.0, 0.0) {
                acc += 2.0 * nd.alpha * d.ln();
            }
            // x < λ_j exactly for the points above the panel.
            let sign = if j <= p { 1.0 } else { -1.0 };
            acc += i() * PI * sign * nd.beta;
        }
        acc
    }

    pub fn eval(&self, x: f64) -> Result<Complex64> {
        if !(-1.0..=1.0).contains(&x) {
            return Err(Error::Invalid(format!("x = {x} outside [-1, 1]")));
        }
        let pts = self.points();
        for nd in &pts {
            if x == nd.lambda && nd.alpha != Complex64::new(0.0, 0.0) {
                if nd.alpha.re > 0.0 {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                return Err(Error::AtSingularity(x));
            }
        }
        // Panel p spans (λ_{p+1}, λ_p]; ω_j switches at x > λ_j.
        let p = pts.iter().rposition(|nd| nd.lambda >= x).unwrap_or(0).min(pts.len() - 2);
        Ok(self.ln_on_panel(&pts, p, x, x - pts[p + 1].lambda, pts[p].lambda - x).exp())
    }

    /// ∫_{−1}^{1} w(x) h(x) dx for a vector of test functions.
    pub fn integrate<H>(&self, h: H, q: &SymbolQuad) -> Result<Vec<Complex64>>
    where
        H: Fn(f64) -> Vec<Complex64>,
    {
        let pts = self.points();
        let mut total: Vec<Complex64> = Vec::new();
        for p in 0..pts.len() - 1 {
            let (a, b) = (pts[p + 1].lambda, pts[p].lambda);
            let sub = q.subdivide.max(1);
            for s in 0..sub {
                let x0 = a + (b - a) * s as f64 / sub as f64;
                let x1 = if s + 1 == sub { b } else { a + (b - a) * (s + 1) as f64 / sub as f64 };
                let part = integrate(
                    |x, dl, dr| {
                        let dl_p = if s == 0 { dl } else { x - a };
                        let dr_p = if s + 1 == sub { dr } else { b - x };
                        let v = self.ln_on_panel(&pts, p, x, dl_p, dr_p).exp();
                        let mut out = h(x);
                        for o in out.iter_mut() {
                            *o *= v;
                        }
                        out
                    },
                    x0,
                    x1,
                    &q.quad,
                )?;
                if total.is_empty() {
                    total = part;
                } else {
                    for (t, v) in total.iter_mut().zip(part) {
                        *t += v;
                    }
                }
            }
        }
        Ok(total)
    }
}

/// Moments `m_k = ∫ x^k w(x) dx`, k = 0..=kmax.
pub fn hankel_moments(w: &HankelWeight, kmax: usize) -> Result<Vec<Complex64>> {
    hankel_moments_with(w, kmax, &SymbolQuad::default())
}

pub fn hankel_moments_with(w: &HankelWeight, kmax: usize, q: &SymbolQuad) -> Result<Vec<Complex64>> {
    w.integrate(
        |x| {
            let mut out = Vec::with_capacity(kmax + 1);
            let mut p = 1.0;
            for _ in 0..=kmax {
                out.push(Complex64::new(p, 0.0));
                p *= x;
            }
            out
        },
        q,
    )
}

/// The even circle symbol of a Hankel weight, `w(x)|sin θ| = C f̃(e^{iθ})`.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleSymbol {
    /// f̃.
    pub symbol: FHSymbol,
    /// ln C.
    pub ln_constant: Complex64,
}

impl CircleSymbol {
    pub fn constant(&self) -> Complex64 {
        self.ln_constant.exp()
    }

    /// `C f̃` as a single symbol (the constant folded into V_0).
    pub fn full(&self) -> FHSymbol {
        self.symbol.scaled_by_log(self.ln_constant)
    }
}

pub fn circle_symbol_of_weight(w: &HankelWeight) -> CircleSymbol {
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut phase = Complex64::new(0.0, 0.0);
    for nd in w.nodes() {
        let theta = nd.lambda.acos();
        lower.push(Singularity::new(theta, nd.alpha, -nd.beta));
        upper.push(Singularity::new(TWO_PI - theta, nd.alpha, nd.beta));
        phase += 2.0 * nd.beta * nd.lambda.asin();
    }
    let mut sing = vec![Singularity::new(0.0, 2.0 * w.alpha_plus + 0.5, 0.0.into())];
    sing.extend(lower);
    sing.push(Singularity::new(PI, 2.0 * w.alpha_minus + 0.5, 0.0.into()));
    sing.extend(upper.into_iter().rev());
    let symbol = FHSymbol::new(w.smooth_u.clone(), sing).expect("weight data is valid");
    let ln_constant = -(2.0 * w.alpha_sum() + 1.0) * 2f64.ln() + i() * phase;
    CircleSymbol { symbol, ln_constant }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pointwise_values() {
        assert_eq!(FHSymbol::one().eval(1.3).unwrap(), c(1.0, 0.0));
        let bt = FHSymbol::basor_tracy();
        assert!((bt.eval(PI / 2.0).unwrap() - c(0.0, -1.0)).norm() < 1e-15);
        assert!((bt.eval(1.5 * PI).unwrap() - c(0.0, 1.0)).norm() < 1e-15);
        let s = FHSymbol::pure(c(0.5, 0.0), c(0.0, 0.0));
        assert!((s.eval(PI).unwrap() - c(2.0, 0.0)).norm() < 1e-15);
        assert_eq!(s.eval(0.0).unwrap(), c(0.0, 0.0));
        let neg = FHSymbol::pure(c(-0.25, 0.0), c(0.0, 0.0));
        assert!(neg.eval(0.0).is_err());
    }

    #[test]
    fn jump_takes_lower_value_at_the_point() {
        let f = FHSymbol::new(
            SmoothPart::zero(),
            vec![Singularity::new(0.0, 0.0.into(), 0.0.into()), Singularity::new(1.0, 0.0.into(), c(0.3, 0.0))],
        )
        .unwrap();
        let at = f.eval(1.0).unwrap();
        let after = f.eval(1.0 + 1e-12).unwrap();
        assert!((at - after).norm() < 1e-10);
    }

    #[test]
    fn wiener_hopf_parts() {
        let t = 0.7;
        let wh = wiener_hopf(&SmoothPart::from_pairs(&[(1, t.into())]));
        assert_eq!(wh.v0, c(0.0, 0.0));
        assert!(wh.minus.iter().all(|m| *m == c(0.0, 0.0)));
        let z = Complex64::from_polar(1.0, 0.4);
        let wh = wiener_hopf(&SmoothPart::cosine(t));
        assert!((wh.ln_b_plus(z) - t * z).norm() < 1e-15);
        assert!((wh.ln_b_minus(z) - t / z).norm() < 1e-15);
        let wh = wiener_hopf(&SmoothPart::zero());
        assert_eq!(wh.v0.exp(), c(1.0, 0.0));
    }

    #[test]
    fn coefficients_of_simple_symbols() {
        let one = fourier_coeffs(&FHSymbol::one(), 3).unwrap();
        for (k, v) in one.iter().enumerate() {
            let want = if k == 3 { 1.0 } else { 0.0 };
            assert!((v - want).norm() < 1e-14);
        }
        let bt = fourier_coeffs(&FHSymbol::basor_tracy(), 7).unwrap();
        for j in -7i64..=7 {
            let want = if j % 2 != 0 { -2.0 / (PI * j as f64) } else { 0.0 };
            assert!((bt[(j + 7) as usize] - want).norm() < 1e-11, "j = {j}");
        }
        let s = fourier_coeffs(&FHSymbol::pure(c(0.5, 0.0), c(0.0, 0.0)), 0).unwrap();
        assert!((s[0] - 4.0 / PI).norm() < 1e-12);
    }

    #[test]
    fn weight_moments() {
        let m = hankel_moments(&HankelWeight::one(), 2).unwrap();
        assert!((m[0] - 2.0).norm() < 1e-14 && m[1].norm() < 1e-14 && (m[2] - 2.0 / 3.0).norm() < 1e-14);
        let m = hankel_moments(&HankelWeight::chebyshev(), 0).unwrap();
        assert!((m[0] - PI).norm() < 1e-12);
    }

    #[test]
    fn constant_weight_gives_abs_sine() {
        let cs = circle_symbol_of_weight(&HankelWeight::one());
        assert!((cs.constant() - 0.5).norm() < 1e-15);
        let s = cs.symbol.singularities();
        assert_eq!(s.len(), 2);
        assert!((s[0].alpha - 0.5).norm() < 1e-15 && (s[1].alpha - 0.5).norm() < 1e-15);
        assert!((s[1].theta - PI).abs() < 1e-15);
        let full = cs.full();
        for t in [0.3, 1.2, 2.9, 4.0, 5.5] {
            let v = full.eval(t).unwrap();
            assert!((v - f64::sin(t).abs()).norm() < 1e-14);
        }
    }
}
