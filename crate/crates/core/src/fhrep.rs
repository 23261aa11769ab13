//! FH-representations: integer shifts `β_j → β_j + n_j` with `Σ n_j = 0`.
//!
//! Every shift leaves the symbol unchanged up to the factor `Π z_j^{n_j}`.
//! The set M collects the shifts minimizing `Σ (Re β_j + n_j)²`; it is a
//! singleton when the minimizer has seminorm below 1 and otherwise holds
//! every arrangement reachable by moving a smallest entry up and a largest
//! entry down.

use num_complex::Complex64;
use std::collections::{BTreeSet, VecDeque};

/// Tolerance for equality of real parts.
pub const RE_TOL: f64 = 1e-9;
/// Tolerance for recognising a negative integer.
pub const DEGENERACY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct BetaVector(pub Vec<Complex64>);

impl BetaVector {
    pub fn new(betas: Vec<Complex64>) -> Self {
        assert!(!betas.is_empty(), "a beta vector needs at least one entry");
        BetaVector(betas)
    }

    pub fn from_real(betas: &[f64]) -> Self {
        BetaVector::new(betas.iter().map(|&b| Complex64::new(b, 0.0)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FHRep {
    pub base: BetaVector,
    pub shifts: Vec<i64>,
}

impl FHRep {
    pub fn identity(base: BetaVector) -> Self {
        let shifts = vec![0; base.len()];
        FHRep { base, shifts }
    }

    pub fn shifted(&self) -> Vec<Complex64> {
        self.base.0.iter().zip(&self.shifts).map(|(b, &n)| b + n as f64).collect()
    }

    pub fn seminorm(&self) -> f64 {
        seminorm(&self.shifted())
    }

    /// `Σ (Re β_j + n_j)²`.
    pub fn energy(&self) -> f64 {
        self.shifted().iter().map(|b| b.re * b.re).sum()
    }
}

/// `max_{j,k} |Re β_j − Re β_k|`.
pub fn seminorm(betas: &[Complex64]) -> f64 {
    let (lo, hi) = betas
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), b| (lo.min(b.re), hi.max(b.re)));
    if betas.is_empty() {
        0.0
    } else {
        hi - lo
    }
}

fn extremes(vals: &[f64]) -> (Vec<usize>, Vec<usize>) {
    let lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mins = (0..vals.len()).filter(|&j| vals[j] <= lo + RE_TOL).collect();
    let maxs = (0..vals.len()).filter(|&j| vals[j] >= hi - RE_TOL).collect();
    (mins, maxs)
}

/// The minimizing set M, ordered by shift vector.
pub fn minimize_reps(b: &BetaVector) -> Vec<FHRep> {
    let re: Vec<f64> = b.0.iter().map(|x| x.re).collect();
    let mut shifts = vec![0i64; re.len()];
    let vals = |s: &[i64]| -> Vec<f64> { re.iter().zip(s).map(|(x, &n)| x + n as f64).collect() };
    loop {
        let v = vals(&shifts);
        let (mins, maxs) = extremes(&v);
        if v[maxs[0]] - v[mins[0]] <= 1.0 + RE_TOL {
            break;
        }
        shifts[mins[0]] += 1;
        shifts[maxs[0]] -= 1;
    }
    let v = vals(&shifts);
    let (mins, maxs) = extremes(&v);
    if v[maxs[0]] - v[mins[0]] < 1.0 - RE_TOL {
        return vec![FHRep { base: b.clone(), shifts }];
    }
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::from([shifts.clone()]);
    seen.insert(shifts);
    while let Some(s) = queue.pop_front() {
        let v = vals(&s);
        let (mins, maxs) = extremes(&v);
        for &i in &mins {
            for &j in &maxs {
                if i == j {
                    continue;
                }
                let mut t = s.clone();
                t[i] += 1;
                t[j] -= 1;
                if seen.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
    }
    seen.into_iter().map(|shifts| FHRep { base: b.clone(), shifts }).collect()
}

fn negative_integer(z: Complex64) -> bool {
    let r = z.re.round();
    r <= -1.0 && (z - r).norm() <= DEGENERACY_TOL
}

/// True when some `α_j ± (β_j + n_j)` is a negative integer.
pub fn is_degenerate(rep: &FHRep, alphas: &[Complex64]) -> bool {
    assert_eq!(alphas.len(), rep.base.len(), "alpha and beta lengths differ");
    rep.shifted().iter().zip(alphas).any(|(b, a)| negative_integer(a + b) || negative_integer(a - b))
}
