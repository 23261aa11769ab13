//! Convergence sweeps: exact values against a predictor over a grid of n.

use anyhow::{anyhow, bail, Result};
use fhlab_core::asym::{
    basor_tracy_asym, ehrhardt_asym, hankel_asym, poly_asym, szego_asym, tph_asym, AsymptoticResult,
};
use fhlab_core::exactdet::{szego_recursion, toeplitz_logdet, tph_logdet, TphVariant};
use fhlab_core::relations::route_hankel_via_toeplitz;
use fhlab_core::symbol::{circle_symbol_of_weight, Coeffs, Described, FHSymbol, HankelWeight};
use fhlab_core::LogScaled;
use rayon::prelude::*;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Toeplitz,
    Hankel,
    Tph,
    Chi,
    Phi0,
}

impl FromStr for Target {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "toeplitz" => Target::Toeplitz,
            "hankel" => Target::Hankel,
            "tph" => Target::Tph,
            "chi" => Target::Chi,
            "phi0" => Target::Phi0,
            _ => bail!("unknown target '{s}' (toeplitz, hankel, tph, chi, phi0)"),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predictor {
    Szego,
    Ehrhardt,
    BasorTracy,
    Hankel,
    Tph,
    Poly,
}

impl FromStr for Predictor {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "szego" => Predictor::Szego,
            "ehrhardt" => Predictor::Ehrhardt,
            "basor-tracy" => Predictor::BasorTracy,
            "hankel" => Predictor::Hankel,
            "tph" => Predictor::Tph,
            "poly" => Predictor::Poly,
            _ => bail!("unknown predictor '{s}' (szego, ehrhardt, basor-tracy, hankel, tph, poly)"),
        })
    }
}

impl Target {
    pub fn default_predictor(self) -> Predictor {
        match self {
            Target::Toeplitz => Predictor::BasorTracy,
            Target::Hankel => Predictor::Hankel,
            Target::Tph => Predictor::Tph,
            Target::Chi | Target::Phi0 => Predictor::Poly,
        }
    }
}

/// Parses `a:b:step` (or a single `n`) into a strictly increasing grid.
pub fn parse_grid(s: &str) -> Result<Vec<usize>> {
    let parts: Vec<usize> = s
        .split(':')
        .map(|p| p.trim().parse::<usize>().map_err(|_| anyhow!("bad grid component '{p}' in '{s}'")))
        .collect::<Result<_>>()?;
    let grid: Vec<usize> = match parts.as_slice() {
        [n] => vec![*n],
        [a, b] => (*a..=*b).collect(),
        [a, b, step] if *step > 0 => (*a..=*b).step_by(*step).collect(),
        _ => bail!("grid must be 'a:b:step' with step > 0, got '{s}'"),
    };
    if grid.is_empty() || grid[0] == 0 {
        bail!("grid '{s}' must be non-empty and start at n >= 1");
    }
    Ok(grid)
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub target: Target,
    pub n_grid: Vec<usize>,
    pub predictor: Predictor,
    pub variant: TphVariant,
    pub fit_fraction: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub n: usize,
    pub exact_logmod: f64,
    pub exact_phase: f64,
    pub pred_logmod: f64,
    pub pred_phase: f64,
    pub ratio_minus_1: f64,
    pub status: String,
}

impl Row {
    pub fn ok(&self) -> bool {
        self.status == "ok"
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepTable {
    pub rows: Vec<Row>,
}

impl SweepTable {
    /// Least-squares slope of ln|ratio−1| against ln n over the last
    /// `fraction` of the usable rows.
    pub fn slope(&self, fraction: f64) -> Option<f64> {
        let pts: Vec<(f64, f64)> = self
            .rows
            .iter()
            .filter(|r| r.ok() && r.ratio_minus_1.is_finite() && r.ratio_minus_1 > 0.0)
            .map(|r| ((r.n as f64).ln(), r.ratio_minus_1.ln()))
            .collect();
        let take = ((pts.len() as f64 * fraction).ceil() as usize).max(2);
        if pts.len() < 2 {
            return None;
        }
        let pts = &pts[pts.len() - take.min(pts.len())..];
        let m = pts.len() as f64;
        let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), p| (a + p.0, b + p.1));
        let (mx, my) = (sx / m, sy / m);
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        (sxx > 0.0).then(|| sxy / sxx)
    }
}

fn as_symbol(input: &Described) -> FHSymbol {
    match input {
        Described::Symbol(f) => f.clone(),
        Described::Weight(w) => circle_symbol_of_weight(w).full(),
    }
}

fn as_weight(input: &Described) -> Result<&HankelWeight> {
    match input {
        Described::Weight(w) => Ok(w),
        Described::Symbol(_) => bail!("target 'hankel' needs a weight (--weight)"),
    }
}

/// Evaluates a determinant predictor.
pub fn predict(p: Predictor, input: &Described, n: usize, variant: TphVariant) -> Result<AsymptoticResult> {
    Ok(match p {
        Predictor::Szego => szego_asym(&as_symbol(input).smooth, n),
        Predictor::Ehrhardt => ehrhardt_asym(&as_symbol(input), n)?,
        Predictor::BasorTracy => basor_tracy_asym(&as_symbol(input), n)?,
        Predictor::Hankel => hankel_asym(as_weight(input)?, n)?,
        Predictor::Tph => tph_asym(&as_symbol(input), n, variant)?,
        Predictor::Poly => bail!("predictor 'poly' applies to targets chi and phi0"),
    })
}

fn one_line(e: &anyhow::Error) -> String {
    format!("error: {e}").replace([',', '\n', '\r'], ";")
}

fn row(n: usize, pair: Result<(LogScaled, LogScaled)>) -> Row {
    match pair {
        Ok((e, p)) => Row {
            n,
            exact_logmod: e.log_modulus(),
            exact_phase: e.phase(),
            pred_logmod: p.log_modulus(),
            pred_phase: p.phase(),
            ratio_minus_1: e.relative_residual(&p),
            status: "ok".into(),
        },
        Err(err) => Row {
            n,
            exact_logmod: f64::NAN,
            exact_phase: f64::NAN,
            pred_logmod: f64::NAN,
            pred_phase: f64::NAN,
            ratio_minus_1: f64::NAN,
            status: one_line(&err),
        },
    }
}

pub fn run_sweep(spec: &SweepSpec, input: &Described) -> Result<SweepTable> {
    if spec.n_grid.windows(2).any(|w| w[1] <= w[0]) {
        bail!("n grid must be strictly increasing");
    }
    let nmax = *spec.n_grid.last().ok_or_else(|| anyhow!("empty n grid"))?;
    let rows: Vec<Row> = match spec.target {
        Target::Toeplitz | Target::Tph => {
            let f = as_symbol(input);
            let jmax = if spec.target == Target::Tph { 2 * nmax + 2 } else { nmax };
            let coeffs = Coeffs::of(&f, jmax)?;
            spec.n_grid
                .par_iter()
                .map(|&n| {
                    let exact = if spec.target == Target::Tph {
                        tph_logdet(&coeffs, n, spec.variant)
                    } else {
                        toeplitz_logdet(&coeffs, n)
                    };
                    row(n, predict(spec.predictor, input, n, spec.variant).map(|p| (exact, p.value)))
                })
                .collect()
        }
        Target::Hankel => {
            let w = as_weight(input)?;
            spec.n_grid
                .par_iter()
                .map(|&n| {
                    let pair = route_hankel_via_toeplitz(w, n)
                        .map_err(anyhow::Error::from)
                        .and_then(|e| Ok((e, predict(spec.predictor, input, n, spec.variant)?.value)));
                    row(n, pair)
                })
                .collect()
        }
        Target::Chi | Target::Phi0 => {
            if spec.predictor != Predictor::Poly {
                bail!("targets chi and phi0 use predictor 'poly'");
            }
            let f = as_symbol(input);
            let op = szego_recursion(&Coeffs::of(&f, nmax + 1)?, nmax + 1)?;
            spec.n_grid
                .par_iter()
                .map(|&n| {
                    let pair = poly_asym(&f, n).map_err(anyhow::Error::from).map(|p| {
                        if spec.target == Target::Chi {
                            (LogScaled::from_complex(op.chi_sq[n - 1]), LogScaled::from_complex(p.chi_sq_prev))
                        } else {
                            (LogScaled::from_complex(op.reflection(n)), LogScaled::from_complex(p.reflection))
                        }
                    });
                    row(n, pair)
                })
                .collect()
        }
    };
    Ok(SweepTable { rows })
}
