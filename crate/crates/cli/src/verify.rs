//! Identity suites over a corpus of symbols and weights.

use anyhow::{bail, Result};
use fhlab_core::corpus::{random_even_symbol, random_symbol, random_weight, rng};
use fhlab_core::exactdet::TphVariant;
use fhlab_core::relations::{
    check_christoffel_darboux, check_hankel_toeplitz, check_shift_identity, check_szego_map, check_tph_reduction,
    IdentityReport,
};
use fhlab_core::specialfn::jump_residual;
use fhlab_core::symbol::{circle_symbol_of_weight, parse_symbol_or_weight, Described, FHSymbol};
use fhlab_core::{Complex64, LogScaled};
use rand::Rng;
use rayon::prelude::*;
use std::io::Write;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    Shift,
    Ht,
    Hth,
    SzegoMap,
    Parametrix,
    Cd,
}

impl Identity {
    pub const ALL: [Identity; 6] =
        [Identity::Shift, Identity::Ht, Identity::Hth, Identity::SzegoMap, Identity::Parametrix, Identity::Cd];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Shift => "shift",
            Identity::Ht => "ht",
            Identity::Hth => "hth",
            Identity::SzegoMap => "szegomap",
            Identity::Parametrix => "parametrix",
            Identity::Cd => "cd",
        }
    }
}

impl FromStr for Identity {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> Result<Self> {
        match Identity::ALL.into_iter().find(|i| i.name() == s) {
            Some(i) => Ok(i),
            None => bail!("unknown identity '{s}' (shift, ht, hth, szegomap, parametrix, cd)"),
        }
    }
}

/// One case of a corpus: for the builtin corpus a symbol, a weight and an
/// even symbol drawn together; for files the single parsed description.
#[derive(Debug, Clone)]
pub struct Case {
    pub symbol: Option<FHSymbol>,
    pub weight: Option<fhlab_core::symbol::HankelWeight>,
    pub even: Option<FHSymbol>,
    pub parametrix: Vec<(Complex64, Complex64)>,
}

impl From<Described> for Case {
    fn from(d: Described) -> Self {
        match d {
            Described::Symbol(f) => {
                let even = f.is_even(1e-10).then(|| f.clone());
                let parametrix = f.singularities().iter().map(|s| (s.alpha, s.beta)).collect();
                Case { symbol: Some(f), weight: None, even, parametrix }
            }
            Described::Weight(w) => {
                let f = circle_symbol_of_weight(&w).full();
                let parametrix = w.points().iter().map(|s| (s.alpha, s.beta)).collect();
                Case { symbol: Some(f.clone()), weight: Some(w), even: Some(f), parametrix }
            }
        }
    }
}

pub const BUILTIN_CASES: usize = 50;

pub fn builtin_corpus(seed: u64) -> Vec<Case> {
    let mut g = rng(seed);
    (0..BUILTIN_CASES)
        .map(|_| {
            let symbol = random_symbol(&mut g);
            let weight = random_weight(&mut g);
            let even = random_even_symbol(&mut g);
            let alpha = Complex64::new(g.gen_range(-0.4..1.0), g.gen_range(-0.3..0.3));
            let beta = Complex64::new(g.gen_range(-0.4..0.4), g.gen_range(-0.3..0.3));
            Case { symbol: Some(symbol), weight: Some(weight), even: Some(even), parametrix: vec![(alpha, beta)] }
        })
        .collect()
}

/// Cases separated by lines consisting of `---`.
pub fn parse_corpus(text: &str) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    let mut chunk = String::new();
    let mut first_line = 1;
    let mut line_no = 0;
    let mut push = |chunk: &str, first: usize| -> Result<()> {
        if chunk.lines().any(|l| !l.split('#').next().unwrap_or("").trim().is_empty()) {
            match parse_symbol_or_weight(chunk) {
                Ok(d) => out.push(Case::from(d)),
                Err(e) => bail!("case starting at line {first}: {e}"),
            }
        }
        Ok(())
    };
    for line in text.lines() {
        line_no += 1;
        if line.trim() == "---" {
            push(&chunk, first_line)?;
            chunk.clear();
            first_line = line_no + 1;
        } else {
            chunk.push_str(line);
            chunk.push('\n');
        }
    }
    push(&chunk, first_line)?;
    if out.is_empty() {
        bail!("corpus has no cases");
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct VerifyRow {
    pub identity: String,
    pub case: usize,
    pub n: usize,
    pub report: std::result::Result<IdentityReport, String>,
}

impl VerifyRow {
    pub fn passes(&self, tol: f64) -> bool {
        matches!(&self.report, Ok(r) if r.passes(tol))
    }
}

fn parametrix_report(alpha: Complex64, beta: Complex64, ray: usize) -> std::result::Result<IdentityReport, String> {
    let mut worst: f64 = 0.0;
    for i in 0..20 {
        let r = 0.1 * 300f64.powf(i as f64 / 19.0);
        worst = worst.max(jump_residual(alpha, beta, ray, r).map_err(|e| e.to_string())?);
    }
    Ok(IdentityReport {
        name: format!("parametrix-jump(ray={ray})"),
        n: ray,
        lhs: LogScaled::ONE,
        rhs: LogScaled::ONE,
        relative_residual: worst,
        status: if worst < fhlab_core::relations::DEFAULT_TOL {
            fhlab_core::relations::Status::Pass
        } else {
            fhlab_core::relations::Status::Fail
        },
    })
}

fn run_case(id: Identity, idx: usize, case: &Case, nmax: usize) -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    let mut add = |n: usize, name: String, rep: fhlab_core::Result<IdentityReport>| {
        rows.push(VerifyRow { identity: name, case: idx, n, report: rep.map_err(|e| e.to_string()) });
    };
    let missing = |what: &str| Err(fhlab_core::Error::Invalid(format!("case has no {what}")));
    if id == Identity::Parametrix {
        let mut out = Vec::new();
        for &(a, b) in &case.parametrix {
            for ray in 1..=8 {
                out.push(VerifyRow { identity: id.name().into(), case: idx, n: ray, report: parametrix_report(a, b, ray) });
            }
        }
        return out;
    }
    for n in 1..=nmax {
        match id {
            Identity::Shift => {
                for ell in [1i64, -1, 2, -2] {
                    let rep = match &case.symbol {
                        Some(f) => check_shift_identity(f, ell, n),
                        None => missing("symbol"),
                    };
                    add(n, format!("shift(l={ell})"), rep);
                }
            }
            Identity::Ht => {
                let rep = match &case.weight {
                    Some(w) => check_hankel_toeplitz(w, n),
                    None => missing("weight"),
                };
                add(n, id.name().into(), rep);
            }
            Identity::Hth => {
                for v in TphVariant::ALL {
                    let rep = match &case.even {
                        Some(f) => check_tph_reduction(f, n, v),
                        None => missing("even symbol"),
                    };
                    add(n, format!("hth({})", v.name()), rep);
                }
            }
            Identity::SzegoMap => {
                let rep = match &case.even {
                    Some(f) => check_szego_map(f, n),
                    None => missing("even symbol"),
                };
                add(n, id.name().into(), rep);
            }
            Identity::Cd => {
                let rep = match &case.symbol {
                    Some(f) => {
                        check_christoffel_darboux(f, n, Complex64::from_polar(0.7, 0.3), Complex64::from_polar(1.2, -1.1))
                    }
                    None => missing("symbol"),
                };
                add(n, id.name().into(), rep);
            }
            Identity::Parametrix => unreachable!(),
        }
    }
    rows
}

/// Runs the identity for n = 1..=nmax on every case, in parallel over cases.
pub fn run_verify(ids: &[Identity], cases: &[Case], nmax: usize) -> Vec<VerifyRow> {
    ids.iter()
        .flat_map(|&id| {
            cases
                .par_iter()
                .enumerate()
                .map(|(i, c)| run_case(id, i, c, nmax))
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
        })
        .collect()
}

pub const VERIFY_HEADER: &str = "identity,case,n,lhs_logmod,lhs_phase,rhs_logmod,rhs_phase,residual,status";

pub fn write_verify<W: Write>(rows: &[VerifyRow], tol: f64, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{VERIFY_HEADER}")?;
    for r in rows {
        match &r.report {
            Ok(rep) => writeln!(
                out,
                "{},{},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{}",
                r.identity,
                r.case,
                r.n,
                rep.lhs.log_modulus(),
                rep.lhs.phase(),
                rep.rhs.log_modulus(),
                rep.rhs.phase(),
                rep.relative_residual,
                if rep.passes(tol) { "pass" } else { "fail" }
            )?,
            Err(e) => writeln!(out, "{},{},{},nan,nan,nan,nan,nan,error: {}", r.identity, r.case, r.n, e.replace(',', ";"))?,
        }
    }
    Ok(())
}
