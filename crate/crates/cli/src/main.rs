use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use fhlab_cli::sweep::{parse_grid, predict, run_sweep, Predictor, SweepSpec, Target};
use fhlab_cli::verify::{builtin_corpus, parse_corpus, run_verify, write_verify, Identity};
use fhlab_cli::{svg, table};
use fhlab_core::exactdet::{hankel_logdet, toeplitz_logdet, tph_logdet, TphVariant};
use fhlab_core::fhrep::{is_degenerate, minimize_reps, BetaVector};
use fhlab_core::relations::route_hankel_via_toeplitz;
use fhlab_core::symbol::{fourier_coeffs, hankel_moments, parse_symbol_or_weight, Coeffs, Described};
use fhlab_core::LogScaled;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fhlab", version, about = "Exact and asymptotic Toeplitz, Hankel and T+H determinants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// Symbol description file
    #[arg(long, conflicts_with = "weight")]
    symbol: Option<PathBuf>,
    /// Hankel weight description file
    #[arg(long)]
    weight: Option<PathBuf>,
}

impl Input {
    fn load(&self) -> Result<Described> {
        let path = match (&self.symbol, &self.weight) {
            (Some(p), None) | (None, Some(p)) => p,
            _ => bail!("give exactly one of --symbol or --weight"),
        };
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let d = parse_symbol_or_weight(&text).with_context(|| format!("parsing {}", path.display()))?;
        match (&d, self.weight.is_some()) {
            (Described::Symbol(_), true) => bail!("{} describes a symbol, not a weight", path.display()),
            (Described::Weight(_), false) => bail!("{} describes a weight, not a symbol", path.display()),
            _ => Ok(d),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a symbol at an angle or a weight at a point
    Eval {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long)]
        x: Option<f64>,
    },
    /// Fourier coefficients f_j, |j| <= n
    Coeffs {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Moments of a weight, k <= n
    Moments {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact determinant of order n
    Det {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
        /// Toeplitz+Hankel variant (plus, minus2, plus1, minus1)
        #[arg(long)]
        variant: Option<TphVariant>,
    },
    /// Asymptotic prediction with its factor breakdown
    Asym {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        predictor: Option<Predictor>,
        #[arg(long, default_value = "plus")]
        variant: TphVariant,
    },
    /// Exact against predicted over a grid of n
    Sweep {
        #[command(flatten)]
        input: Input,
        /// toeplitz, hankel, tph, chi or phi0
        #[arg(long, default_value = "toeplitz")]
        target: Target,
        /// a:b:step
        #[arg(long)]
        n_grid: String,
        #[arg(long)]
        predictor: Option<Predictor>,
        #[arg(long, default_value = "plus")]
        variant: TphVariant,
        /// Fraction of the grid (largest n) used for the slope fit
        #[arg(long, default_value_t = 0.5)]
        fit_fraction: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Exact identity suites over a corpus
    Verify {
        /// shift, ht, hth, szegomap, parametrix, cd or all
        #[arg(long, default_value = "all")]
        identity: String,
        /// 'builtin' or a file of cases separated by '---'
        #[arg(long, default_value = "builtin")]
        corpus: String,
        /// Largest n checked
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = fhlab_core::relations::DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimizing FH-representations of a symbol
    Fhrep {
        #[command(flatten)]
        input: Input,
    },
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(std::fs::File::create(p).with_context(|| format!("creating {}", p.display()))?),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn show(label: &str, v: &LogScaled) {
    let z = v.to_complex();
    println!("{label}: logmod {:.16e} phase {:.16e} value {:.12e}{:+.12e}i", v.log_modulus(), v.phase(), z.re, z.im);
}

fn as_symbol(d: &Described) -> fhlab_core::symbol::FHSymbol {
    match d {
        Described::Symbol(f) => f.clone(),
        Described::Weight(w) => fhlab_core::symbol::circle_symbol_of_weight(w).full(),
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Eval { input, theta, x } => match (input.load()?, theta, x) {
            (Described::Symbol(f), Some(t), None) => {
                let v = f.eval(t)?;
                println!("{:.16e},{:.16e}", v.re, v.im);
            }
            (Described::Weight(w), None, Some(x)) => {
                let v = w.eval(x)?;
                println!("{:.16e},{:.16e}", v.re, v.im);
            }
            _ => bail!("use --theta with --symbol and --x with --weight"),
        },
        Command::Coeffs { input, n, out } => {
            let f = as_symbol(&input.load()?);
            let c = fourier_coeffs(&f, n)?;
            let mut w = sink(&out)?;
            writeln!(w, "j,re,im")?;
            for (i, v) in c.iter().enumerate() {
                writeln!(w, "{},{:.16e},{:.16e}", i as i64 - n as i64, v.re, v.im)?;
            }
        }
        Command::Moments { input, n, out } => {
            let Described::Weight(wt) = input.load()? else { bail!("moments need --weight") };
            let m = hankel_moments(&wt, n)?;
            let mut w = sink(&out)?;
            writeln!(w, "k,re,im")?;
            for (k, v) in m.iter().enumerate() {
                writeln!(w, "{k},{:.16e},{:.16e}", v.re, v.im)?;
            }
        }
        Command::Det { input, n, variant } => match input.load()? {
            Described::Symbol(f) => {
                let c = Coeffs::of(&f, 2 * n + 2)?;
                match variant {
                    Some(v) => show(&format!("tph({})", v.name()), &tph_logdet(&c, n, v)),
                    None => show("toeplitz", &toeplitz_logdet(&c, n)),
                }
            }
            Described::Weight(w) => {
                if variant.is_some() {
                    bail!("--variant applies to symbols");
                }
                let m = hankel_moments(&w, 2 * n.max(1) - 2)?;
                let direct = hankel_logdet(&m, n);
                show("hankel(direct)", &direct.value);
                if let Some(msg) = &direct.warning {
                    println!("warning: {msg}");
                }
                show("hankel(toeplitz route)", &route_hankel_via_toeplitz(&w, n)?);
            }
        },
        Command::Asym { input, n, predictor, variant } => {
            let d = input.load()?;
            let p = predictor.unwrap_or(match d {
                Described::Symbol(_) => Predictor::BasorTracy,
                Described::Weight(_) => Predictor::Hankel,
            });
            if p == Predictor::Poly {
                let pa = fhlab_core::asym::poly_asym(&as_symbol(&d), n)?;
                println!("chi_sq_prev: {:.16e}{:+.16e}i", pa.chi_sq_prev.re, pa.chi_sq_prev.im);
                println!("reflection: {:.16e}{:+.16e}i", pa.reflection.re, pa.reflection.im);
                println!("hat_reflection: {:.16e}{:+.16e}i", pa.hat_reflection.re, pa.hat_reflection.im);
                println!("delta: {:.6e}", pa.delta);
            } else {
                let r = predict(p, &d, n, variant)?;
                show("value", &r.value);
                println!("abs: {:.16e}", r.value.to_complex().norm());
                println!("arg: {:.16e}", r.value.phase());
                for (name, t) in &r.terms {
                    show(&format!("  {name}"), t);
                }
                for (name, c) in &r.components {
                    show(&format!("  component {name}"), &c.value);
                }
                println!("delta: {:.6e}", r.delta_scale);
                println!("error order: {}", r.error_order);
            }
        }
        Command::Sweep { input, target, n_grid, predictor, variant, fit_fraction, out, svg: svg_path } => {
            let d = input.load()?;
            let spec = SweepSpec {
                target,
                n_grid: parse_grid(&n_grid)?,
                predictor: predictor.unwrap_or(target.default_predictor()),
                variant,
                fit_fraction,
            };
            let t = run_sweep(&spec, &d)?;
            table::write_csv(&t, sink(&out)?)?;
            let slope = t.slope(fit_fraction);
            match slope {
                Some(k) => eprintln!("slope of log|ratio-1| vs log n: {k:.4}"),
                None => eprintln!("slope of log|ratio-1| vs log n: n/a"),
            }
            if let Some(p) = svg_path {
                svg::emit_svg(&t, slope, &p)?;
            }
            return Ok(t.rows.iter().all(|r| r.ok()));
        }
        Command::Verify { identity, corpus, n, seed, tol, out } => {
            let ids: Vec<Identity> = if identity == "all" {
                Identity::ALL.to_vec()
            } else {
                identity.split(',').map(|s| s.trim().parse()).collect::<Result<_>>()?
            };
            let cases = if corpus == "builtin" {
                builtin_corpus(seed)
            } else {
                parse_corpus(&std::fs::read_to_string(&corpus).with_context(|| format!("reading {corpus}"))?)?
            };
            let rows = run_verify(&ids, &cases, n);
            write_verify(&rows, tol, sink(&out)?)?;
            let failed = rows.iter().filter(|r| !r.passes(tol)).count();
            eprintln!("{} checks, {failed} failed", rows.len());
            return Ok(failed == 0);
        }
        Command::Fhrep { input } => {
            let f = as_symbol(&input.load()?);
            let b = BetaVector::new(f.betas());
            let alphas = f.alphas();
            let reps = minimize_reps(&b);
            println!("{{");
            println!("  \"representations\": [");
            for (i, r) in reps.iter().enumerate() {
                let shifted: Vec<String> = r.shifted().iter().map(|z| format!("[{:.12}, {:.12}]", z.re, z.im)).collect();
                println!(
                    "    {{\"shifts\": {:?}, \"shifted_beta\": [{}], \"seminorm\": {:.12}, \"degenerate\": {}}}{}",
                    r.shifts,
                    shifted.join(", "),
                    r.seminorm(),
                    is_degenerate(r, &alphas),
                    if i + 1 < reps.len() { "," } else { "" }
                );
            }
            println!("  ]");
            println!("}}");
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = fhlab_cli::init_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
