//! Seeded random inputs satisfying the hypotheses of the exact identities.

use crate::symbol::{circle_symbol_of_weight, FHSymbol, HankelWeight, Node, Singularity, SmoothPart};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_complex(rng: &mut impl Rng, re: (f64, f64), im: f64) -> Complex64 {
    Complex64::new(rng.gen_range(re.0..re.1), rng.gen_range(-im..=im))
}

fn smooth(rng: &mut impl Rng, even: bool) -> SmoothPart {
    let order = rng.gen_range(0..=2);
    let mut pairs = vec![(0, small_complex(rng, (-0.3, 0.3), 0.0))];
    for k in 1..=order {
        let v = small_complex(rng, (-0.25, 0.25), 0.1);
        pairs.push((k, v));
        pairs.push((-k, if even { v } else { small_complex(rng, (-0.25, 0.25), 0.1) }));
    }
    SmoothPart::from_pairs(&pairs)
}

/// Up to three singularities with `Re α ∈ [0, 0.6)` and `|Re β| < 0.3`.
pub fn random_symbol(rng: &mut impl Rng) -> FHSymbol {
    let m = rng.gen_range(1..=3);
    let mut thetas: Vec<f64> = Vec::new();
    while thetas.len() < m {
        let t = if thetas.is_empty() && rng.gen_bool(0.5) { 0.0 } else { rng.gen_range(0.2..6.1) };
        if thetas.iter().all(|s| (s - t).abs() > 0.4) {
            thetas.push(t);
        }
    }
    thetas.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    let sing = thetas
        .into_iter()
        .map(|t| Singularity::new(t, small_complex(rng, (0.0, 0.6), 0.1), small_complex(rng, (-0.3, 0.3), 0.1)))
        .collect();
    FHSymbol::new(smooth(rng, false), sing).expect("valid by construction")
}

/// Up to two interior nodes and endpoint exponents in `[−1/4, 1/2)`.
pub fn random_weight(rng: &mut impl Rng) -> HankelWeight {
    let r = rng.gen_range(0..=2);
    let mut lambdas: Vec<f64> = Vec::new();
    while lambdas.len() < r {
        let l = rng.gen_range(-0.8..0.8);
        if lambdas.iter().all(|s: &f64| (s - l).abs() > 0.3) {
            lambdas.push(l);
        }
    }
    lambdas.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    let nodes = lambdas
        .into_iter()
        .map(|lambda| Node {
            lambda,
            alpha: small_complex(rng, (0.0, 0.5), 0.0),
            beta: small_complex(rng, (-0.3, 0.3), 0.0),
        })
        .collect();
    let ap = Complex64::new(rng.gen_range(-0.25..0.5), 0.0);
    let am = Complex64::new(rng.gen_range(-0.25..0.5), 0.0);
    let u = smooth(rng, true);
    let u = SmoothPart::from_pairs(&u.pairs().into_iter().map(|(k, v)| (k, Complex64::new(v.re, 0.0))).collect::<Vec<_>>());
    HankelWeight::new(u, nodes, ap, am).expect("valid by construction")
}

/// The even circle symbol of a random weight.
pub fn random_even_symbol(rng: &mut impl Rng) -> FHSymbol {
    circle_symbol_of_weight(&random_weight(rng)).full()
}
