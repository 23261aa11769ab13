use fhlab_core::exactdet::*;
use fhlab_core::poly::Poly;
use fhlab_core::symbol::*;
use fhlab_core::{Complex64, LogScaled};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Determinant by Laplace expansion along the first row.
fn laplace(a: &[Vec<Complex64>]) -> Complex64 {
    let n = a.len();
    if n == 0 {
        return c(1.0, 0.0);
    }
    let mut s = c(0.0, 0.0);
    for col in 0..n {
        let minor: Vec<Vec<Complex64>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != col).map(|(_, v)| *v).collect())
            .collect();
        let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
        s += sign * a[0][col] * laplace(&minor);
    }
    s
}

fn random_symbol(rng: &mut ChaCha8Rng, m: usize) -> FHSymbol {
    let mut thetas: Vec<f64> = (0..m).map(|_| rng.gen_range(0.3..6.0)).collect();
    thetas.sort_by(f64::total_cmp);
    thetas.dedup_by(|a, b| (*a - *b).abs() < 0.3);
    let mut sing = vec![Singularity::new(0.0, c(rng.gen_range(-0.2..0.6), 0.0), c(rng.gen_range(-0.3..0.3), 0.0))];
    for t in thetas {
        sing.push(Singularity::new(
            t,
            c(rng.gen_range(-0.2..0.6), rng.gen_range(-0.2..0.2)),
            c(rng.gen_range(-0.3..0.3), rng.gen_range(-0.2..0.2)),
        ));
    }
    let v = SmoothPart::from_pairs(&[(1, c(rng.gen_range(-0.3..0.3), 0.0)), (-1, c(rng.gen_range(-0.3..0.3), 0.1))]);
    FHSymbol::new(v, sing).unwrap()
}

/// Monic Φ_k and hatΦ_k from the bordered determinant formulas.
fn brute_monic(cf: &Coeffs, k: usize) -> (Poly, Poly) {
    let dk = laplace(&(0..k).map(|s| (0..k).map(|t| cf.get(s as i64 - t as i64)).collect()).collect::<Vec<_>>());
    let mut p = vec![c(0.0, 0.0); k + 1];
    let mut q = vec![c(0.0, 0.0); k + 1];
    for i in 0..=k {
        // Φ: delete the last row and column i.
        let minor: Vec<Vec<Complex64>> = (0..k)
            .map(|s| (0..=k).filter(|&t| t != i).map(|t| cf.get(s as i64 - t as i64)).collect())
            .collect();
        let sign = if (k + i) % 2 == 0 { 1.0 } else { -1.0 };
        p[i] = sign * laplace(&minor) / dk;
        // hatΦ: delete row i and the last column.
        let minor: Vec<Vec<Complex64>> = (0..=k)
            .filter(|&s| s != i)
            .map(|s| (0..k).map(|t| cf.get(s as i64 - t as i64)).collect())
            .collect();
        q[i] = sign * laplace(&minor) / dk;
    }
    (Poly(p), Poly(q))
}

#[test]
fn recursion_matches_bordered_determinants() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..4 {
        let f = random_symbol(&mut rng, 2);
        let cf = Coeffs::of(&f, 9).unwrap();
        let op = szego_recursion(&cf, 8).unwrap();
        for k in 1..=7 {
            let (p, q) = brute_monic(&cf, k);
            for i in 0..=k {
                let scale = p.coeff(i).norm().max(1e-3);
                assert!((op.monic[k].coeff(i) - p.coeff(i)).norm() < 1e-9 * scale, "k={k} i={i}");
                let scale = q.coeff(i).norm().max(1e-3);
                assert!((op.hat_monic[k].coeff(i) - q.coeff(i)).norm() < 1e-9 * scale, "hat k={k} i={i}");
            }
        }
    }
}

#[test]
fn chi_product_matches_lu_smooth_symbol() {
    let f = FHSymbol::smooth_only(SmoothPart::from_pairs(&[(0, c(0.2, 0.0)), (1, c(0.4, 0.0)), (-1, c(0.4, 0.0)), (2, c(0.1, 0.0)), (-2, c(0.1, 0.0))]));
    let cf = Coeffs::of(&f, 41).unwrap();
    let op = szego_recursion(&cf, 40).unwrap();
    assert!(op.chi_residual < 1e-10);
    for n in [1, 5, 10, 20, 40] {
        let lu = toeplitz_logdet(&cf, n);
        let rec = op.det(n);
        assert!((lu.log_modulus() - rec.log_modulus()).abs() < 1e-9 * lu.log_modulus().abs().max(1.0), "n = {n}");
    }
}

#[test]
fn lu_and_recursion_agree_on_fh_symbols() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..5 {
        let f = random_symbol(&mut rng, 3);
        let cf = Coeffs::of(&f, 25).unwrap();
        let op = szego_recursion(&cf, 24).unwrap();
        assert!(op.chi_residual < 1e-10, "{}", op.chi_residual);
        for n in [3, 8, 16, 24] {
            let (a, b) = (toeplitz_logdet(&cf, n), op.det(n));
            assert!((a.log_modulus() - b.log_modulus()).abs() < 1e-9 * a.log_modulus().abs().max(1.0));
            let dphi = (a.phase() - b.phase()).rem_euclid(2.0 * PI);
            assert!(dphi.min(2.0 * PI - dphi) < 1e-8);
        }
    }
}

#[test]
fn christoffel_darboux() {
    let f = FHSymbol::new(
        SmoothPart::from_pairs(&[(1, c(0.2, 0.0)), (-1, c(-0.1, 0.1))]),
        vec![
            Singularity::new(0.0, c(0.3, 0.0), c(0.1, 0.0)),
            Singularity::new(2.0, c(-0.2, 0.1), c(0.2, -0.1)),
            Singularity::new(4.1, c(0.4, 0.0), c(-0.25, 0.1)),
        ],
    )
    .unwrap();
    let cf = Coeffs::of(&f, 8).unwrap();
    let op = szego_recursion(&cf, 7).unwrap();
    let z = Complex64::from_polar(0.7, 0.3);
    let a = Complex64::from_polar(1.2, -1.1);
    assert!(cd_residual(&op, 6, z, a) < 1e-9);
    for t in [0.2, 1.7, 4.0] {
        assert!(cd_residual(&op, 6, Complex64::from_polar(1.0, t), a) < 1e-9);
    }
}

#[test]
fn hankel_lu_matches_expansion() {
    let w = HankelWeight::new(
        SmoothPart::cosine(0.2),
        vec![Node { lambda: 0.3, alpha: c(0.1, 0.1), beta: c(0.2, -0.1) }],
        c(0.25, 0.0),
        c(-0.1, 0.0),
    )
    .unwrap();
    let m = hankel_moments(&w, 6).unwrap();
    for n in 1..=4 {
        let mat: Vec<Vec<Complex64>> = (0..n).map(|j| (0..n).map(|k| m[j + k]).collect()).collect();
        let want = laplace(&mat);
        let got = hankel_logdet(&m, n).value.to_complex();
        assert!((got - want).norm() < 1e-12 * want.norm(), "n = {n}");
    }
}

fn legendre_dn(n: usize) -> f64 {
    // 2^{n²} Π_{k<n} k!³/(n+k)!
    let lf = |k: usize| (1..=k).map(|j| (j as f64).ln()).sum::<f64>();
    (n * n) as f64 * 2f64.ln() + (0..n).map(|k| 3.0 * lf(k) - lf(n + k)).sum::<f64>()
}

#[test]
fn constant_weight_hankel_closed_form() {
    let m = hankel_moments(&HankelWeight::one(), 12).unwrap();
    for n in 1..=6 {
        let d = hankel_logdet(&m, n);
        assert!((d.value.log_modulus() - legendre_dn(n)).abs() < 1e-7 * legendre_dn(n).abs().max(1.0), "n = {n}");
    }
    let big = hankel_moments(&HankelWeight::one(), 38).unwrap();
    assert!(hankel_logdet(&big, 20).warning.is_some());
}

#[test]
fn monic_recurrence_for_even_symbols() {
    let w = HankelWeight::new(SmoothPart::cosine(0.3), vec![Node { lambda: -0.2, alpha: c(0.2, 0.0), beta: c(0.15, 0.0) }], c(0.1, 0.0), c(0.0, 0.0))
        .unwrap();
    let f = circle_symbol_of_weight(&w).full();
    let cf = Coeffs::of(&f, 12).unwrap();
    let op = szego_recursion(&cf, 12).unwrap();
    for n in 0..12 {
        let a = -op.reflection(n + 1);
        let star = op.monic[n].reversed();
        for i in 0..=n + 1 {
            let rhs = if i > 0 { op.monic[n].coeff(i - 1) } else { c(0.0, 0.0) } - a * star.coeff(i);
            assert!((op.monic[n + 1].coeff(i) - rhs).norm() < 1e-12);
            // Φ*_{n+1} = Φ*_n − a_n z Φ_n
            let star1 = op.monic[n + 1].reversed();
            let rhs = star.coeff(i) - a * if i > 0 { op.monic[n].coeff(i - 1) } else { c(0.0, 0.0) };
            assert!((star1.coeff(i) - rhs).norm() < 1e-12);
        }
        for i in 0..=n {
            assert!((op.monic[n].coeff(i) - op.hat_monic[n].coeff(i)).norm() < 1e-11);
        }
    }
}

#[test]
fn tph_small_cases() {
    let f = FHSymbol::pure(c(0.3, 0.0), c(0.0, 0.0));
    let cf = Coeffs::of(&f, 4).unwrap();
    assert!((tph_logdet(&cf, 1, TphVariant::Plus).to_complex() - 2.0 * cf.get(0)).norm() < 1e-15);
    for v in TphVariant::ALL {
        let (s, q) = v.hankel_part();
        let want = laplace(&(0..2).map(|j| (0..2).map(|k| cf.get(j - k) + s * cf.get(j + k + q)).collect()).collect::<Vec<_>>());
        assert!((tph_logdet(&cf, 2, v).to_complex() - want).norm() < 1e-14);
    }
}

#[test]
fn basor_tracy_odd_is_exactly_zero() {
    let cf = Coeffs::from_fn(12, |j| if j % 2 != 0 { c(-2.0 / (PI * j as f64), 0.0) } else { c(0.0, 0.0) });
    for n in [1, 3, 5, 7, 9, 11] {
        assert_eq!(toeplitz_logdet(&cf, n), LogScaled::Zero, "n = {n}");
    }
    assert!(szego_recursion(&cf, 4).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn recursion_reproduces_lu_on_random_laurent_data(
        seed in 0u64..1000, n in 2usize..12
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Diagonally dominant coefficients keep every D_k away from zero.
        let vals: Vec<Complex64> = (-(n as i64)..=n as i64)
            .map(|j| if j == 0 { c(3.0, 0.5) } else { c(rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3)) / (1 + j.abs()) as f64 })
            .collect();
        let cf = Coeffs::new(vals);
        let op = szego_recursion(&cf, n).unwrap();
        prop_assert!(op.chi_residual < 1e-10);
        let a = toeplitz_logdet(&cf, n);
        let b = op.det(n);
        let d = (a.phase() - b.phase()).rem_euclid(2.0 * PI);
        prop_assert!((a.log_modulus() - b.log_modulus()).abs() < 1e-9);
        prop_assert!(d.min(2.0 * PI - d) < 1e-8);
    }

    #[test]
    fn transpose_symmetry(seed in 0u64..1000, n in 1usize..8) {
        // det(f_{j−k}) = det(f_{k−j})
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cf = Coeffs::new((0..2 * n + 1).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect());
        let rev = Coeffs::from_fn(n, |j| cf.get(-j));
        let (a, b) = (toeplitz_logdet(&cf, n), toeplitz_logdet(&rev, n));
        prop_assert!((a.to_complex() - b.to_complex()).norm() < 1e-10 * a.to_complex().norm().max(1e-3));
    }
}
