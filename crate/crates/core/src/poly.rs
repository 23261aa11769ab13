//! Dense polynomials with complex coefficients, lowest degree first.

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<Complex64>);

impl Poly {
    pub fn one() -> Self {
        Poly(vec![Complex64::new(1.0, 0.0)])
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Complex64 {
        self.0.get(i).copied().unwrap_or_default()
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.0
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.0.len() <= 1 {
            return Poly(vec![Complex64::new(0.0, 0.0)]);
        }
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as f64)
                .collect(),
        )
    }

    /// `z^d p(1/z)` for `d = degree`, i.e. the coefficient-reversed polynomial.
    pub fn reversed(&self) -> Poly {
        Poly(self.0.iter().rev().copied().collect())
    }

    /// Value of the k-th derivative at 0, `k! * c_k`.
    pub fn derivative_at_zero(&self, k: usize) -> Complex64 {
        let fact: f64 = (1..=k).map(|j| j as f64).product();
        self.coeff(k) * fact
    }
}
