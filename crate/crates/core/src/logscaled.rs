use num_complex::Complex64;
use std::f64::consts::PI;
use std::ops::{Div, Mul};

/// A complex number stored as `exp(log_modulus + i*phase)`.
///
/// The phase is never reduced modulo 2π: products add phases, so a chain of
/// factors keeps a continuous, unwrapped argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LogScaled {
    Zero,
    Value { log_modulus: f64, phase: f64 },
}

impl LogScaled {
    pub const ONE: LogScaled = LogScaled::Value {
        log_modulus: 0.0,
        phase: 0.0,
    };

    pub fn new(log_modulus: f64, phase: f64) -> Self {
        LogScaled::Value { log_modulus, phase }
    }

    /// `exp(w)` for a complex logarithm `w`.
    pub fn from_log(w: Complex64) -> Self {
        LogScaled::new(w.re, w.im)
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z == Complex64::new(0.0, 0.0) {
            LogScaled::Zero
        } else {
            LogScaled::new(z.norm().ln(), z.arg())
        }
    }

    pub fn from_real(x: f64) -> Self {
        Self::from_complex(Complex64::new(x, 0.0))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, LogScaled::Zero)
    }

    /// Complex logarithm with the unwrapped phase as imaginary part.
    pub fn ln(&self) -> Option<Complex64> {
        match *self {
            LogScaled::Zero => None,
            LogScaled::Value { log_modulus, phase } => Some(Complex64::new(log_modulus, phase)),
        }
    }

    pub fn log_modulus(&self) -> f64 {
        match *self {
            LogScaled::Zero => f64::NEG_INFINITY,
            LogScaled::Value { log_modulus, .. } => log_modulus,
        }
    }

    pub fn phase(&self) -> f64 {
        match *self {
            LogScaled::Zero => 0.0,
            LogScaled::Value { phase, .. } => phase,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match *self {
            LogScaled::Zero => Complex64::new(0.0, 0.0),
            LogScaled::Value { log_modulus, phase } => Complex64::from_polar(log_modulus.exp(), phase),
        }
    }

    pub fn powi(&self, k: i64) -> Self {
        match *self {
            LogScaled::Zero if k > 0 => LogScaled::Zero,
            LogScaled::Zero => LogScaled::ONE,
            LogScaled::Value { log_modulus, phase } => {
                LogScaled::new(log_modulus * k as f64, phase * k as f64)
            }
        }
    }

    /// Square root taking half the unwrapped phase.
    pub fn sqrt(&self) -> Self {
        match *self {
            LogScaled::Zero => LogScaled::Zero,
            LogScaled::Value { log_modulus, phase } => LogScaled::new(0.5 * log_modulus, 0.5 * phase),
        }
    }

    pub fn neg(&self) -> Self {
        match *self {
            LogScaled::Zero => LogScaled::Zero,
            LogScaled::Value { log_modulus, phase } => LogScaled::new(log_modulus, phase + PI),
        }
    }

    /// `self / other` as a plain complex number; `None` if `other` is zero.
    pub fn ratio(&self, other: &LogScaled) -> Option<Complex64> {
        match (self, other) {
            (_, LogScaled::Zero) => None,
            (LogScaled::Zero, _) => Some(Complex64::new(0.0, 0.0)),
            _ => Some((*self / *other).to_complex()),
        }
    }

    /// Sum of two values. Results whose modulus cancels below `rel_floor`
    /// times the larger summand are reported as `Zero`.
    pub fn add(&self, other: &LogScaled, rel_floor: f64) -> Self {
        let (a, b) = match (self, other) {
            (LogScaled::Zero, x) | (x, LogScaled::Zero) => return *x,
            (a, b) if a.log_modulus() >= b.log_modulus() => (*a, *b),
            (a, b) => (*b, *a),
        };
        let r = (b / a).to_complex();
        let s = Complex64::new(1.0, 0.0) + r;
        if s.norm() <= rel_floor {
            return LogScaled::Zero;
        }
        a * LogScaled::new(s.norm().ln(), s.arg())
    }

    /// Relative residual `|self/other - 1|`, with exact-zero agreement mapped to 0.
    pub fn relative_residual(&self, other: &LogScaled) -> f64 {
        match (self, other) {
            (LogScaled::Zero, LogScaled::Zero) => 0.0,
            (LogScaled::Zero, _) | (_, LogScaled::Zero) => f64::INFINITY,
            _ => {
                let q = *self / *other;
                let w = Complex64::new(q.log_modulus(), q.phase());
                (w.exp() - 1.0).norm()
            }
        }
    }
}

impl Mul for LogScaled {
    type Output = LogScaled;
    fn mul(self, rhs: LogScaled) -> LogScaled {
        match (self, rhs) {
            (LogScaled::Zero, _) | (_, LogScaled::Zero) => LogScaled::Zero,
            (
                LogScaled::Value { log_modulus: a, phase: p },
                LogScaled::Value { log_modulus: b, phase: q },
            ) => LogScaled::new(a + b, p + q),
        }
    }
}

impl Div for LogScaled {
    type Output = LogScaled;
    fn div(self, rhs: LogScaled) -> LogScaled {
        match (self, rhs) {
            (LogScaled::Zero, _) => LogScaled::Zero,
            (_, LogScaled::Zero) => LogScaled::new(f64::INFINITY, 0.0),
            (
                LogScaled::Value { log_modulus: a, phase: p },
                LogScaled::Value { log_modulus: b, phase: q },
            ) => LogScaled::new(a - b, p - q),
        }
    }
}

impl std::iter::Product for LogScaled {
    fn product<I: Iterator<Item = LogScaled>>(iter: I) -> LogScaled {
        iter.fold(LogScaled::ONE, |a, b| a * b)
    }
}
