use std::f64::consts::PI;
use std::ops::{Div, Mul};

use num_complex::Complex64;

/// Complex number stored as (ln |z|, arg z). Zero is `log_mag = -inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogComplex {
    pub log_mag: f64,
    pub phase: f64,
}

/// Reduce an angle to (-pi, pi].
pub fn wrap_phase(p: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut r = p % two_pi;
    if r <= -PI {
        r += two_pi;
    } else if r > PI {
        r -= two_pi;
    }
    r
}

impl LogComplex {
    pub const ZERO: LogComplex = LogComplex { log_mag: f64::NEG_INFINITY, phase: 0.0 };
    pub const ONE: LogComplex = LogComplex { log_mag: 0.0, phase: 0.0 };

    pub fn new(log_mag: f64, phase: f64) -> Self {
        LogComplex { log_mag, phase: wrap_phase(phase) }
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z.re == 0.0 && z.im == 0.0 {
            return Self::ZERO;
        }
        LogComplex { log_mag: z.norm().ln(), phase: z.arg() }
    }

    pub fn from_real(v: f64) -> Self {
        Self::from_complex(Complex64::new(v, 0.0))
    }

    pub fn is_zero(&self) -> bool {
        self.log_mag == f64::NEG_INFINITY
    }

    pub fn to_complex(&self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar(self.log_mag.exp(), self.phase)
    }

    pub fn powi(&self, n: i64) -> Self {
        if self.is_zero() {
            return if n == 0 { Self::ONE } else { Self::ZERO };
        }
        // n * phase loses absolute accuracy for huge n; reduce first
        let p = wrap_phase(self.phase * n as f64);
        LogComplex { log_mag: self.log_mag * n as f64, phase: p }
    }

    pub fn conj(&self) -> Self {
        LogComplex { log_mag: self.log_mag, phase: wrap_phase(-self.phase) }
    }

    pub fn scale_log(&self, ln_factor: f64) -> Self {
        LogComplex { log_mag: self.log_mag + ln_factor, phase: self.phase }
    }

    pub fn abs(&self) -> f64 {
        self.log_mag.exp()
    }
}

impl Mul for LogComplex {
    type Output = LogComplex;
    fn mul(self, o: LogComplex) -> LogComplex {
        if self.is_zero() || o.is_zero() {
            return LogComplex::ZERO;
        }
        LogComplex::new(self.log_mag + o.log_mag, self.phase + o.phase)
    }
}

impl Div for LogComplex {
    type Output = LogComplex;
    fn div(self, o: LogComplex) -> LogComplex {
        if self.is_zero() {
            return LogComplex::ZERO;
        }
        LogComplex::new(self.log_mag - o.log_mag, self.phase - o.phase)
    }
}

/// Accumulates a sum of [`LogComplex`] terms without overflow: terms are rescaled to the
/// running maximum magnitude.
#[derive(Debug, Clone)]
pub struct LogSum {
    scale: f64,
    acc: Complex64,
    comp: Complex64,
    abs_sum: f64,
}

impl Default for LogSum {
    fn default() -> Self {
        Self::new()
    }
}

impl LogSum {
    pub fn new() -> Self {
        LogSum {
            scale: f64::NEG_INFINITY,
            acc: Complex64::new(0.0, 0.0),
            comp: Complex64::new(0.0, 0.0),
            abs_sum: 0.0,
        }
    }

    pub fn add(&mut self, t: LogComplex) {
        if t.is_zero() {
            return;
        }
        if t.log_mag > self.scale {
            let f = if self.scale == f64::NEG_INFINITY { 0.0 } else { (self.scale - t.log_mag).exp() };
            self.acc *= f;
            self.comp *= f;
            self.abs_sum *= f;
            self.scale = t.log_mag;
        }
        let v = Complex64::from_polar((t.log_mag - self.scale).exp(), t.phase);
        // Neumaier on each component
        let s = self.acc + v;
        let c_re = if self.acc.re.abs() >= v.re.abs() { (self.acc.re - s.re) + v.re } else { (v.re - s.re) + self.acc.re };
        let c_im = if self.acc.im.abs() >= v.im.abs() { (self.acc.im - s.im) + v.im } else { (v.im - s.im) + self.acc.im };
        self.acc = s;
        self.comp += Complex64::new(c_re, c_im);
        self.abs_sum += v.norm();
    }

    pub fn value(&self) -> LogComplex {
        if self.scale == f64::NEG_INFINITY {
            return LogComplex::ZERO;
        }
        LogComplex::from_complex(self.acc + self.comp).scale_log(self.scale)
    }

    /// ln of the sum of term magnitudes (for rounding-error estimates).
    pub fn ln_abs_sum(&self) -> f64 {
        if self.scale == f64::NEG_INFINITY {
            return f64::NEG_INFINITY;
        }
        self.abs_sum.ln() + self.scale
    }
}
