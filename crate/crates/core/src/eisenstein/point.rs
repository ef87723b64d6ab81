use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point z = x + iy of the upper half plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UpperHalfPoint {
    pub x: f64,
    pub y: f64,
}

impl UpperHalfPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(y > 0.0) || !x.is_finite() || !y.is_finite() {
            return Err(Error::NotInUpperHalfPlane(y));
        }
        Ok(UpperHalfPoint { x, y })
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        Self::new(r * theta.cos(), r * theta.sin())
    }

    /// e^{i theta} on the unit circle.
    pub fn on_arc(theta: f64) -> Self {
        UpperHalfPoint { x: theta.cos(), y: theta.sin() }
    }

    /// 1/2 + iy on the right side of the fundamental domain.
    pub fn on_side(y: f64) -> Self {
        UpperHalfPoint { x: 0.5, y }
    }

    pub fn rho() -> Self {
        Self::on_arc(std::f64::consts::FRAC_PI_3)
    }

    pub fn i() -> Self {
        UpperHalfPoint { x: 0.0, y: 1.0 }
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    pub fn r(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn theta(&self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Standard fundamental domain, with a small tolerance for boundary points.
    pub fn in_f(&self) -> bool {
        self.x.abs() <= 0.5 + 1e-12 && self.x * self.x + self.y * self.y >= 1.0 - 1e-12
    }

    /// The widened strip 2/5 <= x <= 3/5, 2^{-1/2} <= y <= 1 around the corner.
    pub fn in_corner_strip(&self) -> bool {
        (0.4..=0.6).contains(&self.x) && (std::f64::consts::FRAC_1_SQRT_2..=1.0).contains(&self.y)
    }
}

impl From<UpperHalfPoint> for Complex64 {
    fn from(p: UpperHalfPoint) -> Complex64 {
        p.z()
    }
}
