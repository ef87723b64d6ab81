use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

/// Arguments of the Jacobi theta function theta(w, tau) = sum_n exp(pi i n^2 tau + 2 pi i n w).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaArgs {
    pub w: Complex64,
    pub tau: Complex64,
}

impl ThetaArgs {
    pub fn new(w: Complex64, tau: Complex64) -> Result<Self> {
        if !(tau.im > 0.0) {
            return Err(Error::InvalidArgument(format!("Im tau must be positive, got {}", tau.im)));
        }
        Ok(ThetaArgs { w, tau })
    }

    /// The specialisation `theta(k/(2 pi y) + ix/r, i/r)` with r = 2 pi y^2 / k.
    pub fn eisenstein(k: u32, x: f64, y: f64) -> Self {
        let r = 2.0 * PI * y * y / k as f64;
        ThetaArgs { w: Complex64::new(k as f64 / (2.0 * PI * y), x / r), tau: Complex64::new(0.0, 1.0 / r) }
    }
}

/// Sum from the peak of the Gaussian outwards; stop each direction once terms drop
/// below `eps * (|partial| + 1)`.
pub fn jacobi_theta(args: ThetaArgs, eps: f64) -> Result<Complex64> {
    let ThetaArgs { w, tau } = args;
    if !(tau.im > 0.0) {
        return Err(Error::InvalidArgument(format!("Im tau must be positive, got {}", tau.im)));
    }
    let expo = |n: f64| Complex64::new(0.0, PI) * (n * n * tau + 2.0 * n * w);
    let n0 = (-w.im / tau.im).round();
    let shift = expo(n0).re;
    let mut sum = (expo(n0) - shift).exp();
    for dir in [1.0, -1.0] {
        let mut i = 1.0;
        loop {
            let e = expo(n0 + dir * i) - shift;
            let t = e.exp();
            sum += t;
            // magnitudes decrease monotonically away from the peak
            if t.norm() < eps * (sum.norm() + 1.0) && i > 2.0 {
                break;
            }
            i += 1.0;
            if i > 1e7 {
                break;
            }
        }
    }
    Ok(sum * shift.exp())
}
