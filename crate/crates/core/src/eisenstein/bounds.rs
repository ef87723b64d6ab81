use num_complex::Complex64;

use super::UpperHalfPoint;

/// |z|^k sum_{|c| >= 2, |d| >= 1} |cz + d|^{-k}, summed directly (all pairs, not only coprime).
pub fn c_ge2_tail(k: u32, z: UpperHalfPoint) -> f64 {
    let zc = z.z();
    let r = zc.norm();
    let kf = k as f64;
    let mut total = 0.0;
    let mut c = 2i64;
    loop {
        let mut row = 0.0;
        let center = (-(c as f64) * z.x).round() as i64;
        for dir in [1i64, -1] {
            let mut d = if dir == 1 { center } else { center - 1 };
            loop {
                if d != 0 {
                    let w = Complex64::new(c as f64 * z.x + d as f64, c as f64 * z.y);
                    let t = (r / w.norm()).powf(kf);
                    row += t;
                    if t < 1e-30 * (row + total) && (d - center).abs() > 2 {
                        break;
                    }
                }
                d += dir;
            }
        }
        total += 2.0 * row;
        if 2.0 * row < 1e-20 * total || c > 100_000 {
            break;
        }
        c += 1;
    }
    total
}

/// 3^{-k/2} (1 + y / sqrt k)
pub fn c_tail_envelope(k: u32, y: f64) -> f64 {
    let kf = k as f64;
    3f64.powf(-kf / 2.0) * (1.0 + y / kf.sqrt())
}

/// |z|^k sum_{|d| >= big_d} |z + d|^{-k}
pub fn d_tail(k: u32, z: UpperHalfPoint, big_d: u32) -> f64 {
    let zc = z.z();
    let r = zc.norm();
    let kf = k as f64;
    let mut total = 0.0;
    for dir in [1.0, -1.0] {
        let mut d = big_d as f64;
        loop {
            let t = (r / (zc + dir * d).norm()).powf(kf);
            total += t;
            if t < 1e-30 * total || d > 1e7 {
                break;
            }
            d += 1.0;
        }
    }
    total
}

/// y ((1/4 + y^2) / ((D - 1/2)^2 + y^2))^{k/2}
pub fn d_tail_envelope(k: u32, y: f64, big_d: u32) -> f64 {
    let dd = big_d as f64 - 0.5;
    y * ((0.25 + y * y) / (dd * dd + y * y)).powf(k as f64 / 2.0)
}
