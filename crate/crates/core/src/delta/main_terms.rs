use std::f64::consts::PI;

use super::WeightPair;

#[inline]
fn sgn_half(m: u32) -> f64 {
    if (m / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `(2i sin(t/2))^{-m}` for even m, which is real.
fn isin_pow(theta: f64, m: u32) -> f64 {
    sgn_half(m) * (2.0 * (theta / 2.0).sin()).powi(-(m as i32))
}

fn cos_pow(theta: f64, m: u32) -> f64 {
    (2.0 * (theta / 2.0).cos()).powi(-(m as i32))
}

/// Arc main term
/// `2cos((k-l)t/2) + 2cos(kt/2)(2i sin(t/2))^{-l} + 2cos(lt/2)(2i sin(t/2))^{-k}`.
pub fn m_main(wp: WeightPair, theta: f64) -> f64 {
    let (k, l) = (wp.k as f64, wp.l as f64);
    2.0 * ((k - l) * theta / 2.0).cos()
        + 2.0 * (k * theta / 2.0).cos() * isin_pow(theta, wp.l)
        + 2.0 * (l * theta / 2.0).cos() * isin_pow(theta, wp.k)
}

/// The main term together with the four secondary terms that come from the
/// `(2cos(t/2))^{-k}` pieces of F_k and F_l.
pub fn seven_term(wp: WeightPair, theta: f64) -> f64 {
    let (k, l) = (wp.k as f64, wp.l as f64);
    m_main(wp, theta)
        + 2.0 * (k * theta / 2.0).cos() * cos_pow(theta, wp.l)
        + 2.0 * (l * theta / 2.0).cos() * cos_pow(theta, wp.k)
        + cos_pow(theta, wp.k) * isin_pow(theta, wp.l)
        + cos_pow(theta, wp.l) * isin_pow(theta, wp.k)
}

/// M at the arc sample point theta_m = 2 m pi / (k - l) through the reduced form in
/// x = pi (r - j/6) / (12 n + j), m = 2n + r. Needs k > l.
pub fn m_main_at_sample(wp: WeightPair, m: u32) -> f64 {
    let (n, j) = (wp.n() as f64, wp.j() as f64);
    let d = wp.k - wp.l;
    let r = m as f64 - 2.0 * n;
    let x = PI * (r - j / 6.0) / (12.0 * n + j);
    let sr = if (m % 2) == 0 { 1.0 } else { -1.0 };
    let s = 2.0 * (PI / 6.0 + x).sin();
    let l = wp.l as f64;
    let inner = 1.0 + sr * sgn_half(d) * s.powi(-(d as i32));
    2.0 * sr * (1.0 + (l * PI / 6.0 + l * x).cos() * sgn_half(wp.l) * s.powi(-(wp.l as i32)) * inner)
}

/// Side main term with |z| = 1/(2 cos t):
/// `cos(lt) + cos(kt)/|z|^{k-l} + (2cos(kt)cos(lt) - cos((k+l)t))/|z|^k`.
pub fn p_main(wp: WeightPair, theta: f64) -> f64 {
    let (k, l) = (wp.k as f64, wp.l as f64);
    let c = 2.0 * theta.cos();
    let (ck, cl) = ((k * theta).cos(), (l * theta).cos());
    cl + ck * c.powi((wp.k - wp.l) as i32) + (2.0 * ck * cl - ((k + l) * theta).cos()) * c.powi(wp.k as i32)
}

/// `(-1)^d P` at the side sample point theta = pi (2q + d) / l through the reduced form
/// `1 + c^D cos(D pi/3 + D x) [1 + (-1)^d c^l]` with x = (pi/l)(d - a/3), c = 2cos(pi/3 + x),
/// D = k - l.
pub fn p_main_at_sample(wp: WeightPair, d: u32) -> f64 {
    let l = wp.l as f64;
    let dd = (wp.k - wp.l) as f64;
    let x = PI / l * (d as f64 - wp.a() as f64 / 3.0);
    let c = 2.0 * (PI / 3.0 + x).cos();
    let sd = if d % 2 == 0 { 1.0 } else { -1.0 };
    1.0 + c.powi((wp.k - wp.l) as i32) * (dd * PI / 3.0 + dd * x).cos() * (1.0 + sd * c.powi(wp.l as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wp(k: u32, l: u32) -> WeightPair {
        WeightPair::new(k, l).unwrap()
    }

    #[test]
    fn reduced_arc_form() {
        for l in (14..=60).step_by(2) {
            for k in (l + 2..=l + 80).step_by(2) {
                let p = wp(k, l);
                let (n, j) = (p.n(), p.j());
                for m in (2 * n + 1)..=(3 * n + 3) {
                    let th = 2.0 * m as f64 * PI / (k - l) as f64;
                    if 6 * m <= 12 * n + j || 4 * m > 12 * n + j {
                        continue;
                    }
                    let a = m_main(p, th);
                    let b = m_main_at_sample(p, m);
                    assert!((a - b).abs() < 1e-12 * a.abs().max(1.0), "({k},{l}) m={m} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn reduced_side_form() {
        for l in (14..=60).step_by(2) {
            let p0 = wp(l, l);
            for k in (l..=l + 80).step_by(2) {
                let p = wp(k, l);
                for d in 1..=(p0.q() + 1) {
                    let th = PI * (2 * p.q() + d) as f64 / l as f64;
                    if th >= PI / 2.0 || th <= PI / 3.0 {
                        continue;
                    }
                    let sd = if d % 2 == 0 { 1.0 } else { -1.0 };
                    let a = sd * p_main(p, th);
                    let b = p_main_at_sample(p, d);
                    assert!((a - b).abs() < 1e-12 * a.abs().max(1.0), "({k},{l}) d={d} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn corner_values_known() {
        // l = 0 mod 6, j = 0 gives 6; l = 2 mod 6, j = 2 gives 3
        assert!((m_main(wp(36 + 24, 24), PI / 3.0) - 6.0).abs() < 1e-12);
        assert!((m_main(wp(20 + 14, 20), PI / 3.0) - 3.0).abs() < 1e-12);
        assert!((p_main(wp(30, 24), PI / 3.0) - 3.0).abs() < 1e-12);
        assert!((p_main(wp(26, 22), PI / 3.0) + 1.5).abs() < 1e-12);
    }
}
