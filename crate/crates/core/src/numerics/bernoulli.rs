use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ln_gamma, LogComplex};
use crate::{Error, Result};

/// Exact rational in lowest terms with positive denominator.
pub type ExactRational = BigRational;

pub const BERNOULLI_MAX: u32 = 400;

fn table() -> &'static Vec<BigRational> {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0, with B_1 = -1/2 and B_odd = 0 beyond.
        let n = BERNOULLI_MAX as usize;
        let mut b: Vec<BigRational> = vec![BigRational::zero(); n + 1];
        b[0] = BigRational::one();
        b[1] = BigRational::new(BigInt::from(-1), BigInt::from(2));
        // binomial row C(m+1, .) rebuilt incrementally
        let mut row: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
        for m in 1..=n {
            // row currently holds C(m, .); advance to C(m+1, .)
            let mut next = vec![BigInt::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
            if m < 2 || m % 2 == 1 {
                continue;
            }
            let mut acc = BigRational::zero();
            for (jj, bj) in b.iter().enumerate().take(m) {
                if bj.is_zero() {
                    continue;
                }
                acc += bj * BigRational::from_integer(row[jj].clone());
            }
            b[m] = -acc / BigRational::from_integer(BigInt::from(m as u64 + 1));
        }
        b
    })
}

/// Exact Bernoulli number `B_k` for even `2 <= k <= 400`.
pub fn bernoulli(k: u32) -> Result<ExactRational> {
    if k % 2 == 1 {
        return Err(Error::OddWeight(k as i64));
    }
    if !(2..=BERNOULLI_MAX).contains(&k) {
        return Err(Error::WeightRange { k: k as i64, lo: 2, hi: BERNOULLI_MAX as i64 });
    }
    Ok(table()[k as usize].clone())
}

fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.abs().to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    let top: BigInt = n.abs() >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of |q|. Returns -inf for zero.
pub fn ln_abs_rational(q: &BigRational) -> f64 {
    if q.is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_bigint(q.numer()) - ln_bigint(q.denom())
}

/// Normalising constant `gamma_k = -2k / B_k` of the Fourier expansion, returned as a
/// signed log-magnitude (phase 0 or pi).
pub fn gamma_k(k: u32) -> Result<LogComplex> {
    if k % 2 == 1 {
        return Err(Error::OddWeight(k as i64));
    }
    if k < 4 {
        return Err(Error::WeightRange { k: k as i64, lo: 4, hi: BERNOULLI_MAX as i64 });
    }
    let b = bernoulli(k)?;
    let g = BigRational::from_integer(BigInt::from(-2 * k as i64)) / b;
    let phase = if g.is_negative() { std::f64::consts::PI } else { 0.0 };
    Ok(LogComplex::new(ln_abs_rational(&g), phase))
}

/// `(-1)^{k/2} (2 pi)^k / (Gamma(k) zeta(k))` evaluated in log space. Valid for any even
/// `k >= 4`, including weights beyond the exact table.
pub fn gamma_k_analytic(k: u32) -> LogComplex {
    let kf = k as f64;
    let lm = kf * (2.0 * std::f64::consts::PI).ln() - ln_gamma(kf) - super::zeta(kf).ln();
    let phase = if (k / 2) % 2 == 1 { std::f64::consts::PI } else { 0.0 };
    LogComplex::new(lm, phase)
}

#[allow(dead_code)]
fn is_lowest_terms(q: &BigRational) -> bool {
    q.numer().gcd(q.denom()).is_one() && q.denom().is_positive()
}
