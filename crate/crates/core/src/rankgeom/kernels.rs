//! Exact counting kernels: Gaussian binomials, alpha, beta, sigma, and rank-ball sizes.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn pow(q: u32, e: u64) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// Gaussian binomial [n k]_q; zero outside 0 <= k <= n.
pub fn gaussian(q: u32, n: i64, k: i64) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u32;
    let n = n as u32;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= pow(q, (n - i) as u64) - 1u32;
        den *= pow(q, (i + 1) as u64) - 1u32;
    }
    num / den
}

/// alpha(m, u) = prod_{i<u} (q^m - q^i); zero once u > m.
pub fn alpha(q: u32, m: u32, u: u32) -> BigUint {
    if u > m {
        return BigUint::zero();
    }
    let qm = pow(q, m as u64);
    (0..u).fold(BigUint::one(), |acc, i| acc * (&qm - pow(q, i as u64)))
}

/// beta(m, u) = prod_{i<u} [m-i 1].
pub fn beta(q: u32, m: i64, u: u32) -> BigUint {
    (0..u as i64).fold(BigUint::one(), |acc, i| acc * gaussian(q, m - i, 1))
}

/// sigma_i = i(i-1)/2.
pub fn sigma(i: u64) -> u64 {
    i * i.saturating_sub(1) / 2
}

/// sigma(q) = (1/ln q) sum_{k>=1} 1/(k(q^k - 1)), summed until the tail bound
/// drops below 1e-13.
pub fn sigma_q(q: u32) -> f64 {
    let qf = q as f64;
    let mut sum = 0.0;
    let mut qk = 1.0;
    for k in 1.. {
        qk *= qf;
        sum += 1.0 / (k as f64 * (qk - 1.0));
        // sum_{j>k} 1/(j(q^j-1)) <= 2 / ((k+1)(q-1) q^k)
        let tail = 2.0 / ((k as f64 + 1.0) * (qf - 1.0) * qk);
        if tail < 1e-13 {
            break;
        }
    }
    sum / qf.ln()
}

/// tau(q) = log_q(q^2 / (q^2 - 1)).
pub fn tau_q(q: u32) -> f64 {
    let q2 = (q as f64).powi(2);
    (q2 / (q2 - 1.0)).ln() / (q as f64).ln()
}

/// N_u = [n u] alpha(m, u): vectors of rank exactly u in GF(q^m)^n.
pub fn rank_count(q: u32, m: u32, n: u32, u: u32) -> BigUint {
    gaussian(q, n as i64, u as i64) * alpha(q, m, u)
}

/// V_r = sum_{u<=r} N_u, for any r >= 0 (saturates at the whole space).
pub fn ball_volume(q: u32, m: u32, n: u32, r: u32) -> BigUint {
    (0..=r.min(m.min(n))).map(|u| rank_count(q, m, n, u)).sum()
}

/// (N_r, V_r) for 0 <= r <= min(m, n).
pub fn ball_counts(q: u32, m: u32, n: u32, r: u32) -> Result<(BigUint, BigUint)> {
    if r > m.min(n) {
        return Err(Error::OutOfRange(format!("radius {r} for min(m, n) = {}", m.min(n))));
    }
    Ok((rank_count(q, m, n, r), ball_volume(q, m, n, r)))
}

/// q^{r(m+n-r)} <= V_r < q^{r(m+n-r)+sigma(q)}.
#[derive(Clone, Debug, PartialEq)]
pub struct VolumeBounds {
    pub lower: BigUint,
    /// r(m+n-r) + sigma(q), the base-q logarithm of the upper bound.
    pub upper_log: f64,
    pub upper: f64,
}

pub fn ball_volume_bounds(q: u32, m: u32, n: u32, r: u32) -> Result<VolumeBounds> {
    if r > m.min(n) {
        return Err(Error::OutOfRange(format!("radius {r} for min(m, n) = {}", m.min(n))));
    }
    let e = (r * (m + n - r)) as u64;
    let upper_log = e as f64 + sigma_q(q);
    Ok(VolumeBounds { lower: pow(q, e), upper_log, upper: (q as f64).powf(upper_log) })
}

/// log_q of a big integer.
pub fn log_q(q: u32, x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        x.to_f64().unwrap().ln() / (q as f64).ln()
    } else {
        let shift = bits - 900;
        let top = (x >> shift).to_f64().unwrap();
        (top.ln() + shift as f64 * std::f64::consts::LN_2) / (q as f64).ln()
    }
}
