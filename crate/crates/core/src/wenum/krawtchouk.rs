//! Generalized Krawtchouk polynomials P_j(i; m, n).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{alpha_r, gauss_r, qpow, sigma_i, sign};
use crate::error::{Error, Result};

/// Closed form for any integer m:
/// sum_l [i l][n-i j-l] (-1)^l q^{sigma_l} q^{l(n-i)} alpha(m-l, j-l).
pub fn krawtchouk_rational(q: u32, j: i64, i: i64, m: i64, n: i64) -> BigRational {
    let mut acc = BigRational::zero();
    for l in 0..=j.max(0) {
        let g = gauss_r(q, i, l) * gauss_r(q, n - i, j - l);
        if g.is_zero() {
            continue;
        }
        acc += g * sign(l) * qpow(q, sigma_i(l) + l * (n - i)) * alpha_r(q, m - l, j - l);
    }
    acc
}

/// P_j(i; m, n) for 0 <= i, j <= n.
pub fn krawtchouk(q: u32, j: u32, i: u32, m: u32, n: u32) -> Result<BigInt> {
    if i > n || j > n {
        return Err(Error::OutOfRange(format!("P_{j}({i}; {m}, {n})")));
    }
    let v = krawtchouk_rational(q, j as i64, i as i64, m as i64, n as i64);
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::NonIntegral(format!("P_{j}({i}; {m}, {n}) = {v}")))
    }
}

/// The same values by recursion on (i, m, n):
/// P_j(i; m, n) = q^j P_j(i-1; m-1, n-1) - q^{j-1} P_{j-1}(i-1; m-1, n-1),
/// starting from P_j(0; m, n) = [n j] alpha(m, j).
pub fn krawtchouk_recurrence(q: u32, j: i64, i: i64, m: i64, n: i64) -> BigRational {
    if j < 0 || j > n {
        return BigRational::zero();
    }
    if i == 0 {
        return gauss_r(q, n, j) * alpha_r(q, m, j);
    }
    qpow(q, j) * krawtchouk_recurrence(q, j, i - 1, m - 1, n - 1)
        - qpow(q, j - 1) * krawtchouk_recurrence(q, j - 1, i - 1, m - 1, n - 1)
}

/// All P_j(i; m, n), indexed [j][i].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrawtchoukTable {
    q: u32,
    m: u32,
    n: u32,
    values: Vec<Vec<BigInt>>,
}

type Cache = Mutex<HashMap<(u32, u32, u32), Arc<KrawtchoukTable>>>;

impl KrawtchoukTable {
    pub fn new(q: u32, m: u32, n: u32) -> Result<Self> {
        let values = (0..=n)
            .map(|j| (0..=n).map(|i| krawtchouk(q, j, i, m, n)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(KrawtchoukTable { q, m, n, values })
    }

    /// Shared table for (q, m, n), built once per process.
    pub fn cached(q: u32, m: u32, n: u32) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(Cache::default);
        if let Some(t) = cache.lock().unwrap().get(&(q, m, n)) {
            return Ok(t.clone());
        }
        let t = Arc::new(KrawtchoukTable::new(q, m, n)?);
        cache.lock().unwrap().insert((q, m, n), t.clone());
        Ok(t)
    }

    pub fn params(&self) -> (u32, u32, u32) {
        (self.q, self.m, self.n)
    }

    pub fn get(&self, j: usize, i: usize) -> &BigInt {
        &self.values[j][i]
    }
}

/// sum_i [j i] (-1)^i q^{sigma_i} alpha(m-i, nu) against alpha(nu, j) alpha(m-j, nu-j) q^{j(m-j)}.
pub fn delta_sum_identity(q: u32, m: i64, nu: i64, j: i64) -> (BigRational, BigRational) {
    let lhs = (0..=j).fold(BigRational::zero(), |acc, i| {
        acc + gauss_r(q, j, i) * sign(i) * qpow(q, sigma_i(i)) * alpha_r(q, m - i, nu)
    });
    let rhs = alpha_r(q, nu, j) * alpha_r(q, m - j, nu - j) * qpow(q, j * (m - j));
    (lhs, rhs)
}

/// sum_l [j l][n-j nu-l] q^{l(n-nu)} (-1)^l q^{sigma_l} alpha(nu-l, j-l)
/// against (-1)^j q^{sigma_j} [n-j n-nu].
pub fn theta_sum_identity(q: u32, n: i64, nu: i64, j: i64) -> (BigRational, BigRational) {
    let lhs = (0..=j).fold(BigRational::zero(), |acc, l| {
        acc + gauss_r(q, j, l)
            * gauss_r(q, n - j, nu - l)
            * qpow(q, l * (n - nu) + sigma_i(l))
            * sign(l)
            * alpha_r(q, nu - l, j - l)
    });
    let rhs = sign(j) * qpow(q, sigma_i(j)) * gauss_r(q, n - j, n - nu);
    (lhs, rhs)
}
