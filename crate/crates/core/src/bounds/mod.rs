//! Packing and covering bounds for rank-metric codes.
//!
//! Lower bounds on K_R(q^m, n, rho) are tagged `a` (sphere covering), `b`
//! (Cohen-style, via the packing bound at distance 2 rho + 1) and `c` (excess).
//! Upper bounds are tagged `A` (q^{m(n-rho)}), `B` (MRD embedding), `C` (mixed
//! constructions), `D` (probabilistic) and `E` (greedy, Johnson-Stein-Lovasz).

pub mod reference;
pub mod table;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rankgeom::kernels::{ball_volume, gaussian, pow, rank_count};

pub use table::{covering_table, format_cell, linear_dim_bounds, linear_table, TableCell};

/// Largest K for which q^K stays within exact-scan range when evaluating D.
pub const EXACT_D_LIMIT: u64 = 4096;

/// A_R(q^m, n, d): the largest size of a code with minimum rank distance d.
pub fn singleton_max_cardinality(q: u32, m: u32, n: u32, d: u32) -> Result<BigUint> {
    if d < 1 {
        return Err(Error::OutOfRange("minimum distance must be at least 1".into()));
    }
    if d > m.min(n) {
        return Ok(BigUint::one());
    }
    Ok(pow(q, (m * (n - d + 1)) as u64).min(pow(q, (n * (m - d + 1)) as u64)))
}

fn check_unit(x: f64, b: f64) -> Result<()> {
    if b.is_nan() || b <= 0.0 || !(0.0..=1.0f64.min(1.0 / b)).contains(&x) {
        return Err(Error::OutOfRange(format!("argument {x} with b = {b}")));
    }
    Ok(())
}

/// a(delta) = min(1 - delta, 1 - b delta).
pub fn packing_asymptote(delta: f64, b: f64) -> Result<f64> {
    check_unit(delta, b)?;
    Ok((1.0 - delta).min(1.0 - b * delta))
}

/// v(delta) = delta (1 + b - b delta).
pub fn volume_asymptote(delta: f64, b: f64) -> Result<f64> {
    check_unit(delta, b)?;
    Ok(delta * (1.0 + b - b * delta))
}

/// k(r) = (1 - r)(1 - b r).
pub fn covering_rate_asymptote(r: f64, b: f64) -> Result<f64> {
    check_unit(r, b)?;
    Ok((1.0 - r) * (1.0 - b * r))
}

fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    a.div_ceil(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBounds {
    /// a: floor(q^{mn} / V_rho) + 1
    pub sphere_covering: BigUint,
    /// b: only when its denominator is positive
    pub cohen: Option<BigUint>,
    /// c: only when epsilon > 0
    pub excess: Option<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperBounds {
    /// A
    pub trivial: BigUint,
    /// B
    pub mrd_embed: BigUint,
    /// C: `None` when no composition is feasible
    pub mixed: Option<BigUint>,
    /// D
    pub probabilistic: BigUint,
    /// E
    pub jsl: BigUint,
    /// D or E fell within floating-point error of an integer boundary, or past
    /// the range where f64 holds every integer
    pub near_boundary: bool,
}

fn check_rho(n: u32, rho: u32) -> Result<()> {
    if rho == 0 || rho >= n {
        return Err(Error::OutOfRange(format!("rho = {rho} must satisfy 0 < rho < n = {n}")));
    }
    Ok(())
}

/// epsilon, the guaranteed excess on a radius-one ball.
pub fn excess_epsilon(q: u32, m: u32, n: u32, rho: u32) -> BigUint {
    let qm = pow(q, m as u64);
    let qr = pow(q, rho as u64);
    if qm <= qr {
        return BigUint::zero();
    }
    let (gn, gr) = (gaussian(q, n as i64, 1), gaussian(q, rho as i64, 1));
    let t = &qr * gaussian(q, rho as i64 + 1, 1);
    let d = &qm - &qr;
    // (q^m - q^rho)([n 1] - [rho 1]) rounded up to a multiple of t, minus itself
    let k = if gn >= gr { &d * (&gn - &gr) } else { BigUint::zero() };
    let up = ceil_div(&k, &t) * &t;
    up - k
}

pub fn covering_lower(q: u32, m: u32, n: u32, rho: u32) -> Result<LowerBounds> {
    check_rho(n, rho)?;
    let qq = pow(q, (m * n) as u64);
    let v = ball_volume(q, m, n, rho);
    let sphere_covering = &qq / &v + 1u32;

    let mid = pow(q, (rho * rho) as u64) * gaussian(q, 2 * rho as i64, rho as i64);
    let cohen = (v > mid).then(|| {
        let a = singleton_max_cardinality(q, m, n, 2 * rho + 1).expect("d >= 1");
        let sub = a * &mid;
        let num = if qq > sub { &qq - sub } else { BigUint::zero() };
        ceil_div(&num, &(&v - &mid))
    });

    let eps = excess_epsilon(q, m, n, rho);
    let excess = (!eps.is_zero()).then(|| {
        let v1 = ball_volume(q, m, n, 1);
        let delta = v1 + 2u32 * &eps - pow(q, rho as u64 - 1) * gaussian(q, rho as i64, 1) - 1u32;
        let den = &v * &delta - &eps * rank_count(q, m, n, rho);
        ceil_div(&(&qq * &delta), &den)
    });
    Ok(LowerBounds { sphere_covering, cohen, excess })
}

/// Largest total sum rho_i (n_i - rho_i) over multisets of parts (n_i, rho_i)
/// with 0 < n_i, 0 <= rho_i <= n_i, n_i + rho_i <= m, sum n_i = n, sum rho_i = rho.
pub fn best_composition(m: u32, n: u32, rho: u32) -> Option<(u32, Vec<(u32, u32)>)> {
    fn rec(
        m: u32,
        n: u32,
        r: u32,
        last: (u32, u32),
        cur: &mut Vec<(u32, u32)>,
        best: &mut Option<(u32, Vec<(u32, u32)>)>,
    ) {
        if n == 0 {
            if r == 0 {
                let s = cur.iter().map(|&(ni, ri)| ri * (ni - ri)).sum();
                if best.as_ref().map_or(true, |b| s > b.0) {
                    *best = Some((s, cur.clone()));
                }
            }
            return;
        }
        for ni in 1..=n {
            for ri in 0..=ni.min(r) {
                if ni + ri > m || (ni, ri) > last {
                    continue;
                }
                cur.push((ni, ri));
                rec(m, n - ni, r - ri, (ni, ri), cur, best);
                cur.pop();
            }
        }
    }
    let mut best = None;
    rec(m, n, rho, (u32::MAX, u32::MAX), &mut Vec::new(), &mut best);
    best
}

// the logarithms are good to a few ulp, so 1e-14 relative leaves a wide margin.
// Past 2^53 neighbouring doubles are whole numbers apart and the floor is a guess.
fn near_integer(x: f64) -> bool {
    x >= F64_EXACT_INT || (x - x.round()).abs() <= 1e-14 * x.abs().max(1.0)
}

const F64_EXACT_INT: f64 = 9007199254740992.0;

fn floor_big(x: f64) -> BigUint {
    BigUint::from_f64(x.floor()).expect("finite and non-negative")
}

/// D = max{K : Q^K <= Q (Q - V)^K} + 1, i.e. floor(ln Q / -ln(1 - V/Q)) + 1.
/// Returns the value and whether floating point was close to a boundary.
pub fn probabilistic_bound(qq: &BigUint, v: &BigUint) -> (BigUint, bool) {
    if v >= qq {
        return (BigUint::one(), false);
    }
    let ratio = ratio_f64(v, qq);
    let x = ln_big(qq) / -(-ratio).ln_1p();
    let k0 = x.floor();
    if k0 <= EXACT_D_LIMIT as f64 {
        let rest = qq - v;
        let holds = |k: u64| qq.pow(k as u32) <= qq * rest.pow(k as u32);
        let mut k = k0 as u64;
        while k > 0 && !holds(k) {
            k -= 1;
        }
        while holds(k + 1) {
            k += 1;
        }
        return (BigUint::from(k + 1), false);
    }
    (floor_big(x) + 1u32, near_integer(x))
}

/// E = floor((Q / V)(1 + ln V)).
pub fn jsl_bound(qq: &BigUint, v: &BigUint) -> (BigUint, bool) {
    let x = (1.0 + ln_big(v)) / ratio_f64(v, qq);
    (floor_big(x), near_integer(x))
}

fn ln_big(x: &BigUint) -> f64 {
    crate::rankgeom::kernels::log_q(2, x) * std::f64::consts::LN_2
}

// a / b for a <= b, without overflowing f64
fn ratio_f64(a: &BigUint, b: &BigUint) -> f64 {
    let shift = b.bits().saturating_sub(1000);
    (a >> shift).to_f64().unwrap() / (b >> shift).to_f64().unwrap()
}

pub fn covering_upper(q: u32, m: u32, n: u32, rho: u32) -> Result<UpperBounds> {
    check_rho(n, rho)?;
    let qq = pow(q, (m * n) as u64);
    let v = ball_volume(q, m, n, rho);
    let trivial = pow(q, (m * (n - rho)) as u64);
    let mrd_embed = pow(q, ((m.saturating_sub(rho)).max(n) * (n - rho)) as u64);
    let mixed = best_composition(m, n, rho).map(|(s, _)| pow(q, (m * (n - rho) - s) as u64));
    let (probabilistic, d_near) = probabilistic_bound(&qq, &v);
    let (jsl, e_near) = jsl_bound(&qq, &v);
    Ok(UpperBounds { trivial, mrd_embed, mixed, probabilistic, jsl, near_boundary: d_near || e_near })
}

/// Every bound for one parameter set plus the tightest of each kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub q: u32,
    pub m: u32,
    pub n: u32,
    pub rho: u32,
    pub lower: Option<LowerBounds>,
    pub upper: Option<UpperBounds>,
    pub best_lower: BigUint,
    pub lower_tag: Option<char>,
    pub best_upper: BigUint,
    pub upper_tag: Option<char>,
}

impl BoundReport {
    pub fn lowers(&self) -> Vec<(char, BigUint)> {
        let Some(l) = &self.lower else { return Vec::new() };
        let mut out = vec![('a', l.sphere_covering.clone())];
        out.extend(l.cohen.clone().map(|v| ('b', v)));
        out.extend(l.excess.clone().map(|v| ('c', v)));
        out
    }

    pub fn uppers(&self) -> Vec<(char, BigUint)> {
        let Some(u) = &self.upper else { return Vec::new() };
        let mut out = vec![('A', u.trivial.clone()), ('B', u.mrd_embed.clone())];
        out.extend(u.mixed.clone().map(|v| ('C', v)));
        out.push(('D', u.probabilistic.clone()));
        out.push(('E', u.jsl.clone()));
        out
    }
}

/// Bounds on K_R(q^m, n, rho) for any 0 <= rho. Radii of 0 and at least
/// min(m, n) have exact answers and carry no tags.
pub fn covering_report(q: u32, m: u32, n: u32, rho: u32) -> Result<BoundReport> {
    let exact = |k: BigUint| BoundReport {
        q,
        m,
        n,
        rho,
        lower: None,
        upper: None,
        best_lower: k.clone(),
        lower_tag: None,
        best_upper: k,
        upper_tag: None,
    };
    if rho == 0 {
        return Ok(exact(pow(q, (m * n) as u64)));
    }
    if rho >= m.min(n) {
        return Ok(exact(BigUint::one()));
    }
    // the formulas assume n <= m
    let (mm, nn) = (m.max(n), m.min(n));
    let mut r = BoundReport {
        lower: Some(covering_lower(q, mm, nn, rho)?),
        upper: Some(covering_upper(q, mm, nn, rho)?),
        ..exact(BigUint::zero())
    };
    let (lt, lv) = r
        .lowers()
        .into_iter()
        .fold(None::<(char, BigUint)>, |best, (t, v)| match best {
            Some((bt, bv)) if bv >= v => Some((bt, bv)),
            _ => Some((t, v)),
        })
        .expect("sphere covering always applies");
    let (ut, uv) = r
        .uppers()
        .into_iter()
        .fold(None::<(char, BigUint)>, |best, (t, v)| match best {
            Some((bt, bv)) if bv <= v => Some((bt, bv)),
            _ => Some((t, v)),
        })
        .expect("A always applies");
    r.best_lower = lv;
    r.lower_tag = Some(lt);
    r.best_upper = uv;
    r.upper_tag = Some(ut);
    Ok(r)
}
