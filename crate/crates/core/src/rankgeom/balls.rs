//! Intersections of rank balls, in closed form where one exists and by enumeration otherwise.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::kernels::{gaussian, pow};
use super::{decode_index, rank_distance, space_size};
use crate::error::{Error, Result};
use crate::ffield::Field;

/// A ball: center and radius.
pub type Center = (Vec<u32>, usize);

/// |B_{r1}(c1) ∩ B_{r2}(c2)| when d(c1, c2) = e, for the two cases with a closed form:
/// r1 + r2 = e, and {r1, r2} = {e, 1}.
pub fn intersection_volume_closed(q: u32, m: u32, n: u32, r1: u32, r2: u32, e: u32) -> Result<BigUint> {
    let top = m.min(n);
    if r1 > top || r2 > top || e > top {
        return Err(Error::OutOfRange(format!("radii/distance ({r1}, {r2}, {e}) for min(m, n) = {top}")));
    }
    if r1 + r2 == e {
        return Ok(pow(q, (r1 * r2) as u64) * gaussian(q, e as i64, r1 as i64));
    }
    if (r1 == e && r2 == 1) || (r1 == 1 && r2 == e) {
        let qm = pow(q, m as u64);
        let qr = pow(q, e as u64);
        return Ok(BigUint::from(1u32)
            + (qm - &qr) * gaussian(q, e as i64, 1)
            + (qr - 1u32) * gaussian(q, n as i64, 1));
    }
    Err(Error::NoClosedForm)
}

fn check_centers(field: &Field, centers: &[Center]) -> Result<usize> {
    let n = centers.first().map(|c| c.0.len()).ok_or_else(|| Error::Invalid("no centers".into()))?;
    for (c, _) in centers {
        if c.len() != n {
            return Err(Error::Invalid("centers of different lengths".into()));
        }
        for &x in c {
            field.check(x as u64)?;
        }
    }
    Ok(n)
}

/// Size of the common intersection of the given balls, by full enumeration.
pub fn intersection_volume_brute(field: &Field, centers: &[Center], guard: u64) -> Result<u64> {
    let n = check_centers(field, centers)?;
    let size = space_size(field, n, guard)?;
    let base = field.size() as u64;
    Ok((0..size)
        .into_par_iter()
        .map_init(
            || vec![0u32; n],
            |buf, i| {
                decode_index(base, i, buf);
                centers.iter().all(|(c, r)| rank_distance(field, buf, c) <= *r) as u64
            },
        )
        .sum())
}

/// The vectors in the common intersection, in index order.
pub fn intersection_members(field: &Field, centers: &[Center], guard: u64) -> Result<Vec<Vec<u32>>> {
    let n = check_centers(field, centers)?;
    let size = space_size(field, n, guard)?;
    let base = field.size() as u64;
    Ok((0..size)
        .into_par_iter()
        .filter_map(|i| {
            let mut v = vec![0u32; n];
            decode_index(base, i, &mut v);
            centers.iter().all(|(c, r)| rank_distance(field, &v, c) <= *r).then_some(v)
        })
        .collect())
}

/// Brute-force |B_r(0) ∩ B_s(c)| with c the canonical rank-e vector (1, x, ..., x^{e-1}, 0, ...).
pub fn intersection_by_distance(field: &Field, n: usize, r: usize, s: usize, e: usize, guard: u64) -> Result<u64> {
    if e > n || e > field.m() as usize {
        return Err(Error::OutOfRange(format!("distance {e}")));
    }
    let mut c = vec![0u32; n];
    for (i, x) in c.iter_mut().take(e).enumerate() {
        *x = field.q().pow(i as u32);
    }
    intersection_volume_brute(field, &[(vec![0; n], r), (c, s)], guard)
}

/// {x : x_{2r} = ... = x_{n-1} = 0}, a set of diameter 2r larger than V_r.
pub fn large_diameter_set(q: u32, m: u32, n: usize, r: usize) -> Result<Vec<Vec<u32>>> {
    if n < 3 || n > m as usize || r == 0 || 2 * r >= n {
        return Err(Error::OutOfRange(format!("need 3 <= n <= m and 2 <= 2r < n, got m={m} n={n} r={r}")));
    }
    let field = Field::new(q, m, None)?;
    let base = field.size() as u64;
    let count = base
        .checked_pow(2 * r as u32)
        .filter(|&c| c <= super::DEFAULT_GUARD)
        .ok_or(Error::GuardExceeded { size: format!("{base}^{}", 2 * r), limit: super::DEFAULT_GUARD })?;
    Ok((0..count)
        .map(|i| {
            let mut v = vec![0u32; n];
            decode_index(base, i, &mut v[..2 * r]);
            v
        })
        .collect())
}

/// Largest pairwise rank distance within a set.
pub fn set_diameter(field: &Field, set: &[Vec<u32>]) -> usize {
    set.par_iter()
        .enumerate()
        .map(|(i, x)| set[i + 1..].iter().map(|y| rank_distance(field, x, y)).max().unwrap_or(0))
        .max()
        .unwrap_or(0)
}
