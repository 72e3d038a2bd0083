//! Tables of covering bounds and of dimension bounds for linear covering codes.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::{covering_report, BoundReport};
use crate::error::{Error, Result};
use crate::rankgeom::kernels::sigma_q;

/// One rendered table entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub m: u32,
    pub n: u32,
    pub rho: u32,
    pub text: String,
}

/// Reports for every (m, n, rho) in the ranges, in row-major order.
pub fn covering_table(
    q: u32,
    ms: RangeInclusive<u32>,
    ns: RangeInclusive<u32>,
    rhos: RangeInclusive<u32>,
) -> Result<Vec<BoundReport>> {
    let mut cells = Vec::new();
    for m in ms {
        for n in ns.clone() {
            cells.extend(rhos.clone().map(|r| (m, n, r)));
        }
    }
    cells.par_iter().map(|&(m, n, r)| covering_report(q, m, n, r)).collect()
}

/// "b 3-4 A"; a single number when both bounds agree; no letters for exact radii.
pub fn format_cell(r: &BoundReport) -> String {
    let range = if r.best_lower == r.best_upper {
        r.best_lower.to_string()
    } else {
        format!("{}-{}", r.best_lower, r.best_upper)
    };
    match (r.lower_tag, r.upper_tag) {
        (Some(l), Some(u)) => format!("{l} {range} {u}"),
        _ => range,
    }
}

/// Bounds on the dimension k of a linear code with covering radius rho, for n <= m.
pub fn linear_dim_bounds(q: u32, m: u32, n: u32, rho: u32) -> Result<(u32, u32)> {
    if n > m || rho > n {
        return Err(Error::OutOfRange(format!("need n <= m and rho <= n, got m={m} n={n} rho={rho}")));
    }
    let upper = n - rho;
    let s = sigma_q(q);
    let inner = (rho * (n - rho)) as f64;
    if rho <= 1 || rho + 1 >= n || inner <= m as f64 - s {
        return Ok((upper, upper));
    }
    let raw = (n as f64 - rho as f64 - (inner + s) / m as f64).floor() + 1.0;
    let lower = raw.max(0.0).min(upper as f64) as u32;
    Ok((lower, upper))
}

/// (m, n, rho, k_lower, k_upper)
pub type LinearCell = (u32, u32, u32, u32, u32);

/// Every cell with n <= m and rho <= n.
pub fn linear_table(
    q: u32,
    ms: RangeInclusive<u32>,
    ns: RangeInclusive<u32>,
    rhos: RangeInclusive<u32>,
) -> Result<Vec<LinearCell>> {
    let mut out = Vec::new();
    for m in ms {
        for n in ns.clone().filter(|&n| n <= m) {
            for rho in rhos.clone().filter(|&r| r <= n) {
                let (lo, hi) = linear_dim_bounds(q, m, n, rho)?;
                out.push((m, n, rho, lo, hi));
            }
        }
    }
    Ok(out)
}
