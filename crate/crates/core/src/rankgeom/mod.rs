//! Rank weight, counting kernels, elementary linear subspaces, and rank balls.

pub mod balls;
pub mod els;
pub mod kernels;

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ffield::{Basis, Field};
use crate::linalg::{self, Gf};

pub use balls::{
    intersection_by_distance, intersection_members, intersection_volume_brute, intersection_volume_closed,
    large_diameter_set, set_diameter, Center,
};
pub use els::{complements, enumerate_els, project, support_els, Els};
pub use kernels::{
    alpha, ball_counts, ball_volume, ball_volume_bounds, beta, gaussian, rank_count, sigma, sigma_q, tau_q,
    VolumeBounds,
};

/// Default cap on the number of vectors a brute-force scan may visit.
pub const DEFAULT_GUARD: u64 = 1 << 24;

/// Rank over GF(q) of the expansion of `v`, i.e. the dimension of the GF(q)-span
/// of its coordinates.
pub fn rank_of(field: &Field, v: &[u32]) -> usize {
    if field.q() == 2 {
        let words: Vec<u64> = v.iter().map(|&x| x as u64).collect();
        return linalg::rank_gf2(&words);
    }
    let rows: Vec<Vec<u32>> = v.iter().filter(|&&x| x != 0).map(|&x| field.coords(x)).collect();
    linalg::rank(&Gf::new(field.q()), &rows)
}

/// Rank distance rk(x - y).
pub fn rank_distance(field: &Field, x: &[u32], y: &[u32]) -> usize {
    let d: Vec<u32> = x.iter().zip(y).map(|(&a, &b)| field.sub(a, b)).collect();
    rank_of(field, &d)
}

/// Hamming weight, for comparison with the rank weight.
pub fn hamming_weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub fn vec_add(field: &Field, x: &[u32], y: &[u32]) -> Vec<u32> {
    x.iter().zip(y).map(|(&a, &b)| field.add(a, b)).collect()
}

pub fn vec_sub(field: &Field, x: &[u32], y: &[u32]) -> Vec<u32> {
    x.iter().zip(y).map(|(&a, &b)| field.sub(a, b)).collect()
}

pub fn vec_scale(field: &Field, c: u32, x: &[u32]) -> Vec<u32> {
    x.iter().map(|&a| field.mul(c, a)).collect()
}

/// Number of vectors in GF(q^m)^n, if it stays within `guard`.
pub fn space_size(field: &Field, n: usize, guard: u64) -> Result<u64> {
    let size = (field.size() as u64).checked_pow(n as u32);
    match size {
        Some(s) if s <= guard => Ok(s),
        _ => Err(Error::GuardExceeded { size: format!("{}^{n}", field.size()), limit: guard }),
    }
}

/// Vectors are indexed in base q^m with coordinate 0 least significant.
pub fn decode_index(base: u64, mut idx: u64, out: &mut [u32]) {
    for x in out.iter_mut() {
        *x = (idx % base) as u32;
        idx /= base;
    }
}

pub fn encode_index(base: u64, v: &[u32]) -> u64 {
    v.iter().rev().fold(0, |acc, &x| acc * base + x as u64)
}

/// All vectors of GF(q^m)^n in index order.
pub fn all_vectors(field: &Field, n: usize, guard: u64) -> Result<Vec<Vec<u32>>> {
    let size = space_size(field, n, guard)?;
    let base = field.size() as u64;
    Ok((0..size)
        .map(|i| {
            let mut v = vec![0; n];
            decode_index(base, i, &mut v);
            v
        })
        .collect())
}

/// Rank histogram of the whole space, counted by brute force.
pub fn rank_histogram(field: &Field, n: usize, guard: u64) -> Result<Vec<u64>> {
    let size = space_size(field, n, guard)?;
    let base = field.size() as u64;
    let hist = (0..size)
        .into_par_iter()
        .fold(
            || (vec![0u32; n], vec![0u64; n + 1]),
            |(mut buf, mut h), i| {
                decode_index(base, i, &mut buf);
                h[rank_of(field, &buf)] += 1;
                (buf, h)
            },
        )
        .map(|(_, h)| h)
        .reduce(|| vec![0u64; n + 1], |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect());
    Ok(hist)
}

/// A vector over GF(q^m) that carries its field.
#[derive(Clone, PartialEq, Eq)]
pub struct RankVector {
    field: Field,
    coords: Vec<u32>,
}

impl fmt::Debug for RankVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl RankVector {
    pub fn new(field: &Field, coords: Vec<u32>) -> Result<RankVector> {
        for &c in &coords {
            field.check(c as u64)?;
        }
        Ok(RankVector { field: field.clone(), coords })
    }

    pub fn zero(field: &Field, n: usize) -> RankVector {
        RankVector { field: field.clone(), coords: vec![0; n] }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }
    pub fn len(&self) -> usize {
        self.coords.len()
    }
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.field, &self.coords)
    }

    /// Expansion over the polynomial basis.
    pub fn expand(&self) -> Vec<Vec<u32>> {
        self.field.expand(&self.coords)
    }

    pub fn expand_in(&self, basis: &Basis) -> Result<Vec<Vec<u32>>> {
        if basis.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(basis.expand(&self.coords))
    }

    pub fn distance(&self, other: &RankVector) -> Result<usize> {
        if self.field != other.field || self.len() != other.len() {
            return Err(Error::FieldMismatch);
        }
        Ok(rank_distance(&self.field, &self.coords, &other.coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        let f = Field::gf(2, 2);
        assert_eq!(rank_of(&f, &[0, 0, 0]), 0);
        assert_eq!(rank_of(&f, &[1, 2, 3]), 2);
        assert_eq!(rank_of(&f, &[1, 1, 1]), 1);
        let g = Field::gf(3, 2);
        assert_eq!(rank_of(&g, &[1, 2, 3]), 2);
        assert_eq!(rank_of(&g, &[1, 2, 0]), 1);
    }

    #[test]
    fn histogram_matches_counts() {
        for (q, m, n) in [(2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 2, 3)] {
            let f = Field::gf(q, m);
            let h = rank_histogram(&f, n, DEFAULT_GUARD).unwrap();
            for (u, &c) in h.iter().enumerate() {
                assert_eq!(kernels::rank_count(q, m, n as u32, u as u32), c.into());
            }
        }
    }

    #[test]
    fn index_round_trip() {
        let mut v = [0u32; 3];
        decode_index(4, 57, &mut v);
        assert_eq!(v, [1, 2, 3]);
        assert_eq!(encode_index(4, &v), 57);
    }

    #[test]
    fn guard() {
        let f = Field::gf(2, 4);
        assert!(space_size(&f, 7, DEFAULT_GUARD).is_err());
        assert_eq!(space_size(&f, 6, DEFAULT_GUARD).unwrap(), 1 << 24);
    }
}
