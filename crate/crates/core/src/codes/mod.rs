//! Linear rank-metric codes and explicit codebooks.

pub mod construct;
pub mod io;

use std::sync::atomic::{AtomicU8, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::Field;
use crate::linalg::{self, Mat};
use crate::rankgeom::{decode_index, hamming_weight, rank_distance, rank_of, space_size};

pub use construct::{
    array_view, cartesian_power, delsarte_check, embed_code, gabidulin, mrd_els_check, transpose_code,
};

/// Counts A_0..A_n of codewords by rank weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankDistribution {
    pub counts: Vec<u64>,
}

impl RankDistribution {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
    /// Smallest nonzero weight with a codeword, if any.
    pub fn min_weight(&self) -> Option<usize> {
        self.counts.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(i, _)| i)
    }
}

/// A k-dimensional GF(q^m)-linear code of length n given by a generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    g: Mat,
}

impl LinearCode {
    pub fn new(field: &Field, n: usize, g: Mat) -> Result<LinearCode> {
        if g.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid(format!("generator rows must have length {n}")));
        }
        for &x in g.iter().flatten() {
            field.check(x as u64)?;
        }
        if linalg::rank(field, &g) != g.len() {
            return Err(Error::DependentRows);
        }
        Ok(LinearCode { field: field.clone(), n, g })
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode { field: field.clone(), n, g: Vec::new() }
    }

    pub fn whole_space(field: &Field, n: usize) -> LinearCode {
        let g = (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect();
        LinearCode { field: field.clone(), n, g }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.g.len()
    }
    pub fn generator(&self) -> &[Vec<u32>] {
        &self.g
    }

    /// Number of codewords, if it fits in a u64.
    pub fn size(&self) -> Option<u64> {
        (self.field.size() as u64).checked_pow(self.k() as u32)
    }

    pub fn encode(&self, msg: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0u32; self.n];
        for (&c, row) in msg.iter().zip(&self.g) {
            if c == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(c, g));
            }
        }
        out
    }

    /// The codeword for message index `idx` (base q^m odometer, symbol 0 least significant).
    pub fn codeword(&self, idx: u64) -> Vec<u32> {
        let mut msg = vec![0u32; self.k()];
        decode_index(self.field.size() as u64, idx, &mut msg);
        self.encode(&msg)
    }

    fn count_checked(&self, guard: u64) -> Result<u64> {
        self.size()
            .filter(|&s| s <= guard)
            .ok_or(Error::GuardExceeded { size: format!("{}^{}", self.field.size(), self.k()), limit: guard })
    }

    /// All codewords in message order.
    pub fn codewords(&self, guard: u64) -> Result<impl Iterator<Item = Vec<u32>> + '_> {
        let count = self.count_checked(guard)?;
        Ok((0..count).map(move |i| self.codeword(i)))
    }

    pub fn codeword_vec(&self, guard: u64) -> Result<Vec<Vec<u32>>> {
        let count = self.count_checked(guard)?;
        Ok((0..count).into_par_iter().map(|i| self.codeword(i)).collect())
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut rows = self.g.clone();
        rows.push(v.to_vec());
        v.len() == self.n && linalg::rank(&self.field, &rows) == self.k()
    }

    /// Canonical generator: the reduced row-echelon form.
    pub fn canonical_generator(&self) -> Mat {
        linalg::row_space(&self.field, &self.g)
    }

    /// Equality as sets of codewords.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field == other.field && self.n == other.n && self.canonical_generator() == other.canonical_generator()
    }

    /// The (n, n-k) code of vectors orthogonal to every codeword.
    pub fn dual(&self) -> LinearCode {
        let h = linalg::nullspace(&self.field, &self.g, self.n);
        LinearCode { field: self.field.clone(), n: self.n, g: h }
    }

    /// Rows of a parity-check matrix.
    pub fn parity_check(&self) -> Mat {
        self.dual().g
    }

    pub fn rank_distribution(&self, guard: u64) -> Result<RankDistribution> {
        let count = self.count_checked(guard)?;
        let n = self.n;
        let counts = (0..count)
            .into_par_iter()
            .fold(
                || vec![0u64; n + 1],
                |mut h, i| {
                    h[rank_of(&self.field, &self.codeword(i))] += 1;
                    h
                },
            )
            .reduce(|| vec![0u64; n + 1], add_hist);
        Ok(RankDistribution { counts })
    }

    /// Minimum rank weight of a nonzero codeword; `None` for the zero code.
    pub fn min_rank_distance(&self, guard: u64) -> Result<Option<usize>> {
        Ok(self.rank_distribution(guard)?.min_weight())
    }

    /// Minimum Hamming weight of a nonzero codeword.
    pub fn min_hamming_distance(&self, guard: u64) -> Result<Option<usize>> {
        let count = self.count_checked(guard)?;
        Ok((1..count).into_par_iter().map(|i| hamming_weight(&self.codeword(i))).min())
    }

    /// max_x d(x, C), from the smallest coset weight of every syndrome.
    pub fn covering_radius(&self, guard: u64) -> Result<usize> {
        let n = self.n;
        let size = space_size(&self.field, n, guard)?;
        let h = self.parity_check();
        let r = h.len();
        if r == 0 {
            return Ok(0);
        }
        let base = self.field.size() as u64;
        let syndromes = base.pow(r as u32) as usize;
        let best: Vec<AtomicU8> = (0..syndromes).map(|_| AtomicU8::new(u8::MAX)).collect();
        let f = &self.field;
        (0..size).into_par_iter().for_each_init(
            || vec![0u32; n],
            |buf, i| {
                decode_index(base, i, buf);
                let s = h.iter().rev().fold(0u64, |acc, row| {
                    let dot = row.iter().zip(buf.iter()).fold(0, |a, (&x, &y)| f.add(a, f.mul(x, y)));
                    acc * base + dot as u64
                });
                best[s as usize].fetch_min(rank_of(f, buf) as u8, Ordering::Relaxed);
            },
        );
        Ok(best.iter().map(|b| b.load(Ordering::Relaxed) as usize).max().unwrap_or(0))
    }

    pub fn to_codebook(&self, guard: u64) -> Result<Codebook> {
        let mut words = self.codeword_vec(guard)?;
        words.sort();
        Ok(Codebook { field: self.field.clone(), n: self.n, words })
    }
}

fn add_hist(a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    a.iter().zip(&b).map(|(x, y)| x + y).collect()
}

/// An explicit set of codewords, not necessarily linear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codebook {
    field: Field,
    n: usize,
    words: Vec<Vec<u32>>,
}

impl Codebook {
    pub fn new(field: &Field, n: usize, mut words: Vec<Vec<u32>>) -> Result<Codebook> {
        for w in &words {
            if w.len() != n {
                return Err(Error::Invalid(format!("codewords must have length {n}")));
            }
            for &x in w {
                field.check(x as u64)?;
            }
        }
        words.sort();
        words.dedup();
        Ok(Codebook { field: field.clone(), n, words })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn words(&self) -> &[Vec<u32>] {
        &self.words
    }
    pub fn len(&self) -> usize {
        self.words.len()
    }
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Histogram of codeword rank weights.
    pub fn rank_distribution(&self) -> RankDistribution {
        let mut counts = vec![0u64; self.n + 1];
        for w in &self.words {
            counts[rank_of(&self.field, w)] += 1;
        }
        RankDistribution { counts }
    }

    /// Smallest pairwise rank distance; `None` with fewer than two codewords.
    pub fn min_rank_distance(&self) -> Option<usize> {
        let w = &self.words;
        (0..w.len())
            .into_par_iter()
            .filter_map(|i| w[i + 1..].iter().map(|y| rank_distance(&self.field, &w[i], y)).min())
            .min()
    }

    /// Distance from `x` to the nearest codeword.
    pub fn distance_to(&self, x: &[u32]) -> usize {
        let mut best = usize::MAX;
        for w in &self.words {
            best = best.min(rank_distance(&self.field, x, w));
            if best == 0 {
                break;
            }
        }
        best
    }

    pub fn covering_radius(&self, guard: u64) -> Result<usize> {
        if self.words.is_empty() {
            return Err(Error::Invalid("empty codebook".into()));
        }
        let size = space_size(&self.field, self.n, guard)?;
        let base = self.field.size() as u64;
        let n = self.n;
        Ok((0..size)
            .into_par_iter()
            .map_init(
                || vec![0u32; n],
                |buf, i| {
                    decode_index(base, i, buf);
                    self.distance_to(buf)
                },
            )
            .max()
            .unwrap_or(0))
    }

    /// Whether every vector lies within `radius` of some codeword.
    pub fn covers(&self, radius: usize, guard: u64) -> Result<bool> {
        Ok(!self.words.is_empty() && self.covering_radius(guard)? <= radius)
    }
}
