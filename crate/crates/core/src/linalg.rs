//! Dense linear algebra over GF(q) and GF(q^m).
//!
//! Matrices are `Vec<Vec<u32>>` in row-major order with integer-encoded entries.

use crate::ffield::Field;

pub type Mat = Vec<Vec<u32>>;

/// The scalar operations elimination needs.
pub trait Scalars: Sync {
    fn add(&self, a: u32, b: u32) -> u32;
    fn sub(&self, a: u32, b: u32) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;
    fn neg(&self, a: u32) -> u32;
    /// Inverse of a nonzero element.
    fn inv(&self, a: u32) -> u32;
}

/// The prime field GF(q) with plain modular arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gf {
    q: u32,
}

impl Gf {
    pub fn new(q: u32) -> Gf {
        Gf { q }
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a % self.q != 0);
        // a^{q-2}
        let mut acc = 1u64;
        for _ in 0..self.q - 2 {
            acc = acc * a as u64 % self.q as u64;
        }
        acc as u32
    }
}

impl Scalars for Gf {
    fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.q
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.q - b) % self.q
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        a * b % self.q
    }
    fn neg(&self, a: u32) -> u32 {
        (self.q - a) % self.q
    }
    fn inv(&self, a: u32) -> u32 {
        Gf::inv(self, a)
    }
}

impl Scalars for Field {
    fn add(&self, a: u32, b: u32) -> u32 {
        Field::add(self, a, b)
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        Field::sub(self, a, b)
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        Field::mul(self, a, b)
    }
    fn neg(&self, a: u32) -> u32 {
        Field::neg(self, a)
    }
    fn inv(&self, a: u32) -> u32 {
        Field::inv(self, a).expect("pivot is nonzero")
    }
}

/// Reduce `a` in place to reduced row-echelon form; returns the pivot columns.
/// Zero rows are moved to the bottom.
pub fn rref<S: Scalars>(s: &S, a: &mut Mat) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let inv = s.inv(a[r][c]);
        if inv != 1 {
            for x in a[r].iter_mut() {
                *x = s.mul(*x, inv);
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                if p != 0 {
                    *x = s.sub(*x, s.mul(f, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<S: Scalars>(s: &S, a: &[Vec<u32>]) -> usize {
    let mut m = a.to_vec();
    rref(s, &mut m).len()
}

/// Row space in canonical form: the nonzero rows of the RREF.
pub fn row_space<S: Scalars>(s: &S, a: &[Vec<u32>]) -> Mat {
    let mut m = a.to_vec();
    let r = rref(s, &mut m).len();
    m.truncate(r);
    m
}

/// Basis of {x : a x = 0}, each vector of length `cols`.
pub fn nullspace<S: Scalars>(s: &S, a: &[Vec<u32>], cols: usize) -> Mat {
    let mut m = a.to_vec();
    let pivots = rref(s, &mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&j| {
            let mut h = vec![0u32; cols];
            h[j] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                h[pc] = s.neg(m[i][j]);
            }
            h
        })
        .collect()
}

/// Some x with a x = b, if one exists.
pub fn solve<S: Scalars>(s: &S, a: &[Vec<u32>], b: &[u32]) -> Option<Vec<u32>> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut aug: Mat = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = rref(s, &mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![0u32; cols];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[i][cols];
    }
    Some(x)
}

pub fn inverse<S: Scalars>(s: &S, a: &[Vec<u32>]) -> Option<Mat> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return None;
    }
    let mut aug: Mat = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    let pivots = rref(s, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return if n == 0 { Some(Vec::new()) } else { None };
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec<S: Scalars>(s: &S, a: &[Vec<u32>], x: &[u32]) -> Vec<u32> {
    a.iter().map(|row| row.iter().zip(x).fold(0, |acc, (&r, &v)| s.add(acc, s.mul(r, v)))).collect()
}

pub fn mat_mul<S: Scalars>(s: &S, a: &[Vec<u32>], b: &[Vec<u32>]) -> Mat {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| (0..cols).map(|j| row.iter().zip(b).fold(0, |acc, (&r, br)| s.add(acc, s.mul(r, br[j])))).collect())
        .collect()
}

pub fn transpose(a: &[Vec<u32>]) -> Mat {
    let cols = a.first().map_or(0, |r| r.len());
    (0..cols).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

/// Rank of a set of GF(2) vectors packed into machine words.
pub fn rank_gf2(words: &[u64]) -> usize {
    let mut basis = [0u64; 64];
    let mut r = 0;
    for &w in words {
        let mut x = w;
        while x != 0 {
            let top = 63 - x.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = x;
                r += 1;
                break;
            }
            x ^= basis[top];
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_rank() {
        let gf = Gf::new(2);
        let mut a = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        let p = rref(&gf, &mut a);
        assert_eq!(p, vec![0, 1]);
        assert_eq!(a[0], vec![1, 0, 1]);
        assert_eq!(a[1], vec![0, 1, 1]);
        assert_eq!(a[2], vec![0, 0, 0]);
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let gf = Gf::new(3);
        let a = vec![vec![1, 2, 0, 1], vec![0, 1, 1, 2]];
        let ns = nullspace(&gf, &a, 4);
        assert_eq!(ns.len(), 2);
        for h in &ns {
            assert_eq!(mat_vec(&gf, &a, h), vec![0, 0]);
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::gf(2, 3);
        let a = vec![vec![1, 2], vec![3, 5]];
        let inv = inverse(&f, &a).unwrap();
        assert_eq!(mat_mul(&f, &a, &inv), vec![vec![1, 0], vec![0, 1]]);
        assert!(inverse(&Gf::new(2), &[vec![1, 1], vec![1, 1]]).is_none());
    }

    #[test]
    fn solve_consistent_and_not() {
        let gf = Gf::new(5);
        let a = vec![vec![1, 2], vec![2, 4]];
        assert!(solve(&gf, &a, &[1, 3]).is_none());
        let x = solve(&gf, &a, &[1, 2]).unwrap();
        assert_eq!(mat_vec(&gf, &a, &x), vec![1, 2]);
    }

    #[test]
    fn gf2_fast_rank_matches() {
        let gf = Gf::new(2);
        for w in [[0b101u64, 0b011, 0b110], [1, 2, 4], [0, 0, 7]] {
            let rows: Mat = w.iter().map(|&x| (0..3).map(|b| ((x >> b) & 1) as u32).collect()).collect();
            assert_eq!(rank_gf2(&w), rank(&gf, &rows));
        }
    }
}
