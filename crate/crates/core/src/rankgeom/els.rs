//! Elementary linear subspaces: subspaces of GF(q^m)^n spanned by vectors over GF(q).
//!
//! An ELS is stored by its reduced row-echelon basis over GF(q), which is
//! canonical, so equality of `Els` values is equality of subspaces.

use crate::error::{Error, Result};
use crate::ffield::Field;
use crate::linalg::{self, Gf, Mat, Scalars};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Els {
    q: u32,
    m: u32,
    n: usize,
    basis: Mat,
}

impl Els {
    pub fn new(q: u32, m: u32, n: usize, rows: &[Vec<u32>]) -> Result<Els> {
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid(format!("ELS rows must have length {n}")));
        }
        if let Some(&c) = rows.iter().flatten().find(|&&c| c >= q) {
            return Err(Error::BadCoefficient(c));
        }
        let basis = linalg::row_space(&Gf::new(q), rows);
        if basis.len() != rows.len() {
            return Err(Error::DependentRows);
        }
        Ok(Els { q, m, n, basis })
    }

    pub fn zero(q: u32, m: u32, n: usize) -> Els {
        Els { q, m, n, basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn len(&self) -> usize {
        self.n
    }
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    /// The elementary basis in reduced row-echelon form.
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    fn reduce(&self, row: &[u32]) -> Vec<u32> {
        let gf = Gf::new(self.q);
        let mut r = row.to_vec();
        for b in &self.basis {
            let p = b.iter().position(|&x| x != 0).expect("basis rows are nonzero");
            let c = r[p];
            if c != 0 {
                for (x, &y) in r.iter_mut().zip(b) {
                    *x = gf.sub(*x, gf.mul(c, y));
                }
            }
        }
        r
    }

    /// Whether a GF(q)-vector lies in the GF(q) span of the basis.
    pub fn contains_row(&self, row: &[u32]) -> bool {
        self.reduce(row).iter().all(|&x| x == 0)
    }

    /// u lies in the ELS iff every row of its expansion lies in the row space.
    pub fn contains(&self, field: &Field, u: &[u32]) -> bool {
        u.len() == self.n && field.expand(u).iter().all(|row| self.contains_row(row))
    }

    pub fn contains_els(&self, other: &Els) -> bool {
        other.basis.iter().all(|r| self.contains_row(r))
    }

    /// A + B.
    pub fn sum(&self, other: &Els) -> Els {
        let rows: Mat = self.basis.iter().chain(&other.basis).cloned().collect();
        Els { q: self.q, m: self.m, n: self.n, basis: linalg::row_space(&Gf::new(self.q), &rows) }
    }

    pub fn meets_trivially(&self, other: &Els) -> bool {
        self.sum(other).dim() == self.dim() + other.dim()
    }

    /// Every vector of the ELS over GF(q^m), as GF(q^m)-combinations of the basis.
    pub fn members(&self, field: &Field) -> Vec<Vec<u32>> {
        let base = field.size() as u64;
        let count = base.pow(self.dim() as u32);
        let mut coeffs = vec![0u32; self.dim()];
        (0..count)
            .map(|i| {
                super::decode_index(base, i, &mut coeffs);
                let mut v = vec![0u32; self.n];
                for (c, row) in coeffs.iter().zip(&self.basis) {
                    for (x, &r) in v.iter_mut().zip(row) {
                        *x = field.add(*x, field.scale(r, *c));
                    }
                }
                v
            })
            .collect()
    }
}

/// Every ELS of dimension v in GF(q^m)^n, one per reduced echelon form.
pub fn enumerate_els(q: u32, m: u32, n: usize, v: usize) -> Result<Vec<Els>> {
    if v > n {
        return Err(Error::OutOfRange(format!("dimension {v} for length {n}")));
    }
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(v);
    pivot_sets(n, v, 0, &mut pivots, &mut |piv| {
        // free positions: (row i, column c) with c > piv[i] and c not a pivot
        let free: Vec<(usize, usize)> = piv
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| ((p + 1)..n).filter(|c| !piv.contains(c)).map(move |c| (i, c)))
            .collect();
        let total = (q as u64).pow(free.len() as u32);
        for idx in 0..total {
            let mut basis = vec![vec![0u32; n]; v];
            for (i, &p) in piv.iter().enumerate() {
                basis[i][p] = 1;
            }
            let mut t = idx;
            for &(i, c) in &free {
                basis[i][c] = (t % q as u64) as u32;
                t /= q as u64;
            }
            out.push(Els { q, m, n, basis });
        }
    });
    Ok(out)
}

fn pivot_sets(n: usize, v: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == v {
        f(cur);
        return;
    }
    for c in start..n {
        if n - c < v - cur.len() {
            break;
        }
        cur.push(c);
        pivot_sets(n, v, c + 1, cur, f);
        cur.pop();
    }
}

/// The unique ELS of dimension rank(v) containing v.
pub fn support_els(field: &Field, v: &[u32]) -> Els {
    let basis = linalg::row_space(&Gf::new(field.q()), &field.expand(v));
    Els { q: field.q(), m: field.m(), n: v.len(), basis }
}

/// All B with A + B = V and A meeting B trivially.
pub fn complements(a: &Els, v: &Els) -> Result<Vec<Els>> {
    if !v.contains_els(a) {
        return Err(Error::NotInSubspace);
    }
    let want = v.dim() - a.dim();
    Ok(enumerate_els(v.q, v.m, v.n, want)?.into_iter().filter(|b| v.contains_els(b) && a.meets_trivially(b)).collect())
}

/// Split u = u_A + u_B with u_A in A and u_B in B.
pub fn project(field: &Field, u: &[u32], a: &Els, b: &Els) -> Result<(Vec<u32>, Vec<u32>)> {
    if !a.meets_trivially(b) {
        return Err(Error::NotDirectSum);
    }
    let n = u.len();
    let gens: Mat = a.basis.iter().chain(&b.basis).cloned().collect();
    // columns are the generators
    let sys: Mat = (0..n).map(|t| gens.iter().map(|g| g[t]).collect()).collect();
    let x = linalg::solve(field, &sys, u).ok_or(Error::NotInSubspace)?;
    let combine = |rows: &[Vec<u32>], coeffs: &[u32]| {
        let mut out = vec![0u32; n];
        for (row, &c) in rows.iter().zip(coeffs) {
            for (o, &r) in out.iter_mut().zip(row) {
                *o = field.add(*o, field.scale(r, c));
            }
        }
        out
    };
    let ua = combine(&a.basis, &x[..a.dim()]);
    let ub = combine(&b.basis, &x[a.dim()..]);
    Ok((ua, ub))
}
