//! Gabidulin codes, cartesian powers, transposes, embeddings, and array views.

use num_integer::Integer;

use super::{Codebook, LinearCode};
use crate::error::{Error, Result};
use crate::ffield::{Basis, Field};
use crate::linalg::{self, Gf, Mat};
use crate::rankgeom::{enumerate_els, rank_of};

/// Generalized Gabidulin code: row i is (g_0^{[i]}, ..., g_{n-1}^{[i]}) with [i] = q^{a i}.
pub fn gabidulin(field: &Field, g: &[u32], k: usize, a: u32) -> Result<LinearCode> {
    let n = g.len();
    let m = field.m() as usize;
    if n > m {
        return Err(Error::OutOfRange(format!("length {n} exceeds m = {m}")));
    }
    if k == 0 || k > n {
        return Err(Error::OutOfRange(format!("dimension {k} for length {n}")));
    }
    if a == 0 || (a as usize).gcd(&m) != 1 {
        return Err(Error::Invalid(format!("a = {a} is not coprime to m = {m}")));
    }
    for &x in g {
        field.check(x as u64)?;
    }
    if rank_of(field, g) != n {
        return Err(Error::Invalid("g must have rank n".into()));
    }
    let rows = (0..k).map(|i| g.iter().map(|&x| field.frobenius(x, a as u64 * i as u64)).collect()).collect();
    LinearCode::new(field, n, rows)
}

/// C x ... x C (l copies), with a block-diagonal generator.
pub fn cartesian_power(c: &LinearCode, l: usize) -> Result<LinearCode> {
    if l == 0 {
        return Err(Error::OutOfRange("l must be at least 1".into()));
    }
    let (n, k) = (c.n(), c.k());
    let mut g = vec![vec![0u32; n * l]; k * l];
    for b in 0..l {
        for (i, row) in c.generator().iter().enumerate() {
            g[b * k + i][b * n..(b + 1) * n].copy_from_slice(row);
        }
    }
    LinearCode::new(c.field(), n * l, g)
}

/// Transposed codebook over GF(q^n) with length m: element j of the image is
/// row j of the codeword's expansion read as an element of GF(q^n).
pub fn transpose_code(book: &Codebook) -> Result<Codebook> {
    let f = book.field();
    let target = Field::new(f.q(), book.n() as u32, None)?;
    let words = book.words().iter().map(|w| transpose_vector(f, &target, w)).collect();
    Codebook::new(&target, f.m() as usize, words)
}

/// Transpose a single vector of GF(q^m)^n into GF(q^n)^m.
pub fn transpose_vector(from: &Field, to: &Field, v: &[u32]) -> Vec<u32> {
    from.expand(v).iter().map(|row| to.from_coords(row)).collect()
}

/// Image of a codebook under the coordinate-preserving injection
/// GF(q^mu) -> GF(q^{mu+rho}).
pub fn embed_code(book: &Codebook, rho: u32) -> Result<Codebook> {
    let f = book.field();
    let target = if rho == 0 { f.clone() } else { Field::new(f.q(), f.m() + rho, None)? };
    Codebook::new(&target, book.n(), book.words().to_vec())
}

/// C is MRD iff C + V is the whole space for every ELS V of dimension n - k.
pub fn mrd_els_check(c: &LinearCode) -> Result<bool> {
    let (n, k) = (c.n(), c.k());
    let f = c.field();
    if n > f.m() as usize {
        return Err(Error::OutOfRange(format!("length {n} exceeds m = {}", f.m())));
    }
    for v in enumerate_els(f.q(), f.m(), n, n - k)? {
        let mut rows: Mat = c.generator().to_vec();
        rows.extend(v.basis().iter().cloned());
        if linalg::rank(f, &rows) != n {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The m x n expansion of every codeword in the given basis.
pub fn array_view(book: &Codebook, basis: &Basis) -> Result<Vec<Mat>> {
    if basis.field() != book.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(book.words().iter().map(|w| basis.expand(w)).collect())
}

// GF(q)-spanning set of a code: x^t times each generator row.
fn gf_q_span(c: &LinearCode) -> Vec<Vec<u32>> {
    let f = c.field();
    let powers = f.poly_basis();
    c.generator()
        .iter()
        .flat_map(|row| powers.iter().map(move |&p| row.iter().map(|&x| f.mul(p, x)).collect()))
        .collect()
}

fn flat(mat: &[Vec<u32>]) -> Vec<u32> {
    mat.iter().flatten().copied().collect()
}

/// Checks (C^perp)_E = (C_P)^perp, where matrix duality is the entrywise
/// GF(q) inner product sum_{ij} A_ij B_ij. E and P must be dual bases for the
/// identity to hold; the check itself accepts any pair.
pub fn delsarte_check(c: &LinearCode, e: &Basis, p: &Basis) -> Result<bool> {
    let f = c.field();
    if e.field() != f || p.field() != f {
        return Err(Error::FieldMismatch);
    }
    let gf = Gf::new(f.q());
    let mn = f.m() as usize * c.n();
    let cp: Mat = gf_q_span(c).iter().map(|w| flat(&p.expand(w))).collect();
    let rhs = linalg::row_space(&gf, &linalg::nullspace(&gf, &cp, mn));
    let de: Mat = gf_q_span(&c.dual()).iter().map(|w| flat(&e.expand(w))).collect();
    let lhs = linalg::row_space(&gf, &de);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rankgeom::DEFAULT_GUARD;

    #[test]
    fn gabidulin_examples() {
        let f = Field::gf(2, 3);
        let g = [1, 2, 4];
        let d = |k| gabidulin(&f, &g, k, 1).unwrap().min_rank_distance(DEFAULT_GUARD).unwrap();
        assert_eq!(d(1), Some(3));
        assert_eq!(d(2), Some(2));
        assert_eq!(d(3), Some(1));
        assert!(gabidulin(&f, &[1, 1, 2], 1, 1).is_err());
        assert!(gabidulin(&Field::gf(2, 4), &[1, 2], 1, 2).is_err());
        assert!(mrd_els_check(&gabidulin(&f, &g, 2, 1).unwrap()).unwrap());
    }

    #[test]
    fn els_check_examples() {
        let f = Field::gf(2, 2);
        let c = LinearCode::new(&f, 2, vec![vec![1, 0]]).unwrap();
        assert!(!mrd_els_check(&c).unwrap());
        assert!(mrd_els_check(&LinearCode::whole_space(&f, 2)).unwrap());
    }

    #[test]
    fn powers() {
        let f = Field::gf(2, 2);
        let g = gabidulin(&f, &[1, 2], 1, 1).unwrap();
        assert!(cartesian_power(&g, 1).unwrap().same_code(&g));
        let g2 = cartesian_power(&g, 2).unwrap();
        assert_eq!((g2.n(), g2.k()), (4, 2));
        assert_eq!(g2.min_rank_distance(DEFAULT_GUARD).unwrap(), Some(2));
    }

    #[test]
    fn transpose_and_embed() {
        let f = Field::gf(2, 2);
        let c = LinearCode::new(&f, 2, vec![vec![1, 2]]).unwrap().to_codebook(DEFAULT_GUARD).unwrap();
        let t = transpose_code(&c).unwrap();
        assert_eq!(t.covering_radius(DEFAULT_GUARD).unwrap(), c.covering_radius(DEFAULT_GUARD).unwrap());
        let zero = Codebook::new(&f, 3, vec![vec![0, 0, 0]]).unwrap();
        assert_eq!(transpose_code(&zero).unwrap().words(), &[vec![0, 0]]);
        let e = embed_code(&c, 1).unwrap();
        assert_eq!(e.len(), 4);
        assert_eq!(e.field().m(), 3);
        assert_eq!(e.covering_radius(DEFAULT_GUARD).unwrap(), 1);
        assert_eq!(embed_code(&c, 0).unwrap(), c);
    }

    #[test]
    fn delsarte_small() {
        let f = Field::gf(2, 2);
        let c = LinearCode::new(&f, 2, vec![vec![1, 2]]).unwrap();
        let e = Basis::new(&f, &[1, 2]).unwrap();
        let p = Basis::new(&f, &f.dual_basis(&[1, 2]).unwrap()).unwrap();
        assert!(delsarte_check(&c, &e, &p).unwrap());
        // the polynomial basis of GF(8) is not self-dual, and some code notices
        let f = Field::gf(2, 3);
        let e = Basis::polynomial(&f);
        let fails = (1..8u32).any(|y| {
            let c = LinearCode::new(&f, 2, vec![vec![1, y]]).unwrap();
            !delsarte_check(&c, &e, &e).unwrap()
        });
        assert!(fails);
    }
}
