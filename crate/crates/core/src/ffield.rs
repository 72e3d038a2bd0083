//! Arithmetic in GF(q) and GF(q^m).
//!
//! Elements are plain integers in `0..q^m` whose base-q digits are the
//! coordinates over the polynomial basis `1, x, ..., x^{m-1}`; digit `i` is the
//! coefficient of `x^i`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{self, Gf};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;
/// Fields up to this size multiply through log/antilog tables.
pub const TABLE_THRESHOLD: u32 = 1 << 16;

struct Tables {
    log: Vec<u32>,
    exp: Vec<u32>,
}

struct Inner {
    q: u32,
    m: u32,
    size: u32,
    // low-to-high, monic, length m + 1
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

/// The field GF(q^m) built over GF(q) from a monic irreducible modulus.
///
/// Cloning is cheap; clones share the same tables.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.q == other.0.q && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.0.q, self.0.m, self.0.modulus)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}

fn is_prime(q: u32) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

fn check_params(q: u32, m: u32) -> Result<u32> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if !matches!(q, 2 | 3 | 5) {
        return Err(Error::Unsupported(format!("q = {q}; supported values are 2, 3, 5")));
    }
    if m == 0 {
        return Err(Error::Unsupported("extension degree m must be at least 1".into()));
    }
    let size = (q as u64).checked_pow(m).filter(|&s| s <= MAX_FIELD_SIZE);
    match size {
        Some(s) => Ok(s as u32),
        None => Err(Error::Unsupported(format!("{q}^{m} exceeds 2^20"))),
    }
}

// Polynomials over GF(q) as low-to-high coefficient vectors.
fn poly_rem(q: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = Gf::new(q).inv(b[db]);
    while r.len() > db {
        let top = *r.last().unwrap();
        if top != 0 {
            let c = top * lead_inv % q;
            let shift = r.len() - 1 - db;
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + q * q - c * bi % q) % q;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn monic_from_index(q: u32, deg: u32, idx: u32) -> Vec<u32> {
    let mut p = Vec::with_capacity(deg as usize + 1);
    let mut t = idx;
    for _ in 0..deg {
        p.push(t % q);
        t /= q;
    }
    p.push(1);
    p
}

/// Irreducibility by trial division against all monic polynomials of degree
/// at most half the degree.
pub fn is_irreducible(q: u32, poly: &[u32]) -> bool {
    let deg = poly.len() as u32 - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for idx in 0..q.pow(d) {
            let div = monic_from_index(q, d, idx);
            if poly_rem(q, poly, &div).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible polynomial of degree `m` whose lower coefficients,
/// read as a base-q integer, are smallest.
pub fn default_modulus(q: u32, m: u32) -> Result<Vec<u32>> {
    check_params(q, m)?;
    (0..q.pow(m))
        .map(|idx| monic_from_index(q, m, idx))
        .find(|p| is_irreducible(q, p))
        .ok_or_else(|| Error::Unsupported(format!("no irreducible of degree {m}")))
}

impl Field {
    /// Build GF(q^m), using the default modulus when none is supplied.
    pub fn new(q: u32, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
        let size = check_params(q, m)?;
        let modulus = match modulus {
            None => default_modulus(q, m)?,
            Some(c) => {
                if c.len() != m as usize + 1 {
                    return Err(Error::DegreeMismatch { expected: m as usize, got: c.len().saturating_sub(1) });
                }
                if let Some(&bad) = c.iter().find(|&&x| x >= q) {
                    return Err(Error::BadCoefficient(bad));
                }
                if c[m as usize] != 1 {
                    return Err(Error::NotMonic);
                }
                if !is_irreducible(q, c) {
                    return Err(Error::Reducible { q });
                }
                c.to_vec()
            }
        };
        let mut inner = Inner { q, m, size, modulus, tables: None };
        if size <= TABLE_THRESHOLD && size > 2 {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field(Arc::new(inner)))
    }

    /// Shorthand for the default-modulus field; panics on unsupported input.
    pub fn gf(q: u32, m: u32) -> Field {
        Field::new(q, m, None).expect("supported field parameters")
    }

    /// Same field with the table path disabled; used to cross-check both paths.
    pub fn without_tables(&self) -> Field {
        let i = &self.0;
        Field(Arc::new(Inner { q: i.q, m: i.m, size: i.size, modulus: i.modulus.clone(), tables: None }))
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }
    pub fn m(&self) -> u32 {
        self.0.m
    }
    /// Number of elements, q^m.
    pub fn size(&self) -> u32 {
        self.0.size
    }
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }
    pub fn has_tables(&self) -> bool {
        self.0.tables.is_some()
    }

    /// "q m c_0 ... c_m"
    pub fn descriptor(&self) -> String {
        let mut s = format!("{} {}", self.q(), self.m());
        for c in self.modulus() {
            s.push_str(&format!(" {c}"));
        }
        s
    }

    pub fn parse_descriptor(s: &str) -> Result<Field> {
        let nums = s
            .split_whitespace()
            .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if nums.len() < 2 {
            return Err(Error::Parse("field descriptor needs at least q and m".into()));
        }
        let modulus = if nums.len() > 2 { Some(&nums[2..]) } else { None };
        Field::new(nums[0], nums[1], modulus)
    }

    pub fn contains(&self, x: u32) -> bool {
        x < self.0.size
    }

    pub fn check(&self, x: u64) -> Result<u32> {
        if x < self.0.size as u64 {
            Ok(x as u32)
        } else {
            Err(Error::NotAnElement { value: x, size: self.0.size })
        }
    }

    /// Coordinates over the polynomial basis.
    pub fn coords(&self, mut x: u32) -> Vec<u32> {
        let q = self.0.q;
        (0..self.0.m)
            .map(|_| {
                let d = x % q;
                x /= q;
                d
            })
            .collect()
    }

    pub fn from_coords(&self, c: &[u32]) -> u32 {
        let q = self.0.q;
        c.iter().rev().fold(0, |acc, &d| acc * q + d % q)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let q = self.0.q;
        if q == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut r, mut p) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            r += ((a % q + b % q) % q) * p;
            a /= q;
            b /= q;
            p *= q;
        }
        r
    }

    pub fn neg(&self, a: u32) -> u32 {
        let q = self.0.q;
        if q == 2 {
            return a;
        }
        let (mut a, mut r, mut p) = (a, 0, 1);
        while a > 0 {
            r += ((q - a % q) % q) * p;
            a /= q;
            p *= q;
        }
        r
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Multiply by an element of the base field.
    pub fn scale(&self, c: u32, a: u32) -> u32 {
        let q = self.0.q;
        match c % q {
            0 => 0,
            1 => a,
            c => {
                let (mut a, mut r, mut p) = (a, 0, 1);
                while a > 0 {
                    r += (a % q * c % q) * p;
                    a /= q;
                    p *= q;
                }
                r
            }
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.0.tables {
            Some(t) => {
                let n = self.0.size - 1;
                let s = t.log[a as usize] + t.log[b as usize];
                t.exp[(if s >= n { s - n } else { s }) as usize]
            }
            None => mul_schoolbook(&self.0, a, b),
        }
    }

    pub fn mul_schoolbook(&self, a: u32, b: u32) -> u32 {
        mul_schoolbook(&self.0, a, b)
    }

    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.0.tables {
            let n = (self.0.size - 1) as u64;
            let e = (t.log[a as usize] as u64 * (k % n)) % n;
            return t.exp[e as usize];
        }
        let (mut base, mut acc) = (a, 1);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.0.tables {
            let n = self.0.size - 1;
            let l = t.log[a as usize];
            return Ok(t.exp[((n - l) % n) as usize]);
        }
        Ok(self.pow(a, self.0.size as u64 - 2))
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// x^{q^a}. Exponents wrap modulo m since x^{q^m} = x.
    pub fn frobenius(&self, x: u32, a: u64) -> u32 {
        let e = (a % self.0.m as u64) as u32;
        self.pow(x, (self.0.q as u64).pow(e))
    }

    /// x + x^q + ... + x^{q^{m-1}}; always lands in GF(q).
    pub fn trace(&self, x: u32) -> u32 {
        let mut acc = 0;
        let mut y = x;
        for _ in 0..self.0.m {
            acc = self.add(acc, y);
            y = self.pow(y, self.0.q as u64);
        }
        debug_assert!(acc < self.0.q);
        acc
    }

    /// Basis P with trace(E_i P_j) = [i = j].
    pub fn dual_basis(&self, basis: &[u32]) -> Result<Vec<u32>> {
        let b = Basis::new(self, basis)?;
        let m = self.0.m as usize;
        let gf = Gf::new(self.0.q);
        let powers = self.poly_basis();
        let t: Vec<Vec<u32>> =
            b.elems.iter().map(|&e| powers.iter().map(|&xt| self.trace(self.mul(e, xt))).collect()).collect();
        let tinv = linalg::inverse(&gf, &t).ok_or(Error::DependentBasis)?;
        Ok((0..m)
            .map(|j| {
                let c: Vec<u32> = (0..m).map(|t| tinv[t][j]).collect();
                self.from_coords(&c)
            })
            .collect())
    }

    /// The polynomial basis 1, x, ..., x^{m-1}.
    pub fn poly_basis(&self) -> Vec<u32> {
        (0..self.0.m).map(|i| self.0.q.pow(i)).collect()
    }

    /// Smallest primitive element.
    pub fn primitive_element(&self) -> u32 {
        match &self.0.tables {
            Some(t) => t.exp[1],
            None => find_generator(&self.0),
        }
    }

    /// Expansion of a vector over the polynomial basis: `m` rows, `n` columns.
    pub fn expand(&self, v: &[u32]) -> Vec<Vec<u32>> {
        let cols: Vec<Vec<u32>> = v.iter().map(|&x| self.coords(x)).collect();
        (0..self.0.m as usize).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
    }

    /// Inverse of [`Field::expand`].
    pub fn reassemble(&self, mat: &[Vec<u32>]) -> Vec<u32> {
        let n = mat.first().map_or(0, |r| r.len());
        (0..n)
            .map(|j| {
                let c: Vec<u32> = mat.iter().map(|row| row[j]).collect();
                self.from_coords(&c)
            })
            .collect()
    }

    /// Embed an element of GF(q^{m'}) with m' <= m by copying its coordinates.
    pub fn embed_from(&self, other: &Field, x: u32) -> Result<u32> {
        if other.q() != self.q() || other.m() > self.m() {
            return Err(Error::FieldMismatch);
        }
        Ok(x)
    }
}

fn mul_schoolbook(f: &Inner, a: u32, b: u32) -> u32 {
    let (q, m) = (f.q, f.m as usize);
    if q == 2 {
        let (a, b) = (a as u64, b as u64);
        let mut prod = 0u64;
        for i in 0..m {
            if (b >> i) & 1 == 1 {
                prod ^= a << i;
            }
        }
        let modw = f.modulus.iter().enumerate().fold(0u64, |acc, (i, &c)| acc | ((c as u64) << i));
        for d in (m..2 * m - 1).rev() {
            if (prod >> d) & 1 == 1 {
                prod ^= modw << (d - m);
            }
        }
        return prod as u32;
    }
    let da = digits(q, a, m);
    let db = digits(q, b, m);
    let mut prod = vec![0u32; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % q;
        }
    }
    for d in (m..2 * m - 1).rev() {
        let c = prod[d];
        if c != 0 {
            for i in 0..m {
                prod[d - m + i] = (prod[d - m + i] + q * q - c * f.modulus[i] % q) % q;
            }
            prod[d] = 0;
        }
    }
    prod[..m].iter().rev().fold(0, |acc, &d| acc * q + d)
}

fn digits(q: u32, mut x: u32, m: usize) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = x % q;
            x /= q;
            d
        })
        .collect()
}

fn find_generator(f: &Inner) -> u32 {
    let n = f.size - 1;
    if n == 1 {
        return 1;
    }
    // prime factors of the group order
    let mut factors = Vec::new();
    let mut t = n;
    let mut p = 2;
    while p * p <= t {
        if t % p == 0 {
            factors.push(p);
            while t % p == 0 {
                t /= p;
            }
        }
        p += 1;
    }
    if t > 1 {
        factors.push(t);
    }
    let pow = |mut base: u32, mut k: u32| {
        let mut acc = 1;
        while k > 0 {
            if k & 1 == 1 {
                acc = mul_schoolbook(f, acc, base);
            }
            base = mul_schoolbook(f, base, base);
            k >>= 1;
        }
        acc
    };
    (2..f.size).find(|&g| factors.iter().all(|&p| pow(g, n / p) != 1)).expect("multiplicative group is cyclic")
}

fn build_tables(f: &Inner) -> Tables {
    let n = f.size - 1;
    let g = find_generator(f);
    let mut exp = vec![0u32; n as usize];
    let mut log = vec![0u32; f.size as usize];
    let mut x = 1;
    for (i, e) in exp.iter_mut().enumerate() {
        *e = x;
        log[x as usize] = i as u32;
        x = mul_schoolbook(f, x, g);
    }
    Tables { log, exp }
}

/// A GF(q)-basis of GF(q^m) with the change-of-coordinates matrix cached.
#[derive(Clone, Debug)]
pub struct Basis {
    field: Field,
    elems: Vec<u32>,
    // columns are the polynomial coordinates of the basis elements; inverted
    to_basis: Vec<Vec<u32>>,
}

impl Basis {
    pub fn new(field: &Field, elems: &[u32]) -> Result<Basis> {
        let m = field.m() as usize;
        if elems.len() != m {
            return Err(Error::Invalid(format!("a basis needs {m} elements, got {}", elems.len())));
        }
        for &e in elems {
            field.check(e as u64)?;
        }
        let gf = Gf::new(field.q());
        let cols: Vec<Vec<u32>> = elems.iter().map(|&e| field.coords(e)).collect();
        let mat: Vec<Vec<u32>> = (0..m).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        let to_basis = linalg::inverse(&gf, &mat).ok_or(Error::DependentBasis)?;
        Ok(Basis { field: field.clone(), elems: elems.to_vec(), to_basis })
    }

    pub fn polynomial(field: &Field) -> Basis {
        Basis::new(field, &field.poly_basis()).expect("polynomial basis is independent")
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Coordinates of `x` in this basis.
    pub fn coords(&self, x: u32) -> Vec<u32> {
        let gf = Gf::new(self.field.q());
        linalg::mat_vec(&gf, &self.to_basis, &self.field.coords(x))
    }

    /// Column j holds the coordinates of v_j.
    pub fn expand(&self, v: &[u32]) -> Vec<Vec<u32>> {
        let cols: Vec<Vec<u32>> = v.iter().map(|&x| self.coords(x)).collect();
        (0..self.elems.len()).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
    }

    pub fn reassemble(&self, mat: &[Vec<u32>]) -> Vec<u32> {
        let f = &self.field;
        let n = mat.first().map_or(0, |r| r.len());
        (0..n).map(|j| mat.iter().zip(&self.elems).fold(0, |acc, (row, &e)| f.add(acc, f.scale(row[j], e)))).collect()
    }
}

/// Arithmetic operations accepted by [`element_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow(u64),
    Inv,
}

/// A field element that remembers its field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

impl FieldElement {
    pub fn new(field: &Field, value: u64) -> Result<FieldElement> {
        Ok(FieldElement { value: field.check(value)?, field: field.clone() })
    }
    pub fn value(&self) -> u32 {
        self.value
    }
    pub fn field(&self) -> &Field {
        &self.field
    }
    fn same(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }
    fn wrap(&self, value: u32) -> FieldElement {
        FieldElement { field: self.field.clone(), value }
    }
    pub fn frobenius(&self, a: u64) -> FieldElement {
        self.wrap(self.field.frobenius(self.value, a))
    }
    pub fn trace(&self) -> u32 {
        self.field.trace(self.value)
    }
}

/// Apply `op` to `a` and `b`; `b` is ignored for `Pow` and `Inv`.
pub fn element_arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    a.same(b)?;
    let f = &a.field;
    let v = match op {
        ArithOp::Add => f.add(a.value, b.value),
        ArithOp::Sub => f.sub(a.value, b.value),
        ArithOp::Mul => f.mul(a.value, b.value),
        ArithOp::Div => f.div(a.value, b.value)?,
        ArithOp::Pow(k) => f.pow(a.value, k),
        ArithOp::Inv => f.inv(a.value)?,
    };
    Ok(a.wrap(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli() {
        assert_eq!(Field::gf(2, 1).modulus(), &[0, 1]);
        assert_eq!(Field::gf(2, 2).modulus(), &[1, 1, 1]);
        assert_eq!(Field::gf(2, 3).modulus(), &[1, 1, 0, 1]);
        assert_eq!(Field::gf(3, 2).modulus(), &[1, 0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(2, 2, Some(&[1, 0, 1])).unwrap_err(), Error::Reducible { q: 2 });
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(Field::new(7, 1, None), Err(Error::Unsupported(_))));
        assert!(matches!(Field::new(2, 21, None), Err(Error::Unsupported(_))));
        assert!(matches!(Field::new(2, 2, Some(&[1, 1])), Err(Error::DegreeMismatch { .. })));
        assert_eq!(Field::new(2, 2, Some(&[1, 1, 0])).unwrap_err(), Error::NotMonic);
    }

    #[test]
    fn gf4_arith() {
        let f = Field::gf(2, 2);
        let a = 2;
        assert_eq!(f.mul(a, a), 3);
        assert_eq!(f.add(a, a), 0);
        assert_eq!(f.inv(a).unwrap(), 3);
        assert_eq!(f.inv(0), Err(Error::DivisionByZero));
        assert_eq!(f.frobenius(a, 1), 3);
        assert_eq!(f.frobenius(a, 2), a);
        assert_eq!(f.frobenius(0, 5), 0);
        assert_eq!(f.trace(a), 1);
        assert_eq!(f.trace(1), 0);
        assert_eq!(f.trace(0), 0);
    }

    #[test]
    fn gf4_dual_basis() {
        let f = Field::gf(2, 2);
        let d = f.dual_basis(&[1, 2]).unwrap();
        assert_eq!(d, vec![3, 1]);
        assert_eq!(f.dual_basis(&d).unwrap(), vec![1, 2]);
        assert_eq!(f.dual_basis(&[1, 1]), Err(Error::DependentBasis));
    }

    #[test]
    fn expand_digits() {
        let f = Field::gf(2, 2);
        assert_eq!(f.expand(&[1, 2, 3]), vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(f.expand(&[0, 0, 0]), vec![vec![0; 3]; 2]);
        let b = Basis::polynomial(&f);
        assert_eq!(b.expand(&[1, 2, 3]), f.expand(&[1, 2, 3]));
    }

    #[test]
    fn element_wrapper() {
        let f = Field::gf(2, 2);
        let g = Field::gf(2, 3);
        let a = FieldElement::new(&f, 2).unwrap();
        let b = FieldElement::new(&g, 2).unwrap();
        assert_eq!(element_arith(&a, &b, ArithOp::Add), Err(Error::FieldMismatch));
        assert_eq!(element_arith(&a, &a, ArithOp::Mul).unwrap().value(), 3);
        assert_eq!(element_arith(&a, &a, ArithOp::Pow(3)).unwrap().value(), 1);
        assert!(FieldElement::new(&f, 4).is_err());
    }

    #[test]
    fn table_and_schoolbook_agree() {
        for (q, m) in [(2, 8), (3, 5), (5, 3), (2, 1), (3, 1)] {
            let f = Field::gf(q, m);
            let s = f.without_tables();
            for a in 0..f.size() {
                for b in (0..f.size()).step_by(7) {
                    assert_eq!(f.mul(a, b), s.mul(a, b));
                }
            }
        }
    }

    #[test]
    fn field_axioms_small() {
        for (q, m) in [(2, 3), (3, 2), (5, 2)] {
            let f = Field::gf(q, m);
            for a in 0..f.size() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                assert_eq!(f.frobenius(a, m as u64), a);
                for b in 0..f.size() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
                }
            }
        }
    }

    #[test]
    fn descriptor_round_trip() {
        let f = Field::gf(3, 3);
        let g = Field::parse_descriptor(&f.descriptor()).unwrap();
        assert_eq!(f, g);
        assert_eq!(Field::parse_descriptor("2 2").unwrap(), Field::gf(2, 2));
    }
}
