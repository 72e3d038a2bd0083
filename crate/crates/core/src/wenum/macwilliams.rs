//! Rank enumerators and the MacWilliams transform.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::krawtchouk::KrawtchoukTable;
use super::poly::ParametricPoly;
use super::{alpha_r, gauss_r, int, qpow, sigma_i, sign};
use crate::codes::RankDistribution;
use crate::error::{Error, Result};

/// W(x, y) = sum_i A_i y^i x^{n-i} for a code in GF(q^m)^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankEnumerator {
    q: u32,
    m: u32,
    n: u32,
    coeffs: Vec<BigInt>,
}

impl fmt::Display for RankEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn to_integer(v: &BigRational, what: &str) -> Result<BigInt> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{what} = {v}")))
    }
}

impl RankEnumerator {
    pub fn new(q: u32, m: u32, n: u32, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != n as usize + 1 {
            return Err(Error::Invalid(format!("{} coefficients for length {n}", coeffs.len())));
        }
        if let Some(c) = coeffs.iter().find(|c| c.is_negative()) {
            return Err(Error::Invalid(format!("negative coefficient {c}")));
        }
        let top = m.min(n) as usize;
        if coeffs[top + 1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::Invalid(format!("nonzero count above rank {top}")));
        }
        Ok(RankEnumerator { q, m, n, coeffs })
    }

    pub fn from_counts(q: u32, m: u32, counts: &[u64]) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::Invalid("empty distribution".into()));
        }
        let n = counts.len() as u32 - 1;
        RankEnumerator::new(q, m, n, counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_distribution(q: u32, m: u32, d: &RankDistribution) -> Result<Self> {
        RankEnumerator::from_counts(q, m, &d.counts)
    }

    pub fn params(&self) -> (u32, u32, u32) {
        (self.q, self.m, self.n)
    }
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn total(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// k with total = q^{mk}, for enumerators of linear codes.
    pub fn dimension(&self) -> Result<u32> {
        let t = self.total();
        let qm = BigInt::from(self.q).pow(self.m);
        let mut p = BigInt::one();
        for k in 0..=self.n {
            if p == t {
                return Ok(k);
            }
            p *= &qm;
        }
        Err(Error::Invalid(format!("total {t} is not a power of q^m up to q^(mn)")))
    }

    /// Smallest nonzero rank with a nonzero count; n + 1 when there is none.
    pub fn min_distance(&self) -> u32 {
        (1..=self.n).find(|&i| !self.coeffs[i as usize].is_zero()).unwrap_or(self.n + 1)
    }

    fn from_rationals(q: u32, m: u32, vals: &[BigRational], scale: &BigRational) -> Result<Self> {
        let coeffs = vals
            .iter()
            .enumerate()
            .map(|(j, v)| to_integer(&(v * scale), &format!("coefficient {j}")))
            .collect::<Result<Vec<_>>>()?;
        RankEnumerator::new(q, m, vals.len() as u32 - 1, coeffs)
    }

    /// The enumerator as an m-independent polynomial.
    pub fn as_poly(&self) -> ParametricPoly {
        ParametricPoly::constant_coeffs(self.q, self.coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }
}

/// B_j = q^{-mk} sum_i A_i P_j(i; m, n).
pub fn macwilliams(a: &RankEnumerator) -> Result<RankEnumerator> {
    let (q, m, n) = a.params();
    let k = a.dimension()?;
    let table = KrawtchoukTable::cached(q, m, n)?;
    let vals: Vec<BigRational> = (0..=n as usize)
        .map(|j| {
            let s: BigInt = a.coeffs.iter().enumerate().map(|(i, ai)| ai * table.get(j, i)).sum();
            BigRational::from_integer(s)
        })
        .collect();
    RankEnumerator::from_rationals(q, m, &vals, &qpow(q, -((m * k) as i64)))
}

/// q^{-mk} sum_i A_i (x - y)^{[i]} * [x + (q^m - 1) y]^{[n-i]}.
pub fn macwilliams_qproduct(a: &RankEnumerator) -> Result<RankEnumerator> {
    let (q, m, n) = a.params();
    let k = a.dimension()?;
    let mut acc = vec![BigRational::zero(); n as usize + 1];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        let term = ParametricPoly::b(q, i).q_product(&ParametricPoly::a(q, n as usize - i))?;
        let c = BigRational::from_integer(ai.clone());
        for (s, t) in acc.iter_mut().zip(term.eval(m as i64).iter()) {
            *s += &c * t;
        }
    }
    RankEnumerator::from_rationals(q, m, &acc, &qpow(q, -((m * k) as i64)))
}

/// Enumerator of the (r, r-1) MRD code: q^{-m} (a_r + (q^m - 1) b_r).
pub fn trivial_mrd_enumerator(q: u32, m: u32, r: u32) -> Result<RankEnumerator> {
    if r == 0 || r > m {
        return Err(Error::OutOfRange(format!("r = {r} for m = {m}")));
    }
    let qm = qpow(q, m as i64);
    let p = ParametricPoly::a(q, r as usize).add(&ParametricPoly::b(q, r as usize).scale(&qm - int(1)))?;
    RankEnumerator::from_rationals(q, m, &p.eval(m as i64), &qm.recip())
}

/// Enumerator of the dual of span{v} for any v of rank r in GF(q^m)^n:
/// q^{-m} (a_n + (q^m - 1) b_r * a_{n-r}).
pub fn dual_vector_enumerator(q: u32, m: u32, n: u32, r: u32) -> Result<RankEnumerator> {
    if r > m.min(n) {
        return Err(Error::OutOfRange(format!("rank {r} in GF({q}^{m})^{n}")));
    }
    let qm = qpow(q, m as i64);
    let prod = ParametricPoly::b(q, r as usize).q_product(&ParametricPoly::a(q, (n - r) as usize))?;
    let p = ParametricPoly::a(q, n as usize).add(&prod.scale(&qm - int(1)))?;
    RankEnumerator::from_rationals(q, m, &p.eval(m as i64), &qm.recip())
}

/// Enumerator of C x GF(q^m)^s: W * a_s.
pub fn cartesian_extend(w: &RankEnumerator, s: u32) -> Result<RankEnumerator> {
    let (q, m, _) = w.params();
    let p = w.as_poly().q_product(&ParametricPoly::a(q, s as usize))?;
    RankEnumerator::from_rationals(q, m, &p.eval(m as i64), &BigRational::one())
}

/// Both sides of the two moment identities at order nu, plus the closed forms
/// they reduce to when nu is below the dual distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Moments {
    pub nu: u32,
    pub lhs_37: BigRational,
    pub rhs_37: BigRational,
    pub lhs_38: BigRational,
    pub rhs_38: BigRational,
    /// (q^{m(k-nu)} [n nu], q^{m(k-nu)} [n nu] alpha(m, nu)) when nu < d'_R.
    pub reduced: Option<(BigRational, BigRational)>,
}

impl Moments {
    pub fn holds(&self) -> bool {
        self.lhs_37 == self.rhs_37
            && self.lhs_38 == self.rhs_38
            && self.reduced.as_ref().map_or(true, |(r37, r38)| *r37 == self.lhs_37 && *r38 == self.lhs_38)
    }
}

/// Moment identities for a code with enumerator `a` and dual enumerator `b`.
pub fn moments(a: &RankEnumerator, b: &RankEnumerator, nu: u32) -> Result<Moments> {
    let (q, m, n) = a.params();
    if b.params() != (q, m, n) {
        return Err(Error::Invalid("enumerators over different parameters".into()));
    }
    if nu > n {
        return Err(Error::OutOfRange(format!("nu = {nu} above n = {n}")));
    }
    if macwilliams(a)? != *b {
        return Err(Error::Invalid("not a MacWilliams pair".into()));
    }
    let k = a.dimension()? as i64;
    let (mi, ni, nv) = (m as i64, n as i64, nu as i64);
    let av = |i: i64| BigRational::from_integer(a.coeffs[i as usize].clone());
    let bv = |j: i64| BigRational::from_integer(b.coeffs[j as usize].clone());
    let front = qpow(q, mi * (k - nv));

    let lhs_37 = (0..=ni - nv).fold(BigRational::zero(), |s, i| s + gauss_r(q, ni - i, nv) * av(i));
    let rhs_37 = &front * (0..=nv).fold(BigRational::zero(), |s, j| s + gauss_r(q, ni - j, ni - nv) * bv(j));

    let lhs_38 = (nv..=ni).fold(BigRational::zero(), |s, i| s + gauss_r(q, i, nv) * qpow(q, nv * (ni - i)) * av(i));
    let rhs_38 = &front
        * (0..=ni).fold(BigRational::zero(), |s, j| {
            s + gauss_r(q, ni - j, ni - nv)
                * sign(j)
                * qpow(q, sigma_i(j) + j * (nv - j))
                * alpha_r(q, mi - j, nv - j)
                * bv(j)
        });

    let reduced = (nu < b.min_distance()).then(|| {
        let r37 = &front * gauss_r(q, ni, nv);
        let r38 = &r37 * alpha_r(q, mi, nv);
        (r37, r38)
    });
    Ok(Moments { nu, lhs_37, rhs_37, lhs_38, rhs_38, reduced })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn en(c: &[u64]) -> RankEnumerator {
        RankEnumerator::from_counts(2, 2, c).unwrap()
    }

    #[test]
    fn transform_examples() {
        assert_eq!(macwilliams(&en(&[1, 9, 6])).unwrap(), en(&[1, 0, 0]));
        assert_eq!(macwilliams(&en(&[1, 0, 3])).unwrap(), en(&[1, 0, 3]));
        assert_eq!(macwilliams(&en(&[1, 0, 0])).unwrap(), en(&[1, 9, 6]));
        for c in [[1u64, 9, 6], [1, 0, 3], [1, 0, 0]] {
            assert_eq!(macwilliams_qproduct(&en(&c)).unwrap(), macwilliams(&en(&c)).unwrap());
        }
        assert!(macwilliams(&en(&[1, 1, 0])).is_err());
        assert!(RankEnumerator::from_counts(2, 1, &[1, 1, 1]).is_err());
    }

    #[test]
    fn constructed_enumerators() {
        assert_eq!(trivial_mrd_enumerator(2, 2, 2).unwrap(), en(&[1, 0, 3]));
        for n in 0..=3 {
            let full =
                RankEnumerator::from_rationals(2, 2, &ParametricPoly::a(2, n as usize).eval(2), &int(1)).unwrap();
            assert_eq!(dual_vector_enumerator(2, 2, n, 0).unwrap(), full);
        }
        let one = RankEnumerator::from_counts(2, 2, &[1]).unwrap();
        assert_eq!(cartesian_extend(&one, 2).unwrap(), en(&[1, 9, 6]));
    }

    #[test]
    fn cartesian_coefficient_recursion() {
        // B_{s,u} = sum_i q^{is} B_{0,i} [s u-i] alpha(m-i, u-i)
        let (q, m) = (2u32, 3i64);
        let w = RankEnumerator::from_counts(q, 3, &[1, 0, 7]).unwrap();
        for s in 0..=3i64 {
            let got = cartesian_extend(&w, s as u32).unwrap();
            for u in 0..=(2 + s) {
                let want = (0..=u.min(2)).fold(BigRational::zero(), |acc, i| {
                    acc + qpow(q, i * s)
                        * int(w.coeffs()[i as usize].clone())
                        * gauss_r(q, s, u - i)
                        * alpha_r(q, m - i, u - i)
                });
                assert_eq!(int(got.coeffs()[u as usize].clone()), want);
            }
        }
    }

    #[test]
    fn moment_examples() {
        let a = en(&[1, 0, 3]);
        let mo = moments(&a, &a, 1).unwrap();
        assert_eq!((mo.lhs_37.clone(), mo.rhs_37.clone()), (int(3), int(3)));
        assert_eq!((mo.lhs_38.clone(), mo.rhs_38.clone()), (int(9), int(9)));
        assert!(mo.holds());
        let m0 = moments(&a, &a, 0).unwrap();
        assert_eq!(m0.lhs_37, int(4));
        assert!(moments(&a, &en(&[1, 9, 6]), 1).is_err());
    }
}
