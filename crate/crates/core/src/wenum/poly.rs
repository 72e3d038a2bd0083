//! Homogeneous polynomials sum_u c_u(m) y^u x^{d-u} whose coefficients depend on m.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{alpha_r, beta_r, gauss_r, int, qpow, sigma_i, sign};
use crate::error::{Error, Result};

type Family = dyn Fn(i64) -> Vec<BigRational> + Send + Sync;

/// A coefficient family m -> (c_0(m), ..., c_d(m)), evaluated lazily and memoized.
#[derive(Clone)]
pub struct ParametricPoly {
    q: u32,
    degree: usize,
    family: Arc<Family>,
    memo: Arc<Mutex<HashMap<i64, Arc<Vec<BigRational>>>>>,
}

impl fmt::Debug for ParametricPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParametricPoly(q={}, degree={})", self.q, self.degree)
    }
}

impl ParametricPoly {
    /// `f` must return `degree + 1` coefficients for every integer m.
    pub fn from_fn(q: u32, degree: usize, f: impl Fn(i64) -> Vec<BigRational> + Send + Sync + 'static) -> Self {
        ParametricPoly { q, degree, family: Arc::new(f), memo: Arc::default() }
    }

    /// Coefficients that do not depend on m.
    pub fn constant_coeffs(q: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs at least one coefficient");
        let d = coeffs.len() - 1;
        ParametricPoly::from_fn(q, d, move |_| coeffs.clone())
    }

    pub fn from_integers(q: u32, coeffs: &[i64]) -> Self {
        ParametricPoly::constant_coeffs(q, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn one(q: u32) -> Self {
        ParametricPoly::from_integers(q, &[1])
    }

    pub fn y_pow(q: u32, l: usize) -> Self {
        let mut c = vec![BigRational::zero(); l + 1];
        c[l] = BigRational::one();
        ParametricPoly::constant_coeffs(q, c)
    }

    pub fn x_pow(q: u32, l: usize) -> Self {
        let mut c = vec![BigRational::zero(); l + 1];
        c[0] = BigRational::one();
        ParametricPoly::constant_coeffs(q, c)
    }

    /// a_l = sum_u [l u] alpha(m, u) y^u x^{l-u}, the q-power [x + (q^m - 1) y]^{[l]}.
    pub fn a(q: u32, l: usize) -> Self {
        ParametricPoly::from_fn(q, l, move |m| {
            (0..=l as i64).map(|u| gauss_r(q, l as i64, u) * alpha_r(q, m, u)).collect()
        })
    }

    /// b_l = sum_u [l u] (-1)^u q^{sigma_u} y^u x^{l-u}, the q-power (x - y)^{[l]}.
    pub fn b(q: u32, l: usize) -> Self {
        ParametricPoly::from_fn(q, l, move |_| {
            (0..=l as i64).map(|u| gauss_r(q, l as i64, u) * sign(u) * qpow(q, sigma_i(u))).collect()
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn eval(&self, m: i64) -> Arc<Vec<BigRational>> {
        if let Some(v) = self.memo.lock().unwrap().get(&m) {
            return v.clone();
        }
        let v = Arc::new((self.family)(m));
        assert_eq!(v.len(), self.degree + 1, "coefficient family returned the wrong length");
        self.memo.lock().unwrap().insert(m, v.clone());
        v
    }

    /// Coefficients at m, each required to be an integer.
    pub fn eval_integers(&self, m: i64) -> Result<Vec<num_bigint::BigInt>> {
        self.eval(m)
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral(format!("coefficient {c} at m = {m}")))
                }
            })
            .collect()
    }

    fn same_q(&self, other: &Self) -> Result<()> {
        if self.q == other.q {
            Ok(())
        } else {
            Err(Error::Invalid(format!("q mismatch: {} vs {}", self.q, other.q)))
        }
    }

    /// The q-product: c_u(m) = sum_i q^{i s} a_i(m) b_{u-i}(m - i), s = deg b.
    pub fn q_product(&self, other: &Self) -> Result<Self> {
        self.same_q(other)?;
        let (a, b) = (self.clone(), other.clone());
        let (r, s, q) = (self.degree, other.degree, self.q);
        Ok(ParametricPoly::from_fn(q, r + s, move |m| {
            let ac = a.eval(m);
            let mut out = vec![BigRational::zero(); r + s + 1];
            for (i, ai) in ac.iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                let bc = b.eval(m - i as i64);
                let f = qpow(q, (i * s) as i64) * ai;
                for (j, bj) in bc.iter().enumerate() {
                    out[i + j] += &f * bj;
                }
            }
            out
        }))
    }

    /// f^{[l]} = f * f^{[l-1]} with f^{[0]} = 1.
    pub fn q_power(&self, l: usize) -> Result<Self> {
        let mut acc = ParametricPoly::one(self.q);
        for _ in 0..l {
            acc = self.q_product(&acc)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_q(other)?;
        if self.degree != other.degree {
            return Err(Error::Invalid("sum of polynomials of different degrees".into()));
        }
        let (a, b) = (self.clone(), other.clone());
        Ok(ParametricPoly::from_fn(self.q, self.degree, move |m| {
            a.eval(m).iter().zip(b.eval(m).iter()).map(|(x, y)| x + y).collect()
        }))
    }

    /// Multiply every coefficient by c(m).
    pub fn scale_fn(&self, c: impl Fn(i64) -> BigRational + Send + Sync + 'static) -> Self {
        let a = self.clone();
        ParametricPoly::from_fn(self.q, self.degree, move |m| {
            let f = c(m);
            a.eval(m).iter().map(|x| x * &f).collect()
        })
    }

    pub fn scale(&self, c: BigRational) -> Self {
        self.scale_fn(move |_| c.clone())
    }

    /// m -> f(m - k).
    pub fn shift(&self, k: i64) -> Self {
        let a = self.clone();
        ParametricPoly::from_fn(self.q, self.degree, move |m| a.eval(m - k).to_vec())
    }

    /// y^i x^{r-i} -> y^{[i]} * x^{[r-i]} = q^{sigma_i} y^i x^{r-i}.
    pub fn q_transform(&self) -> Self {
        let (a, q) = (self.clone(), self.q);
        ParametricPoly::from_fn(q, self.degree, move |m| {
            a.eval(m).iter().enumerate().map(|(i, c)| c * qpow(q, sigma_i(i as i64))).collect()
        })
    }

    /// nu-th q-derivative in x: coefficient i becomes f_i beta(r - i, nu), degree r - nu.
    pub fn q_derivative(&self, nu: usize) -> Result<Self> {
        let r = self.degree;
        if nu > r {
            return Err(Error::OutOfRange(format!("derivative order {nu} above degree {r}")));
        }
        let (a, q) = (self.clone(), self.q);
        Ok(ParametricPoly::from_fn(q, r - nu, move |m| {
            let c = a.eval(m);
            (0..=r - nu).map(|i| &c[i] * beta_r(q, (r - i) as i64, nu as i64)).collect()
        }))
    }

    /// nu-th q^{-1}-derivative in y: y^i -> q^{nu(1-i) + sigma_nu} beta(i, nu) y^{i-nu}.
    pub fn q_inv_derivative(&self, nu: usize) -> Result<Self> {
        let r = self.degree;
        if nu > r {
            return Err(Error::OutOfRange(format!("derivative order {nu} above degree {r}")));
        }
        let (a, q) = (self.clone(), self.q);
        let nu = nu as i64;
        Ok(ParametricPoly::from_fn(q, r - nu as usize, move |m| {
            let c = a.eval(m);
            (nu..=r as i64).map(|i| &c[i as usize] * qpow(q, nu * (1 - i) + sigma_i(nu)) * beta_r(q, i, nu)).collect()
        }))
    }

    /// Coefficient-wise equality at every listed m.
    pub fn agrees_with(&self, other: &Self, ms: impl IntoIterator<Item = i64>) -> bool {
        self.degree == other.degree && ms.into_iter().all(|m| self.eval(m) == other.eval(m))
    }
}

/// [f * g]^{(nu)} by the product rule: sum_l [nu l] q^{(nu-l)(r-l)} f^{(l)} * g^{(nu-l)}.
pub fn leibniz_derivative(f: &ParametricPoly, g: &ParametricPoly, nu: usize) -> Result<ParametricPoly> {
    let (r, s, q) = (f.degree(), g.degree(), f.q());
    if nu > r + s {
        return Err(Error::OutOfRange(format!("derivative order {nu}")));
    }
    let mut acc: Option<ParametricPoly> = None;
    for l in 0..=nu {
        if l > r || nu - l > s {
            continue;
        }
        let c = gauss_r(q, nu as i64, l as i64) * qpow(q, ((nu - l) * (r - l)) as i64);
        let term = f.q_derivative(l)?.q_product(&g.q_derivative(nu - l)?)?.scale(c);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    acc.ok_or_else(|| Error::OutOfRange(format!("derivative order {nu}")))
}

/// [f * g]^{{nu}} by the product rule:
/// sum_l [nu l] q^{l(s-nu+l)} f^{{l}}(m) * g^{{nu-l}}(m - l).
pub fn leibniz_inv_derivative(f: &ParametricPoly, g: &ParametricPoly, nu: usize) -> Result<ParametricPoly> {
    let (r, s, q) = (f.degree(), g.degree(), f.q());
    if nu > r + s {
        return Err(Error::OutOfRange(format!("derivative order {nu}")));
    }
    let mut acc: Option<ParametricPoly> = None;
    for l in 0..=nu {
        if l > r || nu - l > s {
            continue;
        }
        let e = l as i64 * (s as i64 - nu as i64 + l as i64);
        let c = gauss_r(q, nu as i64, l as i64) * qpow(q, e);
        let right = g.q_inv_derivative(nu - l)?.shift(l as i64);
        let term = f.q_inv_derivative(l)?.q_product(&right)?.scale(c);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    acc.ok_or_else(|| Error::OutOfRange(format!("derivative order {nu}")))
}
