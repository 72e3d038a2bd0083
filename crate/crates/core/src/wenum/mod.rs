//! Rank weight enumerators: q-products, q-derivatives, Krawtchouk polynomials,
//! and the MacWilliams transform.
//!
//! Coefficients are exact rationals. The field-degree parameter `m` is an
//! arbitrary integer here, because the q-product evaluates its right operand at
//! `m - i` and the Krawtchouk recurrence walks `m` downwards; q^m is then a
//! rational with a power-of-q denominator.

pub mod krawtchouk;
pub mod macwilliams;
pub mod poly;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use krawtchouk::{
    delta_sum_identity, krawtchouk, krawtchouk_rational, krawtchouk_recurrence, theta_sum_identity, KrawtchoukTable,
};
pub use macwilliams::{
    cartesian_extend, dual_vector_enumerator, macwilliams, macwilliams_qproduct, moments, trivial_mrd_enumerator,
    Moments, RankEnumerator,
};
pub use poly::{leibniz_derivative, leibniz_inv_derivative, ParametricPoly};

/// q^e for any integer e.
pub fn qpow(q: u32, e: i64) -> BigRational {
    let p = BigInt::from(q).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// alpha(m, u) = prod_{i<u} (q^m - q^i) for any integer m; zero for u < 0.
pub fn alpha_r(q: u32, m: i64, u: i64) -> BigRational {
    if u < 0 {
        return BigRational::zero();
    }
    let qm = qpow(q, m);
    (0..u).fold(BigRational::one(), |acc, i| acc * (&qm - qpow(q, i)))
}

/// Gaussian binomial as a rational; zero outside 0 <= k <= n.
pub fn gauss_r(q: u32, n: i64, k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(crate::rankgeom::gaussian(q, n, k)))
}

/// beta(m, u) as a rational.
pub fn beta_r(q: u32, m: i64, u: i64) -> BigRational {
    if u < 0 {
        return BigRational::zero();
    }
    BigRational::from_integer(BigInt::from(crate::rankgeom::beta(q, m, u as u32)))
}

/// sigma_i = i(i-1)/2 for any integer i.
pub fn sigma_i(i: i64) -> i64 {
    i * (i - 1) / 2
}

pub fn sign(i: i64) -> BigRational {
    if i.rem_euclid(2) == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

pub fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

pub fn big_uint(x: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_kernels() {
        assert_eq!(qpow(2, -3), BigRational::new(1.into(), 8.into()));
        assert_eq!(alpha_r(2, 2, 2), int(6));
        // alpha(-1, 1) = 1/2 - 1
        assert_eq!(alpha_r(2, -1, 1), BigRational::new((-1).into(), 2.into()));
        assert_eq!(alpha_r(2, 3, -1), BigRational::zero());
        assert_eq!(gauss_r(2, 4, 2), int(35));
        assert_eq!(sigma_i(3), 3);
    }
}
