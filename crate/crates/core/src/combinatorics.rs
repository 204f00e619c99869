//! `b`-nary Gaussian coefficients and the beta and gamma products.
//!
//! All functions evaluate at a concrete rational base. The base `b = 1` is
//! handled as the limit case: Gaussian coefficients become binomial
//! coefficients and the beta product becomes a falling factorial.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, int};

/// Base `b` of the Gaussian coefficients.
///
/// Rejects `b = 0` and `b = -1`, the only rationals for which a factor
/// `b^k - b^i` with `k != i` vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Base(BigRational);

impl Base {
    pub fn new(b: BigRational) -> Result<Self> {
        if b.is_zero() || b == -BigRational::one() {
            return Err(Error::InvalidBase(scalar::format(&b)));
        }
        Ok(Base(b))
    }

    pub fn from_int(b: i64) -> Result<Self> {
        Self::new(int(b))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// `b^e` for any integer `e`.
    pub fn pow(&self, e: i64) -> BigRational {
        scalar::pow(&self.0, e)
    }
}

/// `i(i-1)/2`.
pub fn sigma(i: i64) -> i64 {
    i * (i - 1) / 2
}

/// The `b`-nary Gaussian coefficient `[x k]_b`.
///
/// Zero for `k < 0`, one for `k = 0`, and zero for `0 <= x < k`. Negative `x`
/// is evaluated through the same product.
pub fn gauss(x: i64, k: i64, b: &Base) -> BigRational {
    if k < 0 {
        return BigRational::zero();
    }
    if b.is_one() {
        let mut acc = BigRational::one();
        for i in 0..k {
            acc *= scalar::ratio(x - i, k - i);
        }
        return acc;
    }
    let bx = b.pow(x);
    let bk = b.pow(k);
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for i in 0..k {
        let bi = b.pow(i);
        num *= &bx - &bi;
        den *= &bk - &bi;
    }
    num / den
}

/// The `b`-nary beta function `prod_{i<k} [x-i 1]_b`.
pub fn beta(x: i64, k: u32, b: &Base) -> BigRational {
    (0..k as i64).map(|i| gauss(x - i, 1, b)).product()
}

/// The `b`-nary gamma function `prod_{i<k} (c b^x - b^i)`.
pub fn gamma(x: i64, k: u32, b: &Base, c: &BigRational) -> BigRational {
    let cbx = c * b.pow(x);
    (0..k as i64).map(|i| &cbx - b.pow(i)).product()
}
