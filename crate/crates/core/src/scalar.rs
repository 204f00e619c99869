//! Exact rational scalars.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type ExactScalar = BigRational;

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_bigint(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// `base^exp` for any integer exponent.
///
/// Panics if `base` is zero and `exp` is negative.
pub fn pow(base: &BigRational, exp: i64) -> BigRational {
    let mag = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp >= 0 {
        mag
    } else {
        assert!(!mag.is_zero(), "zero raised to a negative power");
        mag.recip()
    }
}

pub fn neg_one_pow(exp: i64) -> BigRational {
    if exp.is_even() {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// The integer value of `x`, if it has one.
pub fn to_integer(x: &BigRational) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

pub fn is_nonneg_integer(x: &BigRational) -> bool {
    x.is_integer() && !x.is_negative()
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Formats as `"p"` for integers, `"p/q"` otherwise.
pub fn format(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_i64(x: &BigRational) -> Option<i64> {
    to_integer(x)?.to_i64()
}
