//! Homogeneous bivariate polynomials with parameter-dependent coefficients.
//!
//! A [`HomPoly`] of degree `r` is `sum_u a_u(lambda) Y^u X^{r-u}` where each
//! coefficient is a function of an integer parameter `lambda`. The
//! [`b_product`] reads its second factor at shifted parameters, so
//! coefficients are kept as evaluable maps rather than as fixed vectors.
//! Polynomials whose coefficients do not depend on `lambda` are stored as
//! plain vectors and stay that way under products and derivatives.

use std::fmt;
use std::ops::Add;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{beta, gamma, gauss, sigma, Base};
use crate::scalar::{self, int, neg_one_pow};

type CoeffFn = dyn Fn(usize, i64) -> BigRational + Send + Sync;

#[derive(Clone)]
enum Coeffs {
    Fixed(Arc<Vec<BigRational>>),
    Param(Arc<CoeffFn>),
}

#[derive(Clone)]
pub struct HomPoly {
    degree: usize,
    coeffs: Coeffs,
}

impl fmt::Debug for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.coeffs {
            Coeffs::Fixed(v) => {
                let shown: Vec<String> = v.iter().map(scalar::format).collect();
                write!(f, "HomPoly(deg {}, [{}])", self.degree, shown.join(", "))
            }
            Coeffs::Param(_) => write!(f, "HomPoly(deg {}, lambda-dependent)", self.degree),
        }
    }
}

impl HomPoly {
    /// Coefficient vector `[a_0, ..., a_r]`, independent of `lambda`.
    /// An empty vector gives the zero polynomial.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        if coeffs.is_empty() {
            return Self::zero();
        }
        HomPoly { degree: coeffs.len() - 1, coeffs: Coeffs::Fixed(Arc::new(coeffs)) }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Degree-`degree` polynomial with `coeff(u, lambda) = f(u, lambda)` for
    /// `u <= degree`. `f` must be pure.
    pub fn from_fn<F>(degree: usize, f: F) -> Self
    where
        F: Fn(usize, i64) -> BigRational + Send + Sync + 'static,
    {
        HomPoly { degree, coeffs: Coeffs::Param(Arc::new(f)) }
    }

    pub fn constant(a: BigRational) -> Self {
        Self::from_coeffs(vec![a])
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// Degree 0 with coefficient 0.
    pub fn zero() -> Self {
        Self::constant(BigRational::zero())
    }

    /// The monomial `X`.
    pub fn x() -> Self {
        Self::from_ints(&[1, 0])
    }

    /// The monomial `Y`.
    pub fn y() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_lambda_free(&self) -> bool {
        matches!(self.coeffs, Coeffs::Fixed(_))
    }

    /// Coefficient of `Y^u X^{r-u}` at parameter `lambda`; zero for `u > r`.
    pub fn coeff(&self, u: usize, lambda: i64) -> BigRational {
        if u > self.degree {
            return BigRational::zero();
        }
        match &self.coeffs {
            Coeffs::Fixed(v) => v[u].clone(),
            Coeffs::Param(f) => f(u, lambda),
        }
    }

    pub fn coeffs_at(&self, lambda: i64) -> Vec<BigRational> {
        (0..=self.degree).map(|u| self.coeff(u, lambda)).collect()
    }

    /// Builds a polynomial of the given degree from another polynomial's
    /// coefficient map, keeping the vector form when `self` has one.
    fn derive<F>(&self, degree: usize, f: F) -> HomPoly
    where
        F: Fn(&HomPoly, usize, i64) -> BigRational + Send + Sync + 'static,
    {
        if self.is_lambda_free() {
            let coeffs = (0..=degree).map(|u| f(self, u, 0)).collect();
            return HomPoly::from_coeffs(coeffs);
        }
        let this = self.clone();
        HomPoly::from_fn(degree, move |u, lambda| f(&this, u, lambda))
    }

    /// `p(X, Y; lambda + delta)`.
    pub fn shift_lambda(&self, delta: i64) -> HomPoly {
        if self.is_lambda_free() {
            return self.clone();
        }
        self.derive(self.degree, move |p, u, lambda| p.coeff(u, lambda + delta))
    }

    pub fn scale(&self, a: &BigRational) -> HomPoly {
        let a = a.clone();
        self.derive(self.degree, move |p, u, lambda| &a * p.coeff(u, lambda))
    }

    /// Multiplies every coefficient by a scalar that depends on `lambda`.
    pub fn scale_by<F>(&self, f: F) -> HomPoly
    where
        F: Fn(i64) -> BigRational + Send + Sync + 'static,
    {
        let this = self.clone();
        HomPoly::from_fn(self.degree, move |u, lambda| f(lambda) * this.coeff(u, lambda))
    }

    /// Coefficientwise equality at each of the given parameters.
    pub fn agrees_with(&self, other: &HomPoly, lambdas: impl IntoIterator<Item = i64>) -> bool {
        self.degree == other.degree
            && lambdas
                .into_iter()
                .all(|l| (0..=self.degree).all(|u| self.coeff(u, l) == other.coeff(u, l)))
    }
}

/// Coefficientwise sum of two polynomials of the same degree.
///
/// Panics if the degrees differ.
impl Add for &HomPoly {
    type Output = HomPoly;

    fn add(self, rhs: &HomPoly) -> HomPoly {
        assert_eq!(self.degree, rhs.degree, "sum of homogeneous polynomials of different degrees");
        if self.is_lambda_free() && rhs.is_lambda_free() {
            let coeffs = (0..=self.degree).map(|u| self.coeff(u, 0) + rhs.coeff(u, 0)).collect();
            return HomPoly::from_coeffs(coeffs);
        }
        let (a, b) = (self.clone(), rhs.clone());
        HomPoly::from_fn(self.degree, move |u, lambda| a.coeff(u, lambda) + b.coeff(u, lambda))
    }
}

/// A weight enumerator `sum_i c_i Y^i X^{n-i}` with constant coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstPoly {
    coeffs: Vec<BigRational>,
}

impl ConstPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a constant polynomial needs at least one coefficient");
        ConstPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn to_hom(&self) -> HomPoly {
        HomPoly::from_coeffs(self.coeffs.clone())
    }
}

impl From<ConstPoly> for HomPoly {
    fn from(p: ConstPoly) -> Self {
        HomPoly::from_coeffs(p.coeffs)
    }
}

/// The `b`-product `a * g`:
///
/// `c_u(lambda) = sum_i b^{i s} a_i(lambda) g_{u-i}(lambda - i)`
///
/// with `s = deg g`. Not commutative.
pub fn b_product(a: &HomPoly, g: &HomPoly, b: &Base) -> HomPoly {
    let (r, s) = (a.degree, g.degree);
    let coeff = {
        let b = b.clone();
        move |a: &HomPoly, g: &HomPoly, u: usize, lambda: i64| -> BigRational {
            let lo = u.saturating_sub(s);
            let hi = u.min(r);
            (lo..=hi)
                .map(|i| b.pow((i * s) as i64) * a.coeff(i, lambda) * g.coeff(u - i, lambda - i as i64))
                .sum()
        }
    };
    if a.is_lambda_free() && g.is_lambda_free() {
        return HomPoly::from_coeffs((0..=r + s).map(|u| coeff(a, g, u, 0)).collect());
    }
    let (a, g) = (a.clone(), g.clone());
    HomPoly::from_fn(r + s, move |u, lambda| coeff(&a, &g, u, lambda))
}

/// `a^[0] = 1`, `a^[k] = a * a^[k-1]`.
pub fn b_power(a: &HomPoly, k: usize, b: &Base) -> HomPoly {
    (0..k).fold(HomPoly::one(), |acc, _| b_product(a, &acc, b))
}

/// `mu = X + (c b^lambda - 1) Y`.
pub fn mu(b: &Base, c: &BigRational) -> HomPoly {
    let (b, c) = (b.clone(), c.clone());
    HomPoly::from_fn(1, move |u, lambda| match u {
        0 => BigRational::one(),
        _ => &c * b.pow(lambda) - BigRational::one(),
    })
}

/// `nu = X - Y`.
pub fn nu() -> HomPoly {
    HomPoly::from_ints(&[1, -1])
}

/// Closed form of `mu^[k]`: `coeff(u, lambda) = [k u] gamma(lambda, u)`.
pub fn mu_family(k: usize, b: &Base, c: &BigRational) -> HomPoly {
    let (b, c) = (b.clone(), c.clone());
    HomPoly::from_fn(k, move |u, lambda| gauss(k as i64, u as i64, &b) * gamma(lambda, u as u32, &b, &c))
}

/// Closed form of `nu^[k]`: `coeff(u) = (-1)^u b^{sigma(u)} [k u]`.
pub fn nu_family(k: usize, b: &Base) -> HomPoly {
    HomPoly::from_coeffs(
        (0..=k as i64).map(|u| neg_one_pow(u) * b.pow(sigma(u)) * gauss(k as i64, u, b)).collect(),
    )
}

/// The `b`-transform `sum_i a_i Y^[i] * X^[r-i]`.
pub fn b_transform(a: &ConstPoly, b: &Base) -> HomPoly {
    let r = a.degree();
    a.coeffs()
        .iter()
        .enumerate()
        .map(|(i, ai)| {
            b_product(&b_power(&HomPoly::y(), i, b), &b_power(&HomPoly::x(), r - i, b), b).scale(ai)
        })
        .reduce(|acc, term| &acc + &term)
        .expect("nonempty coefficient list")
}

/// The `phi`-th `b`-derivative with respect to `X`:
/// `coeff(i) = f_i beta(r - i, phi)`, degree `r - phi`. At `b = 1` this is the
/// ordinary partial derivative. Returns the zero polynomial when `phi > r`.
pub fn b_derivative(f: &HomPoly, phi: usize, b: &Base) -> HomPoly {
    if phi == 0 {
        return f.clone();
    }
    if phi > f.degree {
        return HomPoly::zero();
    }
    let r = f.degree;
    let b = b.clone();
    f.derive(r - phi, move |f, i, lambda| f.coeff(i, lambda) * beta((r - i) as i64, phi as u32, &b))
}

/// The `phi`-th `b^{-1}`-derivative with respect to `Y`: the coefficient of
/// `Y^{i-phi} X^{s-i}` is `g_i b^{phi(1-i) + sigma(phi)} beta(i, phi)`.
/// At `b = 1` this is the ordinary partial derivative. Returns the zero
/// polynomial when `phi > s`.
pub fn binv_derivative(g: &HomPoly, phi: usize, b: &Base) -> HomPoly {
    if phi == 0 {
        return g.clone();
    }
    if phi > g.degree {
        return HomPoly::zero();
    }
    let s = g.degree;
    let b = b.clone();
    g.derive(s - phi, move |g, u, lambda| {
        let i = (u + phi) as i64;
        let phi = phi as i64;
        g.coeff(u + phi as usize, lambda) * b.pow(phi * (1 - i) + sigma(phi)) * beta(i, phi as u32, &b)
    })
}

/// `f(x, y; lambda)`.
pub fn evaluate(f: &HomPoly, x: &BigRational, y: &BigRational, lambda: i64) -> BigRational {
    let r = f.degree as i64;
    (0..=f.degree)
        .map(|u| f.coeff(u, lambda) * scalar::pow(y, u as i64) * scalar::pow(x, r - u as i64))
        .sum()
}

/// Auxiliary sums from the moment derivations, with their closed forms.
pub mod lemmas {
    use super::*;

    /// `delta(lambda, phi, j) = sum_i (-1)^i [j i] b^{sigma(i)} gamma(lambda - i, phi)`.
    pub fn delta_sum(lambda: i64, phi: u32, j: u32, b: &Base, c: &BigRational) -> BigRational {
        (0..=j as i64)
            .map(|i| neg_one_pow(i) * gauss(j as i64, i, b) * b.pow(sigma(i)) * gamma(lambda - i, phi, b, c))
            .sum()
    }

    /// `prod_{i<j} (b^phi - b^i) gamma(lambda - j, phi - j) (c b^{lambda - j})^j`,
    /// which vanishes for `j > phi`.
    pub fn delta_closed(lambda: i64, phi: u32, j: u32, b: &Base, c: &BigRational) -> BigRational {
        if j > phi {
            return BigRational::zero();
        }
        let bphi = b.pow(phi as i64);
        let prod: BigRational = (0..j as i64).map(|i| &bphi - b.pow(i)).product();
        let j64 = j as i64;
        prod * gamma(lambda - j64, phi - j, b, c) * scalar::pow(&(c * b.pow(lambda - j64)), j64)
    }

    /// `epsilon(Lambda, phi, i) = sum_l [i l] [Lambda-i phi-l] b^{l(Lambda-phi)} (-1)^l
    /// b^{sigma(l)} prod_{j < i-l} (b^{phi-l} - b^j)`.
    pub fn epsilon_sum(cap_lambda: i64, phi: i64, i: i64, b: &Base) -> BigRational {
        (0..=i)
            .map(|l| {
                let bpl = b.pow(phi - l);
                let prod: BigRational = (0..i - l).map(|j| &bpl - b.pow(j)).product();
                gauss(i, l, b)
                    * gauss(cap_lambda - i, phi - l, b)
                    * b.pow(l * (cap_lambda - phi))
                    * neg_one_pow(l)
                    * b.pow(sigma(l))
                    * prod
            })
            .sum()
    }

    /// `(-1)^i b^{sigma(i)} [Lambda-i Lambda-phi]`. Equals [`epsilon_sum`] for
    /// `0 <= i, phi <= Lambda`.
    pub fn epsilon_closed(cap_lambda: i64, phi: i64, i: i64, b: &Base) -> BigRational {
        neg_one_pow(i) * b.pow(sigma(i)) * gauss(cap_lambda - i, cap_lambda - phi, b)
    }
}
