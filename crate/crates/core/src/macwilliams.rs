//! The MacWilliams transform, moments of weight distributions and the
//! weight distribution of maximal codes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{gamma, gauss, sigma, Base};
use crate::error::{Error, Result};
use crate::homogeneous::{b_product, mu_family, nu_family, HomPoly};
use crate::krawtchouk::eigenmatrix;
use crate::scalar::{self, from_bigint, neg_one_pow};
use crate::scheme::SchemeParams;

/// `(c_0, ..., c_n)`: the number of codewords of each scheme weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightDistribution(Vec<BigInt>);

impl WeightDistribution {
    pub fn new(counts: Vec<BigInt>) -> Self {
        WeightDistribution(counts)
    }

    pub fn from_i64(counts: &[i64]) -> Self {
        WeightDistribution(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero code in a scheme with `n` classes.
    pub fn zero_code(n: usize) -> Self {
        let mut counts = vec![BigInt::zero(); n + 1];
        counts[0] = BigInt::one();
        WeightDistribution(counts)
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_counts(self) -> Vec<BigInt> {
        self.0
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i]
    }

    /// Number of classes `n`.
    pub fn n(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Smallest nonzero weight, or `n + 1` for the zero code.
    pub fn min_distance(&self) -> usize {
        (1..self.0.len()).find(|&i| self.0[i].is_positive()).unwrap_or(self.0.len())
    }

    /// Largest weight that occurs.
    pub fn diameter(&self) -> usize {
        (0..self.0.len()).rev().find(|&i| self.0[i].is_positive()).unwrap_or(0)
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A weight distribution together with the code size and scheme it belongs
/// to. Construction checks that the three are consistent.
#[derive(Clone, Debug)]
pub struct TransformInput {
    dist: WeightDistribution,
    code_size: BigInt,
    params: SchemeParams,
}

impl TransformInput {
    pub fn new(dist: WeightDistribution, code_size: BigInt, params: SchemeParams) -> Result<Self> {
        let n = params.n();
        if dist.counts().len() != n + 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} weight counts for {}, got {}",
                n + 1,
                params.spec(),
                dist.counts().len()
            )));
        }
        if let Some(c) = dist.counts().iter().find(|c| c.is_negative()) {
            return Err(Error::InvalidInput(format!("negative weight count {c}")));
        }
        if dist.get(0).is_zero() {
            return Err(Error::InvalidInput("c_0 must be at least 1".into()));
        }
        if !code_size.is_positive() {
            return Err(Error::InvalidInput(format!("code size {code_size} must be positive")));
        }
        if !params.space_size().is_multiple_of(&code_size) {
            return Err(Error::InvalidInput(format!(
                "code size {code_size} does not divide |X| = {}",
                params.space_size()
            )));
        }
        if dist.total() != code_size {
            return Err(Error::InvalidInput(format!(
                "weights sum to {} but the code size is {code_size}",
                dist.total()
            )));
        }
        Ok(TransformInput { dist, code_size, params })
    }

    /// Uses the sum of the weights as the code size.
    pub fn from_dist(dist: WeightDistribution, params: SchemeParams) -> Result<Self> {
        let size = dist.total();
        Self::new(dist, size, params)
    }

    pub fn dist(&self) -> &WeightDistribution {
        &self.dist
    }

    pub fn code_size(&self) -> &BigInt {
        &self.code_size
    }

    pub fn params(&self) -> &SchemeParams {
        &self.params
    }

    /// `|X| / |C|`.
    pub fn dual_size(&self) -> BigInt {
        self.params.space_size() / &self.code_size
    }
}

fn into_distribution(values: Vec<BigRational>) -> Result<WeightDistribution> {
    let mut counts = Vec::with_capacity(values.len());
    for (i, v) in values.iter().enumerate() {
        match scalar::to_integer(v) {
            Some(c) if !c.is_negative() => counts.push(c),
            _ => {
                return Err(Error::Unrealizable(format!(
                    "dual weight count {i} is {}",
                    scalar::format(v)
                )))
            }
        }
    }
    Ok(WeightDistribution(counts))
}

/// `c' = c P / |C|` using the eigenmatrix.
pub fn transform_eigen(input: &TransformInput) -> Result<WeightDistribution> {
    let p = eigenmatrix(input.params())?;
    let n = input.params().n();
    let size = from_bigint(input.code_size().clone());
    let values = (0..=n)
        .map(|k| {
            let s: BigInt = (0..=n).map(|i| input.dist().get(i) * p.get(i, k)).sum();
            from_bigint(s) / &size
        })
        .collect();
    into_distribution(values)
}

/// The dual weight enumerator as a polynomial:
/// `(1/|C|) sum_i c_i nu^[i] * mu^[n-i]`, to be read at `lambda = n`.
pub fn dual_enumerator(input: &TransformInput) -> HomPoly {
    let params = input.params();
    let (b, c, n) = (params.b(), params.c(), params.n());
    let size = from_bigint(input.code_size().clone());
    (0..=n)
        .filter(|&i| !input.dist().get(i).is_zero())
        .map(|i| {
            let term = b_product(&nu_family(i, b), &mu_family(n - i, b, c), b);
            term.scale(&(from_bigint(input.dist().get(i).clone()) / &size))
        })
        .reduce(|acc, term| &acc + &term)
        .expect("c_0 is nonzero")
}

/// `c'` read off the `b`-product expansion of the dual weight enumerator.
pub fn transform_functional(input: &TransformInput) -> Result<WeightDistribution> {
    let n = input.params().n();
    into_distribution(dual_enumerator(input).coeffs_at(n as i64))
}

/// Both sides of a moment identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentPair {
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl MomentPair {
    pub fn balanced(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn check_phi(phi: usize, n: usize) -> Result<()> {
    if phi > n {
        return Err(Error::OutOfRange { what: "phi", value: phi as i64, max: n as i64 });
    }
    Ok(())
}

fn check_dual(input: &TransformInput, dual: &WeightDistribution) -> Result<()> {
    if dual.counts().len() != input.dist().counts().len() {
        return Err(Error::InvalidInput("dual distribution has the wrong length".into()));
    }
    if dual.total() != input.dual_size() {
        return Err(Error::InvalidInput(format!(
            "dual weights sum to {} but |X|/|C| = {}",
            dual.total(),
            input.dual_size()
        )));
    }
    Ok(())
}

fn weighted(dist: &WeightDistribution, range: std::ops::RangeInclusive<usize>, f: impl Fn(i64) -> BigRational) -> BigRational {
    range.map(|i| f(i as i64) * from_bigint(dist.get(i).clone())).sum()
}

/// `(1/|C^perp|) (c b^n)^{n-phi}`.
fn moment_prefactor(params: &SchemeParams, dual_size: &BigInt, phi: usize) -> BigRational {
    scalar::pow(&params.cbn(), (params.n() - phi) as i64) / from_bigint(dual_size.clone())
}

/// Moment identity from the `b`-derivative:
///
/// `sum_{i <= n-phi} [n-i phi] c_i
///   = (c b^n)^{n-phi} / |C^perp| * sum_{i <= phi} [n-i n-phi] c'_i`.
pub fn moment_b(input: &TransformInput, phi: usize) -> Result<MomentPair> {
    check_phi(phi, input.params().n())?;
    let dual = transform_eigen(input)?;
    moment_b_with_dual(input, &dual, phi)
}

/// [`moment_b`] with a dual distribution supplied by the caller.
pub fn moment_b_with_dual(input: &TransformInput, dual: &WeightDistribution, phi: usize) -> Result<MomentPair> {
    let params = input.params();
    let n = params.n();
    check_phi(phi, n)?;
    check_dual(input, dual)?;
    let (b, ni, p) = (params.b(), n as i64, phi as i64);
    let lhs = weighted(input.dist(), 0..=n - phi, |i| gauss(ni - i, p, b));
    let sum = weighted(dual, 0..=phi, |i| gauss(ni - i, ni - p, b));
    let rhs = moment_prefactor(params, &input.dual_size(), phi) * sum;
    Ok(MomentPair { lhs, rhs })
}

/// Moment identity from the `b^{-1}`-derivative:
///
/// `sum_{i >= phi} b^{phi(n-i)} [i phi] c_i = (c b^n)^{n-phi} / |C^perp| *
///   sum_{i <= phi} (-1)^i b^{sigma(i) + i(phi-i)} [n-i n-phi] gamma(n-i, phi-i) c'_i`.
pub fn moment_binv(input: &TransformInput, phi: usize) -> Result<MomentPair> {
    check_phi(phi, input.params().n())?;
    let dual = transform_eigen(input)?;
    moment_binv_with_dual(input, &dual, phi)
}

/// [`moment_binv`] with a dual distribution supplied by the caller.
pub fn moment_binv_with_dual(input: &TransformInput, dual: &WeightDistribution, phi: usize) -> Result<MomentPair> {
    let params = input.params();
    let n = params.n();
    check_phi(phi, n)?;
    check_dual(input, dual)?;
    let (b, ni, p) = (params.b(), n as i64, phi as i64);
    let lhs = weighted(input.dist(), phi..=n, |i| b.pow(p * (ni - i)) * gauss(i, p, b));
    let sum = weighted(dual, 0..=phi, |i| binv_weight(params, phi, i));
    let rhs = moment_prefactor(params, &input.dual_size(), phi) * sum;
    Ok(MomentPair { lhs, rhs })
}

/// `(-1)^i b^{sigma(i) + i(phi-i)} [n-i n-phi] gamma(n-i, phi-i)`.
fn binv_weight(params: &SchemeParams, phi: usize, i: i64) -> BigRational {
    let (b, c, n, p) = (params.b(), params.c(), params.n() as i64, phi as i64);
    neg_one_pow(i)
        * b.pow(sigma(i) + i * (p - i))
        * gauss(n - i, n - p, b)
        * gamma(n - i, (p - i) as u32, b, c)
}

/// Right side of [`moment_b`] when `phi < d'`, where only `c'_0 = 1`
/// contributes: `(c b^n)^{n-phi} [n phi] / |C^perp|`.
pub fn moment_b_below_dual_distance(params: &SchemeParams, dual_size: &BigInt, phi: usize) -> BigRational {
    let n = params.n() as i64;
    moment_prefactor(params, dual_size, phi) * gauss(n, phi as i64, params.b())
}

/// Right side of [`moment_binv`] when `phi < d'`:
/// `(c b^n)^{n-phi} [n phi] gamma(n, phi) / |C^perp|`.
pub fn moment_binv_below_dual_distance(params: &SchemeParams, dual_size: &BigInt, phi: usize) -> BigRational {
    let n = params.n() as i64;
    moment_b_below_dual_distance(params, dual_size, phi) * gamma(n, phi as u32, params.b(), params.c())
}

/// `sum_{i <= phi} (-1)^i b^{sigma(i) + i(phi-i)} [n-i n-phi] gamma(n-i, phi-i) c_i`,
/// which vanishes when the dual code's diameter is below `phi`.
pub fn dual_diameter_sum(params: &SchemeParams, dist: &WeightDistribution, phi: usize) -> Result<BigRational> {
    check_phi(phi, params.n())?;
    Ok(weighted(dist, 0..=phi, |i| binv_weight(params, phi, i)))
}

/// Weight distribution of a maximal code (`d + d' = n + 2`) with minimum
/// distance `d_s` and `code_size` codewords.
pub fn maximal_distribution(params: &SchemeParams, d_s: usize, code_size: &BigInt) -> Result<WeightDistribution> {
    let n = params.n();
    if d_s < 1 || d_s > n {
        return Err(Error::OutOfRange { what: "dS", value: d_s as i64, max: n as i64 });
    }
    if !code_size.is_positive() || !params.space_size().is_multiple_of(code_size) {
        return Err(Error::InvalidInput(format!(
            "code size {code_size} must be a positive divisor of |X| = {}",
            params.space_size()
        )));
    }
    let b = params.b();
    let dual_size = from_bigint(params.space_size() / code_size);
    let cbn = params.cbn();
    let (ni, d) = (n as i64, d_s as i64);
    let mut values = vec![BigRational::zero(); n + 1];
    values[0] = BigRational::one();
    for w in 0..=(ni - d) {
        values[(d + w) as usize] = (0..=w)
            .map(|i| {
                neg_one_pow(w - i)
                    * b.pow(sigma(w - i))
                    * gauss(d + w, d + i, b)
                    * gauss(ni, d + w, b)
                    * (scalar::pow(&cbn, d + i) / &dual_size - BigRational::one())
            })
            .sum();
    }
    let dist = into_distribution(values)?;
    if &dist.total() != code_size {
        return Err(Error::Unrealizable(format!(
            "maximal distribution {dist} sums to {} instead of {code_size}",
            dist.total()
        )));
    }
    Ok(dist)
}

/// `x_j = sum_{i <= j} [l-i l-j] y_i` where `l = len - 1`.
pub fn forward_triangular(y: &[BigRational], b: &Base) -> Vec<BigRational> {
    let l = y.len() as i64 - 1;
    (0..=l)
        .map(|j| (0..=j).map(|i| gauss(l - i, l - j, b) * &y[i as usize]).sum())
        .collect()
}

/// Inverse of [`forward_triangular`]:
/// `y_i = sum_{j <= i} (-1)^{i-j} b^{sigma(i-j)} [l-j l-i] x_j`.
pub fn invert_triangular(x: &[BigRational], b: &Base) -> Vec<BigRational> {
    let l = x.len() as i64 - 1;
    (0..=l)
        .map(|i| {
            (0..=i)
                .map(|j| neg_one_pow(i - j) * b.pow(sigma(i - j)) * gauss(l - j, l - i, b) * &x[j as usize])
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::scheme::{xi_vector, SchemeSpec};

    fn params(spec: SchemeSpec) -> SchemeParams {
        SchemeParams::new(spec).unwrap()
    }

    fn input(spec: SchemeSpec, counts: &[i64]) -> TransformInput {
        TransformInput::from_dist(WeightDistribution::from_i64(counts), params(spec)).unwrap()
    }

    fn both(input: &TransformInput) -> WeightDistribution {
        let e = transform_eigen(input).unwrap();
        let f = transform_functional(input).unwrap();
        assert_eq!(e, f);
        e
    }

    #[test]
    fn repetition_code() {
        let out = both(&input(SchemeSpec::hamming(2, 3), &[1, 0, 0, 1]));
        assert_eq!(out, WeightDistribution::from_i64(&[1, 0, 3, 0]));
    }

    #[test]
    fn hamming_7_4() {
        let out = both(&input(SchemeSpec::hamming(2, 7), &[1, 0, 0, 7, 7, 0, 0, 1]));
        assert_eq!(out, WeightDistribution::from_i64(&[1, 0, 0, 0, 7, 0, 0, 0]));
    }

    #[test]
    fn full_space_and_zero_code() {
        for spec in [
            SchemeSpec::hamming(3, 3),
            SchemeSpec::bilinear(2, 3, 2),
            SchemeSpec::gabidulin(3, 2, 2),
            SchemeSpec::skew(2, 5),
            SchemeSpec::hermitian(2, 3),
        ] {
            let p = params(spec);
            let xi = WeightDistribution::new(xi_vector(&p).unwrap());
            let zero = WeightDistribution::zero_code(p.n());
            let full = TransformInput::from_dist(xi.clone(), p.clone()).unwrap();
            assert_eq!(both(&full), zero);
            let z = TransformInput::from_dist(zero, p).unwrap();
            assert_eq!(both(&z), xi);
        }
    }

    #[test]
    fn involution() {
        let inp = input(SchemeSpec::hamming(2, 7), &[1, 0, 0, 7, 7, 0, 0, 1]);
        let dual = transform_eigen(&inp).unwrap();
        let back = transform_functional(&TransformInput::from_dist(dual, inp.params().clone()).unwrap()).unwrap();
        assert_eq!(&back, inp.dist());
    }

    #[test]
    fn rejects_malformed_input() {
        let p = params(SchemeSpec::hamming(2, 3));
        let d = WeightDistribution::from_i64(&[1, 0, 0, 1]);
        assert!(TransformInput::new(d.clone(), BigInt::from(3), p.clone()).is_err());
        assert!(TransformInput::new(WeightDistribution::from_i64(&[1, 0, 1]), BigInt::from(2), p.clone()).is_err());
        // 3 does not divide 8.
        assert!(TransformInput::from_dist(WeightDistribution::from_i64(&[1, 1, 1, 0]), p.clone()).is_err());
        // Sums and divides, but three weight-1 words span a code of size 8.
        let bad = TransformInput::from_dist(WeightDistribution::from_i64(&[1, 3, 0, 0]), p).unwrap();
        assert!(matches!(transform_eigen(&bad), Err(Error::Unrealizable(_))));
        assert!(matches!(transform_functional(&bad), Err(Error::Unrealizable(_))));
    }

    #[test]
    fn moments_of_repetition_code() {
        let inp = input(SchemeSpec::hamming(2, 3), &[1, 0, 0, 1]);
        for phi in 0..=3 {
            assert!(moment_b(&inp, phi).unwrap().balanced(), "phi={phi}");
            assert!(moment_binv(&inp, phi).unwrap().balanced(), "phi={phi}");
        }
        let m0 = moment_b(&inp, 0).unwrap();
        assert_eq!(m0.lhs, int(2));
        let m1 = moment_b(&inp, 1).unwrap();
        assert_eq!(m1.lhs, int(3));
        // d' = 2 for the even-weight dual, so phi = 1 uses only c'_0.
        assert_eq!(m1.rhs, moment_b_below_dual_distance(inp.params(), &inp.dual_size(), 1));
        assert!(moment_b(&inp, 4).is_err());
    }

    #[test]
    fn hamming_alternating_sum() {
        // The even-weight code [3,2] has dual the repetition code, diameter 3,
        // so take the [3,1] repetition code whose dual has diameter 2 < 3.
        let p = params(SchemeSpec::hamming(2, 3));
        let d = WeightDistribution::from_i64(&[1, 0, 0, 1]);
        assert_eq!(dual_diameter_sum(&p, &d, 3).unwrap(), int(0));
    }

    #[test]
    fn maximal_examples() {
        let tetra = maximal_distribution(&params(SchemeSpec::hamming(3, 4)), 3, &BigInt::from(9)).unwrap();
        assert_eq!(tetra, WeightDistribution::from_i64(&[1, 0, 0, 8, 0]));
        let full = maximal_distribution(&params(SchemeSpec::hamming(2, 4)), 1, &BigInt::from(16)).unwrap();
        assert_eq!(full, WeightDistribution::from_i64(&[1, 4, 6, 4, 1]));
        let mrd = maximal_distribution(&params(SchemeSpec::gabidulin(2, 2, 2)), 2, &BigInt::from(4)).unwrap();
        assert_eq!(mrd, WeightDistribution::from_i64(&[1, 0, 3]));
    }

    #[test]
    fn maximal_rejects_impossible_parameters() {
        // A binary [4,3] code with d = 3 would violate the Hamming bound.
        let r = maximal_distribution(&params(SchemeSpec::hamming(2, 4)), 3, &BigInt::from(8));
        assert!(r.is_err());
        assert!(maximal_distribution(&params(SchemeSpec::hamming(2, 4)), 0, &BigInt::from(8)).is_err());
        assert!(maximal_distribution(&params(SchemeSpec::hamming(2, 4)), 2, &BigInt::from(3)).is_err());
    }

    #[test]
    fn triangular_examples() {
        let b = Base::from_int(2).unwrap();
        assert_eq!(invert_triangular(&[int(7)], &b), vec![int(7)]);
        let l = 4;
        let mut e0 = vec![int(0); l + 1];
        e0[0] = int(1);
        let x = forward_triangular(&e0, &b);
        for (j, xj) in x.iter().enumerate() {
            assert_eq!(xj, &gauss(l as i64, (l - j) as i64, &b));
        }
        assert_eq!(invert_triangular(&x, &b), e0);
    }

    #[test]
    fn distances() {
        let d = WeightDistribution::from_i64(&[1, 0, 3, 0]);
        assert_eq!(d.min_distance(), 2);
        assert_eq!(d.diameter(), 2);
        let z = WeightDistribution::zero_code(3);
        assert_eq!(z.min_distance(), 4);
        assert_eq!(z.diameter(), 0);
    }
}
