//! The four concrete Krawtchouk association schemes.
//!
//! | kind              | b    | c                        | classes n  | points       |
//! |-------------------|------|--------------------------|------------|--------------|
//! | Hamming           | 1    | q                        | n          | q^n          |
//! | Bilinear/Gabidulin| q    | q^(m-n)                  | n (m >= n) | q^(mn)       |
//! | Skew              | q^2  | q (t odd), 1/q (t even)  | floor(t/2) | q^(t(t-1)/2) |
//! | Hermitian         | -q   | -1                       | t          | q^(t^2)      |

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{gamma, gauss, Base};
use crate::error::{Error, Result};
use crate::homogeneous::{mu_family, ConstPoly};
use crate::krawtchouk::krawtchouk_c;
use crate::scalar::{self, int, ratio};

/// JSON description of a scheme: `{"kind": "skew", "q": 2, "t": 4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SchemeSpec {
    Hamming { q: u32, n: u32 },
    Bilinear { q: u32, m: u32, n: u32 },
    Gabidulin { q: u32, m: u32, n: u32 },
    Skew { q: u32, t: u32 },
    Hermitian { q: u32, t: u32 },
}

impl SchemeSpec {
    pub fn hamming(q: u32, n: u32) -> Self {
        SchemeSpec::Hamming { q, n }
    }

    pub fn bilinear(q: u32, m: u32, n: u32) -> Self {
        SchemeSpec::Bilinear { q, m, n }
    }

    pub fn gabidulin(q: u32, m: u32, n: u32) -> Self {
        SchemeSpec::Gabidulin { q, m, n }
    }

    pub fn skew(q: u32, t: u32) -> Self {
        SchemeSpec::Skew { q, t }
    }

    pub fn hermitian(q: u32, t: u32) -> Self {
        SchemeSpec::Hermitian { q, t }
    }

    pub fn kind(&self) -> SchemeKind {
        match self {
            SchemeSpec::Hamming { .. } => SchemeKind::Hamming,
            SchemeSpec::Bilinear { .. } => SchemeKind::Bilinear,
            SchemeSpec::Gabidulin { .. } => SchemeKind::Gabidulin,
            SchemeSpec::Skew { .. } => SchemeKind::Skew,
            SchemeSpec::Hermitian { .. } => SchemeKind::Hermitian,
        }
    }

    pub fn q(&self) -> u32 {
        match *self {
            SchemeSpec::Hamming { q, .. }
            | SchemeSpec::Bilinear { q, .. }
            | SchemeSpec::Gabidulin { q, .. }
            | SchemeSpec::Skew { q, .. }
            | SchemeSpec::Hermitian { q, .. } => q,
        }
    }
}

impl fmt::Display for SchemeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemeSpec::Hamming { q, n } => write!(f, "hamming(q={q}, n={n})"),
            SchemeSpec::Bilinear { q, m, n } => write!(f, "bilinear(q={q}, m={m}, n={n})"),
            SchemeSpec::Gabidulin { q, m, n } => write!(f, "gabidulin(q={q}, m={m}, n={n})"),
            SchemeSpec::Skew { q, t } => write!(f, "skew(q={q}, t={t})"),
            SchemeSpec::Hermitian { q, t } => write!(f, "hermitian(q={q}, t={t})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SchemeKind {
    Hamming,
    Bilinear,
    Gabidulin,
    Skew,
    Hermitian,
}

/// One instantiated Krawtchouk association scheme.
///
/// For the Hermitian scheme the class count `n` equals the matrix size `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeParams {
    spec: SchemeSpec,
    b: Base,
    c: BigRational,
    n: usize,
    space_size: BigInt,
}

impl SchemeParams {
    pub fn new(spec: SchemeSpec) -> Result<Self> {
        let q = spec.q();
        if q < 2 {
            return Err(Error::InvalidScheme(format!("q = {q} must be at least 2")));
        }
        let qi = q as i64;
        let qb = BigInt::from(q);
        let (b, c, n, exponent) = match spec {
            SchemeSpec::Hamming { n, .. } => {
                require(n >= 1, "hamming needs n >= 1")?;
                (int(1), int(qi), n, n)
            }
            SchemeSpec::Bilinear { m, n, .. } | SchemeSpec::Gabidulin { m, n, .. } => {
                require(n >= 1, "rank schemes need n >= 1")?;
                require(m >= n, "rank schemes need m >= n")?;
                (int(qi), scalar::pow(&int(qi), (m - n) as i64), n, m * n)
            }
            SchemeSpec::Skew { t, .. } => {
                require(t >= 2, "skew needs t >= 2 so that there is at least one class")?;
                let c = if t % 2 == 1 { int(qi) } else { ratio(1, qi) };
                (int(qi * qi), c, t / 2, t * (t - 1) / 2)
            }
            SchemeSpec::Hermitian { t, .. } => {
                require(t >= 1, "hermitian needs t >= 1")?;
                (int(-qi), int(-1), t, t * t)
            }
        };
        let params = SchemeParams {
            spec,
            b: Base::new(b)?,
            c,
            n: n as usize,
            space_size: Pow::pow(qb, exponent),
        };
        let expected = scalar::pow(&params.cbn(), params.n as i64);
        if expected != BigRational::from_integer(params.space_size.clone()) {
            return Err(Error::CrossCheck(format!(
                "(c b^n)^n = {} but |X| = {} for {}",
                scalar::format(&expected),
                params.space_size,
                params.spec
            )));
        }
        Ok(params)
    }

    pub fn spec(&self) -> &SchemeSpec {
        &self.spec
    }

    pub fn kind(&self) -> SchemeKind {
        self.spec.kind()
    }

    pub fn q(&self) -> u32 {
        self.spec.q()
    }

    pub fn b(&self) -> &Base {
        &self.b
    }

    pub fn c(&self) -> &BigRational {
        &self.c
    }

    /// Number of classes.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `|X|`.
    pub fn space_size(&self) -> &BigInt {
        &self.space_size
    }

    /// `c b^n`. At `lambda = n` the fundamental polynomial is
    /// `X + (c b^n - 1) Y`.
    pub fn cbn(&self) -> BigRational {
        &self.c * self.b.pow(self.n as i64)
    }

    /// `m = t(t-1)/(2n)` for the skew scheme.
    pub fn skew_m(&self) -> Option<BigRational> {
        match self.spec {
            SchemeSpec::Skew { t, .. } => {
                Some(ratio((t * (t - 1)) as i64, 2 * self.n as i64))
            }
            _ => None,
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidScheme(msg.to_string()))
    }
}

pub fn make_scheme(spec: SchemeSpec) -> Result<SchemeParams> {
    SchemeParams::new(spec)
}

/// Number of points of weight `omega`: `[n omega]_b gamma(n, omega)`.
pub fn xi(params: &SchemeParams, omega: usize) -> Result<BigInt> {
    let n = params.n();
    if omega > n {
        return Err(Error::OutOfRange { what: "omega", value: omega as i64, max: n as i64 });
    }
    let value = gauss(n as i64, omega as i64, params.b())
        * gamma(n as i64, omega as u32, params.b(), params.c());
    if !scalar::is_nonneg_integer(&value) {
        return Err(Error::CrossCheck(format!(
            "xi({omega}) = {} is not a nonnegative integer for {}",
            scalar::format(&value),
            params.spec()
        )));
    }
    Ok(value.to_integer())
}

pub fn xi_vector(params: &SchemeParams) -> Result<Vec<BigInt>> {
    (0..=params.n()).map(|w| xi(params, w)).collect()
}

/// Weight enumerator of the whole space, cross-checked against `mu^[n]` at
/// `lambda = n`.
pub fn omega_enumerator(params: &SchemeParams) -> Result<ConstPoly> {
    let xs = xi_vector(params)?;
    let n = params.n();
    let mu = mu_family(n, params.b(), params.c());
    for (u, x) in xs.iter().enumerate() {
        let from_mu = mu.coeff(u, n as i64);
        if from_mu != BigRational::from_integer(x.clone()) {
            return Err(Error::CrossCheck(format!(
                "Omega_n coefficient {u}: xi = {x}, mu^[n] = {}",
                scalar::format(&from_mu)
            )));
        }
    }
    let total: BigInt = xs.iter().sum();
    if &total != params.space_size() {
        return Err(Error::CrossCheck(format!(
            "weights sum to {total}, expected |X| = {}",
            params.space_size()
        )));
    }
    Ok(ConstPoly::new(xs.into_iter().map(BigRational::from_integer).collect()))
}

/// One failure of a recurrence check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceViolation {
    pub relation: &'static str,
    pub n: usize,
    pub x: usize,
    pub k: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Checks, for `b = -q, c = -1` and all `0 <= x, k <= t < t_max`, that
///
/// `C_{k+1}(x+1, t+1) = C_{k+1}(x, t+1) + b^{2t+1-x} C_k(x, t)`
///
/// and that the right-hand side agrees with the general recurrence
/// `b^{k+1} C_{k+1}(x, t) - b^k C_k(x, t)`.
pub fn hermitian_recurrence_equiv(q: u32, t_max: usize) -> Result<Vec<RecurrenceViolation>> {
    if q < 2 {
        return Err(Error::InvalidScheme(format!("q = {q} must be at least 2")));
    }
    let b = Base::from_int(-(q as i64))?;
    let c = int(-1);
    let mut violations = Vec::new();
    for t in 0..t_max {
        for x in 0..=t {
            for k in 0..=t {
                let lhs = krawtchouk_c(k + 1, x + 1, t + 1, &b, &c);
                let local = krawtchouk_c(k + 1, x, t + 1, &b, &c)
                    + b.pow(2 * t as i64 + 1 - x as i64) * krawtchouk_c(k, x, t, &b, &c);
                let general = b.pow(k as i64 + 1) * krawtchouk_c(k + 1, x, t, &b, &c)
                    - b.pow(k as i64) * krawtchouk_c(k, x, t, &b, &c);
                let mut record = |relation, rhs: &BigRational| {
                    violations.push(RecurrenceViolation {
                        relation,
                        n: t,
                        x,
                        k,
                        lhs: scalar::format(&lhs),
                        rhs: scalar::format(rhs),
                    })
                };
                if lhs != local {
                    record("hermitian", &local);
                }
                if local != general {
                    record("hermitian-vs-general", &general);
                }
            }
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn table_rows() {
        let h = make_scheme(SchemeSpec::hamming(2, 7)).unwrap();
        assert_eq!(h.b().value(), &int(1));
        assert_eq!(h.c(), &int(2));
        assert_eq!(h.n(), 7);
        assert_eq!(h.space_size(), &BigInt::from(128));

        let s = make_scheme(SchemeSpec::skew(2, 4)).unwrap();
        assert_eq!(s.b().value(), &int(4));
        assert_eq!(s.c(), &ratio(1, 2));
        assert_eq!(s.n(), 2);
        assert_eq!(s.space_size(), &BigInt::from(64));
        assert_eq!(s.skew_m(), Some(int(3)));

        let e = make_scheme(SchemeSpec::hermitian(2, 3)).unwrap();
        assert_eq!(e.b().value(), &int(-2));
        assert_eq!(e.c(), &int(-1));
        assert_eq!(e.n(), 3);
        assert_eq!(e.space_size(), &BigInt::from(512));
        assert_eq!(e.cbn(), int(8));

        let s5 = make_scheme(SchemeSpec::skew(3, 5)).unwrap();
        assert_eq!(s5.c(), &int(3));
        assert_eq!(s5.space_size(), &BigInt::from(3i64.pow(10)));
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(make_scheme(SchemeSpec::bilinear(2, 2, 3)).is_err());
        assert!(make_scheme(SchemeSpec::gabidulin(2, 1, 2)).is_err());
        assert!(make_scheme(SchemeSpec::hamming(1, 3)).is_err());
        assert!(make_scheme(SchemeSpec::hamming(2, 0)).is_err());
        assert!(make_scheme(SchemeSpec::skew(2, 1)).is_err());
    }

    #[test]
    fn xi_examples() {
        let h = make_scheme(SchemeSpec::hamming(2, 3)).unwrap();
        assert_eq!(xi_vector(&h).unwrap(), ints(&[1, 3, 3, 1]));
        let s = make_scheme(SchemeSpec::skew(2, 4)).unwrap();
        assert_eq!(xi_vector(&s).unwrap(), ints(&[1, 35, 28]));
        let e = make_scheme(SchemeSpec::hermitian(2, 2)).unwrap();
        assert_eq!(xi_vector(&e).unwrap(), ints(&[1, 5, 10]));
        assert!(xi(&e, 3).is_err());
    }

    #[test]
    fn omega_examples() {
        let h = make_scheme(SchemeSpec::hamming(2, 1)).unwrap();
        assert_eq!(omega_enumerator(&h).unwrap().coeffs(), &[int(1), int(1)]);
        let r = make_scheme(SchemeSpec::bilinear(2, 2, 2)).unwrap();
        assert_eq!(omega_enumerator(&r).unwrap().coeffs(), &[int(1), int(9), int(6)]);
    }

    #[test]
    fn xi_sums_to_space_size_everywhere() {
        for q in [2, 3] {
            let specs = [
                SchemeSpec::hamming(q, 5),
                SchemeSpec::bilinear(q, 3, 2),
                SchemeSpec::gabidulin(q, 4, 4),
                SchemeSpec::skew(q, 6),
                SchemeSpec::skew(q, 7),
                SchemeSpec::hermitian(q, 4),
            ];
            for spec in specs {
                let p = make_scheme(spec).unwrap();
                let total: BigInt = xi_vector(&p).unwrap().iter().sum();
                assert_eq!(&total, p.space_size(), "{spec}");
                assert!(omega_enumerator(&p).is_ok());
            }
        }
    }

    #[test]
    fn hermitian_recurrences_agree() {
        assert!(hermitian_recurrence_equiv(2, 5).unwrap().is_empty());
        assert!(hermitian_recurrence_equiv(3, 4).unwrap().is_empty());
    }

    #[test]
    fn json_round_trip() {
        let spec: SchemeSpec = serde_json::from_str(r#"{"kind":"skew","q":2,"t":4}"#).unwrap();
        assert_eq!(spec, SchemeSpec::skew(2, 4));
        let text = serde_json::to_string(&SchemeSpec::bilinear(2, 3, 2)).unwrap();
        assert_eq!(text, r#"{"kind":"bilinear","q":2,"m":3,"n":2}"#);
        assert!(serde_json::from_str::<SchemeSpec>(r#"{"kind":"skew","q":2,"n":4}"#).is_err());
        assert!(serde_json::from_str::<SchemeSpec>(r#"{"kind":"johnson","q":2,"n":4}"#).is_err());
    }
}
