//! Eigenvalues of Krawtchouk association schemes.
//!
//! Two closed forms are provided. [`c_poly`] is the `b`-Krawtchouk polynomial
//!
//! `C_k(x, n) = sum_j (-1)^j b^{j(n-x) + sigma(j)} [x j] [n-x k-j] gamma(n-j, k-j)`
//!
//! and [`delsarte_p`] is Delsarte's generalized Krawtchouk polynomial
//!
//! `P_k(x, n) = sum_j (-1)^{k-j} (c b^n)^j b^{sigma(k-j)} [n-j n-k] [n-x j]`.
//!
//! They agree as totals but not term by term, so comparing them is a useful
//! arithmetic check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinatorics::{gamma, gauss, sigma, Base};
use crate::error::{Error, Result};
use crate::scalar::{self, neg_one_pow};
use crate::scheme::{xi_vector, SchemeParams};

/// `C_k(x, n)` for explicit `b, c, n`. `k` may exceed `n`; the sum then
/// evaluates to zero.
pub fn krawtchouk_c(k: usize, x: usize, n: usize, b: &Base, c: &BigRational) -> BigRational {
    let (k, x, n) = (k as i64, x as i64, n as i64);
    (0..=k)
        .map(|j| {
            neg_one_pow(j)
                * b.pow(j * (n - x) + sigma(j))
                * gauss(x, j, b)
                * gauss(n - x, k - j, b)
                * gamma(n - j, (k - j) as u32, b, c)
        })
        .sum()
}

/// `P_k(x, n)` in Delsarte's form for explicit `b, c, n`.
pub fn delsarte_raw(k: usize, x: usize, n: usize, b: &Base, c: &BigRational) -> BigRational {
    let (k, x, n) = (k as i64, x as i64, n as i64);
    let cbn = c * b.pow(n);
    (0..=k)
        .map(|j| {
            neg_one_pow(k - j)
                * scalar::pow(&cbn, j)
                * b.pow(sigma(k - j))
                * gauss(n - j, n - k, b)
                * gauss(n - x, j, b)
        })
        .sum()
}

fn check_range(k: usize, x: usize, n: usize) -> Result<()> {
    if k > n {
        return Err(Error::OutOfRange { what: "k", value: k as i64, max: n as i64 });
    }
    if x > n {
        return Err(Error::OutOfRange { what: "x", value: x as i64, max: n as i64 });
    }
    Ok(())
}

/// The `b`-Krawtchouk eigenvalue `C_k(x, n)` of the scheme.
pub fn c_poly(k: usize, x: usize, params: &SchemeParams) -> Result<BigRational> {
    check_range(k, x, params.n())?;
    Ok(krawtchouk_c(k, x, params.n(), params.b(), params.c()))
}

/// Delsarte's generalized Krawtchouk polynomial `P_k(x, n)` of the scheme.
pub fn delsarte_p(k: usize, x: usize, params: &SchemeParams) -> Result<BigRational> {
    check_range(k, x, params.n())?;
    Ok(delsarte_raw(k, x, params.n(), params.b(), params.c()))
}

/// The `(n+1) x (n+1)` eigenmatrix, entry `(i, k) = P_k(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenmatrix {
    entries: Vec<Vec<BigInt>>,
    params: SchemeParams,
}

impl Eigenmatrix {
    pub fn params(&self) -> &SchemeParams {
        &self.params
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, k: usize) -> &BigInt {
        &self.entries[i][k]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// `P P`.
    pub fn square(&self) -> Vec<Vec<BigInt>> {
        let size = self.size();
        (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| (0..size).map(|l| &self.entries[i][l] * &self.entries[l][j]).sum())
                    .collect()
            })
            .collect()
    }

    /// `P P = |X| I`.
    pub fn is_involution(&self) -> bool {
        let v = self.params.space_size();
        self.square().iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, e)| if i == j { e == v } else { e.is_zero() })
        })
    }

    /// `sum_i v_i P_k(i) P_l(i) = |X| v_k delta_{kl}` with `v_i` the valencies
    /// (row 0).
    pub fn is_orthogonal(&self) -> bool {
        let size = self.size();
        let v = &self.entries[0];
        let space = self.params.space_size();
        (0..size).all(|k| {
            (0..size).all(|l| {
                let s: BigInt =
                    (0..size).map(|i| &v[i] * &self.entries[i][k] * &self.entries[i][l]).sum();
                if k == l {
                    s == space * &v[k]
                } else {
                    s.is_zero()
                }
            })
        })
    }
}

/// Builds the eigenmatrix from `C_k` and cross-checks every entry against
/// Delsarte's form and integrality, and row 0 against the valencies.
pub fn eigenmatrix(params: &SchemeParams) -> Result<Eigenmatrix> {
    let n = params.n();
    let mut entries = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let cv = c_poly(k, i, params)?;
            let pv = delsarte_p(k, i, params)?;
            if cv != pv {
                return Err(Error::CrossCheck(format!(
                    "C_{k}({i}) = {} but P_{k}({i}) = {} for {}",
                    scalar::format(&cv),
                    scalar::format(&pv),
                    params.spec()
                )));
            }
            let value = scalar::to_integer(&cv).ok_or_else(|| {
                Error::CrossCheck(format!("eigenvalue P_{k}({i}) = {} is not an integer", scalar::format(&cv)))
            })?;
            row.push(value);
        }
        entries.push(row);
    }
    if entries[0] != xi_vector(params)? {
        return Err(Error::CrossCheck("row 0 differs from the valencies".into()));
    }
    if !entries.iter().all(|row| row[0].is_one()) {
        return Err(Error::CrossCheck("column 0 is not all ones".into()));
    }
    Ok(Eigenmatrix { entries, params: params.clone() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceFailure {
    pub n: usize,
    pub x: usize,
    pub k: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Checks `C_{k+1}(x+1, n+1) = b^{k+1} C_{k+1}(x, n) - b^k C_k(x, n)` for all
/// `0 <= x, k <= n < max_n`, with the family's `b` and `c` held fixed.
pub fn check_recurrence(params: &SchemeParams, max_n: usize) -> Vec<RecurrenceFailure> {
    let (b, c) = (params.b(), params.c());
    let mut failures = Vec::new();
    for n in 0..max_n {
        for x in 0..=n {
            for k in 0..=n {
                let lhs = krawtchouk_c(k + 1, x + 1, n + 1, b, c);
                let rhs = b.pow(k as i64 + 1) * krawtchouk_c(k + 1, x, n, b, c)
                    - b.pow(k as i64) * krawtchouk_c(k, x, n, b, c);
                if lhs != rhs {
                    failures.push(RecurrenceFailure {
                        n,
                        x,
                        k,
                        lhs: scalar::format(&lhs),
                        rhs: scalar::format(&rhs),
                    });
                }
            }
        }
    }
    failures
}
