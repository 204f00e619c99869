//! Eigenvalues of translation schemes as additive character sums.
//!
//! In characteristic 2 the canonical additive character of `K` is
//! `chi(a) = (-1)^{Tr(a)}`, so the eigenvalue
//! `P_k(x) = sum_{wt(e) = k} chi(<e, y>)` for any `y` of weight `x` is an
//! ordinary integer.

use num_bigint::BigInt;

use super::field::Elem;
use super::linalg;
use super::FullSpace;
use crate::error::{Error, Result};
use crate::scheme::SchemeParams;

/// Largest space for which character sums are computed.
pub const CHARACTER_LIMIT: u64 = 1 << 16;

fn check_characteristic(space: &FullSpace) -> Result<()> {
    let p = space.ambient().field().characteristic();
    if p != 2 {
        return Err(Error::Unsupported(format!(
            "character sums need characteristic 2, {} has characteristic {p}",
            space.ambient().params().spec()
        )));
    }
    Ok(())
}

/// `sum_{wt(e) = k} chi(<e, y>)` for every `k`.
fn sums_for(space: &FullSpace, classes: &[Vec<usize>], y: usize) -> Vec<i64> {
    let a = space.ambient();
    let f = a.field();
    let gy = a.pairing_row(space.point(y));
    classes
        .iter()
        .map(|class| {
            class
                .iter()
                .map(|&e| {
                    let v: Elem = linalg::dot(f, space.point(e), &gy);
                    if f.abs_trace(v) == 0 { 1 } else { -1 }
                })
                .sum()
        })
        .collect()
}

/// Entry `(x, k)` is `P_k(x)`, in the same orientation as the eigenmatrix.
/// Each row is computed from two representatives of weight `x` and the two
/// results must agree.
pub fn char_eigenmatrix(params: &SchemeParams) -> Result<Vec<Vec<BigInt>>> {
    let space = FullSpace::new(params, CHARACTER_LIMIT)?;
    check_characteristic(&space)?;
    let classes = space.by_weight();
    classes
        .iter()
        .enumerate()
        .map(|(x, class)| {
            let (first, last) = (class[0], class[class.len() - 1]);
            let row = sums_for(&space, &classes, first);
            if first != last && sums_for(&space, &classes, last) != row {
                return Err(Error::CrossCheck(format!(
                    "character sums for weight {x} depend on the representative"
                )));
            }
            Ok(row.into_iter().map(BigInt::from).collect())
        })
        .collect()
}

pub fn char_eigenvalue(params: &SchemeParams, k: usize, x: usize) -> Result<BigInt> {
    let n = params.n();
    for (what, v) in [("k", k), ("x", x)] {
        if v > n {
            return Err(Error::OutOfRange { what, value: v as i64, max: n as i64 });
        }
    }
    Ok(char_eigenmatrix(params)?.swap_remove(x).swap_remove(k))
}
