//! Gaussian elimination over a [`FiniteField`].

#![allow(clippy::needless_range_loop)]

use super::field::{Elem, FiniteField};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(f: &FiniteField, rows: &mut Vec<Vec<Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = f.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows.len() {
            let factor = rows[i][col];
            if i != r && factor != 0 {
                for j in 0..ncols {
                    let t = f.mul(factor, rows[r][j]);
                    rows[i][j] = f.sub(rows[i][j], t);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: &FiniteField, rows: &[Vec<Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// Basis of `{ y : M y = 0 }` for `M` with `ncols` columns.
pub fn nullspace(f: &FiniteField, rows: &[Vec<Elem>], ncols: usize) -> Vec<Vec<Elem>> {
    let mut m: Vec<Vec<Elem>> = rows.to_vec();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; ncols];
            v[fc] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

pub fn dot(f: &FiniteField, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `v M` for a row vector `v`.
pub fn vec_mat(f: &FiniteField, v: &[Elem], m: &[Vec<Elem>]) -> Vec<Elem> {
    let ncols = m.first().map_or(0, Vec::len);
    (0..ncols)
        .map(|j| v.iter().zip(m).fold(0, |acc, (&x, row)| f.add(acc, f.mul(x, row[j]))))
        .collect()
}
