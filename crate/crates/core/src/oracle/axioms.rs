//! Direct check that the weight relations form an association scheme.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::FullSpace;
use crate::error::Result;
use crate::scheme::{xi_vector, SchemeParams};

/// Largest space on which the axioms are checked.
pub const AXIOM_LIMIT: u64 = 1 << 12;

/// Pair checks are exhaustive up to this many points and sampled beyond.
const EXHAUSTIVE_POINTS: usize = 1 << 10;
const SAMPLED_PAIRS: usize = 1 << 16;

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub scheme: String,
    pub points: usize,
    pub exhaustive_pairs: bool,
    pub pairs_checked: usize,
    /// `v_i`, the number of points at distance `i` from a fixed point.
    pub valencies: Vec<u64>,
    /// `intersection_numbers[k][i][j] = c_{ijk}`.
    pub intersection_numbers: Vec<Vec<Vec<u64>>>,
    pub samples_per_relation: usize,
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_scheme_axioms(params: &SchemeParams) -> Result<AxiomReport> {
    verify_scheme_axioms_with(params, 8, 0)
}

/// Checks, for `R_i = {(x, y) : wt(x - y) = i}`:
/// `R_0` is the diagonal, every `R_i` is symmetric and nonempty, the
/// relations partition `X x X`, `|R_i(x)| = xi_i`, and
/// `c_{ijk} = |{z : (x,z) in R_i, (z,y) in R_j}|` is the same for sampled pairs
/// `(x, y) in R_k`, with `sum_j c_{ijk} = v_i`.
pub fn verify_scheme_axioms_with(params: &SchemeParams, samples: usize, seed: u64) -> Result<AxiomReport> {
    let space = FullSpace::new(params, AXIOM_LIMIT)?;
    let n = params.n();
    let size = space.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();

    let exhaustive = size <= EXHAUSTIVE_POINTS;
    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..size).flat_map(|x| (0..size).map(move |y| (x, y))).collect()
    } else {
        (0..SAMPLED_PAIRS).map(|_| (rng.gen_range(0..size), rng.gen_range(0..size))).collect()
    };
    for &(x, y) in &pairs {
        let r = space.relation(x, y);
        if r > n {
            violations.push(format!("pair ({x},{y}) has weight {r} > {n}"));
        }
        if (r == 0) != (x == y) {
            violations.push(format!("pair ({x},{y}) breaks R_0 = diagonal"));
        }
        if space.relation(y, x) != r {
            violations.push(format!("pair ({x},{y}) breaks symmetry"));
        }
    }

    let classes = space.by_weight();
    let valencies: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();
    let xi = xi_vector(params)?;
    for (i, (v, x)) in valencies.iter().zip(&xi).enumerate() {
        if *v == 0 {
            violations.push(format!("relation R_{i} is empty"));
        }
        if num_bigint::BigInt::from(*v) != *x {
            violations.push(format!("valency v_{i} = {v} but xi_{i} = {x}"));
        }
    }

    let mut intersection_numbers = Vec::with_capacity(n + 1);
    for (k, class) in classes.iter().enumerate() {
        let mut reference: Option<Vec<Vec<u64>>> = None;
        for s in 0..samples {
            let x = rng.gen_range(0..size);
            let &e = class.choose(&mut rng).expect("nonempty class");
            // y = x - e, so (x, y) lies in R_k.
            let y = space.ambient().index(&space.ambient().sub(space.point(x), space.point(e))) as usize;
            let mut table = vec![vec![0u64; n + 1]; n + 1];
            for z in 0..size {
                table[space.relation(x, z)][space.relation(z, y)] += 1;
            }
            for (i, row) in table.iter().enumerate() {
                let total: u64 = row.iter().sum();
                if total != valencies[i] {
                    violations.push(format!("sum_j c_{{{i}j{k}}} = {total} but v_{i} = {}", valencies[i]));
                }
            }
            match &reference {
                None => reference = Some(table),
                Some(r) if *r != table => {
                    violations.push(format!("intersection numbers for R_{k} differ at sample {s}"));
                }
                Some(_) => {}
            }
        }
        intersection_numbers.push(reference.unwrap_or_default());
    }

    Ok(AxiomReport {
        scheme: params.spec().to_string(),
        points: size,
        exhaustive_pairs: exhaustive,
        pairs_checked: pairs.len(),
        valencies,
        intersection_numbers,
        samples_per_relation: samples,
        violations,
    })
}
