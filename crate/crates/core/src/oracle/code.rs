//! Linear codes in a scheme's ambient space.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Pow;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::element::{Ambient, ElementData, SchemeElement};
use super::field::Elem;
use super::linalg;
use crate::error::{Error, Result};
use crate::macwilliams::WeightDistribution;
use crate::scheme::{SchemeParams, SchemeSpec};

/// Largest code that will be enumerated.
pub const ENUMERATION_LIMIT: u64 = 1 << 20;

/// JSON description of a code: a scheme and a list of generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpec {
    pub scheme: SchemeSpec,
    pub generators: Vec<ElementData>,
}

impl CodeSpec {
    pub fn build(&self) -> Result<LinearCode> {
        let params = SchemeParams::new(self.scheme)?;
        let ambient = Arc::new(Ambient::new(&params)?);
        let gens = self
            .generators
            .iter()
            .map(|g| ambient.parse(g).and_then(|e| ambient.coords(&e)))
            .collect::<Result<Vec<_>>>()?;
        LinearCode::new(ambient, gens)
    }
}

/// The span of linearly independent generators over the coordinate field.
#[derive(Clone, Debug)]
pub struct LinearCode {
    ambient: Arc<Ambient>,
    generators: Vec<Vec<Elem>>,
}

impl LinearCode {
    /// Fails if the generators are dependent or have the wrong length.
    pub fn new(ambient: Arc<Ambient>, generators: Vec<Vec<Elem>>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != ambient.dim()) {
            return Err(Error::InvalidElement(format!(
                "generator has {} coordinates, expected {}",
                g.len(),
                ambient.dim()
            )));
        }
        if linalg::rank(ambient.field(), &generators) != generators.len() {
            return Err(Error::InvalidInput("generators are linearly dependent".into()));
        }
        Ok(LinearCode { ambient, generators })
    }

    pub fn zero(ambient: Arc<Ambient>) -> Self {
        LinearCode { ambient, generators: Vec::new() }
    }

    pub fn full(ambient: Arc<Ambient>) -> Self {
        let d = ambient.dim();
        let gens = (0..d)
            .map(|i| {
                let mut e = vec![0; d];
                e[i] = 1;
                e
            })
            .collect();
        LinearCode { ambient, generators: gens }
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn params(&self) -> &SchemeParams {
        self.ambient.params()
    }

    pub fn generators(&self) -> &[Vec<Elem>] {
        &self.generators
    }

    pub fn generator_elements(&self) -> Vec<SchemeElement> {
        self.generators.iter().map(|g| self.ambient.element(g)).collect()
    }

    pub fn dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn size(&self) -> BigInt {
        BigInt::from(self.ambient.field().order()).pow(self.dimension() as u32)
    }

    fn checked_size(&self) -> Result<u64> {
        (self.ambient.field().order() as u64)
            .checked_pow(self.dimension() as u32)
            .filter(|&s| s <= ENUMERATION_LIMIT)
            .ok_or_else(|| Error::SizeGuard { size: self.size().to_string(), limit: ENUMERATION_LIMIT })
    }

    /// Every codeword exactly once, as coordinates.
    pub fn codewords(&self) -> Result<impl Iterator<Item = Vec<Elem>> + '_> {
        let size = self.checked_size()?;
        let f = self.ambient.field();
        let q = f.order() as u64;
        let d = self.ambient.dim();
        Ok((0..size).map(move |mut idx| {
            let mut word = vec![0; d];
            for g in &self.generators {
                let a = (idx % q) as Elem;
                idx /= q;
                if a != 0 {
                    for (w, &x) in word.iter_mut().zip(g) {
                        *w = f.add(*w, f.mul(a, x));
                    }
                }
            }
            word
        }))
    }

    pub fn contains(&self, word: &[Elem]) -> bool {
        let mut rows = self.generators.clone();
        rows.push(word.to_vec());
        linalg::rank(self.ambient.field(), &rows) == self.dimension()
    }

    /// `{ y : <x, y> = 0 for all x in C }`.
    pub fn dual(&self) -> Result<LinearCode> {
        let constraints: Vec<Vec<Elem>> = self.generators.iter().map(|g| self.ambient.pairing_row(g)).collect();
        let gens = linalg::nullspace(self.ambient.field(), &constraints, self.ambient.dim());
        if gens.len() + self.dimension() != self.ambient.dim() {
            return Err(Error::DegenerateForm(self.params().spec().to_string()));
        }
        LinearCode::new(self.ambient.clone(), gens)
    }

    /// Same span as `other`.
    pub fn same_span(&self, other: &LinearCode) -> bool {
        self.dimension() == other.dimension() && other.generators.iter().all(|g| self.contains(g))
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        let mut counts = vec![0u64; self.params().n() + 1];
        for w in self.codewords()? {
            counts[self.ambient.weight(&w)] += 1;
        }
        Ok(WeightDistribution::new(counts.into_iter().map(BigInt::from).collect()))
    }
}

pub fn enumerate_code(code: &LinearCode) -> Result<impl Iterator<Item = SchemeElement> + '_> {
    Ok(code.codewords()?.map(|w| code.ambient.element(&w)))
}

pub fn dual_code(code: &LinearCode) -> Result<LinearCode> {
    code.dual()
}

pub fn weight_distribution(code: &LinearCode) -> Result<WeightDistribution> {
    code.weight_distribution()
}

/// A code of the given dimension with uniformly drawn generators, keeping
/// each candidate that is independent of those already kept.
pub fn random_code<R: Rng>(ambient: Arc<Ambient>, dimension: usize, rng: &mut R) -> Result<LinearCode> {
    let d = ambient.dim();
    if dimension > d {
        return Err(Error::OutOfRange { what: "dimension", value: dimension as i64, max: d as i64 });
    }
    let q = ambient.field().order();
    let mut gens: Vec<Vec<Elem>> = Vec::with_capacity(dimension);
    while gens.len() < dimension {
        let candidate: Vec<Elem> = (0..d).map(|_| rng.gen_range(0..q) as Elem).collect();
        gens.push(candidate);
        if linalg::rank(ambient.field(), &gens) < gens.len() {
            gens.pop();
        }
    }
    LinearCode::new(ambient, gens)
}
