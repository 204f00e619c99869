//! Brute-force ground truth over small finite fields.
//!
//! Everything here works by enumerating points of the ambient space, so it is
//! only meant for spaces with at most a few thousand points. The results are
//! independent of the closed forms elsewhere in the crate and are used to
//! check them.

pub mod axioms;
pub mod character;
pub mod code;
pub mod element;
pub mod field;
pub mod linalg;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scheme::SchemeParams;

pub use axioms::{verify_scheme_axioms, verify_scheme_axioms_with, AxiomReport};
pub use character::{char_eigenmatrix, char_eigenvalue};
pub use code::{dual_code, enumerate_code, random_code, weight_distribution, CodeSpec, LinearCode};
pub use element::{Ambient, ElementData, SchemeElement};
pub use field::FiniteField;

use field::Elem;

/// Every point of an ambient space with its weight, indexed as in
/// [`Ambient::point`].
#[derive(Clone, Debug)]
pub struct FullSpace {
    ambient: Arc<Ambient>,
    points: Vec<Vec<Elem>>,
    weights: Vec<usize>,
}

impl FullSpace {
    pub fn new(params: &SchemeParams, limit: u64) -> Result<Self> {
        Self::from_ambient(Arc::new(Ambient::new(params)?), limit)
    }

    pub fn from_ambient(ambient: Arc<Ambient>, limit: u64) -> Result<Self> {
        let size = ambient
            .size()
            .filter(|&s| s <= limit)
            .ok_or_else(|| Error::SizeGuard { size: ambient.params().space_size().to_string(), limit })?;
        let points: Vec<Vec<Elem>> = (0..size).map(|i| ambient.point(i)).collect();
        let weights = points.iter().map(|p| ambient.weight(p)).collect();
        Ok(FullSpace { ambient, points, weights })
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &[Elem] {
        &self.points[i]
    }

    pub fn weight(&self, i: usize) -> usize {
        self.weights[i]
    }

    /// Index of `point(x) - point(y)`.
    pub fn diff(&self, x: usize, y: usize) -> usize {
        self.ambient.index(&self.ambient.sub(&self.points[x], &self.points[y])) as usize
    }

    /// Weight of `point(x) - point(y)`, i.e. the relation containing `(x, y)`.
    pub fn relation(&self, x: usize, y: usize) -> usize {
        self.weights[self.diff(x, y)]
    }

    /// Indices of the points of each weight.
    pub fn by_weight(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.ambient.params().n() + 1];
        for (i, &w) in self.weights.iter().enumerate() {
            out[w].push(i);
        }
        out
    }
}
