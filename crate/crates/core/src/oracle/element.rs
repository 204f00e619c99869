//! Points of the concrete schemes, their scheme weight and the duality
//! pairing.
//!
//! Each ambient space is a vector space over a coordinate field `K` and every
//! point is stored as its coordinate vector over `K`:
//!
//! | kind      | point                         | `K`       | coordinates            |
//! |-----------|-------------------------------|-----------|------------------------|
//! | hamming   | `F_q^n`                       | `F_q`     | the entries            |
//! | bilinear  | `m x n` over `F_q`            | `F_q`     | entries, row-major     |
//! | gabidulin | `F_{q^m}^n`                   | `F_{q^m}` | the entries            |
//! | skew      | alternating `t x t` over `F_q`| `F_q`     | entries above diagonal |
//! | hermitian | Hermitian `t x t` over `F_{q^2}` | `F_q`  | diagonal, then both digits of each entry above it |

#![allow(clippy::needless_range_loop)]

use serde::{Deserialize, Serialize};

use super::field::{Elem, FiniteField};
use super::linalg;
use crate::error::{Error, Result};
use crate::scheme::{SchemeParams, SchemeSpec};

/// Raw JSON form of a point: a vector for hamming and gabidulin, a matrix
/// otherwise. Entries are integer-encoded field elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementData {
    Vector(Vec<u32>),
    Matrix(Vec<Vec<u32>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemeElement {
    Hamming(Vec<Elem>),
    Bilinear(Vec<Vec<Elem>>),
    Gabidulin(Vec<Elem>),
    Skew(Vec<Vec<Elem>>),
    Hermitian(Vec<Vec<Elem>>),
}

impl SchemeElement {
    pub fn data(&self) -> ElementData {
        let widen = |v: &Vec<Elem>| v.iter().map(|&x| x as u32).collect::<Vec<_>>();
        match self {
            SchemeElement::Hamming(v) | SchemeElement::Gabidulin(v) => ElementData::Vector(widen(v)),
            SchemeElement::Bilinear(m) | SchemeElement::Skew(m) | SchemeElement::Hermitian(m) => {
                ElementData::Matrix(m.iter().map(widen).collect())
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Layout {
    Hamming { n: usize },
    Bilinear { m: usize, n: usize },
    Gabidulin { m: usize, n: usize },
    Skew { t: usize },
    Hermitian { t: usize },
}

/// The ambient space of a scheme together with its pairing.
#[derive(Clone, Debug)]
pub struct Ambient {
    params: SchemeParams,
    layout: Layout,
    /// Coordinate field `K`.
    coord: FiniteField,
    /// `F_{q^2}` for hermitian, `F_q` for gabidulin rank.
    aux: Option<FiniteField>,
    dim: usize,
    gram: Vec<Vec<Elem>>,
}

fn require_prime(q: u32, kind: &str) -> Result<()> {
    if super::field::prime_power(q).map(|(_, k)| k) != Some(1) {
        return Err(Error::Unsupported(format!("{kind} needs a prime q, got {q}")));
    }
    Ok(())
}

impl Ambient {
    pub fn new(params: &SchemeParams) -> Result<Self> {
        let q = params.q();
        let (layout, coord, aux, dim) = match *params.spec() {
            SchemeSpec::Hamming { n, .. } => {
                (Layout::Hamming { n: n as usize }, FiniteField::new(q)?, None, n as usize)
            }
            SchemeSpec::Bilinear { m, n, .. } => {
                let (m, n) = (m as usize, n as usize);
                (Layout::Bilinear { m, n }, FiniteField::new(q)?, None, m * n)
            }
            SchemeSpec::Gabidulin { m, n, .. } => {
                require_prime(q, "gabidulin")?;
                let big = q.checked_pow(m).filter(|&s| s <= super::field::MAX_ORDER).ok_or_else(|| {
                    Error::Unsupported(format!("F_{{{q}^{m}}} exceeds {} elements", super::field::MAX_ORDER))
                })?;
                let layout = Layout::Gabidulin { m: m as usize, n: n as usize };
                (layout, FiniteField::new(big)?, Some(FiniteField::new(q)?), n as usize)
            }
            SchemeSpec::Skew { t, .. } => {
                let t = t as usize;
                (Layout::Skew { t }, FiniteField::new(q)?, None, t * (t - 1) / 2)
            }
            SchemeSpec::Hermitian { t, .. } => {
                require_prime(q, "hermitian")?;
                let ext = FiniteField::new(q * q)?;
                let t = t as usize;
                (Layout::Hermitian { t }, FiniteField::new(q)?, Some(ext), t * t)
            }
        };
        let mut ambient = Ambient { params: params.clone(), layout, coord, aux, dim, gram: Vec::new() };
        let basis: Vec<Vec<Elem>> = (0..dim)
            .map(|i| {
                let mut e = vec![0; dim];
                e[i] = 1;
                e
            })
            .collect();
        ambient.gram = basis
            .iter()
            .map(|x| basis.iter().map(|y| ambient.pair(x, y)).collect())
            .collect::<Result<_>>()?;
        if linalg::rank(&ambient.coord, &ambient.gram) != dim {
            return Err(Error::DegenerateForm(params.spec().to_string()));
        }
        Ok(ambient)
    }

    pub fn params(&self) -> &SchemeParams {
        &self.params
    }

    pub fn field(&self) -> &FiniteField {
        &self.coord
    }

    /// Dimension over the coordinate field.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &[Vec<Elem>] {
        &self.gram
    }

    /// Number of points, or `None` if it does not fit in a `u64`.
    pub fn size(&self) -> Option<u64> {
        (self.coord.order() as u64).checked_pow(self.dim as u32)
    }

    fn ext(&self) -> &FiniteField {
        self.aux.as_ref().expect("layout carries an auxiliary field")
    }

    /// Point with the given index in `0..size`, read as base-`|K|` digits.
    pub fn point(&self, mut index: u64) -> Vec<Elem> {
        let q = self.coord.order() as u64;
        (0..self.dim)
            .map(|_| {
                let d = (index % q) as Elem;
                index /= q;
                d
            })
            .collect()
    }

    pub fn index(&self, coords: &[Elem]) -> u64 {
        let q = self.coord.order() as u64;
        coords.iter().rev().fold(0, |acc, &d| acc * q + d as u64)
    }

    pub fn sub(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        a.iter().zip(b).map(|(&x, &y)| self.coord.sub(x, y)).collect()
    }

    /// Full `t x t` matrix of a skew or hermitian point.
    fn square(&self, coords: &[Elem]) -> Vec<Vec<Elem>> {
        match self.layout {
            Layout::Skew { t } => {
                let f = &self.coord;
                let mut a = vec![vec![0; t]; t];
                let mut it = coords.iter();
                for i in 0..t {
                    for j in i + 1..t {
                        let x = *it.next().unwrap();
                        a[i][j] = x;
                        a[j][i] = f.neg(x);
                    }
                }
                a
            }
            Layout::Hermitian { t } => {
                let ext = self.ext();
                let mut a = vec![vec![0; t]; t];
                for i in 0..t {
                    a[i][i] = coords[i];
                }
                let mut it = coords[t..].chunks(2);
                for i in 0..t {
                    for j in i + 1..t {
                        let x = ext.from_coords(it.next().unwrap());
                        a[i][j] = x;
                        a[j][i] = ext.frobenius(x);
                    }
                }
                a
            }
            _ => unreachable!("not a square layout"),
        }
    }

    pub fn element(&self, coords: &[Elem]) -> SchemeElement {
        match self.layout {
            Layout::Hamming { .. } => SchemeElement::Hamming(coords.to_vec()),
            Layout::Gabidulin { .. } => SchemeElement::Gabidulin(coords.to_vec()),
            Layout::Bilinear { n, .. } => SchemeElement::Bilinear(coords.chunks(n).map(<[Elem]>::to_vec).collect()),
            Layout::Skew { .. } => SchemeElement::Skew(self.square(coords)),
            Layout::Hermitian { .. } => SchemeElement::Hermitian(self.square(coords)),
        }
    }

    /// Coordinates of a point, checking its shape, entry range and structure.
    pub fn coords(&self, e: &SchemeElement) -> Result<Vec<Elem>> {
        let bad = |msg: String| Error::InvalidElement(msg);
        let check_vec = |v: &[Elem], len: usize, field: &FiniteField| -> Result<()> {
            if v.len() != len {
                return Err(bad(format!("expected {len} entries, got {}", v.len())));
            }
            if let Some(x) = v.iter().find(|&&x| !field.contains(x as u32)) {
                return Err(bad(format!("entry {x} is not in F_{}", field.order())));
            }
            Ok(())
        };
        let check_square = |m: &[Vec<Elem>], rows: usize, cols: usize, field: &FiniteField| -> Result<()> {
            if m.len() != rows {
                return Err(bad(format!("expected {rows} rows, got {}", m.len())));
            }
            m.iter().try_for_each(|r| check_vec(r, cols, field))
        };
        match (self.layout, e) {
            (Layout::Hamming { n }, SchemeElement::Hamming(v)) | (Layout::Gabidulin { n, .. }, SchemeElement::Gabidulin(v)) => {
                check_vec(v, n, &self.coord)?;
                Ok(v.clone())
            }
            (Layout::Bilinear { m, n }, SchemeElement::Bilinear(a)) => {
                check_square(a, m, n, &self.coord)?;
                Ok(a.concat())
            }
            (Layout::Skew { t }, SchemeElement::Skew(a)) => {
                check_square(a, t, t, &self.coord)?;
                let f = &self.coord;
                let mut out = Vec::with_capacity(self.dim);
                for i in 0..t {
                    if a[i][i] != 0 {
                        return Err(bad(format!("skew diagonal entry ({i},{i}) is nonzero")));
                    }
                    for j in i + 1..t {
                        if a[j][i] != f.neg(a[i][j]) {
                            return Err(bad(format!("entries ({i},{j}) and ({j},{i}) are not negatives")));
                        }
                        out.push(a[i][j]);
                    }
                }
                Ok(out)
            }
            (Layout::Hermitian { t }, SchemeElement::Hermitian(a)) => {
                let ext = self.ext();
                check_square(a, t, t, ext)?;
                let mut out: Vec<Elem> = Vec::with_capacity(self.dim);
                for i in 0..t {
                    if ext.frobenius(a[i][i]) != a[i][i] {
                        return Err(bad(format!("hermitian diagonal entry ({i},{i}) is not in F_q")));
                    }
                    out.push(a[i][i]);
                }
                for i in 0..t {
                    for j in i + 1..t {
                        if a[j][i] != ext.frobenius(a[i][j]) {
                            return Err(bad(format!("entry ({j},{i}) is not the conjugate of ({i},{j})")));
                        }
                        out.extend(ext.coords(a[i][j]));
                    }
                }
                Ok(out)
            }
            _ => Err(bad(format!("element kind does not match {}", self.params.spec()))),
        }
    }

    /// Interprets JSON data according to this space's kind.
    pub fn parse(&self, data: &ElementData) -> Result<SchemeElement> {
        let narrow = |v: &Vec<u32>| -> Result<Vec<Elem>> {
            v.iter()
                .map(|&x| Elem::try_from(x).map_err(|_| Error::InvalidElement(format!("entry {x} is too large"))))
                .collect()
        };
        let e = match (self.layout, data) {
            (Layout::Hamming { .. }, ElementData::Vector(v)) => SchemeElement::Hamming(narrow(v)?),
            (Layout::Gabidulin { .. }, ElementData::Vector(v)) => SchemeElement::Gabidulin(narrow(v)?),
            (Layout::Bilinear { .. }, ElementData::Matrix(m)) => {
                SchemeElement::Bilinear(m.iter().map(narrow).collect::<Result<_>>()?)
            }
            (Layout::Skew { .. }, ElementData::Matrix(m)) => SchemeElement::Skew(m.iter().map(narrow).collect::<Result<_>>()?),
            (Layout::Hermitian { .. }, ElementData::Matrix(m)) => {
                SchemeElement::Hermitian(m.iter().map(narrow).collect::<Result<_>>()?)
            }
            _ => {
                return Err(Error::InvalidElement(format!(
                    "expected a {} for {}",
                    if matches!(self.layout, Layout::Hamming { .. } | Layout::Gabidulin { .. }) { "vector" } else { "matrix" },
                    self.params.spec()
                )))
            }
        };
        self.coords(&e)?;
        Ok(e)
    }

    /// Scheme weight of the point with the given coordinates.
    pub fn weight(&self, coords: &[Elem]) -> usize {
        match self.layout {
            Layout::Hamming { .. } => coords.iter().filter(|&&x| x != 0).count(),
            Layout::Bilinear { n, .. } => {
                let rows: Vec<Vec<Elem>> = coords.chunks(n).map(<[Elem]>::to_vec).collect();
                linalg::rank(&self.coord, &rows)
            }
            Layout::Gabidulin { m, n } => {
                let base = self.ext();
                let cols: Vec<Vec<Elem>> = coords.iter().map(|&x| self.coord.coords(x)).collect();
                let rows: Vec<Vec<Elem>> = (0..m).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect();
                linalg::rank(base, &rows)
            }
            Layout::Skew { .. } => linalg::rank(&self.coord, &self.square(coords)) / 2,
            Layout::Hermitian { .. } => linalg::rank(self.ext(), &self.square(coords)),
        }
    }

    pub fn element_weight(&self, e: &SchemeElement) -> Result<usize> {
        Ok(self.weight(&self.coords(e)?))
    }

    /// The duality pairing, valued in `K`.
    ///
    /// Hamming, bilinear, gabidulin and skew use the coordinate dot product:
    /// for matrices this is `Tr(A B^T)`, restricted on skew matrices to the
    /// entries above the diagonal. Hermitian uses `Tr(A B)`, which lies in
    /// `F_q`.
    pub fn pair(&self, a: &[Elem], b: &[Elem]) -> Result<Elem> {
        match self.layout {
            Layout::Hermitian { t } => {
                let ext = self.ext();
                let (x, y) = (self.square(a), self.square(b));
                let mut tr = 0;
                for i in 0..t {
                    for j in 0..t {
                        tr = ext.add(tr, ext.mul(x[i][j], y[j][i]));
                    }
                }
                if ext.frobenius(tr) != tr {
                    return Err(Error::CrossCheck(format!("Tr(AB) = {tr} is not in F_q")));
                }
                Ok(tr)
            }
            _ => Ok(linalg::dot(&self.coord, a, b)),
        }
    }

    /// `a G` for the Gram matrix `G`, so that `pair(a, b) = dot(a G, b)`.
    pub fn pairing_row(&self, a: &[Elem]) -> Vec<Elem> {
        linalg::vec_mat(&self.coord, a, &self.gram)
    }
}
