//! Small finite fields `F_{p^k}` with `p^k <= 16`, stored as lookup tables.
//!
//! An element is an integer `0..p^k` whose base-`p` digits are the
//! coefficients of a polynomial in the generator, lowest degree first. The
//! prime subfield is therefore `0..p`.

use crate::error::{Error, Result};

pub const MAX_ORDER: u32 = 16;

pub type Elem = u8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: u32,
    order: u32,
    /// Monic modulus, lowest degree first, length `k + 1`.
    modulus: Vec<u32>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Splits `q` as `p^k`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1 && is_prime(p)).then_some((p, k))
}

fn digits(a: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k).scan(a, |r, _| {
        let d = *r % p;
        *r /= p;
        Some(d)
    })
    .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Product of two residues modulo the monic `modulus`.
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (k..prod.len()).rev() {
        let lead = prod[d];
        if lead != 0 {
            for (i, &m) in modulus.iter().enumerate().take(k) {
                let idx = d - k + i;
                prod[idx] = (prod[idx] + (p - lead) * m) % p;
            }
            prod[d] = 0;
        }
    }
    prod.truncate(k);
    prod
}

impl FiniteField {
    /// The field of the given order, using the first irreducible modulus in
    /// lexicographic order of its lower coefficients.
    pub fn new(order: u32) -> Result<Self> {
        let (p, k) = prime_power(order)
            .ok_or_else(|| Error::Unsupported(format!("{order} is not a prime power")))?;
        if order > MAX_ORDER {
            return Err(Error::Unsupported(format!("field order {order} exceeds {MAX_ORDER}")));
        }
        for low in 0..p.pow(k) {
            let mut modulus = digits(low, p, k);
            modulus.push(1);
            if let Some(field) = Self::with_modulus(p, modulus) {
                return Ok(field);
            }
        }
        unreachable!("every finite field order has an irreducible modulus")
    }

    /// Builds the tables for `F_p[x]/(modulus)`, or `None` if the modulus is
    /// reducible (some nonzero element has no inverse).
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Option<Self> {
        let k = modulus.len() as u32 - 1;
        let order = p.pow(k);
        let n = order as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..order {
            let da = digits(a, p, k);
            for b in 0..order {
                let db = digits(b, p, k);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * order + b) as usize] = undigits(&sum, p) as Elem;
                mul[(a * order + b) as usize] = undigits(&poly_mulmod(&da, &db, &modulus, p), p) as Elem;
            }
        }
        let mut neg = vec![0; n];
        let mut inv = vec![0; n];
        for a in 0..n {
            neg[a] = (0..n).find(|&b| add[a * n + b] == 0)? as Elem;
            if a != 0 {
                inv[a] = (1..n).find(|&b| mul[a * n + b] == 1)? as Elem;
            }
        }
        let field = FiniteField { p, k, order, modulus, add, mul, neg, inv };
        field.spot_check();
        Some(field)
    }

    fn spot_check(&self) {
        let q = self.order as Elem;
        let step = (self.order / 5).max(1) as usize;
        for a in (0..q).step_by(step) {
            assert_eq!(self.add(a, 0), a);
            assert_eq!(self.mul(a, 1), a);
            for b in (0..q).step_by(step) {
                assert_eq!(self.add(a, b), self.add(b, a));
                assert_eq!(self.mul(a, b), self.mul(b, a));
                for c in (0..q).step_by(step) {
                    assert_eq!(self.add(self.add(a, b), c), self.add(a, self.add(b, c)));
                    assert_eq!(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)));
                    assert_eq!(self.mul(a, self.add(b, c)), self.add(self.mul(a, b), self.mul(a, c)));
                }
            }
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.order
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Panics on zero.
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    pub fn pow(&self, a: Elem, e: u32) -> Elem {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// `a^p`.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.p)
    }

    /// Trace down to the prime field, returned as an integer `0..p`.
    pub fn abs_trace(&self, a: Elem) -> u32 {
        let mut t = 0;
        let mut x = a;
        for _ in 0..self.k {
            t = self.add(t, x);
            x = self.frobenius(x);
        }
        debug_assert!((t as u32) < self.p);
        t as u32
    }

    /// Base-`p` digits of `a`, lowest first.
    pub fn coords(&self, a: Elem) -> Vec<Elem> {
        digits(a as u32, self.p, self.k).into_iter().map(|d| d as Elem).collect()
    }

    pub fn from_coords(&self, d: &[Elem]) -> Elem {
        undigits(&d.iter().map(|&x| x as u32).collect::<Vec<_>>(), self.p) as Elem
    }
}
