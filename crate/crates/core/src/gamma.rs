//! Finite generalized rings: an abelian group `(Γ, +)` together with a
//! bi-additive product `Γ × Γ → Γ`.
//!
//! Elements are canonical indices `0..size` into dense tables, so every
//! operation is a single lookup. All ring axioms are checked once, when the
//! ring is built.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaRing {
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    unit: Option<usize>,
    is_skew: bool,
}

/// JSON form used by the command line tools.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaRingJson {
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl GammaRing {
    /// `ℤ/mℤ` with its usual product.
    pub fn z_mod(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidRing("modulus must be positive".into()));
        }
        let add = (0..m * m).map(|k| (k / m + k % m) % m).collect();
        let mul = (0..m * m).map(|k| (k / m) * (k % m) % m).collect();
        Self::from_flat(m, add, mul)
    }

    /// The field `𝔽₂ = ℤ/2ℤ`, the grading ring of the discrete Clifford groups.
    pub fn f2() -> Self {
        Self::z_mod(2).expect("ℤ/2ℤ is a valid ring")
    }

    /// Builds a ring from square tables, validating every axiom.
    pub fn from_tables(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<Self> {
        let n = add.len();
        if mul.len() != n || add.iter().chain(mul.iter()).any(|row| row.len() != n) {
            return Err(Error::InvalidRing(format!(
                "tables must both be {n}×{n}"
            )));
        }
        let flat = |t: &[Vec<usize>]| t.iter().flatten().copied().collect::<Vec<_>>();
        Self::from_flat(n, flat(add), flat(mul))
    }

    fn from_flat(n: usize, add: Vec<usize>, mul: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRing("carrier must be non-empty".into()));
        }
        if let Some(&bad) = add.iter().chain(mul.iter()).find(|&&v| v >= n) {
            return Err(Error::InvalidRing(format!("table entry {bad} out of range")));
        }
        let a = |x: usize, y: usize| add[x * n + y];
        let m = |x: usize, y: usize| mul[x * n + y];

        for x in 0..n {
            for y in 0..n {
                if a(x, y) != a(y, x) {
                    return Err(Error::InvalidRing(format!(
                        "addition not commutative at ({x}, {y})"
                    )));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if a(a(x, y), z) != a(x, a(y, z)) {
                        return Err(Error::InvalidRing(format!(
                            "addition not associative at ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        let zero = (0..n)
            .find(|&z| (0..n).all(|x| a(z, x) == x))
            .ok_or_else(|| Error::InvalidRing("addition has no zero".into()))?;
        let mut neg = vec![0; n];
        for x in 0..n {
            neg[x] = (0..n)
                .find(|&y| a(x, y) == zero)
                .ok_or_else(|| Error::InvalidRing(format!("element {x} has no negative")))?;
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if m(a(x, y), z) != a(m(x, z), m(y, z)) {
                        return Err(Error::InvalidRing(format!(
                            "product not additive in the left argument at ({x}, {y}, {z})"
                        )));
                    }
                    if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                        return Err(Error::InvalidRing(format!(
                            "product not additive in the right argument at ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        let is_skew = (0..n).all(|x| (0..n).all(|y| a(m(x, y), m(y, x)) == zero));
        let unit = (0..n).find(|&u| (0..n).all(|x| m(u, x) == x && m(x, u) == x));
        Ok(Self {
            size: n,
            add,
            mul,
            neg,
            zero,
            unit,
            is_skew,
        })
    }

    /// Same additive group with the zero product. Braiding over this ring is
    /// the plain set-theoretic swap.
    pub fn with_zero_product(&self) -> Self {
        let mut r = self.clone();
        r.mul = vec![self.zero; self.size * self.size];
        r.is_skew = true;
        r.unit = if self.size == 1 { Some(self.zero) } else { None };
        r
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn is_skew(&self) -> bool {
        self.is_skew
    }

    pub fn has_unit(&self) -> bool {
        self.unit.is_some()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    /// Sum of a sequence of elements.
    pub fn sum<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    pub fn elem(&self, index: usize) -> Result<GammaElem<'_>> {
        if index >= self.size {
            return Err(Error::InvalidArgument(format!(
                "index {index} outside a ring of size {}",
                self.size
            )));
        }
        Ok(GammaElem { ring: self, index })
    }

    pub fn to_json(&self) -> GammaRingJson {
        let rows = |t: &[usize]| t.chunks(self.size).map(<[usize]>::to_vec).collect();
        GammaRingJson {
            size: self.size,
            add: rows(&self.add),
            mul: rows(&self.mul),
        }
    }

    pub fn from_json(json: &GammaRingJson) -> Result<Self> {
        if json.add.len() != json.size {
            return Err(Error::InvalidRing(format!(
                "declared size {} but {} rows",
                json.size,
                json.add.len()
            )));
        }
        Self::from_tables(&json.add, &json.mul)
    }
}

/// An element of a specific generalized ring.
#[derive(Debug, Clone, Copy)]
pub struct GammaElem<'a> {
    ring: &'a GammaRing,
    index: usize,
}

impl<'a> GammaElem<'a> {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn ring(&self) -> &'a GammaRing {
        self.ring
    }

    fn check(&self, other: &GammaElem<'_>) -> Result<()> {
        if std::ptr::eq(self.ring, other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &GammaElem<'_>) -> Result<GammaElem<'a>> {
        self.check(other)?;
        Ok(GammaElem {
            ring: self.ring,
            index: self.ring.add(self.index, other.index),
        })
    }

    pub fn mul(&self, other: &GammaElem<'_>) -> Result<GammaElem<'a>> {
        self.check(other)?;
        Ok(GammaElem {
            ring: self.ring,
            index: self.ring.mul(self.index, other.index),
        })
    }

    pub fn neg(&self) -> GammaElem<'a> {
        GammaElem {
            ring: self.ring,
            index: self.ring.neg(self.index),
        }
    }
}

impl PartialEq for GammaElem<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.check(other).is_ok() && self.index == other.index
    }
}

impl Eq for GammaElem<'_> {}
