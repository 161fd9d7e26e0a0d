use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graded::group::GradedGroup;
use crate::graded::set::{canonicalize, graded_product_set, GradedSet};

/// An element of an iterated graded product, kept as its base factors plus a
/// coordinate tuple. Equality is equality of classes.
#[derive(Debug, Clone)]
pub struct FlatElement {
    pub factors: Vec<Arc<GradedSet>>,
    pub tuple: Vec<usize>,
}

impl FlatElement {
    pub fn new(factors: Vec<Arc<GradedSet>>, tuple: Vec<usize>) -> Result<Self> {
        if factors.is_empty() || factors.len() != tuple.len() {
            return Err(Error::ShapeMismatch("one coordinate per factor".into()));
        }
        if tuple.iter().zip(&factors).any(|(&x, f)| x >= f.len()) {
            return Err(Error::ShapeMismatch("coordinate out of range".into()));
        }
        Ok(Self { factors, tuple })
    }

    pub fn len(&self) -> usize {
        self.tuple.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuple.is_empty()
    }

    /// Degree of the coordinates in `range`.
    pub fn block_degree(&self, range: std::ops::Range<usize>) -> usize {
        let gamma = self.factors[0].gamma();
        gamma.sum(range.map(|i| self.factors[i].degree(self.tuple[i])))
    }

    pub fn degree(&self) -> usize {
        self.block_degree(0..self.len())
    }

    /// `x.[m₁,…,mₙ]`
    pub fn act(&self, x: usize) -> Self {
        let mut out = self.clone();
        out.tuple[0] = self.factors[0].act(x, self.tuple[0]);
        out
    }

    pub fn canonical(&self) -> Vec<usize> {
        canonicalize(&self.factors, &self.tuple)
    }

    pub fn same_class(&self, other: &Self) -> bool {
        self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| Arc::ptr_eq(a, b))
            && self.canonical() == other.canonical()
    }

    /// The braiding on the adjacent blocks `[start, mid)` and `[mid, end)`,
    /// identity elsewhere: `[x, y] ↦ Z^{d(y)d(x)} [y, x]`.
    pub fn swap_blocks(&self, start: usize, mid: usize, end: usize) -> Self {
        self.swap_blocks_with(start, mid, end, true)
    }

    /// The set-theoretic swap of the same blocks (zero Γ-product).
    pub fn swap_blocks_plain(&self, start: usize, mid: usize, end: usize) -> Self {
        self.swap_blocks_with(start, mid, end, false)
    }

    fn swap_blocks_with(&self, start: usize, mid: usize, end: usize, twisted: bool) -> Self {
        assert!(start < mid && mid < end && end <= self.len(), "invalid block bounds");
        let gamma = self.factors[0].gamma();
        let mut factors = self.factors[..start].to_vec();
        factors.extend_from_slice(&self.factors[mid..end]);
        factors.extend_from_slice(&self.factors[start..mid]);
        factors.extend_from_slice(&self.factors[end..]);
        let mut tuple = self.tuple[..start].to_vec();
        tuple.extend_from_slice(&self.tuple[mid..end]);
        tuple.extend_from_slice(&self.tuple[start..mid]);
        tuple.extend_from_slice(&self.tuple[end..]);
        let out = Self { factors, tuple };
        if twisted {
            let u = gamma.mul(self.block_degree(mid..end), self.block_degree(start..mid));
            out.act(u)
        } else {
            out
        }
    }

    /// Inverse of [`FlatElement::swap_blocks`] given the blocks of the
    /// result: `[y, x] ↦ Z^{−d(y)d(x)} [x, y]` where `y` spans
    /// `[start, start + len_y)`.
    pub fn unswap_blocks(&self, start: usize, len_y: usize, end: usize) -> Self {
        let gamma = self.factors[0].gamma();
        let mid = start + len_y;
        let u = gamma.neg(gamma.mul(self.block_degree(start..mid), self.block_degree(mid..end)));
        self.swap_blocks_plain(start, mid, end).act(u)
    }
}

/// `β_{M₁,M₂} : M₁ ×_z M₂ → M₂ ×_z M₁`, tabulated.
#[derive(Debug, Clone)]
pub struct Braiding {
    source: Arc<GradedSet>,
    target: Arc<GradedSet>,
    split: usize,
    forward: Vec<usize>,
}

impl Braiding {
    pub fn new(m1: &Arc<GradedSet>, m2: &Arc<GradedSet>) -> Result<Self> {
        Self::build(m1, m2, true)
    }

    /// The standard set-theoretic braiding `[x₁,x₂] ↦ [x₂,x₁]`.
    pub fn standard(m1: &Arc<GradedSet>, m2: &Arc<GradedSet>) -> Result<Self> {
        Self::build(m1, m2, false)
    }

    fn build(m1: &Arc<GradedSet>, m2: &Arc<GradedSet>, twisted: bool) -> Result<Self> {
        let source = graded_product_set(&[m1.clone(), m2.clone()])?;
        let target = graded_product_set(&[m2.clone(), m1.clone()])?;
        let split = m1.factor_count();
        let factors = source.flat_factors();
        let total = factors.len();
        let forward = (0..source.len())
            .map(|m| {
                let x = FlatElement { factors: factors.clone(), tuple: source.coords(m) };
                let y = if twisted {
                    x.swap_blocks(0, split, total)
                } else {
                    x.swap_blocks_plain(0, split, total)
                };
                target.index_of(&y.tuple)
            })
            .collect::<Result<_>>()?;
        Ok(Self { source, target, split, forward })
    }

    pub fn source(&self) -> &Arc<GradedSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedSet> {
        &self.target
    }

    pub fn apply(&self, m: usize) -> usize {
        self.forward[m]
    }

    /// `[y₁,y₂] ↦ Z^{−d(y₁)d(y₂)} [y₂,y₁]`, evaluated directly.
    pub fn apply_inverse_formula(&self, y: usize) -> Result<usize> {
        let factors = self.target.flat_factors();
        let total = factors.len();
        let len_y = total - self.split;
        let e = FlatElement { factors, tuple: self.target.coords(y) };
        self.source.index_of(&e.unswap_blocks(0, len_y, total).tuple)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        for &y in &self.forward {
            if std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn preserves_grading(&self) -> bool {
        (0..self.source.len()).all(|m| self.source.degree(m) == self.target.degree(self.apply(m)))
    }
}

/// Checks whether `β : G₁ ×̂ G₂ → G₂ ×̂ G₁` is multiplicative. Returns the
/// first pair `(a, b)` of source elements with `β(ab) ≠ β(a)β(b)`.
pub fn braiding_is_group_iso(
    g1: &Arc<GradedGroup>,
    g2: &Arc<GradedGroup>,
) -> Result<Option<(usize, usize)>> {
    let source = GradedGroup::graded_product(g1, g2)?;
    let target = GradedGroup::graded_product(g2, g1)?;
    let r = source.gamma().clone();
    let beta: Vec<usize> = (0..source.order())
        .map(|m| {
            let (a, b) = source.pair(m).expect("binary product");
            let mut t = g2.set().coords(b);
            t.extend(g1.set().coords(a));
            let swapped = target.set().index_of(&t)?;
            let u = r.mul(g2.degree(b), g1.degree(a));
            Ok(target.mul(target.z(u), swapped))
        })
        .collect::<Result<_>>()?;
    for a in 0..source.order() {
        for b in 0..source.order() {
            if beta[source.mul(a, b)] != target.mul(beta[a], beta[b]) {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// `β_σ : M₁ ×_z ⋯ ×_z Mₙ → M_{σ(1)} ×_z ⋯ ×_z M_{σ(n)}` for skew Γ.
///
/// Position `k` of the result holds `x_{σ(k)}` and the twist is
/// `Σ d(x_b)d(x_a)` over the pairs `a < b` whose order gets reversed.
/// Composition: `β_τ ∘ β_σ = β_{σ∘τ}`.
#[derive(Debug, Clone)]
pub struct PermutationBraiding {
    sigma: Vec<usize>,
    position: Vec<usize>,
}

impl PermutationBraiding {
    /// `sigma` is 0-indexed.
    pub fn new(sigma: &[usize], gamma_is_skew: bool) -> Result<Self> {
        if !gamma_is_skew {
            return Err(Error::NonSkew);
        }
        let n = sigma.len();
        let mut position = vec![usize::MAX; n];
        for (k, &s) in sigma.iter().enumerate() {
            if s >= n || position[s] != usize::MAX {
                return Err(Error::InvalidArgument(format!("{sigma:?} is not a permutation")));
            }
            position[s] = k;
        }
        Ok(Self { sigma: sigma.to_vec(), position })
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// Twist exponent for the given coordinate degrees.
    pub fn exponent(&self, gamma: &crate::gamma::GammaRing, degrees: &[usize]) -> usize {
        let n = self.sigma.len();
        let mut u = gamma.zero();
        for a in 0..n {
            for b in a + 1..n {
                if self.position[a] > self.position[b] {
                    u = gamma.add(u, gamma.mul(degrees[b], degrees[a]));
                }
            }
        }
        u
    }

    pub fn apply(&self, x: &FlatElement) -> Result<FlatElement> {
        if x.len() != self.sigma.len() {
            return Err(Error::ShapeMismatch("permutation size differs from product length".into()));
        }
        let gamma = x.factors[0].gamma();
        if !gamma.is_skew() {
            return Err(Error::NonSkew);
        }
        let degrees: Vec<usize> = (0..x.len()).map(|i| x.factors[i].degree(x.tuple[i])).collect();
        let u = self.exponent(gamma, &degrees);
        let out = FlatElement {
            factors: self.sigma.iter().map(|&s| x.factors[s].clone()).collect(),
            tuple: self.sigma.iter().map(|&s| x.tuple[s]).collect(),
        };
        Ok(out.act(u))
    }

    /// The same map as a composite of adjacent block swaps (bubble sort of
    /// the target arrangement).
    pub fn apply_by_adjacent_swaps(&self, x: &FlatElement) -> FlatElement {
        let mut current = x.clone();
        let mut order: Vec<usize> = (0..self.sigma.len()).collect();
        for k in 0..self.sigma.len() {
            let at = order.iter().position(|&o| o == self.sigma[k]).expect("permutation");
            for j in (k..at).rev() {
                current = current.swap_blocks(j, j + 1, j + 2);
                order.swap(j, j + 1);
            }
        }
        current
    }
}
