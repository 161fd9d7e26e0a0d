use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gamma::GammaRing;

/// Upper bound on the number of elements of a materialized product.
pub const MAX_MATERIALIZED: usize = 4096;

/// A centrally Γ-graded set: a degree map `d : M → Γ` and a Γ-action that
/// preserves degrees.
///
/// Products of graded sets keep track of their base factors. Each element of
/// a product is stored as the canonical representative tuple of its class
/// modulo the generalized antidiagonal `{(γ₁,…,γₙ) : Σγᵢ = 0}`, so
/// `(M₁ × M₂) × M₃` and `M₁ × (M₂ × M₃)` produce identical element lists.
#[derive(Debug, Clone)]
pub struct GradedSet {
    gamma: Arc<GammaRing>,
    degree: Vec<usize>,
    action: Vec<usize>,
    names: Vec<String>,
    factors: Vec<Arc<GradedSet>>,
    coords: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
}

impl GradedSet {
    /// `action[x][m]` is `x.m`.
    pub fn new(
        gamma: Arc<GammaRing>,
        degree: Vec<usize>,
        action: Vec<Vec<usize>>,
        names: Vec<String>,
    ) -> Result<Self> {
        let n = degree.len();
        let g = gamma.size();
        if action.len() != g || action.iter().any(|row| row.len() != n) {
            return Err(Error::ShapeMismatch(format!(
                "action table must be {g}×{n}"
            )));
        }
        if names.len() != n {
            return Err(Error::ShapeMismatch("one name per element".into()));
        }
        if degree.iter().any(|&d| d >= g) {
            return Err(Error::InvalidGrading("degree outside Γ".into()));
        }
        let flat: Vec<usize> = action.into_iter().flatten().collect();
        if flat.iter().any(|&m| m >= n) {
            return Err(Error::InvalidGrading("action leaves the set".into()));
        }
        let set = Self::raw(gamma, degree, flat, names);
        set.validate()?;
        Ok(set)
    }

    pub(crate) fn raw(
        gamma: Arc<GammaRing>,
        degree: Vec<usize>,
        action: Vec<usize>,
        names: Vec<String>,
    ) -> Self {
        Self {
            gamma,
            degree,
            action,
            names,
            factors: Vec::new(),
            coords: Vec::new(),
            lookup: HashMap::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        let r = &*self.gamma;
        for m in 0..self.len() {
            if self.act(r.zero(), m) != m {
                return Err(Error::InvalidGrading(format!("0 does not fix element {m}")));
            }
            for x in 0..r.size() {
                if self.degree[self.act(x, m)] != self.degree[m] {
                    return Err(Error::InvalidGrading(format!(
                        "action of {x} changes the degree of {m}"
                    )));
                }
                for y in 0..r.size() {
                    if self.act(x, self.act(y, m)) != self.act(r.add(x, y), m) {
                        return Err(Error::InvalidGrading(format!(
                            "not an action at ({x}, {y}, {m})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The unit object: `Γ` acting on itself by translation, in degree 0.
    pub fn unit(gamma: Arc<GammaRing>) -> Self {
        let n = gamma.size();
        let action = (0..n * n).map(|k| gamma.add(k / n, k % n)).collect();
        let names = (0..n).map(|x| format!("γ{x}")).collect();
        Self::raw(gamma.clone(), vec![gamma.zero(); n], action, names)
    }

    pub fn gamma(&self) -> &Arc<GammaRing> {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.degree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degree.is_empty()
    }

    #[inline]
    pub fn degree(&self, m: usize) -> usize {
        self.degree[m]
    }

    /// `x.m`
    #[inline]
    pub fn act(&self, x: usize, m: usize) -> usize {
        self.action[x * self.len() + m]
    }

    pub fn name(&self, m: usize) -> &str {
        &self.names[m]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The grading automorphism `m ↦ d(m).m`.
    pub fn grading_automorphism(&self, m: usize) -> usize {
        self.act(self.degree[m], m)
    }

    pub fn is_product(&self) -> bool {
        !self.factors.is_empty()
    }

    /// Base factors this set is a product of (the set itself when it is not
    /// a product).
    pub fn flat_factors(self: &Arc<Self>) -> Vec<Arc<GradedSet>> {
        if self.is_product() {
            self.factors.clone()
        } else {
            vec![self.clone()]
        }
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len().max(1)
    }

    /// Canonical coordinates of `m` over the base factors.
    pub fn coords(&self, m: usize) -> Vec<usize> {
        if self.is_product() {
            self.coords[m].clone()
        } else {
            vec![m]
        }
    }

    /// Element whose class contains the tuple (over the base factors).
    pub fn index_of(&self, tuple: &[usize]) -> Result<usize> {
        if !self.is_product() {
            return match tuple {
                [m] if *m < self.len() => Ok(*m),
                _ => Err(Error::ShapeMismatch(format!(
                    "expected a single coordinate below {}",
                    self.len()
                ))),
            };
        }
        if tuple.len() != self.factors.len()
            || tuple.iter().zip(&self.factors).any(|(&x, f)| x >= f.len())
        {
            return Err(Error::ShapeMismatch(format!(
                "tuple {tuple:?} does not fit {} factors",
                self.factors.len()
            )));
        }
        let canon = canonicalize(&self.factors, tuple);
        Ok(self.lookup[&canon])
    }

    /// `true` when both sets are products of the same base objects in the
    /// same order and list identical canonical elements.
    pub fn same_carrier(&self, other: &GradedSet) -> bool {
        self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| Arc::ptr_eq(a, b))
            && self.coords == other.coords
    }

    pub(crate) fn with_factorization(
        mut self,
        factors: Vec<Arc<GradedSet>>,
        coords: Vec<Vec<usize>>,
    ) -> Self {
        self.lookup = coords.iter().cloned().zip(0..).collect();
        self.factors = factors;
        self.coords = coords;
        self
    }
}

/// Lexicographically least tuple in the orbit of `tuple` under the
/// generalized antidiagonal action.
///
/// Coordinates `0..n-1` may each be moved freely inside their Γ-orbit, the
/// last one absorbs the compensation. Stabilizers of the earlier coordinates
/// leave a residual freedom on the last coordinate, accumulated in `slack`.
pub fn canonicalize(factors: &[Arc<GradedSet>], tuple: &[usize]) -> Vec<usize> {
    let n = tuple.len();
    if n <= 1 {
        return tuple.to_vec();
    }
    let gamma = factors[0].gamma();
    let g = gamma.size();
    let mut out = Vec::with_capacity(n);
    let mut shift = gamma.zero();
    let mut slack = vec![false; g];
    slack[gamma.zero()] = true;
    for (f, &x) in factors.iter().zip(tuple).take(n - 1) {
        let (best_shift, best) = (0..g)
            .map(|s| (s, f.act(s, x)))
            .min_by_key(|&(_, m)| m)
            .expect("Γ is non-empty");
        out.push(best);
        shift = gamma.add(shift, best_shift);
        let stab: Vec<usize> = (0..g).filter(|&s| f.act(s, x) == x).collect();
        if stab.len() > 1 {
            let mut next = vec![false; g];
            for k in (0..g).filter(|&k| slack[k]) {
                for &s in &stab {
                    next[gamma.add(k, s)] = true;
                }
            }
            slack = next;
        }
    }
    let last = &factors[n - 1];
    let x = tuple[n - 1];
    let best = (0..g)
        .filter(|&k| slack[k])
        .map(|k| last.act(gamma.neg(gamma.add(shift, k)), x))
        .min()
        .expect("slack contains zero");
    out.push(best);
    out
}

fn check_same_gamma(sets: &[Arc<GradedSet>]) -> Result<()> {
    let first = sets[0].gamma();
    if sets
        .iter()
        .all(|s| Arc::ptr_eq(s.gamma(), first) || **s.gamma() == **first)
    {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Builds the product set over the given base factors from any list of
/// (not yet canonical) coordinate tuples.
pub(crate) fn materialize(
    factors: Vec<Arc<GradedSet>>,
    tuples: impl IntoIterator<Item = Vec<usize>>,
) -> Result<GradedSet> {
    let canon: BTreeSet<Vec<usize>> = tuples
        .into_iter()
        .map(|t| canonicalize(&factors, &t))
        .collect();
    if canon.len() > MAX_MATERIALIZED {
        return Err(Error::SizeCap {
            what: "materialized product",
            size: canon.len(),
            cap: MAX_MATERIALIZED,
        });
    }
    let coords: Vec<Vec<usize>> = canon.into_iter().collect();
    let gamma = factors[0].gamma().clone();
    let lookup: HashMap<Vec<usize>, usize> = coords.iter().cloned().zip(0..).collect();
    let degree: Vec<usize> = coords
        .iter()
        .map(|t| gamma.sum(t.iter().zip(&factors).map(|(&x, f)| f.degree(x))))
        .collect();
    let n = coords.len();
    let mut action = vec![0; gamma.size() * n];
    for x in 0..gamma.size() {
        for (m, t) in coords.iter().enumerate() {
            let mut moved = t.clone();
            moved[0] = factors[0].act(x, t[0]);
            action[x * n + m] = lookup[&canonicalize(&factors, &moved)];
        }
    }
    let names = coords
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().zip(&factors).map(|(&x, f)| f.name(x)).collect();
            format!("[{}]", parts.join(","))
        })
        .collect();
    Ok(GradedSet::raw(gamma, degree, action, names).with_factorization(factors, coords))
}

/// Graded product `M₁ ×_z ⋯ ×_z Mₖ`.
pub fn graded_product_set(sets: &[Arc<GradedSet>]) -> Result<Arc<GradedSet>> {
    if sets.is_empty() {
        return Err(Error::InvalidArgument("empty product".into()));
    }
    check_same_gamma(sets)?;
    if sets.len() == 1 {
        return Ok(sets[0].clone());
    }
    let total: usize = sets.iter().map(|s| s.len()).product();
    if total > MAX_MATERIALIZED * sets[0].gamma().size().pow(sets.len() as u32 - 1) {
        return Err(Error::SizeCap {
            what: "graded product of sets",
            size: total,
            cap: MAX_MATERIALIZED,
        });
    }
    let factors: Vec<Arc<GradedSet>> = sets.iter().flat_map(|s| s.flat_factors()).collect();
    let mut tuples = Vec::with_capacity(total);
    let mut idx = vec![0usize; sets.len()];
    'outer: loop {
        tuples.push(
            idx.iter()
                .zip(sets)
                .flat_map(|(&m, s)| s.coords(m))
                .collect::<Vec<_>>(),
        );
        for k in (0..sets.len()).rev() {
            idx[k] += 1;
            if idx[k] < sets[k].len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    materialize(factors, tuples).map(Arc::new)
}
