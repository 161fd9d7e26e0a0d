use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gamma::GammaRing;
use crate::graded::set::{materialize, GradedSet, MAX_MATERIALIZED};

/// A finite centrally Γ-graded group given by its multiplication table.
///
/// Invariants, checked at construction: group axioms, `d` is a morphism to
/// `(Γ, +)`, `Z : Γ → G` is a morphism into the center, and `d ∘ Z = 0`.
#[derive(Debug, Clone)]
pub struct GradedGroup {
    set: Arc<GradedSet>,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<usize>,
    z_embed: Vec<usize>,
    label: String,
    pairs: Vec<(usize, usize)>,
}

impl GradedGroup {
    /// `table[a * n + b]` is the index of `ab`.
    pub fn from_table(
        gamma: Arc<GammaRing>,
        table: Vec<usize>,
        degree: Vec<usize>,
        z_embed: Vec<usize>,
        names: Vec<String>,
        label: impl Into<String>,
    ) -> Result<Self> {
        Self::build(gamma, table, degree, z_embed, names, label.into(), true)
    }

    /// Tables from associative constructions (Clifford arithmetic, products
    /// of groups) skip the associativity pass above 512 elements.
    pub(crate) fn from_trusted_table(
        gamma: Arc<GammaRing>,
        table: Vec<usize>,
        degree: Vec<usize>,
        z_embed: Vec<usize>,
        names: Vec<String>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let check = degree.len() <= 512;
        Self::build(gamma, table, degree, z_embed, names, label.into(), check)
    }

    fn build(
        gamma: Arc<GammaRing>,
        table: Vec<usize>,
        degree: Vec<usize>,
        z_embed: Vec<usize>,
        names: Vec<String>,
        label: String,
        check_associative: bool,
    ) -> Result<Self> {
        let n = degree.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty carrier".into()));
        }
        if n > MAX_MATERIALIZED {
            return Err(Error::SizeCap {
                what: "group table",
                size: n,
                cap: MAX_MATERIALIZED,
            });
        }
        if table.len() != n * n || table.iter().any(|&x| x >= n) {
            return Err(Error::InvalidGroup(format!("table must be {n}×{n} over 0..{n}")));
        }
        if z_embed.len() != gamma.size() || z_embed.iter().any(|&x| x >= n) {
            return Err(Error::InvalidGrading("Z must map each element of Γ into G".into()));
        }
        if names.len() != n {
            return Err(Error::ShapeMismatch("one name per element".into()));
        }
        let table: Vec<u32> = table.into_iter().map(|x| x as u32).collect();
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for (x, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&y| table[x * n + y] as usize == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {x} has no inverse")))?;
            if table[*inv * n + x] as usize != identity {
                return Err(Error::InvalidGroup(format!("left and right inverse of {x} differ")));
            }
        }
        let action = (0..gamma.size())
            .flat_map(|x| (0..n).map(move |g| (x, g)))
            .map(|(x, g)| table[z_embed[x] * n + g] as usize)
            .collect();
        let set = Arc::new(GradedSet::raw(gamma, degree, action, names));
        let group = Self {
            set,
            table,
            identity,
            inverse,
            z_embed,
            label,
            pairs: Vec::new(),
        };
        if check_associative {
            group.check_associative()?;
        }
        group.check_grading()?;
        Ok(group)
    }

    /// Light's test: the set of `a` with `(xy)a = x(ya)` for all `x, y` is
    /// closed under products, so checking a generating set suffices.
    fn check_associative(&self) -> Result<()> {
        let n = self.order();
        for a in self.generating_set() {
            for x in 0..n {
                for y in 0..n {
                    if self.mul(self.mul(x, y), a) != self.mul(x, self.mul(y, a)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({x}, {y}, {a})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_grading(&self) -> Result<()> {
        let r = self.gamma();
        let n = self.order();
        if self.degree(self.identity) != r.zero() {
            return Err(Error::InvalidGrading("d(e) ≠ 0".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if self.degree(self.mul(a, b)) != r.add(self.degree(a), self.degree(b)) {
                    return Err(Error::InvalidGrading(format!(
                        "d is not a morphism at ({a}, {b})"
                    )));
                }
            }
        }
        for x in 0..r.size() {
            if self.degree(self.z(x)) != r.zero() {
                return Err(Error::InvalidGrading(format!("d(Z({x})) ≠ 0")));
            }
            for y in 0..r.size() {
                if self.z(r.add(x, y)) != self.mul(self.z(x), self.z(y)) {
                    return Err(Error::InvalidGrading(format!(
                        "Z is not a morphism at ({x}, {y})"
                    )));
                }
            }
            for g in 0..n {
                if self.mul(self.z(x), g) != self.mul(g, self.z(x)) {
                    return Err(Error::InvalidGrading(format!(
                        "Z({x}) does not commute with {g}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `Γ × Γ` with `d(x₀, x₁) = x₁` and `Z(x) = (x, 0)`; element `(x₀, x₁)`
    /// has index `x₀ + |Γ|·x₁`. Over 𝔽₂ this is `Q(1) ≅ C₂ × C₂`.
    pub fn gamma_1_0(gamma: Arc<GammaRing>) -> Self {
        let m = gamma.size();
        let n = m * m;
        let table = (0..n * n)
            .map(|k| {
                let (a, b) = (k / n, k % n);
                gamma.add(a % m, b % m) + m * gamma.add(a / m, b / m)
            })
            .collect();
        let degree = (0..n).map(|k| k / m).collect();
        let z_embed = (0..m).collect();
        let names = if m == 2 {
            ["1", "Z", "e1", "Ze1"].map(String::from).to_vec()
        } else {
            (0..n).map(|k| format!("({},{})", k % m, k / m)).collect()
        };
        Self::from_table(gamma, table, degree, z_embed, names, "Γ₁,₀")
            .expect("Γ² is a centrally graded group")
    }

    /// The braided dual of [`GradedGroup::gamma_1_0`]; over 𝔽₂ this is
    /// `Q(Z) ≅ C₄`.
    pub fn gamma_0_1(gamma: Arc<GammaRing>) -> Self {
        let mut g = Self::gamma_1_0(gamma).braided_dual();
        g.label = "Γ₀,₁".into();
        g
    }

    pub fn gamma(&self) -> &Arc<GammaRing> {
        self.set.gamma()
    }

    pub fn set(&self) -> &Arc<GradedSet> {
        &self.set
    }

    pub fn order(&self) -> usize {
        self.inverse.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn name(&self, g: usize) -> &str {
        self.set.name(g)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn degree(&self, a: usize) -> usize {
        self.set.degree(a)
    }

    /// `Z(x)`
    #[inline]
    pub fn z(&self, x: usize) -> usize {
        self.z_embed[x]
    }

    pub fn z_is_injective(&self) -> bool {
        let mut seen = self.z_embed.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.z_embed.len()
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order()).all(|g| self.mul(a, g) == self.mul(g, a))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| self.is_central(a))
    }

    /// Grading automorphism `g ↦ Z^{d(g)} g`.
    pub fn grading_automorphism(&self, g: usize) -> usize {
        self.mul(self.z(self.degree(g)), g)
    }

    /// Representative pair of an element of a binary graded product.
    pub fn pair(&self, g: usize) -> Option<(usize, usize)> {
        self.pairs.get(g).copied()
    }

    /// Multiplication table as row-major indices.
    pub fn table(&self) -> Vec<usize> {
        self.table.iter().map(|&x| x as usize).collect()
    }

    /// Subgroup generated by `gens` (breadth-first closure).
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        let mut out = vec![self.identity];
        while let Some(h) = queue.pop_front() {
            for &g in gens {
                let x = self.mul(h, g);
                if !seen[x] {
                    seen[x] = true;
                    out.push(x);
                    queue.push_back(x);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Greedy generating set: repeatedly adds the element that enlarges the
    /// generated subgroup the most.
    pub fn generating_set(&self) -> Vec<usize> {
        let n = self.order();
        let orders: Vec<usize> = (0..n).map(|a| self.element_order(a)).collect();
        let mut gens = Vec::new();
        let mut inside = vec![false; n];
        inside[self.identity] = true;
        let mut size = 1;
        while size < n {
            // highest-order element outside the current closure
            let next = (0..n)
                .filter(|&a| !inside[a])
                .max_by_key(|&a| (orders[a], std::cmp::Reverse(a)))
                .expect("closure is a proper subgroup");
            gens.push(next);
            let closure = self.closure(&gens);
            size = closure.len();
            for x in closure {
                inside[x] = true;
            }
        }
        gens
    }

    /// Subgroup on the given elements (which must be closed), with the
    /// restricted degree and `Z`.
    pub fn subgroup(&self, elements: &[usize], label: impl Into<String>) -> Result<Self> {
        let index: HashMap<usize, usize> = elements.iter().copied().zip(0..).collect();
        let k = elements.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in elements {
            for &b in elements {
                let p = self.mul(a, b);
                table.push(*index.get(&p).ok_or_else(|| {
                    Error::InvalidGroup("subset is not closed under multiplication".into())
                })?);
            }
        }
        let z_embed = (0..self.gamma().size())
            .map(|x| {
                index
                    .get(&self.z(x))
                    .copied()
                    .ok_or_else(|| Error::InvalidGroup("subgroup must contain Z(Γ)".into()))
            })
            .collect::<Result<_>>()?;
        Self::from_table(
            self.gamma().clone(),
            table,
            elements.iter().map(|&a| self.degree(a)).collect(),
            z_embed,
            elements.iter().map(|&a| self.name(a).to_string()).collect(),
            label,
        )
    }

    /// Same group with every degree set to zero.
    pub fn forget_grading(&self) -> Self {
        let mut g = self.clone();
        let set = GradedSet::raw(
            self.gamma().clone(),
            vec![self.gamma().zero(); self.order()],
            (0..self.gamma().size())
                .flat_map(|x| (0..self.order()).map(move |a| (x, a)))
                .map(|(x, a)| self.set.act(x, a))
                .collect(),
            self.set.names().to_vec(),
        );
        g.set = Arc::new(set);
        g
    }

    /// Negative grading `(G, −d)`.
    pub fn negative_grading(&self) -> Self {
        let r = self.gamma().clone();
        let mut g = self.clone();
        let degree = (0..self.order()).map(|a| r.neg(self.degree(a))).collect();
        let action = (0..r.size())
            .flat_map(|x| (0..self.order()).map(move |a| (x, a)))
            .map(|(x, a)| self.set.act(x, a))
            .collect();
        g.set = Arc::new(GradedSet::raw(r, degree, action, self.set.names().to_vec()));
        g
    }

    /// Braided dual `G^∨`: same carrier, `x • y = Z^{d(y)d(x)} xy`.
    pub fn braided_dual(&self) -> Self {
        let n = self.order();
        let r = self.gamma();
        let table = (0..n * n)
            .map(|k| {
                let (x, y) = (k / n, k % n);
                let u = r.mul(self.degree(y), self.degree(x));
                self.mul(self.z(u), self.mul(x, y)) as u32
            })
            .collect::<Vec<u32>>();
        let mut dual = self.clone();
        dual.table = table;
        dual.inverse = (0..n)
            .map(|g| self.mul(self.z(r.mul(self.degree(g), self.degree(g))), self.inv(g)))
            .collect();
        dual.label = format!("{}^∨", self.label);
        dual
    }

    /// Graded product `G₁ ×̂_Z G₂` with law
    /// `[g₁,g₂][h₁,h₂] = Z^{d(g₂)d(h₁)} [g₁h₁, g₂h₂]`.
    pub fn graded_product(g1: &Arc<Self>, g2: &Arc<Self>) -> Result<Self> {
        Self::product_impl(g1, g2, true)
    }

    /// Ungraded product `G₁ ×_Z G₂`: the quotient of `G₁ × G₂` by
    /// `(Zx₁, x₂) ∼ (x₁, Zx₂)` with the componentwise law.
    pub fn ungraded_product(g1: &Arc<Self>, g2: &Arc<Self>) -> Result<Self> {
        Self::product_impl(g1, g2, false)
    }

    fn product_impl(g1: &Arc<Self>, g2: &Arc<Self>, twisted: bool) -> Result<Self> {
        let r = g1.gamma().clone();
        if !(Arc::ptr_eq(&r, g2.gamma()) || *r == **g2.gamma()) {
            return Err(Error::RingMismatch);
        }
        let (n1, n2) = (g1.order(), g2.order());
        let bound = n1 * n2 / r.size().max(1);
        if bound > MAX_MATERIALIZED {
            return Err(Error::SizeCap {
                what: "graded product of groups",
                size: bound,
                cap: MAX_MATERIALIZED,
            });
        }
        let mut factors = g1.set.flat_factors();
        factors.extend(g2.set.flat_factors());
        let c1: Vec<Vec<usize>> = (0..n1).map(|a| g1.set.coords(a)).collect();
        let c2: Vec<Vec<usize>> = (0..n2).map(|b| g2.set.coords(b)).collect();
        let join = |a: usize, b: usize| {
            let mut t = c1[a].clone();
            t.extend_from_slice(&c2[b]);
            t
        };
        let set = materialize(
            factors.clone(),
            (0..n1).flat_map(|a| (0..n2).map(move |b| (a, b))).map(|(a, b)| join(a, b)),
        )?;
        let n = set.len();
        let mut pairs = vec![None; n];
        let mut index = vec![0; n1 * n2];
        for a in 0..n1 {
            for b in 0..n2 {
                let k = set.index_of(&join(a, b))?;
                index[a * n2 + b] = k;
                pairs[k].get_or_insert((a, b));
            }
        }
        let pairs: Vec<(usize, usize)> = pairs.into_iter().map(Option::unwrap).collect();
        let locate = |a: usize, b: usize| -> Result<usize> { Ok(index[a * n2 + b]) };
        let mut table = Vec::with_capacity(n * n);
        for &(a1, a2) in &pairs {
            for &(b1, b2) in &pairs {
                let u = if twisted {
                    r.mul(g2.degree(a2), g1.degree(b1))
                } else {
                    r.zero()
                };
                let first = g1.mul(g1.z(u), g1.mul(a1, b1));
                table.push(locate(first, g2.mul(a2, b2))?);
            }
        }
        let z_embed = (0..r.size())
            .map(|x| locate(g1.z(x), g2.identity()))
            .collect::<Result<Vec<_>>>()?;
        let sep = if twisted { " ×̂ " } else { " ×_Z " };
        let label = format!("{}{}{}", g1.label, sep, g2.label);
        let degree = (0..n).map(|k| set.degree(k)).collect();
        let names = set.names().to_vec();
        let mut group = Self::from_trusted_table(r, table, degree, z_embed, names, label)?;
        group.set = Arc::new(set);
        group.pairs = pairs;
        Ok(group)
    }

    /// `true` when both groups have identical carriers and tables.
    pub fn same_table(&self, other: &Self) -> bool {
        self.set.same_carrier(&other.set)
            && self.table == other.table
            && self.z_embed == other.z_embed
            && (0..self.order()).all(|g| self.degree(g) == other.degree(g))
    }
}
