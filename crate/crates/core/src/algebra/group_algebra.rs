use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::linalg::{half, Rational};
use crate::error::{Error, Result};
use crate::graded::GradedGroup;

/// Element `Σ λ_g δ_g` of `𝕂[G]`, `𝕂 = ℚ`.
#[derive(Clone)]
pub struct GroupAlgebraElement {
    group: Arc<GradedGroup>,
    coeffs: BTreeMap<usize, Rational>,
}

impl PartialEq for GroupAlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_group(&self.group, &other.group)
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (&g, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c} δ[{}]", self.group.name(g))?;
        }
        Ok(())
    }
}

fn same_group(a: &Arc<GradedGroup>, b: &Arc<GradedGroup>) -> bool {
    Arc::ptr_eq(a, b) || a.same_table(b)
}

impl GroupAlgebraElement {
    pub fn zero(group: &Arc<GradedGroup>) -> Self {
        Self { group: group.clone(), coeffs: BTreeMap::new() }
    }

    /// `δ_g`
    pub fn delta(group: &Arc<GradedGroup>, g: usize) -> Self {
        Self::from_terms(group, [(g, Rational::one())])
    }

    pub fn from_terms(group: &Arc<GradedGroup>, terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut out = Self::zero(group);
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    fn add_term(&mut self, g: usize, c: Rational) {
        let entry = self.coeffs.entry(g).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&g);
        }
    }

    pub fn group(&self) -> &Arc<GradedGroup> {
        &self.group
    }

    pub fn coeff(&self, g: usize) -> Rational {
        self.coeffs.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&g, c)| (g, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient vector indexed by group element.
    pub fn to_dense(&self) -> Vec<Rational> {
        (0..self.group.order()).map(|g| self.coeff(g)).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "{} and {} are different groups",
                self.group.label(),
                other.group.label()
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (g, c) in other.terms() {
            out.add_term(g, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(&self.group, self.terms().map(|(g, x)| (g, x * c)))
    }

    /// Convolution `δ_x * δ_y = δ_{xy}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.group);
        for (x, a) in self.terms() {
            for (y, b) in other.terms() {
                out.add_term(self.group.mul(x, y), a * b);
            }
        }
        Ok(out)
    }

    /// Push-forward along a map `G → G`.
    fn push(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_terms(&self.group, self.terms().map(|(g, c)| (f(g), c.clone())))
    }

    /// Antipode `δ_g ↦ δ_{g⁻¹}`.
    pub fn antipode(&self) -> Self {
        self.push(|g| self.group.inv(g))
    }

    /// `Z_* : δ_g ↦ δ_{Zg}`
    pub fn z_push(&self) -> Self {
        let z = self.group.z(1);
        self.push(|g| self.group.mul(z, g))
    }

    /// `α_* : δ_g ↦ δ_{Z^{d(g)} g}`
    pub fn alpha_push(&self) -> Self {
        self.push(|g| self.group.grading_automorphism(g))
    }

    /// `true` when `δ_g * f = f * δ_g` for every `g`.
    pub fn is_central(&self) -> bool {
        self.group.generating_set().into_iter().all(|g| {
            let d = Self::delta(&self.group, g);
            d.mul(self).unwrap() == self.mul(&d).unwrap()
        })
    }
}

fn check_z(group: &GradedGroup) -> Result<()> {
    if group.gamma().size() != 2 || group.z(1) == group.identity() {
        return Err(Error::InvalidGroup(format!(
            "{} is not ℤ/2-graded with Z ≠ e",
            group.label()
        )));
    }
    Ok(())
}

/// Eigenprojectors of `Z_*`: `P^± f = ½(f ± Z_* f)`.
#[derive(Debug, Clone)]
pub struct ZProjectors {
    group: Arc<GradedGroup>,
}

impl ZProjectors {
    pub fn new(group: &Arc<GradedGroup>) -> Result<Self> {
        check_z(group)?;
        Ok(Self { group: group.clone() })
    }

    pub fn plus(&self, f: &GroupAlgebraElement) -> GroupAlgebraElement {
        f.add(&f.z_push()).unwrap().scale(&half())
    }

    pub fn minus(&self, f: &GroupAlgebraElement) -> GroupAlgebraElement {
        f.sub(&f.z_push()).unwrap().scale(&half())
    }

    /// One element per `{e, Z}`-coset, the smaller index.
    pub fn section(&self) -> Vec<usize> {
        let z = self.group.z(1);
        (0..self.group.order()).filter(|&g| g < self.group.mul(z, g)).collect()
    }

    /// `(P^± δ_h)_{h ∈ H}`, a basis of `𝔸^±`.
    pub fn basis(&self, sign: bool) -> Vec<GroupAlgebraElement> {
        self.section()
            .into_iter()
            .map(|h| {
                let d = GroupAlgebraElement::delta(&self.group, h);
                if sign { self.plus(&d) } else { self.minus(&d) }
            })
            .collect()
    }
}

/// `π : G → G⁰ = G/{e, Z}` and the induced `π_* : 𝕂[G] → 𝕂[G⁰]`.
#[derive(Debug, Clone)]
pub struct ZQuotient {
    class_of: Vec<usize>,
    reps: Vec<usize>,
    group: Arc<GradedGroup>,
}

impl ZQuotient {
    pub fn new(group: &Arc<GradedGroup>) -> Result<Self> {
        check_z(group)?;
        let reps = ZProjectors::new(group)?.section();
        let z = group.z(1);
        let mut class_of = vec![0; group.order()];
        for (k, &h) in reps.iter().enumerate() {
            class_of[h] = k;
            class_of[group.mul(z, h)] = k;
        }
        Ok(Self { class_of, reps, group: group.clone() })
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn project(&self, g: usize) -> usize {
        self.class_of[g]
    }

    /// Product in `G⁰`.
    pub fn mul(&self, u: usize, v: usize) -> usize {
        self.class_of[self.group.mul(self.reps[u], self.reps[v])]
    }

    /// `π_* f` as a dense vector over `G⁰`.
    pub fn push(&self, f: &GroupAlgebraElement) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.order()];
        for (g, c) in f.terms() {
            out[self.class_of[g]] += c;
        }
        out
    }

    /// Convolution in `𝕂[G⁰]`.
    pub fn convolve(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.order()];
        for (u, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (v, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                out[self.mul(u, v)] += x * y;
            }
        }
        out
    }
}

/// `(f₀, f₁)` with `f = f₀ + f₁` and `α_* fᵢ = (−1)^i fᵢ`.
pub fn super_decompose(f: &GroupAlgebraElement) -> (GroupAlgebraElement, GroupAlgebraElement) {
    let a = f.alpha_push();
    (f.add(&a).unwrap().scale(&half()), f.sub(&a).unwrap().scale(&half()))
}

/// Super-degree of a homogeneous nonzero element.
pub fn super_degree(f: &GroupAlgebraElement) -> Option<usize> {
    let a = f.alpha_push();
    if f.is_zero() {
        None
    } else if a == *f {
        Some(0)
    } else if a == f.scale(&-Rational::one()) {
        Some(1)
    } else {
        None
    }
}
