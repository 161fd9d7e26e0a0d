use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graded::group::GradedGroup;

/// `g₁ • ⋯ • gₙ` in `G^∨`, evaluated in `G` as `Z^u g₁⋯gₙ` with
/// `u = Σ_{i<j} d(g_j)d(g_i)`.
pub fn nfold_dual_product(g: &GradedGroup, elements: &[usize]) -> usize {
    let r = g.gamma();
    let mut u = r.zero();
    for (j, &b) in elements.iter().enumerate() {
        for &a in &elements[..j] {
            u = r.add(u, r.mul(g.degree(b), g.degree(a)));
        }
    }
    let plain = elements.iter().fold(g.identity(), |acc, &x| g.mul(acc, x));
    g.mul(g.z(u), plain)
}

/// `G₁ ×̂ ⋯ ×̂ G_p` together with its base factors.
#[derive(Debug, Clone)]
pub struct NFoldProduct {
    factors: Vec<Arc<GradedGroup>>,
    group: Arc<GradedGroup>,
}

impl NFoldProduct {
    /// Left-nested product `((G₁ ×̂ G₂) ×̂ G₃) ⋯`. Factors must not be
    /// products themselves.
    pub fn new(factors: Vec<Arc<GradedGroup>>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidArgument("empty product".into()));
        }
        if factors.iter().any(|f| f.set().is_product()) {
            return Err(Error::InvalidArgument("factors must be base groups".into()));
        }
        let mut group = factors[0].clone();
        for f in &factors[1..] {
            group = Arc::new(GradedGroup::graded_product(&group, f)?);
        }
        Ok(Self { factors, group })
    }

    pub fn group(&self) -> &Arc<GradedGroup> {
        &self.group
    }

    pub fn factors(&self) -> &[Arc<GradedGroup>] {
        &self.factors
    }

    /// `[g₁, …, g_p]`
    pub fn element(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.factors.len() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} coordinates, got {}",
                self.factors.len(),
                tuple.len()
            )));
        }
        self.group.set().index_of(tuple)
    }

    /// Product of the rows by repeated binary multiplication.
    pub fn iterated_product(&self, rows: &[Vec<usize>]) -> Result<usize> {
        rows.iter().try_fold(self.group.identity(), |acc, row| {
            Ok(self.group.mul(acc, self.element(row)?))
        })
    }

    /// Closed form for a product of `n` rows:
    /// `Z^u [g₁₁⋯g_{n1}, …, g_{1p}⋯g_{np}]` with
    /// `u = Σ_{k<l} Σ_{i>j} d(g_{ki}) d(g_{lj})`.
    pub fn closed_form_product(&self, rows: &[Vec<usize>]) -> Result<usize> {
        let p = self.factors.len();
        if rows.iter().any(|r| r.len() != p) {
            return Err(Error::ShapeMismatch(format!("every row needs {p} entries")));
        }
        let r = self.group.gamma();
        let d = |k: usize, i: usize| self.factors[i].degree(rows[k][i]);
        let mut u = r.zero();
        for k in 0..rows.len() {
            for l in k + 1..rows.len() {
                for i in 0..p {
                    for j in 0..i {
                        u = r.add(u, r.mul(d(k, i), d(l, j)));
                    }
                }
            }
        }
        let columns: Vec<usize> = (0..p)
            .map(|i| {
                let f = &self.factors[i];
                rows.iter().fold(f.identity(), |acc, row| f.mul(acc, row[i]))
            })
            .collect();
        let plain = self.element(&columns)?;
        Ok(self.group.mul(self.group.z(u), plain))
    }

    /// Two-factor closed form for `n` elements `[g_{i1}, g_{i2}]`:
    /// `Z^{Σ_{i<j} d(g_{i2}) d(g_{j1})} [g_{11}⋯g_{n1}, g_{12}⋯g_{n2}]`.
    pub fn two_factor_product(&self, pairs: &[(usize, usize)]) -> Result<usize> {
        if self.factors.len() != 2 {
            return Err(Error::ShapeMismatch("two-factor product expected".into()));
        }
        let (f1, f2) = (&self.factors[0], &self.factors[1]);
        let r = self.group.gamma();
        let mut u = r.zero();
        for (i, &(_, a2)) in pairs.iter().enumerate() {
            for &(b1, _) in &pairs[i + 1..] {
                u = r.add(u, r.mul(f2.degree(a2), f1.degree(b1)));
            }
        }
        let first = pairs.iter().fold(f1.identity(), |acc, &(a, _)| f1.mul(acc, a));
        let second = pairs.iter().fold(f2.identity(), |acc, &(_, b)| f2.mul(acc, b));
        let plain = self.element(&[first, second])?;
        Ok(self.group.mul(self.group.z(u), plain))
    }

    /// `[g₁,…,g_p]⁻¹ = Z^{Σ_{i<j} d(g_j)d(g_i)} [g₁⁻¹,…,g_p⁻¹]`
    pub fn closed_form_inverse(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.factors.len() {
            return Err(Error::ShapeMismatch("one coordinate per factor".into()));
        }
        let r = self.group.gamma();
        let d: Vec<usize> = tuple
            .iter()
            .zip(&self.factors)
            .map(|(&g, f)| f.degree(g))
            .collect();
        let mut u = r.zero();
        for j in 0..d.len() {
            for i in 0..j {
                u = r.add(u, r.mul(d[j], d[i]));
            }
        }
        let inverted: Vec<usize> = tuple
            .iter()
            .zip(&self.factors)
            .map(|(&g, f)| f.inv(g))
            .collect();
        let plain = self.element(&inverted)?;
        Ok(self.group.mul(self.group.z(u), plain))
    }
}
