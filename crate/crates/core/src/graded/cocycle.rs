use crate::error::{Error, Result};
use crate::graded::group::GradedGroup;

/// The 2-cocycle `τ : G⁰ × G⁰ → Γ` of `G` as a central extension of
/// `G⁰ = G / Z(Γ)`, relative to a section.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    /// `section[h]` represents coset `h`.
    pub section: Vec<usize>,
    /// `values[h * k + h']`
    pub values: Vec<usize>,
    /// Index of `h h'` among the cosets, `k × k`.
    pub quotient: Vec<usize>,
}

impl Cocycle {
    pub fn cosets(&self) -> usize {
        self.section.len()
    }

    pub fn tau(&self, h: usize, h2: usize) -> usize {
        self.values[h * self.cosets() + h2]
    }

    pub fn quotient_mul(&self, h: usize, h2: usize) -> usize {
        self.quotient[h * self.cosets() + h2]
    }
}

/// Computes `τ` from `s(h) s(h') = Z^{τ(h,h')} s(hh')` and checks the
/// cocycle relation `τ(h,h') + τ(hh',h'') = τ(h,h'h'') + τ(h',h'')`.
pub fn central_extension_cocycle(g: &GradedGroup, section: &[usize]) -> Result<Cocycle> {
    if !g.z_is_injective() {
        return Err(Error::NonInjectiveZ);
    }
    let r = g.gamma();
    let n = g.order();
    // coset[g] = index of the section element in the same Z-orbit, and
    // shift[g] = x with Z(x) s(coset) = g.
    let mut coset = vec![usize::MAX; n];
    let mut shift = vec![0; n];
    for (h, &s) in section.iter().enumerate() {
        if s >= n {
            return Err(Error::InvalidArgument(format!("section element {s} out of range")));
        }
        for x in 0..r.size() {
            let m = g.mul(g.z(x), s);
            if coset[m] != usize::MAX {
                return Err(Error::InvalidArgument(
                    "section hits some Z-coset twice".into(),
                ));
            }
            coset[m] = h;
            shift[m] = x;
        }
    }
    if coset.contains(&usize::MAX) {
        return Err(Error::InvalidArgument("section misses a Z-coset".into()));
    }
    let k = section.len();
    let mut values = Vec::with_capacity(k * k);
    let mut quotient = Vec::with_capacity(k * k);
    for &a in section {
        for &b in section {
            let p = g.mul(a, b);
            values.push(shift[p]);
            quotient.push(coset[p]);
        }
    }
    let c = Cocycle { section: section.to_vec(), values, quotient };
    for a in 0..k {
        for b in 0..k {
            for d in 0..k {
                let lhs = r.add(c.tau(a, b), c.tau(c.quotient_mul(a, b), d));
                let rhs = r.add(c.tau(a, c.quotient_mul(b, d)), c.tau(b, d));
                if lhs != rhs {
                    return Err(Error::InvalidGroup(format!(
                        "cocycle relation fails at ({a}, {b}, {d})"
                    )));
                }
            }
        }
    }
    Ok(c)
}
