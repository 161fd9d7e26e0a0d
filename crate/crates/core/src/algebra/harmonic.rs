use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::clifford::{CliffordElement, CliffordSignature};
use crate::algebra::group_algebra::GroupAlgebraElement;
use crate::algebra::linalg::{nullspace, rational, Rational};
use crate::clifford::{as_graded_group, Signature, VeeElement};
use crate::error::{Error, Result};
use crate::graded::GradedGroup;

/// `χ_A(B) = (−1)^{|A∩B|}`
pub fn character(a: u64, b: u64) -> i8 {
    if (a & b).count_ones().is_multiple_of(2) { 1 } else { -1 }
}

/// Largest `n` accepted by [`character_table`].
pub const CHARACTER_CAP: usize = 12;

/// `(χ_A(C))_{A,C}` with subsets ordered by bitmask.
pub fn character_table(n: usize) -> Result<Vec<Vec<i8>>> {
    if n > CHARACTER_CAP {
        return Err(Error::SizeCap { what: "character table", size: 1 << n.min(62), cap: 1 << CHARACTER_CAP });
    }
    let dim = 1u64 << n;
    Ok((0..dim).map(|a| (0..dim).map(|c| character(a, c)).collect()).collect())
}

/// Named central element of `𝕂[Q(𝐭)]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralFunction {
    pub name: String,
    pub element: GroupAlgebraElement,
}

fn delta(g: &Arc<GradedGroup>, x: VeeElement) -> GroupAlgebraElement {
    GroupAlgebraElement::delta(g, x.index())
}

/// `E_A⁺ = (e₀ + Z) Σ_B (−1)^{|A∩B|} e_B`, unnormalized.
pub fn e_plus(g: &Arc<GradedGroup>, n: usize, a: u64) -> GroupAlgebraElement {
    let terms = (0..1u64 << n).flat_map(|b| {
        let c = rational(character(a, b) as i64);
        [(VeeElement::e(b).index(), c.clone()), (VeeElement::new(true, b).index(), c)]
    });
    GroupAlgebraElement::from_terms(g, terms)
}

/// `(1 − Z) e_A`
pub fn e_minus(g: &Arc<GradedGroup>, a: u64) -> GroupAlgebraElement {
    delta(g, VeeElement::e(a)).sub(&delta(g, VeeElement::new(true, a))).unwrap()
}

/// `(E_A⁺)_A`, then `e₀⁻`, then `e_𝗇⁻` when `n` is odd.
pub fn central_function_basis(sig: &Signature) -> Result<Vec<CentralFunction>> {
    let g = Arc::new(as_graded_group(sig)?);
    let n = sig.n();
    let mut out: Vec<CentralFunction> = (0..1u64 << n)
        .map(|a| CentralFunction {
            name: format!("E+[{}]", crate::clifford::subset_label(a)),
            element: e_plus(&g, n, a),
        })
        .collect();
    out.push(CentralFunction { name: "e0-".into(), element: e_minus(&g, 0) });
    if n % 2 == 1 {
        out.push(CentralFunction { name: "en-".into(), element: e_minus(&g, sig.full()) });
    }
    Ok(out)
}

/// The scalar `c` with `E_A⁺ * E_B⁺ = c [A = B] E_A⁺` for all `A, B`, or
/// `None` when no such scalar exists.
pub fn idempotent_constant(sig: &Signature) -> Result<Option<Rational>> {
    let g = Arc::new(as_graded_group(sig)?);
    let n = sig.n();
    let es: Vec<GroupAlgebraElement> = (0..1u64 << n).map(|a| e_plus(&g, n, a)).collect();
    let e0 = es[0].clone();
    let sq = e0.mul(&e0)?;
    let idx = VeeElement::ONE.index();
    let c = sq.coeff(idx) / e0.coeff(idx);
    for (i, x) in es.iter().enumerate() {
        for (j, y) in es.iter().enumerate() {
            let prod = x.mul(y)?;
            let expected = if i == j { x.scale(&c) } else { GroupAlgebraElement::zero(&g) };
            if prod != expected {
                return Ok(None);
            }
        }
    }
    Ok(Some(c))
}

/// Linear map `x ↦ g x − x g` on `𝕂[G]`, as rows of a matrix.
fn commutator_rows(g: &Arc<GradedGroup>, gens: &[usize]) -> Vec<Vec<Rational>> {
    let n = g.order();
    let mut rows = Vec::with_capacity(gens.len() * n);
    for &s in gens {
        for out in 0..n {
            let mut row = vec![Rational::zero(); n];
            // coefficient of δ_out in s·δ_x − δ_x·s
            row[g.mul(g.inv(s), out)] += Rational::one();
            row[g.mul(out, g.inv(s))] -= Rational::one();
            rows.push(row);
        }
    }
    rows
}

/// Basis of the center of `𝕂[G]` from the commutation equations.
pub fn group_algebra_center(g: &Arc<GradedGroup>) -> Vec<GroupAlgebraElement> {
    let gens = g.generating_set();
    nullspace(&commutator_rows(g, &gens), g.order())
        .into_iter()
        .map(|v| GroupAlgebraElement::from_terms(g, v.into_iter().enumerate()))
        .collect()
}

/// Basis of the center of `Cl(𝐭)`, solved exactly from `x eᵢ = eᵢ x`.
pub fn clifford_center(sig: &Signature) -> Result<Vec<CliffordElement>> {
    if sig.n() > 10 {
        return Err(Error::SizeCap { what: "Clifford center", size: 1 << sig.n(), cap: 1 << 10 });
    }
    let cs = Arc::new(CliffordSignature::from_signature(sig));
    let dim = cs.dim();
    let mut rows = Vec::new();
    for i in 0..sig.n() {
        let ei = 1u64 << i;
        let mut block = vec![vec![Rational::zero(); dim]; dim];
        for x in 0..dim as u64 {
            let (l, lx) = cs.basis_product(ei, x);
            let (r, rx) = cs.basis_product(x, ei);
            block[lx as usize][x as usize] += l;
            block[rx as usize][x as usize] -= r;
        }
        rows.extend(block);
    }
    nullspace(&rows, dim)
        .into_iter()
        .map(|v| CliffordElement::from_terms(&cs, v.into_iter().enumerate().map(|(a, c)| (a as u64, c))))
        .collect()
}
