use std::sync::Arc;

use crate::clifford::element::VeeElement;
use crate::clifford::signature::Signature;
use crate::clifford::structure::elements;
use crate::error::{Error, Result};
use crate::gamma::GammaRing;
use crate::graded::{GradedGroup, NFoldProduct, MAX_MATERIALIZED};

/// `Q(𝐭)` as a [`GradedGroup`] over 𝔽₂; element `k` is
/// `VeeElement::from_index(k)`.
pub fn as_graded_group(sig: &Signature) -> Result<GradedGroup> {
    let size = 1usize << (sig.n() + 1).min(63);
    if sig.n() > 11 || size > MAX_MATERIALIZED {
        return Err(Error::SizeCap { what: "materialized Q(t)", size, cap: MAX_MATERIALIZED });
    }
    let all = elements(sig)?;
    let n = all.len();
    let mut table = Vec::with_capacity(n * n);
    for &x in &all {
        for &y in &all {
            table.push(sig.mul(x, y).index());
        }
    }
    GradedGroup::from_trusted_table(
        Arc::new(GammaRing::f2()),
        table,
        all.iter().map(|x| x.degree() as usize).collect(),
        vec![VeeElement::ONE.index(), VeeElement::Z.index()],
        all.iter().map(|x| x.to_string()).collect(),
        format!("Q({sig})"),
    )
}

/// `Q(t₁) ×̂_Z ⋯ ×̂_Z Q(tₙ)` built from the rank-one groups `Γ₁,₀` and
/// `Γ₀,₁` over 𝔽₂.
pub fn iterated_graded_product(sig: &Signature) -> Result<NFoldProduct> {
    if sig.n() == 0 {
        return Err(Error::InvalidArgument("need at least one generator".into()));
    }
    let f2 = Arc::new(GammaRing::f2());
    let q1 = Arc::new(GradedGroup::gamma_1_0(f2.clone()));
    let qz = Arc::new(GradedGroup::gamma_0_1(f2));
    let factors = sig
        .flags()
        .into_iter()
        .map(|z| if z { qz.clone() } else { q1.clone() })
        .collect();
    NFoldProduct::new(factors)
}

/// Index in an [`iterated_graded_product`] of `Z^z e_A`, i.e. of the
/// tuple `[x₁, …, xₙ]` with `xᵢ = eᵢ` for `i ∈ A` and the extra `Z` on the
/// first coordinate.
pub fn product_index(product: &NFoldProduct, x: VeeElement) -> Result<usize> {
    let n = product.factors().len();
    let mut tuple: Vec<usize> = (0..n).map(|i| if x.a >> i & 1 == 1 { 2 } else { 0 }).collect();
    tuple[0] ^= x.z as usize;
    product.element(&tuple)
}

/// `(Zt₁t₂, …, Zt₁tₙ)`
pub fn even_part(sig: &Signature) -> Result<Signature> {
    if sig.n() < 2 {
        return Err(Error::InvalidArgument("even part needs n ≥ 2".into()));
    }
    let flags: Vec<bool> = (2..=sig.n()).map(|k| !(sig.t(1) ^ sig.t(k))).collect();
    Signature::from_flags(&flags)
}

/// `b_k = e₁ e_k` for `k = 2..n`, generating the even subgroup.
pub fn even_part_generators(sig: &Signature) -> Vec<VeeElement> {
    let e1 = VeeElement::generator(1);
    (2..=sig.n())
        .map(|k| sig.mul(e1, VeeElement::generator(k)))
        .collect()
}

/// The morphism `Q(even_part(𝐭)) → Q(𝐭)_0` sending `e_k ↦ b_{k+1}`.
pub fn even_embedding(sig: &Signature, x: VeeElement) -> Result<VeeElement> {
    let target = even_part(sig)?;
    if !target.contains(x) {
        return Err(Error::SignatureMismatch(format!("{x} is not in Q({target})")));
    }
    let b = even_part_generators(sig);
    let mut out = if x.z { VeeElement::Z } else { VeeElement::ONE };
    for k in x.indices() {
        out = sig.mul(out, b[k - 1]);
    }
    Ok(out)
}
