//! Isomorphism types of `Q_{p,q}`: ungraded products, normal forms,
//! isomorphism testing and the periodic table.

pub mod fingerprint;
pub mod iso;
pub mod normal_form;
pub mod table;

use std::sync::Arc;

pub use fingerprint::{commutator_subgroup, Fingerprint};
pub use iso::{automorphism_count, is_isomorphism, iso_oracle, isomorphisms, ISO_CAP};
pub use normal_form::{all_reduction_results, normal_form, realize, FactorCounts, NormalForm, Tail};
pub use table::{periodic_table, PeriodicTable, TableEntry, MAX_TABLE_N};

use crate::clifford::{Signature, VeeElement};
use crate::error::{Error, Result};
use crate::graded::GradedGroup;

/// `G₁ ×_Z G₂`
pub fn ungraded_product(g1: &Arc<GradedGroup>, g2: &Arc<GradedGroup>) -> Result<GradedGroup> {
    GradedGroup::ungraded_product(g1, g2)
}

/// `Q(𝐭) ≅ Q(t₁,t₂) ×_Z Q(Zt₁t₂t₃, …, Zt₁t₂tₙ)`
pub fn split_off_rank2(sig: &Signature) -> Result<(Signature, Signature)> {
    if sig.n() < 3 {
        return Err(Error::InvalidArgument("splitting needs n ≥ 3".into()));
    }
    let head = sig.slice(0, 2)?;
    let flags: Vec<bool> = (3..=sig.n())
        .map(|k| !(sig.t(1) ^ sig.t(2) ^ sig.t(k)))
        .collect();
    Ok((head, Signature::from_flags(&flags)?))
}

/// `b_k = e₁e₂e_k`, `k ≥ 3`, generating the complement in
/// [`split_off_rank2`].
pub fn split_generators(sig: &Signature) -> Vec<VeeElement> {
    let e12 = sig.mul(VeeElement::generator(1), VeeElement::generator(2));
    (3..=sig.n())
        .map(|k| sig.mul(e12, VeeElement::generator(k)))
        .collect()
}

/// `σ·𝐭` with entry `σ[i]` receiving `tᵢ₊₁` (0-indexed `σ`); `Q(𝐭)` and
/// `Q(σ·𝐭)` are isomorphic via `e_{i+1} ↦ e_{σ[i]+1}`.
pub fn reorder_signature(sig: &Signature, sigma: &[usize]) -> Result<Signature> {
    let n = sig.n();
    let mut seen = vec![false; n];
    if sigma.len() != n || sigma.iter().any(|&s| s >= n || std::mem::replace(&mut seen[s], true)) {
        return Err(Error::InvalidArgument(format!("{sigma:?} is not a permutation of {n}")));
    }
    let mut flags = vec![false; n];
    for (i, &s) in sigma.iter().enumerate() {
        flags[s] = sig.t(i + 1);
    }
    Signature::from_flags(&flags)
}

/// `(𝐭 ⊕ 𝐬, 𝐬 ⊕ 𝐭)`
pub fn swap_juxtaposition(t: &Signature, s: &Signature) -> Result<(Signature, Signature)> {
    Ok((t.concat(s)?, s.concat(t)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::as_graded_group;

    fn g(sig: &Signature) -> Arc<GradedGroup> {
        Arc::new(as_graded_group(sig).unwrap())
    }

    #[test]
    fn split_examples() {
        let (a, b) = split_off_rank2(&Signature::pq(3, 0).unwrap()).unwrap();
        assert_eq!((a, b), (Signature::pq(2, 0).unwrap(), Signature::pq(0, 1).unwrap()));
        let zz: Signature = "Z,Z,1,Z".parse().unwrap();
        let (a, b) = split_off_rank2(&zz).unwrap();
        assert_eq!(a, Signature::pq(0, 2).unwrap());
        assert_eq!(b.to_string(), "Z,1");
    }

    #[test]
    fn split_is_isomorphism_n4() {
        for zmask in 0..16 {
            let sig = Signature::new(4, zmask).unwrap();
            let (a, b) = split_off_rank2(&sig).unwrap();
            let prod = ungraded_product(&g(&a), &g(&b)).unwrap();
            assert!(iso_oracle(&g(&sig), &prod).unwrap().is_some(), "{sig}");
        }
    }

    #[test]
    fn split_generators_relations() {
        let sig: Signature = "1,Z,Z,1,Z".parse().unwrap();
        let (_, rest) = split_off_rank2(&sig).unwrap();
        let b = split_generators(&sig);
        for (k, &bk) in b.iter().enumerate() {
            let expected = if rest.t(k + 1) { VeeElement::Z } else { VeeElement::ONE };
            assert_eq!(sig.mul(bk, bk), expected);
            for &bl in &b[k + 1..] {
                assert_eq!(sig.mul(bk, bl), sig.mul(sig.mul(bl, bk), VeeElement::Z));
            }
            for i in 1..=2 {
                let e = VeeElement::generator(i);
                assert_eq!(sig.mul(bk, e), sig.mul(e, bk));
            }
        }
    }

    #[test]
    fn ungraded_product_examples() {
        let c2 = g(&Signature::pq(0, 0).unwrap());
        assert_eq!(ungraded_product(&c2, &c2).unwrap().order(), 2);
        let d = g(&Signature::pq(2, 0).unwrap());
        let q = g(&Signature::pq(0, 2).unwrap());
        let dd = ungraded_product(&d, &d).unwrap();
        let qq = ungraded_product(&q, &q).unwrap();
        assert!(iso_oracle(&dd, &qq).unwrap().is_some());
        let v = g(&Signature::pq(1, 0).unwrap());
        let dv = ungraded_product(&d, &v).unwrap();
        assert_eq!(Fingerprint::of(&dv).center_order, 4);
    }

    #[test]
    fn reordering_and_blocks() {
        let oz: Signature = "1,Z".parse().unwrap();
        let (a, b) = swap_juxtaposition(&oz.slice(0, 1).unwrap(), &oz.slice(1, 2).unwrap()).unwrap();
        assert_eq!(b.to_string(), "Z,1");
        assert!(iso_oracle(&g(&a), &g(&b)).unwrap().is_some());
        let sig: Signature = "1,1,Z,Z,1".parse().unwrap();
        let r = reorder_signature(&sig, &[4, 0, 1, 2, 3]).unwrap();
        assert_eq!(r.to_string(), "1,Z,Z,1,1");
        assert!(iso_oracle(&g(&sig), &g(&r)).unwrap().is_some());
        // Q_{2,2} ≅ Q_{1,1} ⊕ Q_{1,1}
        let q11 = Signature::pq(1, 1).unwrap();
        let doubled = q11.concat(&q11).unwrap();
        assert!(iso_oracle(&g(&Signature::pq(2, 2).unwrap()), &g(&doubled)).unwrap().is_some());
    }
}
