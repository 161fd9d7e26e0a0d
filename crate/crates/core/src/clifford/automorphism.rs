use std::collections::{HashSet, VecDeque};

use crate::clifford::element::VeeElement;
use crate::clifford::signature::Signature;
use crate::clifford::structure::elements;
use crate::error::{Error, Result};

/// A map `Q(𝐭) → Q(𝐭)` as images of the dense indices `2A + z`.
pub type ElementMap = Vec<u32>;

fn check_permutation(sigma: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if sigma.len() != n {
        return Err(Error::InvalidArgument(format!("permutation of length {} for n = {n}", sigma.len())));
    }
    for &s in sigma {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return Err(Error::InvalidArgument(format!("{sigma:?} is not a permutation")));
        }
    }
    Ok(())
}

/// `Φ_σ(Z^z e_A) = Z^{z + u} e_{σ(A)}` with
/// `u = |{i < j ∈ A : σ(i) > σ(j)}|`. `sigma` is 0-indexed: generator
/// `e_{i+1}` goes to `e_{σ[i]+1}`.
pub fn hyperoctahedral_automorphism(
    sig: &Signature,
    sigma: &[usize],
    x: VeeElement,
) -> Result<VeeElement> {
    if !sig.all_equal() {
        return Err(Error::SignatureMismatch(format!(
            "Φ_σ needs all tᵢ equal, got ({sig})"
        )));
    }
    check_permutation(sigma, sig.n())?;
    if !sig.contains(x) {
        return Err(Error::SignatureMismatch(format!("{x} is not in Q({sig})")));
    }
    Ok(apply_sigma(sigma, x))
}

fn apply_sigma(sigma: &[usize], x: VeeElement) -> VeeElement {
    let members: Vec<usize> = (0..sigma.len()).filter(|&i| x.a >> i & 1 == 1).collect();
    let mut u = false;
    let mut image = 0u64;
    for (k, &i) in members.iter().enumerate() {
        image |= 1 << sigma[i];
        for &j in &members[k + 1..] {
            u ^= sigma[i] > sigma[j];
        }
    }
    VeeElement::new(x.z ^ u, image)
}

pub fn hyperoctahedral_map(sig: &Signature, sigma: &[usize]) -> Result<ElementMap> {
    if !sig.all_equal() {
        return Err(Error::SignatureMismatch(format!(
            "Φ_σ needs all tᵢ equal, got ({sig})"
        )));
    }
    check_permutation(sigma, sig.n())?;
    Ok(elements(sig)?
        .into_iter()
        .map(|x| apply_sigma(sigma, x).index() as u32)
        .collect())
}

/// `y ↦ x y x⁻¹`
pub fn inner_map(sig: &Signature, x: VeeElement) -> Result<ElementMap> {
    let xi = sig.inv(x);
    Ok(elements(sig)?
        .into_iter()
        .map(|y| sig.mul(sig.mul(x, y), xi).index() as u32)
        .collect())
}

/// Grading automorphism `α(g) = Z^{d(g)} g`.
pub fn alpha_map(sig: &Signature) -> Result<ElementMap> {
    Ok(elements(sig)?
        .into_iter()
        .map(|y| VeeElement::new(y.z ^ y.degree(), y.a).index() as u32)
        .collect())
}

/// `true` when `map` is a bijective homomorphism.
pub fn is_automorphism(sig: &Signature, map: &ElementMap) -> Result<bool> {
    let all = elements(sig)?;
    if map.len() != all.len() {
        return Ok(false);
    }
    let mut seen = vec![false; all.len()];
    for &m in map {
        if m as usize >= all.len() || std::mem::replace(&mut seen[m as usize], true) {
            return Ok(false);
        }
    }
    let img = |x: VeeElement| VeeElement::from_index(map[x.index()] as usize);
    Ok(all
        .iter()
        .all(|&x| all.iter().all(|&y| img(sig.mul(x, y)) == sig.mul(img(x), img(y)))))
}

/// Generators of `B_n`: `Φ` of the adjacent transpositions, conjugation
/// by each `eᵢ`, and `α`.
pub fn bn_generators(sig: &Signature) -> Result<Vec<ElementMap>> {
    let n = sig.n();
    let mut gens = Vec::new();
    for k in 0..n.saturating_sub(1) {
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.swap(k, k + 1);
        gens.push(hyperoctahedral_map(sig, &sigma)?);
    }
    for i in 1..=n {
        gens.push(inner_map(sig, VeeElement::generator(i))?);
    }
    gens.push(alpha_map(sig)?);
    Ok(gens)
}

/// Order of the group of maps generated by `generators`.
pub fn automorphism_group_order(generators: &[ElementMap]) -> usize {
    let Some(first) = generators.first() else {
        return 1;
    };
    let identity: ElementMap = (0..first.len() as u32).collect();
    let mut seen: HashSet<ElementMap> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(f) = queue.pop_front() {
        for g in generators {
            let h: ElementMap = f.iter().map(|&x| g[x as usize]).collect();
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.len()
}

/// An `e_A` whose conjugation equals `α`, if any.
pub fn alpha_is_inner(sig: &Signature) -> Result<Option<VeeElement>> {
    let alpha = alpha_map(sig)?;
    for a in 0..=sig.full() {
        let x = VeeElement::e(a);
        if inner_map(sig, x)? == alpha {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_permutation_is_identity() {
        let sig = Signature::pq(3, 0).unwrap();
        for x in elements(&sig).unwrap() {
            assert_eq!(hyperoctahedral_automorphism(&sig, &[0, 1, 2], x).unwrap(), x);
        }
    }

    #[test]
    fn swap_on_q2() {
        let sig = Signature::pq(2, 0).unwrap();
        assert_eq!(
            hyperoctahedral_automorphism(&sig, &[1, 0], VeeElement::e(0b11)).unwrap(),
            VeeElement::new(true, 0b11)
        );
    }

    #[test]
    fn transposition_13_on_e13() {
        let sig = Signature::pq(3, 0).unwrap();
        let sigma = [2, 1, 0];
        let x = VeeElement::e(0b101);
        // e_{σ(1)} e_{σ(3)} = e₃ e₁ = Z e₁₃
        let direct = sig.mul(VeeElement::generator(3), VeeElement::generator(1));
        assert_eq!(hyperoctahedral_automorphism(&sig, &sigma, x).unwrap(), direct);
        assert_eq!(direct, VeeElement::new(true, 0b101));
    }

    #[test]
    fn phi_is_an_automorphism() {
        for sig in [Signature::pq(3, 0).unwrap(), Signature::pq(0, 3).unwrap()] {
            for sigma in [[1, 2, 0], [2, 0, 1], [0, 2, 1]] {
                let map = hyperoctahedral_map(&sig, &sigma).unwrap();
                assert!(is_automorphism(&sig, &map).unwrap());
            }
        }
    }

    #[test]
    fn mixed_signature_rejected() {
        let sig: Signature = "1,Z".parse().unwrap();
        assert!(matches!(
            hyperoctahedral_automorphism(&sig, &[1, 0], VeeElement::ONE),
            Err(Error::SignatureMismatch(_))
        ));
    }

    #[test]
    fn bn_orders() {
        let mut fact = 1;
        for n in 1..=4 {
            fact *= n;
            for sig in [Signature::pq(n, 0).unwrap(), Signature::pq(0, n).unwrap()] {
                let gens = bn_generators(&sig).unwrap();
                assert_eq!(automorphism_group_order(&gens), fact << n, "n = {n}");
            }
        }
    }

    #[test]
    fn alpha_inner_iff_even() {
        for n in 0..=6 {
            let sig = Signature::pq(n, 0).unwrap();
            assert_eq!(alpha_is_inner(&sig).unwrap().is_some(), n % 2 == 0, "n = {n}");
        }
    }
}
