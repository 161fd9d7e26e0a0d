use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::clifford::element::VeeElement;
use crate::clifford::signature::Signature;
use crate::error::{Error, Result};

/// All `2^{n+1}` elements, ordered by dense index `2A + z`.
pub fn elements(sig: &Signature) -> Result<Vec<VeeElement>> {
    sig.check_enumerable()?;
    Ok((0..1usize << (sig.n() + 1)).map(VeeElement::from_index).collect())
}

/// Isomorphism type of a small abelian group occurring as a center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CenterIso {
    C2,
    C4,
    /// `C₂ × C₂`
    V,
}

impl fmt::Display for CenterIso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CenterIso::C2 => "C_2",
            CenterIso::C4 => "C_4",
            CenterIso::V => "C_2^2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Center {
    pub elements: Vec<VeeElement>,
    pub iso: CenterIso,
}

fn generators(sig: &Signature) -> Vec<VeeElement> {
    (1..=sig.n()).map(VeeElement::generator).collect()
}

fn commutes_with_generators(sig: &Signature, x: VeeElement) -> bool {
    generators(sig).into_iter().all(|g| sig.mul(x, g) == sig.mul(g, x))
}

/// Center of `Q(𝐭)`, computed by testing commutation with `e₁, …, eₙ`
/// over all elements. The tag for four elements comes from squaring the
/// non-trivial ones.
pub fn center(sig: &Signature) -> Result<Center> {
    let elements: Vec<VeeElement> = elements(sig)?
        .into_iter()
        .filter(|&x| commutes_with_generators(sig, x))
        .collect();
    let iso = match elements.len() {
        2 => CenterIso::C2,
        4 if elements.iter().any(|&x| sig.mul(x, x) != VeeElement::ONE) => CenterIso::C4,
        4 => CenterIso::V,
        k => unreachable!("center of order {k}"),
    };
    Ok(Center { elements, iso })
}

/// Conjugacy classes, each sorted, listed by smallest member.
pub fn conjugacy_classes(sig: &Signature) -> Result<Vec<Vec<VeeElement>>> {
    let all = elements(sig)?;
    let gens = generators(sig);
    let mut seen = vec![false; all.len()];
    let mut classes = Vec::new();
    for &x in &all {
        if seen[x.index()] {
            continue;
        }
        seen[x.index()] = true;
        let mut class = vec![x];
        let mut frontier = vec![x];
        while let Some(y) = frontier.pop() {
            for &g in &gens {
                let c = sig.mul(sig.mul(g, y), sig.inv(g));
                if !seen[c.index()] {
                    seen[c.index()] = true;
                    class.push(c);
                    frontier.push(c);
                }
            }
        }
        class.sort();
        classes.push(class);
    }
    Ok(classes)
}

/// Largest `n` for the exhaustive commutator enumeration.
pub const COMMUTATOR_CAP: usize = 10;

/// `[G, G]`, enumerated over all pairs.
pub fn commutator_subgroup(sig: &Signature) -> Result<Vec<VeeElement>> {
    if sig.n() > COMMUTATOR_CAP {
        return Err(Error::SizeCap {
            what: "commutator enumeration",
            size: sig.n(),
            cap: COMMUTATOR_CAP,
        });
    }
    let all = elements(sig)?;
    let mut out = BTreeSet::new();
    for &x in &all {
        for &y in &all {
            let c = sig.mul(sig.mul(x, y), sig.mul(sig.inv(x), sig.inv(y)));
            out.insert(c);
        }
    }
    Ok(out.into_iter().collect())
}

/// `[G, G] ⊆ {1, Z}`.
pub fn commutator_check(sig: &Signature) -> Result<bool> {
    Ok(commutator_subgroup(sig)?
        .iter()
        .all(|x| x.a == 0))
}

/// Number of distinct inner automorphisms, counted as distinct conjugation
/// maps.
pub fn inner_automorphism_count(sig: &Signature) -> Result<usize> {
    let all = elements(sig)?;
    let gens = generators(sig);
    let maps: HashSet<Vec<VeeElement>> = all
        .iter()
        .map(|&x| gens.iter().map(|&g| sig.mul(sig.mul(x, g), sig.inv(x))).collect())
        .collect();
    Ok(maps.len())
}
