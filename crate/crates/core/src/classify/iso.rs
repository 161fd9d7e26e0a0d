use std::collections::VecDeque;

use crate::classify::fingerprint::Fingerprint;
use crate::error::{Error, Result};
use crate::graded::GradedGroup;

/// Largest order accepted by the isomorphism oracle.
pub const ISO_CAP: usize = 512;

/// Per-element invariant preserved by isomorphisms.
fn element_invariants(g: &GradedGroup) -> Vec<(usize, usize, bool)> {
    let n = g.order();
    (0..n)
        .map(|a| {
            let centralizer = (0..n).filter(|&b| g.mul(a, b) == g.mul(b, a)).count();
            let square_central = g.is_central(g.mul(a, a));
            (g.element_order(a), centralizer, square_central)
        })
        .collect()
}

struct Search<'a> {
    g1: &'a GradedGroup,
    g2: &'a GradedGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    limit: usize,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Extends `images` (for `gens[..images.len()]`) to the generated
    /// subgroup, or returns `None` on an inconsistency.
    fn extend(&self, images: &[usize]) -> Option<Vec<usize>> {
        let n = self.g1.order();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.g1.identity()] = self.g2.identity();
        used[self.g2.identity()] = true;
        let mut queue = VecDeque::from([self.g1.identity()]);
        while let Some(x) = queue.pop_front() {
            for (&g, &c) in self.gens.iter().zip(images) {
                let y = self.g1.mul(x, g);
                let img = self.g2.mul(map[x], c);
                if map[y] == usize::MAX {
                    if used[img] {
                        return None;
                    }
                    map[y] = img;
                    used[img] = true;
                    queue.push_back(y);
                } else if map[y] != img {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn run(&mut self, images: &mut Vec<usize>) {
        if self.found.len() >= self.limit {
            return;
        }
        let depth = images.len();
        if depth == self.gens.len() {
            if let Some(map) = self.extend(images) {
                if !map.contains(&usize::MAX) {
                    self.found.push(map);
                }
            }
            return;
        }
        for k in 0..self.candidates[depth].len() {
            let c = self.candidates[depth][k];
            images.push(c);
            if self.extend(images).is_some() {
                self.run(images);
            }
            images.pop();
            if self.found.len() >= self.limit {
                return;
            }
        }
    }
}

fn check_sizes(g1: &GradedGroup, g2: &GradedGroup) -> Result<()> {
    for g in [g1, g2] {
        if g.order() > ISO_CAP {
            return Err(Error::SizeCap { what: "isomorphism oracle", size: g.order(), cap: ISO_CAP });
        }
    }
    Ok(())
}

/// Up to `limit` isomorphisms `G₁ → G₂`, each as the image of every
/// element. Complete: every isomorphism is determined by the images of a
/// generating set, and all admissible images are tried.
pub fn isomorphisms(g1: &GradedGroup, g2: &GradedGroup, limit: usize) -> Result<Vec<Vec<usize>>> {
    check_sizes(g1, g2)?;
    if g1.order() != g2.order() || Fingerprint::of(g1) != Fingerprint::of(g2) {
        return Ok(Vec::new());
    }
    let inv1 = element_invariants(g1);
    let inv2 = element_invariants(g2);
    let gens = g1.generating_set();
    let candidates = gens
        .iter()
        .map(|&g| (0..g2.order()).filter(|&c| inv2[c] == inv1[g]).collect())
        .collect();
    let mut search = Search { g1, g2, gens, candidates, limit, found: Vec::new() };
    search.run(&mut Vec::new());
    Ok(search.found)
}

/// An isomorphism `G₁ → G₂` if one exists.
pub fn iso_oracle(g1: &GradedGroup, g2: &GradedGroup) -> Result<Option<Vec<usize>>> {
    Ok(isomorphisms(g1, g2, 1)?.pop())
}

/// `|Aut(G)|` by exhaustive enumeration.
pub fn automorphism_count(g: &GradedGroup) -> Result<usize> {
    Ok(isomorphisms(g, g, usize::MAX)?.len())
}

/// `true` when `map` is a bijective homomorphism `G₁ → G₂`.
pub fn is_isomorphism(g1: &GradedGroup, g2: &GradedGroup, map: &[usize]) -> bool {
    if map.len() != g1.order() || g1.order() != g2.order() {
        return false;
    }
    let mut seen = vec![false; g2.order()];
    if map.iter().any(|&y| y >= g2.order() || std::mem::replace(&mut seen[y], true)) {
        return false;
    }
    (0..g1.order()).all(|a| (0..g1.order()).all(|b| map[g1.mul(a, b)] == g2.mul(map[a], map[b])))
}
