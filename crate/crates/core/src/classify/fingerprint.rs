use std::collections::BTreeMap;

use serde::Serialize;

use crate::graded::GradedGroup;

/// Isomorphism invariants of a finite group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, count)`, ascending.
    pub order_profile: Vec<(usize, usize)>,
    pub center_order: usize,
    pub commutator_order: usize,
    /// Elementary divisors of `G / [G, G]`, ascending prime powers.
    pub abelian_invariants: Vec<usize>,
}

impl Fingerprint {
    pub fn of(g: &GradedGroup) -> Self {
        let n = g.order();
        let mut profile = BTreeMap::new();
        for a in 0..n {
            *profile.entry(g.element_order(a)).or_insert(0) += 1;
        }
        let center_order = (0..n).filter(|&a| g.is_central(a)).count();
        let commutators = commutator_subgroup(g);
        Self {
            order: n,
            order_profile: profile.into_iter().collect(),
            center_order,
            commutator_order: commutators.len(),
            abelian_invariants: abelian_invariants(g, &commutators),
        }
    }

    /// Number of elements of the given order.
    pub fn count_of_order(&self, k: usize) -> usize {
        self.order_profile
            .iter()
            .find(|&&(o, _)| o == k)
            .map_or(0, |&(_, c)| c)
    }
}

/// `[G, G]` as a sorted element list.
pub fn commutator_subgroup(g: &GradedGroup) -> Vec<usize> {
    let n = g.order();
    let mut gens = vec![false; n];
    for a in 0..n {
        for b in 0..n {
            let c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
            gens[c] = true;
        }
    }
    let gens: Vec<usize> = (0..n).filter(|&c| gens[c]).collect();
    g.closure(&gens)
}

fn prime_factors(mut m: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn abelian_invariants(g: &GradedGroup, k: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut in_k = vec![false; n];
    for &x in k {
        in_k[x] = true;
    }
    // One representative per coset xK.
    let mut rep = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if rep[x] != usize::MAX {
            continue;
        }
        reps.push(x);
        for &c in k {
            rep[g.mul(x, c)] = x;
        }
    }
    let q = reps.len();
    let mut out = Vec::new();
    for p in prime_factors(q) {
        // counts[j] = #{cosets whose order divides p^j}
        let mut counts = vec![1usize];
        loop {
            let e = p.pow(counts.len() as u32);
            let c = reps.iter().filter(|&&x| in_k[g.pow(x, e)]).count();
            counts.push(c);
            if c == *counts.iter().rev().nth(1).unwrap() {
                counts.pop();
                break;
            }
        }
        let log_p = |mut m: usize| {
            let mut r = 0;
            while m > 1 {
                m /= p;
                r += 1;
            }
            r
        };
        // r[j] = number of cyclic factors of order ≥ p^{j+1}
        let r: Vec<usize> = counts.windows(2).map(|w| log_p(w[1] / w[0])).collect();
        for j in 0..r.len() {
            let exact = r[j] - r.get(j + 1).copied().unwrap_or(0);
            out.extend(std::iter::repeat_n(p.pow(j as u32 + 1), exact));
        }
    }
    out.sort_unstable();
    out
}
