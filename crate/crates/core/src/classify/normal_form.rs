use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::clifford::{as_graded_group, Signature};
use crate::error::{Error, Result};
use crate::graded::GradedGroup;

/// Factor multiset of an ungraded product `D^d Q^q C^c V^v` (with `C₂` the
/// unit).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FactorCounts {
    pub d: usize,
    pub q: usize,
    pub c4: usize,
    pub v: usize,
}

impl FactorCounts {
    /// Results of one application of `Q² → D²` or `QC₄ → DC₄`.
    pub fn rewrites(&self) -> Vec<FactorCounts> {
        let mut out = Vec::new();
        if self.q >= 2 {
            out.push(FactorCounts { d: self.d + 2, q: self.q - 2, ..*self });
        }
        if self.q >= 1 && self.c4 >= 1 {
            out.push(FactorCounts { d: self.d + 1, q: self.q - 1, ..*self });
        }
        out
    }

    /// `Q²→D²` until at most one `Q` is left, then `QC₄→DC₄`.
    pub fn reduce(mut self) -> FactorCounts {
        while self.q >= 2 {
            self.q -= 2;
            self.d += 2;
        }
        if self.q == 1 && self.c4 >= 1 {
            self.q = 0;
            self.d += 1;
        }
        self
    }

    pub fn normal_form(self) -> Result<NormalForm> {
        let r = self.reduce();
        let tail = match (r.q, r.c4, r.v) {
            (0, 0, 0) if r.d == 0 => Tail::C2,
            (0, 0, 0) => Tail::None,
            (0, 0, 1) => Tail::V,
            (0, 1, 0) => Tail::C4,
            (1, 0, 0) => Tail::Q,
            (1, 0, 1) => Tail::QV,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "{r:?} has no normal form in the D/Q/C/V alphabet"
                )))
            }
        };
        Ok(NormalForm { d_count: r.d, tail })
    }

    pub fn mul(self, other: FactorCounts) -> FactorCounts {
        FactorCounts {
            d: self.d + other.d,
            q: self.q + other.q,
            c4: self.c4 + other.c4,
            v: self.v + other.v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tail {
    None,
    C2,
    V,
    C4,
    Q,
    QV,
}

/// `D^k` times a tail, naming an isomorphism class of `Q_{p,q}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    pub d_count: usize,
    pub tail: Tail,
}

impl NormalForm {
    pub fn counts(&self) -> FactorCounts {
        let (q, c4, v) = match self.tail {
            Tail::None | Tail::C2 => (0, 0, 0),
            Tail::V => (0, 0, 1),
            Tail::C4 => (0, 1, 0),
            Tail::Q => (1, 0, 0),
            Tail::QV => (1, 0, 1),
        };
        FactorCounts { d: self.d_count, q, c4, v }
    }

    /// Group order `2^{2d + …}`.
    pub fn order(&self) -> u128 {
        let extra = match self.tail {
            Tail::None | Tail::C2 => 1,
            Tail::V | Tail::C4 => 2,
            Tail::Q => 3,
            Tail::QV => 4,
        };
        1u128 << (2 * self.d_count + extra)
    }

    fn d_part(&self) -> String {
        match self.d_count {
            0 => String::new(),
            1 => "D".into(),
            k => format!("D^{k}"),
        }
    }

    /// Long label, e.g. `D^3 C_4`, `D Q C_2^2`, `C_2`.
    pub fn label(&self) -> String {
        let tail = match self.tail {
            Tail::None => "",
            Tail::C2 => "C_2",
            Tail::V => "C_2^2",
            Tail::C4 => "C_4",
            Tail::Q => "Q",
            Tail::QV => "Q C_2^2",
        };
        [self.d_part(), tail.to_string()]
            .into_iter()
            .filter(|s| !s.is_empty())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Short label of the periodic triangle, e.g. `D^2C`, `DQV`.
    pub fn short_label(&self) -> String {
        let tail = match self.tail {
            Tail::None => "",
            Tail::C2 => "C2",
            Tail::V => "V",
            Tail::C4 => "C",
            Tail::Q => "Q",
            Tail::QV => "QV",
        };
        format!("{}{}", self.d_part(), tail)
    }

    /// Clifford algebra paired with this group: `V` doubles, `C₄` gives
    /// `C_K`, `Q` gives `H_K`, each `D` doubles the matrix size.
    pub fn algebra_label(&self) -> String {
        let (base, square) = match self.tail {
            Tail::None | Tail::C2 => ("K", false),
            Tail::V => ("K", true),
            Tail::C4 => ("C_K", false),
            Tail::Q => ("H_K", false),
            Tail::QV => ("H_K", true),
        };
        let core = match self.d_count {
            0 => base.to_string(),
            k => format!("M_{}({base})", 1u64 << k),
        };
        if square {
            format!("{core}^2")
        } else {
            core
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for FactorCounts {
    type Err = Error;

    /// Juxtaposed factors: `D`, `D^k`, `Q`, `Q^k`, `C`/`C4`/`C_4`,
    /// `V`/`C2^2`/`C_2^2`, `C2`/`C_2`. Spaces are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut i = 0;
        let mut out = FactorCounts::default();
        let err = |msg: &str| Error::Parse(format!("{msg} in normal form {s:?}"));
        let exponent = |i: &mut usize| -> Result<usize> {
            if chars.get(*i) != Some(&'^') {
                return Ok(1);
            }
            *i += 1;
            let start = *i;
            while chars.get(*i).is_some_and(|c| c.is_ascii_digit()) {
                *i += 1;
            }
            chars[start..*i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| err("bad exponent"))
        };
        let eat = |i: &mut usize, lit: &str| -> bool {
            let lit: Vec<char> = lit.chars().collect();
            if chars[*i..].starts_with(&lit) {
                *i += lit.len();
                true
            } else {
                false
            }
        };
        if chars.is_empty() {
            return Err(err("empty input"));
        }
        while i < chars.len() {
            match chars[i] {
                'D' => {
                    i += 1;
                    out.d += exponent(&mut i)?;
                }
                'Q' => {
                    i += 1;
                    out.q += exponent(&mut i)?;
                }
                'V' => {
                    i += 1;
                    out.v += exponent(&mut i)?;
                }
                'C' => {
                    i += 1;
                    let _ = eat(&mut i, "_");
                    if eat(&mut i, "4") {
                        out.c4 += exponent(&mut i)?;
                    } else if eat(&mut i, "2^2") {
                        out.v += 1;
                    } else if eat(&mut i, "2") {
                        // C₂ is the unit of ×_Z
                    } else {
                        out.c4 += exponent(&mut i)?;
                    }
                }
                c => return Err(err(&format!("unexpected {c:?}"))),
            }
        }
        Ok(out)
    }
}

impl FromStr for NormalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<FactorCounts>()?.normal_form()
    }
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

impl<'de> Deserialize<'de> for NormalForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A pending `Q_{p,q}` times already extracted factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Reduction {
    done: FactorCounts,
    pending: Option<(usize, usize)>,
}

impl Reduction {
    fn moves(&self) -> Vec<Reduction> {
        let mut out: Vec<Reduction> = self
            .done
            .rewrites()
            .into_iter()
            .map(|done| Reduction { done, ..*self })
            .collect();
        let Some((p, q)) = self.pending else {
            return out;
        };
        let d = FactorCounts { d: 1, ..Default::default() };
        let qf = FactorCounts { q: 1, ..Default::default() };
        let step = |f: FactorCounts, pending| Reduction { done: self.done.mul(f), pending: Some(pending) };
        if p >= 2 {
            out.push(step(d, (q, p - 2)));
        }
        if p >= 1 && q >= 1 {
            out.push(step(d, (p - 1, q - 1)));
        }
        if q >= 2 {
            out.push(step(qf, (q - 2, p)));
        }
        let base = match (p, q) {
            (0, 0) => Some(FactorCounts::default()),
            (1, 0) => Some(FactorCounts { v: 1, ..Default::default() }),
            (0, 1) => Some(FactorCounts { c4: 1, ..Default::default() }),
            _ => None,
        };
        if let Some(b) = base {
            out.push(Reduction { done: self.done.mul(b), pending: None });
        }
        out
    }
}

/// Normal form of `Q_{p,q}`: the periodicity rules
/// `Q_{p+2,q} ≅ D Q_{q,p}`, `Q_{p+1,q+1} ≅ D Q_{p,q}`, `Q_{p,q+2} ≅ Q Q_{q,p}`
/// down to `Q_{0,0} = C₂`, `Q_{1,0} = V`, `Q_{0,1} = C₄`, then the rewrites.
pub fn normal_form(p: usize, q: usize) -> NormalForm {
    let mut done = FactorCounts::default();
    let (mut p, mut q) = (p, q);
    loop {
        match (p, q) {
            (0, 0) => break,
            (1, 0) => {
                done.v += 1;
                break;
            }
            (0, 1) => {
                done.c4 += 1;
                break;
            }
            _ if p >= 1 && q >= 1 => {
                done.d += 1;
                p -= 1;
                q -= 1;
            }
            _ if p >= 2 => {
                done.d += 1;
                (p, q) = (q, p - 2);
            }
            _ => {
                done.q += 1;
                (p, q) = (q - 2, p);
            }
        }
    }
    done.normal_form().expect("periodicity rules only reach normal forms")
}

/// Every terminal factor multiset reachable from `Q_{p,q}` by any
/// interleaving of periodicity rules and rewrites.
pub fn all_reduction_results(p: usize, q: usize) -> BTreeSet<FactorCounts> {
    let start = Reduction { done: FactorCounts::default(), pending: Some((p, q)) };
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    let mut terminal = BTreeSet::new();
    while let Some(r) = stack.pop() {
        let moves = r.moves();
        if moves.is_empty() {
            terminal.insert(r.done);
        }
        for m in moves {
            if seen.insert(m) {
                stack.push(m);
            }
        }
    }
    terminal
}

/// The group `D^d Q^q C₄^c V^v` as iterated ungraded products.
pub fn realize(counts: FactorCounts) -> Result<GradedGroup> {
    let base = |p: usize, q: usize| -> Result<Arc<GradedGroup>> {
        Ok(Arc::new(as_graded_group(&Signature::pq(p, q)?)?))
    };
    let (d, qq, c4, v) = (base(2, 0)?, base(0, 2)?, base(0, 1)?, base(1, 0)?);
    let factors: Vec<Arc<GradedGroup>> = std::iter::repeat_n(d, counts.d)
        .chain(std::iter::repeat_n(qq, counts.q))
        .chain(std::iter::repeat_n(c4, counts.c4))
        .chain(std::iter::repeat_n(v, counts.v))
        .collect();
    let Some((first, rest)) = factors.split_first() else {
        return Ok((*base(0, 0)?).clone().with_label("C_2"));
    };
    let mut g = first.clone();
    for f in rest {
        g = Arc::new(GradedGroup::ungraded_product(&g, f)?);
    }
    Ok((*g).clone())
}
