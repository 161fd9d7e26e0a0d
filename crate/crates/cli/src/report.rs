use std::sync::Arc;

use serde::{Deserialize, Serialize};

use graded_clifford::algebra::{
    central_function_basis, character_table, clifford_center, clifford_structure_constants, idempotent_constant,
};
use graded_clifford::classify::{automorphism_count, normal_form, PeriodicTable};
use graded_clifford::clifford::{
    alpha_is_inner, as_graded_group, automorphism_group_order, bn_generators, center, commutator_subgroup,
    conjugacy_classes, elements, even_part, inner_automorphism_count, subset_label, Signature, VeeElement,
    COMMUTATOR_CAP,
};
use graded_clifford::{Error, Result};

/// Largest `n` for `info`.
pub const INFO_CAP: usize = COMMUTATOR_CAP;
/// Largest `n` for `table`.
pub const TABLE_CAP: usize = 6;
/// Largest `n` for `central`.
pub const CENTRAL_CAP: usize = 6;
/// Largest `n` for which `info` enumerates the full automorphism group.
const AUT_CAP: usize = 3;
/// Largest `n` for which `info` closes the `B_n` generators.
const BN_CAP: usize = 6;
/// Largest `n` for which `central` checks the idempotent scale.
const IDEMPOTENT_CAP: usize = 4;

fn cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::SizeCap { what, size, cap });
    }
    Ok(())
}

fn names(xs: &[VeeElement]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn signature_string(sig: &Signature) -> String {
    sig.flags().iter().map(|&t| if t { "Z" } else { "1" }).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CenterReport {
    pub elements: Vec<String>,
    pub iso: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvenPartReport {
    pub signature: String,
    pub normal_form: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AutomorphismReport {
    pub bn_order: usize,
    pub alpha_inner: bool,
    pub alpha_witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InfoReport {
    pub signature: String,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub order: u64,
    pub abelian: bool,
    pub center: CenterReport,
    pub class_count: usize,
    pub commutator_subgroup: Vec<String>,
    pub even_part: Option<EvenPartReport>,
    pub normal_form: String,
    pub algebra: String,
    pub inner_automorphisms: usize,
    pub automorphism_count: Option<usize>,
    pub hyperoctahedral: Option<AutomorphismReport>,
}

pub fn info(sig: &Signature) -> Result<InfoReport> {
    cap("info", sig.n(), INFO_CAP)?;
    let n = sig.n();
    let (p, q) = sig.counts();
    let c = center(sig)?;
    let classes = conjugacy_classes(sig)?;
    let commutators = commutator_subgroup(sig)?;
    let nf = normal_form(p, q);
    let even = if n >= 2 {
        let e = even_part(sig)?;
        let (ep, eq) = e.counts();
        Some(EvenPartReport { signature: signature_string(&e), normal_form: normal_form(ep, eq).label() })
    } else {
        None
    };
    let automorphism_count = if n <= AUT_CAP {
        Some(automorphism_count(&as_graded_group(sig)?)?)
    } else {
        None
    };
    let hyperoctahedral = if sig.all_equal() && n <= BN_CAP {
        let witness = alpha_is_inner(sig)?;
        Some(AutomorphismReport {
            bn_order: automorphism_group_order(&bn_generators(sig)?),
            alpha_inner: witness.is_some(),
            alpha_witness: witness.map(|x| x.to_string()),
        })
    } else {
        None
    };
    Ok(InfoReport {
        signature: signature_string(sig),
        n,
        p,
        q,
        order: 1u64 << (n + 1),
        abelian: commutators.len() == 1,
        center: CenterReport { elements: names(&c.elements), iso: c.iso.to_string() },
        class_count: classes.len(),
        commutator_subgroup: names(&commutators),
        even_part: even,
        normal_form: nf.label(),
        algebra: nf.algebra_label(),
        inner_automorphisms: inner_automorphism_count(sig)?,
        automorphism_count,
        hyperoctahedral,
    })
}

impl InfoReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<22}{v}\n"));
        line("signature", format!("({})", self.signature));
        line("n", self.n.to_string());
        line("(p, q)", format!("({}, {})", self.p, self.q));
        line("order", self.order.to_string());
        line("abelian", self.abelian.to_string());
        line("center", format!("{{{}}} ≅ {}", self.center.elements.join(", "), self.center.iso));
        line("conjugacy classes", self.class_count.to_string());
        line("commutator subgroup", format!("{{{}}}", self.commutator_subgroup.join(", ")));
        match &self.even_part {
            Some(e) => line("even part", format!("Q({}) ≅ {}", e.signature, e.normal_form)),
            None => line("even part", "-".into()),
        }
        line("normal form", self.normal_form.clone());
        line("paired algebra", self.algebra.clone());
        line("inner automorphisms", self.inner_automorphisms.to_string());
        if let Some(k) = self.automorphism_count {
            line("|Aut|", k.to_string());
        }
        if let Some(h) = &self.hyperoctahedral {
            line("|B_n|", h.bn_order.to_string());
            let inner = match &h.alpha_witness {
                Some(w) => format!("yes, conjugation by {w}"),
                None => "no".into(),
            };
            line("alpha inner", inner);
        }
        out
    }

    pub fn rows(&self) -> Vec<(String, String)> {
        let json = serde_json::to_value(self).expect("report serializes");
        let serde_json::Value::Object(map) = json else { unreachable!() };
        INFO_KEYS
            .iter()
            .map(|&k| {
                let v = match &map[k] {
                    serde_json::Value::String(s) => s.clone(),
                    v => v.to_string(),
                };
                (k.to_string(), v)
            })
            .collect()
    }
}

const INFO_KEYS: [&str; 15] = [
    "signature",
    "n",
    "p",
    "q",
    "order",
    "abelian",
    "center",
    "class_count",
    "commutator_subgroup",
    "even_part",
    "normal_form",
    "algebra",
    "inner_automorphisms",
    "automorphism_count",
    "hyperoctahedral",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupTable {
    pub signature: String,
    pub elements: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Elements ordered as `1, Z, e₁, Ze₁, e₂, Ze₂, e₁₂, Ze₁₂, …`.
pub fn group_table(sig: &Signature) -> Result<GroupTable> {
    cap("group table", sig.n(), TABLE_CAP)?;
    let all = elements(sig)?;
    let rows = all.iter().map(|&x| all.iter().map(|&y| sig.mul(x, y).to_string()).collect()).collect();
    Ok(GroupTable { signature: signature_string(sig), elements: names(&all), rows })
}

fn grid(header: &[String], rows: &[(String, Vec<String>)]) -> String {
    let mut width = header.iter().map(|h| h.chars().count()).max().unwrap_or(1);
    for (label, row) in rows {
        width = width.max(label.chars().count());
        width = row.iter().map(|c| c.chars().count()).fold(width, usize::max);
    }
    let pad = |s: &str| format!("{s:>width$}");
    let mut out = format!("{} |", pad(""));
    for h in header {
        out.push(' ');
        out.push_str(&pad(h));
    }
    out.push('\n');
    out.push_str(&"-".repeat((width + 1) * (header.len() + 1) + 1));
    out.push('\n');
    for (label, row) in rows {
        out.push_str(&format!("{} |", pad(label)));
        for c in row {
            out.push(' ');
            out.push_str(&pad(c));
        }
        out.push('\n');
    }
    out
}

impl GroupTable {
    pub fn text(&self) -> String {
        let rows: Vec<(String, Vec<String>)> =
            self.elements.iter().cloned().zip(self.rows.iter().cloned()).collect();
        grid(&self.elements, &rows)
    }
}

/// One CSV line of the periodic triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicRow {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub p_minus_q: i64,
    pub normal_form: String,
    pub order: u128,
    pub algebra: String,
}

pub fn periodic_rows(t: &PeriodicTable) -> Vec<PeriodicRow> {
    t.entries()
        .map(|e| PeriodicRow {
            n: e.p + e.q,
            p: e.p,
            q: e.q,
            p_minus_q: e.p as i64 - e.q as i64,
            normal_form: e.normal_form.label(),
            order: e.order,
            algebra: e.algebra.clone(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub n: usize,
    pub subsets: Vec<String>,
    pub matrix: Vec<Vec<i8>>,
}

pub fn characters(n: usize) -> Result<CharacterTable> {
    let matrix = character_table(n)?;
    let subsets = (0..1u64 << n).map(subset_label).collect();
    Ok(CharacterTable { n, subsets, matrix })
}

impl CharacterTable {
    pub fn text(&self) -> String {
        let rows: Vec<(String, Vec<String>)> = self
            .subsets
            .iter()
            .cloned()
            .zip(self.matrix.iter().map(|r| r.iter().map(|c| format!("{c:+}")).collect()))
            .collect();
        grid(&self.subsets, &rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub element: String,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralFunctionReport {
    pub name: String,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralReport {
    pub signature: String,
    pub class_count: usize,
    pub functions: Vec<CentralFunctionReport>,
    pub idempotent_constant: Option<String>,
    pub clifford_center: Vec<String>,
}

/// CSV line of the central-function basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralRow {
    pub function: String,
    pub element: String,
    pub coefficient: String,
}

pub fn central(sig: &Signature) -> Result<CentralReport> {
    cap("central functions", sig.n(), CENTRAL_CAP)?;
    let g = Arc::new(as_graded_group(sig)?);
    let functions = central_function_basis(sig)?
        .into_iter()
        .map(|f| CentralFunctionReport {
            name: f.name,
            terms: f
                .element
                .terms()
                .map(|(i, c)| Term { element: g.name(i).to_string(), coefficient: c.to_string() })
                .collect(),
        })
        .collect();
    let idempotent_constant = if sig.n() <= IDEMPOTENT_CAP {
        idempotent_constant(sig)?.map(|c| c.to_string())
    } else {
        None
    };
    Ok(CentralReport {
        signature: signature_string(sig),
        class_count: conjugacy_classes(sig)?.len(),
        functions,
        idempotent_constant,
        clifford_center: clifford_center(sig)?.iter().map(|x| x.to_string()).collect(),
    })
}

/// `δ[1] - δ[Z] + 2 δ[e_1]`
fn linear_combination(terms: &[Term]) -> String {
    let mut out = String::new();
    for (k, t) in terms.iter().enumerate() {
        let (neg, mag) = match t.coefficient.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, t.coefficient.as_str()),
        };
        out.push_str(match (k, neg) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        });
        if mag != "1" {
            out.push_str(mag);
            out.push(' ');
        }
        out.push_str(&format!("δ[{}]", t.element));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl CentralReport {
    pub fn rows(&self) -> Vec<CentralRow> {
        self.functions
            .iter()
            .flat_map(|f| {
                f.terms.iter().map(|t| CentralRow {
                    function: f.name.clone(),
                    element: t.element.clone(),
                    coefficient: t.coefficient.clone(),
                })
            })
            .collect()
    }

    pub fn text(&self) -> String {
        let mut out = format!("signature ({}), {} classes\n", self.signature, self.class_count);
        for f in &self.functions {
            out.push_str(&format!("{} = {}\n", f.name, linear_combination(&f.terms)));
        }
        if let Some(c) = &self.idempotent_constant {
            out.push_str(&format!("E+[A] * E+[B] = {c} [A = B] E+[A]\n"));
        }
        out.push_str(&format!("center of Cl: span{{{}}}\n", self.clifford_center.join(", ")));
        out
    }
}

/// One structure constant `e_A e_B = sign e_{AΔB}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantRow {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    pub sign: i8,
    #[serde(rename = "AΔB")]
    pub product: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsReport {
    pub signature: String,
    pub constants: Vec<ConstantRow>,
}

pub fn constants(sig: &Signature) -> Result<ConstantsReport> {
    let constants = clifford_structure_constants(sig)?
        .into_iter()
        .map(|c| ConstantRow {
            a: subset_label(c.a),
            b: subset_label(c.b),
            sign: c.sign,
            product: subset_label(c.product),
        })
        .collect();
    Ok(ConstantsReport { signature: signature_string(sig), constants })
}

impl ConstantsReport {
    pub fn text(&self) -> String {
        let dim = (self.constants.len() as f64).sqrt().round() as usize;
        let header: Vec<String> = self.constants.iter().take(dim).map(|c| c.b.clone()).collect();
        let rows: Vec<(String, Vec<String>)> = self
            .constants
            .chunks(dim.max(1))
            .map(|row| {
                let cells = row
                    .iter()
                    .map(|c| if c.sign < 0 { format!("-{}", c.product) } else { c.product.clone() })
                    .collect();
                (row[0].a.clone(), cells)
            })
            .collect();
        format!("Cl({})\n{}", self.signature, grid(&header, &rows))
    }
}
